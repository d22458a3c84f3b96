#pragma once

#include "vbs/chain.hpp"
#include "vbs/fock.hpp"

#include <map>
#include <utility>
#include <vector>

namespace vbs {

// Exact sparse operator on the full occupation space of a short run of sites
// (totals pinned at 2S).  Entries are stored column-wise: entry (row <- col)
// scales the amplitude at col and deposits it at row, with no metric factor:
//   (A v)(P) = sum_{P'} A(P, P') v(P').
class SiteOperator {
public:
    SiteOperator() = default;
    explicit SiteOperator(std::vector<HalfInt> spins);
    static SiteOperator identity(std::vector<HalfInt> spins);

    const std::vector<HalfInt>& spins() const { return spins_; }
    const FockSpace& space() const { return space_; }

    void add_entry(const Config& row, const Config& col, const Rational& val);
    Rational entry(const Config& row, const Config& col) const;

    SiteOperator operator+(const SiteOperator& o) const;
    SiteOperator operator-(const SiteOperator& o) const;
    SiteOperator operator*(const SiteOperator& o) const;  // composition, this after o
    SiteOperator scaled(const Rational& f) const;

    Rational trace() const;

    // Apply with this operator's sites aligned to v's sites
    // [first_site, first_site + n); v must be fully occupied there.
    FockVector apply(const FockVector& v, int first_site = 0) const;

private:
    std::vector<HalfInt> spins_;
    FockSpace space_;
    // col -> list of (row, value)
    std::map<Config, std::vector<std::pair<Config, Rational>>> cols_;
};

// Scalar product S_1 . S_2 of the two site spins, from the flavor-ladder
// algebra.
SiteOperator pair_exchange(HalfInt s1, HalfInt s2);

// Projector onto combined spin J of two adjacent sites, built as the Lagrange
// polynomial in S_1 . S_2 that is 1 on the J multiplet and 0 on the others.
SiteOperator bond_projector(HalfInt s1, HalfInt s2, HalfInt J);

// Positive semidefinite bond operators: for each link, the projectors onto
// every combined spin the valence-bond pattern cannot reach, i.e.
// J > s_j + s_{j+1} - M_link, each with a tunable positive coefficient
// (default 1).  The ground space is insensitive to the coefficients.
struct BondTerm {
    int site;  // left site of the link, in the operator's own indexing
    HalfInt level;
    Rational coeff;
    SiteOperator projector;
};

// Coefficient override keyed by (link index, twice the projector level).
using CoeffMap = std::map<std::pair<int, long>, Rational>;

class Hamiltonian {
public:
    Hamiltonian(FockSpace space, std::vector<BondTerm> terms)
        : space_(std::move(space)), terms_(std::move(terms)) {}

    const FockSpace& space() const { return space_; }
    const std::vector<BondTerm>& terms() const { return terms_; }

    FockVector apply(const FockVector& v) const;

    // Explicit sparse matrix over the whole space; meant for small spaces.
    SiteOperator materialize() const;

private:
    FockSpace space_;
    std::vector<BondTerm> terms_;
};

// Bond operators for every link of the chain.  Link indices in the CoeffMap
// are global link indices.
Hamiltonian build_full_hamiltonian(const ChainSpec& chain, const CoeffMap& coeffs = {});

// Bond operators for the block's interior links only, acting on the block's
// fully occupied space.  Link indices in the CoeffMap stay global.
Hamiltonian build_block_hamiltonian(const ChainSpec& chain, const BlockSpec& blk,
                                    const CoeffMap& coeffs = {});

// dim ker H = dim - rank, by exact elimination inside each Sz sector.
long kernel_dimension(const Hamiltonian& h);

}  // namespace vbs
