#pragma once

#include "vbs/chain.hpp"
#include "vbs/linalg.hpp"
#include "vbs/numerics.hpp"

#include <complex>
#include <iosfwd>
#include <map>
#include <vector>

namespace vbs {

// Occupation space of a run of sites.  Site i carries a fixed total of
// totals[i] bosons split between two flavors; a Config lists the first-flavor
// count p_i per site, so the second flavor holds totals[i] - p_i.  A site of
// spin S is fully occupied at totals[i] = 2S; intermediate states (a block cut
// out of a longer chain before its boundary is dressed) sit at lower totals.
struct FockSpace {
    std::vector<HalfInt> spins;
    std::vector<int> totals;

    bool operator==(const FockSpace&) const = default;
    int num_sites() const { return static_cast<int>(spins.size()); }
    bool full() const;
    Integer dimension() const;                // prod (totals[i] + 1)
    long sz_twice(const Config& c) const;     // sum_i (2 p_i - totals[i])
    std::vector<Config> all_configs() const;  // lexicographic
};

// Monomial self-overlap prod_i p_i! (totals[i] - p_i)!.  Distinct
// configurations are orthogonal, so this diagonal weight is the whole metric.
Integer config_weight(const FockSpace& sp, const Config& c);

// Exact vector with rational amplitudes over a FockSpace.
class FockVector {
public:
    FockVector() = default;
    explicit FockVector(FockSpace space) : space_(std::move(space)) {}

    const FockSpace& space() const { return space_; }
    const SparseVec& terms() const { return terms_; }

    void add_term(const Config& c, const Rational& amp);
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const FockVector&) const = default;

    FockVector scaled(const Rational& f) const;
    FockVector operator+(const FockVector& o) const;
    FockVector operator-(const FockVector& o) const;

private:
    FockSpace space_;
    SparseVec terms_;  // zero amplitudes are never stored
};

// Metric inner product sum_P a(P) b(P) w(P); spaces must agree.
Rational inner(const FockVector& a, const FockVector& b);
Rational norm_squared(const FockVector& v);

// One line per configuration: the p-vector, a tab, the amplitude.
void dump(const FockVector& v, std::ostream& os);

// The valence-bond ground state of the whole chain: every link (j,j+1)
// carries its multiplicity of antisymmetrized boson pairs.
FockVector build_vbs(const ChainSpec& chain);

// Same construction restricted to a block's interior links only; boundary
// links are left open, so the end sites are partially occupied.
FockVector build_block_vbs(const ChainSpec& chain, const BlockSpec& blk);

// <VBS|VBS> = prod_sites (2S_j + 1)! / prod_links (M + 1)
Rational vbs_norm_closed_form(const ChainSpec& chain);

// The (m_left+1)(m_right+1) states obtained by dressing the block's open ends
// with all splittings of the cut links; entry p*(m_right+1)+q adds p second-
// flavor and m_left-p first-flavor bosons at the left end, q first-flavor and
// m_right-q second-flavor at the right.  They span the image of the whole
// chain's ground state under any partial trace outside the block.
std::vector<FockVector> boundary_states(const ChainSpec& chain, const BlockSpec& blk);

// An exact vector scale * vec; the scale carries the one square root shared by
// every amplitude.
struct ScaledFockVector {
    SqrtRational scale;
    FockVector vec;

    Rational norm_squared() const { return scale.squared() * vbs::norm_squared(vec); }
};

// Total-spin eigenstate of the dressed block: the two open ends are coupled to
// combined spin J, projection M.  Exact; every amplitude shares one radical,
// which lands in the scale.
ScaledFockVector degenerate_vbs(const ChainSpec& chain, const BlockSpec& blk, HalfInt J, HalfInt M);

enum class SpinOp { Raise, Lower, Z };

// Total S+/S-/Sz over all sites of v's space.
FockVector apply_total_spin(SpinOp op, const FockVector& v);

// ---- complex-amplitude variant, for direction-resolved states ----

class CFockVector {
public:
    CFockVector() = default;
    explicit CFockVector(FockSpace space) : space_(std::move(space)) {}

    const FockSpace& space() const { return space_; }
    const std::map<Config, std::complex<double>>& terms() const { return terms_; }
    void add_term(const Config& c, std::complex<double> amp);

private:
    FockSpace space_;
    std::map<Config, std::complex<double>> terms_;
};

CFockVector to_complex(const FockVector& v);
CFockVector to_complex(const ScaledFockVector& v);

std::complex<double> inner(const CFockVector& a, const CFockVector& b);
double max_abs_diff(const CFockVector& a, const CFockVector& b);

// Ground state of the block whose boundary spins point along the direction
// (theta, phi) with total boundary spin J: the left end is dressed with
// j_minus + J aligned bosons, the right end with J - j_minus, and the
// remaining J_plus - J cut-link pairs close into valence bonds across the
// block.  Returned unnormalized, as the plain product of those three factors.
CFockVector coherent_ground_state(const ChainSpec& chain, const BlockSpec& blk, HalfInt J,
                                  double theta, double phi);

// Weight of the (J,M) spin eigenstate inside the direction-(theta,phi)
// superposition: u^{J+M} v^{J-M} / sqrt((J+M)!(J-M)!) with spinor components
// u = cos(theta/2) e^{i phi/2}, v = sin(theta/2) e^{-i phi/2}.
std::complex<double> coherent_weight(HalfInt J, HalfInt M, double theta, double phi);

}  // namespace vbs
