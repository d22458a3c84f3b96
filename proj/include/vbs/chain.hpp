#pragma once

#include "vbs/numerics.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace vbs {

// Raised when the alternating-sum condition fails or a spin/bond value is
// inadmissible.
struct ChainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a requested block does not fit in the chain.
struct BlockRangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// An open chain of sites 0..N+1: two end sites plus N bulk sites.  Each link
// (j, j+1) carries a positive integer bond multiplicity M_j, and every site
// spin satisfies 2 S_j = M_{j-1} + M_j (ends see only their single link).
struct ChainSpec {
    std::string name;
    std::vector<HalfInt> spins;  // size N+2
    std::vector<long> bonds;     // size N+1; bonds[j] sits on link (j, j+1)

    int num_sites() const { return static_cast<int>(spins.size()); }
    int bulk_sites() const { return num_sites() - 2; }
};

// Bond multiplicities determined by the site spins; throws ChainError when the
// alternating spin sum is nonzero or some multiplicity comes out nonpositive.
std::vector<long> solve_bonds(const std::vector<HalfInt>& spins);

// Site spins implied by a list of positive bond multiplicities.
std::vector<HalfInt> spins_from_bonds(const std::vector<long>& bonds);

ChainSpec chain_from_spins(std::vector<HalfInt> spins, std::string name = "");
ChainSpec chain_from_bonds(std::vector<long> bonds, std::string name = "");

// Accepts {"name": ..., "spins_twice": [...]} or {"name": ..., "bonds": [...]}
// (exactly one of the two lists).  Schema violations throw
// std::invalid_argument; inconsistent physics throws ChainError.
ChainSpec chain_from_json(const std::string& text);
ChainSpec chain_from_json_file(const std::string& path);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Re-checks every defining relation of an assembled ChainSpec.
ValidationReport validate(const ChainSpec& chain);

// A contiguous run of L bulk sites starting at bulk site k (1-based, so site
// indices k..k+L-1), together with the multiplicities of the two cut links.
struct BlockSpec {
    int start = 1;
    int length = 0;
    long m_left = 0;   // multiplicity of link (start-1, start)
    long m_right = 0;  // multiplicity of link (start+length-1, start+length)

    HalfInt j_minus() const { return HalfInt::from_twice(m_left - m_right); }
    HalfInt j_plus() const { return HalfInt::from_twice(m_left + m_right); }
    long degeneracy() const { return (m_left + 1) * (m_right + 1); }

    // The spins J with |j_minus| <= J <= j_plus, ascending.
    std::vector<HalfInt> j_values() const;
};

BlockSpec block(const ChainSpec& chain, int start, int length);

}  // namespace vbs
