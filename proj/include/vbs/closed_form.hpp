#pragma once

#include "vbs/block_spectrum.hpp"
#include "vbs/chain.hpp"

#include <stdexcept>

namespace vbs {

// Closed-form eigenvalues need at least two block sites; shorter blocks fall
// back to the explicit partial trace.
struct UnsupportedBlock : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when the assembled eigenvalues fail the exact unit-trace identity.
struct NormalizationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Transfer coefficient of one closed link of multiplicity m at composite
// angular momentum l:  (-1)^l m! (m+1)! / ((m-l)! (m+l+1)!), zero for l > m.
Rational lambda_coeff(long l, long m);

// Exact density-matrix eigenvalue at total boundary spin J for a block of at
// least two sites: a triple sum over the composite angular momenta carried by
// the interior links and the two boundary dressings, tied together by a
// squared zero-projection 3j symbol.
Rational eigenvalue_closed_form(const ChainSpec& chain, const BlockSpec& blk, HalfInt J);

// Long-block limit of the eigenvalues when both cut links hold steady:
// 1 / ((m_left + 1)(m_right + 1)), independent of J.
Rational limit_eigenvalue(long m_left, long m_right);

// Entropy of the flat limiting spectrum: ln((m_left + 1)(m_right + 1)).
double saturated_entropy(long m_left, long m_right);

// All eigenvalues |j_minus| <= J <= j_plus; verifies sum (2J+1) Lambda = 1.
BlockSpectrum closed_form_spectrum(const ChainSpec& chain, const BlockSpec& blk);

}  // namespace vbs
