#pragma once

#include "vbs/numerics.hpp"

namespace vbs {

// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> in the Condon-Shortley
// convention, exact.  Zero when M != m1+m2 or the triangle condition fails;
// throws std::invalid_argument on malformed (j,m) pairs.
SqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

SqrtRational wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

// 3j symbol with all projections zero; nonzero only for l+la+lb even and
// triangle-compatible.
SqrtRational wigner3j_zero(long l, long la, long lb);

// Pieces of Racah's single-sum formula, split so that callers can keep the
// m-independent radical apart from the rational m-dependent rest:
//
//   <j1 m1; j2 m2 | J M> = sqrt( cg_common_factor * (j1+m1)! (j1-m1)! (j2+m2)! (j2-m2)! )
//                          * cg_racah_sum
//
// cg_common_factor = (2J+1) (j1+j2-J)! (j1-j2+J)! (-j1+j2+J)! (J+M)! (J-M)!
//                    / (j1+j2+J+1)!
Rational cg_common_factor(HalfInt j1, HalfInt j2, HalfInt J, HalfInt M);
Rational cg_racah_sum(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J);

// True when (j1, j2, J) can couple: |j1-j2| <= J <= j1+j2 with whole perimeter.
bool triangle_ok(HalfInt j1, HalfInt j2, HalfInt J);

}  // namespace vbs
