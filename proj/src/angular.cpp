#include "vbs/angular.hpp"

#include <algorithm>
#include <stdexcept>

namespace vbs {

bool triangle_ok(HalfInt j1, HalfInt j2, HalfInt J) {
    return (j1 + j2 + J).is_whole() && J >= (j1 - j2).abs() && J <= j1 + j2;
}

Rational cg_common_factor(HalfInt j1, HalfInt j2, HalfInt J, HalfInt M) {
    Integer num = (J.twice() + 1);
    num *= factorial_h(j1 + j2 - J);
    num *= factorial_h(j1 - j2 + J);
    num *= factorial_h(j2 - j1 + J);
    num *= factorial_h(J + M);
    num *= factorial_h(J - M);
    Integer den = factorial_h(j1 + j2 + J + HalfInt::whole(1));
    return make_rational(num, den);
}

Rational cg_racah_sum(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J) {
    // sum_k (-1)^k / [ k! (j1+j2-J-k)! (j1-m1-k)! (j2+m2-k)! (J-j2+m1+k)! (J-j1-m2+k)! ]
    long klo = 0;
    klo = std::max(klo, -(J - j2 + m1).as_whole());
    klo = std::max(klo, -(J - j1 - m2).as_whole());
    long khi = (j1 + j2 - J).as_whole();
    khi = std::min(khi, (j1 - m1).as_whole());
    khi = std::min(khi, (j2 + m2).as_whole());

    Rational sum = 0;
    for (long k = klo; k <= khi; ++k) {
        Integer den = factorial(k);
        den *= factorial((j1 + j2 - J).as_whole() - k);
        den *= factorial((j1 - m1).as_whole() - k);
        den *= factorial((j2 + m2).as_whole() - k);
        den *= factorial((J - j2 + m1).as_whole() + k);
        den *= factorial((J - j1 - m2).as_whole() + k);
        Rational term = make_rational(k % 2 == 0 ? 1 : -1, den);
        sum += term;
    }
    return sum;
}

SqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
    if (!valid_pair(j1, m1) || !valid_pair(j2, m2) || !valid_pair(J, M))
        throw std::invalid_argument("clebsch_gordan: malformed (j,m) pair");
    if (m1 + m2 != M) return SqrtRational();
    if (!triangle_ok(j1, j2, J)) return SqrtRational();

    Rational s = cg_racah_sum(j1, m1, j2, m2, J);
    if (s == 0) return SqrtRational();

    Rational common = cg_common_factor(j1, j2, J, M);
    Integer f = factorial_h(j1 + m1);
    f *= factorial_h(j1 - m1);
    f *= factorial_h(j2 + m2);
    f *= factorial_h(j2 - m2);
    Rational rad = common * Rational(f) * s * s;
    return SqrtRational(sgn(s), rad);
}

SqrtRational wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
    SqrtRational cg = clebsch_gordan(j1, m1, j2, m2, j3, -m3);
    if (cg.is_zero()) return cg;
    // nonzero => j1 - j2 - m3 is a whole number
    long e = (j1 - j2 - m3).as_whole();
    int phase = (e % 2 == 0) ? 1 : -1;
    return SqrtRational(phase, make_rational(1, j3.twice() + 1)) * cg;
}

SqrtRational wigner3j_zero(long l, long la, long lb) {
    if (l < 0 || la < 0 || lb < 0) return SqrtRational();
    long p = l + la + lb;
    if (p % 2 != 0) return SqrtRational();
    long g = p / 2;
    if (g < l || g < la || g < lb) return SqrtRational();

    Integer num = factorial(2 * (g - l));
    num *= factorial(2 * (g - la));
    num *= factorial(2 * (g - lb));
    Rational rad = make_rational(num, factorial(2 * g + 1));
    Rational fr = make_rational(factorial(g), factorial(g - l) * factorial(g - la) * factorial(g - lb));
    int phase = (g % 2 == 0) ? 1 : -1;
    return SqrtRational(phase, rad) * fr;
}

}  // namespace vbs
