#include "vbs/closed_form.hpp"

#include "vbs/angular.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace vbs {

Rational lambda_coeff(long l, long m) {
    if (l < 0 || m < 0) throw std::invalid_argument("lambda_coeff: negative argument");
    if (l > m) return 0;
    Rational r = make_rational(factorial(m) * factorial(m + 1),
                               factorial(m - l) * factorial(m + l + 1));
    return l % 2 == 0 ? r : -r;
}

Rational eigenvalue_closed_form(const ChainSpec& chain, const BlockSpec& blk, HalfInt J) {
    if (blk.length < 2)
        throw UnsupportedBlock("closed form needs at least two block sites");
    HalfInt jm = blk.j_minus();
    HalfInt jp = blk.j_plus();
    if (!(J >= jm.abs() && J <= jp && (J - jm).is_whole()))
        throw std::invalid_argument("eigenvalue_closed_form: J outside the boundary range");

    // interior link multiplicities
    std::vector<long> interior;
    for (int l = blk.start; l <= blk.start + blk.length - 2; ++l)
        interior.push_back(chain.bonds[l]);
    long m_min = *std::min_element(interior.begin(), interior.end());

    long la_max = (jp - J).as_whole();            // left dressing: j_minus + J pairs used
    long lb_max1 = (jm + J).as_whole();           // right dressing ranges
    long lb_max2 = (J - jm).as_whole();
    long lb_max = std::min(lb_max1, lb_max2);

    // Lambda = prefactor * sum_{l, la, lb} prod_links lambda(l, M_link)
    //          * lambda(la, jp - J) * lambda(lb, jm + J) * lambda(lb, J - jm)
    //          * (2l+1)(2la+1)(2lb+1) * [3j(l, la, lb; 0,0,0)]^2
    bool uniform = std::all_of(interior.begin(), interior.end(),
                               [&](long m) { return m == interior.front(); });
    Rational sum = 0;
    for (long l = 0; l <= m_min; ++l) {
        Rational pl = 1;
        if (uniform) {
            // repeated identical links: one power instead of a product
            Rational base = lambda_coeff(l, interior.front());
            mpz_pow_ui(pl.get_num_mpz_t(), base.get_num().get_mpz_t(),
                       static_cast<unsigned long>(interior.size()));
            mpz_pow_ui(pl.get_den_mpz_t(), base.get_den().get_mpz_t(),
                       static_cast<unsigned long>(interior.size()));
            pl.canonicalize();
        } else {
            for (long m : interior) pl *= lambda_coeff(l, m);
        }
        for (long la = 0; la <= la_max; ++la) {
            Rational pa = lambda_coeff(la, la_max);
            if (pa == 0) continue;
            for (long lb = 0; lb <= lb_max; ++lb) {
                SqrtRational w = wigner3j_zero(l, la, lb);
                if (w.is_zero()) continue;
                Rational pb = lambda_coeff(lb, lb_max1) * lambda_coeff(lb, lb_max2);
                Rational mult((2 * l + 1) * (2 * la + 1) * (2 * lb + 1));
                sum += pl * pa * pb * mult * w.squared();
            }
        }
    }

    Integer num = factorial_h(J + J + HalfInt::whole(1));  // (2J+1)!
    num *= factorial(blk.m_left);
    num *= factorial(blk.m_right);
    Integer den = factorial_h(jp + J + HalfInt::whole(1));
    den *= factorial_h(jm + J + HalfInt::whole(1));
    den *= factorial_h(jp - J + HalfInt::whole(1));
    den *= factorial_h(J - jm + HalfInt::whole(1));
    return make_rational(num, den) * sum;
}

Rational limit_eigenvalue(long m_left, long m_right) {
    return make_rational(1, (m_left + 1) * (m_right + 1));
}

double saturated_entropy(long m_left, long m_right) {
    return std::log(static_cast<double>((m_left + 1) * (m_right + 1)));
}

BlockSpectrum closed_form_spectrum(const ChainSpec& chain, const BlockSpec& blk) {
    BlockSpectrum out;
    for (HalfInt J : blk.j_values()) out.eigenvalues[J] = eigenvalue_closed_form(chain, blk, J);
    if (out.trace() != 1)
        throw NormalizationFailure("closed-form eigenvalues do not sum to one");
    return out;
}

}  // namespace vbs
