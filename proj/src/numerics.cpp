#include "vbs/numerics.hpp"

#include <cassert>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace vbs {

Integer factorial(long n) {
    assert(n >= 0);
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational make_rational(Integer num, Integer den) {
    assert(den != 0);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

double to_double(const Rational& q) { return q.get_d(); }

std::string to_string(const Rational& q) { return q.get_str(); }

std::string HalfInt::str() const {
    if (is_whole()) return std::to_string(as_whole());
    return std::to_string(twice_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

Integer factorial_h(HalfInt x) {
    assert(x.is_whole() && x.twice() >= 0);
    return factorial(x.as_whole());
}

SqrtRational::SqrtRational(int sign, Rational radicand) : sign_(sign), radicand_(std::move(radicand)) {
    if (radicand_ < 0) throw std::invalid_argument("negative radicand");
    if (radicand_ == 0 || sign_ == 0) {
        sign_ = 0;
        radicand_ = 0;
    }
}

SqrtRational SqrtRational::sqrt_of(const Rational& r) { return SqrtRational(1, r); }

SqrtRational SqrtRational::of_rational(const Rational& r) {
    int s = sgn(r);
    Rational rr = r * r;
    return SqrtRational(s, rr);
}

Rational SqrtRational::squared() const { return radicand_; }

double SqrtRational::to_double() const {
    return sign_ * std::sqrt(radicand_.get_d());
}

SqrtRational SqrtRational::operator*(const SqrtRational& o) const {
    return SqrtRational(sign_ * o.sign_, radicand_ * o.radicand_);
}

SqrtRational SqrtRational::operator-() const { return SqrtRational(-sign_, radicand_); }

std::ostream& operator<<(std::ostream& os, const SqrtRational& s) {
    if (s.sign() == 0) return os << "0";
    if (s.sign() < 0) os << "-";
    return os << "sqrt(" << s.radicand().get_str() << ")";
}

}  // namespace vbs
