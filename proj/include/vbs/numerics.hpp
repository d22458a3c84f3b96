#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <iosfwd>
#include <string>

namespace vbs {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(long n);

// C(n,k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

Rational make_rational(Integer num, Integer den);
double to_double(const Rational& q);
std::string to_string(const Rational& q);

// Spin or magnetic quantum number stored as twice its value, so that
// half-integers never leave integer arithmetic.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(long t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }
    static constexpr HalfInt whole(long j) { return from_twice(2 * j); }

    constexpr long twice() const { return twice_; }
    constexpr bool is_whole() const { return twice_ % 2 == 0; }
    constexpr long as_whole() const { return twice_ / 2; }
    constexpr long multiplicity() const { return twice_ + 1; }  // 2j+1

    constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
        return from_twice(a.twice_ + b.twice_);
    }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
        return from_twice(a.twice_ - b.twice_);
    }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    double to_double() const { return 0.5 * static_cast<double>(twice_); }
    std::string str() const;

private:
    long twice_ = 0;
};

std::ostream& operator<<(std::ostream& os, HalfInt h);

// A magnitude/projection pair (j, m) is well formed when |m| <= j and j - m is
// an integer.
constexpr bool valid_pair(HalfInt j, HalfInt m) {
    return m.abs() <= j && (j - m).is_whole();
}

// factorial(x) for a half-integer known to be a whole number; aborts otherwise.
Integer factorial_h(HalfInt x);

// Exact value of the form sign * sqrt(radicand), radicand a nonnegative
// rational.  Closed under multiplication; squares back to a Rational.  This is
// all the radical arithmetic the eigenvalue formulas need: sums of distinct
// square roots never have to be represented.
class SqrtRational {
public:
    SqrtRational() : sign_(0), radicand_(0) {}
    SqrtRational(int sign, Rational radicand);

    // +sqrt(r); r must be >= 0.
    static SqrtRational sqrt_of(const Rational& r);
    // embed a rational exactly: sign(r) * sqrt(r^2)
    static SqrtRational of_rational(const Rational& r);

    int sign() const { return sign_; }
    const Rational& radicand() const { return radicand_; }
    bool is_zero() const { return sign_ == 0; }

    Rational squared() const;
    double to_double() const;

    SqrtRational operator*(const SqrtRational& o) const;
    SqrtRational operator*(const Rational& r) const { return *this * of_rational(r); }
    SqrtRational operator-() const;

    bool operator==(const SqrtRational&) const = default;

private:
    int sign_;           // -1, 0, +1; 0 iff radicand == 0
    Rational radicand_;  // >= 0, lowest terms
};

std::ostream& operator<<(std::ostream& os, const SqrtRational& s);

}  // namespace vbs
