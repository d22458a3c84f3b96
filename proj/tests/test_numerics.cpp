#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vbs/numerics.hpp"

#include <sstream>

using namespace vbs;

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);

    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);

    for (long n = 1; n <= 20; ++n)
        for (long k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("rational helpers") {
    Rational q = make_rational(6, -4);
    CHECK(q == Rational(-3) / 2);
    CHECK(to_string(q) == "-3/2");
    CHECK(to_double(Rational(1) / 4) == 0.25);
}

TEST_CASE("half-integers") {
    HalfInt s = HalfInt::from_twice(3);  // 3/2
    CHECK(!s.is_whole());
    CHECK(s.multiplicity() == 4);
    CHECK(s.str() == "3/2");
    CHECK(HalfInt::whole(2).str() == "2");
    CHECK(HalfInt::whole(2).as_whole() == 2);

    HalfInt one = HalfInt::whole(1);
    CHECK((s + one).twice() == 5);
    CHECK((s - s).twice() == 0);
    CHECK((-s).twice() == -3);
    CHECK(HalfInt::from_twice(-3).abs() == s);
    CHECK(s < HalfInt::whole(2));
    CHECK(s.to_double() == 1.5);

    std::ostringstream os;
    os << s;
    CHECK(os.str() == "3/2");
}

TEST_CASE("well-formed (j,m) pairs") {
    CHECK(valid_pair(HalfInt::whole(1), HalfInt::whole(-1)));
    CHECK(valid_pair(HalfInt::from_twice(1), HalfInt::from_twice(-1)));
    CHECK(!valid_pair(HalfInt::whole(1), HalfInt::whole(2)));
    CHECK(!valid_pair(HalfInt::whole(1), HalfInt::from_twice(1)));  // m - j not whole
}

TEST_CASE("signed square roots") {
    SqrtRational zero;
    CHECK(zero.is_zero());
    CHECK(zero == SqrtRational(1, Rational(0)));  // canonical zero
    CHECK(zero == SqrtRational(0, Rational(5)));

    SqrtRational half = SqrtRational::sqrt_of(Rational(1) / 2);
    CHECK(half.sign() == 1);
    CHECK(half.squared() == Rational(1) / 2);
    CHECK(half.to_double() == doctest::Approx(0.70710678118654752).epsilon(1e-15));

    SqrtRational mthird(-1, Rational(1) / 3);
    CHECK((mthird * mthird).squared() == Rational(1) / 9);
    CHECK((mthird * mthird).sign() == 1);
    CHECK((half * mthird).sign() == -1);
    CHECK((half * mthird).squared() == Rational(1) / 6);
    CHECK((-mthird).sign() == 1);

    SqrtRational r = SqrtRational::of_rational(Rational(-2) / 3);
    CHECK(r.sign() == -1);
    CHECK(r.squared() == Rational(4) / 9);
    CHECK((half * Rational(0)).is_zero());

    CHECK_THROWS_AS(SqrtRational(1, Rational(-1)), std::invalid_argument);
}
