#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <climits>
#include <random>
#include <sstream>

#include "noncorr/rational.hpp"

using noncorr::Rational;

namespace {

mpq_class ref(std::int64_t n, std::int64_t d) {
    mpq_class q{mpz_class(std::to_string(n)), mpz_class(std::to_string(d))};
    q.canonicalize();
    return q;
}

}  // namespace

TEST_CASE("construction normalizes sign and common factors") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(-4, -2).str() == "2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(0, -7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts integers and fractions") {
    CHECK(Rational::parse("-1/3") == Rational(-1, 3));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("1/"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("arithmetic on small values") {
    const Rational third(1, 3);
    CHECK(third + third == Rational(2, 3));
    CHECK(third - Rational(1, 2) == Rational(-1, 6));
    CHECK(third * Rational(3, 7) == Rational(1, 7));
    CHECK(third / Rational(2, 9) == Rational(3, 2));
    CHECK(-third == Rational(-1, 3));
    CHECK(Rational(-2, 5).abs() == Rational(2, 5));
    CHECK(Rational(-2, 5).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK_THROWS_AS(third / Rational(0), std::domain_error);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 3) > Rational(-1, 2));
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3));
    std::ostringstream os;
    os << Rational(-7, 3);
    CHECK(os.str() == "-7/3");
}

TEST_CASE("overflow promotes to the big representation and demotes back") {
    Rational big(INT64_MAX);
    big += Rational(1);
    CHECK_FALSE(big.is_small());
    CHECK(big.str() == "9223372036854775808");
    big -= Rational(1);
    CHECK(big.is_small());
    CHECK(big == Rational(INT64_MAX));

    Rational neg(INT64_MIN + 1);
    neg -= Rational(1);
    CHECK(neg.str() == "-9223372036854775808");
    CHECK(-neg > Rational(INT64_MAX));

    const Rational p(1, 1'000'000'007LL);
    Rational acc(1);
    for (int i = 0; i < 4; ++i) acc *= p;
    CHECK_FALSE(acc.is_small());
    for (int i = 0; i < 4; ++i) acc /= p;
    CHECK(acc == Rational(1));
    CHECK(acc.is_small());
}

TEST_CASE("randomized agreement with GMP, including values near the int64 limits") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> small(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> wide(INT64_MIN + 1, INT64_MAX);
    for (int trial = 0; trial < 20000; ++trial) {
        auto draw = [&] {
            const bool w = trial % 3 == 0;
            std::int64_t n = w ? wide(rng) : small(rng);
            std::int64_t d = w ? wide(rng) : small(rng);
            if (d == 0) d = 1;
            return std::make_pair(n, d);
        };
        const auto [an, ad] = draw();
        const auto [bn, bd] = draw();
        const Rational a(an, ad), b(bn, bd);
        const mpq_class qa = ref(an, ad), qb = ref(bn, bd);
        CHECK((a + b).to_mpq() == qa + qb);
        CHECK((a - b).to_mpq() == qa - qb);
        CHECK((a * b).to_mpq() == qa * qb);
        if (bn != 0) CHECK((a / b).to_mpq() == qa / qb);
        CHECK(((a <=> b) < 0) == (qa < qb));
        CHECK((a == b) == (qa == qb));
        const Rational chained = (a * b + a) - b;
        CHECK(chained.to_mpq() == (qa * qb + qa) - qb);
        CHECK(Rational::parse(chained.str()) == chained);
    }
}

TEST_CASE("copies are deep") {
    Rational a(INT64_MAX);
    a *= Rational(4);
    Rational b = a;
    b += Rational(1);
    CHECK(a != b);
    CHECK((b - a) == Rational(1));
    Rational c;
    c = a;
    CHECK(c == a);
}
