#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "noncorr/gamma.hpp"
#include "noncorr/oracle.hpp"
#include "support.hpp"

using namespace noncorr;

namespace {
PatternSet set2(const char* s) { return PatternSet::parse(s, 2); }
}  // namespace

TEST_CASE("trailing top digits") {
    CHECK(trailing_top_digits(0, 2) == 0);
    CHECK(trailing_top_digits(1, 2) == 1);
    CHECK(trailing_top_digits(7, 2) == 3);
    CHECK(trailing_top_digits(5, 2) == 1);
    CHECK(trailing_top_digits(8, 3) == 2);
    CHECK(trailing_top_digits(5, 3) == 1);
}

TEST_CASE("bootstrap on the classical examples") {
    const GammaTable tm = bootstrap(set2("1"), 1);
    CHECK(tm.shift_one(0) == Rational(-1));
    CHECK(tm.shift_one(1) == Rational(1, 3));

    const GammaTable rs = bootstrap(set2("11"), 2);
    CHECK(rs.shift_one_values() == std::vector<Rational>{1, 0, -1, 0});

    const GammaTable constant = bootstrap(PatternSet(2), 1);
    CHECK(constant.shift_one_values() == std::vector<Rational>{1, 1});
    CHECK(constant.at(0, 0) == Rational(1));
}

TEST_CASE("bootstrap solves the shift-one system") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const unsigned k = 2 + trial % 3;
        const PatternSet a = oracle::random_set(k, k == 2 ? 4 : 3, rng);
        const unsigned len = a.max_length() + (trial % 4 == 0 ? 1 : 0);
        const GammaTable table = bootstrap(a, len);
        oracle::RestrictedOracle ref(a, len);
        for (std::uint64_t r = 0; r < table.modulus(); ++r) REQUIRE(table.shift_one(r).to_mpq() == ref.restricted(r, 1));
    }
}

TEST_CASE("restricted coefficients") {
    CHECK(gamma_r(set2("1"), 0, 2) == Rational(-1, 3));
    CHECK(gamma_r(set2("11"), 0, 1) == Rational(1));
    CorrelationEngine engine(set2("110"));
    for (std::uint64_t r = 0; r < engine.modulus(); ++r) CHECK(engine.gamma_r(r, 0) == Rational(1));
    CHECK_THROWS(engine.gamma_r(engine.modulus(), 1));
}

TEST_CASE("full coefficients: Thue–Morse and Rudin–Shapiro") {
    CHECK(gamma(set2("1"), 1) == Rational(-1, 3));
    CHECK(gamma(set2("1"), 3) == Rational(1, 3));
    CHECK(gamma(set2("11"), 1) == Rational(0));
    CHECK_THROWS_AS(gamma(set2("1"), 0), std::invalid_argument);
    CHECK(kGammaAtZero == Rational(1));

    CorrelationEngine tm(set2("1"));
    for (unsigned j = 1; j <= 8; ++j) CHECK(tm.gamma(std::uint64_t{1} << j) == Rational(-1, 3));
    // Classical relations for the Thue–Morse correlation.
    for (std::uint64_t m = 1; m <= 64; ++m) {
        CHECK(tm.gamma(2 * m) == tm.gamma(m));
        CHECK(tm.gamma(2 * m + 1) == -(tm.gamma(m) + tm.gamma(m + 1)) / Rational(2));
    }
    CorrelationEngine rs(set2("11"));
    for (std::uint64_t m = 1; m <= 256; ++m) CHECK(rs.gamma(m).is_zero());
}

TEST_CASE("agreement with the recursive oracle, bounds, and length invariance") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 80; ++trial) {
        const unsigned k = 2 + trial % 3;
        const PatternSet a = oracle::random_set(k, k == 2 ? 4 : 3, rng);
        const unsigned len = a.max_length();
        CorrelationEngine engine(a, len), longer(a, len + 1);
        oracle::RestrictedOracle ref(a, len);
        const std::uint64_t top = 3 * engine.modulus();
        for (std::uint64_t m = 1; m <= top; ++m) {
            const Rational g = engine.gamma(m);
            REQUIRE(g.to_mpq() == ref.gamma(m));
            REQUIRE(g == longer.gamma(m));
            CHECK(g.abs() <= Rational(1));
            if (m <= 2 * k)
                for (std::uint64_t r = 0; r < engine.modulus(); ++r) {
                    REQUIRE(engine.gamma_r(r, m).to_mpq() == ref.restricted(r, m));
                    CHECK(engine.gamma_r(r, m).abs() <= Rational(1));
                }
        }
    }
}

TEST_CASE("agreement with the empirical estimator") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const PatternSet a = oracle::random_set(2, 3, rng);
        const auto signs = sign_table(a, (1U << 20) + 8);
        for (std::uint64_t m = 1; m <= 8; ++m)
            CHECK(std::abs(empirical_gamma(signs, m, 1U << 20).value - gamma(a, m).to_double()) <= 0.03);
    }
}

TEST_CASE("large shifts stay exact") {
    CorrelationEngine tm(set2("1"));
    CHECK(tm.gamma(std::uint64_t{1} << 40) == Rational(-1, 3));
    CorrelationEngine other(PatternSet::parse("12,201", 3));
    const Rational far = other.gamma(1'000'000'007ULL);
    CHECK(far.abs() <= Rational(1));
}
