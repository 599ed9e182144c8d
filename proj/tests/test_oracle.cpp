#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "noncorr/classify.hpp"
#include "noncorr/gamma.hpp"
#include "noncorr/oracle.hpp"
#include "support.hpp"

using namespace noncorr;

namespace {
PatternSet set2(const char* s) { return PatternSet::parse(s, 2); }
constexpr std::uint64_t kN = std::uint64_t{1} << 20;
}  // namespace

TEST_CASE("sign table matches direct evaluation") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned k = 2 + trial % 3;
        const PatternSet a = oracle::random_set(k, 4, rng);
        const auto table = sign_table(a, 20000);
        for (std::uint64_t n = 0; n < table.size(); ++n) REQUIRE(table[n] == evaluate(a, n));
    }
    CHECK(sign_table(set2("1"), 0).empty());
}

TEST_CASE("empirical correlation of the classical sequences") {
    CHECK(std::abs(empirical_gamma(set2("1"), 1, kN).value + 1.0 / 3) <= 0.01);
    CHECK(std::abs(empirical_gamma(set2("11"), 1, kN).value) <= 0.01);
    for (std::uint64_t m : {1, 5, 17})
        CHECK(empirical_gamma(PatternSet(2), m, 1000).value == 1.0);
    const Estimate e = empirical_gamma(set2("1"), 3, 4096);
    CHECK(e.samples == 4096);
    CHECK(e.shift == 3);
    CHECK_FALSE(e.residue.has_value());
    CHECK_THROWS(empirical_gamma(set2("1"), 1, 0));
}

TEST_CASE("empirical restricted correlation") {
    CHECK(std::abs(empirical_gamma_r(set2("1"), 0, 1, kN).value + 1) <= 0.01);
    CHECK(std::abs(empirical_gamma_r(set2("11"), 1, 1, kN).value) <= 0.01);
    CHECK(std::abs(empirical_gamma_r(set2("1"), 1, 1, kN).value - 1.0 / 3) <= 0.01);
    CHECK(empirical_gamma_r(set2("1"), 1, 1, 64).residue == std::optional<std::uint64_t>{1});
    CHECK_THROWS(empirical_gamma_r(set2("1"), 2, 1, 64));
}

TEST_CASE("restricted estimates average to the full estimate on the same sample") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned k = 2 + trial % 2;
        const PatternSet a = oracle::random_set(k, 3, rng);
        const std::uint64_t modulus = oracle::power(k, a.max_length());
        const std::uint64_t samples = modulus * 4096;
        for (std::uint64_t m = 1; m <= 4; ++m) {
            double sum = 0;
            for (std::uint64_t r = 0; r < modulus; ++r) sum += empirical_gamma_r(a, r, m, samples).value;
            CHECK(std::abs(sum / static_cast<double>(modulus) - empirical_gamma(a, m, samples).value) <= 1e-12);
        }
    }
}

TEST_CASE("estimates converge to the exact coefficients") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 12; ++trial) {
        const PatternSet a = oracle::random_set(2, 4, rng);
        const auto signs = sign_table(a, 4 * kN + 8);
        for (std::uint64_t m = 1; m <= 8; ++m) {
            const double exact = gamma(a, m).to_double();
            const double coarse = std::abs(empirical_gamma(signs, m, kN).value - exact);
            const double fine = std::abs(empirical_gamma(signs, m, 4 * kN).value - exact);
            CHECK(fine <= coarse + 0.02);
            CHECK(fine <= 0.02);
        }
    }
}

TEST_CASE("estimates are identical for every worker count") {
    const PatternSet a = set2("1,0110");
    const auto signs = sign_table(a, kN + 16);
    const double reference = empirical_gamma(signs, 7, kN, 1).value;
    for (unsigned workers : {2U, 3U, 4U, 8U}) CHECK(empirical_gamma(signs, 7, kN, workers).value == reference);
}

TEST_CASE("cancellation sums") {
    CHECK(check_cancellation(set2("11"), Word(2), 0, 1) == 0);
    CHECK(check_cancellation(set2("101,111"), Word::parse("0", 2), 0, 1) == 0);
    bool found = false;
    for (const Word& u : all_words(2, 1))
        for (Digit j0 = 0; j0 < 2; ++j0)
            for (Digit j1 = 0; j1 < 2; ++j1)
                if (j0 != j1 && check_cancellation(set2("111"), u, j0, j1) != 0) found = true;
    CHECK(found);
    CHECK_THROWS(check_cancellation(set2("11"), Word(2), 1, 1));
}

TEST_CASE("closed form on saturated sets") {
    CHECK(sat_gamma_closed_form(set2("11"), 0, 1) == Rational(1));
    CHECK(sat_gamma_closed_form(set2("11"), 1, 1) == Rational(0));
    CHECK(sat_gamma_closed_form(set2("11"), 0, 2) == Rational(0));
    CHECK_THROWS(sat_gamma_closed_form(set2("11"), 0, 0));
    CHECK_THROWS(sat_gamma_closed_form(set2("111"), 0, 1));

    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned k = trial % 2 ? 4 : 2;
        const PatternSet a = random_saturated(k, k == 2 ? 2 + trial % 4 : 2 + trial % 2, rng);
        for (const Word& u : all_words(k, a.max_length() - 2))
            for (unsigned j0 = 0; j0 < k; ++j0)
                for (unsigned j1 = 0; j1 < k; ++j1)
                    if (j0 != j1) CHECK(check_cancellation(a, u, Digit(j0), Digit(j1)) == 0);
        CorrelationEngine engine(a);
        for (std::uint64_t m = 1; m <= 2 * k; ++m)
            for (std::uint64_t r = 0; r < engine.modulus(); ++r)
                CHECK(sat_gamma_closed_form(a, r, m) == engine.gamma_r(r, m));
    }
}
