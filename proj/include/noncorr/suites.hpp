#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "noncorr/pattern_set.hpp"

namespace noncorr {

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
    void expect(bool condition, const std::string& what);
};

/// Random admissible set with words of length 1..max_length, leading and trailing zeros allowed.
PatternSet random_pattern_set(unsigned base, unsigned max_length, std::mt19937_64& rng);

/// Full binary census at length 4: count 2272 of 32768, zero-sweep of every noncorrelated
/// set, capacity bound, and invariant-part evidence (recorded as a note).
SuiteResult census_suite(unsigned workers = 1);

/// Self-invariant sets up to length 5: noncorrelated iff saturated, strata 2, 4, 16, 256.
SuiteResult equivalence_suite(unsigned workers = 1);

/// Random saturated sets (binary at lengths 2..5, base 4 at lengths 2..3): noncorrelated,
/// cancellation sums vanish, restricted coefficients match the closed form.
SuiteResult saturated_suite(std::uint64_t seed = 1, unsigned instances = 100);

/// Kernel quotient periodicity, h-periodicity, canonical forms and their uniqueness,
/// invariant decomposition, checked for random sets over n < horizon.
SuiteResult kernel_suite(std::uint64_t seed = 1, unsigned instances = 100, std::uint64_t horizon = 1 << 14);

/// Names: theorem-a, theorem-c, saturated-props, kernel-props.
SuiteResult run_suite(std::string_view name, unsigned workers = 1, std::uint64_t seed = 1);

}  // namespace noncorr
