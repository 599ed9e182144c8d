#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "noncorr/pattern_set.hpp"
#include "noncorr/rational.hpp"

namespace noncorr {

/// Finite-N truncation of a correlation average.
struct Estimate {
    double value = 0;
    std::uint64_t samples = 0;
    std::uint64_t shift = 0;
    std::optional<std::uint64_t> residue;
};

/// a(n) for 0 <= n < count, streamed along the digit chain a(n) = a(floor(n/k)) h(n mod k^ℓ).
std::vector<std::int8_t> sign_table(const PatternSet& patterns, std::uint64_t count);

/// (1/N) Σ_{n<N} a(n) a(n+m). Partial sums are exact integers, so the result does
/// not depend on the number of workers.
Estimate empirical_gamma(const PatternSet& patterns, std::uint64_t m, std::uint64_t samples, unsigned workers = 1);

/// Same as empirical_gamma over a precomputed sign table of length >= samples + m.
Estimate empirical_gamma(const std::vector<std::int8_t>& signs, std::uint64_t m, std::uint64_t samples,
                         unsigned workers = 1);

/// (k^ℓ/N) Σ_{n<N, n ≡ r mod k^ℓ} a(n) a(n+m), ℓ = ℓ(A).
Estimate empirical_gamma_r(const PatternSet& patterns, std::uint64_t r, std::uint64_t m, std::uint64_t samples);

/// Σ_{i ∈ Σ_k} a([i u j0]) a([i u j1]); vanishes for saturated sets.
int check_cancellation(const PatternSet& patterns, const Word& u, Digit j0, Digit j1);

/// Closed form of γ_r(m) for saturated sets: a(r) a(r+m) if (r mod k) + m < k, else 0.
/// Throws std::invalid_argument for m = 0 or a non-saturated set.
Rational sat_gamma_closed_form(const PatternSet& patterns, std::uint64_t r, std::uint64_t m);

}  // namespace noncorr
