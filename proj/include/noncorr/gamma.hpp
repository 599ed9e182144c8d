#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "noncorr/pattern_set.hpp"
#include "noncorr/rational.hpp"

namespace noncorr {

/// Restricted coefficients at shift one, γ_r(1) for every residue r < k^ℓ,
/// together with the periodic factor h they were derived from.
/// γ_r(0) = 1 for every r and is not stored.
class GammaTable {
public:
    GammaTable(PeriodicFactor h, unsigned length, std::vector<Rational> shift_one);

    unsigned base() const { return h_.base(); }
    unsigned length() const { return length_; }
    std::uint64_t modulus() const { return h_.period(); }
    const PeriodicFactor& factor() const { return h_; }

    /// γ_r(1).
    const Rational& shift_one(std::uint64_t r) const { return shift_one_[r]; }
    const std::vector<Rational>& shift_one_values() const { return shift_one_; }
    /// γ_r(e) for e ∈ {0, 1}.
    Rational at(std::uint64_t r, unsigned e) const { return e == 0 ? Rational(1) : shift_one_[r]; }

private:
    PeriodicFactor h_;
    unsigned length_;
    std::vector<Rational> shift_one_;
};

/// Number of trailing (k-1) digits of r; ν(k^α - 1) = α, ν(0) = 0.
unsigned trailing_top_digits(std::uint64_t r, unsigned base);

/// Computes γ_r(1) for all r from h, in nondecreasing order of ν(r).
/// `h` must have period base^length.
GammaTable bootstrap(const PeriodicFactor& h, unsigned length);
GammaTable bootstrap(const PatternSet& patterns, unsigned length);

/// Exact restricted and full correlation coefficients of one pattern-counting
/// sequence. Values are memoized per shift; an instance is not thread-safe and
/// is meant to be owned by a single worker.
class CorrelationEngine {
public:
    explicit CorrelationEngine(GammaTable table);
    /// Operating length defaults to ℓ(A).
    explicit CorrelationEngine(const PatternSet& patterns, unsigned length = 0);

    const GammaTable& table() const { return table_; }
    unsigned base() const { return table_.base(); }
    unsigned length() const { return table_.length(); }
    std::uint64_t modulus() const { return table_.modulus(); }

    /// γ_r(m) for all r < k^ℓ.
    const std::vector<Rational>& restricted(std::uint64_t m);
    const Rational& gamma_r(std::uint64_t r, std::uint64_t m);
    /// γ(m) = k^{-ℓ} Σ_r γ_r(m); throws std::invalid_argument for m = 0.
    Rational gamma(std::uint64_t m);

private:
    GammaTable table_;
    std::unordered_map<std::uint64_t, std::vector<Rational>> memo_;
};

/// γ(0) = 1 by definition; exposed as a constant rather than through the sum.
inline const Rational kGammaAtZero{1};

Rational gamma(const PatternSet& patterns, std::uint64_t m);
Rational gamma_r(const PatternSet& patterns, std::uint64_t r, std::uint64_t m);

}  // namespace noncorr
