#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "noncorr/gamma.hpp"
#include "noncorr/pattern_set.hpp"
#include "noncorr/rational.hpp"

namespace noncorr {

/// Coordinates of the (r, e) grid, 0 <= r < k^ℓ, e ∈ {0, 1}.
inline std::size_t grid_index(std::uint64_t r, unsigned e) { return 2 * r + e; }

/// η_q · Σ_{r,e} w_{r,e} S^e γ_r, with η_0 = 1_{0} and η_q = 1_{k^ℓ N_0 + q} for 1 <= q <= k^ℓ.
/// `provenance` lists the digits i_1, i_2, ... of the Λ_i applied since the seed.
struct BasisElement {
    std::uint64_t residue = 0;
    std::vector<Rational> weights;
    std::vector<Digit> provenance;
};

/// Span of a set of coefficient vectors, kept in reduced row-echelon form over Q.
class EchelonSpace {
public:
    explicit EchelonSpace(std::size_t dimension);

    std::size_t dimension() const { return dimension_; }
    std::size_t rank() const { return rows_.size(); }

    bool contains(std::span<const Rational> vector) const;
    /// Adds the vector if it lies outside the span; returns whether it did.
    bool insert(std::span<const Rational> vector);

private:
    /// Reduces `v` against the stored rows; returns the first nonzero column or dimension().
    std::size_t reduce(std::vector<Rational>& v) const;

    std::size_t dimension_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivot_row_;  // column -> row index, or npos
};

struct Decision {
    enum class Verdict { Noncorrelated, Correlated };

    Verdict verdict = Verdict::Noncorrelated;
    std::optional<std::uint64_t> witness;       // m >= 1 with γ(m) != 0
    std::optional<Rational> gamma_at_witness;   // exact γ(m)
    std::uint64_t elements_created = 0;         // basis vectors stored, seeds included
    std::uint64_t expansions = 0;

    bool noncorrelated() const { return verdict == Verdict::Noncorrelated; }
    bool operator==(const Decision&) const = default;
};

struct DecideOptions {
    /// Common factor applied to every seed; the verdict does not depend on it.
    Rational seed_scale{1};
    /// Replace the provenance witness by the least m with γ(m) != 0 up to min(m, k^{2ℓ}).
    bool minimal_witness = true;
};

/// Applies Λ_i, i = q mod k, to an element with q >= 1. Returns one candidate per
/// target residue q' ∈ k^{ℓ-1} Σ_k + floor(q/k), plus a q' = k^ℓ copy of the q' = 0
/// candidate (1_{k^ℓ N_0} = 1_{k^ℓ N} + 1_{0}). Candidates come in increasing q'.
std::vector<BasisElement> expand_element(const BasisElement& element, const PeriodicFactor& h, unsigned length);

/// Σ_{r,e} w_{r,e} γ_r(e).
Rational evaluate_at_zero(std::span<const Rational> weights, const GammaTable& table);

/// m = Σ_j i_j k^{j-1}. Throws std::overflow_error past 64 bits.
std::uint64_t witness_from_provenance(std::span<const Digit> digits, unsigned base);

/// Upper bound on stored vectors: 2 k^ℓ (k^ℓ + 1).
std::uint64_t capacity_bound(unsigned base, unsigned length);

/// Decides whether γ(m) = 0 for all m >= 1. `h` must have period base^length.
Decision decide(const PeriodicFactor& h, unsigned length, const DecideOptions& options = {});
/// Operating length defaults to ℓ(A).
Decision decide(const PatternSet& patterns, unsigned length = 0, const DecideOptions& options = {});

}  // namespace noncorr
