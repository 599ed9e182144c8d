#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "noncorr/words.hpp"

namespace noncorr {

/// Admissible set of patterns: finite, no member made only of zeros.
/// Words are kept sorted in shortlex order without duplicates.
class PatternSet {
public:
    explicit PatternSet(unsigned base = 2);
    /// Duplicates collapse; throws std::invalid_argument on an all-zero word or a base mismatch.
    PatternSet(unsigned base, std::vector<Word> words);

    /// Comma-separated digit strings ("0101,11"); the empty string is the empty set.
    static PatternSet parse(std::string_view text, unsigned base = 2);

    /// Binary constant-length set: bit (v-1) of `mask` selects the word of value v
    /// written with `length` digits, for 1 <= v < 2^length.
    static PatternSet from_mask(unsigned length, std::uint64_t mask);
    /// Inverse of from_mask; requires base 2 and every member of exactly `length` digits.
    std::uint64_t to_mask(unsigned length) const;

    unsigned base() const { return base_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    std::span<const Word> words() const { return words_; }
    bool contains(const Word& w) const;

    /// ℓ(A): longest member length, with ℓ(∅) = 1.
    unsigned max_length() const;
    bool has_constant_length(unsigned length) const;
    bool has_leading_zero() const;
    bool has_trailing_zero() const;

    std::string str() const;

    bool operator==(const PatternSet& other) const = default;

private:
    unsigned base_;
    std::vector<Word> words_;
};

/// A ±1-valued table of the given period, read cyclically.
class PeriodicFactor {
public:
    PeriodicFactor(unsigned base, std::vector<int> signs);

    unsigned base() const { return base_; }
    std::uint64_t period() const { return signs_.size(); }
    int operator()(std::uint64_t n) const { return signs_[n % signs_.size()]; }
    std::span<const int> signs() const { return signs_; }

    /// Comma-separated "+1,-1,..." form.
    static PeriodicFactor parse(std::string_view text, unsigned base);
    std::string str() const;

    bool operator==(const PeriodicFactor& other) const = default;

private:
    unsigned base_;
    std::vector<int> signs_;
};

using SequenceOracle = std::function<int(std::uint64_t)>;

std::size_t count_set(const PatternSet& patterns, std::uint64_t n);

/// a_A(n) = (-1)^{#(A,n)}.
int evaluate(const PatternSet& patterns, std::uint64_t n);

PatternSet symmetric_difference(const PatternSet& lhs, const PatternSet& rhs);

/// The unique set without leading zeros defining the same sequence.
PatternSet remove_leading_zeros(const PatternSet& patterns);

/// The unique subset of Σ_k^length \ {0^length} defining the same sequence.
PatternSet to_constant_length(const PatternSet& patterns, unsigned length);

/// a(kn) = a(n) for all n.
bool is_self_invariant(const PatternSet& patterns);

struct InvariantDecomposition {
    PatternSet invariant;    // no leading or trailing zeros
    PeriodicFactor factor;   // period base^(length-1)
};

/// Splits a_A = a_B * p with B self-invariant and p periodic. `length` defaults to ℓ(A).
InvariantDecomposition invariant_decomposition(const PatternSet& patterns, unsigned length = 0);

/// h(r) = a(r)/a(floor(r/k)) for 0 <= r < k^length; requires length >= ℓ(A).
PeriodicFactor periodic_factor(const PatternSet& patterns, unsigned length);

/// n -> a(k^level n + offset)/a(n) for n < k^{ℓ-1}, ℓ = ℓ(A).
PeriodicFactor kernel_quotient(const PatternSet& patterns, unsigned level, std::uint64_t offset);

/// True if n -> a(k^level n + offset)/a(n) agrees with kernel_quotient for all n < horizon.
bool kernel_quotient_is_periodic(const PatternSet& patterns, unsigned level, std::uint64_t offset,
                                 std::uint64_t horizon);

/// Rebuilds the constant-length set C with a_C = sequence, by the membership rule
/// v in C iff s([v]) = -s([v without its last digit]). Throws NotPatternCounting
/// if the result disagrees with the sequence for some n < k^{length+2}.
PatternSet reconstruct_pattern_set(const SequenceOracle& sequence, unsigned length, unsigned base);

/// All words of the given length over Σ_k, in increasing value order.
std::vector<Word> all_words(unsigned base, unsigned length);

}  // namespace noncorr
