#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace noncorr {

using Digit = std::uint8_t;

/// Largest base supported by the textual digit format ('0'..'9').
inline constexpr unsigned kMaxBase = 10;

void check_base(unsigned base);

/// A finite word over the digit alphabet {0, ..., base-1}, most significant
/// digit first (the order in which it is written).
class Word {
public:
    explicit Word(unsigned base = 2);
    Word(std::vector<Digit> digits, unsigned base);

    /// Parses a string of digit characters; the empty string is the empty word.
    static Word parse(std::string_view text, unsigned base);

    unsigned base() const { return base_; }
    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }
    std::span<const Digit> digits() const { return digits_; }
    Digit operator[](std::size_t i) const { return digits_[i]; }
    Digit front() const { return digits_.front(); }
    Digit back() const { return digits_.back(); }

    bool is_all_zero() const;

    Word prepended(Digit d) const;
    Word appended(Digit d) const;
    /// Word with the first `count` digits removed.
    Word without_prefix(std::size_t count) const;
    /// Word with the last `count` digits removed.
    Word without_suffix(std::size_t count) const;
    Word concat(const Word& other) const;

    std::string str() const;

    bool operator==(const Word& other) const = default;
    /// Shortlex order: shorter words first, then lexicographic by digit.
    std::strong_ordering operator<=>(const Word& other) const;

private:
    std::vector<Digit> digits_;
    unsigned base_;
};

/// (n)_k without leading zeros; expand(0, k) is the empty word.
Word expand(std::uint64_t n, unsigned base);

/// The ℓ-digit expansion of n, zero-padded on the left. Requires n < base^length.
Word expand_padded(std::uint64_t n, unsigned base, std::size_t length);

/// Integer encoded by w; leading zeros are ignored.
std::uint64_t value_of(const Word& w);

/// Number of factorizations w = x v y, overlaps included.
std::size_t count_occurrences(const Word& v, const Word& w);

/// Occurrences of v in the expansion of n padded with |v|-1 leading zeros.
/// Throws std::invalid_argument if v has no nonzero digit.
std::size_t count_in_integer(const Word& v, std::uint64_t n);

/// base^exponent, throwing std::overflow_error past 64 bits.
std::uint64_t ipow(std::uint64_t base, unsigned exponent);

}  // namespace noncorr
