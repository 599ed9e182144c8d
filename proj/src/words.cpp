#include "noncorr/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace noncorr {

void check_base(unsigned base) {
    if (base < 2 || base > kMaxBase)
        throw std::invalid_argument("base must lie in [2, " + std::to_string(kMaxBase) + "], got " +
                                    std::to_string(base));
}

Word::Word(unsigned base) : base_(base) { check_base(base); }

Word::Word(std::vector<Digit> digits, unsigned base) : digits_(std::move(digits)), base_(base) {
    check_base(base);
    for (Digit d : digits_)
        if (d >= base) throw std::invalid_argument("digit " + std::to_string(d) + " out of range for base " +
                                                   std::to_string(base));
}

Word Word::parse(std::string_view text, unsigned base) {
    std::vector<Digit> digits;
    digits.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("invalid digit character '" + std::string(1, c) + "'");
        digits.push_back(static_cast<Digit>(c - '0'));
    }
    return Word(std::move(digits), base);
}

bool Word::is_all_zero() const {
    return std::all_of(digits_.begin(), digits_.end(), [](Digit d) { return d == 0; });
}

Word Word::prepended(Digit d) const {
    std::vector<Digit> out;
    out.reserve(digits_.size() + 1);
    out.push_back(d);
    out.insert(out.end(), digits_.begin(), digits_.end());
    return Word(std::move(out), base_);
}

Word Word::appended(Digit d) const {
    std::vector<Digit> out = digits_;
    out.push_back(d);
    return Word(std::move(out), base_);
}

Word Word::without_prefix(std::size_t count) const {
    count = std::min(count, digits_.size());
    return Word(std::vector<Digit>(digits_.begin() + static_cast<std::ptrdiff_t>(count), digits_.end()), base_);
}

Word Word::without_suffix(std::size_t count) const {
    count = std::min(count, digits_.size());
    return Word(std::vector<Digit>(digits_.begin(), digits_.end() - static_cast<std::ptrdiff_t>(count)), base_);
}

Word Word::concat(const Word& other) const {
    if (other.base_ != base_) throw std::invalid_argument("mixed-base word concatenation");
    std::vector<Digit> out = digits_;
    out.insert(out.end(), other.digits_.begin(), other.digits_.end());
    return Word(std::move(out), base_);
}

std::string Word::str() const {
    std::string s;
    s.reserve(digits_.size());
    for (Digit d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    if (auto c = base_ <=> other.base_; c != 0) return c;
    if (auto c = digits_.size() <=> other.digits_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(digits_.begin(), digits_.end(), other.digits_.begin(),
                                                  other.digits_.end());
}

Word expand(std::uint64_t n, unsigned base) {
    check_base(base);
    std::vector<Digit> digits;
    while (n > 0) {
        digits.push_back(static_cast<Digit>(n % base));
        n /= base;
    }
    std::reverse(digits.begin(), digits.end());
    return Word(std::move(digits), base);
}

Word expand_padded(std::uint64_t n, unsigned base, std::size_t length) {
    check_base(base);
    std::vector<Digit> digits(length, 0);
    for (std::size_t i = length; i-- > 0;) {
        digits[i] = static_cast<Digit>(n % base);
        n /= base;
    }
    if (n != 0) throw std::invalid_argument("expand_padded: value does not fit in the requested length");
    return Word(std::move(digits), base);
}

std::uint64_t value_of(const Word& w) {
    std::uint64_t n = 0;
    for (Digit d : w.digits()) {
        if (__builtin_mul_overflow(n, w.base(), &n) || __builtin_add_overflow(n, d, &n))
            throw std::overflow_error("value_of: word value exceeds 64 bits");
    }
    return n;
}

std::size_t count_occurrences(const Word& v, const Word& w) {
    if (v.base() != w.base()) throw std::invalid_argument("count_occurrences: mixed bases");
    if (v.size() > w.size()) return 0;
    const auto vd = v.digits();
    const auto wd = w.digits();
    std::size_t count = 0;
    for (std::size_t start = 0; start + vd.size() <= wd.size(); ++start)
        if (std::equal(vd.begin(), vd.end(), wd.begin() + static_cast<std::ptrdiff_t>(start))) ++count;
    return count;
}

std::size_t count_in_integer(const Word& v, std::uint64_t n) {
    if (v.is_all_zero()) throw std::invalid_argument("count_in_integer: pattern '" + v.str() + "' has no nonzero digit");
    const Word expansion = expand(n, v.base());
    std::vector<Digit> padded(v.size() - 1, 0);
    padded.insert(padded.end(), expansion.digits().begin(), expansion.digits().end());
    return count_occurrences(v, Word(std::move(padded), v.base()));
}

std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exponent; ++i)
        if (__builtin_mul_overflow(result, base, &result)) throw std::overflow_error("ipow: result exceeds 64 bits");
    return result;
}

}  // namespace noncorr
