#include "noncorr/pattern_set.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "noncorr/errors.hpp"

namespace noncorr {

namespace {

using WordSet = std::set<Word>;

void toggle(WordSet& set, const Word& w) {
    if (auto it = set.find(w); it != set.end())
        set.erase(it);
    else
        set.insert(w);
}

PatternSet to_pattern_set(unsigned base, const WordSet& set) {
    return PatternSet(base, std::vector<Word>(set.begin(), set.end()));
}

WordSet to_word_set(const PatternSet& patterns) {
    return WordSet(patterns.words().begin(), patterns.words().end());
}

}  // namespace

// ---------------------------------------------------------------- PatternSet

PatternSet::PatternSet(unsigned base) : base_(base) { check_base(base); }

PatternSet::PatternSet(unsigned base, std::vector<Word> words) : base_(base), words_(std::move(words)) {
    check_base(base);
    for (const Word& w : words_) {
        if (w.base() != base) throw std::invalid_argument("pattern '" + w.str() + "' has the wrong base");
        if (w.is_all_zero())
            throw std::invalid_argument("pattern '" + w.str() + "' is all zeros; the set is not admissible");
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

PatternSet PatternSet::parse(std::string_view text, unsigned base) {
    std::vector<Word> words;
    if (text.empty()) return PatternSet(base);
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.empty()) throw std::invalid_argument("empty pattern in '" + std::string(text) + "'");
        words.push_back(Word::parse(item, base));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return PatternSet(base, std::move(words));
}

PatternSet PatternSet::from_mask(unsigned length, std::uint64_t mask) {
    if (length == 0 || length > 6) throw std::invalid_argument("from_mask: length must lie in [1, 6]");
    const std::uint64_t count = std::uint64_t{1} << length;
    if (count - 1 < 64 && (mask >> (count - 1)) != 0) throw std::invalid_argument("from_mask: mask has stray bits");
    std::vector<Word> words;
    for (std::uint64_t v = 1; v < count; ++v)
        if ((mask >> (v - 1)) & 1U) words.push_back(expand_padded(v, 2, length));
    return PatternSet(2, std::move(words));
}

std::uint64_t PatternSet::to_mask(unsigned length) const {
    if (base_ != 2) throw std::invalid_argument("to_mask: base must be 2");
    if (length == 0 || length > 6) throw std::invalid_argument("to_mask: length must lie in [1, 6]");
    std::uint64_t mask = 0;
    for (const Word& w : words_) {
        if (w.size() != length) throw std::invalid_argument("to_mask: set is not of constant length");
        mask |= std::uint64_t{1} << (value_of(w) - 1);
    }
    return mask;
}

bool PatternSet::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

unsigned PatternSet::max_length() const {
    unsigned len = 1;
    for (const Word& w : words_) len = std::max(len, static_cast<unsigned>(w.size()));
    return len;
}

bool PatternSet::has_constant_length(unsigned length) const {
    return std::all_of(words_.begin(), words_.end(), [&](const Word& w) { return w.size() == length; });
}

bool PatternSet::has_leading_zero() const {
    return std::any_of(words_.begin(), words_.end(), [](const Word& w) { return w.front() == 0; });
}

bool PatternSet::has_trailing_zero() const {
    return std::any_of(words_.begin(), words_.end(), [](const Word& w) { return w.back() == 0; });
}

std::string PatternSet::str() const {
    std::string out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (i) out.push_back(',');
        out += words_[i].str();
    }
    return out;
}

// ------------------------------------------------------------ PeriodicFactor

PeriodicFactor::PeriodicFactor(unsigned base, std::vector<int> signs) : base_(base), signs_(std::move(signs)) {
    check_base(base);
    if (signs_.empty()) throw std::invalid_argument("periodic factor needs at least one entry");
    for (int s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("periodic factor entries must be +1 or -1");
}

PeriodicFactor PeriodicFactor::parse(std::string_view text, unsigned base) {
    std::vector<int> signs;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        std::string item(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        if (item == "+1" || item == "1" || item == "+")
            signs.push_back(1);
        else if (item == "-1" || item == "-")
            signs.push_back(-1);
        else
            throw std::invalid_argument("invalid sign '" + item + "' (expected +1 or -1)");
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return PeriodicFactor(base, std::move(signs));
}

std::string PeriodicFactor::str() const {
    std::string out;
    for (std::size_t i = 0; i < signs_.size(); ++i) {
        if (i) out.push_back(',');
        out += signs_[i] > 0 ? "+1" : "-1";
    }
    return out;
}

// ---------------------------------------------------------------- operations

std::size_t count_set(const PatternSet& patterns, std::uint64_t n) {
    if (patterns.empty()) return 0;
    // Pad once with enough zeros for the longest pattern; shorter patterns skip the excess.
    const unsigned pad = patterns.max_length() - 1;
    const Word expansion = expand(n, patterns.base());
    std::vector<Digit> padded(pad, 0);
    padded.insert(padded.end(), expansion.digits().begin(), expansion.digits().end());
    std::size_t total = 0;
    for (const Word& v : patterns.words()) {
        const std::size_t skip = pad - (v.size() - 1);
        const auto vd = v.digits();
        for (std::size_t start = skip; start + vd.size() <= padded.size(); ++start)
            if (std::equal(vd.begin(), vd.end(), padded.begin() + static_cast<std::ptrdiff_t>(start))) ++total;
    }
    return total;
}

int evaluate(const PatternSet& patterns, std::uint64_t n) { return count_set(patterns, n) % 2 == 0 ? 1 : -1; }

PatternSet symmetric_difference(const PatternSet& lhs, const PatternSet& rhs) {
    if (lhs.base() != rhs.base()) throw std::invalid_argument("symmetric_difference: mixed bases");
    std::vector<Word> out;
    std::set_symmetric_difference(lhs.words().begin(), lhs.words().end(), rhs.words().begin(), rhs.words().end(),
                                  std::back_inserter(out));
    return PatternSet(lhs.base(), std::move(out));
}

PatternSet remove_leading_zeros(const PatternSet& patterns) {
    const unsigned k = patterns.base();
    WordSet set = to_word_set(patterns);
    while (true) {
        auto it = std::find_if(set.begin(), set.end(), [](const Word& w) { return w.front() == 0; });
        if (it == set.end()) break;
        const Word v = it->without_prefix(1);
        // A ⊕ {iv : i ∈ Σ_k} ⊕ {v}
        for (unsigned i = 0; i < k; ++i) toggle(set, v.prepended(static_cast<Digit>(i)));
        toggle(set, v);
    }
    return to_pattern_set(k, set);
}

PatternSet to_constant_length(const PatternSet& patterns, unsigned length) {
    if (length == 0 || length < patterns.max_length())
        throw std::invalid_argument("to_constant_length: length " + std::to_string(length) +
                                    " is shorter than the longest pattern");
    const unsigned k = patterns.base();
    WordSet set = to_word_set(patterns);
    while (true) {
        // Shortlex order puts the shortest word first.
        auto it = set.begin();
        if (it == set.end() || it->size() >= length) break;
        const Word v = *it;
        for (unsigned i = 0; i < k; ++i) toggle(set, v.prepended(static_cast<Digit>(i)));
        toggle(set, v);
    }
    return to_pattern_set(k, set);
}

bool is_self_invariant(const PatternSet& patterns) { return !remove_leading_zeros(patterns).has_trailing_zero(); }

InvariantDecomposition invariant_decomposition(const PatternSet& patterns, unsigned length) {
    if (length == 0) length = patterns.max_length();
    if (length < patterns.max_length()) throw std::invalid_argument("invariant_decomposition: length too small");
    const unsigned k = patterns.base();
    WordSet set = to_word_set(remove_leading_zeros(patterns));
    while (true) {
        auto it = std::find_if(set.begin(), set.end(), [](const Word& w) { return w.back() == 0; });
        if (it == set.end()) break;
        const Word v = it->without_suffix(1);
        // A ⊕ D(v), D(v) = {vi : i ∈ Σ_k} ∪ {v}
        for (unsigned i = 0; i < k; ++i) toggle(set, v.appended(static_cast<Digit>(i)));
        toggle(set, v);
    }
    PatternSet invariant = to_pattern_set(k, set);
    const std::uint64_t period = ipow(k, length - 1);
    std::vector<int> signs(period);
    for (std::uint64_t n = 0; n < period; ++n) signs[n] = evaluate(patterns, n) * evaluate(invariant, n);
    return {std::move(invariant), PeriodicFactor(k, std::move(signs))};
}

PeriodicFactor periodic_factor(const PatternSet& patterns, unsigned length) {
    if (length == 0 || length < patterns.max_length())
        throw std::invalid_argument("periodic_factor: operating length is shorter than the longest pattern");
    const unsigned k = patterns.base();
    const std::uint64_t period = ipow(k, length);
    std::vector<int> values(period);
    for (std::uint64_t r = 0; r < period; ++r) values[r] = evaluate(patterns, r);
    std::vector<int> signs(period);
    for (std::uint64_t r = 0; r < period; ++r) signs[r] = values[r] * values[r / k];
    return PeriodicFactor(k, std::move(signs));
}

PeriodicFactor kernel_quotient(const PatternSet& patterns, unsigned level, std::uint64_t offset) {
    const unsigned k = patterns.base();
    const std::uint64_t scale = ipow(k, level);
    if (offset >= scale) throw std::invalid_argument("kernel_quotient: offset must be below k^level");
    const std::uint64_t period = ipow(k, patterns.max_length() - 1);
    std::vector<int> signs(period);
    for (std::uint64_t n = 0; n < period; ++n) signs[n] = evaluate(patterns, scale * n + offset) * evaluate(patterns, n);
    return PeriodicFactor(k, std::move(signs));
}

bool kernel_quotient_is_periodic(const PatternSet& patterns, unsigned level, std::uint64_t offset,
                                 std::uint64_t horizon) {
    const PeriodicFactor table = kernel_quotient(patterns, level, offset);
    const std::uint64_t scale = ipow(patterns.base(), level);
    for (std::uint64_t n = 0; n < horizon; ++n)
        if (evaluate(patterns, scale * n + offset) * evaluate(patterns, n) != table(n)) return false;
    return true;
}

std::vector<Word> all_words(unsigned base, unsigned length) {
    const std::uint64_t count = ipow(base, length);
    std::vector<Word> out;
    out.reserve(count);
    for (std::uint64_t v = 0; v < count; ++v) out.push_back(expand_padded(v, base, length));
    return out;
}

PatternSet reconstruct_pattern_set(const SequenceOracle& sequence, unsigned length, unsigned base) {
    check_base(base);
    if (length == 0) throw std::invalid_argument("reconstruct_pattern_set: length must be positive");
    if (sequence(0) != 1) throw NotPatternCounting("not a pattern-counting sequence: s(0) != +1");
    const std::uint64_t count = ipow(base, length);
    std::vector<Word> members;
    for (std::uint64_t v = 1; v < count; ++v)
        if (sequence(v) == -sequence(v / base)) members.push_back(expand_padded(v, base, length));
    PatternSet result(base, std::move(members));
    const std::uint64_t horizon = count * base * base;
    for (std::uint64_t n = 0; n < horizon; ++n)
        if (evaluate(result, n) != sequence(n))
            throw NotPatternCounting("not a pattern-counting sequence of length " + std::to_string(length) +
                                     " (first mismatch at n = " + std::to_string(n) + ")");
    return result;
}

}  // namespace noncorr
