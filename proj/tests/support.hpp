#pragma once

// Independent reference implementations used as test oracles. None of them calls
// into the library beyond the basic value types.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "noncorr/pattern_set.hpp"

namespace oracle {

inline std::string digits_of(std::uint64_t n, unsigned k) {
    std::string s;
    while (n > 0) {
        s.insert(s.begin(), static_cast<char>('0' + n % k));
        n /= k;
    }
    return s;
}

/// Overlapping occurrences via std::string::find.
inline std::size_t naive_count(const std::string& v, const std::string& w) {
    if (v.empty()) return w.size() + 1;
    std::size_t count = 0;
    for (std::size_t pos = w.find(v); pos != std::string::npos; pos = w.find(v, pos + 1)) ++count;
    return count;
}

inline int naive_evaluate(const std::vector<std::string>& set, std::uint64_t n, unsigned k) {
    std::size_t longest = 1;
    for (const auto& v : set) longest = std::max(longest, v.size());
    const std::string padded = std::string(longest - 1, '0') + digits_of(n, k);
    std::size_t total = 0;
    for (const auto& v : set) total += naive_count(v, padded);
    return total % 2 ? -1 : 1;
}

inline std::vector<std::string> words_of(const noncorr::PatternSet& set) {
    std::vector<std::string> out;
    for (const auto& w : set.words()) out.push_back(w.str());
    return out;
}

inline std::uint64_t power(std::uint64_t k, unsigned e) {
    std::uint64_t p = 1;
    while (e--) p *= k;
    return p;
}

/// Exact restricted coefficients γ_r(m) from the block equation
///   γ_r(m) = h(r) h(r+m) / k · Σ_c γ_{c k^{ℓ-1} + ⌊r/k⌋}(⌊(r mod k + m)/k⌋),
/// with m = 1 solved as a dense linear system and m >= 2 by plain recursion.
class RestrictedOracle {
public:
    RestrictedOracle(const noncorr::PatternSet& set, unsigned length) : k_(set.base()), len_(length) {
        n_ = power(k_, len_);
        const auto words = words_of(set);
        // h from direct evaluation, independent of the library's periodic factor.
        for (std::uint64_t r = 0; r < n_; ++r)
            h_.push_back(r == 0 ? 1 : naive_evaluate(words, r, k_) * naive_evaluate(words, r / k_, k_));
        solve_shift_one();
    }

    std::uint64_t modulus() const { return n_; }
    int h(std::uint64_t r) const { return h_[r % n_]; }

    mpq_class restricted(std::uint64_t r, std::uint64_t m) {
        if (m == 0) return 1;
        if (m == 1) return shift_one_[r];
        const auto key = std::make_pair(r, m);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const std::uint64_t next = (r % k_ + m) / k_;
        mpq_class sum = 0;
        for (std::uint64_t c = 0; c < k_; ++c) sum += restricted(c * (n_ / k_) + r / k_, next);
        mpq_class value = sum * h(r) * h(r + m) / k_;
        memo_.emplace(key, value);
        return value;
    }

    mpq_class gamma(std::uint64_t m) {
        mpq_class sum = 0;
        for (std::uint64_t r = 0; r < n_; ++r) sum += restricted(r, m);
        return sum / n_;
    }

private:
    void solve_shift_one() {
        // (I - M) x = b, Gauss-Jordan over Q.
        const std::size_t n = n_;
        std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1, 0));
        for (std::uint64_t r = 0; r < n; ++r) {
            a[r][r] = 1;
            const mpq_class f = mpq_class(h(r) * h(r + 1), k_);
            const bool carry = r % k_ == k_ - 1;
            for (std::uint64_t c = 0; c < k_; ++c) {
                const std::uint64_t target = c * (n_ / k_) + r / k_;
                if (carry)
                    a[r][target] -= f;
                else
                    a[r][n] += f;
            }
        }
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && a[pivot][col] == 0) ++pivot;
            if (pivot == n) throw std::logic_error("singular shift-one system");
            std::swap(a[pivot], a[col]);
            const mpq_class inv = 1 / a[col][col];
            for (auto& x : a[col]) x *= inv;
            for (std::size_t row = 0; row < n; ++row) {
                if (row == col || a[row][col] == 0) continue;
                const mpq_class f = a[row][col];
                for (std::size_t j = col; j <= n; ++j) a[row][j] -= f * a[col][j];
            }
        }
        for (std::size_t r = 0; r < n; ++r) shift_one_.push_back(a[r][n]);
    }

    unsigned k_;
    unsigned len_;
    std::uint64_t n_ = 0;
    std::vector<int> h_;
    std::vector<mpq_class> shift_one_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, mpq_class> memo_;
};

/// Binary saturation in its Hadamard-free form: every word 1u1 with |u| = ℓ-2 is present.
inline bool binary_saturated(const noncorr::PatternSet& set) {
    const unsigned len = set.max_length();
    for (std::uint64_t u = 0; u < power(2, len - 2); ++u) {
        std::string mid;
        for (unsigned b = len - 2; b-- > 0;) mid.push_back(static_cast<char>('0' + ((u >> b) & 1)));
        if (!set.contains(noncorr::Word::parse("1" + mid + "1", 2))) return false;
    }
    return true;
}

inline noncorr::PatternSet random_set(unsigned k, unsigned max_len, std::mt19937_64& rng, unsigned max_words = 5) {
    std::uniform_int_distribution<unsigned> count(0, max_words), len(1, max_len), digit(0, k - 1);
    std::vector<noncorr::Word> words;
    const unsigned target = count(rng);
    while (words.size() < target) {
        std::vector<noncorr::Digit> d(len(rng));
        for (auto& x : d) x = static_cast<noncorr::Digit>(digit(rng));
        noncorr::Word w(d, k);
        if (!w.is_all_zero()) words.push_back(w);
    }
    return noncorr::PatternSet(k, words);
}

}  // namespace oracle
