#include "noncorr/gamma.hpp"

#include <stdexcept>

namespace noncorr {

GammaTable::GammaTable(PeriodicFactor h, unsigned length, std::vector<Rational> shift_one)
    : h_(std::move(h)), length_(length), shift_one_(std::move(shift_one)) {
    if (h_.period() != ipow(h_.base(), length_))
        throw std::invalid_argument("GammaTable: periodic factor must have period k^length");
    if (shift_one_.size() != h_.period()) throw std::invalid_argument("GammaTable: table size must equal k^length");
}

unsigned trailing_top_digits(std::uint64_t r, unsigned base) {
    unsigned nu = 0;
    while (r % base == base - 1) {
        r /= base;
        ++nu;
    }
    return nu;
}

GammaTable bootstrap(const PeriodicFactor& h, unsigned length) {
    const unsigned k = h.base();
    if (length == 0) throw std::invalid_argument("bootstrap: length must be positive");
    const std::uint64_t n = ipow(k, length);
    if (h.period() != n) throw std::invalid_argument("bootstrap: periodic factor must have period k^length");
    const std::uint64_t block = n / k;

    std::vector<std::vector<std::uint64_t>> by_nu(length + 1);
    for (std::uint64_t r = 0; r < n; ++r) by_nu[trailing_top_digits(r, k)].push_back(r);

    std::vector<Rational> g(n);
    auto sign_at = [&](std::uint64_t r) { return h(r) * h((r + 1) % n); };

    for (std::uint64_t r : by_nu[0]) g[r] = Rational(sign_at(r));

    // For 1 <= ν(r) < ℓ every r' = c k^{ℓ-1} + floor(r/k) has ν(r') = ν(r) - 1.
    for (unsigned nu = 1; nu < length; ++nu) {
        for (std::uint64_t r : by_nu[nu]) {
            Rational sum;
            for (unsigned c = 0; c < k; ++c) sum += g[c * block + r / k];
            g[r] = sum * Rational(sign_at(r), k);
        }
    }

    // r = k^ℓ - 1 appears in its own sum (c = k-1); solve the one-unknown fixed point
    //   γ = (c0/k) (S + γ),  c0 = h(k^ℓ-1) h(0),  S = Σ_{i=0}^{k-2} γ_{k^{ℓ-1}(i+1)-1}
    // giving γ = S / (k c0 - 1).
    const std::uint64_t top = n - 1;
    Rational rest;
    for (unsigned i = 0; i + 1 < k; ++i) rest += g[block * (i + 1) - 1];
    const std::int64_t c0 = sign_at(top);
    g[top] = rest / Rational(static_cast<std::int64_t>(k) * c0 - 1);

    return GammaTable(h, length, std::move(g));
}

GammaTable bootstrap(const PatternSet& patterns, unsigned length) {
    return bootstrap(periodic_factor(patterns, length), length);
}

CorrelationEngine::CorrelationEngine(GammaTable table) : table_(std::move(table)) {}

CorrelationEngine::CorrelationEngine(const PatternSet& patterns, unsigned length)
    : table_(bootstrap(patterns, length == 0 ? patterns.max_length() : length)) {}

const std::vector<Rational>& CorrelationEngine::restricted(std::uint64_t m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;

    const unsigned k = base();
    const std::uint64_t n = modulus();
    const std::uint64_t block = n / k;
    const PeriodicFactor& h = table_.factor();
    std::vector<Rational> out(n);

    if (m == 0) {
        out.assign(n, Rational(1));
    } else if (m == 1) {
        out = table_.shift_one_values();
    } else {
        // m = k m' + i; γ_r(m) = h(r) h(r+m)/k Σ_{r'} γ_{r'}(m' + e'), e' = floor((i + r mod k)/k).
        // m' + e' < m for m >= 2, so the recursion is well founded.
        const std::uint64_t i = m % k;
        const std::uint64_t mp = m / k;
        std::vector<Rational> sums[2];
        for (unsigned e = 0; e < 2; ++e) {
            if (e == 1 && i == 0) break;  // e' = 1 needs i + j >= k, impossible when i = 0
            const std::vector<Rational>& prev = restricted(mp + e);
            sums[e].assign(block, Rational());
            for (std::uint64_t t = 0; t < block; ++t)
                for (unsigned c = 0; c < k; ++c) sums[e][t] += prev[c * block + t];
        }
        const std::uint64_t m_mod = m % n;
        for (std::uint64_t r = 0; r < n; ++r) {
            const unsigned e = static_cast<unsigned>((i + r % k) / k);
            const Rational& s = sums[e][r / k];
            if (s.is_zero()) continue;
            out[r] = s * Rational(h(r) * h((r + m_mod) % n), k);
        }
    }
    return memo_.emplace(m, std::move(out)).first->second;
}

const Rational& CorrelationEngine::gamma_r(std::uint64_t r, std::uint64_t m) {
    if (r >= modulus()) throw std::invalid_argument("gamma_r: residue out of range");
    return restricted(m)[r];
}

Rational CorrelationEngine::gamma(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("gamma: m must be at least 1 (gamma(0) = 1 by definition)");
    Rational sum;
    for (const Rational& v : restricted(m)) sum += v;
    return sum / Rational(static_cast<std::int64_t>(modulus()));
}

Rational gamma(const PatternSet& patterns, std::uint64_t m) { return CorrelationEngine(patterns).gamma(m); }

Rational gamma_r(const PatternSet& patterns, std::uint64_t r, std::uint64_t m) {
    return CorrelationEngine(patterns).gamma_r(r, m);
}

}  // namespace noncorr
