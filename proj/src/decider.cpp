#include "noncorr/decider.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "noncorr/errors.hpp"

namespace noncorr {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// v -= factor * row, skipping zero entries of row.
void subtract_scaled(std::vector<Rational>& v, const Rational& factor, const std::vector<Rational>& row) {
    for (std::size_t c = 0; c < row.size(); ++c)
        if (!row[c].is_zero()) v[c] -= factor * row[c];
}

}  // namespace

// -------------------------------------------------------------- EchelonSpace

EchelonSpace::EchelonSpace(std::size_t dimension) : dimension_(dimension), pivot_row_(dimension, npos) {}

std::size_t EchelonSpace::reduce(std::vector<Rational>& v) const {
    std::size_t first = dimension_;
    for (std::size_t c = 0; c < dimension_; ++c) {
        if (v[c].is_zero()) continue;
        if (pivot_row_[c] == npos) {
            if (first == dimension_) first = c;
            continue;
        }
        // Rows are fully reduced, so clearing column c leaves the other pivot columns at zero.
        const Rational factor = v[c];
        subtract_scaled(v, factor, rows_[pivot_row_[c]]);
    }
    return first;
}

bool EchelonSpace::contains(std::span<const Rational> vector) const {
    if (vector.size() != dimension_) throw std::invalid_argument("EchelonSpace: dimension mismatch");
    std::vector<Rational> v(vector.begin(), vector.end());
    return reduce(v) == dimension_;
}

bool EchelonSpace::insert(std::span<const Rational> vector) {
    if (vector.size() != dimension_) throw std::invalid_argument("EchelonSpace: dimension mismatch");
    std::vector<Rational> v(vector.begin(), vector.end());
    const std::size_t pivot = reduce(v);
    if (pivot == dimension_) return false;
    if (rows_.size() == dimension_) throw InternalConsistencyError("EchelonSpace: rank exceeds dimension");

    const Rational lead = v[pivot];
    for (Rational& x : v)
        if (!x.is_zero()) x /= lead;
    for (auto& row : rows_) {
        if (row[pivot].is_zero()) continue;
        const Rational factor = row[pivot];
        subtract_scaled(row, factor, v);
    }
    pivot_row_[pivot] = rows_.size();
    rows_.push_back(std::move(v));
    return true;
}

// ----------------------------------------------------------------- expansion

std::vector<BasisElement> expand_element(const BasisElement& element, const PeriodicFactor& h, unsigned length) {
    const unsigned k = h.base();
    const std::uint64_t n = ipow(k, length);
    if (h.period() != n) throw std::invalid_argument("expand_element: periodic factor must have period k^length");
    if (element.residue == 0 || element.residue > n)
        throw std::invalid_argument("expand_element: residue must lie in [1, k^length]");
    if (element.weights.size() != 2 * n) throw std::invalid_argument("expand_element: weight vector has wrong size");

    const std::uint64_t q = element.residue;
    const unsigned i = static_cast<unsigned>(q % k);
    const std::uint64_t block = n / k;

    // Λ_i(η_q S^e γ_r) = h(r) h(r+q+e)/k Σ_{q'} Σ_{r'} η_{q'} S^{e'} γ_{r'}; the (r', e') part
    // does not depend on q', so every bucket receives the same vector.
    std::vector<Rational> image(2 * n);
    for (std::uint64_t r = 0; r < n; ++r) {
        for (unsigned e = 0; e < 2; ++e) {
            const Rational& w = element.weights[grid_index(r, e)];
            if (w.is_zero()) continue;
            const Rational contribution = w * Rational(h(r) * h((r + q + e) % n), k);
            const unsigned e_next = static_cast<unsigned>((i + e + r % k) / k);
            for (unsigned c = 0; c < k; ++c) image[grid_index(c * block + r / k, e_next)] += contribution;
        }
    }

    std::map<std::uint64_t, std::vector<Rational>> buckets;
    for (unsigned c = 0; c < k; ++c) buckets.emplace(c * block + q / k, image);
    if (auto zero = buckets.find(0); zero != buckets.end()) {
        auto [top, inserted] = buckets.try_emplace(n, zero->second);
        if (!inserted)
            for (std::size_t idx = 0; idx < top->second.size(); ++idx) top->second[idx] += zero->second[idx];
    }

    std::vector<Digit> provenance = element.provenance;
    provenance.push_back(static_cast<Digit>(i));
    std::vector<BasisElement> children;
    children.reserve(buckets.size());
    for (auto& [residue, weights] : buckets) children.push_back({residue, std::move(weights), provenance});
    return children;
}

Rational evaluate_at_zero(std::span<const Rational> weights, const GammaTable& table) {
    if (weights.size() != 2 * table.modulus()) throw std::invalid_argument("evaluate_at_zero: wrong vector size");
    Rational total;
    for (std::uint64_t r = 0; r < table.modulus(); ++r) {
        const Rational& w0 = weights[grid_index(r, 0)];
        const Rational& w1 = weights[grid_index(r, 1)];
        if (!w0.is_zero()) total += w0;
        if (!w1.is_zero()) total += w1 * table.shift_one(r);
    }
    return total;
}

std::uint64_t witness_from_provenance(std::span<const Digit> digits, unsigned base) {
    std::uint64_t m = 0;
    std::uint64_t place = 1;
    bool place_overflow = false;
    for (Digit d : digits) {
        if (d != 0) {
            std::uint64_t term;
            if (place_overflow || __builtin_mul_overflow(place, d, &term) || __builtin_add_overflow(m, term, &m))
                throw std::overflow_error("witness shift exceeds 64 bits");
        }
        if (!place_overflow && __builtin_mul_overflow(place, base, &place)) place_overflow = true;
    }
    return m;
}

std::uint64_t capacity_bound(unsigned base, unsigned length) {
    const std::uint64_t n = ipow(base, length);
    return 2 * n * (n + 1);
}

// ------------------------------------------------------------------- decide

Decision decide(const PeriodicFactor& h, unsigned length, const DecideOptions& options) {
    if (options.seed_scale.is_zero()) throw std::invalid_argument("decide: seed scale must be nonzero");
    const unsigned k = h.base();
    const std::uint64_t n = ipow(k, length);
    const GammaTable table = bootstrap(h, length);

    std::vector<EchelonSpace> spaces(n + 1, EchelonSpace(2 * n));
    std::deque<BasisElement> queue;
    Decision decision;

    // Seeds f_t = η_t Σ_{r<k^ℓ} γ_r, 1 <= t <= k^ℓ (the 1/k^ℓ of the mean is dropped).
    for (std::uint64_t t = 1; t <= n; ++t) {
        BasisElement seed{t, std::vector<Rational>(2 * n), {}};
        for (std::uint64_t r = 0; r < n; ++r) seed.weights[grid_index(r, 0)] = options.seed_scale;
        spaces[t].insert(seed.weights);
        ++decision.elements_created;
        queue.push_back(std::move(seed));
    }

    while (!queue.empty()) {
        BasisElement element = std::move(queue.front());
        queue.pop_front();
        ++decision.expansions;
        for (BasisElement& child : expand_element(element, h, length)) {
            if (child.residue == 0) {
                const Rational value = evaluate_at_zero(child.weights, table);
                if (value.is_zero()) continue;

                // The child is Λ_{i_s}...Λ_{i_1} of a seed evaluated at 0, i.e. scale * k^ℓ γ(m).
                const std::uint64_t m = witness_from_provenance(child.provenance, k);
                CorrelationEngine engine(table);
                const Rational expected = value / (options.seed_scale * Rational(static_cast<std::int64_t>(n)));
                const Rational recomputed = engine.gamma(m);
                if (m == 0 || recomputed != expected)
                    throw InternalConsistencyError("witness m = " + std::to_string(m) + " reports gamma " +
                                                   expected.str() + " but the recursion gives " + recomputed.str());
                decision.verdict = Decision::Verdict::Correlated;
                decision.witness = m;
                decision.gamma_at_witness = recomputed;
                if (options.minimal_witness) {
                    const std::uint64_t limit = std::min<std::uint64_t>(m, n * n);
                    for (std::uint64_t candidate = 1; candidate < limit; ++candidate) {
                        Rational g = engine.gamma(candidate);
                        if (!g.is_zero()) {
                            decision.witness = candidate;
                            decision.gamma_at_witness = std::move(g);
                            break;
                        }
                    }
                }
                return decision;
            }
            if (spaces[child.residue].insert(child.weights)) {
                ++decision.elements_created;
                queue.push_back(std::move(child));
            }
        }
    }
    return decision;
}

Decision decide(const PatternSet& patterns, unsigned length, const DecideOptions& options) {
    if (length == 0) length = patterns.max_length();
    return decide(periodic_factor(patterns, length), length, options);
}

}  // namespace noncorr
