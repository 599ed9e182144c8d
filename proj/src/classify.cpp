#include "noncorr/classify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace noncorr {

std::string to_string(CensusFilter filter) { return filter == CensusFilter::All ? "all" : "self-invariant"; }

CensusFilter parse_census_filter(std::string_view text) {
    if (text == "all") return CensusFilter::All;
    if (text == "self-invariant") return CensusFilter::SelfInvariant;
    throw std::invalid_argument("unknown census filter '" + std::string(text) + "'");
}

bool CensusReport::operator==(const CensusReport& other) const {
    return base == other.base && length == other.length && filter == other.filter && candidates == other.candidates &&
           noncorrelated == other.noncorrelated && noncorrelated_by_length == other.noncorrelated_by_length &&
           sets == other.sets && max_stored_vectors == other.max_stored_vectors &&
           total_expansions == other.total_expansions;
}

std::vector<Word> self_invariant_pool(unsigned max_length) {
    std::vector<Word> pool;
    for (unsigned len = 1; len <= max_length; ++len)
        for (const Word& w : all_words(2, len))
            if (w.front() == 1 && w.back() == 1) pool.push_back(w);
    std::sort(pool.begin(), pool.end());
    return pool;
}

namespace {

PatternSet subset_of(std::span<const Word> pool, std::uint64_t mask) {
    std::vector<Word> words;
    for (std::size_t b = 0; b < pool.size(); ++b)
        if ((mask >> b) & 1U) words.push_back(pool[b]);
    return PatternSet(2, std::move(words));
}

// For a constant-length set C, h(r) = -1 exactly when the ℓ-digit word of r lies in C.
PeriodicFactor factor_from_mask(unsigned length, std::uint64_t mask) {
    const std::uint64_t n = std::uint64_t{1} << length;
    std::vector<int> signs(n, 1);
    for (std::uint64_t r = 1; r < n; ++r)
        if ((mask >> (r - 1)) & 1U) signs[r] = -1;
    return PeriodicFactor(2, std::move(signs));
}

struct CandidateOutcome {
    bool noncorrelated = false;
    std::uint64_t stored = 0;
    std::uint64_t expansions = 0;
    double seconds = 0;
};

unsigned sequence_length(const PatternSet& patterns) {
    const PatternSet clean = remove_leading_zeros(patterns);
    return clean.empty() ? 0 : clean.max_length();
}

}  // namespace

CensusReport census(const CensusOptions& options) {
    if (options.base != 2) throw std::invalid_argument("census supports base 2 only");
    const unsigned len = options.length;
    std::vector<Word> pool;
    std::uint64_t count = 0;
    if (options.filter == CensusFilter::All) {
        if (len < 1 || len > 5) throw std::invalid_argument("census length must lie in [1, 5]");
        count = std::uint64_t{1} << ((std::uint64_t{1} << len) - 1);
    } else {
        if (len < 1 || len > 6) throw std::invalid_argument("self-invariant census length must lie in [1, 6]");
        pool = self_invariant_pool(len);
        count = std::uint64_t{1} << pool.size();
    }

    auto task = [&](std::uint64_t mask) {
        const auto start = std::chrono::steady_clock::now();
        Decision d = options.filter == CensusFilter::All ? decide(factor_from_mask(len, mask), len)
                                                         : decide(subset_of(pool, mask));
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        return CandidateOutcome{d.noncorrelated(), d.elements_created, d.expansions, elapsed.count()};
    };
    const auto outcomes = parallel_map<CandidateOutcome>(count, options.workers, task);

    CensusReport report;
    report.base = 2;
    report.length = len;
    report.filter = options.filter;
    report.candidates = count;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        const CandidateOutcome& o = outcomes[mask];
        report.max_stored_vectors = std::max(report.max_stored_vectors, o.stored);
        report.total_expansions += o.expansions;
        (o.noncorrelated ? report.timing.noncorrelated_seconds : report.timing.correlated_seconds) += o.seconds;
        if (!o.noncorrelated) continue;
        ++report.noncorrelated;
        PatternSet set = options.filter == CensusFilter::All ? PatternSet::from_mask(len, mask) : subset_of(pool, mask);
        ++report.noncorrelated_by_length[sequence_length(set)];
        if (options.collect_list)
            report.sets.push_back(options.filter == CensusFilter::All ? std::move(set) : remove_leading_zeros(set));
    }
    return report;
}

// ----------------------------------------------------------------- saturation

SaturationResult check_saturation(const PatternSet& patterns) {
    const PatternSet clean = remove_leading_zeros(patterns);
    if (clean.has_trailing_zero()) throw std::invalid_argument("saturation is defined for self-invariant sets only");
    if (clean.empty() || clean.max_length() < 2)
        throw std::invalid_argument("saturation needs a longest pattern of length at least 2");
    const unsigned k = clean.base();
    const unsigned len = clean.max_length();

    for (const Word& u : all_words(k, len - 2)) {
        // quotient[j] marks { i : i u j ∈ A }, the length-ℓ part of A(uj)^{-1}
        std::vector<std::vector<bool>> quotient(k, std::vector<bool>(k, false));
        for (unsigned j = 0; j < k; ++j)
            for (unsigned i = 0; i < k; ++i)
                quotient[j][i] = clean.contains(u.prepended(static_cast<Digit>(i)).appended(static_cast<Digit>(j)));
        for (unsigned i0 = 0; i0 < k; ++i0) {
            for (unsigned i1 = i0 + 1; i1 < k; ++i1) {
                unsigned differ = 0;
                for (unsigned i = 0; i < k; ++i) differ += quotient[i0][i] != quotient[i1][i];
                if (2 * differ != k) return {false, SaturationViolation{u, static_cast<Digit>(i0), static_cast<Digit>(i1)}};
            }
        }
    }
    return {true, std::nullopt};
}

bool is_saturated(const PatternSet& patterns) { return check_saturation(patterns).saturated; }

// ------------------------------------------------------------------- Hadamard

HadamardMatrix::HadamardMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
    for (const auto& row : entries_) {
        if (row.size() != entries_.size()) throw std::invalid_argument("Hadamard matrix must be square");
        for (int v : row)
            if (v != 1 && v != -1) throw std::invalid_argument("Hadamard matrix entries must be +1 or -1");
    }
}

bool HadamardMatrix::is_hadamard() const {
    const unsigned k = dimension();
    for (unsigned a = 0; a < k; ++a)
        for (unsigned b = 0; b < k; ++b) {
            int dot = 0;
            for (unsigned i = 0; i < k; ++i) dot += entries_[i][a] * entries_[i][b];
            if (dot != (a == b ? static_cast<int>(k) : 0)) return false;
        }
    return true;
}

bool HadamardMatrix::is_normalized() const {
    for (unsigned i = 0; i < dimension(); ++i)
        if (entries_[0][i] != 1 || entries_[i][0] != 1) return false;
    return true;
}

HadamardMatrix HadamardMatrix::permuted(std::span<const unsigned> row_order, std::span<const unsigned> col_order) const {
    const unsigned k = dimension();
    if (row_order.size() != k || col_order.size() != k) throw std::invalid_argument("permutation size mismatch");
    std::vector<std::vector<int>> out(k, std::vector<int>(k));
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) out[i][j] = entries_.at(row_order[i]).at(col_order[j]);
    return HadamardMatrix(std::move(out));
}

HadamardMatrix sylvester_hadamard(unsigned k) {
    if (k == 0 || !std::has_single_bit(k)) throw std::invalid_argument("Sylvester construction needs a power of two");
    std::vector<std::vector<int>> m(k, std::vector<int>(k));
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) m[i][j] = std::popcount(i & j) % 2 == 0 ? 1 : -1;
    return HadamardMatrix(std::move(m));
}

PatternSet saturated_family_from_hadamard(std::span<const HadamardMatrix> per_u, unsigned length) {
    if (per_u.empty()) throw std::invalid_argument("need at least one Hadamard matrix");
    const unsigned k = per_u.front().dimension();
    check_base(k);
    if (length < 2) throw std::invalid_argument("saturated family needs length >= 2");
    const std::vector<Word> middles = all_words(k, length - 2);
    if (per_u.size() != middles.size()) throw std::invalid_argument("need one Hadamard matrix per middle word");
    std::vector<Word> words;
    for (std::size_t idx = 0; idx < middles.size(); ++idx) {
        const HadamardMatrix& m = per_u[idx];
        if (m.dimension() != k || !m.is_normalized() || !m.is_hadamard())
            throw std::invalid_argument("matrices must be normalized Hadamard matrices of equal dimension");
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j)
                if (m(i, j) == -1)
                    words.push_back(middles[idx].prepended(static_cast<Digit>(i)).appended(static_cast<Digit>(j)));
    }
    return PatternSet(k, std::move(words));
}

PatternSet saturated_family_from_hadamard(const HadamardMatrix& matrix, unsigned length) {
    check_base(matrix.dimension());
    if (length < 2) throw std::invalid_argument("saturated family needs length >= 2");
    const std::vector<HadamardMatrix> per_u(ipow(matrix.dimension(), length - 2), matrix);
    return saturated_family_from_hadamard(per_u, length);
}

PatternSet random_saturated(unsigned base, unsigned length, std::mt19937_64& rng) {
    const HadamardMatrix seed = sylvester_hadamard(base);
    std::vector<HadamardMatrix> per_u;
    const std::uint64_t middles = ipow(base, length - 2);
    for (std::uint64_t idx = 0; idx < middles; ++idx) {
        std::vector<unsigned> rows(base), cols(base);
        std::iota(rows.begin(), rows.end(), 0U);
        std::iota(cols.begin(), cols.end(), 0U);
        std::shuffle(rows.begin() + 1, rows.end(), rng);
        std::shuffle(cols.begin() + 1, cols.end(), rng);
        per_u.push_back(seed.permuted(rows, cols));
    }
    PatternSet top = saturated_family_from_hadamard(per_u, length);
    std::vector<Word> words(top.words().begin(), top.words().end());
    std::bernoulli_distribution coin(0.5);
    for (unsigned len = 1; len < length; ++len)
        for (const Word& w : all_words(base, len))
            if (w.front() != 0 && w.back() != 0 && coin(rng)) words.push_back(w);
    return PatternSet(base, std::move(words));
}

// ---------------------------------------------------- saturation equivalence

EquivalenceReport check_saturation_equivalence(unsigned max_length, unsigned workers) {
    if (max_length < 2 || max_length > 6) throw std::invalid_argument("saturation equivalence check needs 2 <= length <= 6");
    const std::vector<Word> pool = self_invariant_pool(max_length);
    const std::uint64_t count = std::uint64_t{1} << pool.size();

    struct Outcome {
        unsigned length = 0;
        bool noncorrelated = false;
        bool saturated = false;
    };
    auto task = [&](std::uint64_t mask) {
        const PatternSet set = subset_of(pool, mask);
        Outcome o;
        if (set.empty() || set.max_length() < 2) return o;
        o.length = set.max_length();
        o.noncorrelated = decide(set).noncorrelated();
        o.saturated = is_saturated(set);
        return o;
    };
    const auto outcomes = parallel_map<Outcome>(count, workers, task);

    EquivalenceReport report;
    report.max_length = max_length;
    for (unsigned len = 2; len <= max_length; ++len) report.strata[len];
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        const Outcome& o = outcomes[mask];
        if (o.length < 2) continue;
        EquivalenceStratum& s = report.strata[o.length];
        ++s.candidates;
        s.noncorrelated += o.noncorrelated;
        s.saturated += o.saturated;
        if (o.noncorrelated != o.saturated) report.counterexamples.push_back(subset_of(pool, mask));
    }
    return report;
}

// ---------------------------------------------------------------------- twist

PatternSet twist(const PatternSet& patterns, const PeriodicFactor& factor, unsigned length) {
    if (length == 0) length = patterns.max_length();
    const unsigned k = patterns.base();
    if (factor.base() != k) throw std::invalid_argument("twist: periodic factor has the wrong base");
    const std::uint64_t period = ipow(k, length - 1);
    if (period % factor.period() != 0)
        throw std::invalid_argument("twist: period must divide k^(length-1) = " + std::to_string(period));
    if (factor(0) != 1) throw std::invalid_argument("twist: periodic factor must satisfy p(0) = +1");
    return reconstruct_pattern_set([&](std::uint64_t n) { return evaluate(patterns, n) * factor(n); }, length, k);
}

// ------------------------------------------------- invariant-part evidence

InvariantPartEvidence invariant_part_evidence(std::span<const PatternSet> noncorrelated_sets, unsigned workers) {
    const auto verdicts = parallel_map<char>(noncorrelated_sets.size(), workers, [&](std::uint64_t idx) {
        return static_cast<char>(decide(invariant_decomposition(noncorrelated_sets[idx]).invariant).noncorrelated());
    });
    InvariantPartEvidence evidence;
    evidence.checked = noncorrelated_sets.size();
    for (std::size_t idx = 0; idx < verdicts.size(); ++idx)
        if (!verdicts[idx]) evidence.counterexamples.push_back(noncorrelated_sets[idx]);
    return evidence;
}

}  // namespace noncorr
