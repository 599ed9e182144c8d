#include "noncorr/suites.hpp"

#include <stdexcept>

#include "noncorr/classify.hpp"
#include "noncorr/decider.hpp"
#include "noncorr/gamma.hpp"
#include "noncorr/oracle.hpp"

namespace noncorr {

void SuiteResult::expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition) failures.push_back(what);
}

PatternSet random_pattern_set(unsigned base, unsigned max_length, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> count_dist(0, 6);
    std::uniform_int_distribution<unsigned> len_dist(1, max_length);
    std::uniform_int_distribution<unsigned> digit_dist(0, base - 1);
    std::vector<Word> words;
    const unsigned count = count_dist(rng);
    while (words.size() < count) {
        std::vector<Digit> digits(len_dist(rng));
        for (Digit& d : digits) d = static_cast<Digit>(digit_dist(rng));
        Word w(std::move(digits), base);
        if (!w.is_all_zero()) words.push_back(std::move(w));
    }
    return PatternSet(base, std::move(words));
}

SuiteResult census_suite(unsigned workers) {
    SuiteResult result{"theorem-a", 0, {}, {}};
    CensusOptions options;
    options.length = 4;
    options.collect_list = true;
    options.workers = workers;
    const CensusReport report = census(options);
    result.expect(report.candidates == 32768, "candidate count " + std::to_string(report.candidates) + " != 32768");
    result.expect(report.noncorrelated == 2272,
                  "noncorrelated count " + std::to_string(report.noncorrelated) + " != 2272");
    result.expect(report.max_stored_vectors <= capacity_bound(2, 4), "stored vectors exceed the capacity bound");

    // Every noncorrelated verdict is swept at the exact level: γ(m) = 0 for 1 <= m <= k^{ℓ+2}.
    const std::uint64_t sweep = ipow(2, 4 + 2);
    for (const PatternSet& set : report.sets) {
        CorrelationEngine engine(set, 4);
        bool zero = true;
        for (std::uint64_t m = 1; m <= sweep && zero; ++m) zero = engine.gamma(m).is_zero();
        result.expect(zero, "noncorrelated set {" + set.str() + "} has a nonzero coefficient");
    }

    const InvariantPartEvidence evidence = invariant_part_evidence(report.sets, workers);
    result.notes.push_back("invariant-part evidence: " + std::to_string(evidence.checked) + " noncorrelated sets, " +
                           std::to_string(evidence.counterexamples.size()) + " with a correlated invariant part");
    for (const PatternSet& c : evidence.counterexamples) result.notes.push_back("  counterexample {" + c.str() + "}");
    std::string strata;
    for (const auto& [len, count] : report.noncorrelated_by_length)
        strata += " " + std::to_string(len) + ":" + std::to_string(count);
    result.notes.push_back("noncorrelated by exact length:" + strata);
    return result;
}

SuiteResult equivalence_suite(unsigned workers) {
    SuiteResult result{"theorem-c", 0, {}, {}};
    const EquivalenceReport report = check_saturation_equivalence(5, workers);
    result.expect(report.holds(), std::to_string(report.counterexamples.size()) + " counterexamples");
    for (const PatternSet& c : report.counterexamples) result.failures.push_back("counterexample {" + c.str() + "}");
    const std::map<unsigned, std::uint64_t> expected{{2, 2}, {3, 4}, {4, 16}, {5, 256}};
    for (const auto& [len, count] : expected) {
        const auto it = report.strata.find(len);
        const std::uint64_t got = it == report.strata.end() ? 0 : it->second.noncorrelated;
        result.expect(got == count, "length " + std::to_string(len) + ": " + std::to_string(got) +
                                        " noncorrelated, expected " + std::to_string(count));
    }
    std::uint64_t total = 0;
    for (const auto& [len, s] : report.strata) total += s.candidates;
    result.notes.push_back("self-invariant candidates of length 2.." + std::to_string(report.max_length) + ": " +
                           std::to_string(total));
    return result;
}

SuiteResult saturated_suite(std::uint64_t seed, unsigned instances) {
    SuiteResult result{"saturated-props", 0, {}, {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> binary_len(2, 5);
    std::uniform_int_distribution<unsigned> quaternary_len(2, 3);
    for (unsigned idx = 0; idx < instances; ++idx) {
        const bool binary = idx % 2 == 0;
        const unsigned k = binary ? 2 : 4;
        const unsigned len = binary ? binary_len(rng) : quaternary_len(rng);
        const PatternSet set = random_saturated(k, len, rng);
        const std::string tag = "k=" + std::to_string(k) + " {" + set.str() + "}: ";

        result.expect(is_saturated(set), tag + "generator produced a non-saturated set");
        result.expect(decide(set).noncorrelated(), tag + "declared correlated");

        for (const Word& u : all_words(k, len - 2))
            for (unsigned j0 = 0; j0 < k; ++j0)
                for (unsigned j1 = 0; j1 < k; ++j1)
                    if (j0 != j1)
                        result.expect(check_cancellation(set, u, static_cast<Digit>(j0), static_cast<Digit>(j1)) == 0,
                                      tag + "cancellation sum nonzero at u=" + u.str());

        CorrelationEngine engine(set, len);
        for (std::uint64_t m = 1; m <= 2 * k; ++m)
            for (std::uint64_t r = 0; r < engine.modulus(); ++r)
                result.expect(engine.gamma_r(r, m) == sat_gamma_closed_form(set, r, m),
                              tag + "closed form mismatch at r=" + std::to_string(r) + ", m=" + std::to_string(m));
    }
    return result;
}

SuiteResult kernel_suite(std::uint64_t seed, unsigned instances, std::uint64_t horizon) {
    SuiteResult result{"kernel-props", 0, {}, {}};
    std::mt19937_64 rng(seed);
    for (unsigned idx = 0; idx < instances; ++idx) {
        const unsigned k = idx % 10 < 7 ? 2 : 3;
        const PatternSet set = random_pattern_set(k, k == 2 ? 4 : 3, rng);
        const unsigned len = set.max_length();
        const std::string tag = "k=" + std::to_string(k) + " {" + set.str() + "}: ";

        // Direct evaluation, far enough to cover k^2 n + s for n < horizon.
        const std::uint64_t reach = k * k * horizon;
        std::vector<int> a(reach);
        for (std::uint64_t n = 0; n < reach; ++n) a[n] = evaluate(set, n);

        // Kernel quotients at levels 1 and 2 have period k^{ℓ-1}.
        for (unsigned level = 1; level <= 2; ++level) {
            const std::uint64_t scale = ipow(k, level);
            for (std::uint64_t s = 0; s < scale; ++s) {
                const PeriodicFactor q = kernel_quotient(set, level, s);
                bool periodic = q.period() == ipow(k, len - 1);
                for (std::uint64_t n = 0; n < horizon && periodic; ++n) periodic = a[scale * n + s] * a[n] == q(n);
                result.expect(periodic, tag + "kernel quotient not periodic at level " + std::to_string(level) +
                                            ", offset " + std::to_string(s));
            }
        }

        // h has period k^ℓ, also when read at a larger operating length.
        for (unsigned l = len; l <= len + 1; ++l) {
            const PeriodicFactor h = periodic_factor(set, l);
            bool ok = true;
            for (std::uint64_t n = 1; n < horizon && ok; ++n) ok = a[n] * a[n / k] == h(n);
            result.expect(ok, tag + "h not periodic at length " + std::to_string(l));
        }

        // Canonical forms define the same sequence and are unique.
        const PatternSet clean = remove_leading_zeros(set);
        const PatternSet constant = to_constant_length(set, len);
        result.expect(!clean.has_leading_zero(), tag + "leading zero survived");
        result.expect(constant.has_constant_length(len), tag + "constant-length form has mixed lengths");
        bool same = true;
        for (std::uint64_t n = 0; n < horizon && same; ++n)
            same = evaluate(clean, n) == a[n] && evaluate(constant, n) == a[n];
        result.expect(same, tag + "canonical form changes the sequence");
        result.expect(to_constant_length(clean, len) == constant, tag + "constant-length form not unique");
        result.expect(remove_leading_zeros(constant) == clean, tag + "no-leading-zero form not unique");
        result.expect(to_constant_length(set, len + 1) == to_constant_length(constant, len + 1),
                      tag + "constant-length form at l+1 not unique");

        // The membership rule inverts evaluation.
        const PatternSet rebuilt =
            reconstruct_pattern_set([&](std::uint64_t n) { return n < reach ? a[n] : evaluate(set, n); }, len, k);
        result.expect(rebuilt == constant, tag + "reconstruction differs from the constant-length form");

        // Invariant decomposition: a = b * p, b self-invariant, independent of the representation.
        const InvariantDecomposition dec = invariant_decomposition(set, len);
        result.expect(!dec.invariant.has_leading_zero() && !dec.invariant.has_trailing_zero(),
                      tag + "invariant part has boundary zeros");
        result.expect(dec.factor.period() == ipow(k, len - 1), tag + "decomposition factor has the wrong period");
        bool product = true;
        for (std::uint64_t n = 0; n < horizon && product; ++n)
            product = a[n] == evaluate(dec.invariant, n) * dec.factor(n);
        result.expect(product, tag + "product identity fails");
        result.expect(invariant_decomposition(constant, len).invariant == dec.invariant,
                      tag + "decomposition depends on the representation");
    }
    return result;
}

SuiteResult run_suite(std::string_view name, unsigned workers, std::uint64_t seed) {
    if (name == "theorem-a") return census_suite(workers);
    if (name == "theorem-c") return equivalence_suite(workers);
    if (name == "saturated-props") return saturated_suite(seed);
    if (name == "kernel-props") return kernel_suite(seed);
    throw std::invalid_argument("unknown suite '" + std::string(name) +
                                "' (expected theorem-a, theorem-c, saturated-props or kernel-props)");
}

}  // namespace noncorr
