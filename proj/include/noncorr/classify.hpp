#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "noncorr/decider.hpp"
#include "noncorr/pattern_set.hpp"

namespace noncorr {

// ------------------------------------------------------------------- census

enum class CensusFilter { All, SelfInvariant };

std::string to_string(CensusFilter filter);
CensusFilter parse_census_filter(std::string_view text);

struct CensusOptions {
    unsigned base = 2;
    unsigned length = 4;
    CensusFilter filter = CensusFilter::All;
    bool collect_list = false;
    unsigned workers = 1;
};

struct CensusTiming {
    double correlated_seconds = 0;
    double noncorrelated_seconds = 0;
};

struct CensusReport {
    unsigned base = 2;
    unsigned length = 0;
    CensusFilter filter = CensusFilter::All;
    std::uint64_t candidates = 0;
    std::uint64_t noncorrelated = 0;
    /// Noncorrelated count keyed by the longest word of the no-leading-zero form.
    std::map<unsigned, std::uint64_t> noncorrelated_by_length;
    /// Noncorrelated sets in candidate order: constant-length form for the full census,
    /// no-leading-zero form for the self-invariant one. Empty unless requested.
    std::vector<PatternSet> sets;
    std::uint64_t max_stored_vectors = 0;
    std::uint64_t total_expansions = 0;
    /// Timing varies between runs, so it is not part of equality.
    CensusTiming timing;

    bool operator==(const CensusReport& other) const;
};

/// Words of length <= max_length that begin and end with 1, in shortlex order.
std::vector<Word> self_invariant_pool(unsigned max_length);

/// Exhaustive census of binary pattern-counting sequences. Throws for base != 2.
CensusReport census(const CensusOptions& options);

/// Runs `task(index)` for index in [0, count) over `workers` threads, each owning one
/// contiguous range, and returns results in index order.
template <typename Result, typename Task>
std::vector<Result> parallel_map(std::uint64_t count, unsigned workers, Task task);

// --------------------------------------------------------------- saturation

struct SaturationViolation {
    Word u;
    Digit i0;
    Digit i1;
};

struct SaturationResult {
    bool saturated = false;
    std::optional<SaturationViolation> violation;
};

/// Checks |A(u i0)^{-1} ⊕ A(u i1)^{-1}| = k/2 for all u ∈ Σ_k^{ℓ-2}, i0 != i1, where
/// only the words of length ℓ contribute. A must be self-invariant with ℓ(A) >= 2.
SaturationResult check_saturation(const PatternSet& patterns);
bool is_saturated(const PatternSet& patterns);

// ----------------------------------------------------------------- Hadamard

class HadamardMatrix {
public:
    explicit HadamardMatrix(std::vector<std::vector<int>> entries);

    unsigned dimension() const { return static_cast<unsigned>(entries_.size()); }
    int operator()(unsigned row, unsigned col) const { return entries_[row][col]; }
    const std::vector<std::vector<int>>& entries() const { return entries_; }

    /// M^T M = k I.
    bool is_hadamard() const;
    /// First row and first column are all +1.
    bool is_normalized() const;

    /// Permutes rows and columns; `row_order[i]` is the source row of row i.
    HadamardMatrix permuted(std::span<const unsigned> row_order, std::span<const unsigned> col_order) const;

private:
    std::vector<std::vector<int>> entries_;
};

/// Normalized Sylvester matrix of dimension k = 2^j.
HadamardMatrix sylvester_hadamard(unsigned k);

/// { i u j : u ∈ Σ_k^{ℓ-2}, M_{i,j} = -1 }.
PatternSet saturated_family_from_hadamard(const HadamardMatrix& matrix, unsigned length);

/// Same with one normalized Hadamard matrix per u; `per_u[value_of(u)]`.
PatternSet saturated_family_from_hadamard(std::span<const HadamardMatrix> per_u, unsigned length);

/// Random saturated set: per-u Sylvester matrices with random row/column permutations
/// fixing index 0, plus a random subset of shorter words with nonzero first and last digits.
PatternSet random_saturated(unsigned base, unsigned length, std::mt19937_64& rng);

// ---------------------------------------------------- saturation equivalence

struct EquivalenceStratum {
    std::uint64_t candidates = 0;
    std::uint64_t noncorrelated = 0;
    std::uint64_t saturated = 0;
};

struct EquivalenceReport {
    unsigned max_length = 0;
    std::map<unsigned, EquivalenceStratum> strata;  // keyed by exact length 2..max_length
    std::vector<PatternSet> counterexamples;
    bool holds() const { return counterexamples.empty(); }
};

/// Over all binary self-invariant sets with longest word of length 2..max_length,
/// compares decide() with is_saturated().
EquivalenceReport check_saturation_equivalence(unsigned max_length, unsigned workers = 1);

// -------------------------------------------------------------------- twist

/// A' with a_{A'} = a_A · p; p must have period dividing k^{ℓ-1} and p(0) = +1.
PatternSet twist(const PatternSet& patterns, const PeriodicFactor& factor, unsigned length = 0);

// ------------------------------------------------- invariant-part evidence

struct InvariantPartEvidence {
    std::uint64_t checked = 0;
    std::vector<PatternSet> counterexamples;  // noncorrelated A whose invariant part is correlated
};

/// For each noncorrelated set, decides the invariant part of its decomposition.
InvariantPartEvidence invariant_part_evidence(std::span<const PatternSet> noncorrelated_sets, unsigned workers = 1);

}  // namespace noncorr

#include "noncorr/detail/parallel.hpp"
