#include "noncorr/oracle.hpp"

#include <stdexcept>

#include "noncorr/classify.hpp"

namespace noncorr {

std::vector<std::int8_t> sign_table(const PatternSet& patterns, std::uint64_t count) {
    const unsigned k = patterns.base();
    const unsigned len = patterns.max_length();
    const PeriodicFactor h = periodic_factor(patterns, len);
    const std::uint64_t period = h.period();
    std::vector<std::int8_t> a(count);
    if (count == 0) return a;
    a[0] = 1;
    for (std::uint64_t n = 1; n < count; ++n) a[n] = static_cast<std::int8_t>(a[n / k] * h(n % period));
    return a;
}

Estimate empirical_gamma(const std::vector<std::int8_t>& signs, std::uint64_t m, std::uint64_t samples,
                         unsigned workers) {
    if (samples == 0) throw std::invalid_argument("empirical_gamma: need at least one sample");
    if (signs.size() < samples + m) throw std::invalid_argument("empirical_gamma: sign table too short");
    workers = std::max(1U, workers);
    const std::uint64_t chunk = (samples + workers - 1) / workers;
    const auto partial = parallel_map<std::int64_t>(workers, workers, [&](std::uint64_t w) {
        const std::uint64_t begin = std::min(samples, w * chunk);
        const std::uint64_t end = std::min(samples, begin + chunk);
        std::int64_t sum = 0;
        const std::int8_t* lhs = signs.data();
        const std::int8_t* rhs = signs.data() + m;
        for (std::uint64_t n = begin; n < end; ++n) sum += lhs[n] * rhs[n];
        return sum;
    });
    std::int64_t total = 0;
    for (std::int64_t s : partial) total += s;
    return {static_cast<double>(total) / static_cast<double>(samples), samples, m, std::nullopt};
}

Estimate empirical_gamma(const PatternSet& patterns, std::uint64_t m, std::uint64_t samples, unsigned workers) {
    return empirical_gamma(sign_table(patterns, samples + m), m, samples, workers);
}

Estimate empirical_gamma_r(const PatternSet& patterns, std::uint64_t r, std::uint64_t m, std::uint64_t samples) {
    if (samples == 0) throw std::invalid_argument("empirical_gamma_r: need at least one sample");
    const std::uint64_t modulus = ipow(patterns.base(), patterns.max_length());
    if (r >= modulus) throw std::invalid_argument("empirical_gamma_r: residue out of range");
    const auto a = sign_table(patterns, samples + m);
    std::int64_t sum = 0;
    for (std::uint64_t n = r; n < samples; n += modulus) sum += a[n] * a[n + m];
    const double value = static_cast<double>(modulus) * static_cast<double>(sum) / static_cast<double>(samples);
    return {value, samples, m, r};
}

int check_cancellation(const PatternSet& patterns, const Word& u, Digit j0, Digit j1) {
    const unsigned k = patterns.base();
    if (u.base() != k) throw std::invalid_argument("check_cancellation: mixed bases");
    if (j0 >= k || j1 >= k || j0 == j1) throw std::invalid_argument("check_cancellation: need distinct digits j0, j1");
    int total = 0;
    for (unsigned i = 0; i < k; ++i) {
        const Word prefix = u.prepended(static_cast<Digit>(i));
        total += evaluate(patterns, value_of(prefix.appended(j0))) * evaluate(patterns, value_of(prefix.appended(j1)));
    }
    return total;
}

Rational sat_gamma_closed_form(const PatternSet& patterns, std::uint64_t r, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("sat_gamma_closed_form: the closed form applies to m >= 1");
    if (!is_saturated(patterns)) throw std::invalid_argument("sat_gamma_closed_form: set is not saturated");
    const unsigned k = patterns.base();
    if (r % k + m >= k) return Rational(0);
    return Rational(evaluate(patterns, r) * evaluate(patterns, r + m));
}

}  // namespace noncorr
