#include "noncorr/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "noncorr/classify.hpp"
#include "noncorr/decider.hpp"
#include "noncorr/errors.hpp"
#include "noncorr/gamma.hpp"
#include "noncorr/oracle.hpp"
#include "noncorr/report.hpp"
#include "noncorr/suites.hpp"

namespace noncorr::cli {
namespace {

struct Settings {
    bool json = false;
    unsigned base = 2;
    std::string set_text;
    unsigned length = 0;
    std::uint64_t m = 1;
    std::uint64_t m_max = 16;
    std::uint64_t samples = std::uint64_t{1} << 22;
    unsigned workers = 1;
    bool self_invariant = false;
    std::string list_file;
    bool timing = false;
    std::string signs;
    std::string suite;
    std::uint64_t seed = 1;
};

// "-" is accepted for the empty set so that it can be written on a command line.
PatternSet read_set(const Settings& s) {
    return s.set_text == "-" ? PatternSet(s.base) : PatternSet::parse(s.set_text, s.base);
}

std::string braced(const PatternSet& set) { return "{" + set.str() + "}"; }

Json header(const char* command, const Settings& s, const PatternSet& set) {
    Json j;
    j["command"] = command;
    j["base"] = s.base;
    j["set"] = set.str();
    return j;
}

int cmd_decide(const Settings& s, std::ostream& out) {
    const PatternSet set = read_set(s);
    const Decision d = decide(set, s.length);
    if (s.json) {
        Json j = header("decide", s, set);
        j["decision"] = to_json(d);
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << "verdict=" << (d.noncorrelated() ? "noncorrelated" : "correlated") << '\n';
    if (d.witness) out << "witness_m=" << *d.witness << '\n' << "gamma_witness=" << d.gamma_at_witness->str() << '\n';
    out << "elements_created=" << d.elements_created << '\n' << "expansions=" << d.expansions << '\n';
    return kExitOk;
}

int cmd_gamma(const Settings& s, std::ostream& out) {
    const PatternSet set = read_set(s);
    CorrelationEngine engine(set, s.length);
    Json table = Json::object();
    for (std::uint64_t m = 1; m <= s.m_max; ++m) {
        const std::string value = engine.gamma(m).str();
        if (s.json)
            table[std::to_string(m)] = value;
        else
            out << m << ": " << value << '\n';
    }
    if (s.json) {
        Json j = header("gamma", s, set);
        j["length"] = engine.length();
        j["gamma"] = table;
        out << j.dump() << '\n';
    }
    return kExitOk;
}

int cmd_census(const Settings& s, std::ostream& out) {
    CensusOptions options;
    options.base = s.base;
    options.length = s.length == 0 ? 4 : s.length;
    options.filter = s.self_invariant ? CensusFilter::SelfInvariant : CensusFilter::All;
    options.collect_list = !s.list_file.empty();
    options.workers = s.workers;
    CensusReport report = census(options);
    if (options.collect_list) {
        std::ofstream file(s.list_file);
        if (!file) throw std::invalid_argument("cannot write list file '" + s.list_file + "'");
        file << "# noncorrelated sets, base " << report.base << ", length " << report.length << ", filter "
             << to_string(report.filter) << '\n';
        write_list_file(file, report.sets);
        report.sets.clear();
    }
    if (s.json) {
        Json j;
        j["command"] = "census";
        j["report"] = to_json(report, s.timing);
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << "candidates=" << report.candidates << '\n' << "noncorrelated=" << report.noncorrelated << '\n';
    for (const auto& [len, count] : report.noncorrelated_by_length)
        out << "noncorrelated[length=" << len << "]=" << count << '\n';
    out << "max_stored_vectors=" << report.max_stored_vectors << " (bound " << capacity_bound(report.base, report.length)
        << ")\n";
    out << "total_expansions=" << report.total_expansions << '\n';
    if (s.timing)
        out << "seconds_correlated=" << report.timing.correlated_seconds << '\n'
            << "seconds_noncorrelated=" << report.timing.noncorrelated_seconds << '\n';
    return kExitOk;
}

int cmd_saturation(const Settings& s, std::ostream& out) {
    const PatternSet set = read_set(s);
    const SaturationResult result = check_saturation(set);
    if (s.json) {
        Json j = header("saturation", s, set);
        j["result"] = to_json(result);
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << "saturated=" << (result.saturated ? "true" : "false") << '\n';
    if (result.violation)
        out << "violation u=" << (result.violation->u.empty() ? "ε" : result.violation->u.str())
            << " i0=" << int(result.violation->i0) << " i1=" << int(result.violation->i1) << '\n';
    return kExitOk;
}

int cmd_decompose(const Settings& s, std::ostream& out) {
    const PatternSet set = read_set(s);
    const InvariantDecomposition dec = invariant_decomposition(set, s.length);
    if (s.json) {
        Json j = header("decompose", s, set);
        j["invariant"] = dec.invariant.str();
        j["factor"] = dec.factor.str();
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << "invariant=" << braced(dec.invariant) << '\n' << "factor=" << dec.factor.str() << '\n';
    return kExitOk;
}

int cmd_twist(const Settings& s, std::ostream& out) {
    const PatternSet set = read_set(s);
    const PeriodicFactor p = PeriodicFactor::parse(s.signs, s.base);
    const PatternSet result = twist(set, p, s.length);
    if (s.json) {
        Json j = header("twist", s, set);
        j["factor"] = p.str();
        j["twisted"] = result.str();
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << "twisted=" << braced(result) << '\n';
    return kExitOk;
}

int cmd_estimate(const Settings& s, std::ostream& out) {
    const PatternSet set = read_set(s);
    if (s.m == 0) throw std::invalid_argument("estimate needs m >= 1");
    const Estimate e = empirical_gamma(set, s.m, s.samples, s.workers);
    const Rational exact = gamma(set, s.m);
    if (s.json) {
        Json j = header("estimate", s, set);
        j["estimate"] = to_json(e);
        j["exact"] = exact.str();
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << "m=" << e.shift << " N=" << e.samples << '\n'
        << "estimate=" << e.value << '\n'
        << "exact=" << exact.str() << " (" << exact.to_double() << ")\n";
    return kExitOk;
}

int cmd_verify(const Settings& s, std::ostream& out) {
    const SuiteResult result = run_suite(s.suite, s.workers, s.seed);
    if (s.json) {
        Json j;
        j["command"] = "verify";
        j["suite"] = result.name;
        j["checks"] = result.checks;
        j["passed"] = result.passed();
        j["failures"] = result.failures;
        j["notes"] = result.notes;
        out << j.dump() << '\n';
    } else {
        out << "suite=" << result.name << " checks=" << result.checks << " failures=" << result.failures.size()
            << " result=" << (result.passed() ? "pass" : "fail") << '\n';
        for (const std::string& f : result.failures) out << "  FAIL " << f << '\n';
        for (const std::string& n : result.notes) out << "  note " << n << '\n';
    }
    return result.passed() ? kExitOk : kExitInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Decide noncorrelation of pattern-counting sequences and compute exact correlation coefficients"};
    app.name("noncorr");
    app.require_subcommand(1, 1);
    app.add_flag("--json", s.json, "Emit one JSON record instead of text");

    auto add_base = [&](CLI::App* sub) {
        sub->add_option("-k,--base", s.base, "Digit base")->check(CLI::Range(2U, kMaxBase));
    };
    auto add_set = [&](CLI::App* sub) {
        sub->add_option("-A,--set", s.set_text, "Comma-separated patterns, '-' for the empty set")->required();
    };
    auto add_length = [&](CLI::App* sub) {
        sub->add_option("-l,--length", s.length, "Operating length (default: longest pattern)");
    };

    CLI::App* decide_cmd = app.add_subcommand("decide", "Decide whether the sequence is noncorrelated");
    add_base(decide_cmd);
    add_set(decide_cmd);
    add_length(decide_cmd);

    CLI::App* gamma_cmd = app.add_subcommand("gamma", "Exact correlation coefficients for m = 1..m-max");
    add_base(gamma_cmd);
    add_set(gamma_cmd);
    add_length(gamma_cmd);
    gamma_cmd->add_option("--m-max", s.m_max, "Largest shift")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));

    CLI::App* census_cmd = app.add_subcommand("census", "Exhaustive binary census");
    add_base(census_cmd);
    census_cmd->add_option("--length", s.length, "Pattern length (default 4)");
    census_cmd->add_flag("--self-invariant", s.self_invariant, "Only self-invariant sets, stratified by length");
    census_cmd->add_option("--list", s.list_file, "Write the noncorrelated sets to this file");
    census_cmd->add_option("--workers", s.workers, "Worker threads")->check(CLI::Range(1U, 256U));
    census_cmd->add_flag("--timing", s.timing, "Include wall-clock timing in the report");

    CLI::App* saturation_cmd = app.add_subcommand("saturation", "Check the saturation condition");
    add_base(saturation_cmd);
    add_set(saturation_cmd);

    CLI::App* decompose_cmd = app.add_subcommand("decompose", "Split into a self-invariant part and a periodic factor");
    add_base(decompose_cmd);
    add_set(decompose_cmd);
    add_length(decompose_cmd);

    CLI::App* twist_cmd = app.add_subcommand("twist", "Multiply the sequence by a periodic sign pattern");
    add_base(twist_cmd);
    add_set(twist_cmd);
    add_length(twist_cmd);
    twist_cmd->add_option("-p,--signs", s.signs, "Comma-separated +1/-1 values, one period")->required();

    CLI::App* estimate_cmd = app.add_subcommand("estimate", "Finite-N empirical correlation");
    add_base(estimate_cmd);
    add_set(estimate_cmd);
    estimate_cmd->add_option("-m", s.m, "Shift")->required();
    estimate_cmd->add_option("-N", s.samples, "Number of samples")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 34));
    estimate_cmd->add_option("--workers", s.workers, "Worker threads")->check(CLI::Range(1U, 256U));

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run a named property suite");
    verify_cmd->add_option("--suite", s.suite, "theorem-a, theorem-c, saturated-props or kernel-props")->required();
    verify_cmd->add_option("--workers", s.workers, "Worker threads")->check(CLI::Range(1U, 256U));
    verify_cmd->add_option("--seed", s.seed, "Random seed for the randomized suites");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (decide_cmd->parsed()) return cmd_decide(s, out);
        if (gamma_cmd->parsed()) return cmd_gamma(s, out);
        if (census_cmd->parsed()) return cmd_census(s, out);
        if (saturation_cmd->parsed()) return cmd_saturation(s, out);
        if (decompose_cmd->parsed()) return cmd_decompose(s, out);
        if (twist_cmd->parsed()) return cmd_twist(s, out);
        if (estimate_cmd->parsed()) return cmd_estimate(s, out);
        return cmd_verify(s, out);
    } catch (const InternalConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NotPatternCounting& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace noncorr::cli
