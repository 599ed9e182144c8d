#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "noncorr/cli.hpp"
#include "noncorr/report.hpp"

using namespace noncorr;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("decide") {
    const Outcome rs = invoke({"decide", "-k", "2", "-A", "11"});
    CHECK(rs.status == 0);
    CHECK(rs.out.find("verdict=noncorrelated\n") == 0);

    const Outcome tm = invoke({"decide", "-A", "1"});
    CHECK(tm.status == 0);
    CHECK(tm.out.find("verdict=correlated") != std::string::npos);
    CHECK(tm.out.find("witness_m=1\n") != std::string::npos);
    CHECK(tm.out.find("gamma_witness=-1/3\n") != std::string::npos);

    const Outcome empty = invoke({"decide", "-A", "-"});
    CHECK(empty.out.find("gamma_witness=1\n") != std::string::npos);
}

TEST_CASE("gamma table") {
    const Outcome g = invoke({"gamma", "-k", "2", "-A", "1", "--m-max", "3"});
    CHECK(g.status == 0);
    CHECK(g.out == "1: -1/3\n2: -1/3\n3: 1/3\n");

    const Outcome j = invoke({"--json", "gamma", "-A", "1", "--m-max", "3"});
    const Json record = Json::parse(j.out);
    CHECK(record["gamma"]["1"] == "-1/3");
    CHECK(record["gamma"]["3"] == "1/3");
}

TEST_CASE("other subcommands") {
    CHECK(invoke({"saturation", "-A", "11"}).out == "saturated=true\n");
    CHECK(invoke({"saturation", "-A", "111"}).out.find("saturated=false\nviolation u=0") == 0);
    CHECK(invoke({"decompose", "-A", "1,10"}).out == "invariant={11}\nfactor=+1,-1\n");
    CHECK(invoke({"twist", "-A", "11", "-p", "+1,-1"}).out == "twisted={01,10,11}\n");
    const Outcome est = invoke({"estimate", "-A", "1", "-m", "1", "-N", "65536"});
    CHECK(est.status == 0);
    CHECK(est.out.find("exact=-1/3") != std::string::npos);
    const Outcome k4 = invoke({"decide", "-k", "4", "-A", "11,13,22,23,31,32"});
    CHECK(k4.out.find("verdict=noncorrelated") == 0);
}

TEST_CASE("exit statuses") {
    CHECK(invoke({"--help"}).status == 0);
    CHECK(invoke({}).status == 1);
    CHECK(invoke({"frobnicate"}).status == 1);
    CHECK(invoke({"decide"}).status == 1);
    CHECK(invoke({"decide", "-A", "00"}).status == 1);
    CHECK(invoke({"decide", "-A", "12"}).status == 1);
    CHECK(invoke({"decide", "-k", "11", "-A", "1"}).status == 1);
    CHECK(invoke({"gamma", "-A", "1", "--m-max", "0"}).status == 1);
    CHECK(invoke({"saturation", "-A", "10"}).status == 1);
    CHECK(invoke({"twist", "-A", "11", "-p", "-1,+1"}).status == 1);
    CHECK(invoke({"census", "--length", "9"}).status == 1);
    CHECK(invoke({"census", "-k", "3", "--length", "2"}).status == 1);
    CHECK(invoke({"verify", "--suite", "nonsense"}).status == 1);
    CHECK_FALSE(invoke({"decide", "-A", "00"}).err.empty());
}

TEST_CASE("structured records round-trip") {
    const Outcome d = invoke({"--json", "decide", "-A", "1,0110"});
    const Json record = Json::parse(d.out);
    const Decision parsed = decision_from_json(record["decision"]);
    CHECK(parsed == decide(PatternSet::parse("1,0110", 2)));
    CHECK(to_json(parsed).dump() == record["decision"].dump());

    const Outcome c = invoke({"--json", "census", "--length", "3"});
    const Json report = Json::parse(c.out)["report"];
    const CensusReport back = census_report_from_json(report);
    CensusOptions options;
    options.length = 3;
    CHECK(back == census(options));
    CHECK(to_json(back).dump() == report.dump());

    options.collect_list = true;
    const CensusReport with_sets = census(options);
    CHECK(census_report_from_json(to_json(with_sets)) == with_sets);
}

TEST_CASE("structured census output does not depend on the worker count") {
    const std::string reference = invoke({"--json", "census", "--length", "3", "--workers", "1"}).out;
    for (const char* w : {"4", "8"}) CHECK(invoke({"--json", "census", "--length", "3", "--workers", w}).out == reference);
    const std::string si = invoke({"--json", "census", "--length", "4", "--self-invariant"}).out;
    CHECK(invoke({"--json", "census", "--length", "4", "--self-invariant", "--workers", "8"}).out == si);
}

TEST_CASE("list files") {
    const auto path = std::filesystem::temp_directory_path() / "noncorr_test_list.txt";
    const Outcome c = invoke({"census", "--length", "2", "--list", path.string()});
    CHECK(c.status == 0);
    CHECK(c.out.find("noncorrelated=4\n") != std::string::npos);
    std::ifstream in(path);
    const auto sets = read_list_file(in, 2);
    CHECK(sets.size() == 4);
    for (const PatternSet& s : sets) CHECK(decide(s).noncorrelated());
    std::filesystem::remove(path);

    std::istringstream text("# comment\n11  # trailing\n-\n\n01,10\n");
    const auto parsed = read_list_file(text, 2);
    REQUIRE(parsed.size() == 3);
    CHECK(parsed[1].empty());
    std::ostringstream written;
    write_list_file(written, parsed);
    CHECK(written.str() == "11\n-\n01,10\n");
}
