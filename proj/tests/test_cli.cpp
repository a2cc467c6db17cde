#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "couponlab/commands.hpp"
#include "couponlab/records.hpp"

using namespace couponlab::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

OutputRecord first(const Result& r) { return from_json_line(lines(r.out).at(0)); }

}  // namespace

TEST_CASE("exact records") {
    auto r = call({"exact", "simultaneous", "--d", "3"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    auto rec = first(r);
    CHECK(rec.quantity == "simultaneous");
    CHECK(rec.exact.value() == "11/70");
    CHECK(rec.decimal == 0.157143);
    CHECK(rec.method == Method::ClosedForm);
    CHECK(rec.params == Params{{"d", 3}});

    CHECK(first(call({"exact", "mean-singletons", "--d", "1"})).exact.value() == "1/1");
    CHECK(first(call({"exact", "tie-ahead", "--d", "4", "--digits", "5"})).decimal == 0.43341);
    CHECK(first(call({"exact", "stirling", "--n", "4", "--k", "2"})).exact.value() == "7/1");
    CHECK(first(call({"exact", "assoc-stirling", "--n", "4", "--k", "2", "--h", "2"})).exact.value() == "3/1");
    CHECK(first(call({"exact", "pmf", "--d", "2", "--h", "2", "--n", "4"})).exact.value() == "3/8");
    CHECK(first(call({"exact", "expected-T2", "--d", "3"})).exact.value() == "347/36");
    CHECK(first(call({"exact", "expected-T", "--d", "5"})).exact.value() == "137/12");

    auto series = first(call({"exact", "expected-T", "--d", "3", "--h", "2"}));
    CHECK_FALSE(series.exact.has_value());
    CHECK(series.method == Method::Series);
    CHECK(series.decimal == 9.63889);
    CHECK(series.tolerance.value() < 1e-10);

    CHECK(first(call({"exact", "asymptotic-T", "--d", "200", "--h", "2", "--digits", "4"})).decimal == 1393.0);

    auto marg = call({"exact", "singleton-marginal", "--d", "2"});
    CHECK(lines(marg.out).size() == 2);
    CHECK(first(marg).exact.value() == "1/2");
    auto one_j = call({"exact", "singleton-marginal", "--d", "3", "--j", "3", "--quadrature"});
    CHECK(lines(one_j.out).size() == 1);
    CHECK(first(one_j).method == Method::Quadrature);
    CHECK(first(one_j).decimal == 0.222222);
}

TEST_CASE("usage errors exit 2") {
    CHECK(call({}).code == kExitUsage);
    CHECK(call({"exact"}).code == kExitUsage);
    CHECK(call({"exact", "nonsense", "--d", "3"}).code == kExitUsage);
    CHECK(call({"exact", "simultaneous"}).code == kExitUsage);
    CHECK(call({"exact", "simultaneous", "--d", "x"}).code == kExitUsage);
    CHECK(call({"exact", "simultaneous", "--d", "3", "--format", "xml"}).code == kExitUsage);
    CHECK(call({"exact", "asymptotic-T", "--d", "2", "--h", "2"}).code == kExitUsage);
    CHECK(call({"exact", "singleton-marginal", "--d", "3", "--j", "5"}).code == kExitUsage);
    CHECK(call({"table", "no-such-table"}).code == kExitUsage);
    CHECK(call({"simulate", "race", "--d", "3", "--event", "sideways", "--trials", "10"}).code == kExitUsage);
    CHECK(call({"simulate", "race", "--d", "3", "--trials", "0"}).code == kExitUsage);
    auto r = call({"exact", "simultaneous"});
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
    CHECK(call({"--help"}).code == kExitOk);
}

TEST_CASE("convergence failure exits 3") {
    CHECK(call({"exact", "singleton-marginal", "--d", "5", "--quadrature", "--tolerance", "1e-30"}).code == kExitConvergence);
}

TEST_CASE("simulate") {
    auto r = call({"simulate", "collector", "--d", "1", "--h", "2", "--trials", "10"});
    CHECK(r.code == 0);
    auto rec = first(r);
    CHECK(rec.quantity == "expected-T");
    CHECK(rec.decimal == 2.0);
    CHECK(rec.method == Method::MonteCarlo);
    CHECK(rec.seed.value() == kDefaultSeed);
    CHECK(rec.std_error.value() == 0.0);
    CHECK(rec.generator.has_value());

    auto race = call({"simulate", "race", "--d", "4", "--trials", "20000", "--seed", "7"});
    const auto ls = lines(race.out);
    REQUIRE(ls.size() == 3);
    const auto tie = from_json_line(ls[1]);
    const auto never = from_json_line(ls[2]);
    CHECK(tie.quantity == "tie-ahead");
    CHECK(never.quantity == "never-behind");
    CHECK(tie.decimal <= never.decimal);
    CHECK(never.decimal < 1.0);
    CHECK(never.seed.value() == 7);

    auto only = call({"simulate", "race", "--d", "4", "--trials", "20000", "--seed", "7", "--event", "tie-ahead"});
    CHECK(lines(only.out).size() == 1);
    CHECK(from_json_line(lines(only.out)[0]) == tie);
}

TEST_CASE("compare") {
    auto r = call({"compare", "tie-ahead", "--d", "2", "--trials", "100000"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(from_json_line(ls[0]).exact.value() == "2/3");
    CHECK(from_json_line(ls[1]).method == Method::MonteCarlo);
    const auto z = from_json_line(ls[2]);
    CHECK(z.quantity == "tie-ahead.z-score");
    CHECK(std::abs(z.decimal) <= 4.0);

    CHECK(call({"compare", "mean-singletons", "--d", "6", "--trials", "100000"}).code == 0);
    CHECK(call({"compare", "expected-T", "--d", "4", "--h", "2", "--trials", "100000"}).code == 0);
    CHECK(call({"compare", "stirling", "--d", "4"}).code == kExitUsage);
}

TEST_CASE("tables") {
    auto sim = lines(call({"table", "simultaneous-seq"}).out);
    REQUIRE(sim.size() == 8);
    CHECK(from_json_line(sim[3]).exact.value() == "9/91");
    auto tie = lines(call({"table", "tie-ahead-seq"}).out);
    REQUIRE(tie.size() == 10);
    CHECK(from_json_line(tie[0]).decimal == 1.0);
    CHECK(from_json_line(tie[1]).decimal == 0.66667);
    CHECK(from_json_line(tie[2]).decimal == 0.61429);
    auto et = lines(call({"table", "expected-T-h1-h2"}).out);
    REQUIRE(et.size() == 20);
    CHECK(from_json_line(et[4]).decimal == 11.417);
    CHECK(from_json_line(et[12]).decimal == 9.6389);
    auto avg = lines(call({"table", "avgxact-seq"}).out);
    REQUIRE(avg.size() == 5);
    CHECK(from_json_line(avg[2]).exact.value() == "347/36");
}

TEST_CASE("serialisation") {
    const std::vector<std::string> base{"exact", "tie-ahead", "--d", "5"};
    auto json = call(base);
    auto again = call(base);
    CHECK(json.out == again.out);
    const auto rec = first(json);
    CHECK(to_json_line(rec) == lines(json.out)[0]);

    auto with_csv = base;
    with_csv.insert(with_csv.end(), {"--format", "csv"});
    const auto csv = lines(call(with_csv).out);
    REQUIRE(csv.size() == 2);
    CHECK(csv[0] == kCsvHeader);
    CHECK(csv[1] == "tie-ahead,d=5,5672893/19122246,0.296665,closed-form,,");
    CHECK(csv[1] == to_csv_row(rec));

    auto mc = call({"simulate", "race", "--d", "3", "--trials", "1000", "--event", "simultaneous"});
    auto mc_csv = call({"simulate", "race", "--d", "3", "--trials", "1000", "--event", "simultaneous", "--format", "csv"});
    const auto mc_rec = first(mc);
    CHECK(lines(mc_csv.out).at(1) == to_csv_row(mc_rec));
    CHECK(from_json_line(to_json_line(mc_rec)) == mc_rec);
}

TEST_CASE("decimal rendering") {
    CHECK(round_significant(0.1234567, 3) == 0.123);
    CHECK(round_significant(1614.3127, 4) == 1614.0);
    // rounded from the rational itself, so 0.296664596... stays below the half-way point
    CHECK(exact_record("q", {}, couponlab::ExactRational(5672893, 19122246), 5).decimal == 0.29666);
    CHECK(exact_record("q", {}, couponlab::ExactRational(1, 8), 2).decimal == 0.13);
}
