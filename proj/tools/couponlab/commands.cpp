#include "couponlab/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "couponlab/dixie.hpp"
#include "couponlab/montecarlo.hpp"
#include "couponlab/race.hpp"
#include "couponlab/records.hpp"
#include "couponlab/singletons.hpp"
#include "couponlab/stirling.hpp"

namespace couponlab::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Flags {
    long d = 0, h = 1, n = 0, j = 0, k = 0;
    unsigned long long trials = 1000000;
    unsigned long long seed = kDefaultSeed;
    unsigned streams = 64;
    double tolerance = 1e-10;
    std::string format = "json";
    int digits = 6;
    std::string event;
    std::string statistic;
    bool quadrature = false;

    CLI::Option* d_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* j_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    CLI::Option* digits_opt = nullptr;

    void attach(CLI::App* app) {
        d_opt = app->add_option("--d", d, "number of coupon types");
        app->add_option("--h", h, "copies required of each type")->capture_default_str();
        n_opt = app->add_option("--n", n, "number of draws");
        j_opt = app->add_option("--j", j, "number of singletons");
        k_opt = app->add_option("--k", k, "number of blocks");
        app->add_option("--trials", trials, "Monte-Carlo trials")->capture_default_str();
        app->add_option("--seed", seed, "master seed")->capture_default_str();
        app->add_option("--streams", streams, "independent RNG substreams")->capture_default_str();
        app->add_option("--tolerance", tolerance, "series/quadrature tolerance")->capture_default_str();
        app->add_option("--format", format, "json or csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
        digits_opt = app->add_option("--digits", digits, "significant digits of the decimal field")
                         ->capture_default_str()
                         ->check(CLI::Range(1, 40));
    }

    long need(const CLI::Option* opt, long value, const char* name) const {
        if (opt->count() == 0) {
            throw UsageError(std::string("missing required flag ") + name);
        }
        return value;
    }
    long need_d() const { return need(d_opt, d, "--d"); }
    long need_n() const { return need(n_opt, n, "--n"); }
    long need_k() const { return need(k_opt, k, "--k"); }

    SimConfig sim(long dd, long hh) const {
        SimConfig c;
        c.d = dd;
        c.h = hh;
        c.trials = trials;
        c.master_seed = seed;
        c.streams = streams;
        return c;
    }
};

OutputRecord mc_record(std::string quantity, Params params, const EstimateResult& est, int digits) {
    OutputRecord r = decimal_record(std::move(quantity), std::move(params), est.estimate, digits, Method::MonteCarlo);
    r.std_error = est.std_error;
    r.seed = est.seed;
    r.generator = kGeneratorId;
    return r;
}

Params with_sim(Params p, const Flags& f) {
    p.emplace_back("trials", static_cast<long long>(f.trials));
    p.emplace_back("streams", f.streams);
    return p;
}

// E[T]: exact when h = 1 or d = 1, otherwise the certified series.
OutputRecord expected_t_record(long d, long h, double tol, int digits) {
    Params p{{"d", d}, {"h", h}};
    if (h == 1 || d == 1) {
        return exact_record("expected-T", p, d == 1 ? ExactRational(h) : expected_T1_exact(d), digits);
    }
    const auto v = expected_T(d, h, tol);
    OutputRecord r = decimal_record("expected-T", p, v.to_double(), digits, Method::Series);
    r.tolerance = v.error_bound.to_double();
    return r;
}

std::vector<OutputRecord> cmd_exact(const std::string& q, const Flags& f) {
    const int g = f.digits;
    if (q == "simultaneous") {
        const long d = f.need_d();
        return {exact_record(q, {{"d", d}}, simultaneous_finish_prob(d), g)};
    }
    if (q == "tie-ahead") {
        const long d = f.need_d();
        return {exact_record(q, {{"d", d}}, tie_then_ahead_prob(d), g)};
    }
    if (q == "expected-T") {
        return {expected_t_record(f.need_d(), f.h, f.tolerance, g)};
    }
    if (q == "expected-T2") {
        const long d = f.need_d();
        return {exact_record(q, {{"d", d}}, expected_T2_exact(d), g)};
    }
    if (q == "asymptotic-T") {
        const long d = f.need_d();
        return {decimal_record(q, {{"d", d}, {"h", f.h}}, asymptotic_T(d, f.h), g, Method::ClosedForm)};
    }
    if (q == "pmf") {
        const long d = f.need_d();
        const long n = f.need_n();
        return {exact_record(q, {{"d", d}, {"h", f.h}, {"n", n}}, completion_pmf(d, f.h, n), g)};
    }
    if (q == "singleton-marginal") {
        const long d = f.need_d();
        const auto method = f.quadrature ? MarginalMethod::Quadrature : MarginalMethod::ExactTermwise;
        const auto marginal = singleton_marginal(d, method, f.tolerance);
        std::vector<OutputRecord> out;
        for (long j = 1; j <= d; ++j) {
            if (f.j_opt->count() && j != f.j) {
                continue;
            }
            if (f.quadrature) {
                OutputRecord r = decimal_record(q, {{"d", d}, {"j", j}}, marginal.prob(j), g, Method::Quadrature);
                r.tolerance = f.tolerance;
                out.push_back(r);
            } else {
                out.push_back(exact_record(q, {{"d", d}, {"j", j}}, marginal.exact[static_cast<std::size_t>(j - 1)], g));
            }
        }
        if (out.empty()) {
            throw std::domain_error("singleton-marginal: need 1 <= j <= d");
        }
        return out;
    }
    if (q == "mean-singletons") {
        const long d = f.need_d();
        return {exact_record(q, {{"d", d}}, mean_singletons(d), g)};
    }
    if (q == "stirling") {
        const long n = f.need_n();
        const long k = f.need_k();
        return {exact_record(q, {{"n", n}, {"k", k}}, ExactRational(stirling2(n, k)), g)};
    }
    if (q == "assoc-stirling") {
        const long n = f.need_n();
        const long k = f.need_k();
        return {exact_record(q, {{"n", n}, {"k", k}, {"h", f.h}}, ExactRational(assoc_stirling(n, k, f.h)), g)};
    }
    throw UsageError("unknown quantity '" + q + "' for exact");
}

RaceEvent parse_event(const std::string& name) {
    if (name == "simultaneous") return RaceEvent::Simultaneous;
    if (name == "tie-ahead") return RaceEvent::TieThenAhead;
    if (name == "never-behind") return RaceEvent::NeverBehind;
    throw UsageError("unknown event '" + name + "'");
}

std::vector<OutputRecord> cmd_simulate(const std::string& what, const Flags& f) {
    const long d = f.need_d();
    std::vector<OutputRecord> out;
    if (what == "race") {
        const std::vector<std::string> all{"simultaneous", "tie-ahead", "never-behind"};
        std::vector<std::string> events = f.event.empty() ? all : std::vector<std::string>{f.event};
        for (const auto& e : events) {
            parse_event(e);
        }
        const auto counts = count_race_events(f.sim(d, 1));
        for (const auto& e : events) {
            const auto est = to_estimate(counts.count(parse_event(e)), counts.trials, f.seed);
            out.push_back(mc_record(e, with_sim({{"d", d}}, f), est, f.digits));
        }
        return out;
    }
    if (what == "collector") {
        const bool want_t = f.statistic.empty() || f.statistic == "completion-time";
        const bool want_s = f.statistic == "singletons" || (f.statistic.empty() && f.h == 1);
        if (!want_t && !want_s) {
            throw UsageError("unknown statistic '" + f.statistic + "'");
        }
        if (want_t) {
            const auto est = estimate_mean(CollectorStatistic::CompletionTime, f.sim(d, f.h));
            out.push_back(mc_record("expected-T", with_sim({{"d", d}, {"h", f.h}}, f), est, f.digits));
        }
        if (want_s) {
            const auto est = estimate_mean(CollectorStatistic::Singletons, f.sim(d, f.h));
            out.push_back(mc_record("mean-singletons", with_sim({{"d", d}, {"h", f.h}}, f), est, f.digits));
        }
        return out;
    }
    throw UsageError("simulate expects 'race' or 'collector', got '" + what + "'");
}

struct CompareOutcome {
    std::vector<OutputRecord> records;
    bool agree = true;
};

CompareOutcome cmd_compare(const std::string& q, const Flags& f) {
    const long d = f.need_d();
    OutputRecord exact;
    EstimateResult est;
    double target = 0.0;
    if (q == "simultaneous" || q == "tie-ahead") {
        const auto value = q == "simultaneous" ? simultaneous_finish_prob(d) : tie_then_ahead_prob(d);
        exact = exact_record(q, {{"d", d}}, value, f.digits);
        target = value.to_double();
        est = estimate_event(q == "simultaneous" ? RaceEvent::Simultaneous : RaceEvent::TieThenAhead, f.sim(d, 1));
    } else if (q == "expected-T") {
        exact = expected_t_record(d, f.h, f.tolerance, f.digits);
        target = exact.exact ? ExactRational::parse(*exact.exact).to_double() : expected_T(d, f.h, f.tolerance).to_double();
        est = estimate_mean(CollectorStatistic::CompletionTime, f.sim(d, f.h));
    } else if (q == "mean-singletons") {
        const auto value = mean_singletons(d);
        exact = exact_record(q, {{"d", d}}, value, f.digits);
        target = value.to_double();
        est = estimate_mean(CollectorStatistic::Singletons, f.sim(d, 1));
    } else {
        throw UsageError("unknown quantity '" + q + "' for compare");
    }

    double z = 0.0;
    if (est.std_error > 0.0) {
        z = (est.estimate - target) / est.std_error;
    } else if (est.estimate != target) {
        z = std::copysign(std::numeric_limits<double>::max(), est.estimate - target);
    }
    CompareOutcome outcome;
    outcome.records.push_back(exact);
    outcome.records.push_back(mc_record(q, with_sim(exact.params, f), est, f.digits));
    OutputRecord zr = decimal_record(q + ".z-score", with_sim(exact.params, f), z, f.digits, Method::MonteCarlo);
    zr.std_error = 1.0;
    zr.seed = est.seed;
    zr.generator = kGeneratorId;
    outcome.records.push_back(zr);
    outcome.agree = std::abs(z) <= kDisagreementZ;
    return outcome;
}

std::vector<OutputRecord> cmd_table(const std::string& id, const Flags& f) {
    const int g = f.digits_opt->count() ? f.digits : 5;
    std::vector<OutputRecord> out;
    if (id == "simultaneous-seq") {
        for (long d = 1; d <= 8; ++d) out.push_back(exact_record("simultaneous", {{"d", d}}, simultaneous_finish_prob(d), g));
    } else if (id == "tie-ahead-seq") {
        for (long d = 1; d <= 10; ++d) out.push_back(exact_record("tie-ahead", {{"d", d}}, tie_then_ahead_prob(d), g));
    } else if (id == "expected-T-h1-h2") {
        for (long h = 1; h <= 2; ++h) {
            for (long d = 1; d <= 10; ++d) out.push_back(expected_t_record(d, h, f.tolerance, g));
        }
    } else if (id == "avgxact-seq") {
        for (long d = 1; d <= 5; ++d) out.push_back(exact_record("expected-T2", {{"d", d}}, expected_T2_exact(d), g));
    } else {
        throw UsageError("unknown table '" + id + "'");
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and simulated coupon-collector quantities", "couponlab"};
    // -h would collide with --h
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    Flags exact_f, sim_f, cmp_f, table_f;
    std::string exact_q, sim_q, cmp_q, table_q;

    auto* exact = app.add_subcommand("exact", "exact value of a quantity");
    exact->add_option("quantity", exact_q,
                      "simultaneous|tie-ahead|expected-T|expected-T2|asymptotic-T|pmf|singleton-marginal|"
                      "mean-singletons|stirling|assoc-stirling")
        ->required();
    exact_f.attach(exact);
    exact->add_flag("--quadrature", exact_f.quadrature, "singleton-marginal by numerical integration");

    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo estimates");
    simulate->add_option("what", sim_q, "race|collector")->required();
    sim_f.attach(simulate);
    simulate->add_option("--event", sim_f.event, "simultaneous|tie-ahead|never-behind (default: all)");
    simulate->add_option("--statistic", sim_f.statistic, "completion-time|singletons (default: all)");

    auto* compare = app.add_subcommand("compare", "exact value against simulation; exit 4 when |z| > 4");
    compare->add_option("quantity", cmp_q, "simultaneous|tie-ahead|expected-T|mean-singletons")->required();
    cmp_f.attach(compare);

    auto* table = app.add_subcommand("table", "regenerate a reference table");
    table->add_option("id", table_q, "simultaneous-seq|tie-ahead-seq|expected-T-h1-h2|avgxact-seq")->required();
    table_f.attach(table);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "couponlab: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        std::vector<OutputRecord> records;
        Flags* f = nullptr;
        int code = kExitOk;
        if (exact->parsed()) {
            f = &exact_f;
            records = cmd_exact(exact_q, *f);
        } else if (simulate->parsed()) {
            f = &sim_f;
            records = cmd_simulate(sim_q, *f);
        } else if (compare->parsed()) {
            f = &cmp_f;
            auto outcome = cmd_compare(cmp_q, *f);
            records = std::move(outcome.records);
            if (!outcome.agree) {
                err << "couponlab: statistical disagreement, |z| > " << kDisagreementZ << '\n';
                code = kExitDisagreement;
            }
        } else {
            f = &table_f;
            records = cmd_table(table_q, *f);
        }
        write_records(out, records, parse_format(f->format));
        return code;
    } catch (const ConvergenceError& e) {
        err << "couponlab: " << e.what() << '\n';
        return kExitConvergence;
    } catch (const UsageError& e) {
        err << "couponlab: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "couponlab: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "couponlab: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace couponlab::cli
