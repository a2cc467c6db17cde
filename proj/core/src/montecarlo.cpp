#include "couponlab/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace couponlab {

void validate(const SimConfig& config) {
    if (config.d < 1) {
        throw std::domain_error("simulation needs d >= 1");
    }
    if (config.h < 1) {
        throw std::domain_error("simulation needs h >= 1");
    }
    if (config.trials < 1) {
        throw std::domain_error("simulation needs trials >= 1");
    }
    if (config.streams < 1) {
        throw std::domain_error("simulation needs streams >= 1");
    }
}

CollectorOutcome simulate_collector(long d, long h, Xoshiro256StarStar& rng) {
    std::vector<long> copies(static_cast<std::size_t>(d), 0);
    long short_of_h = d;
    long draws = 0;
    while (short_of_h > 0) {
        const auto c = uniform_below(rng, static_cast<std::uint64_t>(d));
        ++draws;
        if (++copies[c] == h) {
            --short_of_h;
        }
    }
    CollectorOutcome out;
    out.completion_time = draws;
    out.singletons = std::count(copies.begin(), copies.end(), 1L);
    return out;
}

void simulate_race(long d, Xoshiro256StarStar& rng, RaceTrajectory& out) {
    out.steps.clear();
    std::vector<char> seen1(static_cast<std::size_t>(d), 0);
    std::vector<char> seen2(static_cast<std::size_t>(d), 0);
    RaceStep state;
    while (state.first < d && state.second < d) {
        const auto a = uniform_below(rng, static_cast<std::uint64_t>(d));
        const auto b = uniform_below(rng, static_cast<std::uint64_t>(d));
        if (!seen1[a]) {
            seen1[a] = 1;
            ++state.first;
        }
        if (!seen2[b]) {
            seen2[b] = 1;
            ++state.second;
        }
        out.steps.push_back(state);
    }
    out.finish_step = static_cast<long>(out.steps.size());
    if (state.first == d && state.second == d) {
        out.winner = Winner::Tie;
    } else {
        out.winner = state.first == d ? Winner::First : Winner::Second;
    }
}

RaceTrajectory simulate_race(long d, Xoshiro256StarStar& rng) {
    RaceTrajectory out;
    simulate_race(d, rng, out);
    return out;
}

bool race_event_holds(RaceEvent event, const RaceTrajectory& trajectory, long d) {
    if (d == 1) {
        return true;
    }
    if (event == RaceEvent::Simultaneous) {
        return trajectory.winner == Winner::Tie;
    }
    if (trajectory.winner == Winner::Tie) {
        return false;
    }
    const bool first_wins = trajectory.winner == Winner::First;
    auto lead = [first_wins](const RaceStep& s) { return first_wins ? s.first - s.second : s.second - s.first; };

    if (event == RaceEvent::NeverBehind) {
        return std::all_of(trajectory.steps.begin(), trajectory.steps.end(),
                           [&](const RaceStep& s) { return lead(s) >= 0; });
    }
    // TieThenAhead: skip the common prefix, then the winner must lead at every step.
    auto it = std::find_if(trajectory.steps.begin(), trajectory.steps.end(),
                           [](const RaceStep& s) { return s.first != s.second; });
    return std::all_of(it, trajectory.steps.end(), [&](const RaceStep& s) { return lead(s) > 0; });
}

std::uint64_t RaceEventCounts::count(RaceEvent event) const {
    switch (event) {
        case RaceEvent::Simultaneous:
            return simultaneous;
        case RaceEvent::TieThenAhead:
            return tie_then_ahead;
        case RaceEvent::NeverBehind:
            return never_behind;
    }
    return 0;
}

unsigned default_thread_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("COUPONLAB_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) {
                return static_cast<unsigned>(cap);
            }
        } catch (const std::exception&) {
        }
    }
    return hw;
}

namespace {

__extension__ typedef unsigned __int128 u128;

struct StreamRange {
    std::uint64_t begin;
    std::uint64_t end;
};

StreamRange stream_range(const SimConfig& config, std::uint32_t stream) {
    const std::uint64_t chunk = (config.trials + config.streams - 1) / config.streams;
    const std::uint64_t begin = std::min(config.trials, stream * chunk);
    return {begin, std::min(config.trials, begin + chunk)};
}

// Runs body(stream, result) for every stream and returns the per-stream
// results in stream order, so any reduction over them is thread-count free.
template <class Result, class Body>
std::vector<Result> for_each_stream(const SimConfig& config, unsigned threads, Body body) {
    std::vector<Result> results(config.streams);
    if (threads == 0) {
        threads = default_thread_count();
    }
    threads = std::min<unsigned>(threads, config.streams);
    std::atomic<std::uint32_t> next{0};
    auto worker = [&] {
        for (std::uint32_t s = next++; s < config.streams; s = next++) {
            body(s, results[s]);
        }
    };
    if (threads <= 1) {
        worker();
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& th : pool) {
        th.join();
    }
    return results;
}

}  // namespace

RaceEventCounts count_race_events(const SimConfig& config, unsigned threads) {
    validate(config);
    auto per_stream = for_each_stream<RaceEventCounts>(config, threads, [&](std::uint32_t s, RaceEventCounts& out) {
        const auto range = stream_range(config, s);
        if (range.begin == range.end) {
            return;
        }
        auto rng = substream(config.master_seed, s);
        RaceTrajectory traj;
        for (auto i = range.begin; i < range.end; ++i) {
            simulate_race(config.d, rng, traj);
            ++out.trials;
            out.simultaneous += race_event_holds(RaceEvent::Simultaneous, traj, config.d);
            out.tie_then_ahead += race_event_holds(RaceEvent::TieThenAhead, traj, config.d);
            out.never_behind += race_event_holds(RaceEvent::NeverBehind, traj, config.d);
        }
    });
    RaceEventCounts total;
    for (const auto& c : per_stream) {
        total.trials += c.trials;
        total.simultaneous += c.simultaneous;
        total.tie_then_ahead += c.tie_then_ahead;
        total.never_behind += c.never_behind;
    }
    return total;
}

EstimateResult to_estimate(std::uint64_t hits, std::uint64_t trials, std::uint64_t seed) {
    EstimateResult r;
    r.trials = trials;
    r.seed = seed;
    r.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(trials));
    return r;
}

EstimateResult estimate_event(RaceEvent event, const SimConfig& config, unsigned threads) {
    const auto counts = count_race_events(config, threads);
    return to_estimate(counts.count(event), counts.trials, config.master_seed);
}

EstimateResult estimate_mean(CollectorStatistic statistic, const SimConfig& config, unsigned threads) {
    validate(config);
    struct Sums {
        std::uint64_t n = 0;
        u128 sum = 0;
        u128 sum_sq = 0;
    };
    auto per_stream = for_each_stream<Sums>(config, threads, [&](std::uint32_t s, Sums& out) {
        const auto range = stream_range(config, s);
        if (range.begin == range.end) {
            return;
        }
        auto rng = substream(config.master_seed, s);
        for (auto i = range.begin; i < range.end; ++i) {
            const auto outcome = simulate_collector(config.d, config.h, rng);
            const auto x = static_cast<std::uint64_t>(
                statistic == CollectorStatistic::CompletionTime ? outcome.completion_time : outcome.singletons);
            ++out.n;
            out.sum += x;
            out.sum_sq += static_cast<u128>(x) * x;
        }
    });
    Sums total;
    for (const auto& p : per_stream) {
        total.n += p.n;
        total.sum += p.sum;
        total.sum_sq += p.sum_sq;
    }
    const double n = static_cast<double>(total.n);
    const double mean = static_cast<double>(total.sum) / n;
    // unbiased sample variance from the integer moment sums
    double var = 0.0;
    if (total.n > 1) {
        const long double num = static_cast<long double>(total.sum_sq) * total.n -
                                static_cast<long double>(total.sum) * static_cast<long double>(total.sum);
        var = static_cast<double>(std::max(0.0L, num) / (static_cast<long double>(total.n) * (total.n - 1)));
    }
    EstimateResult r;
    r.estimate = mean;
    r.std_error = std::sqrt(var / n);
    r.trials = total.n;
    r.seed = config.master_seed;
    return r;
}

}  // namespace couponlab
