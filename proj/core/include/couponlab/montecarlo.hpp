#pragma once

#include <cstdint>
#include <vector>

#include "couponlab/rng.hpp"

namespace couponlab {

/// A simulation run is a pure function of this struct: trial i always lands in
/// stream i / chunk, and stream s always draws from substream(master_seed, s),
/// whatever the thread count.
struct SimConfig {
    long d = 1;
    long h = 1;
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 42;
    std::uint32_t streams = 64;
};

void validate(const SimConfig& config);

struct CollectorOutcome {
    long completion_time = 0;
    long singletons = 0;  ///< types held exactly once at completion
};

/// Draws uniform coupons until every one of d types has at least h copies.
CollectorOutcome simulate_collector(long d, long h, Xoshiro256StarStar& rng);

enum class Winner { First, Second, Tie };

struct RaceStep {
    int first = 0;   ///< distinct coupons held by collector 1 after this draw
    int second = 0;  ///< same for collector 2
};

struct RaceTrajectory {
    std::vector<RaceStep> steps;  ///< steps[i] is the state after draw i+1
    long finish_step = 0;
    Winner winner = Winner::Tie;
};

/// Two independent collectors draw in lockstep until one (or both) holds all d types.
RaceTrajectory simulate_race(long d, Xoshiro256StarStar& rng);

/// Same, reusing `out`'s storage.
void simulate_race(long d, Xoshiro256StarStar& rng, RaceTrajectory& out);

enum class RaceEvent {
    Simultaneous,  ///< both complete on the same draw
    TieThenAhead,  ///< tied for a prefix, then the leader stays strictly ahead to the finish
    NeverBehind,   ///< sole winner never held fewer distinct coupons (ties allowed)
};

/// Classifies a finished race; d = 1 is a tie on the first draw and counts for every event.
bool race_event_holds(RaceEvent event, const RaceTrajectory& trajectory, long d);

struct EstimateResult {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// Counts of all three race events over one shared set of trials.
struct RaceEventCounts {
    std::uint64_t trials = 0;
    std::uint64_t simultaneous = 0;
    std::uint64_t tie_then_ahead = 0;
    std::uint64_t never_behind = 0;

    std::uint64_t count(RaceEvent event) const;
};

/// Threads used when the caller passes 0: COUPONLAB_THREADS if set, else
/// hardware concurrency.
unsigned default_thread_count();

RaceEventCounts count_race_events(const SimConfig& config, unsigned threads = 0);

/// Bernoulli estimate of P(event) with std_error = sqrt(p(1-p)/trials).
EstimateResult estimate_event(RaceEvent event, const SimConfig& config, unsigned threads = 0);

EstimateResult to_estimate(std::uint64_t hits, std::uint64_t trials, std::uint64_t seed);

enum class CollectorStatistic { CompletionTime, Singletons };

/// Sample mean of a collector statistic with std_error = s / sqrt(trials).
EstimateResult estimate_mean(CollectorStatistic statistic, const SimConfig& config, unsigned threads = 0);

}  // namespace couponlab
