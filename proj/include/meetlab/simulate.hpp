#pragma once
// Seeded Monte Carlo of the two-agent process. Randomness is addressed by
// (trial seed, round, draw) so trials are order-independent and parallel runs
// reproduce bit-identically.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "meetlab/meeting.hpp"
#include "meetlab/parallel.hpp"
#include "meetlab/rng.hpp"
#include "meetlab/scheduler.hpp"
#include "meetlab/state_space.hpp"

namespace meetlab {

enum class MeetMode { any, original_only };

inline std::string to_string(MeetMode m) { return m == MeetMode::any ? "any" : "original"; }

inline MeetMode meet_mode_from_string(const std::string& s) {
    if (s == "any") return MeetMode::any;
    if (s == "original" || s == "original-only") return MeetMode::original_only;
    throw InvalidParams("unknown meet mode '" + s + "'");
}

struct TrialResult {
    long meeting_round = -1;  // -1 = timed out
    int meeting_state = -1;   // agent 1's position at the meeting
    std::vector<Config> trajectory;

    bool timed_out() const { return meeting_round < 0; }
};

namespace detail {

inline bool trial_meets(const PairWalk& walk, MeetMode meet_mode, int s1, int s2) {
    if (walk.mode == WalkMode::atomic) return s1 == s2;
    if (meet_mode == MeetMode::any) return walk.ss.is_meeting(s1, s2);
    return s1 == s2 && walk.ss.state(s1).is_original();
}

} // namespace detail

// One trajectory. The meeting predicate is evaluated every round including
// round 0, so a start that already meets reports meeting_round = 0. Draw 0 of
// a round selects the agent, draw 1 selects its move.
inline TrialResult run_trial(const StateSpace& ss, const Scheduler& sched, WalkMode mode,
                             Config start, std::uint64_t seed, long max_rounds,
                             MeetMode meet_mode = MeetMode::any, long trajectory_cap = 0) {
    const detail::PairWalk walk{ss, mode};
    int s1 = start.s1;
    int s2 = start.s2;
    TrialResult result;
    for (long r = 0;; ++r) {
        if (trajectory_cap > 0 && r < trajectory_cap) result.trajectory.push_back({s1, s2});
        if (detail::trial_meets(walk, meet_mode, s1, s2)) {
            result.meeting_round = r;
            result.meeting_state = s1;
            return result;
        }
        if (r == max_rounds) return result;
        const double p = sched.move1_probability(ss, mode, s1, s2, r);
        const bool move1 = counter_unit(seed, static_cast<std::uint64_t>(r), 0) < p;
        const int mover = move1 ? s1 : s2;
        const auto& moves = walk.moves(mover);
        const int z = moves[counter_below(seed, static_cast<std::uint64_t>(r), 1,
                                          static_cast<std::uint32_t>(moves.size()))];
        (move1 ? s1 : s2) = z;
    }
}

struct McSummary {
    long trials = 0;
    long timeouts = 0;
    bool all_timed_out = false;
    double mean = 0.0;       // over completed trials; 0 when none completed
    double std_error = 0.0;  // sample standard error of the mean
    long min_round = -1;
    long max_round = -1;
    std::map<long, long> histogram;  // meeting round -> completed-trial count
};

// Runs `trials` independent trials with per-trial seeds base_seed + i.
// Timeouts are excluded from the mean and counted separately; an
// all-timed-out run is an expected outcome (flagged, not thrown).
inline McSummary monte_carlo(const StateSpace& ss, const Scheduler& sched, WalkMode mode,
                             Config start, std::uint64_t base_seed, long trials, long max_rounds,
                             MeetMode meet_mode = MeetMode::any) {
    if (trials < 1) throw InvalidParams("trials must be at least 1");
    std::vector<long> rounds(static_cast<std::size_t>(trials), -1);
    parallel_for(0, static_cast<int>(trials), [&](int i) {
        const auto res = run_trial(ss, sched, mode, start,
                                   base_seed + static_cast<std::uint64_t>(i), max_rounds,
                                   meet_mode);
        rounds[static_cast<std::size_t>(i)] = res.meeting_round;
    });

    McSummary s;
    s.trials = trials;
    double sum = 0.0;
    long completed = 0;
    for (long r : rounds) {
        if (r < 0) {
            ++s.timeouts;
            continue;
        }
        ++completed;
        sum += static_cast<double>(r);
        ++s.histogram[r];
        s.min_round = s.min_round < 0 ? r : std::min(s.min_round, r);
        s.max_round = std::max(s.max_round, r);
    }
    s.all_timed_out = completed == 0;
    if (completed > 0) {
        s.mean = sum / static_cast<double>(completed);
        if (completed > 1) {
            double ss2 = 0.0;
            for (long r : rounds)
                if (r >= 0) {
                    const double d = static_cast<double>(r) - s.mean;
                    ss2 += d * d;
                }
            s.std_error = std::sqrt(ss2 / (static_cast<double>(completed) - 1.0) /
                                    static_cast<double>(completed));
        }
    }
    return s;
}

} // namespace meetlab
