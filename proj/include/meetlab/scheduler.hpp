#pragma once
// Agent-selection strategies for the two-agent process. A scheduler yields,
// per round and configuration, the probability that agent 1 is the one to
// move. The alternating pattern is round-based rather than configuration
// based: each agent's first activation is a single round, every later
// activation is a double, agents taking turns (1; 2; 1,1; 2,2; ...).

#include <cstdint>
#include <string>
#include <vector>

#include "meetlab/linalg.hpp"
#include "meetlab/meeting.hpp"
#include "meetlab/state_space.hpp"

namespace meetlab {

enum class SchedulerKind {
    optimal_adversary,
    uniform_random,
    alternating,
    avoid_original,
    fixed_probability,
};

inline std::string to_string(SchedulerKind k) {
    switch (k) {
        case SchedulerKind::optimal_adversary: return "optimal";
        case SchedulerKind::uniform_random: return "random";
        case SchedulerKind::alternating: return "alternating";
        case SchedulerKind::avoid_original: return "avoid-original";
        case SchedulerKind::fixed_probability: return "fixed";
    }
    return "?";
}

class Scheduler {
public:
    static Scheduler optimal(std::vector<std::uint8_t> policy, int dim) {
        Scheduler s(SchedulerKind::optimal_adversary);
        s.policy_ = std::move(policy);
        s.dim_ = dim;
        if (static_cast<int>(s.policy_.size()) != dim * dim)
            throw InvalidParams("policy table has wrong shape");
        return s;
    }

    static Scheduler uniform(double p = 0.5) {
        if (p < 0.0 || p > 1.0) throw InvalidParams("probability must be in [0, 1]");
        Scheduler s(SchedulerKind::uniform_random);
        s.p_ = p;
        return s;
    }

    static Scheduler alternating() { return Scheduler(SchedulerKind::alternating); }

    static Scheduler avoid_original() { return Scheduler(SchedulerKind::avoid_original); }

    static Scheduler fixed(Matrix move1_prob) {
        Scheduler s(SchedulerKind::fixed_probability);
        s.prob_ = std::move(move1_prob);
        return s;
    }

    SchedulerKind kind() const { return kind_; }

    double move1_probability(const StateSpace& ss, WalkMode mode, int s1, int s2,
                             long round) const {
        switch (kind_) {
            case SchedulerKind::uniform_random:
                return p_;
            case SchedulerKind::alternating: {
                if (round == 0) return 1.0;
                if (round == 1) return 0.0;
                const long block = (round - 2) / 2;
                return block % 2 == 0 ? 1.0 : 0.0;
            }
            case SchedulerKind::avoid_original: {
                if (mode != WalkMode::nonatomic)
                    throw InvalidParams("avoid-original is defined for the nonatomic walk only");
                const State a = ss.state(s1);
                const State b = ss.state(s2);
                // Whenever one agent waits at a vertex the other is heading
                // into, move the waiting agent out; otherwise move agent 1.
                if (a.is_original() && b.is_intermediate() && b.to == a.from) return 1.0;
                if (b.is_original() && a.is_intermediate() && a.to == b.from) return 0.0;
                return 1.0;
            }
            case SchedulerKind::optimal_adversary: {
                const int k = mode == WalkMode::atomic ? ss.graph().n() : ss.size();
                if (k != dim_) throw InvalidParams("policy dimension does not match the walk");
                const int agent = policy_[static_cast<std::size_t>(s1) * dim_ + s2];
                if (agent != 1 && agent != 2)
                    throw InvalidParams("policy undefined for configuration " +
                                        std::to_string(s1) + "," + std::to_string(s2));
                return agent == 1 ? 1.0 : 0.0;
            }
            case SchedulerKind::fixed_probability:
                return prob_(s1, s2);
        }
        return 0.5;
    }

private:
    explicit Scheduler(SchedulerKind kind) : kind_(kind) {}

    SchedulerKind kind_;
    double p_ = 0.5;
    std::vector<std::uint8_t> policy_;
    int dim_ = 0;
    Matrix prob_;
};

} // namespace meetlab
