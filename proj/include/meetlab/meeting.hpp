#pragma once
// Worst-case expected meeting times as a maximum-expectation absorption
// problem. Each round the scheduler picks one agent; the pick that maximizes
// the expected remaining time defines the Bellman operator. Value iteration
// from zero climbs monotonically to the least fixed point; a fixed
// deterministic policy can then be evaluated exactly by Gaussian elimination.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "meetlab/hitting.hpp"
#include "meetlab/linalg.hpp"
#include "meetlab/state_space.hpp"

namespace meetlab {

enum class WalkMode { atomic, nonatomic };

inline std::string to_string(WalkMode m) { return m == WalkMode::atomic ? "atomic" : "nonatomic"; }

inline WalkMode walk_mode_from_string(const std::string& s) {
    if (s == "atomic") return WalkMode::atomic;
    if (s == "nonatomic" || s == "non-atomic") return WalkMode::nonatomic;
    throw InvalidParams("unknown walk mode '" + s + "'");
}

namespace detail {

// Uniform view over the two walks: atomic moves vertex-to-vertex on G and
// meets on vertex equality; nonatomic moves on the state space and meets on
// the midpoint-aware predicate.
struct PairWalk {
    const StateSpace& ss;
    WalkMode mode;

    int positions() const { return mode == WalkMode::atomic ? ss.graph().n() : ss.size(); }
    const std::vector<int>& moves(int s) const {
        return mode == WalkMode::atomic ? ss.graph().neighbors(s) : ss.adjacent(s);
    }
    bool meets(int a, int b) const {
        return mode == WalkMode::atomic ? a == b : ss.is_meeting(a, b);
    }
    std::string config_name(int a, int b) const {
        if (mode == WalkMode::atomic)
            return state_name(State::original(a)) + "|" + state_name(State::original(b));
        return state_name(ss.state(a)) + "|" + state_name(ss.state(b));
    }
};

} // namespace detail

struct SolveOptions {
    double tol = 1e-9;
    long max_iters = 1'000'000;
    // Certified per-configuration upper bounds; iterates exceeding an entry
    // by more than 1 abort with Diverged (they never should).
    const Matrix* divergence_guard = nullptr;
    // Exact refinement of the final values via policy_evaluate, applied when
    // the number of non-meeting configurations is at most this.
    bool sharpen = true;
    int sharpen_max_unknowns = 2000;
    // Invoked every observe_every sweeps with the current iterate.
    std::function<void(long iter, double sup_change, const Matrix& values)> observer;
    long observe_every = 25;
};

struct MeetingSolution {
    WalkMode mode = WalkMode::nonatomic;
    Matrix values;                     // K x K over ordered configurations
    std::vector<std::uint8_t> policy;  // per config a*K+b: 1 or 2; 0 on meetings
    long iterations = 0;
    double residual = 0.0;
    bool sharpened = false;

    int dim() const { return values.rows(); }
    double value(int a, int b) const { return values(a, b); }
    int moved_agent(int a, int b) const {
        return policy[static_cast<std::size_t>(a) * values.cols() + b];
    }
};

// Expected absorption times under a fixed deterministic policy, solved
// exactly. Throws SingularSystem naming the configuration from which the
// policy never reaches a meeting.
inline Matrix policy_evaluate(const StateSpace& ss, const std::vector<std::uint8_t>& policy,
                              WalkMode mode) {
    const detail::PairWalk walk{ss, mode};
    const int k = walk.positions();
    if (static_cast<int>(policy.size()) != k * k)
        throw InvalidParams("policy table has wrong shape");

    std::vector<int> id(static_cast<std::size_t>(k) * k, -1);
    std::vector<std::pair<int, int>> configs;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (!walk.meets(a, b)) {
                id[static_cast<std::size_t>(a) * k + b] = static_cast<int>(configs.size());
                configs.emplace_back(a, b);
            }

    const int unknowns = static_cast<int>(configs.size());
    Matrix a(unknowns, unknowns, 0.0);
    std::vector<double> b(static_cast<std::size_t>(unknowns), 1.0);
    for (int r = 0; r < unknowns; ++r) {
        const auto [s1, s2] = configs[static_cast<std::size_t>(r)];
        const int agent = policy[static_cast<std::size_t>(s1) * k + s2];
        if (agent != 1 && agent != 2)
            throw InvalidParams("policy undefined for configuration " + walk.config_name(s1, s2));
        const int mover = agent == 1 ? s1 : s2;
        a(r, r) += 1.0;
        const double w = 1.0 / static_cast<double>(walk.moves(mover).size());
        for (int z : walk.moves(mover)) {
            const int na = agent == 1 ? z : s1;
            const int nb = agent == 1 ? s2 : z;
            const int c = id[static_cast<std::size_t>(na) * k + nb];
            if (c >= 0) a(r, c) -= w;
        }
    }

    std::vector<double> t;
    try {
        t = solve_dense(std::move(a), std::move(b));
    } catch (const SingularSystem& e) {
        std::string where = e.column >= 0 && e.column < unknowns
                                ? walk.config_name(configs[static_cast<std::size_t>(e.column)].first,
                                                   configs[static_cast<std::size_t>(e.column)].second)
                                : "?";
        throw SingularSystem("policy never reaches a meeting from configuration " + where,
                             e.column);
    }

    Matrix values(k, k, 0.0);
    for (int r = 0; r < unknowns; ++r) {
        const auto [s1, s2] = configs[static_cast<std::size_t>(r)];
        values(s1, s2) = t[static_cast<std::size_t>(r)];
    }
    return values;
}

// Value iteration for the maximizing scheduler. Starts from all zeros, so the
// iterates increase monotonically toward the optimal values; terminates when
// the sup-norm update drops below tol. Ties between the two agents resolve to
// agent 1, which keeps extracted policies reproducible.
inline MeetingSolution solve_meeting(const StateSpace& ss, WalkMode mode, SolveOptions opts = {}) {
    if (opts.tol <= 0.0) throw InvalidParams("tolerance must be positive");
    const detail::PairWalk walk{ss, mode};
    const int k = walk.positions();
    if (opts.divergence_guard &&
        (opts.divergence_guard->rows() != k || opts.divergence_guard->cols() != k))
        throw InvalidParams("divergence guard has wrong shape");

    std::vector<std::uint8_t> meeting(static_cast<std::size_t>(k) * k, 0);
    int unknowns = 0;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            const bool meet = walk.meets(a, b);
            meeting[static_cast<std::size_t>(a) * k + b] = meet ? 1 : 0;
            if (!meet) ++unknowns;
        }

    Matrix cur(k, k, 0.0), nxt(k, k, 0.0);
    const Matrix* guard = opts.divergence_guard;

    auto averages = [&](const Matrix& v, int s1, int s2) {
        double avg1 = 0.0;
        for (int z : walk.moves(s1)) avg1 += v(z, s2);
        avg1 /= static_cast<double>(walk.moves(s1).size());
        double avg2 = 0.0;
        for (int z : walk.moves(s2)) avg2 += v(s1, z);
        avg2 /= static_cast<double>(walk.moves(s2).size());
        return std::pair<double, double>{avg1, avg2};
    };

    MeetingSolution sol;
    sol.mode = mode;
    long iter = 0;
    double prev_sup = 0.0;
    for (; iter < opts.max_iters; ++iter) {
        double sup = 0.0;
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                if (meeting[static_cast<std::size_t>(a) * k + b]) {
                    nxt(a, b) = 0.0;
                    continue;
                }
                const auto [avg1, avg2] = averages(cur, a, b);
                const double v = 1.0 + std::max(avg1, avg2);
                sup = std::max(sup, v - cur(a, b));
                if (guard && v > (*guard)(a, b) + 1.0)
                    throw Diverged("value at " + walk.config_name(a, b) +
                                   " exceeded its certified bound");
                nxt(a, b) = v;
            }
        std::swap(cur, nxt);
        if (opts.observer && (iter % opts.observe_every == 0)) opts.observer(iter, sup, cur);
        // Updates shrink geometrically, so the distance still to go is about
        // sup * r / (1 - r) for the observed contraction r; stop only once
        // both the update and that tail estimate are below tol.
        const double ratio =
            prev_sup > 0.0 ? std::min(sup / prev_sup, 1.0 - 1e-12) : 0.0;
        const double tail = sup > 0.0 ? sup * ratio / (1.0 - ratio) : 0.0;
        prev_sup = sup;
        if (sup < opts.tol && tail <= opts.tol) {
            sol.residual = sup;
            ++iter;
            break;
        }
        if (iter + 1 == opts.max_iters)
            throw NotConverged("value iteration did not reach tol " + std::to_string(opts.tol) +
                               " within " + std::to_string(opts.max_iters) + " sweeps");
    }
    sol.iterations = iter;

    sol.policy.assign(static_cast<std::size_t>(k) * k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (meeting[static_cast<std::size_t>(a) * k + b]) continue;
            const auto [avg1, avg2] = averages(cur, a, b);
            sol.policy[static_cast<std::size_t>(a) * k + b] = avg1 >= avg2 ? 1 : 2;
        }

    sol.values = std::move(cur);
    if (opts.sharpen && unknowns <= opts.sharpen_max_unknowns) {
        sol.values = policy_evaluate(ss, sol.policy, mode);
        sol.sharpened = true;
    }
    return sol;
}

struct MeetEqReport {
    double max_residual = 0.0;  // worst averaging violation of the chosen agent
    double max_other_excess = 0.0;  // worst amount the unchosen agent's average exceeds the value
    long tie_count = 0;             // configurations where both agents' averages coincide
    double worst() const { return std::max(max_residual, max_other_excess); }
};

// Optimality conditions of a solved instance: in every non-meeting
// configuration the moved agent's one-step average reproduces the value, and
// the other agent's average does not exceed it. Exact ties (symmetric graphs)
// are counted, not failed.
inline MeetEqReport verify_meeteq(const MeetingSolution& sol, const StateSpace& ss,
                                  double tie_tol = 1e-9) {
    const detail::PairWalk walk{ss, sol.mode};
    const int k = walk.positions();
    MeetEqReport report;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (walk.meets(a, b)) continue;
            double avg1 = 0.0;
            for (int z : walk.moves(a)) avg1 += sol.values(z, b);
            avg1 = 1.0 + avg1 / static_cast<double>(walk.moves(a).size());
            double avg2 = 0.0;
            for (int z : walk.moves(b)) avg2 += sol.values(a, z);
            avg2 = 1.0 + avg2 / static_cast<double>(walk.moves(b).size());
            const int agent = sol.moved_agent(a, b);
            const double chosen = agent == 1 ? avg1 : avg2;
            const double other = agent == 1 ? avg2 : avg1;
            report.max_residual = std::max(report.max_residual, std::fabs(sol.values(a, b) - chosen));
            report.max_other_excess = std::max(report.max_other_excess, other - sol.values(a, b));
            if (std::fabs(avg1 - avg2) <= tie_tol) ++report.tie_count;
        }
    report.max_other_excess = std::max(report.max_other_excess, 0.0);
    return report;
}

} // namespace meetlab
