#pragma once
// Expected-travel-time tables, each computable two independent ways.
//
// HitTable holds the classical per-edge walk on G. ExtHitTable holds the
// mid-edge walk on the state space; it can be filled either from the closed
// reductions (everything collapses onto the classical table) or by solving
// the absorbing system directly on all n + 2m states. The two routes agree
// to solver precision, and the test suites lean on exactly that.

#include <cmath>
#include <vector>

#include "meetlab/graph.hpp"
#include "meetlab/linalg.hpp"
#include "meetlab/parallel.hpp"
#include "meetlab/state_space.hpp"

namespace meetlab {

struct HitTable {
    Matrix values; // values(x, y) = expected steps from x to reach y in G
    double operator()(int x, int y) const { return values(x, y); }
    int size() const { return values.rows(); }
};

enum class TableSource { formula, oracle };

struct ExtHitTable {
    Matrix values; // over state indices
    TableSource source = TableSource::formula;
    double operator()(int s, int t) const { return values(s, t); }
    int size() const { return values.rows(); }
};

// Classical hitting times: for each target y solve the (n-1)-unknown system
//   T(x) = 1 + (1/d_x) * sum over z in N(x) of T(z),  T(y) = 0.
// Columns are independent and solved in parallel.
inline HitTable hitting_times(const Graph& g) {
    const int n = g.n();
    HitTable table{Matrix(n, n, 0.0)};
    parallel_for(0, n, [&](int y) {
        const int k = n - 1;
        Matrix a(k, k, 0.0);
        std::vector<double> b(static_cast<std::size_t>(k), 1.0);
        auto id = [&](int x) { return x - (x > y ? 1 : 0); };
        for (int x = 0; x < n; ++x) {
            if (x == y) continue;
            const int r = id(x);
            a(r, r) += 1.0;
            const double w = 1.0 / g.degree(x);
            for (int z : g.neighbors(x))
                if (z != y) a(r, id(z)) -= w;
        }
        const auto t = solve_dense(std::move(a), std::move(b));
        for (int x = 0; x < n; ++x)
            if (x != y) table.values(x, y) = t[static_cast<std::size_t>(id(x))];
    });
    return table;
}

// Expected moves from an original vertex x to commit onto the midpoint of
// {x, y} heading outward: 2*d_x - 1 plus the round trips through the other
// neighbors, all expressible in classical hitting times.
inline double neighbor_commit_time(const Graph& g, const HitTable& h, int x, int y) {
    double total = 2.0 * g.degree(x) - 1.0;
    for (int z : g.neighbors(x))
        if (z != y) total += 2.0 * h(z, x);
    return total;
}

// Closed-form route. Case split on the goal state:
//   goal original w:  2*H(v, w) from an original v, 1 + 2*H(head, w) mid-edge;
//   goal midpoint s_xy: reach x first, then commit (neighbor_commit_time).
// The diagonal is zero by definition and takes priority over the case split.
inline ExtHitTable ext_hitting_formula(const StateSpace& ss, const HitTable& h) {
    const Graph& g = ss.graph();
    const int total = ss.size();
    ExtHitTable table{Matrix(total, total, 0.0), TableSource::formula};

    std::vector<double> commit(static_cast<std::size_t>(total), 0.0);
    for (int t = g.n(); t < total; ++t) {
        const State st = ss.state(t);
        commit[static_cast<std::size_t>(t)] = neighbor_commit_time(g, h, st.from, st.to);
    }

    auto to_vertex = [&](int s, int w) { // expected moves from state s to original w
        const State a = ss.state(s);
        if (a.is_original()) return 2.0 * h(a.from, w);
        return 1.0 + 2.0 * h(a.to, w);
    };

    for (int s = 0; s < total; ++s) {
        for (int t = 0; t < total; ++t) {
            if (s == t) continue;
            const State goal = ss.state(t);
            table.values(s, t) = goal.is_original()
                                     ? to_vertex(s, goal.from)
                                     : to_vertex(s, goal.from) + commit[static_cast<std::size_t>(t)];
        }
    }
    return table;
}

// Independent route: per goal state, solve the absorbing system on the full
// state space (original v -> each of its d_v midpoints with probability
// 1/d_v; a midpoint -> its head with probability 1). No reductions.
inline ExtHitTable ext_hitting_oracle(const StateSpace& ss) {
    const int total = ss.size();
    ExtHitTable table{Matrix(total, total, 0.0), TableSource::oracle};
    parallel_for(0, total, [&](int goal) {
        const int k = total - 1;
        Matrix a(k, k, 0.0);
        std::vector<double> b(static_cast<std::size_t>(k), 1.0);
        auto id = [&](int s) { return s - (s > goal ? 1 : 0); };
        for (int s = 0; s < total; ++s) {
            if (s == goal) continue;
            const int r = id(s);
            a(r, r) += 1.0;
            const double w = 1.0 / ss.degree(s);
            for (int z : ss.adjacent(s))
                if (z != goal) a(r, id(z)) -= w;
        }
        const auto t = solve_dense(std::move(a), std::move(b));
        for (int s = 0; s < total; ++s)
            if (s != goal) table.values(s, goal) = t[static_cast<std::size_t>(id(s))];
    });
    return table;
}

// Round-trip identity on vertex triples: visiting y then z then home equals
// visiting z then y then home. Returns the absolute residual.
inline double check_triangle_original(const HitTable& h, int x, int y, int z) {
    return std::fabs(h(x, y) + h(y, z) + h(z, x) - h(x, z) - h(z, y) - h(y, x));
}

// The state-space generalization: targets are reversed, so each leg ends at
// the position the next agent-of-interest actually occupies.
inline double check_triangle_extended(const ExtHitTable& eh, const StateSpace& ss, int x, int y,
                                      int z) {
    const int bx = ss.bar_index(x), by = ss.bar_index(y), bz = ss.bar_index(z);
    return std::fabs(eh(x, by) + eh(y, bz) + eh(z, bx) - eh(x, bz) - eh(z, by) - eh(y, bx));
}

// One-step averaging residual of an ExtHitTable entry, s != t.
inline double averaging_residual(const ExtHitTable& eh, const StateSpace& ss, int s, int t) {
    double avg = 0.0;
    for (int z : ss.adjacent(s)) avg += eh(z, t);
    avg /= ss.degree(s);
    return std::fabs(eh(s, t) - 1.0 - avg);
}

// Residual of the tail split through f(t): any trip to a state passes its
// tail vertex first. Meaningless on the mid-edge diagonal (entry is 0).
inline double splitting_residual(const ExtHitTable& eh, const StateSpace& ss, int s, int t) {
    const int ft = ss.index_of(State::original(ss.state(t).from));
    return std::fabs(eh(s, t) - eh(s, ft) - eh(ft, t));
}

} // namespace meetlab
