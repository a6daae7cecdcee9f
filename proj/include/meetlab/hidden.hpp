#pragma once
// The travel-time preorder on states, its minimal ("hidden") elements, and
// the potential function a hidden state induces. The potential dominates the
// worst-case meeting time, which is what makes hidden states worth finding.

#include <cstdint>
#include <vector>

#include "meetlab/hitting.hpp"

namespace meetlab {

// s <= s' iff reaching the reversal of s' from s is no slower than the other
// way around. The tolerance absorbs linear-solver noise; near-ties may be
// mutually <=, which is harmless for minimality.
inline bool eht_leq(const ExtHitTable& eh, const StateSpace& ss, int s, int t,
                    double tol = 1e-9) {
    return eh(s, ss.bar_index(t)) <= eh(t, ss.bar_index(s)) + tol;
}

inline bool is_hidden(const ExtHitTable& eh, const StateSpace& ss, int s, double tol = 1e-9) {
    for (int t = 0; t < ss.size(); ++t)
        if (!eht_leq(eh, ss, s, t, tol)) return false;
    return true;
}

struct HiddenReport {
    int size = 0;
    std::vector<std::uint8_t> relation;  // row-major size x size, 1 = leq
    std::vector<int> hidden_states;      // ascending state indices
    int chosen_hidden = -1;              // smallest-index mid-edge hidden state
    int atomic_hidden_vertex = -1;       // minimal vertex under the classical order

    bool leq(int s, int t) const {
        return relation[static_cast<std::size_t>(s) * size + t] != 0;
    }
};

// Materializes the full relation, the minimal set, and the canonical choices.
// The canonical hidden state is restricted to mid-edge states: on highly
// symmetric graphs original states tie into the minimal set, but the potential
// expansion into vertex terms needs a mid-edge reference, and one always
// exists. Original-vertex minimality reuses the original-pair block of the
// table (those entries are exactly twice the classical times).
inline HiddenReport find_hidden(const ExtHitTable& eh, const StateSpace& ss, double tol = 1e-9) {
    const int total = ss.size();
    HiddenReport report;
    report.size = total;
    report.relation.assign(static_cast<std::size_t>(total) * total, 0);
    for (int s = 0; s < total; ++s)
        for (int t = 0; t < total; ++t)
            report.relation[static_cast<std::size_t>(s) * total + t] =
                eht_leq(eh, ss, s, t, tol) ? 1 : 0;

    for (int s = 0; s < total; ++s) {
        bool minimal = true;
        for (int t = 0; t < total && minimal; ++t) minimal = report.leq(s, t);
        if (minimal) report.hidden_states.push_back(s);
    }
    if (report.hidden_states.empty())
        throw NoHiddenState("no minimal state found; the preorder lost transitivity");
    for (int s : report.hidden_states)
        if (ss.state(s).is_intermediate()) {
            report.chosen_hidden = s;
            break;
        }
    if (report.chosen_hidden < 0)
        throw NoHiddenState("no mid-edge state is minimal; this should be impossible");

    const int n = ss.graph().n();
    for (int v = 0; v < n && report.atomic_hidden_vertex < 0; ++v) {
        bool minimal = true;
        for (int w = 0; w < n && minimal; ++w) minimal = eh(v, w) <= eh(w, v) + tol;
        if (minimal) report.atomic_hidden_vertex = v;
    }
    if (report.atomic_hidden_vertex < 0)
        throw NoHiddenState("no minimal vertex found in the classical order");
    return report;
}

// Potential anchored at a hidden state:
//   phi(x, y) = Ht(x, bar y) + Ht(y, bar hidden) - Ht(hidden, bar y).
// Symmetric in (x, y) and non-negative whenever `hidden` really is minimal.
inline double phi_tilde(const ExtHitTable& eh, const StateSpace& ss, int hidden, int x, int y,
                        double tol = 1e-9) {
    if (!is_hidden(eh, ss, hidden, tol))
        throw NotHidden("state " + state_name(ss.state(hidden)) + " is not hidden");
    return eh(x, ss.bar_index(y)) + eh(y, ss.bar_index(hidden)) - eh(hidden, ss.bar_index(y));
}

// Full table of the potential for one hidden state; validates once.
inline Matrix phi_table(const ExtHitTable& eh, const StateSpace& ss, int hidden,
                        double tol = 1e-9) {
    if (!is_hidden(eh, ss, hidden, tol))
        throw NotHidden("state " + state_name(ss.state(hidden)) + " is not hidden");
    const int total = ss.size();
    Matrix phi(total, total, 0.0);
    const int bh = ss.bar_index(hidden);
    for (int x = 0; x < total; ++x)
        for (int y = 0; y < total; ++y) {
            const int by = ss.bar_index(y);
            phi(x, y) = eh(x, by) + eh(y, bh) - eh(hidden, by);
        }
    return phi;
}

inline bool is_hidden_vertex(const HitTable& h, int z, double tol = 1e-9) {
    for (int v = 0; v < h.size(); ++v)
        if (h(z, v) > h(v, z) + tol) return false;
    return true;
}

// Classical potential for the vertex-to-vertex walk, anchored at a vertex z
// that reaches everything at least as fast as it is reached.
inline double phi_atomic(const HitTable& h, int z, int x, int y, double tol = 1e-9) {
    if (!is_hidden_vertex(h, z, tol))
        throw NotHidden("vertex " + std::to_string(z) + " is not hidden");
    return h(x, y) + h(y, z) - h(z, y);
}

// Closed-form expansion of the potential on an original pair (x, y) in terms
// of classical hitting times only, for a mid-edge hidden state t -> u:
//   2 * (H(x,y) + H(y,u) - H(u,y) + d_u - 1 + sum_{z in N(u), z != t} H(z,u)).
// Agrees with phi_tilde(original x, original y) exactly.
inline double theorem1_bound(const ExtHitTable& eh, const StateSpace& ss, const HitTable& h,
                             int hidden, int x, int y, double tol = 1e-9) {
    const State hs = ss.state(hidden);
    if (!hs.is_intermediate())
        throw NotHidden("closed-form bound needs a mid-edge hidden state");
    if (!is_hidden(eh, ss, hidden, tol))
        throw NotHidden("state " + state_name(hs) + " is not hidden");
    const Graph& g = ss.graph();
    const int t = hs.from, u = hs.to;
    double sum = 0.0;
    for (int z : g.neighbors(u))
        if (z != t) sum += h(z, u);
    return 2.0 * (h(x, y) + h(y, u) - h(u, y) + g.degree(u) - 1.0 + sum);
}

} // namespace meetlab
