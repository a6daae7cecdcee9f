#pragma once
// One-stop verification: every structural identity, bound, and impossibility
// statement the library is built around, evaluated on a concrete graph with
// per-check residuals. Also hosts the shared suite of small graphs and the
// growth-rate sweep.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "meetlab/graph.hpp"
#include "meetlab/hidden.hpp"
#include "meetlab/hitting.hpp"
#include "meetlab/meeting.hpp"
#include "meetlab/simulate.hpp"

namespace meetlab {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    double worst = 0.0;  // residual, violation count, or excess, per check
    std::string detail;
};

struct VerifyReport {
    std::string graph_name;
    std::vector<CheckResult> checks;
    bool overall_pass = true;

    void add(CheckResult c) {
        if (!c.skipped) overall_pass = overall_pass && c.pass;
        checks.push_back(std::move(c));
    }
};

struct VerifyOptions {
    double tol = 1e-9;            // residual tolerance for exact identities
    double bound_margin = 1e-6;   // slack for bound comparisons against solver output
    long mdp_config_cap = 2'000'000;   // skip meeting-time checks above this many configurations
    int triple_exhaustive_cap = 15;    // state count up to which triples are exhaustive
    long sampled_triples = 10'000;
    std::uint64_t seed = 12345;
    double vi_tol = 1e-9;
    long vi_max_iters = 1'000'000;
    long impossibility_trials = 200;
    long impossibility_rounds = 2'000;
};

namespace detail {

// Visit either all triples over [0, k) or `samples` seeded ones.
template <class Fn>
void for_each_triple(int k, bool exhaustive, long samples, std::uint64_t seed, Fn&& fn) {
    if (exhaustive) {
        for (int x = 0; x < k; ++x)
            for (int y = 0; y < k; ++y)
                for (int z = 0; z < k; ++z) fn(x, y, z);
        return;
    }
    for (long t = 0; t < samples; ++t) {
        const auto u = static_cast<std::uint64_t>(t);
        fn(static_cast<int>(counter_below(seed, u, 0, static_cast<std::uint32_t>(k))),
           static_cast<int>(counter_below(seed, u, 1, static_cast<std::uint32_t>(k))),
           static_cast<int>(counter_below(seed, u, 2, static_cast<std::uint32_t>(k))));
    }
}

inline std::string fmt_residual(double v) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << v;
    return out.str();
}

} // namespace detail

inline VerifyReport run_verification(const Graph& g, const std::string& graph_name = "graph",
                                     const VerifyOptions& opts = {}) {
    VerifyReport report;
    report.graph_name = graph_name;

    // A failed sub-computation is recorded as a failed check, not an abort.
    auto guarded = [&report](const std::string& name, auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            report.add({name, false, false, 0.0, std::string("error: ") + e.what()});
        }
    };

    const StateSpace ss(g);
    const int total = ss.size();
    const HitTable h = hitting_times(g);
    const ExtHitTable formula = ext_hitting_formula(ss, h);
    const ExtHitTable oracle = ext_hitting_oracle(ss);

    double h_g = 0.0;
    for (int x = 0; x < g.n(); ++x)
        for (int y = 0; y < g.n(); ++y) h_g = std::max(h_g, h(x, y));
    // Absorbing-chain conditioning grows with the worst hitting time; switch
    // to a relative tolerance once absolute 1e-9 stops being meaningful.
    const bool relative = h_g > 1e6;
    const double tol = relative ? std::max(opts.tol, 1e-12 * h_g) : opts.tol;
    const std::string tol_note = relative ? "relative tolerance " + detail::fmt_residual(tol) : "";

    {
        double worst = 0.0;
        for (int s = 0; s < total; ++s)
            for (int t = 0; t < total; ++t)
                worst = std::max(worst, std::fabs(formula(s, t) - oracle(s, t)));
        report.add({"ext-hitting: formula vs oracle", worst <= tol, false, worst, tol_note});
    }
    {
        double worst = 0.0;
        for (int x = 0; x < g.n(); ++x)
            for (int y = 0; y < g.n(); ++y)
                worst = std::max(worst, std::fabs(oracle(x, y) - 2.0 * h(x, y)));
        report.add({"ext-hitting: vertex pairs are twice classical", worst <= tol, false, worst,
                    tol_note});
    }
    {
        double worst = 0.0;
        for (int x = 0; x < g.n(); ++x)
            for (int y = 0; y < g.n(); ++y)
                for (int z = 0; z < g.n(); ++z)
                    worst = std::max(worst, check_triangle_original(h, x, y, z));
        report.add({"classical triangle identity", worst <= tol, false, worst,
                    "all vertex triples"});
    }
    const bool exhaustive = total <= opts.triple_exhaustive_cap;
    {
        double worst = 0.0;
        detail::for_each_triple(total, exhaustive, opts.sampled_triples, opts.seed,
                                [&](int x, int y, int z) {
                                    worst = std::max(worst,
                                                     check_triangle_extended(formula, ss, x, y, z));
                                });
        report.add({"state triangle identity", worst <= tol, false, worst,
                    exhaustive ? "exhaustive" : "sampled"});
    }
    {
        double worst = 0.0;
        for (int s = 0; s < total; ++s)
            for (int t = 0; t < total; ++t)
                if (s != t) worst = std::max(worst, averaging_residual(formula, ss, s, t));
        report.add({"ext-hitting one-step averaging", worst <= tol, false, worst, ""});
    }
    {
        // The split through the tail vertex; skip the mid-edge diagonal where
        // the left side is 0 by definition.
        double worst = 0.0;
        for (int s = 0; s < total; ++s)
            for (int t = 0; t < total; ++t)
                if (s != t) worst = std::max(worst, splitting_residual(formula, ss, s, t));
        report.add({"ext-hitting tail split", worst <= tol, false, worst, ""});
    }

    HiddenReport hidden;
    bool have_hidden = false;
    guarded("hidden states exist (mid-edge present)", [&] {
        hidden = find_hidden(formula, ss, tol);
        have_hidden = true;
        long violations = 0;
        for (int v = 0; v < g.n(); ++v)
            for (int w : g.neighbors(v))
                if (!hidden.leq(ss.index_of(State::intermediate(w, v)), v)) ++violations;
        const bool ok = !hidden.hidden_states.empty() &&
                        ss.state(hidden.chosen_hidden).is_intermediate() && violations == 0;
        report.add({"hidden states exist (mid-edge present)", ok, false,
                    static_cast<double>(violations),
                    std::to_string(hidden.hidden_states.size()) + " hidden; chosen " +
                        state_name(ss.state(hidden.chosen_hidden)) + "; atomic hidden v:" +
                        std::to_string(hidden.atomic_hidden_vertex)});
    });
    if (!have_hidden) return report;

    {
        long violations = 0;
        for (int s = 0; s < total; ++s)
            for (int t = 0; t < total; ++t)
                if (!hidden.leq(s, t) && !hidden.leq(t, s)) ++violations;
        report.add({"state preorder total", violations == 0, false,
                    static_cast<double>(violations), ""});
    }
    {
        long violations = 0;
        detail::for_each_triple(total, exhaustive, opts.sampled_triples, opts.seed + 1,
                                [&](int x, int y, int z) {
                                    if (hidden.leq(x, y) && hidden.leq(y, z) && !hidden.leq(x, z))
                                        ++violations;
                                });
        report.add({"state preorder transitive", violations == 0, false,
                    static_cast<double>(violations), exhaustive ? "exhaustive" : "sampled"});
    }

    const Matrix phi = phi_table(formula, ss, hidden.chosen_hidden, tol);
    {
        double worst = 0.0;
        for (int x = 0; x < total; ++x)
            for (int y = 0; y < total; ++y)
                worst = std::max(worst, std::fabs(phi(x, y) - phi(y, x)));
        report.add({"potential symmetric", worst <= tol, false, worst, ""});
    }
    {
        double lowest = 0.0;
        for (int x = 0; x < total; ++x)
            for (int y = 0; y < total; ++y) lowest = std::min(lowest, phi(x, y));
        report.add({"potential non-negative", lowest >= -tol, false, std::max(-lowest, 0.0), ""});
    }
    {
        double worst = 0.0;
        for (int s1 = 0; s1 < total; ++s1)
            for (int s2 = 0; s2 < total; ++s2) {
                if (ss.is_meeting(s1, s2)) continue;
                double avg = 0.0;
                for (int z : ss.adjacent(s1)) avg += phi(z, s2);
                avg /= ss.degree(s1);
                worst = std::max(worst, std::fabs(phi(s1, s2) - 1.0 - avg));
            }
        report.add({"potential one-step averaging", worst <= tol, false, worst,
                    "non-meeting pairs"});
    }
    guarded("closed-form bound matches potential on vertex pairs", [&] {
        double worst = 0.0;
        for (int x = 0; x < g.n(); ++x)
            for (int y = 0; y < g.n(); ++y)
                worst = std::max(worst, std::fabs(theorem1_bound(formula, ss, h,
                                                                hidden.chosen_hidden, x, y) -
                                                  phi(x, y)));
        report.add({"closed-form bound matches potential on vertex pairs", worst <= tol, false,
                    worst, ""});
    });

    const double configs = static_cast<double>(total) * total;
    if (configs <= static_cast<double>(opts.mdp_config_cap)) {
        guarded("meeting <= potential (each hidden state)", [&] {
            SolveOptions sopts;
            sopts.tol = opts.vi_tol;
            sopts.max_iters = opts.vi_max_iters;
            sopts.divergence_guard = &phi;
            const MeetingSolution sol = solve_meeting(ss, WalkMode::nonatomic, sopts);
            {
                double worst = -1e300;
                for (int hs : hidden.hidden_states) {
                    const Matrix ph = phi_table(formula, ss, hs, tol);
                    for (int a = 0; a < total; ++a)
                        for (int b = 0; b < total; ++b)
                            worst = std::max(worst, sol.value(a, b) - ph(a, b));
                }
                report.add({"meeting <= potential (each hidden state)",
                            worst <= opts.bound_margin, false, worst,
                            std::to_string(hidden.hidden_states.size()) + " hidden states"});
            }
            {
                const MeetEqReport eq = verify_meeteq(sol, ss);
                report.add({"meeting optimality equations", eq.worst() <= opts.bound_margin,
                            false, eq.worst(), std::to_string(eq.tie_count) + " exact ties"});
            }
            {
                double worst = 0.0;
                for (int a = 0; a < total; ++a)
                    for (int b = 0; b < total; ++b)
                        worst = std::max(worst, std::fabs(sol.value(a, b) - sol.value(b, a)));
                report.add({"meeting values symmetric", worst <= opts.bound_margin, false, worst,
                            ""});
            }
        });
    } else {
        report.add({"meeting <= potential (each hidden state)", true, true, 0.0,
                    "skipped (scale)"});
        report.add({"meeting optimality equations", true, true, 0.0, "skipped (scale)"});
        report.add({"meeting values symmetric", true, true, 0.0, "skipped (scale)"});
    }

    guarded("atomic meeting <= atomic potential", [&] {
        Matrix atomic_phi(g.n(), g.n(), 0.0);
        for (int x = 0; x < g.n(); ++x)
            for (int y = 0; y < g.n(); ++y)
                atomic_phi(x, y) = phi_atomic(h, hidden.atomic_hidden_vertex, x, y, tol);
        SolveOptions sopts;
        sopts.tol = opts.vi_tol;
        sopts.max_iters = opts.vi_max_iters;
        sopts.divergence_guard = &atomic_phi;
        const MeetingSolution sol = solve_meeting(ss, WalkMode::atomic, sopts);
        double worst = -1e300;
        for (int x = 0; x < g.n(); ++x)
            for (int y = 0; y < g.n(); ++y)
                worst = std::max(worst, sol.value(x, y) - atomic_phi(x, y));
        report.add({"atomic meeting <= atomic potential", worst <= opts.bound_margin, false,
                    worst, ""});
    });

    guarded("avoidance strategies never meet on vertices", [&] {
        // Meetings restricted to vertices: no trial may ever co-locate there.
        const Config start{0, g.n() - 1};
        long events = 0;
        for (const auto& sched : {Scheduler::avoid_original(), Scheduler::alternating()}) {
            for (long i = 0; i < opts.impossibility_trials; ++i) {
                const auto res = run_trial(ss, sched, WalkMode::nonatomic, start,
                                           opts.seed + static_cast<std::uint64_t>(i),
                                           opts.impossibility_rounds, MeetMode::original_only);
                if (!res.timed_out()) ++events;
            }
        }
        report.add({"avoidance strategies never meet on vertices", events == 0, false,
                    static_cast<double>(events),
                    std::to_string(2 * opts.impossibility_trials) + " trials x " +
                        std::to_string(opts.impossibility_rounds) + " rounds"});
    });

    return report;
}

struct SuiteGraph {
    std::string name;
    Graph graph;
};

// The shared small-graph corpus: paths and cycles 3..12, complete 3..8,
// stars 4..8, three lollipops, five seeded random connected graphs (n <= 8).
inline std::vector<SuiteGraph> standard_suite() {
    std::vector<SuiteGraph> suite;
    for (int n = 3; n <= 12; ++n)
        suite.push_back({"path-" + std::to_string(n), generate(GraphFamily::path, n)});
    for (int n = 3; n <= 12; ++n)
        suite.push_back({"cycle-" + std::to_string(n), generate(GraphFamily::cycle, n)});
    for (int n = 3; n <= 8; ++n)
        suite.push_back({"complete-" + std::to_string(n), generate(GraphFamily::complete, n)});
    for (int n = 4; n <= 8; ++n)
        suite.push_back({"star-" + std::to_string(n), generate(GraphFamily::star, n)});
    for (auto [n, k] : {std::pair{6, 3}, std::pair{8, 4}, std::pair{10, 5}}) {
        GenOptions o;
        o.clique = k;
        suite.push_back({"lollipop-" + std::to_string(n) + "-" + std::to_string(k),
                         generate(GraphFamily::lollipop, n, o)});
    }
    for (auto [n, seed] : {std::pair{5, 101}, std::pair{6, 102}, std::pair{7, 103},
                           std::pair{8, 104}, std::pair{8, 105}}) {
        GenOptions o;
        o.seed = static_cast<std::uint64_t>(seed);
        suite.push_back({"random-" + std::to_string(n) + "-s" + std::to_string(seed),
                         generate(GraphFamily::random_connected, n, o)});
    }
    return suite;
}

struct SweepRow {
    int n = 0;
    bool ok = false;
    std::string error;
    double h_g = 0.0;            // worst classical hitting time
    double max_phi = 0.0;        // potential, maximized over all configurations
    double max_m_atomic = 0.0;   // worst atomic meeting time over vertex pairs
    double max_m_nonatomic = 0.0;  // worst nonatomic meeting time over all configurations
    double theorem1_max = 0.0;   // closed-form bound, maximized over vertex pairs
    double slack = 0.0;          // max_phi - max_m_nonatomic
};

struct SweepOptions {
    int clique = 0;  // lollipop clique size; 0 = n/2 (at least 3)
    std::uint64_t seed = 1;
    double edge_prob = 0.3;
    double tol = 1e-9;
    double vi_tol = 1e-9;
    long vi_max_iters = 1'000'000;
    long config_cap = 2'000'000;
};

// One row per size. Nonatomic maxima range over all start configurations
// (mid-edge starts included; those realize the worst cases on dense graphs);
// the closed-form bound column ranges over vertex pairs, where it is defined.
inline std::vector<SweepRow> sweep(GraphFamily family, int n_from, int n_to,
                                   const SweepOptions& opts = {}) {
    std::vector<SweepRow> rows;
    for (int n = n_from; n <= n_to; ++n) {
        SweepRow row;
        row.n = n;
        try {
            GenOptions gen;
            gen.seed = opts.seed;
            gen.edge_prob = opts.edge_prob;
            if (family == GraphFamily::lollipop)
                gen.clique = opts.clique > 0 ? opts.clique : std::max(3, n / 2);
            const Graph g = generate(family, n, gen);
            const StateSpace ss(g);
            const double configs = static_cast<double>(ss.size()) * ss.size();
            if (configs > static_cast<double>(opts.config_cap))
                throw InvalidParams("skipped (scale): " + std::to_string(ss.size() * ss.size()) +
                                    " configurations");
            const HitTable h = hitting_times(g);
            const ExtHitTable eh = ext_hitting_formula(ss, h);
            const HiddenReport hidden = find_hidden(eh, ss, opts.tol);
            const Matrix phi = phi_table(eh, ss, hidden.chosen_hidden, opts.tol);

            for (int x = 0; x < g.n(); ++x)
                for (int y = 0; y < g.n(); ++y) {
                    row.h_g = std::max(row.h_g, h(x, y));
                    row.theorem1_max =
                        std::max(row.theorem1_max,
                                 theorem1_bound(eh, ss, h, hidden.chosen_hidden, x, y));
                }
            for (int a = 0; a < ss.size(); ++a)
                for (int b = 0; b < ss.size(); ++b) row.max_phi = std::max(row.max_phi, phi(a, b));

            SolveOptions sopts;
            sopts.tol = opts.vi_tol;
            sopts.max_iters = opts.vi_max_iters;
            sopts.divergence_guard = &phi;
            const MeetingSolution nonatomic = solve_meeting(ss, WalkMode::nonatomic, sopts);
            for (int a = 0; a < ss.size(); ++a)
                for (int b = 0; b < ss.size(); ++b)
                    row.max_m_nonatomic = std::max(row.max_m_nonatomic, nonatomic.value(a, b));

            Matrix atomic_phi(g.n(), g.n(), 0.0);
            for (int x = 0; x < g.n(); ++x)
                for (int y = 0; y < g.n(); ++y)
                    atomic_phi(x, y) = phi_atomic(h, hidden.atomic_hidden_vertex, x, y, opts.tol);
            SolveOptions aopts = sopts;
            aopts.divergence_guard = &atomic_phi;
            const MeetingSolution atomic = solve_meeting(ss, WalkMode::atomic, aopts);
            for (int x = 0; x < g.n(); ++x)
                for (int y = 0; y < g.n(); ++y)
                    row.max_m_atomic = std::max(row.max_m_atomic, atomic.value(x, y));

            row.slack = row.max_phi - row.max_m_nonatomic;
            row.ok = true;
        } catch (const Error& e) {
            row.ok = false;
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace meetlab
