// meetlab — generate graphs, compute exact hitting/meeting tables, find
// hidden states, simulate schedulers, and run the verification suite.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "meetlab/meetlab.hpp"

namespace {

using nlohmann::json;
using namespace meetlab;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << text;
}

std::string fmt(double v) {
    std::ostringstream out;
    out << std::setprecision(12) << v;
    return out.str();
}

// Graph input: either a file (edge-list format, "-" for stdin) or an inline
// generator selected via --family.
struct GraphSource {
    std::string input;
    std::string family;
    int n = 0;
    int clique = 0;
    std::uint64_t seed = 0;
    double edge_prob = 0.3;

    void attach(CLI::App* cmd) {
        cmd->add_option("input", input, "graph file in edge-list format, or - for stdin");
        cmd->add_option("--family", family, "generate instead: " + family_help());
        cmd->add_option("-n,--size", n, "vertex count for --family");
        cmd->add_option("-k,--clique", clique, "clique size (lollipop)");
        cmd->add_option("--gen-seed", seed, "generator seed (random_connected)");
        cmd->add_option("--edge-prob", edge_prob, "extra-edge probability (random_connected)");
    }

    static std::string family_help() {
        return "path|cycle|complete|star|lollipop|random_connected";
    }

    std::pair<Graph, std::string> resolve() const {
        if (!family.empty()) {
            GenOptions opts;
            opts.clique = clique;
            opts.seed = seed;
            opts.edge_prob = edge_prob;
            return {generate(family_from_string(family), n, opts),
                    family + "-" + std::to_string(n)};
        }
        if (input.empty()) throw InvalidParams("no graph given: pass a file or --family");
        return {parse_graph(read_input(input)), input == "-" ? "stdin" : input};
    }
};

std::string table_csv(const StateSpace& ss, const Matrix& values) {
    std::ostringstream out;
    out << "state";
    for (int t = 0; t < ss.size(); ++t) out << ',' << state_name(ss.state(t));
    out << '\n';
    for (int s = 0; s < ss.size(); ++s) {
        out << state_name(ss.state(s));
        for (int t = 0; t < ss.size(); ++t) out << ',' << fmt(values(s, t));
        out << '\n';
    }
    return out.str();
}

json table_json(const StateSpace& ss, const Matrix& values) {
    json names = json::array();
    for (int t = 0; t < ss.size(); ++t) names.push_back(state_name(ss.state(t)));
    json rows = json::array();
    for (int s = 0; s < ss.size(); ++s) {
        json row = json::array();
        for (int t = 0; t < ss.size(); ++t) row.push_back(values(s, t));
        rows.push_back(std::move(row));
    }
    return json{{"states", names}, {"values", rows}};
}

Config parse_config(const StateSpace& ss, const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("expected '<state>,<state>', got '" + text + "'");
    return {ss.index_of(parse_state(text.substr(0, comma))),
            ss.index_of(parse_state(text.substr(comma + 1)))};
}

std::string config_name(const StateSpace& ss, WalkMode mode, int a, int b) {
    if (mode == WalkMode::atomic)
        return state_name(State::original(a)) + "|" + state_name(State::original(b));
    return state_name(ss.state(a)) + "|" + state_name(ss.state(b));
}

int run(int argc, char** argv) {
    CLI::App app{"exact and simulated adversarial meeting times of two-agent random walks"};
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph and print it");
    std::string gen_family;
    int gen_n = 0, gen_k = 0;
    std::uint64_t gen_seed = 0;
    double gen_p = 0.3;
    std::string gen_out, gen_format = "csv";
    gen_cmd->add_option("--family", gen_family, GraphSource::family_help())->required();
    gen_cmd->add_option("-n,--size", gen_n, "vertex count")->required();
    gen_cmd->add_option("-k,--clique", gen_k, "clique size (lollipop)");
    gen_cmd->add_option("--seed", gen_seed, "generator seed (random_connected)");
    gen_cmd->add_option("--edge-prob", gen_p, "extra-edge probability (random_connected)");
    gen_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");
    gen_cmd->add_option("--format", gen_format, "csv (edge-list text) or json");
    double gen_tol = 1e-9;
    gen_cmd->add_option("--tol", gen_tol, "accepted for interface uniformity; unused here");

    // ---- hitting ------------------------------------------------------
    auto* hit_cmd = app.add_subcommand("hitting", "expected-travel-time tables");
    GraphSource hit_src;
    hit_src.attach(hit_cmd);
    bool hit_oracle = false, hit_original = false, hit_triangle = false;
    std::string hit_out, hit_format = "csv";
    double hit_tol = 1e-9;
    hit_cmd->add_flag("--oracle", hit_oracle, "solve the full absorbing system instead of the closed forms");
    hit_cmd->add_flag("--original", hit_original, "emit the classical vertex table instead");
    hit_cmd->add_flag("--check-triangle", hit_triangle, "print the triangle-identity max residuals");
    hit_cmd->add_option("-o,--output", hit_out, "output file");
    hit_cmd->add_option("--format", hit_format, "csv or json");
    hit_cmd->add_option("--tol", hit_tol, "residual tolerance");

    // ---- hidden -------------------------------------------------------
    auto* hid_cmd = app.add_subcommand("hidden", "hidden states and the comparison relation");
    GraphSource hid_src;
    hid_src.attach(hid_cmd);
    bool hid_relation = false;
    std::string hid_out, hid_format = "csv";
    double hid_tol = 1e-9;
    hid_cmd->add_flag("--relation", hid_relation, "also emit the full relation matrix");
    hid_cmd->add_option("-o,--output", hid_out, "output file");
    hid_cmd->add_option("--format", hid_format, "csv or json");
    hid_cmd->add_option("--tol", hid_tol, "comparison tolerance");

    // ---- meeting ------------------------------------------------------
    auto* meet_cmd = app.add_subcommand("meeting", "worst-case meeting times and the optimal policy");
    GraphSource meet_src;
    meet_src.attach(meet_cmd);
    std::string meet_mode_str = "nonatomic", meet_pairs = "all", meet_policy_out, meet_out,
                meet_format = "csv";
    double meet_tol = 1e-9;
    long meet_max_iters = 1'000'000;
    meet_cmd->add_option("--mode", meet_mode_str, "atomic or nonatomic");
    meet_cmd->add_option("--tol", meet_tol, "value-iteration tolerance");
    meet_cmd->add_option("--max-iters", meet_max_iters, "value-iteration sweep cap");
    meet_cmd->add_option("--policy-out", meet_policy_out, "write the optimal policy as JSON");
    meet_cmd->add_option("--pairs", meet_pairs, "all, or one configuration '<s1>,<s2>'");
    meet_cmd->add_option("-o,--output", meet_out, "output file");
    meet_cmd->add_option("--format", meet_format, "csv or json");

    // ---- simulate -----------------------------------------------------
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo under a scheduler");
    GraphSource sim_src;
    sim_src.attach(sim_cmd);
    std::string sim_sched, sim_policy, sim_start, sim_meet = "any", sim_mode_str = "nonatomic",
                sim_out, sim_hist_out;
    long sim_trials = 10'000, sim_max_rounds = 1'000'000;
    std::uint64_t sim_seed = 1;
    sim_cmd->add_option("--scheduler", sim_sched, "optimal|random|alternating|avoid-original")
        ->required();
    sim_cmd->add_option("--policy", sim_policy, "policy JSON (required for optimal)");
    sim_cmd->add_option("--start", sim_start, "start configuration '<s1>,<s2>'")->required();
    sim_cmd->add_option("--trials", sim_trials, "number of trials");
    sim_cmd->add_option("--seed", sim_seed, "base seed; trial i uses seed+i");
    sim_cmd->add_option("--max-rounds", sim_max_rounds, "timeout horizon per trial");
    sim_cmd->add_option("--meet-mode", sim_meet, "any or original");
    sim_cmd->add_option("--mode", sim_mode_str, "atomic or nonatomic");
    sim_cmd->add_option("--hist-out", sim_hist_out, "write the round histogram as CSV");
    sim_cmd->add_option("-o,--output", sim_out, "output file for the summary");
    std::string sim_format = "json";
    sim_cmd->add_option("--format", sim_format, "json (default) or csv key,value rows");
    double sim_tol = 1e-9;
    sim_cmd->add_option("--tol", sim_tol, "accepted for interface uniformity; unused here");

    // ---- verify -------------------------------------------------------
    auto* ver_cmd = app.add_subcommand("verify", "run every structural check on a graph");
    GraphSource ver_src;
    ver_src.attach(ver_cmd);
    VerifyOptions ver_opts;
    std::string ver_out, ver_format = "text";
    ver_cmd->add_option("--tol", ver_opts.tol, "residual tolerance");
    ver_cmd->add_option("--margin", ver_opts.bound_margin, "bound-comparison margin");
    ver_cmd->add_option("--config-cap", ver_opts.mdp_config_cap,
                        "skip meeting checks above this many configurations");
    ver_cmd->add_option("--check-seed", ver_opts.seed, "seed for sampled checks");
    ver_cmd->add_option("--trials", ver_opts.impossibility_trials, "impossibility trials");
    ver_cmd->add_option("--rounds", ver_opts.impossibility_rounds, "impossibility horizon");
    ver_cmd->add_option("-o,--output", ver_out, "output file");
    ver_cmd->add_option("--format", ver_format, "text or json");

    // ---- sweep --------------------------------------------------------
    auto* sw_cmd = app.add_subcommand("sweep", "growth-rate table over a size range");
    std::string sw_family, sw_out, sw_format = "csv";
    int sw_from = 0, sw_to = 0;
    SweepOptions sw_opts;
    sw_cmd->add_option("--family", sw_family, GraphSource::family_help())->required();
    sw_cmd->add_option("--from", sw_from, "smallest size")->required();
    sw_cmd->add_option("--to", sw_to, "largest size")->required();
    sw_cmd->add_option("-k,--clique", sw_opts.clique, "lollipop clique size (default n/2)");
    sw_cmd->add_option("--seed", sw_opts.seed, "generator seed (random_connected)");
    sw_cmd->add_option("--edge-prob", sw_opts.edge_prob, "extra-edge probability");
    sw_cmd->add_option("--tol", sw_opts.vi_tol, "value-iteration tolerance");
    sw_cmd->add_option("--config-cap", sw_opts.config_cap, "per-size configuration cap");
    sw_cmd->add_option("-o,--output", sw_out, "output file");
    sw_cmd->add_option("--format", sw_format, "csv or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (gen_cmd->parsed()) {
        GenOptions opts;
        opts.clique = gen_k;
        opts.seed = gen_seed;
        opts.edge_prob = gen_p;
        const Graph g = generate(family_from_string(gen_family), gen_n, opts);
        if (gen_format == "json") {
            json edges = json::array();
            for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
            write_output(gen_out, json{{"n", g.n()}, {"m", g.m()}, {"edges", edges}}.dump(2) + "\n");
        } else {
            write_output(gen_out, serialize(g));
        }
        return 0;
    }

    if (hit_cmd->parsed()) {
        const auto [g, name] = hit_src.resolve();
        const StateSpace ss(g);
        const HitTable h = hitting_times(g);
        if (hit_triangle) {
            const ExtHitTable eh = hit_oracle ? ext_hitting_oracle(ss) : ext_hitting_formula(ss, h);
            double worst_orig = 0.0;
            for (int x = 0; x < g.n(); ++x)
                for (int y = 0; y < g.n(); ++y)
                    for (int z = 0; z < g.n(); ++z)
                        worst_orig = std::max(worst_orig, check_triangle_original(h, x, y, z));
            double worst_ext = 0.0;
            const bool exhaustive = ss.size() <= 15;
            detail::for_each_triple(ss.size(), exhaustive, 10'000, 12345,
                                    [&](int x, int y, int z) {
                                        worst_ext = std::max(worst_ext, check_triangle_extended(
                                                                            eh, ss, x, y, z));
                                    });
            if (hit_format == "json") {
                write_output(hit_out, json{{"classical_max_residual", worst_orig},
                                           {"state_max_residual", worst_ext},
                                           {"state_triples", exhaustive ? "exhaustive" : "sampled"}}
                                              .dump(2) + "\n");
            } else {
                std::ostringstream out;
                out << "identity,max_residual\nclassical," << fmt(worst_orig) << "\nstates,"
                    << fmt(worst_ext) << '\n';
                write_output(hit_out, out.str());
            }
            return 0;
        }
        if (hit_original) {
            std::ostringstream out;
            if (hit_format == "json") {
                json rows = json::array();
                for (int x = 0; x < g.n(); ++x) {
                    json row = json::array();
                    for (int y = 0; y < g.n(); ++y) row.push_back(h(x, y));
                    rows.push_back(std::move(row));
                }
                write_output(hit_out, json{{"n", g.n()}, {"values", rows}}.dump(2) + "\n");
            } else {
                out << "vertex";
                for (int y = 0; y < g.n(); ++y) out << ",v:" << y;
                out << '\n';
                for (int x = 0; x < g.n(); ++x) {
                    out << "v:" << x;
                    for (int y = 0; y < g.n(); ++y) out << ',' << fmt(h(x, y));
                    out << '\n';
                }
                write_output(hit_out, out.str());
            }
            return 0;
        }
        const ExtHitTable eh = hit_oracle ? ext_hitting_oracle(ss) : ext_hitting_formula(ss, h);
        if (hit_format == "json")
            write_output(hit_out, table_json(ss, eh.values).dump(2) + "\n");
        else
            write_output(hit_out, table_csv(ss, eh.values));
        return 0;
    }

    if (hid_cmd->parsed()) {
        const auto [g, name] = hid_src.resolve();
        const StateSpace ss(g);
        const HitTable h = hitting_times(g);
        const ExtHitTable eh = ext_hitting_formula(ss, h);
        const HiddenReport rep = find_hidden(eh, ss, hid_tol);
        if (hid_format == "json") {
            json hidden = json::array();
            for (int s : rep.hidden_states) hidden.push_back(state_name(ss.state(s)));
            json out{{"hidden_states", hidden},
                     {"chosen_hidden", state_name(ss.state(rep.chosen_hidden))},
                     {"atomic_hidden_vertex", rep.atomic_hidden_vertex}};
            if (hid_relation) {
                json matrix = json::array();
                for (int s = 0; s < ss.size(); ++s) {
                    json row = json::array();
                    for (int t = 0; t < ss.size(); ++t) row.push_back(rep.leq(s, t) ? 1 : 0);
                    matrix.push_back(std::move(row));
                }
                out["relation"] = matrix;
            }
            write_output(hid_out, out.dump(2) + "\n");
        } else {
            std::ostringstream out;
            out << "hidden_states";
            for (int s : rep.hidden_states) out << ',' << state_name(ss.state(s));
            out << '\n';
            out << "chosen_hidden," << state_name(ss.state(rep.chosen_hidden)) << '\n';
            out << "atomic_hidden_vertex,v:" << rep.atomic_hidden_vertex << '\n';
            if (hid_relation) {
                out << "state";
                for (int t = 0; t < ss.size(); ++t) out << ',' << state_name(ss.state(t));
                out << '\n';
                for (int s = 0; s < ss.size(); ++s) {
                    out << state_name(ss.state(s));
                    for (int t = 0; t < ss.size(); ++t) out << ',' << (rep.leq(s, t) ? 1 : 0);
                    out << '\n';
                }
            }
            write_output(hid_out, out.str());
        }
        return 0;
    }

    if (meet_cmd->parsed()) {
        const auto [g, name] = meet_src.resolve();
        const WalkMode mode = walk_mode_from_string(meet_mode_str);
        const StateSpace ss(g);
        const HitTable h = hitting_times(g);
        const ExtHitTable eh = ext_hitting_formula(ss, h);
        const HiddenReport rep = find_hidden(eh, ss);

        Matrix phi;
        if (mode == WalkMode::nonatomic) {
            phi = phi_table(eh, ss, rep.chosen_hidden);
        } else {
            phi = Matrix(g.n(), g.n(), 0.0);
            for (int x = 0; x < g.n(); ++x)
                for (int y = 0; y < g.n(); ++y)
                    phi(x, y) = phi_atomic(h, rep.atomic_hidden_vertex, x, y);
        }
        SolveOptions sopts;
        sopts.tol = meet_tol;
        sopts.max_iters = meet_max_iters;
        sopts.divergence_guard = &phi;
        const MeetingSolution sol = solve_meeting(ss, mode, sopts);
        const int k = sol.dim();

        if (!meet_policy_out.empty()) {
            json policy = json::object();
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    if (sol.moved_agent(a, b) != 0)
                        policy[config_name(ss, mode, a, b)] = sol.moved_agent(a, b);
            write_output(meet_policy_out, json{{"mode", to_string(mode)},
                                               {"n", g.n()},
                                               {"m", g.m()},
                                               {"policy", policy}}.dump(2) + "\n");
        }

        std::vector<std::pair<int, int>> rows;
        if (meet_pairs == "all") {
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) rows.emplace_back(a, b);
        } else {
            Config c{};
            if (mode == WalkMode::atomic) {
                const auto comma = meet_pairs.find(',');
                if (comma == std::string::npos)
                    throw ParseError("expected '<s1>,<s2>' for --pairs");
                const State a = parse_state(meet_pairs.substr(0, comma));
                const State b = parse_state(meet_pairs.substr(comma + 1));
                if (!a.is_original() || !b.is_original())
                    throw InvalidParams("atomic configurations use original states only");
                c = {a.from, b.from};
            } else {
                c = parse_config(ss, meet_pairs);
            }
            rows.emplace_back(c.s1, c.s2);
        }

        auto theorem1_cell = [&](int a, int b) -> std::optional<double> {
            if (mode != WalkMode::nonatomic) return std::nullopt;
            const State sa = ss.state(a), sb = ss.state(b);
            if (!sa.is_original() || !sb.is_original()) return std::nullopt;
            return theorem1_bound(eh, ss, h, rep.chosen_hidden, sa.from, sb.from);
        };

        if (meet_format == "json") {
            json out = json::array();
            for (auto [a, b] : rows) {
                json row{{"config", config_name(ss, mode, a, b)},
                         {"m", sol.value(a, b)},
                         {"phi", phi(a, b)},
                         {"slack", phi(a, b) - sol.value(a, b)}};
                if (auto t1 = theorem1_cell(a, b)) row["theorem1_bound"] = *t1;
                out.push_back(std::move(row));
            }
            write_output(meet_out, out.dump(2) + "\n");
        } else {
            std::ostringstream out;
            out << "config,m,phi,theorem1_bound,slack\n";
            for (auto [a, b] : rows) {
                out << config_name(ss, mode, a, b) << ',' << fmt(sol.value(a, b)) << ','
                    << fmt(phi(a, b)) << ',';
                if (auto t1 = theorem1_cell(a, b)) out << fmt(*t1);
                out << ',' << fmt(phi(a, b) - sol.value(a, b)) << '\n';
            }
            write_output(meet_out, out.str());
        }
        return 0;
    }

    if (sim_cmd->parsed()) {
        const auto [g, name] = sim_src.resolve();
        const WalkMode mode = walk_mode_from_string(sim_mode_str);
        const MeetMode meet = meet_mode_from_string(sim_meet);
        const StateSpace ss(g);
        const int k = mode == WalkMode::atomic ? g.n() : ss.size();

        Config start{};
        if (mode == WalkMode::atomic) {
            const auto comma = sim_start.find(',');
            if (comma == std::string::npos) throw ParseError("expected '<s1>,<s2>' for --start");
            const State a = parse_state(sim_start.substr(0, comma));
            const State b = parse_state(sim_start.substr(comma + 1));
            if (!a.is_original() || !b.is_original())
                throw InvalidParams("atomic starts use original states only");
            if (a.from >= g.n() || b.from >= g.n()) throw InvalidParams("start vertex out of range");
            start = {a.from, b.from};
        } else {
            start = parse_config(ss, sim_start);
        }

        Scheduler sched = Scheduler::uniform();
        if (sim_sched == "random") {
            sched = Scheduler::uniform();
        } else if (sim_sched == "alternating") {
            sched = Scheduler::alternating();
        } else if (sim_sched == "avoid-original") {
            sched = Scheduler::avoid_original();
        } else if (sim_sched == "optimal") {
            if (sim_policy.empty()) throw InvalidParams("--policy is required for optimal");
            const json doc = json::parse(read_input(sim_policy));
            if (doc.value("mode", "") != to_string(mode))
                throw InvalidParams("policy file is for mode '" + doc.value("mode", "?") +
                                    "', not '" + to_string(mode) + "'");
            if (doc.value("n", -1) != g.n() || doc.value("m", -1) != g.m())
                throw InvalidParams("policy file does not match this graph");
            std::vector<std::uint8_t> policy(static_cast<std::size_t>(k) * k, 0);
            for (const auto& [key, val] : doc.at("policy").items()) {
                const auto bar_pos = key.find('|');
                if (bar_pos == std::string::npos)
                    throw ParseError("bad policy key '" + key + "'");
                const State a = parse_state(key.substr(0, bar_pos));
                const State b = parse_state(key.substr(bar_pos + 1));
                const int ia = mode == WalkMode::atomic ? a.from : ss.index_of(a);
                const int ib = mode == WalkMode::atomic ? b.from : ss.index_of(b);
                policy[static_cast<std::size_t>(ia) * k + ib] =
                    static_cast<std::uint8_t>(val.get<int>());
            }
            sched = Scheduler::optimal(std::move(policy), k);
        } else {
            throw InvalidParams("unknown scheduler '" + sim_sched + "'");
        }

        const McSummary s =
            monte_carlo(ss, sched, mode, start, sim_seed, sim_trials, sim_max_rounds, meet);
        if (sim_format == "csv") {
            std::ostringstream out;
            out << "key,value\n"
                << "graph," << name << "\nscheduler," << sim_sched << "\nmode,"
                << to_string(mode) << "\nmeet_mode," << to_string(meet) << "\nstart,"
                << sim_start << "\ntrials," << s.trials << "\nbase_seed," << sim_seed
                << "\nmax_rounds," << sim_max_rounds << "\ntimeouts," << s.timeouts
                << "\nall_timed_out," << (s.all_timed_out ? 1 : 0) << '\n';
            if (!s.all_timed_out)
                out << "mean," << fmt(s.mean) << "\nstderr," << fmt(s.std_error)
                    << "\nmin_round," << s.min_round << "\nmax_round," << s.max_round << '\n';
            write_output(sim_out, out.str());
        } else {
            json out{{"graph", name},
                     {"scheduler", sim_sched},
                     {"mode", to_string(mode)},
                     {"meet_mode", to_string(meet)},
                     {"start", sim_start},
                     {"trials", s.trials},
                     {"base_seed", sim_seed},
                     {"max_rounds", sim_max_rounds},
                     {"timeouts", s.timeouts},
                     {"all_timed_out", s.all_timed_out}};
            if (!s.all_timed_out) {
                out["mean"] = s.mean;
                out["stderr"] = s.std_error;
                out["min_round"] = s.min_round;
                out["max_round"] = s.max_round;
            } else {
                out["mean"] = nullptr;
                out["stderr"] = nullptr;
            }
            write_output(sim_out, out.dump(2) + "\n");
        }
        if (!sim_hist_out.empty()) {
            std::ostringstream hist;
            hist << "round,count\n";
            for (const auto& [round, count] : s.histogram) hist << round << ',' << count << '\n';
            write_output(sim_hist_out, hist.str());
        }
        return 0;
    }

    if (ver_cmd->parsed()) {
        const auto [g, name] = ver_src.resolve();
        const VerifyReport rep = run_verification(g, name, ver_opts);
        if (ver_format == "json") {
            json checks = json::array();
            for (const auto& c : rep.checks)
                checks.push_back(json{{"name", c.name},
                                      {"pass", c.pass},
                                      {"skipped", c.skipped},
                                      {"worst", c.worst},
                                      {"detail", c.detail}});
            write_output(ver_out, json{{"graph", rep.graph_name},
                                       {"overall_pass", rep.overall_pass},
                                       {"checks", checks}}.dump(2) + "\n");
        } else {
            std::ostringstream out;
            out << "graph: " << rep.graph_name << '\n';
            for (const auto& c : rep.checks) {
                out << (c.skipped ? "[SKIP]" : c.pass ? "[PASS]" : "[FAIL]") << ' ' << c.name
                    << "  worst=" << detail::fmt_residual(c.worst);
                if (!c.detail.empty()) out << "  (" << c.detail << ')';
                out << '\n';
            }
            out << (rep.overall_pass ? "OVERALL PASS" : "OVERALL FAIL") << '\n';
            write_output(ver_out, out.str());
        }
        return rep.overall_pass ? 0 : 1;
    }

    if (sw_cmd->parsed()) {
        const auto rows = sweep(family_from_string(sw_family), sw_from, sw_to, sw_opts);
        if (sw_format == "json") {
            json out = json::array();
            for (const auto& r : rows) {
                json row{{"family", sw_family}, {"n", r.n}, {"ok", r.ok}};
                if (r.ok) {
                    row["h_g"] = r.h_g;
                    row["max_phi"] = r.max_phi;
                    row["max_m_atomic"] = r.max_m_atomic;
                    row["max_m_nonatomic"] = r.max_m_nonatomic;
                    row["theorem1_max"] = r.theorem1_max;
                    row["slack"] = r.slack;
                } else {
                    row["error"] = r.error;
                }
                out.push_back(std::move(row));
            }
            write_output(sw_out, out.dump(2) + "\n");
        } else {
            std::ostringstream out;
            out << "family,n,status,h_g,max_phi,max_m_atomic,max_m_nonatomic,theorem1_max,slack\n";
            for (const auto& r : rows) {
                out << sw_family << ',' << r.n << ',';
                if (r.ok) {
                    out << "ok," << fmt(r.h_g) << ',' << fmt(r.max_phi) << ','
                        << fmt(r.max_m_atomic) << ',' << fmt(r.max_m_nonatomic) << ','
                        << fmt(r.theorem1_max) << ',' << fmt(r.slack) << '\n';
                } else {
                    out << "error: " << r.error << ",,,,,,\n";
                }
            }
            write_output(sw_out, out.str());
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
