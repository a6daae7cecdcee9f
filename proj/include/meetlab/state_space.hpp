#pragma once
// The mid-edge state model. An agent is either at an original vertex of G or
// on an edge with a committed direction; both directions of one edge occupy
// the same physical midpoint. Moves: an original vertex fans out to its d_v
// directed midpoints, a midpoint has exactly one successor (its head vertex).

#include <string>
#include <vector>

#include "meetlab/errors.hpp"
#include "meetlab/graph.hpp"

namespace meetlab {

// from == to encodes the original vertex `from`; otherwise the agent sits on
// edge {from, to} heading from -> to.
struct State {
    int from = 0;
    int to = 0;

    bool is_original() const { return from == to; }
    bool is_intermediate() const { return from != to; }

    static State original(int v) { return {v, v}; }
    static State intermediate(int x, int y) { return {x, y}; }

    friend bool operator==(const State&, const State&) = default;
};

// Direction reversal on midpoints, identity on original vertices.
inline State bar(State s) { return {s.to, s.from}; }

// Tail projection: the vertex an agent last departed (itself if original).
inline int project_f(State s) { return s.from; }

// Head projection: the vertex an agent will next occupy (itself if original).
inline int project_g(State s) { return s.to; }

// "v:3" for originals, "i:2>5" for the midpoint of {2,5} heading 2 -> 5.
inline std::string state_name(State s) {
    if (s.is_original()) return "v:" + std::to_string(s.from);
    return "i:" + std::to_string(s.from) + ">" + std::to_string(s.to);
}

// Ordered pair of state indices; the first slot is agent 1.
struct Config {
    int s1 = 0;
    int s2 = 0;
    friend bool operator==(const Config&, const Config&) = default;
};

// Indexed enumeration of all n + 2m states with their adjacency. Index order
// is fixed: originals by vertex, then midpoints sorted by (from, to).
class StateSpace {
public:
    explicit StateSpace(Graph g) : graph_(std::move(g)) {
        const int n = graph_.n();
        states_.reserve(static_cast<std::size_t>(n + 2 * graph_.m()));
        for (int v = 0; v < n; ++v) states_.push_back(State::original(v));
        offset_.assign(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            offset_[static_cast<std::size_t>(v)] = static_cast<int>(states_.size());
            for (int w : graph_.neighbors(v)) states_.push_back(State::intermediate(v, w));
        }
        const int total = static_cast<int>(states_.size());
        adj_.assign(static_cast<std::size_t>(total), {});
        bar_.assign(static_cast<std::size_t>(total), 0);
        for (int i = 0; i < total; ++i) {
            const State s = states_[static_cast<std::size_t>(i)];
            bar_[static_cast<std::size_t>(i)] = raw_index(bar(s));
            auto& nb = adj_[static_cast<std::size_t>(i)];
            if (s.is_original()) {
                for (int w : graph_.neighbors(s.from)) nb.push_back(raw_index(State::intermediate(s.from, w)));
            } else {
                nb.push_back(s.to);
            }
        }
    }

    const Graph& graph() const { return graph_; }
    int size() const { return static_cast<int>(states_.size()); }
    const State& state(int idx) const { return states_[static_cast<std::size_t>(idx)]; }

    int index_of(State s) const {
        if (s.from < 0 || s.from >= graph_.n() || s.to < 0 || s.to >= graph_.n())
            throw InvalidParams("state " + state_name(s) + ": vertex out of range");
        if (s.is_intermediate() && !graph_.has_edge(s.from, s.to))
            throw InvalidParams("state " + state_name(s) + ": no such edge");
        return raw_index(s);
    }

    int bar_index(int idx) const { return bar_[static_cast<std::size_t>(idx)]; }
    const std::vector<int>& adjacent(int idx) const { return adj_[static_cast<std::size_t>(idx)]; }
    int degree(int idx) const { return static_cast<int>(adj_[static_cast<std::size_t>(idx)].size()); }

    // Agents meet when co-located at an original vertex or at the same edge
    // midpoint in either direction.
    bool is_meeting(int s1, int s2) const { return s1 == s2 || bar_[static_cast<std::size_t>(s2)] == s1; }
    bool is_meeting(Config c) const { return is_meeting(c.s1, c.s2); }

private:
    int raw_index(State s) const {
        if (s.is_original()) return s.from;
        const auto& nb = graph_.neighbors(s.from);
        const auto it = std::lower_bound(nb.begin(), nb.end(), s.to);
        return offset_[static_cast<std::size_t>(s.from)] + static_cast<int>(it - nb.begin());
    }

    Graph graph_;
    std::vector<State> states_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> bar_;
    std::vector<int> offset_;
};

inline StateSpace build_state_space(Graph g) { return StateSpace(std::move(g)); }

// Accepts the serialized forms "v:3" and "i:2>5".
inline State parse_state(const std::string& text) {
    auto bad = [&] { return ParseError("bad state '" + text + "' (want v:<k> or i:<a>><b>)"); };
    int a = 0, b = 0;
    if (text.rfind("v:", 0) == 0) {
        if (!detail::parse_int_token(text.substr(2), a)) throw bad();
        return State::original(a);
    }
    if (text.rfind("i:", 0) == 0) {
        const auto gt = text.find('>', 2);
        if (gt == std::string::npos) throw bad();
        if (!detail::parse_int_token(text.substr(2, gt - 2), a) ||
            !detail::parse_int_token(text.substr(gt + 1), b))
            throw bad();
        return State::intermediate(a, b);
    }
    throw bad();
}

} // namespace meetlab
