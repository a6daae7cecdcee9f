#pragma once
// Simple connected undirected graphs: validation, the edge-list text format,
// and the generator families used throughout the experiment suite.

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meetlab/errors.hpp"
#include "meetlab/rng.hpp"

namespace meetlab {

using Edge = std::pair<int, int>;

// Immutable after construction. Vertices are dense indices 0..n-1; adjacency
// lists are sorted; the edge list is kept canonical (u < v, lexicographic).
class Graph {
public:
    // Validates: n >= 2, no self-loops, no duplicate edges, indices in range,
    // connected, at least one edge.
    static Graph from_edges(int n, std::vector<Edge> edges) {
        if (n < 2) throw ValidationError("graph must have at least 2 vertices");
        for (auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ValidationError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                      ": vertex index out of range [0, " + std::to_string(n) + ")");
            if (u == v)
                throw ValidationError("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 1; i < edges.size(); ++i)
            if (edges[i] == edges[i - 1])
                throw ValidationError("duplicate edge " + std::to_string(edges[i].first) + "-" +
                                      std::to_string(edges[i].second));
        if (edges.empty()) throw ValidationError("graph must have at least one edge");

        Graph g;
        g.n_ = n;
        g.edges_ = std::move(edges);
        g.adj_.assign(static_cast<std::size_t>(n), {});
        for (const auto& [u, v] : g.edges_) {
            g.adj_[static_cast<std::size_t>(u)].push_back(v);
            g.adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

        // Connectivity: one BFS from vertex 0 must reach everything.
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adj_[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    q.push(w);
                }
        }
        if (reached != n) {
            int missing = 0;
            while (seen[static_cast<std::size_t>(missing)]) ++missing;
            throw ValidationError("graph is disconnected: vertex " + std::to_string(missing) +
                                  " is unreachable from vertex 0");
        }
        return g;
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph() = default;
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
};

namespace detail {

inline bool parse_int_token(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    std::size_t i = 0;
    long long v = 0;
    for (; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
        v = v * 10 + (tok[i] - '0');
        if (v > 1'000'000'000LL) return false;
    }
    out = static_cast<int>(v);
    return true;
}

} // namespace detail

// Edge-list text format: first content line "n m", then m lines "u v".
// Lines starting with '#' and blank lines are ignored. Errors carry the
// 1-based line number of the offending line.
inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;

    auto split = [](const std::string& s) {
        std::vector<std::string> toks;
        std::istringstream ls(s);
        std::string t;
        while (ls >> t) toks.push_back(t);
        return toks;
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        auto toks = split(line);
        if (n < 0) {
            if (toks.size() != 2 || !detail::parse_int_token(toks[0], n) ||
                !detail::parse_int_token(toks[1], m))
                throw ParseError("line " + std::to_string(line_no) + ": expected header 'n m'");
            continue;
        }
        if (static_cast<int>(edges.size()) >= m)
            throw ParseError("line " + std::to_string(line_no) + ": more than the declared " +
                             std::to_string(m) + " edges");
        int u, v;
        if (toks.size() != 2 || !detail::parse_int_token(toks[0], u) ||
            !detail::parse_int_token(toks[1], v))
            throw ParseError("line " + std::to_string(line_no) + ": expected edge 'u v'");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("empty input: missing 'n m' header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("declared " + std::to_string(m) + " edges but found " +
                         std::to_string(edges.size()));
    return Graph::from_edges(n, std::move(edges));
}

// Canonical form: header then edges sorted lexicographically with u < v.
inline std::string serialize(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

enum class GraphFamily { path, cycle, complete, star, lollipop, random_connected };

inline GraphFamily family_from_string(std::string_view s) {
    if (s == "path") return GraphFamily::path;
    if (s == "cycle") return GraphFamily::cycle;
    if (s == "complete") return GraphFamily::complete;
    if (s == "star") return GraphFamily::star;
    if (s == "lollipop") return GraphFamily::lollipop;
    if (s == "random_connected" || s == "random") return GraphFamily::random_connected;
    throw InvalidParams("unknown graph family '" + std::string(s) + "'");
}

inline std::string to_string(GraphFamily f) {
    switch (f) {
        case GraphFamily::path: return "path";
        case GraphFamily::cycle: return "cycle";
        case GraphFamily::complete: return "complete";
        case GraphFamily::star: return "star";
        case GraphFamily::lollipop: return "lollipop";
        case GraphFamily::random_connected: return "random_connected";
    }
    return "?";
}

struct GenOptions {
    int clique = 0;           // lollipop clique size k
    std::uint64_t seed = 0;   // random_connected
    double edge_prob = 0.3;   // random_connected extra-edge probability
};

namespace detail {

// Uniform labeled tree on n vertices via a random Pruefer sequence.
inline std::vector<Edge> random_tree(int n, Rng& rng) {
    std::vector<Edge> edges;
    if (n == 2) {
        edges.emplace_back(0, 1);
        return edges;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& s : seq) s = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++deg[static_cast<std::size_t>(s)];
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int s : seq) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)]) {
                leaf = v;
                break;
            }
        edges.emplace_back(leaf, s);
        used[static_cast<std::size_t>(leaf)] = 1;
        --deg[static_cast<std::size_t>(s)];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)]) {
            (a < 0 ? a : b) = v;
        }
    edges.emplace_back(a, b);
    return edges;
}

} // namespace detail

// Generator families. lollipop = k-clique on {0..k-1} with the path
// (k-1)-k-...-(n-1) hanging off vertex k-1. random_connected = uniform random
// spanning tree plus each remaining pair independently with edge_prob;
// bit-identical for a fixed seed.
inline Graph generate(GraphFamily family, int n, GenOptions opts = {}) {
    if (n < 2) throw InvalidParams("graph size must be at least 2");
    std::vector<Edge> edges;
    switch (family) {
        case GraphFamily::path:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case GraphFamily::cycle:
            if (n < 3) throw InvalidParams("cycle requires n >= 3");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, n - 1);
            break;
        case GraphFamily::complete:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            break;
        case GraphFamily::star:
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            break;
        case GraphFamily::lollipop: {
            const int k = opts.clique;
            if (k < 3 || k > n) throw InvalidParams("lollipop requires 3 <= k <= n");
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
            for (int i = k - 1; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        }
        case GraphFamily::random_connected: {
            if (opts.edge_prob < 0.0 || opts.edge_prob > 1.0)
                throw InvalidParams("edge_prob must be in [0, 1]");
            Rng rng(opts.seed);
            edges = detail::random_tree(n, rng);
            for (auto& [u, v] : edges)
                if (u > v) std::swap(u, v);
            std::sort(edges.begin(), edges.end());
            std::vector<Edge> extra;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (std::binary_search(edges.begin(), edges.end(), Edge{u, v})) continue;
                    if (rng.unit() < opts.edge_prob) extra.emplace_back(u, v);
                }
            edges.insert(edges.end(), extra.begin(), extra.end());
            break;
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

} // namespace meetlab
