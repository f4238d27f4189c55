#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bek/errors.hpp"

namespace bek {

// Simple graph on the vertex set [n], 1-indexed; edges stored as sorted
// unordered pairs {i, j} with i < j.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
        require(n_ >= 1, "Graph: vertex count must be >= 1");
        for (auto& [u, v] : edges) {
            require(u != v, "Graph: loop edge");
            require(1 <= u && u < v && v <= n_, "Graph: edge endpoint out of range");
        }
        std::sort(edges.begin(), edges.end());
        require(std::adjacent_find(edges.begin(), edges.end()) == edges.end(),
                "Graph: duplicate edge");
        edges_ = std::move(edges);
    }

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
    }
    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_) + 1);
        for (auto [u, v] : edges_) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        return adj;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
};

// A subset S of [n] with the connected components of G minus S. The classes
// partition [n] \ S, each sorted ascending, listed by least element.
struct CutSet {
    std::vector<int> s;
    std::vector<std::vector<int>> components;
    int c = 0;

    friend bool operator==(const CutSet&, const CutSet&) = default;
};

inline CutSet components_without(const Graph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s) require(1 <= v && v <= g.n(), "components_without: vertex out of range");

    std::vector<bool> removed(static_cast<std::size_t>(g.n()) + 1, false);
    for (int v : s) removed[static_cast<std::size_t>(v)] = true;
    auto adj = g.adjacency();

    CutSet cs;
    cs.s = std::move(s);
    std::vector<bool> seen(static_cast<std::size_t>(g.n()) + 1, false);
    for (int start = 1; start <= g.n(); ++start) {
        if (removed[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)])
            continue;
        std::vector<int> klass, stack{start};
        seen[static_cast<std::size_t>(start)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            klass.push_back(v);
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (removed[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)])
                    continue;
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
        std::sort(klass.begin(), klass.end());
        cs.components.push_back(std::move(klass));
    }
    cs.c = static_cast<int>(cs.components.size());
    return cs;
}

namespace detail {

// Component counts for every subset of [n], via bitmask flood fill.
inline std::vector<int> component_count_table(const Graph& g) {
    const int n = g.n();
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : g.edges()) {
        nbr[static_cast<std::size_t>(u)] |= (1u << (v - 1));
        nbr[static_cast<std::size_t>(v)] |= (1u << (u - 1));
    }
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<int> count(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t removed = 0; removed <= full; ++removed) {
        std::uint32_t left = full & ~removed;
        int c = 0;
        while (left) {
            std::uint32_t comp = left & (~left + 1);
            for (;;) {
                std::uint32_t grow = comp;
                std::uint32_t scan = comp;
                while (scan) {
                    int v = std::countr_zero(scan) + 1;
                    scan &= scan - 1;
                    grow |= nbr[static_cast<std::size_t>(v)] & left;
                }
                if (grow == comp) break;
                comp = grow;
            }
            left &= ~comp;
            ++c;
        }
        count[removed] = c;
        if (removed == full) break;
    }
    return count;
}

}  // namespace detail

// All S (including the empty set) with c(S \ {i}) < c(S) for every i in S,
// sorted by (|S|, lex). These index the minimal primes of J_G.
inline std::vector<CutSet> cut_sets(const Graph& g, int max_enum_n = 16) {
    if (g.n() > std::min(max_enum_n, 24))  // 24 caps the 2^n count table
        throw bound_error("cut_sets: enumeration bound exceeded (n = " +
                          std::to_string(g.n()) + " > " + std::to_string(max_enum_n) + ")");
    auto count = detail::component_count_table(g);
    std::vector<std::vector<int>> chosen;
    const std::uint32_t full = (1u << g.n()) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        bool ok = true;
        for (std::uint32_t scan = mask; scan && ok; scan &= scan - 1) {
            std::uint32_t bit = scan & (~scan + 1);
            if (count[mask & ~bit] >= count[mask]) ok = false;
        }
        if (!ok) continue;
        std::vector<int> s;
        for (int v = 1; v <= g.n(); ++v)
            if (mask & (1u << (v - 1))) s.push_back(v);
        chosen.push_back(std::move(s));
    }
    std::sort(chosen.begin(), chosen.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<CutSet> out;
    out.reserve(chosen.size());
    for (auto& s : chosen) out.push_back(components_without(g, std::move(s)));
    return out;
}

// Closedness for the labeling at hand: every edge {i,k}, i < k, forces
// {i,j} and {j,k} for all i < j < k.
inline bool is_closed_under_labeling(const Graph& g) {
    for (auto [i, k] : g.edges())
        for (int j = i + 1; j < k; ++j)
            if (!g.has_edge(i, j) || !g.has_edge(j, k)) return false;
    return true;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    require(static_cast<int>(perm.size()) == g.n(), "relabel: permutation size mismatch");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) {
        int a = perm[static_cast<std::size_t>(u - 1)], b = perm[static_cast<std::size_t>(v - 1)];
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    return Graph(g.n(), std::move(edges));
}

// First permutation (lex order) whose relabeling makes G closed, if any.
inline std::optional<std::vector<int>> find_closed_labeling(const Graph& g,
                                                            int max_perm_n = 9) {
    if (g.n() > max_perm_n)
        throw bound_error("find_closed_labeling: brute-force bound exceeded (n = " +
                          std::to_string(g.n()) + " > " + std::to_string(max_perm_n) + ")");
    std::vector<int> perm(static_cast<std::size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    do {
        if (is_closed_under_labeling(relabel(g, perm))) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// Graph file: first line "n <N>", then one "u v" edge per line with
// 1 <= u < v <= N; '#' starts a comment; duplicate edges are rejected.
inline Graph parse_graph(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        std::string trailing;
        if (n < 0) {
            require(first == "n", "graph file line " + std::to_string(lineno) +
                                      ": expected 'n <N>' header");
            require(static_cast<bool>(ls >> n) && n >= 1 && !(ls >> trailing),
                    "graph file line " + std::to_string(lineno) + ": malformed header");
            continue;
        }
        int u = 0, v = 0;
        std::istringstream es(line);
        require(static_cast<bool>(es >> u >> v) && !(es >> trailing),
                "graph file line " + std::to_string(lineno) + ": expected 'u v'");
        require(1 <= u && u < v && v <= n,
                "graph file line " + std::to_string(lineno) + ": need 1 <= u < v <= n");
        require(std::find(edges.begin(), edges.end(), std::make_pair(u, v)) == edges.end(),
                "graph file line " + std::to_string(lineno) + ": duplicate edge");
        edges.emplace_back(u, v);
    }
    require(n >= 1, "graph file: missing 'n <N>' header");
    return Graph(n, std::move(edges));
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline std::string render_set(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

}  // namespace bek
