#pragma once

// Half-edge graphs with vertex weights, labeled leaves and optional exact
// rational edge lengths.
//
// A graph is a finite set of half-edges H = {0, ..., m-1}, a partition of H
// into vertices, and an involution on H. Orbits of size two are edges, fixed
// points are leaves. Leaves carry the labels p_1..p_n; vertices carry
// nonnegative integer weights. The genus of a weighted graph is the sum of
// the weights plus the first Betti number, and a graph is stable when every
// weight-zero vertex has valence >= 3 and every weight-one vertex has
// valence >= 1 (valence counts all half-edges at the vertex, leaves
// included).

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropmod/rational.hpp"

namespace tropmod {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An edge {h, i(h)} is keyed by the sorted pair of its half-edge ids.
using EdgeKey = std::pair<int, int>;

inline EdgeKey make_edge_key(int a, int b) {
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

inline std::string edge_key_string(const EdgeKey& e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

struct Graph {
    // vertices[v] lists the half-edge ids at vertex v, sorted ascending. An
    // empty list is an explicit zero-valence vertex.
    std::vector<std::vector<int>> vertices;
    std::vector<int> involution;     // size = number of half-edges
    std::map<int, int> leaf_labels;  // fixed point id -> label in 1..n
    std::vector<int> weights;        // one per vertex
    std::optional<std::map<EdgeKey, Rational>> lengths;

    int num_half_edges() const { return static_cast<int>(involution.size()); }
    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_leaves() const { return static_cast<int>(leaf_labels.size()); }

    bool operator==(const Graph& o) const = default;
};

// Map half-edge id -> vertex index. Requires every id to appear in some part.
inline std::vector<int> vertex_of_map(const Graph& g) {
    std::vector<int> owner(g.num_half_edges(), -1);
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int h : g.vertices[v])
            if (h >= 0 && h < g.num_half_edges()) owner[h] = v;
    return owner;
}

inline bool is_leaf_half_edge(const Graph& g, int h) { return g.involution[h] == h; }

// Edges as sorted keys, each 2-orbit listed once.
inline std::vector<EdgeKey> edges(const Graph& g) {
    std::vector<EdgeKey> out;
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (g.involution[h] > h) out.push_back({h, g.involution[h]});
    return out;
}

inline int num_edges(const Graph& g) {
    int e = 0;
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (g.involution[h] > h) ++e;
    return e;
}

inline bool is_edge(const Graph& g, const EdgeKey& e) {
    return e.first >= 0 && e.second < g.num_half_edges() && e.first < e.second &&
           g.involution[e.first] == e.second;
}

inline bool is_loop(const Graph& g, const EdgeKey& e) {
    auto owner = vertex_of_map(g);
    return owner[e.first] == owner[e.second];
}

inline bool is_connected(const Graph& g) {
    int V = g.num_vertices();
    if (V == 0) return false;
    if (V == 1) return true;
    auto owner = vertex_of_map(g);
    std::vector<int> comp(V);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const auto& e : edges(g)) {
        int a = find(owner[e.first]), b = find(owner[e.second]);
        if (a != b) comp[a] = b;
    }
    int root = find(0);
    for (int v = 1; v < V; ++v)
        if (find(v) != root) return false;
    return true;
}

// Checks every structural invariant. Returns an empty list when the graph is
// well-formed; otherwise one message per violation, naming the offender.
inline std::vector<std::string> validate(const Graph& g) {
    std::vector<std::string> bad;
    const int m = g.num_half_edges();
    if (g.weights.size() != g.vertices.size())
        bad.push_back("weight count does not match vertex count");
    for (std::size_t v = 0; v < g.weights.size(); ++v)
        if (g.weights[v] < 0) bad.push_back("negative weight at vertex " + std::to_string(v));

    std::vector<int> seen(m, 0);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!std::is_sorted(g.vertices[v].begin(), g.vertices[v].end()))
            bad.push_back("vertex " + std::to_string(v) + " half-edge list not sorted");
        for (int h : g.vertices[v]) {
            if (h < 0 || h >= m) {
                bad.push_back("unknown half-edge " + std::to_string(h) + " at vertex " +
                              std::to_string(v));
                continue;
            }
            if (seen[h]++)
                bad.push_back("half-edge " + std::to_string(h) + " appears in two vertices");
        }
    }
    for (int h = 0; h < m; ++h)
        if (!seen[h]) bad.push_back("half-edge " + std::to_string(h) + " not in any vertex");

    for (int h = 0; h < m; ++h) {
        int ih = g.involution[h];
        if (ih < 0 || ih >= m) {
            bad.push_back("involution leaves range at " + std::to_string(h));
            continue;
        }
        if (g.involution[ih] != h)
            bad.push_back("involution not self-inverse at " + std::to_string(h));
    }

    // Fixed points and leaf labels must correspond bijectively, labels 1..n.
    std::set<int> used_labels;
    for (const auto& [h, label] : g.leaf_labels) {
        if (h < 0 || h >= m || g.involution[h] != h) {
            bad.push_back("leaf label on non-fixed half-edge " + std::to_string(h));
            continue;
        }
        if (!used_labels.insert(label).second)
            bad.push_back("duplicate leaf label p" + std::to_string(label));
    }
    for (int h = 0; h < m; ++h)
        if (g.involution[h] == h && !g.leaf_labels.count(h))
            bad.push_back("unlabeled leaf " + std::to_string(h));
    const int n = static_cast<int>(used_labels.size());
    for (int i = 1; i <= n; ++i)
        if (!used_labels.count(i)) bad.push_back("leaf labels are not p1..p" + std::to_string(n));

    if (!bad.empty()) return bad;  // structural failures make the rest unreliable

    if (!is_connected(g)) bad.push_back("graph is not connected");

    if (g.lengths) {
        auto es = edges(g);
        std::set<EdgeKey> edge_set(es.begin(), es.end());
        for (const auto& [key, len] : *g.lengths) {
            if (!edge_set.count(key))
                bad.push_back("length on non-edge " + edge_key_string(key));
            else if (len < 0)
                bad.push_back("negative length on edge " + edge_key_string(key));
        }
        for (const auto& e : es)
            if (!g.lengths->count(e))
                bad.push_back("edge " + edge_key_string(e) + " has no length");
    }
    return bad;
}

inline void require_valid(const Graph& g) {
    auto bad = validate(g);
    if (!bad.empty()) throw error("invalid graph: " + bad.front());
}

// b1 = |E| - |V| + 1 for a connected graph.
inline int betti_number(const Graph& g) {
    require_valid(g);
    return num_edges(g) - g.num_vertices() + 1;
}

// Sum of vertex weights plus the first Betti number.
inline int genus(const Graph& g) {
    int w = std::accumulate(g.weights.begin(), g.weights.end(), 0);
    return w + betti_number(g);
}

inline int valence(const Graph& g, int v) { return static_cast<int>(g.vertices[v].size()); }

inline bool is_stable(const Graph& g) {
    require_valid(g);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.weights[v] == 0 && valence(g, v) < 3) return false;
        if (g.weights[v] == 1 && valence(g, v) < 1) return false;
    }
    return true;
}

struct ContractResult {
    Graph graph;
    // old half-edge id -> id in the contracted graph, -1 for the two removed.
    std::vector<int> half_edge_map;
};

// Contracts one edge. A non-loop merges its endpoints and adds their
// weights; a loop raises its vertex's weight by one. Both cases preserve the
// genus. Lengths, when present, are restricted to the surviving edges.
inline ContractResult contract_edge_tracked(const Graph& g, const EdgeKey& e) {
    if (!is_edge(g, e)) throw error("not contractible: " + edge_key_string(e) + " is not an edge");
    const int h1 = e.first, h2 = e.second;
    auto owner = vertex_of_map(g);
    const int va = owner[h1], vb = owner[h2];

    std::vector<int> id_map(g.num_half_edges());
    for (int h = 0; h < g.num_half_edges(); ++h)
        id_map[h] = (h == h1 || h == h2) ? -1 : h - (h > h1) - (h > h2);

    Graph out;
    out.involution.assign(g.num_half_edges() - 2, -1);
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (id_map[h] >= 0) out.involution[id_map[h]] = id_map[g.involution[h]];
    for (const auto& [h, label] : g.leaf_labels) out.leaf_labels[id_map[h]] = label;

    if (va == vb) {
        // Loop contraction: drop the two half-edges, weight goes up by one.
        for (int v = 0; v < g.num_vertices(); ++v) {
            std::vector<int> part;
            for (int h : g.vertices[v])
                if (id_map[h] >= 0) part.push_back(id_map[h]);
            out.vertices.push_back(std::move(part));
            out.weights.push_back(g.weights[v] + (v == va ? 1 : 0));
        }
    } else {
        // Merge vb into va; the merged vertex carries the weight sum.
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (v == vb) continue;
            std::vector<int> part;
            for (int h : g.vertices[v])
                if (id_map[h] >= 0) part.push_back(id_map[h]);
            if (v == va)
                for (int h : g.vertices[vb])
                    if (id_map[h] >= 0) part.push_back(id_map[h]);
            std::sort(part.begin(), part.end());
            out.vertices.push_back(std::move(part));
            out.weights.push_back(g.weights[v] + (v == va ? g.weights[vb] : 0));
        }
    }

    if (g.lengths) {
        std::map<EdgeKey, Rational> lens;
        for (const auto& [key, len] : *g.lengths)
            if (key != e) lens[make_edge_key(id_map[key.first], id_map[key.second])] = len;
        out.lengths = std::move(lens);
    }
    return {std::move(out), std::move(id_map)};
}

inline Graph contract_edge(const Graph& g, const EdgeKey& e) {
    return contract_edge_tracked(g, e).graph;
}

// Contracts a set of edges that spans a forest, in any order. Throws if some
// member is (or becomes) a loop.
inline ContractResult contract_forest_tracked(const Graph& g, const std::set<EdgeKey>& forest) {
    Graph cur = g;
    std::vector<int> total(g.num_half_edges());
    std::iota(total.begin(), total.end(), 0);
    std::set<EdgeKey> remaining = forest;
    while (!remaining.empty()) {
        EdgeKey e = *remaining.begin();
        remaining.erase(remaining.begin());
        if (!is_edge(cur, e)) throw error("not a forest: " + edge_key_string(e) + " is not an edge");
        if (is_loop(cur, e)) throw error("not a forest: " + edge_key_string(e) + " is a loop");
        auto step = contract_edge_tracked(cur, e);
        cur = std::move(step.graph);
        std::set<EdgeKey> next;
        for (const auto& f : remaining)
            next.insert(make_edge_key(step.half_edge_map[f.first], step.half_edge_map[f.second]));
        remaining = std::move(next);
        for (int& t : total)
            if (t >= 0) t = step.half_edge_map[t];
    }
    return {std::move(cur), std::move(total)};
}

inline Graph contract_forest(const Graph& g, const std::set<EdgeKey>& forest) {
    return contract_forest_tracked(g, forest).graph;
}

// Contracts an arbitrary edge set with the weighted rule, loops allowed.
inline ContractResult contract_edges_weighted(const Graph& g, const std::set<EdgeKey>& which) {
    Graph cur = g;
    std::vector<int> total(g.num_half_edges());
    std::iota(total.begin(), total.end(), 0);
    std::set<EdgeKey> remaining = which;
    while (!remaining.empty()) {
        EdgeKey e = *remaining.begin();
        remaining.erase(remaining.begin());
        auto step = contract_edge_tracked(cur, e);
        cur = std::move(step.graph);
        std::set<EdgeKey> next;
        for (const auto& f : remaining)
            next.insert(make_edge_key(step.half_edge_map[f.first], step.half_edge_map[f.second]));
        remaining = std::move(next);
        for (int& t : total)
            if (t >= 0) t = step.half_edge_map[t];
    }
    return {std::move(cur), std::move(total)};
}

}  // namespace tropmod
