#pragma once

// Exhaustive enumeration of stable weighted graphs of a fixed genus and leaf
// count, one canonical representative per isomorphism class.
//
// Strategy: build the trivalent weight-zero graphs first (they have exactly
// 3g-3+n edges and 2g-2+n vertices), then close the set under single-edge
// contraction. Every stable weighted graph arises from a trivalent
// weight-zero one by contracting edges, so the closure is exhaustive.

#include <atomic>
#include <functional>
#include <future>

#include "tropmod/canonical.hpp"

namespace tropmod {

struct EnumerateConfig {
    int threads = 1;
    std::size_t max_classes = 500000;
};

inline void require_stable_range(int g, int n) {
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw error("unstable range");
}

namespace detail {

// Degree-3 multigraph shapes on labeled vertices: loop counts, leaf counts
// and the symmetric edge multiplicity matrix.
struct TrivalentShape {
    std::vector<int> loops;
    std::vector<int> leaf_counts;
    std::vector<std::vector<int>> mult;  // upper triangle used
};

inline bool shape_connected(const TrivalentShape& s) {
    const int V = static_cast<int>(s.loops.size());
    std::vector<int> comp(V);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (int u = 0; u < V; ++u)
        for (int v = u + 1; v < V; ++v)
            if (s.mult[u][v] > 0) comp[find(u)] = find(v);
    for (int v = 1; v < V; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

inline std::vector<long long> shape_key(const TrivalentShape& s, const std::vector<int>& perm) {
    const int V = static_cast<int>(s.loops.size());
    std::vector<long long> key;
    for (int i = 0; i < V; ++i) {
        key.push_back(s.loops[perm[i]]);
        key.push_back(s.leaf_counts[perm[i]]);
    }
    for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j) {
            int a = perm[i], b = perm[j];
            key.push_back(s.mult[std::min(a, b)][std::max(a, b)]);
        }
    return key;
}

inline std::vector<TrivalentShape> trivalent_shapes(int g, int n) {
    const int V = 2 * g - 2 + n;
    std::vector<TrivalentShape> shapes;
    TrivalentShape cur;
    cur.loops.assign(V, 0);
    cur.leaf_counts.assign(V, 0);
    cur.mult.assign(V, std::vector<int>(V, 0));
    std::vector<int> degree(V, 0);

    // Fill loops and leaf counts, then the upper-triangular multiplicities,
    // vertex by vertex; each vertex must end at degree exactly 3.
    auto rec_edges = [&](auto&& self, int u, int v, int leaves_left) -> void {
        if (u == V) {
            if (leaves_left == 0 && shape_connected(cur)) shapes.push_back(cur);
            return;
        }
        if (v == V) {
            if (degree[u] != 3) return;
            self(self, u + 1, u + 2, leaves_left);
            return;
        }
        int cap = std::min(3 - degree[u], 3 - degree[v]);
        for (int k = 0; k <= cap; ++k) {
            cur.mult[u][v] = k;
            degree[u] += k;
            degree[v] += k;
            self(self, u, v + 1, leaves_left);
            degree[u] -= k;
            degree[v] -= k;
            cur.mult[u][v] = 0;
        }
    };
    auto rec_local = [&](auto&& self, int v, int leaves_left) -> void {
        if (v == V) {
            rec_edges(rec_edges, 0, 1, leaves_left);
            return;
        }
        for (int loop = 0; loop <= 1; ++loop) {
            for (int c = 0; c + 2 * loop <= 3 && c <= leaves_left; ++c) {
                cur.loops[v] = loop;
                cur.leaf_counts[v] = c;
                degree[v] = 2 * loop + c;
                self(self, v + 1, leaves_left - c);
            }
        }
        cur.loops[v] = 0;
        cur.leaf_counts[v] = 0;
        degree[v] = 0;
    };
    rec_local(rec_local, 0, n);

    // Deduplicate shapes up to vertex permutation (kept cheap; the canonical
    // form deduplicates whatever slips through).
    const int V2 = V;
    if (V2 >= 2 && V2 <= 6) {
        std::set<std::vector<long long>> seen;
        std::vector<TrivalentShape> unique_shapes;
        std::vector<int> perm(V2);
        for (const auto& s : shapes) {
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<long long> best = shape_key(s, perm);
            while (std::next_permutation(perm.begin(), perm.end())) {
                auto k = shape_key(s, perm);
                if (k < best) best = k;
            }
            if (seen.insert(best).second) unique_shapes.push_back(s);
        }
        return unique_shapes;
    }
    return shapes;
}

inline Graph shape_to_graph(const TrivalentShape& s, const std::vector<int>& leaf_owner) {
    const int V = static_cast<int>(s.loops.size());
    Graph g;
    g.vertices.resize(V);
    g.weights.assign(V, 0);
    int next = 0;
    auto add_half = [&](int v) {
        g.vertices[v].push_back(next);
        g.involution.push_back(-1);
        return next++;
    };
    for (int v = 0; v < V; ++v)
        for (int i = 0; i < s.loops[v]; ++i) {
            int a = add_half(v), b = add_half(v);
            g.involution[a] = b;
            g.involution[b] = a;
        }
    for (int u = 0; u < V; ++u)
        for (int v = u + 1; v < V; ++v)
            for (int k = 0; k < s.mult[u][v]; ++k) {
                int a = add_half(u), b = add_half(v);
                g.involution[a] = b;
                g.involution[b] = a;
            }
    for (std::size_t i = 0; i < leaf_owner.size(); ++i) {
        int h = add_half(leaf_owner[i]);
        g.involution[h] = h;
        g.leaf_labels[h] = static_cast<int>(i) + 1;
    }
    for (auto& part : g.vertices) std::sort(part.begin(), part.end());
    return g;
}

// All assignments of labels 1..n to vertices matching the leaf counts.
inline void leaf_assignments(const TrivalentShape& s, int n,
                             const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> owner(n, -1);
    std::vector<int> remaining = s.leaf_counts;
    auto rec = [&](auto&& self, int label) -> void {
        if (label == n) {
            emit(owner);
            return;
        }
        for (int v = 0; v < static_cast<int>(remaining.size()); ++v) {
            if (remaining[v] == 0) continue;
            --remaining[v];
            owner[label] = v;
            self(self, label + 1);
            ++remaining[v];
        }
    };
    rec(rec, 0);
}

}  // namespace detail

// One canonical representative per isomorphism class of stable weighted
// genus-g graphs with n labeled leaves (weight-zero classes only when
// only_pure is set), sorted by canonical key.
inline std::vector<CanonicalGraph> enumerate_stable_graphs(int g, int n, bool only_pure,
                                                           EnumerateConfig cfg = {}) {
    require_stable_range(g, n);
    if (2 * g - 2 + n > 14) throw error("resource bound exceeded: enumeration range");

    auto shapes = detail::trivalent_shapes(g, n);

    // Seed with the trivalent weight-zero classes.
    std::map<std::string, CanonicalGraph> classes;
    auto canonicalize_shape = [&](const detail::TrivalentShape& s) {
        std::vector<CanonicalGraph> local;
        detail::leaf_assignments(s, n, [&](const std::vector<int>& owner) {
            Graph graph = detail::shape_to_graph(s, owner);
            local.push_back(canonicalize(graph, false).canonical);
        });
        return local;
    };

    if (cfg.threads > 1 && shapes.size() > 1) {
        std::vector<std::future<std::vector<CanonicalGraph>>> futures;
        std::atomic<std::size_t> cursor{0};
        auto worker = [&]() {
            std::vector<CanonicalGraph> acc;
            for (;;) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= shapes.size()) break;
                auto part = canonicalize_shape(shapes[i]);
                acc.insert(acc.end(), part.begin(), part.end());
            }
            return acc;
        };
        for (int t = 0; t < cfg.threads; ++t)
            futures.push_back(std::async(std::launch::async, worker));
        for (auto& f : futures)
            for (auto& c : f.get()) classes.emplace(c.key, std::move(c));
    } else {
        for (const auto& s : shapes)
            for (auto& c : canonicalize_shape(s)) classes.emplace(c.key, std::move(c));
    }

    // Close under single-edge contraction.
    std::vector<const CanonicalGraph*> frontier;
    for (const auto& [k, c] : classes) frontier.push_back(&c);
    while (!frontier.empty()) {
        std::vector<CanonicalGraph> found;
        for (const CanonicalGraph* node : frontier)
            for (const auto& e : edges(node->graph))
                found.push_back(canonicalize(contract_edge(node->graph, e), false).canonical);
        frontier.clear();
        for (auto& c : found) {
            auto [it, inserted] = classes.emplace(c.key, std::move(c));
            if (inserted) frontier.push_back(&it->second);
            if (classes.size() > cfg.max_classes)
                throw error("resource bound exceeded: class count");
        }
    }

    std::vector<CanonicalGraph> out;
    for (auto& [k, c] : classes) {
        if (only_pure) {
            bool pure = true;
            for (int w : c.graph.weights) pure &= (w == 0);
            if (!pure) continue;
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace tropmod
