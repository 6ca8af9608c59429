#pragma once

// The stratification of the moduli space for fixed (g, n): one node per
// stable class, with covering relations given by single-edge contractions.

#include "tropmod/enumerate.hpp"

namespace tropmod {

struct StrataPoset {
    int g = 0, n = 0;
    // Sorted by (edge count, canonical key); the edge-free class is first.
    std::vector<CanonicalGraph> nodes;
    // (upper, lower): nodes[upper] contracts onto nodes[lower] by one edge.
    std::set<std::pair<int, int>> covers;

    int index_of(const std::string& key) const {
        for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
            if (nodes[i].key == key) return i;
        return -1;
    }
};

inline StrataPoset build_strata_poset(int g, int n, EnumerateConfig cfg = {}) {
    StrataPoset poset;
    poset.g = g;
    poset.n = n;
    poset.nodes = enumerate_stable_graphs(g, n, false, cfg);
    std::stable_sort(poset.nodes.begin(), poset.nodes.end(),
                     [](const CanonicalGraph& a, const CanonicalGraph& b) {
                         int ea = num_edges(a.graph), eb = num_edges(b.graph);
                         return std::tie(ea, a.key) < std::tie(eb, b.key);
                     });
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(poset.nodes.size()); ++i)
        index[poset.nodes[i].key] = i;
    for (int i = 0; i < static_cast<int>(poset.nodes.size()); ++i) {
        for (const auto& e : edges(poset.nodes[i].graph)) {
            auto lower = canonicalize(contract_edge(poset.nodes[i].graph, e), false).canonical;
            poset.covers.insert({i, index.at(lower.key)});
        }
    }
    return poset;
}

// Cells of the link: every class with at least one edge, with its dimension
// |E| - 1.
inline std::vector<std::pair<CanonicalGraph, int>> link_cells(int g, int n,
                                                              EnumerateConfig cfg = {}) {
    std::vector<std::pair<CanonicalGraph, int>> out;
    for (auto& c : enumerate_stable_graphs(g, n, false, cfg)) {
        int e = num_edges(c.graph);
        if (e >= 1) out.push_back({std::move(c), e - 1});
    }
    return out;
}

}  // namespace tropmod
