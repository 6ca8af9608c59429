#pragma once

// Independent homology oracle for the link.
//
// The link is glued from quotients of simplices, so its barycentric
// subdivision is an honest simplicial object: a k-simplex is a class of
// pairs (graph, chain of nonempty edge subsets A_0 c A_1 c ... c A_k =
// all edges), up to isomorphism. Chains are encoded as level maps
// level: E -> {0..k} (level(e) = least i with e in A_i, every level
// occupied). The i-th face drops A_i: for i < k it merges levels i and i+1;
// for i = k it contracts the edges of top level (weighted rule). Homology of
// this subdivision is computed with the standard simplicial boundary and
// must agree with the quotient cellular chain complex.

#include "tropmod/chain_complex.hpp"
#include "tropmod/tropical_point.hpp"

namespace tropmod {

struct BarycentricConfig {
    std::size_t max_flags = 200000;
    EnumerateConfig enumerate;
};

struct BarycentricComplex {
    int g = 0, n = 0;
    // flags[k]: the k-simplices; graphs carry levels as lengths level+1.
    std::vector<std::vector<CanonicalGraph>> flags;
    std::vector<SparseMatrix> boundary;

    bool empty() const { return flags.empty(); }
    int top_dimension() const { return static_cast<int>(flags.size()) - 1; }
};

struct OracleResult {
    BarycentricComplex complex;
    std::vector<long> betti;
    long euler = 0;
    bool empty = false;
};

namespace detail {

inline std::map<EdgeKey, int> levels_of(const Graph& g) {
    std::map<EdgeKey, int> lv;
    for (const auto& [k, len] : *g.lengths)
        lv[k] = static_cast<int>(numerator(len)) - 1;
    return lv;
}

inline Graph with_levels(Graph g, const std::map<EdgeKey, int>& lv) {
    std::map<EdgeKey, Rational> lens;
    for (const auto& [k, l] : lv) lens[k] = Rational(l + 1);
    g.lengths = std::move(lens);
    return g;
}

}  // namespace detail

inline BarycentricComplex barycentric_complex(int g, int n, BarycentricConfig cfg = {}) {
    BarycentricComplex bc;
    bc.g = g;
    bc.n = n;
    auto cells = link_cells(g, n, cfg.enumerate);
    int top = -1;
    for (const auto& [c, dim] : cells) top = std::max(top, dim);
    if (top < 0) return bc;

    bc.flags.resize(top + 1);
    std::map<std::string, std::pair<int, int>> index;  // key -> (dim, position)
    std::size_t total = 0;

    for (const auto& [c, dim] : cells) {
        auto es = edges(c.graph);
        const int e = static_cast<int>(es.size());
        std::map<EdgeKey, int> lv;
        std::vector<int> level_count(e, 0);
        auto rec = [&](auto&& self, int i, int max_used) -> void {
            if (i == e) {
                // Levels are chain positions: every level up to the maximum
                // must be occupied.
                for (int l = 0; l <= max_used; ++l)
                    if (level_count[l] == 0) return;
                Graph rep = detail::with_levels(c.graph, lv);
                auto canon = canonicalize(rep, true).canonical;
                if (index.count(canon.key)) return;
                index[canon.key] = {max_used, static_cast<int>(bc.flags[max_used].size())};
                bc.flags[max_used].push_back(std::move(canon));
                if (++total > cfg.max_flags) throw error("resource bound exceeded: flag count");
                return;
            }
            for (int l = 0; l <= e - 1; ++l) {
                lv[es[i]] = l;
                ++level_count[l];
                self(self, i + 1, std::max(max_used, l));
                --level_count[l];
            }
        };
        rec(rec, 0, -1);
    }

    // Faces: drop one chain entry.
    bc.boundary.resize(top + 1);
    bc.boundary[0] = SparseMatrix(0, static_cast<int>(bc.flags[0].size()));
    for (int k = 1; k <= top; ++k) {
        SparseMatrix d(static_cast<int>(bc.flags[k - 1].size()),
                       static_cast<int>(bc.flags[k].size()));
        for (int col = 0; col < static_cast<int>(bc.flags[k].size()); ++col) {
            const Graph& rep = bc.flags[k][col].graph;
            auto lv = detail::levels_of(rep);
            for (int i = 0; i <= k; ++i) {
                std::string face_key;
                if (i < k) {
                    std::map<EdgeKey, int> merged;
                    for (const auto& [key, l] : lv)
                        merged[key] = l <= i ? std::min(l, i) : l - 1;
                    face_key =
                        canonicalize(detail::with_levels(rep, merged), true).canonical.key;
                } else {
                    std::set<EdgeKey> top_level;
                    for (const auto& [key, l] : lv)
                        if (l == k) top_level.insert(key);
                    Graph contracted = contract_edges_weighted(rep, top_level).graph;
                    face_key = canonicalize(contracted, true).canonical.key;
                }
                auto [fdim, fpos] = index.at(face_key);
                d.add(fpos, col, Rational(i % 2 == 0 ? 1 : -1));
            }
        }
        bc.boundary[k] = std::move(d);
    }
    return bc;
}

inline OracleResult barycentric_oracle(int g, int n, BarycentricConfig cfg = {}) {
    OracleResult out;
    out.complex = barycentric_complex(g, n, cfg);
    if (out.complex.empty()) {
        out.empty = true;
        return out;
    }
    const int top = out.complex.top_dimension();
    std::vector<int> ranks(top + 2, 0);
    for (int k = 1; k <= top; ++k) ranks[k] = rank(out.complex.boundary[k]);
    for (int k = 0; k <= top; ++k) {
        long dim_k = static_cast<long>(out.complex.flags[k].size());
        out.betti.push_back(dim_k - ranks[k] - ranks[k + 1]);
        out.euler += (k % 2 == 0 ? dim_k : -dim_k);
    }
    return out;
}

}  // namespace tropmod
