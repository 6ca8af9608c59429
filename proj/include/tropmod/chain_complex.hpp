#pragma once

// Rational cellular chains on the link for fixed (g, n).
//
// A k-cell is a stable class with k+1 edges. A cell contributes a basis
// element only if no automorphism of its graph induces an odd permutation of
// its edges (otherwise the generator is identified with its negative and
// dies rationally). The boundary of a cell is the alternating sum of its
// single-edge contractions: contracting the j-th edge (in the canonical edge
// order) contributes (-1)^j times the sign of the permutation obtained by
// carrying the remaining edges through the contraction and the canonical
// relabeling of the target. Targets outside the basis contribute zero.

#include "tropmod/exact_linalg.hpp"
#include "tropmod/poset.hpp"

namespace tropmod {

struct ChainComplex {
    int g = 0, n = 0;
    std::vector<std::vector<CanonicalGraph>> cells;  // by dimension, basis cells only
    std::vector<SparseMatrix> boundary;              // boundary[k]: C_k -> C_{k-1}; boundary[0] is 0 x dim C_0

    int top_dimension() const { return static_cast<int>(cells.size()) - 1; }
    bool empty() const { return cells.empty(); }
};

inline bool has_odd_edge_symmetry(const Graph& g) {
    for (const auto& a : automorphisms(g, false).elements)
        if (edge_permutation_sign(g, a) < 0) return true;
    return false;
}

inline ChainComplex cellular_chain_complex(int g, int n, EnumerateConfig cfg = {}) {
    ChainComplex cc;
    cc.g = g;
    cc.n = n;
    auto cells = link_cells(g, n, cfg);
    int top = -1;
    for (const auto& [c, dim] : cells) top = std::max(top, dim);
    if (top < 0) return cc;

    cc.cells.resize(top + 1);
    std::map<std::string, int> basis_index;
    for (auto& [c, dim] : cells) {
        if (has_odd_edge_symmetry(c.graph)) continue;
        basis_index[c.key] = static_cast<int>(cc.cells[dim].size());
        cc.cells[dim].push_back(std::move(c));
    }

    cc.boundary.resize(top + 1);
    cc.boundary[0] = SparseMatrix(0, static_cast<int>(cc.cells[0].size()));
    for (int k = 1; k <= top; ++k) {
        SparseMatrix d(static_cast<int>(cc.cells[k - 1].size()),
                       static_cast<int>(cc.cells[k].size()));
        for (int col = 0; col < static_cast<int>(cc.cells[k].size()); ++col) {
            const Graph& cell = cc.cells[k][col].graph;
            auto cell_edges = edges(cell);  // canonical edge order
            for (int j = 0; j < static_cast<int>(cell_edges.size()); ++j) {
                auto contracted = contract_edge_tracked(cell, cell_edges[j]);
                auto target = canonicalize(contracted.graph, false);
                auto hit = basis_index.find(target.canonical.key);
                if (hit == basis_index.end()) continue;  // killed by odd symmetry

                // Sign of the permutation the relabeling induces between the
                // carried edge order and the target's canonical order.
                auto target_edges = edges(target.canonical.graph);
                std::map<EdgeKey, int> target_pos;
                for (int t = 0; t < static_cast<int>(target_edges.size()); ++t)
                    target_pos[target_edges[t]] = t;
                std::vector<int> perm;
                for (int i = 0; i < static_cast<int>(cell_edges.size()); ++i) {
                    if (i == j) continue;
                    EdgeKey in_contracted =
                        make_edge_key(contracted.half_edge_map[cell_edges[i].first],
                                      contracted.half_edge_map[cell_edges[i].second]);
                    EdgeKey in_target = make_edge_key(target.witness.map[in_contracted.first],
                                                      target.witness.map[in_contracted.second]);
                    perm.push_back(target_pos.at(in_target));
                }
                int sign = 1;
                for (std::size_t a = 0; a < perm.size(); ++a)
                    for (std::size_t b = a + 1; b < perm.size(); ++b)
                        if (perm[a] > perm[b]) sign = -sign;
                if (j % 2 == 1) sign = -sign;
                d.add(hit->second, col, Rational(sign));
            }
        }
        cc.boundary[k] = std::move(d);
    }
    return cc;
}

// Verifies boundary[k] * boundary[k+1] = 0 for every k.
inline bool boundary_squares_to_zero(const ChainComplex& cc) {
    for (std::size_t k = 0; k + 1 < cc.boundary.size(); ++k)
        if (!multiply(cc.boundary[k], cc.boundary[k + 1]).is_zero()) return false;
    return true;
}

struct HomologyResult {
    std::vector<long> betti;  // betti[k], k = 0..top dimension
    long euler = 0;
    bool empty = false;       // the link has no cells at all
};

inline HomologyResult homology_of(const ChainComplex& cc) {
    HomologyResult out;
    if (cc.empty()) {
        out.empty = true;
        return out;
    }
    const int top = cc.top_dimension();
    std::vector<int> ranks(top + 2, 0);
    for (int k = 1; k <= top; ++k) ranks[k] = rank(cc.boundary[k]);
    for (int k = 0; k <= top; ++k) {
        long dim_k = static_cast<long>(cc.cells[k].size());
        long kernel = dim_k - ranks[k];
        out.betti.push_back(kernel - ranks[k + 1]);
        out.euler += (k % 2 == 0 ? dim_k : -dim_k);
    }
    return out;
}

inline HomologyResult homology_link(int g, int n, EnumerateConfig cfg = {}) {
    return homology_of(cellular_chain_complex(g, n, cfg));
}

}  // namespace tropmod
