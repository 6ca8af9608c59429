#pragma once

// Canonical labeling, isomorphism testing and automorphism groups for
// half-edge graphs.
//
// The canonical form is computed by iterative partition refinement on the
// vertices, seeded by (weight, valence, leaf labels) and refined by edge
// multisets, with individualization backtracking over the refinement-stable
// classes. Each complete vertex ordering yields a certificate; the
// lexicographically least certificate determines the canonical relabeling.
// Isomorphisms respect the vertex partition, the involution, the leaf labels
// pointwise and the vertex weights, plus the edge lengths when asked to.

#include <cstdint>
#include <limits>
#include <tuple>

#include "tropmod/graph.hpp"

namespace tropmod {

// A bijection on half-edges: h in the source maps to map[h] in the target.
struct GraphIso {
    std::vector<int> map;

    bool is_identity() const {
        for (int h = 0; h < static_cast<int>(map.size()); ++h)
            if (map[h] != h) return false;
        return true;
    }
};

inline GraphIso invert(const GraphIso& iso) {
    GraphIso out;
    out.map.assign(iso.map.size(), -1);
    for (int h = 0; h < static_cast<int>(iso.map.size()); ++h) out.map[iso.map[h]] = h;
    return out;
}

inline GraphIso compose(const GraphIso& first, const GraphIso& then) {
    GraphIso out;
    out.map.resize(first.map.size());
    for (std::size_t h = 0; h < first.map.size(); ++h) out.map[h] = then.map[first.map[h]];
    return out;
}

struct CanonicalGraph {
    Graph graph;        // canonically labeled representative
    std::string key;    // complete serialization; equal keys <=> isomorphic
    std::uint64_t hash = 0;

    bool operator==(const CanonicalGraph& o) const { return key == o.key; }
    bool operator!=(const CanonicalGraph& o) const { return key != o.key; }
    bool operator<(const CanonicalGraph& o) const { return key < o.key; }
};

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hash_hex(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

namespace detail {

// Per-graph structural tables used by refinement, certificates and the
// isomorphism search.
struct GraphData {
    std::vector<int> owner;                                // half-edge -> vertex
    std::vector<Rational> length_table;                    // sorted distinct lengths
    std::map<EdgeKey, int> length_index;                   // edge -> table index (0 if blind)
    std::vector<std::vector<int>> loops;                   // vertex -> sorted length indices
    std::map<std::pair<int, int>, std::vector<int>> bundles;  // (u<v) -> sorted length indices
    std::vector<std::vector<int>> leaf_lists;              // vertex -> sorted labels
    std::vector<std::vector<std::pair<int, int>>> adj;     // vertex -> (other vertex, len idx)
};

inline GraphData build_data(const Graph& g, bool use_lengths) {
    GraphData d;
    d.owner = vertex_of_map(g);
    const bool lens = use_lengths && g.lengths.has_value();
    if (lens) {
        std::set<Rational> distinct;
        for (const auto& [k, v] : *g.lengths) distinct.insert(v);
        d.length_table.assign(distinct.begin(), distinct.end());
        for (const auto& [k, v] : *g.lengths) {
            auto it = std::lower_bound(d.length_table.begin(), d.length_table.end(), v);
            d.length_index[k] = static_cast<int>(it - d.length_table.begin());
        }
    }
    d.loops.resize(g.num_vertices());
    d.leaf_lists.resize(g.num_vertices());
    d.adj.resize(g.num_vertices());
    for (const auto& e : edges(g)) {
        int li = lens ? d.length_index.at(e) : 0;
        int a = d.owner[e.first], b = d.owner[e.second];
        if (a == b) {
            d.loops[a].push_back(li);
        } else {
            d.bundles[{std::min(a, b), std::max(a, b)}].push_back(li);
            d.adj[a].push_back({b, li});
            d.adj[b].push_back({a, li});
        }
        if (!lens) d.length_index[e] = 0;
    }
    for (auto& l : d.loops) std::sort(l.begin(), l.end());
    for (auto& [k, v] : d.bundles) std::sort(v.begin(), v.end());
    for (const auto& [h, label] : g.leaf_labels) d.leaf_lists[d.owner[h]].push_back(label);
    for (auto& l : d.leaf_lists) std::sort(l.begin(), l.end());
    return d;
}

using Signature = std::vector<long long>;

// Ranks arbitrary per-vertex signatures into dense colors, preserving order.
inline std::vector<int> rank_colors(const std::vector<Signature>& sigs) {
    std::vector<const Signature*> ptrs;
    for (const auto& s : sigs) ptrs.push_back(&s);
    std::vector<int> order(sigs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return *ptrs[a] < *ptrs[b]; });
    std::vector<int> colors(sigs.size());
    int c = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && *ptrs[order[i]] != *ptrs[order[i - 1]]) ++c;
        colors[order[i]] = c;
    }
    return colors;
}

inline std::vector<int> initial_colors(const Graph& g, const GraphData& d) {
    std::vector<Signature> sigs(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        Signature s{g.weights[v], valence(g, v)};
        s.push_back(static_cast<long long>(d.leaf_lists[v].size()));
        for (int l : d.leaf_lists[v]) s.push_back(l);
        sigs[v] = std::move(s);
    }
    return rank_colors(sigs);
}

inline std::vector<int> refine(const Graph& g, const GraphData& d, std::vector<int> colors) {
    for (;;) {
        std::vector<Signature> sigs(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v) {
            Signature s{colors[v]};
            std::vector<std::pair<int, int>> nb;
            for (auto [u, li] : d.adj[v]) nb.push_back({colors[u], li});
            std::sort(nb.begin(), nb.end());
            s.push_back(static_cast<long long>(nb.size()));
            for (auto [c, li] : nb) {
                s.push_back(c);
                s.push_back(li);
            }
            s.push_back(static_cast<long long>(d.loops[v].size()));
            for (int li : d.loops[v]) s.push_back(li);
            sigs[v] = std::move(s);
        }
        auto next = rank_colors(sigs);
        if (next == colors) return colors;
        colors = std::move(next);
    }
}

// Certificate of the graph under a fixed vertex ordering. Position in the
// ordering replaces vertex identity; everything else is multiset data, so
// the certificate depends only on the isomorphism class and the ordering.
inline Signature certificate(const Graph& g, const GraphData& d, const std::vector<int>& order) {
    std::vector<int> pos(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) pos[order[i]] = i;
    Signature cert;
    cert.push_back(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) {
        int v = order[i];
        cert.push_back(-1);  // row separator
        cert.push_back(g.weights[v]);
        cert.push_back(static_cast<long long>(d.leaf_lists[v].size()));
        for (int l : d.leaf_lists[v]) cert.push_back(l);
        cert.push_back(static_cast<long long>(d.loops[v].size()));
        for (int li : d.loops[v]) cert.push_back(li);
        std::vector<std::pair<int, int>> row;
        for (auto [u, li] : d.adj[v]) row.push_back({pos[u], li});
        std::sort(row.begin(), row.end());
        cert.push_back(static_cast<long long>(row.size()));
        for (auto [p, li] : row) {
            cert.push_back(p);
            cert.push_back(li);
        }
    }
    return cert;
}

inline void search_orderings(const Graph& g, const GraphData& d, std::vector<int> colors,
                             Signature& best, std::vector<int>& best_order, bool& have_best) {
    colors = refine(g, d, colors);
    int target = -1;
    for (int c = 0;; ++c) {
        int count = 0;
        bool seen = false;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (colors[v] == c) {
                ++count;
                seen = true;
            }
        if (!seen) break;
        if (count > 1) {
            target = c;
            break;
        }
    }
    if (target < 0) {
        std::vector<int> order(g.num_vertices());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return colors[a] < colors[b]; });
        auto cert = certificate(g, d, order);
        if (!have_best || cert < best) {
            best = std::move(cert);
            best_order = std::move(order);
            have_best = true;
        }
        return;
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (colors[v] != target) continue;
        // Individualize v: give it a color just below the rest of its class.
        std::vector<Signature> sigs(g.num_vertices());
        for (int u = 0; u < g.num_vertices(); ++u)
            sigs[u] = {2 * colors[u] + (u == v ? 0 : 1)};
        search_orderings(g, d, rank_colors(sigs), best, best_order, have_best);
    }
}

inline void append_number(std::string& out, long long x) {
    out += std::to_string(x);
    out += ',';
}

}  // namespace detail

struct CanonicalResult {
    CanonicalGraph canonical;
    GraphIso witness;  // input half-edge -> canonical half-edge
};

// Deterministic canonical relabeling. Isomorphic inputs (respecting weights,
// leaf labels, and lengths when use_lengths is set) produce identical
// canonical graphs; the witness realizes the relabeling.
inline CanonicalResult canonicalize(const Graph& g, bool use_lengths) {
    require_valid(g);
    const bool lens = use_lengths && g.lengths.has_value();
    auto data = detail::build_data(g, lens);
    auto colors = detail::initial_colors(g, data);

    detail::Signature best;
    std::vector<int> best_order;
    bool have_best = false;
    detail::search_orderings(g, data, colors, best, best_order, have_best);

    // Lay out the canonical half-edge ids: per vertex, leaves sorted by
    // label, then loops sorted by length, then non-loop halves sorted by
    // (far vertex position, length). Ties among interchangeable half-edges
    // are broken by original ids, which does not affect the resulting
    // structure.
    std::vector<int> pos(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) pos[best_order[i]] = i;

    GraphIso witness;
    witness.map.assign(g.num_half_edges(), -1);
    int next_id = 0;
    for (int i = 0; i < g.num_vertices(); ++i) {
        int v = best_order[i];
        std::vector<std::pair<int, int>> leaf_halves;  // (label, half)
        std::vector<std::pair<std::pair<int, int>, EdgeKey>> loop_edges;  // ((len, key), key)
        std::vector<std::tuple<int, int, EdgeKey, int>> bundle_halves;  // (far pos, len, key, half)
        for (int h : g.vertices[v]) {
            int ih = g.involution[h];
            if (ih == h) {
                leaf_halves.push_back({g.leaf_labels.at(h), h});
            } else if (data.owner[ih] == v) {
                if (h < ih) {
                    EdgeKey k{h, ih};
                    loop_edges.push_back({{data.length_index.at(k), h}, k});
                }
            } else {
                EdgeKey k = make_edge_key(h, ih);
                bundle_halves.push_back({pos[data.owner[ih]], data.length_index.at(k), k, h});
            }
        }
        std::sort(leaf_halves.begin(), leaf_halves.end());
        std::sort(loop_edges.begin(), loop_edges.end());
        std::sort(bundle_halves.begin(), bundle_halves.end());
        for (auto [label, h] : leaf_halves) witness.map[h] = next_id++;
        for (auto& [k1, key] : loop_edges) {
            witness.map[key.first] = next_id++;
            witness.map[key.second] = next_id++;
        }
        for (auto& [p, li, key, h] : bundle_halves) witness.map[h] = next_id++;
    }

    Graph canon;
    canon.involution.assign(g.num_half_edges(), -1);
    for (int h = 0; h < g.num_half_edges(); ++h)
        canon.involution[witness.map[h]] = witness.map[g.involution[h]];
    for (const auto& [h, label] : g.leaf_labels) canon.leaf_labels[witness.map[h]] = label;
    canon.vertices.resize(g.num_vertices());
    canon.weights.resize(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) {
        int v = best_order[i];
        std::vector<int> part;
        for (int h : g.vertices[v]) part.push_back(witness.map[h]);
        std::sort(part.begin(), part.end());
        canon.vertices[i] = std::move(part);
        canon.weights[i] = g.weights[v];
    }
    if (lens) {
        std::map<EdgeKey, Rational> new_lens;
        for (const auto& [k, len] : *g.lengths)
            new_lens[make_edge_key(witness.map[k.first], witness.map[k.second])] = len;
        canon.lengths = std::move(new_lens);
    }

    // The key is a full serialization of the canonical graph; two canonical
    // graphs are equal as values iff their keys coincide.
    std::string key;
    detail::append_number(key, canon.num_half_edges());
    detail::append_number(key, canon.num_vertices());
    for (int v = 0; v < canon.num_vertices(); ++v) {
        detail::append_number(key, canon.weights[v]);
        detail::append_number(key, static_cast<long long>(canon.vertices[v].size()));
        for (int h : canon.vertices[v]) detail::append_number(key, h);
    }
    for (int h : canon.involution) detail::append_number(key, h);
    for (const auto& [h, label] : canon.leaf_labels) {
        detail::append_number(key, h);
        detail::append_number(key, label);
    }
    if (lens) {
        key += "L:";
        for (const auto& [k, len] : *canon.lengths) {
            detail::append_number(key, k.first);
            detail::append_number(key, k.second);
            key += to_fraction_string(len);
            key += ',';
        }
    }

    CanonicalGraph cg{std::move(canon), std::move(key), 0};
    cg.hash = fnv1a(cg.key);
    return {std::move(cg), std::move(witness)};
}

inline CanonicalResult canonical_form(const Graph& g) { return canonicalize(g, true); }

inline std::string canonical_key(const Graph& g, bool use_lengths) {
    return canonicalize(g, use_lengths).canonical.key;
}

// Enumerates every isomorphism g1 -> g2 under the requested length rule.
// Throws when the count would exceed `cap`.
inline std::vector<GraphIso> all_isomorphisms(const Graph& g1, const Graph& g2, bool use_lengths,
                                              std::size_t cap = 1u << 20) {
    std::vector<GraphIso> out;
    if (g1.num_half_edges() != g2.num_half_edges()) return out;
    if (g1.num_vertices() != g2.num_vertices()) return out;
    if (g1.leaf_labels.size() != g2.leaf_labels.size()) return out;
    const bool lens = use_lengths && (g1.lengths.has_value() || g2.lengths.has_value());
    if (lens && (!g1.lengths.has_value() || !g2.lengths.has_value())) return out;

    auto d1 = detail::build_data(g1, lens);
    auto d2 = detail::build_data(g2, lens);
    // Length indices are per-graph; they only align if the tables agree.
    if (lens && d1.length_table != d2.length_table) return out;

    const int V = g1.num_vertices();
    std::vector<int> image(V, -1), used(V, 0);

    auto vertex_compatible = [&](int v1, int v2) {
        if (g1.weights[v1] != g2.weights[v2]) return false;
        if (valence(g1, v1) != valence(g2, v2)) return false;
        if (d1.leaf_lists[v1] != d2.leaf_lists[v2]) return false;
        if (d1.loops[v1] != d2.loops[v2]) return false;
        for (int u1 = 0; u1 < V; ++u1) {
            if (image[u1] < 0 || u1 == v1) continue;
            auto b1 = d1.bundles.find({std::min(v1, u1), std::max(v1, u1)});
            auto b2 = d2.bundles.find({std::min(v2, image[u1]), std::max(v2, image[u1])});
            bool h1 = b1 != d1.bundles.end(), h2 = b2 != d2.bundles.end();
            if (h1 != h2) return false;
            if (h1 && b1->second != b2->second) return false;
        }
        return true;
    };

    // Expands one complete vertex bijection into all half-edge bijections.
    auto expand = [&]() {
        // Choice blocks: each block is a list of alternative partial maps.
        std::vector<std::vector<std::vector<std::pair<int, int>>>> blocks;

        // Leaves are forced by their labels.
        {
            std::vector<std::pair<int, int>> forced;
            std::map<int, int> by_label;
            for (const auto& [h, label] : g2.leaf_labels) by_label[label] = h;
            for (const auto& [h, label] : g1.leaf_labels) forced.push_back({h, by_label.at(label)});
            blocks.push_back({forced});
        }

        auto key_len = [&](const detail::GraphData& d, const EdgeKey& k) {
            return d.length_index.at(k);
        };

        for (int v1 = 0; v1 < V; ++v1) {
            int v2 = image[v1];
            // Loops, grouped by length.
            std::map<int, std::vector<EdgeKey>> l1, l2;
            for (int h : g1.vertices[v1]) {
                int ih = g1.involution[h];
                if (ih != h && d1.owner[ih] == v1 && h < ih) l1[key_len(d1, {h, ih})].push_back({h, ih});
            }
            for (int h : g2.vertices[v2]) {
                int ih = g2.involution[h];
                if (ih != h && d2.owner[ih] == v2 && h < ih) l2[key_len(d2, {h, ih})].push_back({h, ih});
            }
            for (auto& [li, ks1] : l1) {
                auto& ks2 = l2[li];
                std::vector<int> perm(ks1.size());
                std::iota(perm.begin(), perm.end(), 0);
                std::vector<std::vector<std::pair<int, int>>> alts;
                do {
                    // Each loop can also be traversed backwards.
                    for (std::size_t mask = 0; mask < (1u << ks1.size()); ++mask) {
                        std::vector<std::pair<int, int>> m;
                        for (std::size_t i = 0; i < ks1.size(); ++i) {
                            auto [a, b] = ks1[i];
                            auto [c, dd] = ks2[perm[i]];
                            if (mask >> i & 1) std::swap(c, dd);
                            m.push_back({a, c});
                            m.push_back({b, dd});
                        }
                        alts.push_back(std::move(m));
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
                blocks.push_back(std::move(alts));
            }
        }

        // Parallel edges between distinct vertices, grouped by length.
        for (const auto& [pair1, lens1] : d1.bundles) {
            auto [a1, b1] = pair1;
            int a2 = image[a1], b2 = image[b1];
            std::map<int, std::vector<EdgeKey>> groups1, groups2;
            for (const auto& e : edges(g1))
                if (d1.owner[e.first] + d1.owner[e.second] == a1 + b1 &&
                    std::min(d1.owner[e.first], d1.owner[e.second]) == std::min(a1, b1) &&
                    d1.owner[e.first] != d1.owner[e.second])
                    groups1[key_len(d1, e)].push_back(e);
            for (const auto& e : edges(g2))
                if (d2.owner[e.first] + d2.owner[e.second] == a2 + b2 &&
                    std::min(d2.owner[e.first], d2.owner[e.second]) == std::min(a2, b2) &&
                    d2.owner[e.first] != d2.owner[e.second])
                    groups2[key_len(d2, e)].push_back(e);
            for (auto& [li, ks1] : groups1) {
                auto& ks2 = groups2[li];
                std::vector<int> perm(ks1.size());
                std::iota(perm.begin(), perm.end(), 0);
                std::vector<std::vector<std::pair<int, int>>> alts;
                do {
                    std::vector<std::pair<int, int>> m;
                    for (std::size_t i = 0; i < ks1.size(); ++i) {
                        auto [x, y] = ks1[i];
                        auto [z, w] = ks2[perm[i]];
                        // Align sides with the vertex bijection.
                        if (image[d1.owner[x]] != d2.owner[z]) std::swap(z, w);
                        m.push_back({x, z});
                        m.push_back({y, w});
                    }
                    alts.push_back(std::move(m));
                } while (std::next_permutation(perm.begin(), perm.end()));
                blocks.push_back(std::move(alts));
            }
        }

        std::vector<int> hmap(g1.num_half_edges(), -1);
        auto rec = [&](auto&& self, std::size_t bi) -> void {
            if (bi == blocks.size()) {
                if (out.size() >= cap) throw error("resource bound exceeded: isomorphism count");
                GraphIso iso;
                iso.map = hmap;
                out.push_back(std::move(iso));
                return;
            }
            for (const auto& alt : blocks[bi]) {
                for (auto [a, b] : alt) hmap[a] = b;
                self(self, bi + 1);
            }
        };
        rec(rec, 0);
    };

    auto assign = [&](auto&& self, int v1) -> void {
        if (v1 == V) {
            expand();
            return;
        }
        for (int v2 = 0; v2 < V; ++v2) {
            if (used[v2] || !vertex_compatible(v1, v2)) continue;
            image[v1] = v2;
            used[v2] = 1;
            self(self, v1 + 1);
            image[v1] = -1;
            used[v2] = 0;
        }
    };
    assign(assign, 0);
    return out;
}

// Finds a witnessing isomorphism, if any, via canonical forms.
inline std::optional<GraphIso> are_isomorphic(const Graph& g1, const Graph& g2,
                                              bool respect_lengths) {
    require_valid(g1);
    require_valid(g2);
    bool lens = respect_lengths;
    if (respect_lengths && g1.lengths.has_value() != g2.lengths.has_value()) return std::nullopt;
    auto c1 = canonicalize(g1, lens);
    auto c2 = canonicalize(g2, lens);
    if (c1.canonical.key != c2.canonical.key) return std::nullopt;
    return compose(c1.witness, invert(c2.witness));
}

struct AutomorphismGroup {
    std::vector<GraphIso> elements;  // the full group, identity included
    std::size_t order = 0;

    // Every non-identity element; trivially a generating set.
    std::vector<GraphIso> generators() const {
        std::vector<GraphIso> gen;
        for (const auto& e : elements)
            if (!e.is_identity()) gen.push_back(e);
        return gen;
    }
};

inline AutomorphismGroup automorphisms(const Graph& g, bool respect_lengths,
                                       std::size_t cap = 1u << 20) {
    require_valid(g);
    AutomorphismGroup out;
    out.elements = all_isomorphisms(g, g, respect_lengths, cap);
    out.order = out.elements.size();
    return out;
}

// Sign of the permutation an automorphism induces on the edge list (edges
// ordered by key).
inline int edge_permutation_sign(const Graph& g, const GraphIso& iso) {
    auto es = edges(g);
    std::map<EdgeKey, int> index;
    for (int i = 0; i < static_cast<int>(es.size()); ++i) index[es[i]] = i;
    std::vector<int> perm(es.size());
    for (int i = 0; i < static_cast<int>(es.size()); ++i)
        perm[i] = index.at(make_edge_key(iso.map[es[i].first], iso.map[es[i].second]));
    int sign = 1;
    std::vector<int> seen(perm.size(), 0);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace tropmod
