#pragma once

// Points of the moduli space of stable weighted metric graphs. A point is a
// stable graph with strictly positive rational edge lengths; zero-length
// edges are contracted away by normalization (loops add one to the weight so
// the genus never changes). Link points are rescaled so lengths sum to 1.

#include "tropmod/canonical.hpp"

namespace tropmod {

enum class PointMode { cone, link };

struct TropicalPoint {
    // Canonically labeled with its lengths, so structural equality decides
    // equality of points.
    CanonicalGraph graph;

    bool operator==(const TropicalPoint& o) const { return graph == o.graph; }
    bool operator!=(const TropicalPoint& o) const { return graph != o.graph; }
};

// Contracts every zero-length edge (weighted rule), canonicalizes, and in
// link mode rescales the lengths to total 1.
inline TropicalPoint normalize_point(const Graph& g, PointMode mode) {
    require_valid(g);
    if (!g.lengths) throw error("normalize_point requires edge lengths");
    if (!is_stable(g)) throw error("normalize_point requires a stable graph");

    std::set<EdgeKey> zero;
    Rational total = 0;
    for (const auto& [k, len] : *g.lengths) {
        if (len == 0)
            zero.insert(k);
        else
            total += len;
    }
    if (mode == PointMode::link && total == 0)
        throw error("cone point has no link representative");

    Graph reduced = contract_edges_weighted(g, zero).graph;
    if (mode == PointMode::link && total != 1) {
        for (auto& [k, len] : *reduced.lengths) len /= total;
    }
    return {canonicalize(reduced, true).canonical};
}

inline bool is_pure(const TropicalPoint& p) {
    for (int w : p.graph.graph.weights)
        if (w != 0) return false;
    return true;
}

// The combinatorial cell containing the point: its graph, canonicalized
// without regard to the lengths.
inline CanonicalGraph cell_of(const TropicalPoint& p) {
    return canonicalize(p.graph.graph, false).canonical;
}

}  // namespace tropmod
