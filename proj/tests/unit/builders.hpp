#pragma once

// Small graph builders shared across the test suites.

#include <tropmod/graph.hpp>

namespace tropmod::testing {

// One vertex, g loops, n labeled leaves. Loop i uses half-edges (2i, 2i+1);
// leaves follow.
inline Graph rose(int g, int n, int weight = 0) {
    Graph out;
    std::vector<int> part;
    out.involution.resize(2 * g + n);
    for (int i = 0; i < g; ++i) {
        out.involution[2 * i] = 2 * i + 1;
        out.involution[2 * i + 1] = 2 * i;
        part.push_back(2 * i);
        part.push_back(2 * i + 1);
    }
    for (int j = 0; j < n; ++j) {
        int h = 2 * g + j;
        out.involution[h] = h;
        out.leaf_labels[h] = j + 1;
        part.push_back(h);
    }
    std::sort(part.begin(), part.end());
    out.vertices.push_back(part);
    out.weights.push_back(weight);
    return out;
}

// Two vertices joined by k parallel edges; k = 3 is the theta graph.
inline Graph banana(int k) {
    Graph out;
    out.involution.resize(2 * k);
    std::vector<int> a, b;
    for (int i = 0; i < k; ++i) {
        out.involution[2 * i] = 2 * i + 1;
        out.involution[2 * i + 1] = 2 * i;
        a.push_back(2 * i);
        b.push_back(2 * i + 1);
    }
    out.vertices = {a, b};
    out.weights = {0, 0};
    return out;
}

inline Graph theta() { return banana(3); }

// Loop (0,1) at vertex 0, bridge (2,3), loop (4,5) at vertex 1.
inline Graph dumbbell() {
    Graph out;
    out.involution = {1, 0, 3, 2, 5, 4};
    out.vertices = {{0, 1, 2}, {3, 4, 5}};
    out.weights = {0, 0};
    return out;
}

// Single vertex of the given weight, n leaves, no edges.
inline Graph lone_vertex(int weight, int n = 0) {
    Graph out;
    out.involution.resize(n);
    std::vector<int> part;
    for (int j = 0; j < n; ++j) {
        out.involution[j] = j;
        out.leaf_labels[j] = j + 1;
        part.push_back(j);
    }
    out.vertices.push_back(part);
    out.weights.push_back(weight);
    return out;
}

}  // namespace tropmod::testing
