#include <catch2/catch_amalgamated.hpp>
#include <tropmod/canonical.hpp>

#include "builders.hpp"

using namespace tropmod;
using namespace tropmod::testing;

namespace {

// Applies an arbitrary relabeling of half-edge ids to a graph.
Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out;
    out.involution.assign(g.num_half_edges(), -1);
    for (int h = 0; h < g.num_half_edges(); ++h) out.involution[perm[h]] = perm[g.involution[h]];
    for (const auto& [h, l] : g.leaf_labels) out.leaf_labels[perm[h]] = l;
    for (const auto& part : g.vertices) {
        std::vector<int> p;
        for (int h : part) p.push_back(perm[h]);
        std::sort(p.begin(), p.end());
        out.vertices.push_back(p);
    }
    out.weights = g.weights;
    if (g.lengths) {
        std::map<EdgeKey, Rational> lens;
        for (const auto& [k, v] : *g.lengths)
            lens[make_edge_key(perm[k.first], perm[k.second])] = v;
        out.lengths = lens;
    }
    return out;
}

// Exhaustive bijection search, used as the independent check on the
// canonical machinery. Tries every permutation of half-edge ids.
bool brute_force_iso_exists(const Graph& g1, const Graph& g2, bool respect_lengths) {
    if (g1.num_half_edges() != g2.num_half_edges()) return false;
    std::vector<int> perm(g1.num_half_edges());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Graph moved = relabel(g1, perm);
        // Compare as unordered structures: same parts, involution, labels.
        auto parts1 = moved.vertices;
        auto sortkey = [](const Graph& g) {
            std::vector<std::pair<std::vector<int>, int>> ps;
            for (int v = 0; v < g.num_vertices(); ++v) ps.push_back({g.vertices[v], g.weights[v]});
            std::sort(ps.begin(), ps.end());
            return ps;
        };
        if (sortkey(moved) != sortkey(g2)) continue;
        if (moved.involution != g2.involution) continue;
        if (moved.leaf_labels != g2.leaf_labels) continue;
        if (respect_lengths && moved.lengths != g2.lengths) continue;
        return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::size_t brute_force_automorphism_count(const Graph& g, bool respect_lengths) {
    std::size_t count = 0;
    std::vector<int> perm(g.num_half_edges());
    std::iota(perm.begin(), perm.end(), 0);
    auto sortkey = [](const Graph& g) {
        std::vector<std::pair<std::vector<int>, int>> ps;
        for (int v = 0; v < g.num_vertices(); ++v) ps.push_back({g.vertices[v], g.weights[v]});
        std::sort(ps.begin(), ps.end());
        return ps;
    };
    auto base = sortkey(g);
    do {
        Graph moved = relabel(g, perm);
        if (sortkey(moved) != base) continue;
        if (moved.involution != g.involution) continue;
        if (moved.leaf_labels != g.leaf_labels) continue;
        if (respect_lengths && moved.lengths != g.lengths) continue;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling", "[canonical]") {
    Graph g = theta();
    Graph h = relabel(g, {3, 5, 0, 2, 1, 4});
    REQUIRE(validate(h).empty());
    CHECK(canonical_form(g).canonical == canonical_form(h).canonical);
}

TEST_CASE("canonical form is idempotent", "[canonical]") {
    for (const Graph& g : {theta(), dumbbell(), rose(2, 1), lone_vertex(2)}) {
        auto first = canonical_form(g);
        auto again = canonical_form(first.canonical.graph);
        CHECK(first.canonical == again.canonical);
        CHECK(again.witness.is_identity());
    }
}

TEST_CASE("theta and dumbbell are not isomorphic", "[canonical]") {
    CHECK(canonical_form(theta()).canonical != canonical_form(dumbbell()).canonical);
    CHECK_FALSE(are_isomorphic(theta(), dumbbell(), false).has_value());
}

TEST_CASE("the canonical witness is a genuine isomorphism", "[canonical]") {
    Graph g = dumbbell();
    auto res = canonical_form(g);
    const Graph& c = res.canonical.graph;
    for (int h = 0; h < g.num_half_edges(); ++h)
        CHECK(c.involution[res.witness.map[h]] == res.witness.map[g.involution[h]]);
}

TEST_CASE("leaf labels must match pointwise", "[canonical]") {
    // Two one-edge trees on four leaves with different splits.
    auto tree = [](std::vector<int> left) {
        Graph g;
        g.involution = {1, 0, 2, 3, 4, 5};
        std::vector<int> a{0}, b{1};
        int next_label = 1;
        for (int h = 2; h <= 5; ++h) {
            g.involution[h] = h;
            bool in_left = std::find(left.begin(), left.end(), next_label) != left.end();
            (in_left ? a : b).push_back(h);
            g.leaf_labels[h] = next_label++;
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        g.vertices = {a, b};
        g.weights = {0, 0};
        return g;
    };
    Graph t12 = tree({1, 2});
    Graph t13 = tree({1, 3});
    REQUIRE(validate(t12).empty());
    REQUIRE(validate(t13).empty());
    CHECK_FALSE(are_isomorphic(t12, t13, false).has_value());
    CHECK(are_isomorphic(t12, t12, false).has_value());
}

TEST_CASE("isomorphism respects lengths when asked", "[canonical]") {
    Graph a = theta();
    a.lengths = std::map<EdgeKey, Rational>{
        {{0, 1}, Rational(1, 2)}, {{2, 3}, Rational(1, 4)}, {{4, 5}, Rational(1, 4)}};
    Graph b = theta();
    b.lengths = std::map<EdgeKey, Rational>{
        {{0, 1}, Rational(1, 4)}, {{2, 3}, Rational(1, 2)}, {{4, 5}, Rational(1, 4)}};
    auto iso = are_isomorphic(a, b, true);
    REQUIRE(iso.has_value());
    // The witness must carry each edge to an edge of the same length.
    for (const auto& [k, len] : *a.lengths) {
        EdgeKey image = make_edge_key(iso->map[k.first], iso->map[k.second]);
        CHECK(b.lengths->at(image) == len);
    }

    Graph c = theta();
    c.lengths = std::map<EdgeKey, Rational>{
        {{0, 1}, Rational(1, 2)}, {{2, 3}, Rational(3, 8)}, {{4, 5}, Rational(1, 8)}};
    CHECK_FALSE(are_isomorphic(a, c, true).has_value());
    CHECK(are_isomorphic(a, c, false).has_value());
}

TEST_CASE("automorphism group orders", "[canonical]") {
    CHECK(automorphisms(theta(), false).order == 12);
    CHECK(automorphisms(rose(1, 1), false).order == 2);
    CHECK(automorphisms(dumbbell(), false).order == 8);
    CHECK(automorphisms(lone_vertex(0, 3), false).order == 1);
    CHECK(automorphisms(rose(2, 0), false).order == 8);
    CHECK(automorphisms(rose(3, 0), false).order == 48);
}

TEST_CASE("length-preserving automorphisms", "[canonical]") {
    Graph r = rose(2, 0);
    r.lengths = std::map<EdgeKey, Rational>{{{0, 1}, Rational(1, 2)}, {{2, 3}, Rational(1, 2)}};
    CHECK(automorphisms(r, true).order == 8);
    r.lengths = std::map<EdgeKey, Rational>{{{0, 1}, Rational(1, 3)}, {{2, 3}, Rational(2, 3)}};
    CHECK(automorphisms(r, true).order == 4);
}

TEST_CASE("automorphism orders agree with exhaustive search", "[canonical][property]") {
    for (const Graph& g : {theta(), dumbbell(), rose(2, 0), rose(1, 2), lone_vertex(1, 1)}) {
        CHECK(automorphisms(g, false).order == brute_force_automorphism_count(g, false));
    }
}

TEST_CASE("canonical equality matches brute-force isomorphism", "[canonical][property]") {
    std::vector<Graph> pool = {theta(), dumbbell(), rose(2, 0), rose(1, 2), rose(2, 1)};
    pool.push_back(relabel(theta(), {5, 4, 3, 2, 1, 0}));
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i; j < pool.size(); ++j) {
            bool canon_eq =
                canonical_form(pool[i]).canonical == canonical_form(pool[j]).canonical;
            if (pool[i].num_half_edges() == pool[j].num_half_edges())
                CHECK(canon_eq == brute_force_iso_exists(pool[i], pool[j], false));
        }
    }
}

TEST_CASE("edge permutation signs", "[canonical]") {
    // The theta graph has automorphisms inducing odd edge permutations; the
    // dumbbell's end swap transposes the two loops.
    bool theta_has_odd = false;
    for (const auto& a : automorphisms(theta(), false).elements)
        theta_has_odd |= edge_permutation_sign(theta(), a) < 0;
    CHECK(theta_has_odd);

    bool dumbbell_has_odd = false;
    for (const auto& a : automorphisms(dumbbell(), false).elements)
        dumbbell_has_odd |= edge_permutation_sign(dumbbell(), a) < 0;
    CHECK(dumbbell_has_odd);

    // Loop plus bridge at a weighted vertex: loop and bridge cannot swap.
    Graph d;
    d.involution = {1, 0, 3, 2};
    d.vertices = {{0, 1, 2}, {3}};
    d.weights = {0, 1};
    REQUIRE(validate(d).empty());
    for (const auto& a : automorphisms(d, false).elements)
        CHECK(edge_permutation_sign(d, a) == 1);
}
