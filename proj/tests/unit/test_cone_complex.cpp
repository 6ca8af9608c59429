#include <catch2/catch_amalgamated.hpp>
#include <tropmod/barycentric.hpp>
#include <tropmod/chain_complex.hpp>
#include <tropmod/poset.hpp>
#include <tropmod/tropical_point.hpp>

#include "builders.hpp"

using namespace tropmod;
using namespace tropmod::testing;

TEST_CASE("strata posets for small ranges", "[poset]") {
    auto p11 = build_strata_poset(1, 1);
    CHECK(p11.nodes.size() == 2);
    CHECK(p11.covers.size() == 1);

    auto p04 = build_strata_poset(0, 4);
    CHECK(p04.nodes.size() == 4);
    CHECK(p04.covers.size() == 3);

    auto p03 = build_strata_poset(0, 3);
    CHECK(p03.nodes.size() == 1);
    CHECK(p03.covers.empty());
}

TEST_CASE("covers drop exactly one edge and the edge-free class is the minimum", "[poset]") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 0}, {0, 5}}) {
        auto poset = build_strata_poset(g, n);
        REQUIRE(num_edges(poset.nodes.front().graph) == 0);
        int minima = 0;
        std::set<int> upper;
        for (auto [hi, lo] : poset.covers) {
            CHECK(num_edges(poset.nodes[hi].graph) == num_edges(poset.nodes[lo].graph) + 1);
            upper.insert(hi);
        }
        for (int i = 0; i < static_cast<int>(poset.nodes.size()); ++i) {
            bool covers_something = false;
            for (auto [hi, lo] : poset.covers) covers_something |= (hi == i);
            if (!covers_something) ++minima;
        }
        CHECK(minima == 1);  // only the edge-free graph contracts to nothing
    }
}

TEST_CASE("link cells and dimensions", "[poset]") {
    auto c11 = link_cells(1, 1);
    REQUIRE(c11.size() == 1);
    CHECK(c11[0].second == 0);

    auto c04 = link_cells(0, 4);
    REQUIRE(c04.size() == 3);
    for (const auto& [c, d] : c04) CHECK(d == 0);

    auto c20 = link_cells(2, 0);
    REQUIRE(c20.size() == 6);
    std::multiset<int> dims;
    for (const auto& [c, d] : c20) dims.insert(d);
    CHECK(dims == std::multiset<int>{0, 0, 1, 1, 2, 2});
}

TEST_CASE("max link-cell dimension is 3g-4+n", "[poset]") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 0}, {0, 4}, {0, 5}}) {
        int top = -1;
        for (const auto& [c, d] : link_cells(g, n)) top = std::max(top, d);
        CHECK(top == 3 * g - 4 + n);
    }
}

TEST_CASE("normalization contracts zero-length edges", "[point]") {
    Graph t = theta();
    t.lengths = std::map<EdgeKey, Rational>{
        {{0, 1}, Rational(1, 2)}, {{2, 3}, Rational(1, 2)}, {{4, 5}, Rational(0)}};
    auto p = normalize_point(t, PointMode::link);
    CHECK(num_edges(p.graph.graph) == 2);
    CHECK(p.graph.graph.num_vertices() == 1);  // two-loop rose
    for (const auto& [k, len] : *p.graph.graph.lengths) CHECK(len == Rational(1, 2));

    // A zero-length loop at a weight-zero vertex becomes weight one.
    Graph r = rose(1, 1);
    r.lengths = std::map<EdgeKey, Rational>{{{0, 1}, Rational(0)}};
    auto q = normalize_point(r, PointMode::cone);
    CHECK(num_edges(q.graph.graph) == 0);
    CHECK(q.graph.graph.weights[0] == 1);
    CHECK(genus(q.graph.graph) == 1);
}

TEST_CASE("link normalization rescales to total length one", "[point]") {
    Graph t = theta();
    t.lengths = std::map<EdgeKey, Rational>{
        {{0, 1}, Rational(1)}, {{2, 3}, Rational(1, 2)}, {{4, 5}, Rational(1, 2)}};
    auto p = normalize_point(t, PointMode::link);
    Rational total = 0;
    for (const auto& [k, len] : *p.graph.graph.lengths) total += len;
    CHECK(total == 1);
    CHECK(p.graph.graph.lengths->size() == 3);

    // Idempotence and genus preservation.
    auto again = normalize_point(p.graph.graph, PointMode::link);
    CHECK(again == p);
    CHECK(genus(p.graph.graph) == genus(t));
}

TEST_CASE("all-zero lengths have no link representative", "[point]") {
    Graph r = rose(2, 0);
    r.lengths = std::map<EdgeKey, Rational>{{{0, 1}, Rational(0)}, {{2, 3}, Rational(0)}};
    CHECK_THROWS_WITH(normalize_point(r, PointMode::link),
                      Catch::Matchers::ContainsSubstring("no link representative"));
    CHECK_NOTHROW(normalize_point(r, PointMode::cone));
}

TEST_CASE("purity of points", "[point]") {
    Graph t = theta();
    t.lengths = std::map<EdgeKey, Rational>{
        {{0, 1}, Rational(1, 3)}, {{2, 3}, Rational(1, 3)}, {{4, 5}, Rational(1, 3)}};
    CHECK(is_pure(normalize_point(t, PointMode::link)));

    Graph f = rose(1, 0, 1);  // weight-1 vertex with a loop
    f.lengths = std::map<EdgeKey, Rational>{{{0, 1}, Rational(1)}};
    CHECK_FALSE(is_pure(normalize_point(f, PointMode::link)));

    // Genus-zero points are always pure.
    Graph s = lone_vertex(0, 4);
    Graph split;  // one-edge tree on four leaves
    split.involution = {1, 0, 2, 3, 4, 5};
    split.vertices = {{0, 2, 3}, {1, 4, 5}};
    split.weights = {0, 0};
    split.leaf_labels = {{2, 1}, {3, 2}, {4, 3}, {5, 4}};
    split.lengths = std::map<EdgeKey, Rational>{{{0, 1}, Rational(1)}};
    CHECK(is_pure(normalize_point(split, PointMode::link)));
}

TEST_CASE("chain complex ranks for small ranges", "[homology]") {
    auto cc11 = cellular_chain_complex(1, 1);
    REQUIRE(cc11.cells.size() == 1);
    CHECK(cc11.cells[0].size() == 1);

    auto cc04 = cellular_chain_complex(0, 4);
    REQUIRE(cc04.cells.size() == 1);
    CHECK(cc04.cells[0].size() == 3);

    // Odd edge symmetries kill the theta, the dumbbell and the two-loop
    // rose; the surviving cells are the two one-edge classes and the
    // loop-plus-bridge class.
    auto cc20 = cellular_chain_complex(2, 0);
    REQUIRE(cc20.cells.size() == 3);
    CHECK(cc20.cells[0].size() == 2);
    CHECK(cc20.cells[1].size() == 1);
    CHECK(cc20.cells[2].size() == 0);
}

TEST_CASE("boundary squares to zero", "[homology]") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {0, 4}, {0, 5}, {1, 2}, {2, 0}, {1, 3}}) {
        CHECK(boundary_squares_to_zero(cellular_chain_complex(g, n)));
    }
}

TEST_CASE("homology of the empty link", "[homology]") {
    auto h = homology_link(0, 3);
    CHECK(h.empty);
    CHECK(h.betti.empty());
    CHECK(h.euler == 0);
}

TEST_CASE("pinned link homology", "[homology]") {
    auto h11 = homology_link(1, 1);
    CHECK(h11.betti == std::vector<long>{1});

    auto h04 = homology_link(0, 4);
    CHECK(h04.betti == std::vector<long>{3});

    auto h20 = homology_link(2, 0);
    CHECK(h20.betti == std::vector<long>{1, 0, 0});

    // The (0,5) link is a connected trivalent graph with 10 vertices and 15
    // edges, so b = [1, 6].
    auto h05 = homology_link(0, 5);
    CHECK(h05.betti == std::vector<long>{1, 6});
}

TEST_CASE("barycentric oracle on points", "[oracle]") {
    auto o11 = barycentric_oracle(1, 1);
    REQUIRE_FALSE(o11.empty);
    CHECK(o11.complex.flags[0].size() == 1);
    CHECK(o11.betti == std::vector<long>{1});

    auto o04 = barycentric_oracle(0, 4);
    CHECK(o04.complex.flags[0].size() == 3);
    CHECK(o04.betti == std::vector<long>{3});
}

TEST_CASE("barycentric subdivision of the genus-two link", "[oracle]") {
    auto o = barycentric_oracle(2, 0);
    REQUIRE(o.complex.flags.size() == 3);
    CHECK(o.complex.flags[0].size() == 6);
    CHECK(o.complex.flags[1].size() == 9);
    CHECK(o.complex.flags[2].size() == 4);
    CHECK(o.betti == std::vector<long>{1, 0, 0});
    CHECK(o.euler == 1);
}

TEST_CASE("oracle agrees with the quotient chain complex", "[oracle][homology]") {
    for (auto [g, n] :
         std::vector<std::pair<int, int>>{{1, 1}, {0, 4}, {0, 5}, {1, 2}, {2, 0}}) {
        auto h = homology_link(g, n);
        auto o = barycentric_oracle(g, n);
        INFO("(g,n) = (" << g << "," << n << ")");
        CHECK(h.betti == o.betti);
        CHECK(h.euler == o.euler);
    }
}
