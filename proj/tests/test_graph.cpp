#include "oracle.hpp"

#include "sec/canonical.hpp"
#include "sec/error.hpp"
#include "sec/factorization.hpp"
#include "sec/families.hpp"
#include "sec/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace sec;

namespace {

Graph random_graph(std::mt19937 & rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<int> sorted_degrees(const Graph & g)
{
    auto d = g.degrees();
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

TEST_CASE("graph construction rejects loops, duplicates and bad bipartitions")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph(2, {{0, 1}}, std::vector<Side>{Side::X, Side::X}), Error);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);
    const Graph g(4, {{2, 3}, {0, 1}, {1, 2}});
    CHECK(g.edge(0) == Edge(0, 1));
    CHECK(g.edge(2) == Edge(2, 3));
    CHECK(g.edge_index(3, 2) == 2);
    CHECK_FALSE(g.edge_index(0, 3));
}

TEST_CASE("is_bipartite")
{
    auto c4 = is_bipartite(families::cycle(4));
    REQUIRE(c4);
    CHECK((*c4)[0] == (*c4)[2]);
    CHECK((*c4)[1] == (*c4)[3]);
    CHECK((*c4)[0] != (*c4)[1]);
    CHECK_FALSE(is_bipartite(families::cycle(3)));
    CHECK_FALSE(is_bipartite(families::petersen()));
    CHECK_THROWS_AS(ensure_bipartition(families::cycle(5)), Error);
    CHECK(ensure_bipartition(families::cycle(6)).has_bipartition());
}

TEST_CASE("bridges")
{
    CHECK(bridges(families::path(3)).size() == 2);
    CHECK(bridges(families::cycle(7)).empty());
    const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    auto b = bridges(two_triangles);
    REQUIRE(b.size() == 1);
    CHECK(two_triangles.edge(b[0]) == Edge(2, 3));
}

TEST_CASE("edge connectivity")
{
    CHECK(edge_connectivity(families::cycle(4)).value == 2);
    CHECK(edge_connectivity(families::complete(4)).value == 3);
    CHECK(edge_connectivity(families::non_three_se_graph()).value == 3);
    CHECK(edge_connectivity(families::petersen()).value == 3);
    CHECK_THROWS_AS(edge_connectivity(Graph(4, {{0, 1}, {2, 3}})), Error);

    const auto k = edge_connectivity(families::path(4));
    CHECK(k.value == 1);
    const auto cut = make_cut(families::path(4), k.witness.side);
    CHECK(cut.size == 1);
    CHECK(cut.cut_edges == k.witness.cut_edges);
}

TEST_CASE("cut nontrivial flag")
{
    const Graph c6 = families::cycle(6);
    CHECK_FALSE(make_cut(c6, {0}).nontrivial);
    CHECK(make_cut(c6, {0, 1, 2}).nontrivial);
    CHECK(make_cut(c6, {0, 1, 2}).size == 2);
}

TEST_CASE("girth")
{
    CHECK(girth(families::complete(4)) == 3);
    CHECK(girth(families::petersen()) == 5);
    CHECK(girth(families::complete_bipartite(3, 3)) == 4);
    CHECK(girth(families::heawood()) == 6);
    CHECK(girth(families::path(5)) == infinite_girth);
}

TEST_CASE("join")
{
    CHECK(join(families::empty(1), families::empty(1)) == families::complete(2));
    CHECK(join(families::cycle(4), families::empty(1)) == families::wheel(4));
    CHECK(join(families::complete(7), families::complete(4)) == families::complete(11));
}

TEST_CASE("cartesian product")
{
    CHECK(canonical_form(cartesian_product(families::complete(2), families::complete(2))).certificate
          == canonical_form(families::cycle(4)).certificate);
    const Graph c4c3 = cartesian_product(families::cycle(4), families::cycle(3));
    CHECK(c4c3.vertex_count() == 12);
    CHECK(c4c3.edge_count() == 24);
    CHECK(c4c3.min_degree() == 4);
    CHECK(c4c3.max_degree() == 4);
    const Graph kp = cartesian_product(families::complete(2), families::petersen());
    CHECK(kp.vertex_count() == 20);
    CHECK(kp.min_degree() == 4);
    CHECK(kp.max_degree() == 4);
}

TEST_CASE("lexicographic product")
{
    CHECK(lexicographic_product(families::complete(2), families::empty(1)) == families::complete(2));
    CHECK(lexicographic_product(families::complete(2), families::complete(2)) == families::complete(4));
    const Graph k222 = lexicographic_product(families::cycle(3), families::empty(2));
    CHECK(k222.edge_count() == 12);
    CHECK(k222.min_degree() == 4);
    CHECK(k222.max_degree() == 4);
}

TEST_CASE("subdivide edge")
{
    CHECK(canonical_form(subdivide_edge(families::cycle(3), Edge(0, 1), 1)).certificate
          == canonical_form(families::cycle(4)).certificate);
    const Graph k4 = subdivide_edge(families::complete(4), Edge(0, 1), 2);
    CHECK(k4.vertex_count() == 6);
    CHECK(k4.edge_count() == 8);
    CHECK(subdivide_edge(families::cycle(5), Edge(1, 2), 0) == families::cycle(5));
    CHECK_THROWS_AS(subdivide_edge(families::cycle(5), Edge(0, 2), 1), Error);
    CHECK(subdivide_edge(families::cycle(4).with_sides({Side::X, Side::Y, Side::X, Side::Y}), Edge(0, 1), 2)
              .has_bipartition());
}

TEST_CASE("one factorizations")
{
    auto check = [](const Graph & g, int r) {
        auto f = one_factorization(g);
        REQUIRE(f);
        CHECK(f->factors.size() == static_cast<std::size_t>(r));
        std::string why;
        CHECK_MESSAGE(verify_one_factorization(g, *f, &why), why);
    };
    check(families::complete(4), 3);
    check(families::complete(8), 7);
    check(families::complete_bipartite(3, 3), 3);
    check(families::hypercube(4), 4);
    check(families::prism(families::petersen()), 4);
    check(families::heawood(), 3);
    CHECK_FALSE(one_factorization(families::petersen()));
    CHECK_FALSE(one_factorization(families::complete(5)));
    CHECK_THROWS_AS(one_factorization(families::wheel(4)), Error);

    const auto kk = shifted_factorization(3);
    const Graph k33 = families::complete_bipartite(3, 3);
    for (int t = 0; t < 3; ++t)
        for (int e : kk.factors[t]) {
            const Edge & ed = k33.edge(e);
            CHECK((ed.u + t) % 3 == ed.v - 3);
        }
}

TEST_CASE("structural queries agree with brute force on random graphs")
{
    std::mt19937 rng(7);
    for (int round = 0; round < 300; ++round) {
        const int n = 2 + round % 8;
        const Graph g = random_graph(rng, n, 0.2 + 0.6 * (round % 5) / 4.0);

        CHECK(is_bipartite(g).has_value() == oracle::bipartite(g));
        CHECK(bridges(g) == oracle::bridges(g));
        CHECK(component_count(g) == oracle::components(g));
        const int gi = girth(g);
        CHECK((gi == infinite_girth ? 0 : gi) == oracle::girth(g));

        int degree_sum = 0;
        for (int v = 0; v < n; ++v)
            degree_sum += g.degree(v);
        CHECK(degree_sum == 2 * g.edge_count());

        if (is_connected(g) && n >= 2) {
            const auto k = edge_connectivity(g);
            CHECK(k.value == oracle::edge_connectivity(g));
            CHECK(k.value <= g.min_degree());
            CHECK(make_cut(g, k.witness.side).size == k.value);
            CHECK(!bridges(g).empty() == (k.value == 1));
            for (const auto & cut : minimum_cuts(g, k.value)) {
                CHECK(static_cast<int>(cut.size()) == k.value);
                CHECK(component_count(remove_edges(g, cut)) > 1);
            }
        }

        const Graph h = random_graph(rng, 1 + round % 5, 0.5);
        CHECK(join(g, h).edge_count() == g.edge_count() + h.edge_count() + g.vertex_count() * h.vertex_count());
        CHECK(sorted_degrees(cartesian_product(g, h)) == sorted_degrees(cartesian_product(h, g)));
    }
}

TEST_CASE("canonical form identifies relabelled graphs")
{
    std::mt19937 rng(11);
    for (int round = 0; round < 100; ++round) {
        const int n = 3 + round % 8;
        const Graph g = random_graph(rng, n, 0.4);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> moved;
        for (const auto & e : g.edges())
            moved.emplace_back(perm[e.u], perm[e.v]);
        CHECK(canonical_form(g).certificate == canonical_form(Graph(n, moved)).certificate);
    }
    CHECK(automorphisms(families::petersen()).size() == 120);
    CHECK(automorphisms(families::complete(5)).size() == 120);
    CHECK(automorphisms(families::cycle(6)).size() == 12);
}

TEST_CASE("connected graph generation counts")
{
    // OEIS A002905: connected graphs by number of edges
    const std::vector<int> expected = {1, 1, 3, 5, 12, 30, 79};
    std::vector<int> count(8, 0);
    for_each_connected_graph(7, [&](const Graph & g) { ++count[g.edge_count()]; });
    for (int m = 1; m <= 7; ++m)
        CHECK(count[m] == expected[m - 1]);
}
