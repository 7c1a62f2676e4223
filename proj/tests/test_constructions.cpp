#include "sec/constructions.hpp"
#include "sec/corpus.hpp"
#include "sec/families.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace sec;

namespace {

std::set<int> colors_used(const SimultaneousColoring & sc)
{
    std::set<int> out;
    for (const auto & c : sc.colorings)
        out.insert(c.begin(), c.end());
    return out;
}

SimultaneousColoring two_se_c4()
{
    return *decide_mu_se(families::cycle(4), 2, 2);
}

} // namespace

TEST_CASE("color_one_factorable")
{
    const Graph k4 = families::complete(4);
    auto a = color_one_factorable(k4, 3);
    CHECK(a.mu == 3);
    CHECK(a.num_colors == 3);
    CHECK(verify_simultaneous(k4, a));

    const Graph q3 = families::hypercube(3);
    auto b = color_one_factorable(q3, 3);
    CHECK(b.num_colors == 3);
    CHECK(verify_simultaneous(q3, b));

    const Graph k6 = families::complete(6);
    auto c = color_one_factorable(k6, 5);
    CHECK(c.num_colors == 5);
    CHECK(c.mu == 5);
    CHECK(verify_simultaneous(k6, c));

    for (const auto & [name, g] : corpus::one_factorable_graphs()) {
        const int r = g.max_degree();
        for (int mu = 1; mu <= r; ++mu) {
            auto sc = color_one_factorable(g, mu);
            CHECK(sc.num_colors == r);
            for (int v = 0; v < g.vertex_count(); ++v)
                for (int t = 0; t < mu; ++t)
                    CHECK(static_cast<int>(palette(g, sc, t, v).size()) == r);
        }
    }
    CHECK_THROWS_AS(color_one_factorable(families::petersen(), 2), Error);
    CHECK_THROWS_AS(color_one_factorable(k4, 4), Error);
}

TEST_CASE("color_complete_bipartite")
{
    const Graph k22 = families::complete_bipartite(2, 2);
    auto c4 = color_complete_bipartite(2, 2, 2);
    CHECK(c4.num_colors == 2);
    CHECK(verify_simultaneous(k22, c4));

    CHECK(complete_bipartite_color(2, 3, 0, 0, 0) == 1);
    CHECK(complete_bipartite_color(2, 3, 0, 0, 1) == 2);
    CHECK(complete_bipartite_color(2, 3, 0, 0, 2) == 3);
    CHECK(complete_bipartite_color(2, 3, 1, 0, 0) == 2);
    CHECK(complete_bipartite_color(2, 3, 1, 0, 1) == 3);
    CHECK(complete_bipartite_color(2, 3, 1, 0, 2) == 1);
    CHECK(verify_simultaneous(families::complete_bipartite(2, 3), color_complete_bipartite(2, 3, 2)));

    auto k44 = color_complete_bipartite(4, 4, 4);
    CHECK(k44.num_colors == 4);
    CHECK(verify_simultaneous(families::complete_bipartite(4, 4), k44));

    for (int n = 1; n <= 7; ++n)
        for (int m = 1; m <= 7; ++m)
            for (int mu = 1; mu <= std::min(n, m); ++mu) {
                auto sc = color_complete_bipartite(n, m, mu);
                CHECK(sc.num_colors == std::max(n, m));
                CHECK(static_cast<int>(colors_used(sc).size()) == std::max(n, m));
            }
    CHECK_THROWS_AS(color_complete_bipartite(2, 5, 3), Error);
}

TEST_CASE("color_join")
{
    const Graph c4 = families::cycle(4);
    auto a = color_join(c4, two_se_c4(), c4, two_se_c4());
    CHECK(a.num_colors == 6);
    CHECK(verify_simultaneous(join(c4, c4), a));

    const Graph k4 = families::complete(4);
    auto k4c = color_one_factorable(k4, 2);
    CHECK(verify_simultaneous(families::complete(8), color_join(k4, k4c, k4, k4c)));

    auto k7 = *color_complete(7, 3);
    auto k11 = color_join(families::complete(7), k7, k4, color_one_factorable(k4, 3));
    CHECK(verify_simultaneous(families::complete(11), k11));
    CHECK(k11.num_colors == std::max(k7.used_colors(), 3) + 7);

    CHECK_THROWS_AS(color_join(c4, two_se_c4(), k4, color_one_factorable(k4, 3)), Error);
}

TEST_CASE("color_cartesian_sum")
{
    const Graph c4 = families::cycle(4);
    auto a = color_cartesian_sum(c4, two_se_c4(), c4, two_se_c4());
    CHECK(a.num_colors == 4);
    CHECK(verify_simultaneous(cartesian_product(c4, c4), a));

    const Graph k2 = families::complete(2);
    SimultaneousColoring one{1, 1, {{1}}};
    auto b = color_cartesian_sum(k2, one, k2, one);
    CHECK(b.num_colors == 2);
    CHECK(verify_simultaneous(cartesian_product(k2, k2), b));

    const Graph c6 = families::cycle(6);
    auto c6c = *decide_mu_se(c6, 2, 2);
    auto c = color_cartesian_sum(c6, c6c, families::complete_bipartite(3, 3), color_complete_bipartite(3, 3, 2));
    CHECK(c.num_colors == 5);
    CHECK(verify_simultaneous(cartesian_product(c6, families::complete_bipartite(3, 3)), c));
}

TEST_CASE("color_cartesian_regular")
{
    CHECK_THROWS_AS(color_cartesian_regular(families::cycle(4), families::cycle(3), 4), Error);

    const Graph c3 = families::cycle(3), k2 = families::complete(2);
    auto prism = color_cartesian_regular(c3, k2, 3);
    CHECK(prism.num_colors == 3);
    CHECK(verify_simultaneous(cartesian_product(c3, k2), prism));

    const Graph c4 = families::cycle(4);
    auto torus = color_cartesian_regular(c3, c4, 4);
    CHECK(torus.num_colors == 4);
    CHECK(verify_simultaneous(cartesian_product(c3, c4), torus));

    CHECK_THROWS_AS(color_cartesian_regular(c3, k2, 4), Error);

    for (const auto & [gname, g] : corpus::regular_graphs())
        for (const auto & [hname, h] : corpus::one_factorable_graphs()) {
            const int r = g.max_degree() + h.max_degree();
            auto sc = color_cartesian_regular(g, h, r);
            CHECK_MESSAGE(sc.num_colors == r, (gname + " x " + hname));
        }
}

TEST_CASE("color_lexicographic")
{
    const Graph c4 = families::cycle(4);
    auto a = color_lexicographic(families::complete(2), c4, two_se_c4());
    CHECK(a.num_colors == 2 + 4);
    CHECK(verify_simultaneous(lexicographic_product(families::complete(2), c4), a));

    auto b = color_lexicographic(families::cycle(3), c4, two_se_c4());
    CHECK(b.num_colors == 2 + 3 * 4);
    CHECK(verify_simultaneous(lexicographic_product(families::cycle(3), c4), b));

    auto c = color_lexicographic(families::empty(1), c4, two_se_c4());
    CHECK(c.colorings == two_se_c4().colorings);
}

TEST_CASE("color_wheel")
{
    auto w3 = color_wheel(3);
    // edges of W3 in sorted order: v1v2, v1v3, v1u, v2v3, v2u, v3u
    CHECK(w3.colorings[0] == std::vector<int>{3, 2, 1, 1, 2, 3});
    CHECK(w3.colorings[1] == std::vector<int>{2, 1, 3, 3, 1, 2});

    for (int n = 3; n <= 15; ++n) {
        const Graph g = families::wheel(n);
        auto sc = color_wheel(n);
        CHECK(sc.num_colors == n);
        CHECK(verify_simultaneous(g, sc));
        CHECK(verify_proper(g, sc.coordinate(0)));
        for (int i = 1; i <= n; ++i) {
            std::vector<int> expect = {(i - 1) % n + 1, i % n + 1, (i + 1) % n + 1};
            std::sort(expect.begin(), expect.end());
            for (int t = 0; t < 2; ++t)
                CHECK(palette(g, sc, t, i - 1) == expect);
        }
    }
}

TEST_CASE("embedded complete graph tables")
{
    for (int n : {7, 9}) {
        auto t = check_complete_table(n);
        CHECK(t.report);
        CHECK(t.discrepancies.empty());
        CHECK(t.printed.mu == 3);
        CHECK(t.printed.num_colors == n);
    }
    CHECK_THROWS_AS(check_complete_table(5), Error);
}

TEST_CASE("coloring_violations reports each bad entry")
{
    auto t = check_complete_table(7);
    auto broken = t.printed;
    broken.colorings[1][0] = broken.colorings[0][0];
    auto lines = coloring_violations(families::complete(7), broken);
    CHECK_FALSE(lines.empty());
    CHECK(coloring_violations(families::complete(7), t.printed).empty());
}

TEST_CASE("color_complete")
{
    for (int n : {2, 3, 5})
        CHECK_FALSE(color_complete(n, 2));
    auto k7 = color_complete(7, 3);
    REQUIRE(k7);
    CHECK(k7->num_colors == 7);
    CHECK(k7->colorings == check_complete_table(7).printed.colorings);

    auto k13 = color_complete(13, 3);
    REQUIRE(k13);
    CHECK(verify_simultaneous(families::complete(13), *k13));

    for (int n = 4; n <= 15; ++n) {
        if (n == 5)
            continue;
        for (int mu : {2, 3}) {
            auto sc = color_complete(n, mu);
            REQUIRE(sc);
            CHECK(verify_simultaneous(families::complete(n), *sc));
            if (n % 2 == 0)
                CHECK(sc->num_colors == n - 1);
        }
    }
    auto k8 = color_complete(8, 7);
    REQUIRE(k8);
    CHECK(k8->mu == 7);
}

TEST_CASE("subdivide_coloring")
{
    const Graph c4 = families::cycle(4);
    auto [c6, sc6] = subdivide_coloring(c4, two_se_c4(), Edge(0, 1), 1);
    CHECK(c6.vertex_count() == 6);
    CHECK(sc6.num_colors == 2);
    CHECK(verify_simultaneous(c6, sc6));

    const Graph k33 = families::complete_bipartite(3, 3);
    auto k33c = color_complete_bipartite(3, 3, 2);
    auto [g, sc] = subdivide_coloring(k33, k33c, Edge(0, 3), 1);
    CHECK(sc.num_colors == 3);
    CHECK(verify_simultaneous(g, sc));

    const Graph w3 = families::wheel(3);
    auto [h, sh] = subdivide_coloring(w3, color_wheel(3), Edge(0, 1), 2);
    CHECK(verify_simultaneous(h, sh));

    std::mt19937 rng(3);
    for (const auto & op : corpus::operands(2)) {
        std::uniform_int_distribution<int> pick(0, op.graph.edge_count() - 1);
        const Edge e = op.graph.edge(pick(rng));
        for (int k = 1; k <= 3; ++k) {
            auto [sg, ssc] = subdivide_coloring(op.graph, op.coloring, e, k);
            CHECK(ssc.num_colors == op.coloring.num_colors);
            for (int v = 0; v < op.graph.vertex_count(); ++v)
                for (int t = 0; t < 2; ++t)
                    CHECK(palette(sg, ssc, t, v) == palette(op.graph, op.coloring, t, v));
        }
    }
    CHECK_THROWS_AS(subdivide_coloring(c4, two_se_c4(), Edge(0, 2), 1), Error);
}

TEST_CASE("color_from_hamiltonian")
{
    const Graph c6 = families::cycle(6);
    auto a = color_from_hamiltonian(c6, {0, 1, 2, 3, 4, 5});
    CHECK(a.num_colors == 2);
    CHECK(verify_simultaneous(c6, a));

    const Graph k33 = families::complete_bipartite(3, 3);
    CHECK_THROWS_AS(color_from_hamiltonian(k33, {0, 3, 1, 4, 2, 5}), Error);

    const Graph c8 = families::circulant(8, {1, 2});
    auto b = color_from_hamiltonian(c8, {0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(verify_simultaneous(c8, b));

    CHECK_THROWS_AS(color_from_hamiltonian(c6, {0, 1, 2, 3, 4}), Error);
    CHECK_THROWS_AS(color_from_hamiltonian(families::complete(5), {0, 1, 2, 3, 4}), Error);
}

TEST_CASE("every construction in the matrix verifies")
{
    int count = 0;
    for (const auto & c : corpus::construction_matrix()) {
        CHECK_MESSAGE(verify_simultaneous(c.graph, c.coloring), c.name);
        ++count;
    }
    CHECK(count > 1000);
}

TEST_CASE("join color count")
{
    for (const auto & a : corpus::operands(2))
        for (const auto & b : corpus::operands(2)) {
            auto sc = color_join(a.graph, a.coloring, b.graph, b.coloring);
            CHECK(sc.num_colors
                  == std::max(a.coloring.used_colors(), b.coloring.used_colors())
                         + std::max(a.graph.vertex_count(), b.graph.vertex_count()));
        }
}
