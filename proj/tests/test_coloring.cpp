#include "oracle.hpp"

#include "sec/canonical.hpp"
#include "sec/coloring.hpp"
#include "sec/constructions.hpp"
#include "sec/families.hpp"

#include <doctest.h>

#include <set>

using namespace sec;

namespace {

SimultaneousColoring k22_pair(bool swapped)
{
    // K_{2,2}: edges x1y1, x1y2, x2y1, x2y2 in sorted order
    std::vector<int> c1 = {1, 2, 2, 1};
    std::vector<int> c2 = swapped ? std::vector<int>{2, 1, 1, 2} : c1;
    return {2, 2, {c1, c2}};
}

} // namespace

TEST_CASE("verify_proper")
{
    const Graph c4 = families::cycle(4);
    // edges 01, 03, 12, 23
    CHECK(verify_proper(c4, {2, {1, 2, 2, 1}}));
    const Graph c3 = families::cycle(3);
    auto r = verify_proper(c3, {2, {1, 1, 2}});
    CHECK_FALSE(r);
    CHECK(r.clause == "proper");
    CHECK(verify_proper(families::complete(7), check_complete_table(7).printed.coordinate(0)));
}

TEST_CASE("verify_simultaneous")
{
    const Graph k22 = families::complete_bipartite(2, 2);
    CHECK(verify_simultaneous(k22, k22_pair(true)));
    auto r = verify_simultaneous(k22, k22_pair(false));
    CHECK_FALSE(r);
    CHECK(r.clause == "distinct");

    auto k7 = check_complete_table(7);
    CHECK(k7.report);
    CHECK(k7.printed.mu == 3);
    CHECK(k7.printed.num_colors == 7);

    SimultaneousColoring bad_palette{2, 3, {{1, 2, 2, 1}, {2, 3, 1, 2}}};
    CHECK(verify_simultaneous(k22, bad_palette).clause == "palette");
    SimultaneousColoring out_of_range{2, 2, {{1, 2, 2, 1}, {2, 1, 1, 3}}};
    CHECK(verify_simultaneous(k22, out_of_range).clause == "range");
    SimultaneousColoring short_shape{2, 2, {{1, 2, 2, 1}}};
    CHECK(verify_simultaneous(k22, short_shape).clause == "shape");
    SimultaneousColoring too_many{3, 3, {{1, 2, 2, 1}, {2, 1, 1, 2}, {1, 2, 2, 1}}};
    CHECK(verify_simultaneous(k22, too_many).clause == "mu-bound");
}

TEST_CASE("chromatic index")
{
    CHECK(chromatic_index(families::volume_ten_bitrade_graph()) == 3);
    CHECK(chromatic_index(families::complete(5)) == 5);
    CHECK(chromatic_index(families::petersen()) == 4);
    CHECK(chromatic_index(families::complete(6)) == 5);
    CHECK(chromatic_index(families::cycle(7)) == 3);
}

TEST_CASE("chromatic index matches brute force on small connected graphs")
{
    for_each_connected_graph(6, [](const Graph & g) { CHECK(chromatic_index(g) == oracle::chromatic_index(g)); });
}

TEST_CASE("decide_mu_se")
{
    const Graph bitrade = families::volume_ten_bitrade_graph();
    CHECK_FALSE(decide_mu_se(bitrade, 2, 3));
    auto four = decide_mu_se(bitrade, 2, 4);
    REQUIRE(four);
    CHECK(verify_simultaneous(bitrade, *four));
    CHECK(four->num_colors == 4);

    auto c4 = decide_mu_se(families::cycle(4), 2, 2);
    REQUIRE(c4);
    CHECK(verify_simultaneous(families::cycle(4), *c4));

    for (int l = 4; l <= 10; ++l)
        CHECK_FALSE(decide_mu_se(families::complete(5), 2, l));

    CHECK_FALSE(decide_mu_se(families::path(3), 2, 5));
    SearchBudget tiny(5);
    CHECK_THROWS_AS(decide_mu_se(families::complete(5), 2, 6, tiny), Error);
}

TEST_CASE("se_chromatic_number")
{
    SearchBudget b1, b2, b3;
    CHECK(se_chromatic_number(families::volume_ten_bitrade_graph(), 2, 6, b1) == 4);
    SimultaneousColoring w;
    CHECK(se_chromatic_number(families::complete_bipartite(3, 3), 3, 5, b2, &w) == 3);
    CHECK(verify_simultaneous(families::complete_bipartite(3, 3), w));
    CHECK(se_chromatic_number(families::wheel(5), 2, 5, b3) == 5);
}

TEST_CASE("decide_mu_se agrees with the brute-force oracle")
{
    for_each_connected_graph(6, [](const Graph & g) {
        for (int l = 1; l <= g.edge_count(); ++l) {
            auto found = decide_mu_se(g, 2, l);
            CHECK(found.has_value() == oracle::two_se(g, l));
            if (found)
                CHECK(verify_simultaneous(g, *found));
        }
    });
}

TEST_CASE("counterexample filter")
{
    auto c4 = counterexample_filter(families::cycle(4));
    CHECK_FALSE(c4.passes);
    CHECK(std::count(c4.failed.begin(), c4.failed.end(), "min degree 2 and max degree 3") == 1);

    auto k33 = counterexample_filter(families::complete_bipartite(3, 3));
    CHECK_FALSE(k33.passes);
    CHECK(std::count(k33.failed.begin(), k33.failed.end(), "min degree 2 and max degree 3") == 1);

    // the new vertices form a 2-vertex side of a 2-edge cut, and G-a leaves b pendant
    const Graph sub = subdivide_edge(families::complete_bipartite(3, 3), Edge(0, 3), 2);
    auto r = counterexample_filter(sub);
    CHECK(std::count(r.failed.begin(), r.failed.end(), "bipartite") == 0);
    CHECK(std::count(r.failed.begin(), r.failed.end(), "bridgeless") == 0);
    CHECK(std::count(r.failed.begin(), r.failed.end(), "2-connected") == 0);
    CHECK(std::count(r.failed.begin(), r.failed.end(), "min degree 2 and max degree 3") == 0);
    CHECK(std::count(r.failed.begin(), r.failed.end(), "N(u) and N(w) meet only in v") == 0);
    CHECK(r.failed == std::vector<std::string>{"no nontrivial 2-edge cut", "G-v bridgeless at degree-2 vertices"});
    CHECK_FALSE(r.passes);

    const auto petersen = counterexample_filter(families::petersen());
    CHECK(std::count(petersen.failed.begin(), petersen.failed.end(), "bipartite") == 1);
}

TEST_CASE("girth bound")
{
    const Graph c6 = families::cycle(6);
    auto c6c = decide_mu_se(c6, 2, 2);
    REQUIRE(c6c);
    CHECK(check_girth_bound(c6, *c6c, 3));

    const Graph k33 = families::complete_bipartite(3, 3);
    CHECK(check_girth_bound(k33, color_complete_bipartite(3, 3, 2), 2));

    const Graph heawood = families::heawood();
    auto h = decide_mu_se(heawood, 2, 3);
    REQUIRE(h);
    CHECK(check_girth_bound(heawood, *h, 3));

    CHECK_THROWS_AS(check_girth_bound(c6, *c6c, 1), Error);
    CHECK_THROWS_AS(check_girth_bound(k33, color_complete_bipartite(3, 3, 3), 2), Error);
}

TEST_CASE("from_tuples and truncation")
{
    auto sc = from_tuples(2, 2, {{1, 2}, {2, 1}, {2, 1}, {1, 2}});
    CHECK(sc.colorings[0] == std::vector<int>{1, 2, 2, 1});
    CHECK(sc.colorings[1] == std::vector<int>{2, 1, 1, 2});
    CHECK(sc.used_colors() == 2);
    auto k = color_complete_bipartite(4, 4, 4);
    CHECK(k.truncated(2).mu == 2);
    CHECK(verify_simultaneous(families::complete_bipartite(4, 4), k.truncated(2)));
}

TEST_CASE("palettes agree across coordinates of every found coloring")
{
    for_each_connected_graph(6, [](const Graph & g) {
        SearchBudget b;
        SimultaneousColoring w;
        if (!se_chromatic_number(g, 2, g.edge_count(), b, &w))
            return;
        CHECK(g.min_degree() >= 2);
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(palette(g, w, 0, v) == palette(g, w, 1, v));
    });
}
