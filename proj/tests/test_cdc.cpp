#include "oracle.hpp"

#include "sec/canonical.hpp"
#include "sec/cdc.hpp"
#include "sec/constructions.hpp"
#include "sec/corpus.hpp"
#include "sec/families.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace sec;

namespace {

using EdgeSet = std::set<int>;

// Edge sets of the classes (union over member circuits), as a multiset.
std::multiset<EdgeSet> class_structure(const Graph & g, const CycleDoubleCover & cover)
{
    std::map<int, EdgeSet> by_class;
    for (std::size_t i = 0; i < cover.circuits.size(); ++i) {
        auto edges = circuit_edges(g, cover.circuits[i]);
        REQUIRE(edges);
        by_class[(*cover.classes)[i]].insert(edges->begin(), edges->end());
    }
    std::multiset<EdgeSet> out;
    for (auto & [k, s] : by_class)
        out.insert(s);
    return out;
}

std::multiset<int> lengths(const CycleDoubleCover & c)
{
    std::multiset<int> out;
    for (const auto & circuit : c.circuits)
        out.insert(static_cast<int>(circuit.size()));
    return out;
}

CycleDoubleCover doubled_c4()
{
    return {{{0, 1, 2, 3}, {0, 1, 2, 3}}, std::vector<int>{1, 2}, std::nullopt};
}

} // namespace

TEST_CASE("circuits")
{
    const Graph c4 = families::cycle(4);
    auto e = circuit_edges(c4, {0, 1, 2, 3});
    REQUIRE(e);
    CHECK(e->size() == 4);
    CHECK_FALSE(circuit_edges(c4, {0, 2, 1, 3}));
    CHECK_FALSE(circuit_edges(c4, {0, 1}));
    CHECK(is_cycle(c4, {0, 1, 2, 3}));
    CHECK_FALSE(is_cycle(c4, {0, 1}));
}

TEST_CASE("verify_cdc")
{
    CHECK(verify_cdc(families::cycle(4), doubled_c4()));

    const Graph k4 = families::complete(4);
    CycleDoubleCover three{{{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}}, std::nullopt, std::nullopt};
    CHECK(verify_cdc(k4, three));

    CycleDoubleCover once{{{0, 1, 2, 3}}, std::nullopt, std::nullopt};
    CHECK(verify_cdc(families::cycle(4), once).clause == "cover");

    CycleDoubleCover broken{{{0, 2, 1, 3}, {0, 1, 2, 3}}, std::nullopt, std::nullopt};
    CHECK(verify_cdc(families::cycle(4), broken).clause == "circuit");
}

TEST_CASE("the complete graph on five vertices has one even cover")
{
    const Graph k5 = families::complete(5);
    SearchBudget budget;
    auto covers = enumerate_even_cdcs(k5, 100000, budget);
    REQUIRE(covers.size() == 1);
    CHECK(lengths(covers[0]) == std::multiset<int>{4, 4, 4, 4, 4});
    CHECK(verify_cdc(k5, covers[0]));
    CHECK_FALSE(cdc_to_se(k5, with_singleton_classes(covers[0])));

    SearchBudget raw_budget;
    auto raw = enumerate_even_cdcs(k5, 100000, raw_budget, false);
    CHECK(raw.size() >= 1);
    for (const auto & c : raw)
        CHECK(lengths(c) == std::multiset<int>{4, 4, 4, 4, 4});
}

TEST_CASE("enumerate_even_cdcs")
{
    SearchBudget b1;
    auto c4 = enumerate_even_cdcs(families::cycle(4), 100, b1);
    REQUIRE(c4.size() == 1);
    CHECK(lengths(c4[0]) == std::multiset<int>{4, 4});

    SearchBudget b2;
    CHECK(enumerate_even_cdcs(families::cycle(5), 100, b2).empty());

    SearchBudget b3;
    CHECK_THROWS_AS(enumerate_even_cdcs(families::complete_bipartite(3, 4), 1, b3), Error);

    SearchBudget b4;
    for (const auto & c : enumerate_even_cdcs(families::complete_bipartite(3, 3), 100000, b4, false))
        CHECK(verify_cdc(families::complete_bipartite(3, 3), c));
}

TEST_CASE("the Petersen graph has no 2-SE-compatible cover")
{
    const Graph p = families::petersen();
    CHECK(even_circuits(p).size() == 25);
    SearchBudget budget;
    auto covers = enumerate_even_cdcs(p, 1000000, budget);
    for (const auto & c : covers) {
        CHECK(lengths(c) == std::multiset<int>{6, 8, 8, 8});
        CHECK_FALSE(cdc_to_se(p, with_singleton_classes(c)));
    }
    CHECK(covers.empty());
}

TEST_CASE("verify_ocdc")
{
    const Graph c4 = families::cycle(4);
    CHECK(verify_ocdc(c4, {{{0, 1, 2, 3}, {3, 2, 1, 0}}}));
    CHECK_FALSE(verify_ocdc(c4, {{{0, 1, 2, 3}}}));
    CHECK_FALSE(verify_ocdc(c4, {{{0, 1, 2, 3}, {0, 1, 2, 3}}}));

    SearchBudget budget;
    auto k4 = find_ocdc(families::complete(4), budget);
    REQUIRE(k4);
    CHECK(verify_ocdc(families::complete(4), *k4));

    SearchBudget b2;
    CHECK_FALSE(find_ocdc(families::path(4), b2));
}

TEST_CASE("se_to_cdc")
{
    const Graph c4 = families::cycle(4);
    auto cover = se_to_cdc(c4, *decide_mu_se(c4, 2, 2));
    CHECK(cover.circuits.size() == 2);
    CHECK(lengths(cover) == std::multiset<int>{4, 4});
    CHECK(verify_cdc(c4, cover));

    const Graph bitrade = families::volume_ten_bitrade_graph();
    auto fc = se_to_cdc(bitrade, *decide_mu_se(bitrade, 2, 4));
    CHECK(verify_cdc(bitrade, fc));
    CHECK(std::set<int>(fc.classes->begin(), fc.classes->end()).size() == 4);

    const Graph k33 = families::complete_bipartite(3, 3);
    auto kc = se_to_cdc(k33, color_complete_bipartite(3, 3, 2));
    CHECK(std::set<int>(kc.classes->begin(), kc.classes->end()).size() == 3);
    CHECK(se_cdc_properties(k33, kc).all());
}

TEST_CASE("cdc_to_se")
{
    const Graph c4 = families::cycle(4);
    auto sc = cdc_to_se(c4, doubled_c4());
    REQUIRE(sc);
    CHECK(sc->num_colors == 2);
    CHECK(verify_simultaneous(c4, *sc));

    const Graph heawood = families::heawood();
    auto h = se_to_cdc(heawood, *decide_mu_se(heawood, 2, 3));
    auto hs = cdc_to_se(heawood, h);
    REQUIRE(hs);
    CHECK(verify_simultaneous(heawood, *hs));

    CycleDoubleCover missing = doubled_c4();
    missing.classes.reset();
    CHECK_THROWS_AS(cdc_to_se(c4, missing), Error);

    const Graph c3 = families::cycle(3);
    CycleDoubleCover odd{{{0, 1, 2}, {0, 1, 2}}, std::vector<int>{1, 2}, std::nullopt};
    CHECK_THROWS_AS(cdc_to_se(c3, odd), Error);

    // both copies of C4 in one class leaves each vertex of degree 4 in it
    CycleDoubleCover merged = doubled_c4();
    merged.classes = std::vector<int>{1, 1};
    CHECK_THROWS_AS(cdc_to_se(c4, merged), Error);
}

TEST_CASE("every even cover of small bipartite graphs converts or is rejected consistently")
{
    for (const Graph & g : {families::complete_bipartite(3, 3), families::hypercube(3),
                            families::volume_ten_bitrade_graph()}) {
        SearchBudget budget;
        for (const auto & c : enumerate_even_cdcs(g, 100000, budget)) {
            auto sc = cdc_to_se(g, with_singleton_classes(c));
            if (sc)
                CHECK(verify_simultaneous(g, *sc));
            auto merged = with_merged_classes(g, c, chromatic_index(g));
            CHECK(verify_cdc(g, merged));
        }
    }
}

TEST_CASE("CDC round trip preserves class structure")
{
    for (const auto & c : corpus::round_trip_corpus()) {
        if (c.coloring.mu < 2)
            continue;
        const auto two = c.coloring.truncated(2);
        auto cover = se_to_cdc(c.graph, two);
        CHECK_MESSAGE(verify_cdc(c.graph, cover), c.name);
        CHECK_MESSAGE(se_cdc_properties(c.graph, cover).all(), c.name);
        auto back = cdc_to_se(c.graph, cover);
        REQUIRE_MESSAGE(back, c.name);
        CHECK(verify_simultaneous(c.graph, *back));
        CHECK_MESSAGE(class_structure(c.graph, se_to_cdc(c.graph, *back)) == class_structure(c.graph, cover),
                      c.name);
    }
}

TEST_CASE("OCDC conversions on bipartite graphs")
{
    const Graph c4 = families::complete_bipartite(2, 2);
    auto o = se_to_ocdc_bipartite(c4, color_complete_bipartite(2, 2, 2));
    CHECK(o.directed_circuits.size() == 2);
    CHECK(verify_ocdc(c4, o));
    auto sc = ocdc_to_se_bipartite(c4, o);
    CHECK(sc.num_colors == 2);

    for (const auto & c : corpus::round_trip_corpus()) {
        if (!c.graph.has_bipartition())
            continue;
        const auto two = c.coloring.truncated(2);
        auto oc = se_to_ocdc_bipartite(c.graph, two);
        CHECK_MESSAGE(verify_ocdc(c.graph, oc), c.name);
        auto back = ocdc_to_se_bipartite(c.graph, oc);
        CHECK_MESSAGE(verify_simultaneous(c.graph, back), c.name);
        CHECK(back.num_colors == static_cast<int>(oc.directed_circuits.size()));
    }
    CHECK_THROWS_AS(se_to_ocdc_bipartite(families::complete(4), color_one_factorable(families::complete(4), 2)),
                    Error);
}

TEST_CASE("even circuit decomposition")
{
    SearchBudget b;
    auto c6 = even_circuit_decomposition(families::cycle(6), b);
    REQUIRE(c6);
    CHECK(c6->size() == 1);
    CHECK(c6->front().size() == 6);

    CHECK_FALSE(even_circuit_decomposition(families::complete(5), b));

    auto k24 = even_circuit_decomposition(families::complete_bipartite(2, 4), b);
    REQUIRE(k24);
    CHECK(k24->size() == 2);
    for (const auto & c : *k24)
        CHECK(c.size() == 4);

    CHECK_THROWS_AS(even_circuit_decomposition(families::complete(4), b), Error);
}

TEST_CASE("even circuit decompositions give 2-SE colorings")
{
    int even = 0, decomposable = 0;
    for_each_connected_graph(9, [&](const Graph & g) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) % 2)
                return;
        ++even;
        SearchBudget b;
        auto d = even_circuit_decomposition(g, b);
        if (!d)
            return;
        ++decomposable;
        CycleDoubleCover twice;
        for (int copy = 0; copy < 2; ++copy)
            for (const auto & c : *d) {
                twice.circuits.push_back(c);
                if (!twice.classes)
                    twice.classes.emplace();
                twice.classes->push_back(static_cast<int>(twice.classes->size()) + 1);
            }
        CHECK(verify_cdc(g, twice));
        CHECK(decide_mu_se(g, 2, g.edge_count()).has_value());
    });
    CHECK(even > 0);
    CHECK(decomposable > 0);
}

TEST_CASE("an even graph with an odd number of edges can still be 2-SE colorable")
{
    // triangle 345 with the ears 3-0-4, 3-1-5, 4-2-5
    const Graph g(6, {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
    for (int v = 0; v < g.vertex_count(); ++v)
        CHECK(g.degree(v) % 2 == 0);
    SearchBudget b;
    CHECK_FALSE(even_circuit_decomposition(g, b));
    auto sc = decide_mu_se(g, 2, 4);
    REQUIRE(sc);
    CHECK(verify_simultaneous(g, *sc));
    CHECK(oracle::two_se(g, 4));
    CHECK_FALSE(oracle::two_se(g, 3));
}

TEST_CASE("verify_nzf")
{
    const Graph c4 = families::cycle(4);
    // edges 01, 03, 12, 23; circulate 0->1->2->3->0
    IntegerFlow f{{true, false, true, true}, {1, 1, 1, 1}};
    CHECK(verify_nzf(c4, f, 2));
    IntegerFlow zero = f;
    zero.weight[2] = 0;
    CHECK(verify_nzf(c4, zero, 2).clause == "support");
    IntegerFlow big{{true, false, true, true}, {2, 2, 2, 2}};
    CHECK(verify_nzf(c4, big, 2).clause == "bound");
    IntegerFlow leak{{true, true, true, true}, {1, 1, 1, 1}};
    CHECK(verify_nzf(c4, leak, 2).clause == "conservation");
}

TEST_CASE("find_nzf")
{
    SearchBudget b;
    auto c4 = find_nzf(families::cycle(4), 2, b);
    REQUIRE(c4);
    CHECK(verify_nzf(families::cycle(4), *c4, 2));

    auto k4 = find_nzf(families::complete(4), 4, b);
    REQUIRE(k4);
    CHECK(verify_nzf(families::complete(4), *k4, 4));

    SearchBudget pb;
    CHECK_FALSE(find_nzf(families::petersen(), 4, pb));
    SearchBudget p5;
    auto five = find_nzf(families::petersen(), 5, p5);
    REQUIRE(five);
    CHECK(verify_nzf(families::petersen(), *five, 5));

    SearchBudget bb;
    CHECK_FALSE(find_nzf(families::path(3), 5, bb));
    CHECK_FALSE(find_nzf(families::complete(4), 2, bb));
    CHECK(find_nzf(families::complete(4), 3, bb) == std::nullopt);
}

TEST_CASE("found flows verify and conserve across random cuts")
{
    std::mt19937 rng(5);
    int checked = 0;
    for_each_connected_graph(9, [&](const Graph & g) {
        if (!is_bridgeless(g) || checked > 400)
            return;
        for (int k : {3, 4, 5}) {
            SearchBudget b;
            auto f = find_nzf(g, k, b);
            if (!f)
                continue;
            ++checked;
            CHECK(verify_nzf(g, *f, k));
            std::bernoulli_distribution coin(0.5);
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<int> side;
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (coin(rng))
                        side.push_back(v);
                CHECK(boundary_flow(g, *f, side) == 0);
            }
        }
    });
    CHECK(checked > 50);
}

TEST_CASE("short circuit cover")
{
    CHECK(short_circuit_cover_check(families::complete(4), 3));
    CHECK_FALSE(short_circuit_cover_check(families::cycle(6), 4));
    CHECK(short_circuit_cover_check(families::complete_bipartite(3, 3), 4));
    CHECK_FALSE(short_circuit_cover_check(families::petersen(), 4));
}
