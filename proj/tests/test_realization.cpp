#include "sec/families.hpp"
#include "sec/realization.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace sec;

namespace {

bool same_degrees(const Graph & g, const BipartiteDegreeSequence & s)
{
    auto d = degree_sequence(g);
    auto sort = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    return sort(d.x) == sort(s.x) && sort(d.y) == sort(s.y);
}

// Degree sequence of a random bipartite graph with min degree >= mu, built by
// adding random edges until every vertex reaches mu.
BipartiteDegreeSequence random_sequence(std::mt19937 & rng, int mu)
{
    std::uniform_int_distribution<int> side(mu, 6);
    const int nx = side(rng), ny = side(rng);
    std::vector<std::vector<bool>> a(nx, std::vector<bool>(ny, false));
    std::vector<int> dx(nx, 0), dy(ny, 0);
    std::bernoulli_distribution extra(0.3);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            if (extra(rng)) {
                a[i][j] = true;
                ++dx[i];
                ++dy[j];
            }
    std::uniform_int_distribution<int> px(0, nx - 1), py(0, ny - 1);
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < nx; ++i)
            while (dx[i] < mu) {
                int j = py(rng);
                if (!a[i][j]) {
                    a[i][j] = true;
                    ++dx[i];
                    ++dy[j];
                    changed = true;
                }
            }
        for (int j = 0; j < ny; ++j)
            while (dy[j] < mu) {
                int i = px(rng);
                if (!a[i][j]) {
                    a[i][j] = true;
                    ++dx[i];
                    ++dy[j];
                    changed = true;
                }
            }
    }
    return {dx, dy};
}

} // namespace

TEST_CASE("Gale-Ryser")
{
    CHECK(is_bipartite_graphic({{2, 2}, {2, 2}}));
    CHECK(is_bipartite_graphic({{3, 3, 3, 4}, {3, 3, 3, 4}}));
    CHECK_FALSE(is_bipartite_graphic({{3}, {1, 1}}));
    CHECK_FALSE(is_bipartite_graphic({{3, 1}, {2, 2}}));
    CHECK_FALSE(is_bipartite_graphic({{2, 2}, {4}}));
}

TEST_CASE("realize_bipartite")
{
    auto c4 = realize_bipartite({{2, 2}, {2, 2}});
    REQUIRE(c4);
    CHECK(*c4 == families::complete_bipartite(2, 2));

    BipartiteDegreeSequence s{{3, 3, 3, 4}, {3, 3, 3, 4}};
    auto g = realize_bipartite(s);
    REQUIRE(g);
    CHECK(same_degrees(*g, s));
    CHECK(g->has_bipartition());

    CHECK_FALSE(realize_bipartite({{3}, {1, 1}}));
}

TEST_CASE("realize_connected")
{
    auto c4 = realize_connected({{2, 2}, {2, 2}}, 2);
    CHECK(edge_connectivity(c4).value == 2);

    BipartiteDegreeSequence s{{3, 3, 3, 4}, {3, 3, 3, 4}};
    auto g = realize_connected(s, 3);
    CHECK(edge_connectivity(g).value >= 3);
    CHECK(same_degrees(g, s));

    auto c8 = realize_connected({{2, 2, 2, 2}, {2, 2, 2, 2}}, 2);
    CHECK(is_connected(c8));
    CHECK(c8.edge_count() == 8);
    CHECK(edge_connectivity(c8).value == 2);

    CHECK_THROWS_AS(realize_connected({{3}, {1, 1}}, 2), Error);
    CHECK_THROWS_AS(realize_connected({{2, 2}, {2, 2}}, 3), Error);
    CHECK_THROWS_AS(realize_connected({{}, {}}, 2), Error);
}

TEST_CASE("random sequences reach the requested connectivity")
{
    std::mt19937 rng(99);
    for (int round = 0; round < 200; ++round) {
        const int mu = 2 + round % 2;
        auto s = random_sequence(rng, mu);
        REQUIRE(is_bipartite_graphic(s));
        auto g = realize_connected(s, mu);
        CHECK(same_degrees(g, s));
        CHECK(g.has_bipartition());
        CHECK(edge_connectivity(g).value >= mu);
    }
}
