#include "sec/corpus.hpp"

#include "sec/constructions.hpp"
#include "sec/families.hpp"

#include <numeric>

namespace sec::corpus {

namespace {

    std::vector<int> hamiltonian_order(int n)
    {
        std::vector<int> c(n);
        std::iota(c.begin(), c.end(), 0);
        return c;
    }

    Colored bipartite_entry(int n, int m, int mu)
    {
        return {"K" + std::to_string(n) + "," + std::to_string(m), families::complete_bipartite(n, m),
                color_complete_bipartite(n, m, mu)};
    }

    Colored complete_entry(int n, int mu)
    {
        return {"K" + std::to_string(n), families::complete(n), *color_complete(n, mu)};
    }

} // namespace

std::vector<Colored> operands(int mu)
{
    std::vector<Colored> out;
    if (mu == 2) {
        for (int n : {6, 8})
            out.push_back({"C" + std::to_string(n), families::cycle(n),
                           color_from_hamiltonian(families::cycle(n), hamiltonian_order(n))});
        for (int n : {4, 6, 7, 9})
            out.push_back(complete_entry(n, 2));
        for (auto [n, m] : {std::pair(2, 2), {2, 3}, {3, 3}, {4, 4}})
            out.push_back(bipartite_entry(n, m, 2));
        out.push_back({"Q3", families::hypercube(3), color_one_factorable(families::hypercube(3), 2)});
        for (int n : {4, 5})
            out.push_back({"W" + std::to_string(n), families::wheel(n), color_wheel(n)});
        const Graph b = families::volume_ten_bitrade_graph();
        out.push_back({"bitrade10", b, *decide_mu_se(b, 2, 4)});
        const Graph c8 = families::circulant(8, {1, 2});
        out.push_back({"C8(1,2)", c8, color_from_hamiltonian(c8, hamiltonian_order(8))});
    }
    else if (mu == 3) {
        for (int n : {4, 6, 7, 8, 9})
            out.push_back(complete_entry(n, 3));
        for (auto [n, m] : {std::pair(3, 3), {3, 4}, {4, 4}})
            out.push_back(bipartite_entry(n, m, 3));
        out.push_back({"Q3", families::hypercube(3), color_one_factorable(families::hypercube(3), 3)});
    }
    else
        throw Error(ErrorKind::InvalidArgument, "operand catalog covers mu 2 and 3");
    return out;
}

std::vector<std::pair<std::string, Graph>> regular_graphs()
{
    return {
        {"C3", families::cycle(3)},
        {"C4", families::cycle(4)},
        {"C5", families::cycle(5)},
        {"C6", families::cycle(6)},
        {"K4", families::complete(4)},
        {"K5", families::complete(5)},
        {"K6", families::complete(6)},
        {"K3,3", families::complete_bipartite(3, 3)},
        {"Q3", families::hypercube(3)},
        {"Petersen", families::petersen()},
    };
}

std::vector<std::pair<std::string, Graph>> one_factorable_graphs()
{
    return {
        {"K2", families::complete(2)},
        {"C4", families::cycle(4)},
        {"C6", families::cycle(6)},
        {"K4", families::complete(4)},
        {"K3,3", families::complete_bipartite(3, 3)},
        {"Q3", families::hypercube(3)},
    };
}

std::vector<Colored> construction_matrix()
{
    std::vector<Colored> out;
    for (int n = 3; n <= 12; ++n)
        out.push_back({"W" + std::to_string(n), families::wheel(n), color_wheel(n)});
    for (int n = 2; n <= 8; ++n)
        for (int m = n; m <= 8; ++m)
            for (int mu = 1; mu <= n; ++mu) {
                auto e = bipartite_entry(n, m, mu);
                e.name += " mu=" + std::to_string(mu);
                out.push_back(std::move(e));
            }
    for (int n : {4, 6, 7, 8, 9, 10, 11, 12, 13})
        for (int mu : {2, 3}) {
            auto e = complete_entry(n, mu);
            e.name += " mu=" + std::to_string(mu);
            out.push_back(std::move(e));
        }
    for (int mu : {2, 3}) {
        const auto ops = operands(mu);
        for (const auto & a : ops)
            for (const auto & b : ops) {
                if (mu <= std::min(a.graph.vertex_count(), b.graph.vertex_count()))
                    out.push_back({a.name + " v " + b.name, join(a.graph, b.graph),
                                   color_join(a.graph, a.coloring, b.graph, b.coloring)});
                out.push_back({a.name + " + " + b.name, cartesian_product(a.graph, b.graph),
                               color_cartesian_sum(a.graph, a.coloring, b.graph, b.coloring)});
            }
        const std::vector<std::pair<std::string, Graph>> outer = {
            {"K1", families::empty(1)},  {"K2", families::complete(2)}, {"P3", families::path(3)},
            {"C3", families::cycle(3)},  {"C4", families::cycle(4)},    {"K4", families::complete(4)},
        };
        for (const auto & [gname, g] : outer)
            for (const auto & h : ops)
                out.push_back({gname + "[" + h.name + "]", lexicographic_product(g, h.graph),
                               color_lexicographic(g, h.graph, h.coloring)});
        for (const auto & [gname, g] : regular_graphs())
            for (const auto & [hname, h] : one_factorable_graphs())
                if (mu <= g.max_degree() + h.max_degree())
                    out.push_back({gname + " x " + hname + " mu=" + std::to_string(mu), cartesian_product(g, h),
                                   color_cartesian_regular(g, h, mu)});
    }
    for (const auto & a : operands(2))
        for (int k = 1; k <= 3; ++k)
            for (const auto & e : a.graph.edges()) {
                auto [g, sc] = subdivide_coloring(a.graph, a.coloring, e, k);
                out.push_back({a.name + " /" + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1) + " k="
                                   + std::to_string(k),
                               std::move(g), std::move(sc)});
            }
    return out;
}

std::vector<Colored> round_trip_corpus()
{
    std::vector<Colored> out = operands(2);
    for (auto & e : operands(3))
        out.push_back(std::move(e));
    for (int n = 3; n <= 12; ++n)
        out.push_back({"W" + std::to_string(n), families::wheel(n), color_wheel(n)});
    for (int n = 2; n <= 6; ++n)
        for (int m = n; m <= 6; ++m)
            for (int mu = 2; mu <= std::min(n, 3); ++mu)
                out.push_back(bipartite_entry(n, m, mu));
    for (int n : {10, 11, 12, 13})
        out.push_back(complete_entry(n, 2));
    for (const auto & a : operands(2)) {
        const Edge e = a.graph.edge(0);
        auto [g, sc] = subdivide_coloring(a.graph, a.coloring, e, 1);
        out.push_back({a.name + " subdivided", std::move(g), std::move(sc)});
    }
    return out;
}

} // namespace sec::corpus
