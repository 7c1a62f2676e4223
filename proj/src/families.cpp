#include "sec/families.hpp"

#include "sec/error.hpp"

#include <algorithm>
#include <bit>

namespace sec::families {

Graph empty(int n)
{
    return Graph(n);
}

Graph path(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph cycle(int n)
{
    if (n < 3)
        throw Error(ErrorKind::InvalidArgument, "a circuit needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    auto g = Graph(n, std::move(edges));
    if (n % 2 == 0) {
        std::vector<Side> sides(n);
        for (int i = 0; i < n; ++i)
            sides[i] = i % 2 == 0 ? Side::X : Side::Y;
        return g.with_sides(std::move(sides));
    }
    return g;
}

Graph complete(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph complete_bipartite(int n, int m)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            edges.emplace_back(i, n + j);
    std::vector<Side> sides(n + m, Side::X);
    for (int j = 0; j < m; ++j)
        sides[n + j] = Side::Y;
    return Graph(n + m, std::move(edges), std::move(sides));
}

Graph hypercube(int d)
{
    const int n = 1 << d;
    std::vector<Edge> edges;
    std::vector<Side> sides(n);
    for (int v = 0; v < n; ++v) {
        sides[v] = std::popcount(static_cast<unsigned>(v)) % 2 == 0 ? Side::X : Side::Y;
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b)))
                edges.emplace_back(v, v | (1 << b));
    }
    return Graph(n, std::move(edges), std::move(sides));
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, std::move(edges));
}

Graph heawood()
{
    std::vector<Edge> edges;
    for (int line = 0; line < 7; ++line)
        for (int offset : {0, 1, 3})
            edges.emplace_back((line + offset) % 7, 7 + line);
    std::vector<Side> sides(14, Side::X);
    for (int i = 7; i < 14; ++i)
        sides[i] = Side::Y;
    return Graph(14, std::move(edges), std::move(sides));
}

Graph wheel(int n)
{
    return join(cycle(n).without_sides(), complete(1));
}

Graph circulant(int n, const std::vector<int> & jumps)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j : jumps) {
            Edge e(i, (i + j) % n);
            if (e.u != e.v)
                edges.push_back(e);
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
}

Graph prism(const Graph & base)
{
    return cartesian_product(base, complete(2));
}

Graph volume_ten_bitrade_graph()
{
    // rows of the bitrade shape: r1 {c1,c2}, r2 {c1,c2,c3}, r3 {c2,c3,c4}, r4 {c1,c4}
    const int shape[4][4] = {{1, 1, 0, 0}, {1, 1, 1, 0}, {0, 1, 1, 1}, {1, 0, 0, 1}};
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (shape[i][j])
                edges.emplace_back(i, 4 + j);
    std::vector<Side> sides{Side::X, Side::X, Side::X, Side::X, Side::Y, Side::Y, Side::Y, Side::Y};
    return Graph(8, std::move(edges), std::move(sides));
}

Graph non_three_se_graph()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j || i == 3)
                edges.emplace_back(i, 4 + j);
    std::vector<Side> sides{Side::X, Side::X, Side::X, Side::X, Side::Y, Side::Y, Side::Y, Side::Y};
    return Graph(8, std::move(edges), std::move(sides));
}

} // namespace sec::families
