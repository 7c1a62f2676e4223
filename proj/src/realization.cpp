#include "sec/realization.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace sec {

bool is_bipartite_graphic(const BipartiteDegreeSequence & s)
{
    const auto & x = s.x;
    const auto & y = s.y;
    if (std::any_of(x.begin(), x.end(), [](int d) { return d < 0; })
        || std::any_of(y.begin(), y.end(), [](int d) { return d < 0; }))
        return false;
    if (std::accumulate(x.begin(), x.end(), 0LL) != std::accumulate(y.begin(), y.end(), 0LL))
        return false;
    std::vector<int> a = x;
    std::sort(a.begin(), a.end(), std::greater<>());
    long long left = 0;
    for (std::size_t k = 1; k <= a.size(); ++k) {
        left += a[k - 1];
        long long right = 0;
        for (int d : y)
            right += std::min<long long>(d, static_cast<long long>(k));
        if (left > right)
            return false;
    }
    return true;
}

BipartiteDegreeSequence degree_sequence(const Graph & g)
{
    auto sides = g.has_bipartition() ? *g.sides() : ensure_bipartition(g).sides().value();
    BipartiteDegreeSequence s;
    for (int v = 0; v < g.vertex_count(); ++v)
        (sides[v] == Side::X ? s.x : s.y).push_back(g.degree(v));
    return s;
}

namespace {

    std::vector<Side> sides_for(const BipartiteDegreeSequence & s)
    {
        std::vector<Side> sides(s.x.size() + s.y.size(), Side::Y);
        std::fill(sides.begin(), sides.begin() + static_cast<long>(s.x.size()), Side::X);
        return sides;
    }

} // namespace

std::optional<Graph> realize_bipartite(const BipartiteDegreeSequence & s)
{
    if (!is_bipartite_graphic(s))
        return std::nullopt;
    const int n = static_cast<int>(s.x.size());
    const int m = static_cast<int>(s.y.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return s.x[a] > s.x[b]; });
    std::vector<int> residual = s.y;
    std::vector<Edge> edges;
    for (int i : order) {
        std::vector<int> cols(m);
        std::iota(cols.begin(), cols.end(), 0);
        std::stable_sort(cols.begin(), cols.end(), [&](int a, int b) { return residual[a] > residual[b]; });
        for (int k = 0; k < s.x[i]; ++k) {
            const int j = cols[k];
            if (residual[j] == 0)
                return std::nullopt;
            --residual[j];
            edges.emplace_back(i, n + j);
        }
    }
    return Graph(n + m, std::move(edges), sides_for(s));
}

namespace {

    // (κ', -#minimum cuts); disconnected graphs score below every
    // connected one, fewer components being better.
    struct Potential {
        int connectivity = 0;
        long long neg_cuts = 0;

        auto operator<=>(const Potential &) const = default;
    };

    Potential potential(const Graph & g)
    {
        const int comps = component_count(g);
        if (comps > 1)
            return {-comps, 0};
        const int k = edge_connectivity(g).value;
        return {k, -static_cast<long long>(minimum_cuts(g, k).size())};
    }

    Graph replaced(const Graph & g, const std::vector<int> & drop, const std::vector<Edge> & add)
    {
        std::vector<bool> gone(g.edge_count(), false);
        for (int e : drop)
            gone[e] = true;
        std::vector<Edge> edges;
        for (int e = 0; e < g.edge_count(); ++e)
            if (!gone[e])
                edges.push_back(g.edge(e));
        edges.insert(edges.end(), add.begin(), add.end());
        return Graph(g.vertex_count(), std::move(edges), g.sides());
    }

    class Improver {
    public:
        Improver(int mu, SearchBudget & budget) : mu_(mu), budget_(budget) {}

        Graph run(Graph g)
        {
            Potential current = potential(g);
            while (current.connectivity < mu_) {
                auto next = step(g, current);
                if (!next)
                    throw Error(ErrorKind::SearchBudgetExceeded, "no improving switch found at edge connectivity "
                                                                     + std::to_string(current.connectivity));
                g = std::move(next->first);
                current = next->second;
            }
            return g;
        }

    private:
        using Move = std::optional<std::pair<Graph, Potential>>;

        Move consider(const Graph & candidate, const Potential & current)
        {
            budget_.tick();
            Potential p = potential(candidate);
            if (p > current)
                return std::make_pair(candidate, p);
            return std::nullopt;
        }

        // Edge {a, b} oriented as (X end, Y end).
        std::pair<int, int> oriented(const Graph & g, int e) const
        {
            const Edge & ed = g.edge(e);
            return g.side(ed.u) == Side::X ? std::pair(ed.u, ed.v) : std::pair(ed.v, ed.u);
        }

        Move try_switch(const Graph & g, int e1, int e2, const Potential & current)
        {
            auto [x1, y1] = oriented(g, e1);
            auto [x2, y2] = oriented(g, e2);
            if (x1 == x2 || y1 == y2 || g.adjacent(x1, y2) || g.adjacent(x2, y1))
                return std::nullopt;
            return consider(replaced(g, {e1, e2}, {Edge(x1, y2), Edge(x2, y1)}), current);
        }

        Move step(const Graph & g, const Potential & current)
        {
            // the two sides of the first minimum cut, or a component and the rest
            std::vector<int> cut;
            std::vector<int> part(g.vertex_count(), 0);
            if (current.connectivity < 0) {
                std::vector<int> comp;
                connected_components(g, &comp);
                for (int v = 0; v < g.vertex_count(); ++v)
                    part[v] = comp[v] == comp[0] ? 0 : 1;
            }
            else {
                cut = minimum_cuts(g, current.connectivity).front();
                std::vector<int> comp;
                connected_components(remove_edges(g, cut), &comp);
                for (int v = 0; v < g.vertex_count(); ++v)
                    part[v] = comp[v] == comp[0] ? 0 : 1;
            }
            std::vector<bool> in_cut(g.edge_count(), false);
            for (int e : cut)
                in_cut[e] = true;
            Graph rest = remove_edges(g, cut);
            std::vector<bool> bridge(g.edge_count(), false);
            for (int b : bridges(rest))
                bridge[*g.edge_index(rest.edge(b).u, rest.edge(b).v)] = true;

            // circuit edges of each side first, then the bridges
            std::array<std::vector<int>, 2> inside;
            for (int pass = 0; pass < 2; ++pass)
                for (int e = 0; e < g.edge_count(); ++e)
                    if (!in_cut[e] && bridge[e] == (pass == 1))
                        inside[part[g.edge(e).u]].push_back(e);
            for (int e1 : inside[0])
                for (int e2 : inside[1])
                    if (auto m = try_switch(g, e1, e2, current))
                        return m;

            if (mu_ >= 2)
                for (int side = 0; side < 2; ++side)
                    if (auto m = replace_side(g, part, side, current))
                        return m;

            for (int e1 = 0; e1 < g.edge_count(); ++e1)
                for (int e2 = e1 + 1; e2 < g.edge_count(); ++e2)
                    if (auto m = try_switch(g, e1, e2, current))
                        return m;
            return std::nullopt;
        }

        // Swap the edges inside one side for a 2-edge-connected realization
        // of their degree sequence.
        Move replace_side(const Graph & g, const std::vector<int> & part, int side, const Potential & current)
        {
            std::vector<int> members;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (part[v] == side)
                    members.push_back(v);
            if (static_cast<int>(members.size()) == g.vertex_count() || members.size() < 4)
                return std::nullopt;
            std::vector<int> local(g.vertex_count(), -1);
            BipartiteDegreeSequence sub;
            std::vector<int> xs, ys;
            for (int v : members)
                (g.side(v) == Side::X ? xs : ys).push_back(v);
            std::vector<int> back;
            for (int v : xs) {
                local[v] = static_cast<int>(back.size());
                back.push_back(v);
            }
            for (int v : ys) {
                local[v] = static_cast<int>(back.size());
                back.push_back(v);
            }
            sub.x.assign(xs.size(), 0);
            sub.y.assign(ys.size(), 0);
            std::vector<int> drop;
            for (int e = 0; e < g.edge_count(); ++e) {
                const Edge & ed = g.edge(e);
                if (part[ed.u] != side || part[ed.v] != side)
                    continue;
                drop.push_back(e);
                for (int v : {ed.u, ed.v}) {
                    const int l = local[v];
                    if (l < static_cast<int>(xs.size()))
                        ++sub.x[l];
                    else
                        ++sub.y[l - static_cast<int>(xs.size())];
                }
            }
            auto positive = [](const std::vector<int> & d) {
                return std::all_of(d.begin(), d.end(), [](int k) { return k >= 2; });
            };
            if (!positive(sub.x) || !positive(sub.y))
                return std::nullopt;
            Graph piece;
            try {
                piece = Improver(2, budget_).run(*realize_bipartite(sub));
            }
            catch (const Error & e) {
                if (e.kind() != ErrorKind::SearchBudgetExceeded || budget_.used() >= budget_.limit())
                    throw;
                return std::nullopt;
            }
            std::vector<Edge> add;
            for (const auto & ed : piece.edges())
                add.emplace_back(back[ed.u], back[ed.v]);
            return consider(replaced(g, drop, add), current);
        }

        int mu_;
        SearchBudget & budget_;
    };

} // namespace

Graph realize_connected(const BipartiteDegreeSequence & s, int mu, SearchBudget & budget)
{
    if (mu < 1)
        throw Error(ErrorKind::InvalidArgument, "mu must be positive");
    for (int d : s.x)
        if (d < mu)
            throw Error(ErrorKind::ElementBelowMu, "element " + std::to_string(d) + " below mu");
    for (int d : s.y)
        if (d < mu)
            throw Error(ErrorKind::ElementBelowMu, "element " + std::to_string(d) + " below mu");
    if (s.x.empty() || s.y.empty())
        throw Error(ErrorKind::InvalidArgument, "both sides must be nonempty");
    auto start = realize_bipartite(s);
    if (!start)
        throw Error(ErrorKind::NotGraphic, "sequence is not bipartite graphic");
    return Improver(mu, budget).run(std::move(*start));
}

Graph realize_connected(const BipartiteDegreeSequence & s, int mu)
{
    SearchBudget budget;
    return realize_connected(s, mu, budget);
}

} // namespace sec
