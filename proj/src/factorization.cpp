#include "sec/factorization.hpp"

#include "sec/families.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace sec {

namespace {

    class ProperColoringSearch {
    public:
        ProperColoringSearch(const Graph & g, int colors, SearchBudget & budget)
            : g_(g), k_(colors), budget_(budget), used_(g.vertex_count(), 0), colour_(g.edge_count(), 0)
        {
        }

        std::optional<std::vector<int>> run()
        {
            if (g_.edge_count() == 0)
                return colour_;
            if (k_ < g_.max_degree() || k_ > 63)
                return std::nullopt;
            if (expand(0))
                return colour_;
            return std::nullopt;
        }

    private:
        int options(int e, std::uint64_t & forbidden) const
        {
            forbidden = used_[g_.edge(e).u] | used_[g_.edge(e).v];
            std::uint64_t seen = (max_used_ >= 63) ? ~0ULL : ((1ULL << max_used_) - 1) << 1;
            int count = std::popcount(seen & ~forbidden);
            if (max_used_ < k_)
                ++count;
            return count;
        }

        bool expand(int coloured)
        {
            budget_.tick();
            const int m = g_.edge_count();
            if (coloured == m)
                return true;

            int pick = -1, pick_options = 0, pick_saturation = -1;
            std::uint64_t pick_forbidden = 0;
            for (int e = 0; e < m; ++e) {
                if (colour_[e])
                    continue;
                std::uint64_t forbidden;
                int opts = options(e, forbidden);
                if (opts == 0)
                    return false;
                int sat = std::popcount(forbidden);
                if (pick == -1 || opts < pick_options || (opts == pick_options && sat > pick_saturation)) {
                    pick = e;
                    pick_options = opts;
                    pick_saturation = sat;
                    pick_forbidden = forbidden;
                }
            }

            const Edge & ed = g_.edge(pick);
            const int top = std::min(max_used_ + 1, k_);
            for (int c = 1; c <= top; ++c) {
                std::uint64_t bit = 1ULL << c;
                if (pick_forbidden & bit)
                    continue;
                int saved_max = max_used_;
                max_used_ = std::max(max_used_, c);
                colour_[pick] = c;
                used_[ed.u] |= bit;
                used_[ed.v] |= bit;
                if (expand(coloured + 1))
                    return true;
                used_[ed.u] &= ~bit;
                used_[ed.v] &= ~bit;
                colour_[pick] = 0;
                max_used_ = saved_max;
            }
            return false;
        }

        const Graph & g_;
        int k_;
        SearchBudget & budget_;
        std::vector<std::uint64_t> used_;
        std::vector<int> colour_;
        int max_used_ = 0;
    };

    int regular_degree(const Graph & g)
    {
        if (g.vertex_count() == 0)
            return 0;
        int r = g.degree(0);
        for (int v = 1; v < g.vertex_count(); ++v)
            if (g.degree(v) != r)
                throw Error(ErrorKind::NotRegular, "vertex degrees differ");
        return r;
    }

    bool is_complete(const Graph & g)
    {
        const long long n = g.vertex_count();
        return g.edge_count() == n * (n - 1) / 2;
    }

    bool is_hypercube_labelled(const Graph & g, int & dim)
    {
        const int n = g.vertex_count();
        if (n < 2 || !std::has_single_bit(static_cast<unsigned>(n)))
            return false;
        dim = std::countr_zero(static_cast<unsigned>(n));
        if (g.edge_count() != dim * n / 2)
            return false;
        return std::all_of(g.edges().begin(), g.edges().end(), [](const Edge & e) {
            return std::popcount(static_cast<unsigned>(e.u ^ e.v)) == 1;
        });
    }

    // Recognises the numbering of families::prism and returns the base graph.
    std::optional<Graph> prism_base(const Graph & g)
    {
        const int n = g.vertex_count();
        if (n < 2 || n % 2 != 0)
            return std::nullopt;
        std::vector<Edge> base_edges;
        for (const auto & e : g.edges()) {
            if (e.v == e.u + 1 && e.u % 2 == 0)
                continue;
            if (e.u % 2 != e.v % 2)
                return std::nullopt;
            if (e.u % 2 == 0) {
                if (!g.adjacent(e.u + 1, e.v + 1))
                    return std::nullopt;
                base_edges.emplace_back(e.u / 2, e.v / 2);
            }
        }
        for (int u = 0; u < n; u += 2)
            if (!g.adjacent(u, u + 1))
                return std::nullopt;
        Graph base(n / 2, base_edges);
        if (2 * base.edge_count() + n / 2 != g.edge_count())
            return std::nullopt;
        return base;
    }

} // namespace

std::optional<std::vector<int>> find_proper_edge_coloring(const Graph & g, int colors, SearchBudget & budget)
{
    return ProperColoringSearch(g, colors, budget).run();
}

bool verify_one_factorization(const Graph & g, const OneFactorization & f, std::string * why)
{
    auto fail = [&](const std::string & msg) {
        if (why)
            *why = msg;
        return false;
    };
    std::vector<int> owner(g.edge_count(), -1);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        std::vector<int> cover(g.vertex_count(), 0);
        for (int e : f.factors[i]) {
            if (e < 0 || e >= g.edge_count())
                return fail("factor " + std::to_string(i + 1) + " names a missing edge");
            if (owner[e] != -1)
                return fail("edge " + std::to_string(e) + " lies in two factors");
            owner[e] = static_cast<int>(i);
            ++cover[g.edge(e).u];
            ++cover[g.edge(e).v];
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (cover[v] != 1)
                return fail("factor " + std::to_string(i + 1) + " is not perfect at vertex " + std::to_string(v + 1));
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (owner[e] == -1)
            return fail("edge " + std::to_string(e) + " is in no factor");
    return true;
}

OneFactorization factorization_from_coloring(const Graph & g, std::span<const int> coloring, int colors)
{
    OneFactorization f;
    f.factors.assign(colors, {});
    for (int e = 0; e < g.edge_count(); ++e)
        f.factors[coloring[e] - 1].push_back(e);
    return f;
}

OneFactorization round_robin_factorization(int n)
{
    if (n < 2 || n % 2 != 0)
        throw Error(ErrorKind::NotOneFactorable, "round robin needs an even number of vertices");
    const Graph g = families::complete(n);
    const int ring = n - 1;
    OneFactorization f;
    for (int round = 0; round < ring; ++round) {
        std::vector<int> factor{*g.edge_index(ring, round)};
        for (int i = 1; i < n / 2; ++i) {
            int a = (round + i) % ring;
            int b = (round - i + ring) % ring;
            factor.push_back(*g.edge_index(a, b));
        }
        std::sort(factor.begin(), factor.end());
        f.factors.push_back(std::move(factor));
    }
    return f;
}

OneFactorization shifted_factorization(int n)
{
    const Graph g = families::complete_bipartite(n, n);
    OneFactorization f;
    for (int t = 0; t < n; ++t) {
        std::vector<int> factor;
        for (int i = 0; i < n; ++i)
            factor.push_back(*g.edge_index(i, n + (i + t) % n));
        std::sort(factor.begin(), factor.end());
        f.factors.push_back(std::move(factor));
    }
    return f;
}

OneFactorization dimension_factorization(int d)
{
    const Graph g = families::hypercube(d);
    OneFactorization f;
    for (int b = 0; b < d; ++b) {
        std::vector<int> factor;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!(v & (1 << b)))
                factor.push_back(*g.edge_index(v, v | (1 << b)));
        std::sort(factor.begin(), factor.end());
        f.factors.push_back(std::move(factor));
    }
    return f;
}

OneFactorization prism_factorization(const Graph & base, std::span<const int> base_coloring)
{
    const int r = regular_degree(base);
    const Graph g = families::prism(base);
    OneFactorization f;
    f.factors.assign(r + 1, {});
    std::vector<std::uint64_t> seen(base.vertex_count(), 0);
    for (int e = 0; e < base.edge_count(); ++e) {
        const int c = base_coloring[e];
        if (c < 1 || c > r + 1)
            throw Error(ErrorKind::InvalidArgument, "base coloring must use colors 1..r+1");
        const Edge & ed = base.edge(e);
        f.factors[c - 1].push_back(*g.edge_index(2 * ed.u, 2 * ed.v));
        f.factors[c - 1].push_back(*g.edge_index(2 * ed.u + 1, 2 * ed.v + 1));
        seen[ed.u] |= 1ULL << c;
        seen[ed.v] |= 1ULL << c;
    }
    for (int v = 0; v < base.vertex_count(); ++v)
        for (int c = 1; c <= r + 1; ++c)
            if (!(seen[v] & (1ULL << c)))
                f.factors[c - 1].push_back(*g.edge_index(2 * v, 2 * v + 1));
    for (auto & factor : f.factors)
        std::sort(factor.begin(), factor.end());
    return f;
}

std::optional<OneFactorization> one_factorization(const Graph & g, SearchBudget & budget)
{
    const int r = regular_degree(g);
    const int n = g.vertex_count();
    if (n % 2 != 0 && r > 0)
        return std::nullopt;
    if (g.edge_count() == 0)
        return OneFactorization{};

    int dim = 0;
    if (is_complete(g) && n % 2 == 0)
        return round_robin_factorization(n);
    if (g.has_bipartition() || is_bipartite(g)) {
        auto sides = g.has_bipartition() ? *g.sides() : *is_bipartite(g);
        std::vector<int> xs, ys;
        for (int v = 0; v < n; ++v)
            (sides[v] == Side::X ? xs : ys).push_back(v);
        const long long half = static_cast<long long>(xs.size());
        if (xs.size() == ys.size() && g.edge_count() == half * half) {
            OneFactorization f;
            for (std::size_t t = 0; t < xs.size(); ++t) {
                std::vector<int> factor;
                for (std::size_t i = 0; i < xs.size(); ++i)
                    factor.push_back(*g.edge_index(xs[i], ys[(i + t) % ys.size()]));
                std::sort(factor.begin(), factor.end());
                f.factors.push_back(std::move(factor));
            }
            return f;
        }
    }
    if (is_hypercube_labelled(g, dim))
        return dimension_factorization(dim);
    if (auto base = prism_base(g)) {
        auto base_coloring = find_proper_edge_coloring(*base, r, budget);
        if (base_coloring)
            return prism_factorization(*base, *base_coloring);
    }

    auto coloring = find_proper_edge_coloring(g, r, budget);
    if (!coloring)
        return std::nullopt;
    return factorization_from_coloring(g, *coloring, r);
}

std::optional<OneFactorization> one_factorization(const Graph & g)
{
    SearchBudget budget;
    return one_factorization(g, budget);
}

} // namespace sec
