#include "sec/coloring.hpp"

#include "sec/factorization.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

namespace sec {

int SimultaneousColoring::used_colors() const
{
    int top = 0;
    for (const auto & c : colorings)
        for (int x : c)
            top = std::max(top, x);
    return top;
}

SimultaneousColoring SimultaneousColoring::truncated(int keep) const
{
    SimultaneousColoring out = *this;
    out.mu = keep;
    out.colorings.resize(keep);
    return out;
}

SimultaneousColoring from_tuples(int mu, int num_colors, const std::vector<std::vector<int>> & tuples)
{
    SimultaneousColoring sc;
    sc.mu = mu;
    sc.num_colors = num_colors;
    sc.colorings.assign(mu, std::vector<int>(tuples.size(), 0));
    for (std::size_t e = 0; e < tuples.size(); ++e)
        for (int t = 0; t < mu; ++t)
            sc.colorings[t][e] = tuples[e].at(t);
    return sc;
}

namespace {

    std::string edge_name(const Graph & g, int e)
    {
        return std::to_string(g.edge(e).u + 1) + "-" + std::to_string(g.edge(e).v + 1);
    }

    int positive_min_degree(const Graph & g)
    {
        int best = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) > 0 && (best == 0 || g.degree(v) < best))
                best = g.degree(v);
        return best;
    }

} // namespace

Report verify_proper(const Graph & g, const EdgeColoring & c)
{
    if (static_cast<int>(c.colors.size()) != g.edge_count())
        return Report::fail("shape", "coloring has " + std::to_string(c.colors.size()) + " entries for "
                                         + std::to_string(g.edge_count()) + " edges");
    for (int e = 0; e < g.edge_count(); ++e)
        if (c.colors[e] < 1 || c.colors[e] > c.num_colors)
            return Report::fail("range", "edge " + edge_name(g, e) + " has color " + std::to_string(c.colors[e]));
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::set<int> seen;
        for (int e : g.incident(v))
            if (!seen.insert(c.colors[e]).second)
                return Report::fail("proper", "vertex " + std::to_string(v + 1) + " sees color "
                                                  + std::to_string(c.colors[e]) + " twice");
    }
    return Report::pass();
}

std::vector<int> palette(const Graph & g, const SimultaneousColoring & sc, int t, int v)
{
    std::vector<int> out;
    for (int e : g.incident(v))
        out.push_back(sc.color(t, e));
    std::sort(out.begin(), out.end());
    return out;
}

Report verify_simultaneous(const Graph & g, const SimultaneousColoring & sc)
{
    if (sc.mu < 1 || static_cast<int>(sc.colorings.size()) != sc.mu)
        return Report::fail("shape", "expected " + std::to_string(sc.mu) + " colorings, found "
                                         + std::to_string(sc.colorings.size()));
    if (g.edge_count() > 0 && sc.mu > positive_min_degree(g))
        return Report::fail("mu-bound", "mu = " + std::to_string(sc.mu) + " exceeds minimum degree "
                                            + std::to_string(positive_min_degree(g)));
    for (int t = 0; t < sc.mu; ++t) {
        auto r = verify_proper(g, sc.coordinate(t));
        if (!r)
            return Report::fail(r.clause, "coloring " + std::to_string(t + 1) + ": " + r.message);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto first = palette(g, sc, 0, v);
        for (int t = 1; t < sc.mu; ++t)
            if (palette(g, sc, t, v) != first)
                return Report::fail("palette", "vertex " + std::to_string(v + 1) + " palettes of colorings 1 and "
                                                   + std::to_string(t + 1) + " differ");
    }
    for (int e = 0; e < g.edge_count(); ++e)
        for (int a = 0; a < sc.mu; ++a)
            for (int b = a + 1; b < sc.mu; ++b)
                if (sc.color(a, e) == sc.color(b, e))
                    return Report::fail("distinct", "edge " + edge_name(g, e) + " has color "
                                                        + std::to_string(sc.color(a, e)) + " in colorings "
                                                        + std::to_string(a + 1) + " and " + std::to_string(b + 1));
    return Report::pass();
}

namespace {

    // more edges than delta matchings can hold
    bool overfull(const Graph & g)
    {
        return g.edge_count() > g.max_degree() * (g.vertex_count() / 2);
    }

} // namespace

EdgeColoring optimal_edge_coloring(const Graph & g, SearchBudget & budget)
{
    const int delta = g.max_degree();
    if (!overfull(g))
        if (auto c = find_proper_edge_coloring(g, delta, budget))
            return {delta, std::move(*c)};
    auto c = find_proper_edge_coloring(g, delta + 1, budget);
    if (!c)
        throw Error(ErrorKind::PreconditionViolated, "no (Δ+1)-edge-coloring found; graph is not simple?");
    return {delta + 1, std::move(*c)};
}

int chromatic_index(const Graph & g, SearchBudget & budget)
{
    const int delta = g.max_degree();
    if (!overfull(g) && find_proper_edge_coloring(g, delta, budget))
        return delta;
    return delta + 1;
}

int chromatic_index(const Graph & g)
{
    SearchBudget budget;
    return chromatic_index(g, budget);
}

namespace {

    using Mask = std::uint64_t;

    // Backtracking over edges in vertex-completion order; each edge receives
    // its μ-tuple coordinate by coordinate before the consistency checks run.
    class SimultaneousSearch {
    public:
        SimultaneousSearch(const Graph & g, int mu, int colors, SearchBudget & budget)
            : g_(g), mu_(mu), l_(colors), budget_(budget), n_(g.vertex_count()), m_(g.edge_count()),
              seen_(mu, std::vector<Mask>(g.vertex_count(), 0)), union_(g.vertex_count(), 0),
              done_(g.vertex_count(), 0), coloured_(g.edge_count(), 0),
              col_(mu, std::vector<int>(g.edge_count(), 0))
        {
            full_ = ((l_ >= 63) ? ~0ULL : ((1ULL << (l_ + 1)) - 1)) & ~1ULL;
            build_order();
        }

        std::optional<SimultaneousColoring> run()
        {
            if (!expand(0))
                return std::nullopt;
            SimultaneousColoring sc;
            sc.mu = mu_;
            sc.num_colors = l_;
            sc.colorings = col_;
            return sc;
        }

    private:
        void build_order()
        {
            std::vector<char> visited(n_, 0), placed(m_, 0);
            std::vector<int> touched(n_, 0);
            for (int step = 0; step < n_; ++step) {
                int pick = -1;
                for (int v = 0; v < n_; ++v) {
                    if (visited[v])
                        continue;
                    if (pick == -1 || touched[v] > touched[pick]
                        || (touched[v] == touched[pick] && g_.degree(v) > g_.degree(pick)))
                        pick = v;
                }
                visited[pick] = 1;
                std::vector<int> inc(g_.incident(pick).begin(), g_.incident(pick).end());
                std::stable_sort(inc.begin(), inc.end(), [&](int a, int b) {
                    return touched[g_.edge(a).other(pick)] > touched[g_.edge(b).other(pick)];
                });
                for (int e : inc)
                    if (!placed[e]) {
                        placed[e] = 1;
                        order_.push_back(e);
                    }
                for (int w : g_.neighbors(pick))
                    ++touched[w];
            }
        }

        int remaining(int x) const { return g_.degree(x) - done_[x]; }

        Mask allowed(int x, int t) const
        {
            if (std::popcount(union_[x]) >= g_.degree(x))
                return union_[x] & ~seen_[t][x];
            return full_ & ~seen_[t][x];
        }

        bool edge_feasible(int f) const
        {
            const Edge & ed = g_.edge(f);
            Mask any = 0;
            for (int t = 0; t < mu_; ++t) {
                Mask cand = allowed(ed.u, t) & allowed(ed.v, t);
                if (!cand)
                    return false;
                any |= cand;
            }
            return std::popcount(any) >= mu_;
        }

        // Every color already on x in some coordinate but not yet in
        // coordinate t has to land on a distinct uncoloured edge at x.
        bool vertex_feasible(int x) const
        {
            if (remaining(x) == 0)
                return true;
            int slots[64];
            int r = 0;
            for (int f : g_.incident(x))
                if (!coloured_[f])
                    slots[r++] = f;
            for (int t = 0; t < mu_; ++t) {
                Mask needed = union_[x] & ~seen_[t][x];
                if (!needed)
                    continue;
                Mask cand[64];
                for (int i = 0; i < r; ++i)
                    cand[i] = allowed(x, t) & allowed(g_.edge(slots[i]).other(x), t);
                int owner[64];
                std::fill(owner, owner + r, -1);
                for (Mask rest = needed; rest; rest &= rest - 1) {
                    int c = std::countr_zero(rest);
                    Mask visited = 0;
                    if (!augment(c, cand, owner, r, visited))
                        return false;
                }
            }
            return true;
        }

        static bool augment(int c, const Mask * cand, int * owner, int r, Mask & visited)
        {
            for (int i = 0; i < r; ++i) {
                if (!(cand[i] >> c & 1) || (visited >> i & 1))
                    continue;
                visited |= 1ULL << i;
                if (owner[i] == -1 || augment(owner[i], cand, owner, r, visited)) {
                    owner[i] = c;
                    return true;
                }
            }
            return false;
        }

        bool consistent(int e) const
        {
            const Edge & ed = g_.edge(e);
            for (int x : {ed.u, ed.v}) {
                if (!vertex_feasible(x))
                    return false;
                for (int f : g_.incident(x)) {
                    if (coloured_[f])
                        continue;
                    if (!edge_feasible(f) || !vertex_feasible(g_.edge(f).other(x)))
                        return false;
                }
            }
            return true;
        }

        bool expand(int pos)
        {
            if (pos == m_)
                return true;
            return assign(pos, order_[pos], 0, 0);
        }

        bool assign(int pos, int e, int t, Mask tuple)
        {
            const Edge & ed = g_.edge(e);
            if (t == mu_) {
                coloured_[e] = 1;
                ++done_[ed.u];
                ++done_[ed.v];
                if (consistent(e) && expand(pos + 1))
                    return true;
                coloured_[e] = 0;
                --done_[ed.u];
                --done_[ed.v];
                return false;
            }
            const Mask forbidden = seen_[t][ed.u] | seen_[t][ed.v] | tuple;
            const int top = std::min(max_used_ + 1, l_);
            for (int c = 1; c <= top; ++c) {
                const Mask bit = 1ULL << c;
                if (forbidden & bit)
                    continue;
                if (!(union_[ed.u] & bit) && std::popcount(union_[ed.u]) >= g_.degree(ed.u))
                    continue;
                if (!(union_[ed.v] & bit) && std::popcount(union_[ed.v]) >= g_.degree(ed.v))
                    continue;
                budget_.tick();
                const Mask saved_u = union_[ed.u], saved_v = union_[ed.v];
                const int saved_max = max_used_;
                seen_[t][ed.u] |= bit;
                seen_[t][ed.v] |= bit;
                union_[ed.u] |= bit;
                union_[ed.v] |= bit;
                max_used_ = std::max(max_used_, c);
                col_[t][e] = c;
                if (assign(pos, e, t + 1, tuple | bit))
                    return true;
                col_[t][e] = 0;
                seen_[t][ed.u] &= ~bit;
                seen_[t][ed.v] &= ~bit;
                union_[ed.u] = saved_u;
                union_[ed.v] = saved_v;
                max_used_ = saved_max;
            }
            return false;
        }

        const Graph & g_;
        int mu_;
        int l_;
        SearchBudget & budget_;
        int n_;
        int m_;
        Mask full_ = 0;
        std::vector<int> order_;
        std::vector<std::vector<Mask>> seen_;
        std::vector<Mask> union_;
        std::vector<int> done_;
        std::vector<char> coloured_;
        std::vector<std::vector<int>> col_;
        int max_used_ = 0;
    };

} // namespace

std::optional<SimultaneousColoring> decide_mu_se(const Graph & g, int mu, int colors, SearchBudget & budget)
{
    if (mu < 1 || colors < 1)
        throw Error(ErrorKind::InvalidArgument, "mu and the number of colors must be positive");
    if (g.max_degree() > 62)
        throw Error(ErrorKind::InvalidArgument, "maximum degree above 62 is not supported");
    if (g.edge_count() == 0)
        return SimultaneousColoring{mu, colors, std::vector<std::vector<int>>(mu)};
    if (mu > positive_min_degree(g) || colors < g.max_degree() || colors < mu)
        return std::nullopt;

    // every color in use appears in the first coordinate, so at most |E|
    // colors are ever needed
    const int effective = std::min({colors, g.edge_count(), 62});
    if (effective < colors && g.edge_count() > 62)
        throw Error(ErrorKind::InvalidArgument, "more than 62 colors are not supported");

    std::optional<SimultaneousColoring> found;
    if (mu == 1) {
        if (auto c = find_proper_edge_coloring(g, effective, budget))
            found = SimultaneousColoring{1, effective, {std::move(*c)}};
    }
    else
        found = SimultaneousSearch(g, mu, effective, budget).run();
    if (!found)
        return std::nullopt;
    found->num_colors = colors;
    if (auto r = verify_simultaneous(g, *found); !r)
        throw Error(ErrorKind::PreconditionViolated, "search produced an invalid coloring: " + r.message);
    return found;
}

std::optional<SimultaneousColoring> decide_mu_se(const Graph & g, int mu, int colors)
{
    SearchBudget budget;
    return decide_mu_se(g, mu, colors, budget);
}

std::optional<int> se_chromatic_number(const Graph & g, int mu, int max_colors, SearchBudget & budget,
                                       SimultaneousColoring * witness)
{
    if (max_colors < g.max_degree())
        throw Error(ErrorKind::InvalidArgument, "color bound below maximum degree");
    for (int l = std::max(1, g.max_degree()); l <= max_colors; ++l)
        if (auto sc = decide_mu_se(g, mu, l, budget)) {
            if (witness)
                *witness = std::move(*sc);
            return l;
        }
    return std::nullopt;
}

namespace {

    bool connected_without_vertex(const Graph & g, int skip)
    {
        std::vector<Edge> edges;
        for (const auto & e : g.edges())
            if (!e.touches(skip))
                edges.push_back(e);
        // relabel so the skipped vertex disappears
        std::vector<Edge> relabelled;
        for (const auto & e : edges)
            relabelled.emplace_back(e.u > skip ? e.u - 1 : e.u, e.v > skip ? e.v - 1 : e.v);
        return is_connected(Graph(g.vertex_count() - 1, std::move(relabelled)));
    }

    bool bridgeless_without_vertex(const Graph & g, int skip)
    {
        std::vector<int> drop(g.incident(skip).begin(), g.incident(skip).end());
        return is_bridgeless(remove_edges(g, drop));
    }

} // namespace

FilterResult counterexample_filter(const Graph & g)
{
    FilterResult result;
    auto fail = [&](std::string what) {
        result.passes = false;
        result.failed.push_back(std::move(what));
    };

    if (!g.has_bipartition() && !is_bipartite(g))
        fail("bipartite");
    if (!is_bridgeless(g))
        fail("bridgeless");

    bool two_connected = g.vertex_count() >= 3 && is_connected(g);
    for (int v = 0; two_connected && v < g.vertex_count(); ++v)
        if (!connected_without_vertex(g, v))
            two_connected = false;
    if (!two_connected)
        fail("2-connected");

    if (g.min_degree() != 2 || g.max_degree() != 3)
        fail("min degree 2 and max degree 3");

    bool no_nontrivial_two_cut = true;
    if (is_connected(g)) {
        for (int a = 0; a < g.edge_count() && no_nontrivial_two_cut; ++a)
            for (int b = a + 1; b < g.edge_count(); ++b) {
                const int pair[2] = {a, b};
                std::vector<int> comp_of;
                auto sizes = connected_components(remove_edges(g, pair), &comp_of);
                if (sizes.size() < 2)
                    continue;
                bool trivial = std::any_of(sizes.begin(), sizes.end(), [](int s) { return s < 2; });
                if (!trivial) {
                    no_nontrivial_two_cut = false;
                    break;
                }
            }
    }
    if (!no_nontrivial_two_cut)
        fail("no nontrivial 2-edge cut");

    bool removal_ok = true, neighbourhood_ok = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 2)
            continue;
        if (!bridgeless_without_vertex(g, v))
            removal_ok = false;
        int u = g.neighbors(v)[0], w = g.neighbors(v)[1];
        for (int x : g.neighbors(u))
            if (x != v && g.adjacent(x, w))
                neighbourhood_ok = false;
    }
    if (!removal_ok)
        fail("G-v bridgeless at degree-2 vertices");
    if (!neighbourhood_ok)
        fail("N(u) and N(w) meet only in v");
    return result;
}

bool check_girth_bound(const Graph & g, const SimultaneousColoring & sc, int k)
{
    if (k < 2)
        throw Error(ErrorKind::PreconditionViolated, "k must be at least 2");
    if (sc.mu != 2 || !verify_simultaneous(g, sc))
        throw Error(ErrorKind::PreconditionViolated, "not a valid 2-simultaneous coloring");
    if (!is_bridgeless(g))
        throw Error(ErrorKind::PreconditionViolated, "graph has a bridge");
    const int gi = girth(g);
    if (gi != infinite_girth && gi < 2 * k - 1)
        throw Error(ErrorKind::PreconditionViolated,
                    "girth " + std::to_string(gi) + " below " + std::to_string(2 * k - 1));
    return static_cast<long long>(g.edge_count()) >= static_cast<long long>(k) * chromatic_index(g);
}

} // namespace sec
