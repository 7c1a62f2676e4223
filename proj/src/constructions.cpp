#include "sec/constructions.hpp"

#include "sec/cdc.hpp"
#include "sec/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sec {

namespace {

    SimultaneousColoring checked(const Graph & g, SimultaneousColoring sc, const char * what)
    {
        if (auto r = verify_simultaneous(g, sc); !r)
            throw std::logic_error(std::string(what) + " produced an invalid coloring (" + r.clause + ": " + r.message
                                   + ")");
        return sc;
    }

    SimultaneousColoring blank(int mu, int colors, int edges)
    {
        SimultaneousColoring sc;
        sc.mu = mu;
        sc.num_colors = colors;
        sc.colorings.assign(mu, std::vector<int>(edges, 0));
        return sc;
    }

    void require_valid(const Graph & g, const SimultaneousColoring & sc, const char * which)
    {
        if (auto r = verify_simultaneous(g, sc); !r)
            throw Error(ErrorKind::PreconditionViolated, std::string(which) + " is not a valid coloring: " + r.message);
    }

    int regular_degree(const Graph & g)
    {
        if (g.vertex_count() == 0)
            return 0;
        if (g.min_degree() != g.max_degree())
            throw Error(ErrorKind::NotRegular, "graph is not regular");
        return g.max_degree();
    }

    // 1-based residue of x modulo n
    int wrap(int x, int n) { return ((x - 1) % n + n) % n + 1; }

} // namespace

SimultaneousColoring color_with_factorization(const Graph & g, const OneFactorization & f, int mu)
{
    const int r = static_cast<int>(f.factors.size());
    if (mu > r)
        throw Error(ErrorKind::MuTooLarge, "mu " + std::to_string(mu) + " exceeds degree " + std::to_string(r));
    if (mu < 1)
        throw Error(ErrorKind::InvalidArgument, "mu must be positive");
    std::string why;
    if (!verify_one_factorization(g, f, &why))
        throw Error(ErrorKind::NotOneFactorable, why);
    auto sc = blank(mu, r, g.edge_count());
    for (int j = 1; j <= r; ++j)
        for (int e : f.factors[j - 1])
            for (int t = 0; t < mu; ++t)
                sc.colorings[t][e] = (j - 1 + t) % r + 1;
    return checked(g, std::move(sc), "color_with_factorization");
}

SimultaneousColoring color_one_factorable(const Graph & g, int mu)
{
    const int r = regular_degree(g);
    if (mu > r)
        throw Error(ErrorKind::MuTooLarge, "mu " + std::to_string(mu) + " exceeds degree " + std::to_string(r));
    auto f = one_factorization(g);
    if (!f)
        throw Error(ErrorKind::NotOneFactorable, "graph has no 1-factorization");
    return color_with_factorization(g, *f, mu);
}

int complete_bipartite_color(int n, int m, int t, int i, int j)
{
    if (n > m)
        return complete_bipartite_color(m, n, t, j, i);
    return ((i + t) % n + j) % m + 1;
}

SimultaneousColoring color_complete_bipartite(int n, int m, int mu)
{
    if (n < 1 || m < 1 || mu < 1)
        throw Error(ErrorKind::InvalidArgument, "sizes and mu must be positive");
    if (mu > std::min(n, m))
        throw Error(ErrorKind::MuTooLarge, "mu exceeds the smaller side");
    const Graph g = families::complete_bipartite(n, m);
    auto sc = blank(mu, std::max(n, m), g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        for (int t = 0; t < mu; ++t)
            sc.colorings[t][e] = complete_bipartite_color(n, m, t, g.edge(e).u, g.edge(e).v - n);
    return checked(g, std::move(sc), "color_complete_bipartite");
}

SimultaneousColoring color_join(const Graph & g1, const SimultaneousColoring & sc1, const Graph & g2,
                                const SimultaneousColoring & sc2)
{
    if (sc1.mu != sc2.mu)
        throw Error(ErrorKind::MuMismatch, "inputs have mu " + std::to_string(sc1.mu) + " and " + std::to_string(sc2.mu));
    require_valid(g1, sc1, "first input");
    require_valid(g2, sc2, "second input");
    const int mu = sc1.mu;
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    if (mu > std::min(n1, n2))
        throw Error(ErrorKind::MuTooLarge, "mu exceeds the smaller operand order");
    const int r = std::max(sc1.used_colors(), sc2.used_colors());
    const Graph g = join(g1, g2);
    auto sc = blank(mu, r + std::max(n1, n2), g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge & ed = g.edge(e);
        for (int t = 0; t < mu; ++t) {
            int c;
            if (ed.v < n1)
                c = sc1.color(t, *g1.edge_index(ed.u, ed.v));
            else if (ed.u >= n1)
                c = sc2.color(t, *g2.edge_index(ed.u - n1, ed.v - n1));
            else
                c = r + complete_bipartite_color(n1, n2, t, ed.u, ed.v - n1);
            sc.colorings[t][e] = c;
        }
    }
    return checked(g, std::move(sc), "color_join");
}

SimultaneousColoring color_cartesian_sum(const Graph & g, const SimultaneousColoring & scg, const Graph & h,
                                         const SimultaneousColoring & sch)
{
    if (scg.mu != sch.mu)
        throw Error(ErrorKind::MuMismatch, "inputs have mu " + std::to_string(scg.mu) + " and " + std::to_string(sch.mu));
    require_valid(g, scg, "first input");
    require_valid(h, sch, "second input");
    const int nh = h.vertex_count();
    const int a = scg.num_colors;
    const Graph p = cartesian_product(g, h);
    auto sc = blank(scg.mu, a + sch.num_colors, p.edge_count());
    for (int e = 0; e < p.edge_count(); ++e) {
        const Edge & ed = p.edge(e);
        const int u1 = ed.u / nh, v1 = ed.u % nh, u2 = ed.v / nh, v2 = ed.v % nh;
        for (int t = 0; t < scg.mu; ++t)
            sc.colorings[t][e] = v1 == v2 ? scg.color(t, *g.edge_index(u1, u2))
                                          : a + sch.color(t, *h.edge_index(v1, v2));
    }
    return checked(p, std::move(sc), "color_cartesian_sum");
}

SimultaneousColoring color_cartesian_regular(const Graph & g, const Graph & h, int mu)
{
    const int r = regular_degree(g);
    const int s = regular_degree(h);
    if (mu > r + s)
        throw Error(ErrorKind::MuTooLarge, "mu exceeds r + s");
    auto fh = one_factorization(h);
    if (!fh || s == 0)
        throw Error(ErrorKind::NotOneFactorable, "second factor has no 1-factorization");
    SearchBudget budget;
    auto base = find_proper_edge_coloring(g, r + 1, budget);
    if (!base)
        throw std::logic_error("no (r+1)-edge-coloring found");
    const Graph p = cartesian_product(g, h);
    const int nh = h.vertex_count();
    const Graph pr = families::prism(g);
    const OneFactorization prism_f = prism_factorization(g, *base);

    OneFactorization f;
    f.factors.assign(r + s, {});
    // prisms over the first matching, one per edge of it
    for (int m1 : fh->factors[0]) {
        const int a = h.edge(m1).u, b = h.edge(m1).v;
        auto lift = [&](int w) { return (w / 2) * nh + (w % 2 == 0 ? a : b); };
        for (int i = 0; i <= r; ++i)
            for (int e : prism_f.factors[i])
                f.factors[i].push_back(*p.edge_index(lift(pr.edge(e).u), lift(pr.edge(e).v)));
    }
    for (int k = 1; k < s; ++k)
        for (int m : fh->factors[k])
            for (int u = 0; u < g.vertex_count(); ++u)
                f.factors[r + k].push_back(*p.edge_index(u * nh + h.edge(m).u, u * nh + h.edge(m).v));
    for (auto & factor : f.factors)
        std::sort(factor.begin(), factor.end());
    return color_with_factorization(p, f, mu);
}

SimultaneousColoring color_lexicographic(const Graph & g, const Graph & h, const SimultaneousColoring & sch)
{
    require_valid(h, sch, "inner coloring");
    const int n = h.vertex_count();
    const int mu = sch.mu;
    if (mu > n)
        throw Error(ErrorKind::MuTooLarge, "mu exceeds the inner order");
    SearchBudget budget;
    const EdgeColoring cg = optimal_edge_coloring(g, budget);
    const int hc = sch.num_colors;
    const Graph p = lexicographic_product(g, h);
    auto sc = blank(mu, hc + cg.num_colors * n, p.edge_count());
    for (int e = 0; e < p.edge_count(); ++e) {
        const Edge & ed = p.edge(e);
        const int u1 = ed.u / n, v1 = ed.u % n, u2 = ed.v / n, v2 = ed.v % n;
        for (int t = 0; t < mu; ++t) {
            if (u1 == u2)
                sc.colorings[t][e] = sch.color(t, *h.edge_index(v1, v2));
            else {
                const int block = cg.colors[*g.edge_index(u1, u2)] - 1;
                sc.colorings[t][e] = hc + block * n + complete_bipartite_color(n, n, t, v1, v2);
            }
        }
    }
    return checked(p, std::move(sc), "color_lexicographic");
}

SimultaneousColoring color_wheel(int n)
{
    if (n < 3)
        throw Error(ErrorKind::InvalidArgument, "wheel needs n >= 3");
    const Graph g = families::wheel(n);
    auto sc = blank(2, n, g.edge_count());
    const int hub = n;
    for (int i = 1; i <= n; ++i) {
        const int v = i - 1;
        const int spoke = *g.edge_index(hub, v);
        const int rim = *g.edge_index(v, i % n);
        sc.colorings[0][spoke] = wrap(i, n);
        sc.colorings[0][rim] = wrap(i + 2, n);
        sc.colorings[1][spoke] = wrap(i + 2, n);
        sc.colorings[1][rim] = wrap(i + 1, n);
    }
    return checked(g, std::move(sc), "color_wheel");
}

namespace {

    // entries in the order of the sorted edge list of K_n
    const std::vector<std::vector<int>> k7_table = {
        {5, 7, 6}, {2, 3, 1}, {3, 2, 7}, {6, 1, 5}, {7, 6, 3}, {1, 5, 2}, {7, 2, 5},
        {6, 1, 4}, {1, 6, 7}, {4, 5, 2}, {2, 4, 1}, {1, 7, 2}, {4, 5, 3}, {5, 4, 7},
        {3, 1, 4}, {7, 4, 1}, {2, 3, 6}, {4, 6, 3}, {3, 7, 4}, {5, 3, 6}, {6, 2, 5},
    };

    const std::vector<std::vector<int>> k9_table = {
        {2, 3, 4}, {1, 4, 3}, {4, 1, 2}, {3, 2, 6}, {6, 7, 8}, {7, 8, 5}, {8, 5, 1}, {5, 6, 7}, {9, 5, 6},
        {5, 9, 7}, {6, 7, 8}, {3, 8, 9}, {8, 4, 2}, {4, 6, 5}, {7, 2, 3}, {6, 7, 9}, {7, 8, 5}, {8, 6, 1},
        {4, 1, 7}, {5, 3, 8}, {3, 9, 4}, {8, 6, 1}, {7, 2, 4}, {1, 5, 8}, {9, 8, 6}, {2, 4, 5}, {9, 1, 7},
        {5, 3, 9}, {2, 9, 3}, {1, 5, 2}, {2, 9, 3}, {1, 4, 2}, {4, 3, 6}, {3, 2, 4}, {9, 7, 1}, {6, 1, 9},
    };

    std::string vname(int v) { return "v" + std::to_string(v + 1); }

} // namespace

std::vector<std::string> coloring_violations(const Graph & g, const SimultaneousColoring & sc)
{
    std::vector<std::string> out;
    if (static_cast<int>(sc.colorings.size()) != sc.mu) {
        out.push_back("coloring lists " + std::to_string(sc.colorings.size()) + " coordinates for mu "
                      + std::to_string(sc.mu));
        return out;
    }
    for (const auto & c : sc.colorings)
        if (static_cast<int>(c.size()) != g.edge_count()) {
            out.push_back("a coordinate has the wrong number of entries");
            return out;
        }
    for (int e = 0; e < g.edge_count(); ++e) {
        const std::string name = vname(g.edge(e).u) + vname(g.edge(e).v);
        std::set<int> distinct;
        for (int t = 0; t < sc.mu; ++t) {
            const int c = sc.color(t, e);
            if (c < 1 || c > sc.num_colors)
                out.push_back(name + ": color " + std::to_string(c) + " out of range in coordinate "
                              + std::to_string(t + 1));
            distinct.insert(c);
        }
        if (static_cast<int>(distinct.size()) != sc.mu)
            out.push_back(name + ": repeated color across coordinates");
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int t = 0; t < sc.mu; ++t) {
            std::map<int, std::vector<int>> by_color;
            for (int e : g.incident(v))
                by_color[sc.color(t, e)].push_back(e);
            for (const auto & [c, es] : by_color)
                if (es.size() > 1) {
                    std::string line = vname(v) + ": color " + std::to_string(c) + " appears "
                                       + std::to_string(es.size()) + " times in coordinate " + std::to_string(t + 1)
                                       + " (";
                    for (std::size_t i = 0; i < es.size(); ++i)
                        line += (i ? ", " : "") + vname(g.edge(es[i]).u) + vname(g.edge(es[i]).v);
                    out.push_back(line + ")");
                }
        }
        for (int t = 1; t < sc.mu; ++t)
            if (palette(g, sc, t, v) != palette(g, sc, 0, v))
                out.push_back(vname(v) + ": palette of coordinate " + std::to_string(t + 1)
                              + " differs from coordinate 1");
    }
    return out;
}

TableCheck check_complete_table(int n)
{
    if (n != 7 && n != 9)
        throw Error(ErrorKind::InvalidArgument, "tables exist for K7 and K9 only");
    const Graph g = families::complete(n);
    TableCheck out;
    out.printed = from_tuples(3, n, n == 7 ? k7_table : k9_table);
    out.report = verify_simultaneous(g, out.printed);
    out.discrepancies = coloring_violations(g, out.printed);
    return out;
}

std::optional<SimultaneousColoring> color_complete(int n, int mu)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "complete graph needs n >= 2");
    if (mu < 1)
        throw Error(ErrorKind::InvalidArgument, "mu must be positive");
    if (mu == 1) {
        SearchBudget budget;
        const Graph g = families::complete(n);
        auto c = optimal_edge_coloring(g, budget);
        return SimultaneousColoring{1, c.num_colors, {c.colors}};
    }
    if (n == 2 || n == 3 || n == 5)
        return std::nullopt;
    if (n % 2 == 0) {
        if (mu > n - 1)
            throw Error(ErrorKind::MuTooLarge, "mu exceeds n - 1");
        return color_with_factorization(families::complete(n), round_robin_factorization(n), mu);
    }
    if (mu > 3)
        throw Error(ErrorKind::InvalidArgument, "odd complete graphs are supported for mu in {2, 3}");
    if (n == 7 || n == 9) {
        auto check = check_complete_table(n);
        if (check.report)
            return check.printed.truncated(mu);
        auto found = decide_mu_se(families::complete(n), mu, n);
        if (!found)
            throw std::logic_error("table failed and the search found no replacement");
        return found;
    }
    auto smaller = color_complete(n - 4, mu);
    auto k4 = color_complete(4, mu);
    return color_join(families::complete(n - 4), *smaller, families::complete(4), *k4);
}

std::pair<Graph, SimultaneousColoring> subdivide_coloring(const Graph & g, const SimultaneousColoring & sc, Edge e,
                                                          int k)
{
    if (sc.mu != 2)
        throw Error(ErrorKind::NotTwoSimultaneous, "subdivision needs a 2-SE coloring");
    if (k < 1)
        throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
    require_valid(g, sc, "input");
    const auto idx = g.edge_index(e.u, e.v);
    if (!idx)
        throw Error(ErrorKind::EdgeNotFound, "edge " + vname(e.u) + vname(e.v) + " not in graph");
    const int a = sc.color(0, *idx), b = sc.color(1, *idx);
    const int n = g.vertex_count();
    Graph out = subdivide_edge(g, e, 2 * k);
    std::vector<int> path{e.u};
    for (int i = 0; i < 2 * k; ++i)
        path.push_back(n + i);
    path.push_back(e.v);
    auto res = blank(2, sc.num_colors, out.edge_count());
    for (int f = 0; f < out.edge_count(); ++f) {
        const Edge & ed = out.edge(f);
        if (ed.v >= n || ed.u >= n)
            continue;
        const int old = *g.edge_index(ed.u, ed.v);
        res.colorings[0][f] = sc.color(0, old);
        res.colorings[1][f] = sc.color(1, old);
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const int f = *out.edge_index(path[i], path[i + 1]);
        res.colorings[0][f] = i % 2 == 0 ? a : b;
        res.colorings[1][f] = i % 2 == 0 ? b : a;
    }
    return {out, checked(out, std::move(res), "subdivide_coloring")};
}

SimultaneousColoring color_from_hamiltonian(const Graph & g, const std::vector<int> & circuit, SearchBudget & budget)
{
    auto cedges = circuit_edges(g, circuit);
    if (!cedges || static_cast<int>(circuit.size()) != g.vertex_count())
        throw Error(ErrorKind::NotHamiltonian, "not a Hamiltonian circuit of the graph");
    if (circuit.size() % 2 != 0)
        throw Error(ErrorKind::OddCircuit, "Hamiltonian circuit has odd length");
    Graph residual = remove_edges(g, *cedges);
    auto sides = is_bipartite(residual);
    if (!sides)
        throw Error(ErrorKind::ResidualNotBipartite, "edges off the circuit do not form a bipartite graph");
    residual = residual.with_sides(*sides);
    std::optional<OrientedCDC> ocdc;
    try {
        ocdc = find_ocdc(residual, budget);
    }
    catch (const Error & err) {
        if (err.kind() != ErrorKind::SearchBudgetExceeded)
            throw;
        throw Error(ErrorKind::NoOcdcFound, "search budget exhausted before an oriented cover was found");
    }
    if (!ocdc)
        throw Error(ErrorKind::NoOcdcFound, "residual graph has no oriented cycle double cover");
    const auto inner = ocdc_to_se_bipartite(residual, *ocdc);
    const int t = inner.num_colors;
    auto sc = blank(2, t + 2, g.edge_count());
    for (int f = 0; f < residual.edge_count(); ++f) {
        const int e = *g.edge_index(residual.edge(f).u, residual.edge(f).v);
        sc.colorings[0][e] = inner.color(0, f);
        sc.colorings[1][e] = inner.color(1, f);
    }
    for (std::size_t i = 0; i < cedges->size(); ++i) {
        sc.colorings[0][(*cedges)[i]] = t + 1 + static_cast<int>(i % 2);
        sc.colorings[1][(*cedges)[i]] = t + 2 - static_cast<int>(i % 2);
    }
    return checked(g, std::move(sc), "color_from_hamiltonian");
}

SimultaneousColoring color_from_hamiltonian(const Graph & g, const std::vector<int> & circuit)
{
    SearchBudget budget;
    return color_from_hamiltonian(g, circuit, budget);
}

} // namespace sec
