#include "sec/graph.hpp"

#include "sec/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <string>

namespace sec {

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::optional<std::vector<Side>> sides)
    : n_(vertex_count), edges_(std::move(edges)), sides_(std::move(sides))
{
    if (n_ < 0)
        throw Error(ErrorKind::InvalidArgument, "negative vertex count");
    for (const auto & e : edges_) {
        if (e.u < 0 || e.v >= n_)
            throw Error(ErrorKind::InvalidArgument,
                        "edge endpoint out of range: " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1));
        if (e.u == e.v)
            throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(e.u + 1));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw Error(ErrorKind::DuplicateEdge,
                    "edge " + std::to_string(dup->u + 1) + " " + std::to_string(dup->v + 1) + " repeated");

    if (sides_) {
        if (static_cast<int>(sides_->size()) != n_)
            throw Error(ErrorKind::BipartitionViolation, "bipartition does not cover every vertex");
        for (const auto & e : edges_)
            if ((*sides_)[e.u] == (*sides_)[e.v])
                throw Error(ErrorKind::BipartitionViolation,
                            "edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1)
                                + " lies inside one side");
    }

    incident_.assign(n_, {});
    neighbors_.assign(n_, {});
    for (int i = 0; i < edge_count(); ++i) {
        incident_[edges_[i].u].push_back(i);
        incident_[edges_[i].v].push_back(i);
    }
    for (int v = 0; v < n_; ++v) {
        auto & inc = incident_[v];
        std::sort(inc.begin(), inc.end(),
                  [&](int a, int b) { return edges_[a].other(v) < edges_[b].other(v); });
        for (int e : inc)
            neighbors_[v].push_back(edges_[e].other(v));
    }
}

int Graph::min_degree() const
{
    int best = n_ == 0 ? 0 : std::numeric_limits<int>::max();
    for (int v = 0; v < n_; ++v)
        best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const
{
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v)
        d[v] = degree(v);
    return d;
}

std::optional<int> Graph::edge_index(int u, int v) const
{
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        return std::nullopt;
    Edge key(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> Graph::side_vertices(Side s) const
{
    std::vector<int> out;
    if (!sides_)
        return out;
    for (int v = 0; v < n_; ++v)
        if ((*sides_)[v] == s)
            out.push_back(v);
    return out;
}

Graph Graph::with_sides(std::vector<Side> sides) const
{
    return Graph(n_, edges_, std::move(sides));
}

Graph Graph::without_sides() const
{
    return Graph(n_, edges_);
}

std::optional<std::vector<Side>> is_bipartite(const Graph & g)
{
    const int n = g.vertex_count();
    std::vector<int> colour(n, -1);
    for (int root = 0; root < n; ++root) {
        if (colour[root] != -1)
            continue;
        colour[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                }
                else if (colour[w] == colour[v])
                    return std::nullopt;
            }
        }
    }
    std::vector<Side> sides(n);
    for (int v = 0; v < n; ++v)
        sides[v] = colour[v] == 0 ? Side::X : Side::Y;
    return sides;
}

Graph ensure_bipartition(const Graph & g)
{
    if (g.has_bipartition())
        return g;
    auto sides = is_bipartite(g);
    if (!sides)
        throw Error(ErrorKind::NotBipartite, "graph contains an odd circuit");
    return g.with_sides(std::move(*sides));
}

std::vector<int> connected_components(const Graph & g, std::vector<int> * component_of)
{
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<int> sizes;
    for (int root = 0; root < n; ++root) {
        if (comp[root] != -1)
            continue;
        int id = static_cast<int>(sizes.size());
        sizes.push_back(0);
        std::vector<int> stack{root};
        comp[root] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++sizes[id];
            for (int w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
    }
    if (component_of)
        *component_of = std::move(comp);
    return sizes;
}

int component_count(const Graph & g)
{
    return static_cast<int>(connected_components(g).size());
}

bool is_connected(const Graph & g)
{
    return component_count(g) <= 1;
}

std::vector<int> bridges(const Graph & g)
{
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), out;
    int timer = 0;

    // iterative low-link; frame = (vertex, parent edge, next incident slot)
    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1)
            continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto & f = stack.back();
            auto inc = g.incident(f.v);
            if (f.next < inc.size()) {
                int e = inc[f.next++];
                if (e == f.parent_edge)
                    continue;
                int w = g.edge(e).other(f.v);
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                }
                else
                    low[f.v] = std::min(low[f.v], disc[w]);
            }
            else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[done.v]);
                    if (low[done.v] > disc[p])
                        out.push_back(done.parent_edge);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_bridgeless(const Graph & g)
{
    return bridges(g).empty();
}

EdgeCut make_cut(const Graph & g, std::vector<int> side)
{
    std::sort(side.begin(), side.end());
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : side)
        in[v] = 1;
    EdgeCut cut;
    for (int e = 0; e < g.edge_count(); ++e)
        if (in[g.edge(e).u] != in[g.edge(e).v])
            cut.cut_edges.push_back(e);
    cut.size = static_cast<int>(cut.cut_edges.size());
    cut.side = std::move(side);

    Graph rest = remove_edges(g, cut.cut_edges);
    std::vector<int> comp_of;
    auto sizes = connected_components(rest, &comp_of);
    cut.nontrivial = !cut.cut_edges.empty();
    for (int e : cut.cut_edges) {
        // both components touching the cut must keep at least two vertices
        if (sizes[comp_of[g.edge(e).u]] < 2 || sizes[comp_of[g.edge(e).v]] < 2)
            cut.nontrivial = false;
    }
    return cut;
}

namespace {

    // Unit-capacity max flow on the undirected graph; flow[e] is +1 along
    // u->v, -1 along v->u. Returns the flow value and the source side of a
    // minimum cut (vertices reachable in the residual graph).
    int unit_max_flow(const Graph & g, int s, int t, std::vector<int> & source_side)
    {
        const int n = g.vertex_count();
        std::vector<int> flow(g.edge_count(), 0);
        auto residual = [&](int e, int from) {
            const Edge & ed = g.edge(e);
            return from == ed.u ? 1 - flow[e] : 1 + flow[e];
        };
        int value = 0;
        std::vector<int> via(n);
        while (true) {
            std::fill(via.begin(), via.end(), -2);
            via[s] = -1;
            std::deque<int> queue{s};
            while (!queue.empty() && via[t] == -2) {
                int v = queue.front();
                queue.pop_front();
                for (int e : g.incident(v)) {
                    int w = g.edge(e).other(v);
                    if (via[w] == -2 && residual(e, v) > 0) {
                        via[w] = e;
                        queue.push_back(w);
                    }
                }
            }
            if (via[t] == -2)
                break;
            for (int v = t; v != s;) {
                int e = via[v];
                int p = g.edge(e).other(v);
                flow[e] += (p == g.edge(e).u) ? 1 : -1;
                v = p;
            }
            ++value;
        }
        source_side.clear();
        for (int v = 0; v < n; ++v)
            if (via[v] != -2)
                source_side.push_back(v);
        return value;
    }

} // namespace

EdgeConnectivity edge_connectivity(const Graph & g)
{
    if (g.vertex_count() < 2)
        throw Error(ErrorKind::InvalidArgument, "edge connectivity needs at least two vertices");
    std::vector<int> comp_of;
    auto sizes = connected_components(g, &comp_of);
    if (sizes.size() > 1)
        throw Error(ErrorKind::DisconnectedInput, "graph has " + std::to_string(sizes.size()) + " components");

    EdgeConnectivity best;
    best.value = std::numeric_limits<int>::max();
    std::vector<int> side;
    for (int t = 1; t < g.vertex_count(); ++t) {
        int value = unit_max_flow(g, 0, t, side);
        if (value < best.value || (value == best.value && side < best.witness.side)) {
            best.value = value;
            best.witness.side = side;
        }
    }
    best.witness = make_cut(g, best.witness.side);
    return best;
}

std::vector<std::vector<int>> minimum_cuts(const Graph & g, int connectivity)
{
    std::vector<std::vector<int>> out;
    const int m = g.edge_count();
    if (connectivity > m)
        return out;
    std::vector<int> pick(connectivity);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == connectivity) {
            if (!is_connected(remove_edges(g, pick)))
                out.push_back(pick);
            return;
        }
        for (int e = start; e <= m - (connectivity - depth); ++e) {
            pick[depth] = e;
            rec(e + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

int girth(const Graph & g)
{
    const int n = g.vertex_count();
    int best = infinite_girth;
    std::vector<int> dist(n), parent_edge(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent_edge[root] = -1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int e : g.incident(v)) {
                if (e == parent_edge[v])
                    continue;
                int w = g.edge(e).other(v);
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent_edge[w] = e;
                    queue.push_back(w);
                }
                else
                    best = std::min(best, dist[v] + dist[w] + 1);
            }
        }
    }
    return best;
}

Graph join(const Graph & g1, const Graph & g2)
{
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    std::vector<Edge> edges = g1.edges();
    for (const auto & e : g2.edges())
        edges.emplace_back(e.u + n1, e.v + n1);
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            edges.emplace_back(a, n1 + b);
    return Graph(n1 + n2, std::move(edges));
}

Graph cartesian_product(const Graph & g, const Graph & h)
{
    const int nh = h.vertex_count();
    std::vector<Edge> edges;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (const auto & e : h.edges())
            edges.emplace_back(u * nh + e.u, u * nh + e.v);
    for (const auto & e : g.edges())
        for (int v = 0; v < nh; ++v)
            edges.emplace_back(e.u * nh + v, e.v * nh + v);
    return Graph(g.vertex_count() * nh, std::move(edges));
}

Graph lexicographic_product(const Graph & g, const Graph & h)
{
    const int nh = h.vertex_count();
    std::vector<Edge> edges;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (const auto & e : h.edges())
            edges.emplace_back(u * nh + e.u, u * nh + e.v);
    for (const auto & e : g.edges())
        for (int a = 0; a < nh; ++a)
            for (int b = 0; b < nh; ++b)
                edges.emplace_back(e.u * nh + a, e.v * nh + b);
    return Graph(g.vertex_count() * nh, std::move(edges));
}

Graph subdivide_edge(const Graph & g, Edge e, int t)
{
    if (t < 0)
        throw Error(ErrorKind::InvalidArgument, "negative subdivision count");
    auto idx = g.edge_index(e.u, e.v);
    if (!idx)
        throw Error(ErrorKind::EdgeNotFound,
                    "edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " not in graph");
    if (t == 0)
        return g;
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int i = 0; i < g.edge_count(); ++i)
        if (i != *idx)
            edges.push_back(g.edge(i));
    int prev = e.u;
    for (int k = 0; k < t; ++k) {
        edges.emplace_back(prev, n + k);
        prev = n + k;
    }
    edges.emplace_back(prev, e.v);

    std::optional<std::vector<Side>> sides;
    if (g.has_bipartition() && t % 2 == 0) {
        sides = *g.sides();
        Side s = g.side(e.u);
        for (int k = 0; k < t; ++k) {
            s = s == Side::X ? Side::Y : Side::X;
            sides->push_back(s);
        }
    }
    return Graph(n + t, std::move(edges), std::move(sides));
}

Graph remove_edges(const Graph & g, std::span<const int> edge_indices)
{
    std::vector<char> drop(g.edge_count(), 0);
    for (int e : edge_indices)
        drop[e] = 1;
    std::vector<Edge> keep;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!drop[e])
            keep.push_back(g.edge(e));
    return Graph(g.vertex_count(), std::move(keep), g.sides());
}

} // namespace sec
