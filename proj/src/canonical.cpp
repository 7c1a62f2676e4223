#include "sec/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace sec {

namespace {

    std::vector<int> dense_ranks(const std::vector<int> & values)
    {
        std::vector<int> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> out(values.size());
        for (std::size_t i = 0; i < values.size(); ++i)
            out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[i]) - sorted.begin());
        return out;
    }

    // Colour refinement: split cells by the multiset of neighbouring cells
    // until stable. Rank order extends the incoming order.
    std::vector<int> refine(const Graph & g, std::vector<int> cell)
    {
        const int n = g.vertex_count();
        int cells = n == 0 ? 0 : *std::max_element(cell.begin(), cell.end()) + 1;
        while (true) {
            std::vector<std::vector<int>> sig(n);
            for (int v = 0; v < n; ++v) {
                sig[v].push_back(cell[v]);
                std::vector<int> around;
                for (int w : g.neighbors(v))
                    around.push_back(cell[w]);
                std::sort(around.begin(), around.end());
                sig[v].insert(sig[v].end(), around.begin(), around.end());
            }
            std::vector<int> idx(n);
            for (int v = 0; v < n; ++v)
                idx[v] = v;
            std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
            std::vector<int> next(n);
            int rank = -1;
            for (int i = 0; i < n; ++i) {
                if (i == 0 || sig[idx[i]] != sig[idx[i - 1]])
                    ++rank;
                next[idx[i]] = rank;
            }
            if (rank + 1 == cells)
                return next;
            cells = rank + 1;
            cell = std::move(next);
        }
    }

    class Canoniser {
    public:
        Canoniser(const Graph & g, const std::vector<int> & colours, bool keep_leaves)
            : g_(g), colours_(colours), keep_leaves_(keep_leaves)
        {
        }

        void run()
        {
            std::vector<int> start = colours_.empty() ? std::vector<int>(g_.vertex_count(), 0) : dense_ranks(colours_);
            search(std::move(start));
        }

        std::vector<int> best_labelling;
        std::vector<int> best_certificate;
        std::vector<std::vector<int>> best_leaves;

    private:
        std::vector<int> certificate(const std::vector<int> & label) const
        {
            const int n = g_.vertex_count();
            std::vector<int> cert;
            cert.reserve(n + 2 * g_.edge_count());
            if (!colours_.empty()) {
                std::vector<int> by_position(n);
                for (int v = 0; v < n; ++v)
                    by_position[label[v]] = colours_[v];
                cert = by_position;
            }
            std::vector<std::pair<int, int>> edges;
            for (const auto & e : g_.edges()) {
                int a = label[e.u], b = label[e.v];
                edges.emplace_back(std::min(a, b), std::max(a, b));
            }
            std::sort(edges.begin(), edges.end());
            for (auto [a, b] : edges) {
                cert.push_back(a);
                cert.push_back(b);
            }
            return cert;
        }

        void search(std::vector<int> cell)
        {
            cell = refine(g_, std::move(cell));
            const int n = g_.vertex_count();
            std::vector<int> size(n + 1, 0);
            for (int v = 0; v < n; ++v)
                ++size[cell[v]];
            int target = -1;
            for (int r = 0; r < n; ++r)
                if (size[r] > 1) {
                    target = r;
                    break;
                }
            if (target == -1) {
                auto cert = certificate(cell);
                if (best_certificate.empty() || cert < best_certificate) {
                    best_certificate = std::move(cert);
                    best_labelling = cell;
                    best_leaves.clear();
                    if (keep_leaves_)
                        best_leaves.push_back(cell);
                }
                else if (keep_leaves_ && cert == best_certificate)
                    best_leaves.push_back(cell);
                return;
            }
            std::vector<int> tried;
            for (int v = 0; v < n; ++v) {
                if (cell[v] != target)
                    continue;
                // swapping twins is an automorphism fixing the partition,
                // so one representative per twin class suffices
                if (!keep_leaves_
                    && std::any_of(tried.begin(), tried.end(), [&](int w) { return twins(v, w); }))
                    continue;
                tried.push_back(v);
                std::vector<int> next = cell;
                for (int w = 0; w < n; ++w)
                    if (cell[w] > target || (cell[w] == target && w != v))
                        ++next[w];
                search(std::move(next));
            }
        }

        bool twins(int a, int b) const
        {
            if (g_.degree(a) != g_.degree(b))
                return false;
            std::vector<int> na, nb;
            for (int w : g_.neighbors(a))
                if (w != b)
                    na.push_back(w);
            for (int w : g_.neighbors(b))
                if (w != a)
                    nb.push_back(w);
            return na == nb;
        }

        const Graph & g_;
        const std::vector<int> & colours_;
        bool keep_leaves_;
    };

} // namespace

CanonicalForm canonical_form(const Graph & g, const std::vector<int> & vertex_colours)
{
    if (g.vertex_count() == 0)
        return {};
    Canoniser c(g, vertex_colours, false);
    c.run();
    return {std::move(c.best_labelling), std::move(c.best_certificate)};
}

std::vector<std::vector<int>> automorphisms(const Graph & g)
{
    const int n = g.vertex_count();
    if (n == 0)
        return {{}};
    static const std::vector<int> no_colours;
    Canoniser c(g, no_colours, true);
    c.run();
    std::vector<int> inverse_best(n);
    for (int v = 0; v < n; ++v)
        inverse_best[c.best_labelling[v]] = v;
    std::vector<std::vector<int>> out;
    for (const auto & leaf : c.best_leaves) {
        std::vector<int> perm(n);
        for (int v = 0; v < n; ++v)
            perm[v] = inverse_best[leaf[v]];
        out.push_back(std::move(perm));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

    Graph relabel(const Graph & g, const std::vector<int> & label)
    {
        std::vector<Edge> edges;
        for (const auto & e : g.edges())
            edges.emplace_back(label[e.u], label[e.v]);
        return Graph(g.vertex_count(), std::move(edges));
    }

} // namespace

void for_each_connected_graph(int max_edges, const std::function<void(const Graph &)> & visit)
{
    if (max_edges < 1)
        return;
    std::vector<Graph> level{Graph(2, {Edge(0, 1)})};
    visit(level.front());
    for (int m = 2; m <= max_edges; ++m) {
        std::set<std::vector<int>> seen;
        std::vector<Graph> next;
        auto offer = [&](const Graph & candidate) {
            auto form = canonical_form(candidate);
            if (seen.insert(form.certificate).second)
                next.push_back(relabel(candidate, form.labelling));
        };
        for (const auto & g : level) {
            const int n = g.vertex_count();
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!g.adjacent(u, v)) {
                        auto edges = g.edges();
                        edges.emplace_back(u, v);
                        offer(Graph(n, std::move(edges)));
                    }
            for (int u = 0; u < n; ++u) {
                auto edges = g.edges();
                edges.emplace_back(u, n);
                offer(Graph(n + 1, std::move(edges)));
            }
        }
        for (const auto & g : next)
            visit(g);
        level = std::move(next);
    }
}

std::vector<Graph> bipartite_graphs(int edges, int min_degree)
{
    std::vector<Graph> out;
    if (edges < 1 || min_degree < 1)
        return out;
    std::set<std::vector<int>> seen;
    const int max_side = edges / min_degree;
    for (int rows = 1; rows <= max_side; ++rows)
        for (int cols = std::max(rows, min_degree); cols <= max_side; ++cols) {
            if (cols > 20)
                continue;
            std::vector<unsigned> masks;
            for (unsigned m = 1; m < (1u << cols); ++m)
                if (std::popcount(m) >= min_degree)
                    masks.push_back(m);
            std::sort(masks.begin(), masks.end(), std::greater<>());
            // rows as a non-increasing sequence of column masks
            std::vector<unsigned> chosen;
            auto emit = [&]() {
                std::vector<int> col_sum(cols, 0);
                for (unsigned m : chosen)
                    for (int j = 0; j < cols; ++j)
                        col_sum[j] += (m >> j) & 1;
                for (int s : col_sum)
                    if (s < min_degree)
                        return;
                std::vector<Edge> es;
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < cols; ++j)
                        if ((chosen[i] >> j) & 1)
                            es.emplace_back(i, rows + j);
                Graph g(rows + cols, std::move(es));
                auto form = canonical_form(g);
                if (!seen.insert(form.certificate).second)
                    return;
                std::vector<Side> sides(rows + cols, Side::Y);
                for (int i = 0; i < rows; ++i)
                    sides[i] = Side::X;
                out.push_back(g.with_sides(std::move(sides)));
            };
            auto rec = [&](auto && self, std::size_t from, int left) -> void {
                const int placed = static_cast<int>(chosen.size());
                if (placed == rows) {
                    if (left == 0)
                        emit();
                    return;
                }
                const int rows_left = rows - placed;
                if (left < rows_left * min_degree || left > rows_left * cols)
                    return;
                for (std::size_t i = from; i < masks.size(); ++i) {
                    int pc = std::popcount(masks[i]);
                    if (pc > left)
                        continue;
                    chosen.push_back(masks[i]);
                    self(self, i, left - pc);
                    chosen.pop_back();
                }
            };
            rec(rec, 0, edges);
        }
    return out;
}

} // namespace sec
