#include "sec/cdc.hpp"

#include "sec/canonical.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace sec {

std::optional<std::vector<int>> circuit_edges(const Graph & g, const Circuit & c)
{
    const int k = static_cast<int>(c.size());
    if (k < 3)
        return std::nullopt;
    std::set<int> seen;
    for (int v : c)
        if (v < 0 || v >= g.vertex_count() || !seen.insert(v).second)
            return std::nullopt;
    std::vector<int> out(k);
    for (int i = 0; i < k; ++i) {
        auto e = g.edge_index(c[i], c[(i + 1) % k]);
        if (!e)
            return std::nullopt;
        out[i] = *e;
    }
    return out;
}

bool is_cycle(const Graph & g, const std::vector<int> & edge_indices)
{
    std::vector<int> deg(g.vertex_count(), 0);
    for (int e : edge_indices) {
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
    }
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

namespace {

    std::string circuit_name(const Circuit & c)
    {
        std::string s = "(";
        for (std::size_t i = 0; i < c.size(); ++i)
            s += (i ? " " : "") + std::to_string(c[i] + 1);
        return s + ")";
    }

    std::string edge_name(const Graph & g, int e)
    {
        return std::to_string(g.edge(e).u + 1) + "-" + std::to_string(g.edge(e).v + 1);
    }

    // (circuit, position) pairs through each edge
    using Occurrences = std::vector<std::vector<std::pair<int, int>>>;

    Occurrences occurrences(const Graph & g, const std::vector<std::vector<int>> & edge_lists)
    {
        Occurrences occ(g.edge_count());
        for (int i = 0; i < static_cast<int>(edge_lists.size()); ++i)
            for (int k = 0; k < static_cast<int>(edge_lists[i].size()); ++k)
                occ[edge_lists[i][k]].emplace_back(i, k);
        return occ;
    }

    std::vector<Side> sides_of(const Graph & g)
    {
        if (g.has_bipartition())
            return *g.sides();
        if (auto s = is_bipartite(g))
            return *s;
        throw Error(ErrorKind::NotBipartite, "graph is not bipartite");
    }

    void require_two_se(const Graph & g, const SimultaneousColoring & sc)
    {
        if (sc.mu != 2)
            throw Error(ErrorKind::NotTwoSimultaneous, "coloring has mu = " + std::to_string(sc.mu));
        if (auto r = verify_simultaneous(g, sc); !r)
            throw Error(ErrorKind::NotTwoSimultaneous, r.clause + ": " + r.message);
    }

    // Walks the circuits of f_1^j ∪ f_2^j: leave a start vertex on its
    // coordinate-0 edge of color j, then alternate coordinates.
    template <class Visit>
    void color_class_circuits(const Graph & g, const SimultaneousColoring & sc, const std::vector<bool> & may_start,
                              Visit visit)
    {
        const int n = g.vertex_count();
        for (int j = 1; j <= sc.num_colors; ++j) {
            std::vector<std::array<int, 2>> at(n, {-1, -1});
            for (int e = 0; e < g.edge_count(); ++e)
                for (int t = 0; t < 2; ++t)
                    if (sc.color(t, e) == j) {
                        at[g.edge(e).u][t] = e;
                        at[g.edge(e).v][t] = e;
                    }
            std::vector<bool> done(g.edge_count(), false);
            for (int v = 0; v < n; ++v) {
                if (!may_start[v] || at[v][0] < 0 || done[at[v][0]])
                    continue;
                Circuit c{v};
                std::vector<int> colours;
                int cur = v, t = 0;
                while (true) {
                    int e = at[cur][t];
                    if (t == 0)
                        done[e] = true;
                    colours.push_back(t + 1);
                    cur = g.edge(e).other(cur);
                    if (cur == v)
                        break;
                    c.push_back(cur);
                    t ^= 1;
                }
                visit(j, std::move(c), std::move(colours));
            }
        }
    }

} // namespace

Report verify_cdc(const Graph & g, const CycleDoubleCover & cover)
{
    std::vector<std::vector<int>> lists;
    for (const auto & c : cover.circuits) {
        auto edges = circuit_edges(g, c);
        if (!edges)
            return Report::fail("circuit", circuit_name(c) + " is not a circuit of the graph");
        lists.push_back(std::move(*edges));
    }
    std::vector<int> count(g.edge_count(), 0);
    for (const auto & l : lists)
        for (int e : l)
            ++count[e];
    for (int e = 0; e < g.edge_count(); ++e)
        if (count[e] != 2)
            return Report::fail("cover", "edge " + edge_name(g, e) + " is covered " + std::to_string(count[e])
                                             + " times");
    if (cover.classes) {
        const auto & cls = *cover.classes;
        if (cls.size() != cover.circuits.size())
            return Report::fail("classes", "class list length differs from circuit count");
        std::map<int, std::vector<int>> degree;
        for (std::size_t i = 0; i < cls.size(); ++i) {
            if (cls[i] < 1)
                return Report::fail("classes", "class labels must be positive");
            auto & d = degree[cls[i]];
            d.resize(g.vertex_count(), 0);
            for (int v : cover.circuits[i])
                d[v] += 2;
        }
        for (const auto & [label, d] : degree)
            for (int v = 0; v < g.vertex_count(); ++v)
                if (d[v] != 0 && d[v] != 2)
                    return Report::fail("classes", "class " + std::to_string(label) + " has degree "
                                                       + std::to_string(d[v]) + " at vertex " + std::to_string(v + 1));
    }
    if (cover.circuit_colorings) {
        const auto & cc = *cover.circuit_colorings;
        if (cc.size() != cover.circuits.size())
            return Report::fail("coloring", "coloring list length differs from circuit count");
        for (std::size_t i = 0; i < cc.size(); ++i) {
            const auto & col = cc[i];
            const std::size_t k = cover.circuits[i].size();
            if (col.size() != k)
                return Report::fail("coloring", circuit_name(cover.circuits[i]) + " has a coloring of wrong length");
            for (std::size_t p = 0; p < k; ++p) {
                if (col[p] != 1 && col[p] != 2)
                    return Report::fail("coloring", "circuit colors must be 1 or 2");
                if (col[p] == col[(p + 1) % k])
                    return Report::fail("coloring", circuit_name(cover.circuits[i]) + " is not properly 2-colored");
            }
        }
    }
    return Report::pass();
}

Report verify_ocdc(const Graph & g, const OrientedCDC & cover)
{
    // traversals[e][0] counts u -> v, [1] counts v -> u
    std::vector<std::array<int, 2>> traversals(g.edge_count(), {0, 0});
    for (const auto & c : cover.directed_circuits) {
        auto edges = circuit_edges(g, c);
        if (!edges)
            return Report::fail("circuit", circuit_name(c) + " is not a circuit of the graph");
        for (std::size_t k = 0; k < c.size(); ++k) {
            int e = (*edges)[k];
            ++traversals[e][c[k] == g.edge(e).u ? 0 : 1];
        }
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (traversals[e][0] != 1 || traversals[e][1] != 1)
            return Report::fail("cover", "edge " + edge_name(g, e) + " is traversed "
                                             + std::to_string(traversals[e][0]) + " times forward and "
                                             + std::to_string(traversals[e][1]) + " times backward");
    return Report::pass();
}

SeCdcProperties se_cdc_properties(const Graph & g, const CycleDoubleCover & cover)
{
    SeCdcProperties p;
    if (!verify_cdc(g, cover))
        return p;
    p.even_circuits = std::all_of(cover.circuits.begin(), cover.circuits.end(),
                                  [](const Circuit & c) { return c.size() % 2 == 0; });
    if (cover.classes) {
        std::set<int> labels(cover.classes->begin(), cover.classes->end());
        const int count = static_cast<int>(labels.size());
        if (count > g.max_degree())
            p.enough_classes = true;
        else if (count == g.max_degree())
            p.enough_classes = chromatic_index(g) == count;
    }
    if (cover.circuit_colorings) {
        std::vector<std::vector<int>> lists;
        for (const auto & c : cover.circuits)
            lists.push_back(*circuit_edges(g, c));
        auto occ = occurrences(g, lists);
        const auto & cc = *cover.circuit_colorings;
        p.edges_two_coloured = std::all_of(occ.begin(), occ.end(), [&](const auto & o) {
            return cc[o[0].first][o[0].second] != cc[o[1].first][o[1].second];
        });
    }
    return p;
}

CycleDoubleCover se_to_cdc(const Graph & g, const SimultaneousColoring & sc)
{
    require_two_se(g, sc);
    CycleDoubleCover cover;
    cover.classes.emplace();
    cover.circuit_colorings.emplace();
    color_class_circuits(g, sc, std::vector<bool>(g.vertex_count(), true),
                         [&](int j, Circuit c, std::vector<int> colours) {
                             cover.circuits.push_back(std::move(c));
                             cover.classes->push_back(j);
                             cover.circuit_colorings->push_back(std::move(colours));
                         });
    return cover;
}

std::optional<SimultaneousColoring> cdc_to_se(const Graph & g, const CycleDoubleCover & cover)
{
    if (auto r = verify_cdc(g, cover); !r)
        throw Error(ErrorKind::InvalidCover, r.clause + ": " + r.message);
    if (!cover.classes)
        throw Error(ErrorKind::InvalidCover, "cover carries no class partition");
    for (const auto & c : cover.circuits)
        if (c.size() % 2 != 0)
            throw Error(ErrorKind::OddCircuit, circuit_name(c) + " has odd length");
    std::set<int> labels(cover.classes->begin(), cover.classes->end());
    const int chi = chromatic_index(g);
    if (static_cast<int>(labels.size()) < chi)
        throw Error(ErrorKind::TooFewClasses, std::to_string(labels.size()) + " classes, chromatic index "
                                                  + std::to_string(chi));
    std::map<int, int> dense;
    for (int l : labels)
        dense.emplace(l, static_cast<int>(dense.size()) + 1);

    const int t = static_cast<int>(cover.circuits.size());
    std::vector<std::vector<int>> lists;
    for (const auto & c : cover.circuits)
        lists.push_back(*circuit_edges(g, c));
    auto occ = occurrences(g, lists);

    // flip[i] shifts circuit i's alternating coloring; edge constraints are
    // flip[a] xor flip[b] = 1 xor (pos_a + pos_b) mod 2
    std::vector<std::vector<std::pair<int, int>>> constraints(t);
    for (const auto & o : occ) {
        auto [a, pa] = o[0];
        auto [b, pb] = o[1];
        int parity = 1 ^ ((pa + pb) & 1);
        constraints[a].emplace_back(b, parity);
        constraints[b].emplace_back(a, parity);
    }
    std::vector<int> flip(t, -1);
    for (int s = 0; s < t; ++s) {
        if (flip[s] != -1)
            continue;
        flip[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (auto [b, parity] : constraints[a]) {
                int want = flip[a] ^ parity;
                if (flip[b] == -1) {
                    flip[b] = want;
                    q.push(b);
                }
                else if (flip[b] != want)
                    return std::nullopt;
            }
        }
    }
    SimultaneousColoring sc;
    sc.mu = 2;
    sc.num_colors = static_cast<int>(dense.size());
    sc.colorings.assign(2, std::vector<int>(g.edge_count(), 0));
    for (int i = 0; i < t; ++i)
        for (int k = 0; k < static_cast<int>(lists[i].size()); ++k) {
            int coordinate = (k + flip[i]) & 1;
            sc.colorings[coordinate][lists[i][k]] = dense.at((*cover.classes)[i]);
        }
    if (auto r = verify_simultaneous(g, sc); !r)
        throw Error(ErrorKind::InvalidCover, "assembled coloring fails " + r.clause + ": " + r.message);
    return sc;
}

CycleDoubleCover with_singleton_classes(CycleDoubleCover cover)
{
    cover.classes.emplace(cover.circuits.size());
    std::iota(cover.classes->begin(), cover.classes->end(), 1);
    return cover;
}

CycleDoubleCover with_merged_classes(const Graph & g, CycleDoubleCover cover, int target)
{
    if (!cover.classes)
        cover = with_singleton_classes(std::move(cover));
    auto & cls = *cover.classes;
    auto vertices_of = [&](int label) {
        std::vector<bool> in(g.vertex_count(), false);
        for (std::size_t i = 0; i < cls.size(); ++i)
            if (cls[i] == label)
                for (int v : cover.circuits[i])
                    in[v] = true;
        return in;
    };
    while (true) {
        std::vector<int> labels(cls.begin(), cls.end());
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        if (static_cast<int>(labels.size()) <= target)
            break;
        bool merged = false;
        for (std::size_t a = 0; a < labels.size() && !merged; ++a) {
            auto va = vertices_of(labels[a]);
            for (std::size_t b = a + 1; b < labels.size() && !merged; ++b) {
                auto vb = vertices_of(labels[b]);
                bool disjoint = true;
                for (int v = 0; v < g.vertex_count(); ++v)
                    disjoint = disjoint && !(va[v] && vb[v]);
                if (disjoint) {
                    std::replace(cls.begin(), cls.end(), labels[b], labels[a]);
                    merged = true;
                }
            }
        }
        if (!merged)
            break;
    }
    return cover;
}

OrientedCDC se_to_ocdc_bipartite(const Graph & g, const SimultaneousColoring & sc)
{
    auto sides = sides_of(g);
    require_two_se(g, sc);
    std::vector<bool> start(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        start[v] = sides[v] == Side::X;
    OrientedCDC out;
    color_class_circuits(g, sc, start,
                         [&](int, Circuit c, std::vector<int>) { out.directed_circuits.push_back(std::move(c)); });
    return out;
}

SimultaneousColoring ocdc_to_se_bipartite(const Graph & g, const OrientedCDC & cover)
{
    auto sides = sides_of(g);
    if (auto r = verify_ocdc(g, cover); !r)
        throw Error(ErrorKind::InvalidCover, r.clause + ": " + r.message);
    SimultaneousColoring sc;
    sc.mu = 2;
    sc.num_colors = static_cast<int>(cover.directed_circuits.size());
    sc.colorings.assign(2, std::vector<int>(g.edge_count(), 0));
    for (int i = 0; i < sc.num_colors; ++i) {
        const auto & c = cover.directed_circuits[i];
        auto edges = *circuit_edges(g, c);
        for (std::size_t k = 0; k < c.size(); ++k)
            sc.colorings[sides[c[k]] == Side::X ? 0 : 1][edges[k]] = i + 1;
    }
    if (auto r = verify_simultaneous(g, sc); !r)
        throw Error(ErrorKind::InvalidCover, "assembled coloring fails " + r.clause + ": " + r.message);
    return sc;
}

namespace {

    class OcdcSearch {
    public:
        OcdcSearch(const Graph & g, SearchBudget & budget)
            : g_(g), budget_(budget), used_(2 * g.edge_count(), false)
        {
        }

        bool solve()
        {
            auto it = std::find(used_.begin(), used_.end(), false);
            if (it == used_.end())
                return true;
            const int arc = static_cast<int>(it - used_.begin());
            const Edge & e = g_.edge(arc / 2);
            const int tail = arc % 2 == 0 ? e.u : e.v;
            std::vector<int> path{tail, e.other(tail)};
            std::vector<bool> on_path(g_.vertex_count(), false);
            on_path[path[0]] = on_path[path[1]] = true;
            used_[arc] = true;
            bool ok = extend(path, on_path);
            used_[arc] = false;
            return ok;
        }

        std::vector<Circuit> circuits;

    private:
        bool extend(std::vector<int> & path, std::vector<bool> & on_path)
        {
            budget_.tick();
            const int start = path.front();
            const int cur = path.back();
            for (int e : g_.incident(cur)) {
                const int arc = 2 * e + (g_.edge(e).u == cur ? 0 : 1);
                if (used_[arc])
                    continue;
                const int w = g_.edge(e).other(cur);
                if (w == start) {
                    if (path.size() < 3)
                        continue;
                    used_[arc] = true;
                    circuits.push_back(path);
                    if (solve())
                        return true;
                    circuits.pop_back();
                    used_[arc] = false;
                }
                else if (!on_path[w]) {
                    used_[arc] = true;
                    on_path[w] = true;
                    path.push_back(w);
                    if (extend(path, on_path))
                        return true;
                    path.pop_back();
                    on_path[w] = false;
                    used_[arc] = false;
                }
            }
            return false;
        }

        const Graph & g_;
        SearchBudget & budget_;
        std::vector<bool> used_;
    };

} // namespace

std::optional<OrientedCDC> find_ocdc(const Graph & g, SearchBudget & budget)
{
    if (!is_bridgeless(g))
        return std::nullopt;
    OcdcSearch search(g, budget);
    if (!search.solve())
        return std::nullopt;
    OrientedCDC out{std::move(search.circuits)};
    if (auto r = verify_ocdc(g, out); !r)
        throw Error(ErrorKind::InvalidCover, "search produced an invalid cover: " + r.message);
    return out;
}

std::vector<Circuit> even_circuits(const Graph & g)
{
    std::vector<Circuit> out;
    const int n = g.vertex_count();
    std::vector<int> path;
    std::vector<bool> on_path(n, false);
    auto dfs = [&](auto && self, int s) -> void {
        const int cur = path.back();
        for (int w : g.neighbors(cur)) {
            if (w == s) {
                if (path.size() >= 3 && path.size() % 2 == 0 && path[1] < path.back())
                    out.push_back(path);
            }
            else if (w > s && !on_path[w]) {
                on_path[w] = true;
                path.push_back(w);
                self(self, s);
                path.pop_back();
                on_path[w] = false;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on_path[s] = true;
        dfs(dfs, s);
        on_path[s] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

    // Exact multiset cover of the edge demand by catalog circuits. Branching
    // fixes the full multiset of circuits through one edge, so every cover
    // is produced once.
    class CoverSearch {
    public:
        CoverSearch(const Graph & g, std::vector<Circuit> catalog, int demand, SearchBudget & budget)
            : g_(g), catalog_(std::move(catalog)), need_(g.edge_count(), demand), budget_(budget),
              through_(g.edge_count())
        {
            for (int i = 0; i < static_cast<int>(catalog_.size()); ++i) {
                edges_.push_back(*circuit_edges(g_, catalog_[i]));
                for (int e : edges_.back())
                    through_[e].push_back(i);
            }
        }

        void run(const std::function<bool(const std::vector<int> &)> & found)
        {
            found_ = &found;
            rec();
        }

        const std::vector<std::vector<int>> & edge_lists() const { return edges_; }

    private:
        bool fits(int c) const
        {
            return std::all_of(edges_[c].begin(), edges_[c].end(), [&](int e) { return need_[e] > 0; });
        }

        void take(int c, int delta)
        {
            for (int e : edges_[c])
                need_[e] -= delta;
        }

        // returns false to stop the whole search
        bool rec()
        {
            budget_.tick();
            int best = -1, best_count = 0;
            for (int e = 0; e < g_.edge_count(); ++e) {
                if (need_[e] == 0)
                    continue;
                int count = 0;
                for (int c : through_[e])
                    count += fits(c);
                if (best == -1 || count < best_count) {
                    best = e;
                    best_count = count;
                }
                if (count == 0)
                    return true;
            }
            if (best == -1)
                return (*found_)(chosen_);
            std::vector<int> options;
            for (int c : through_[best])
                if (fits(c))
                    options.push_back(c);
            for (std::size_t i = 0; i < options.size(); ++i) {
                const int a = options[i];
                take(a, 1);
                chosen_.push_back(a);
                if (need_[best] == 0) {
                    if (!rec())
                        return false;
                }
                else
                    for (std::size_t j = i; j < options.size(); ++j) {
                        const int b = options[j];
                        if (!fits(b))
                            continue;
                        take(b, 1);
                        chosen_.push_back(b);
                        bool go_on = rec();
                        chosen_.pop_back();
                        take(b, -1);
                        if (!go_on)
                            return false;
                    }
                chosen_.pop_back();
                take(a, -1);
            }
            return true;
        }

        const Graph & g_;
        std::vector<Circuit> catalog_;
        std::vector<int> need_;
        SearchBudget & budget_;
        std::vector<std::vector<int>> through_;
        std::vector<std::vector<int>> edges_;
        std::vector<int> chosen_;
        const std::function<bool(const std::vector<int> &)> * found_ = nullptr;
    };

} // namespace

std::vector<CycleDoubleCover> enumerate_even_cdcs(const Graph & g, int limit, SearchBudget & budget,
                                                  bool up_to_automorphism)
{
    auto catalog = even_circuits(g);
    CoverSearch search(g, catalog, 2, budget);
    std::vector<std::vector<int>> perms;
    if (up_to_automorphism)
        perms = automorphisms(g);
    else
        perms.push_back({});
    const auto & lists = search.edge_lists();

    auto key_under = [&](const std::vector<int> & chosen, const std::vector<int> & perm) {
        std::vector<std::vector<int>> key;
        for (int c : chosen) {
            std::vector<int> edges = lists[c];
            if (!perm.empty())
                for (int & e : edges)
                    e = *g.edge_index(perm[g.edge(e).u], perm[g.edge(e).v]);
            std::sort(edges.begin(), edges.end());
            key.push_back(std::move(edges));
        }
        std::sort(key.begin(), key.end());
        return key;
    };

    std::set<std::vector<std::vector<int>>> seen;
    std::vector<std::vector<int>> kept;
    long long raw = 0;
    search.run([&](const std::vector<int> & chosen) {
        if (++raw > limit)
            throw Error(ErrorKind::LimitExceeded, "more than " + std::to_string(limit) + " even covers");
        std::vector<std::vector<int>> best;
        for (const auto & p : perms) {
            auto k = key_under(chosen, p);
            if (best.empty() || k < best)
                best = std::move(k);
        }
        if (seen.insert(best).second) {
            auto sorted = chosen;
            std::sort(sorted.begin(), sorted.end());
            kept.push_back(std::move(sorted));
        }
        return true;
    });
    std::sort(kept.begin(), kept.end());
    std::vector<CycleDoubleCover> out;
    for (const auto & chosen : kept) {
        CycleDoubleCover cover;
        for (int c : chosen)
            cover.circuits.push_back(catalog[c]);
        out.push_back(std::move(cover));
    }
    return out;
}

std::optional<std::vector<Circuit>> even_circuit_decomposition(const Graph & g, SearchBudget & budget)
{
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 != 0)
            throw Error(ErrorKind::NotEvenGraph, "vertex " + std::to_string(v + 1) + " has odd degree");
    auto catalog = even_circuits(g);
    CoverSearch search(g, catalog, 1, budget);
    std::optional<std::vector<Circuit>> out;
    search.run([&](const std::vector<int> & chosen) {
        out.emplace();
        for (int c : chosen)
            out->push_back(catalog[c]);
        std::sort(out->begin(), out->end());
        return false;
    });
    return out;
}

Report verify_nzf(const Graph & g, const IntegerFlow & flow, int k)
{
    const std::size_t m = static_cast<std::size_t>(g.edge_count());
    if (flow.forward.size() != m || flow.weight.size() != m)
        return Report::fail("shape", "flow must list one orientation and weight per edge");
    std::vector<long long> net(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const int w = flow.weight[e];
        if (w == 0)
            return Report::fail("support", "edge " + edge_name(g, e) + " carries zero");
        if (w <= -k || w >= k)
            return Report::fail("bound", "edge " + edge_name(g, e) + " carries " + std::to_string(w));
        const int tail = flow.forward[e] ? g.edge(e).u : g.edge(e).v;
        net[tail] += w;
        net[g.edge(e).other(tail)] -= w;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (net[v] != 0)
            return Report::fail("conservation", "vertex " + std::to_string(v + 1) + " has net outflow "
                                                    + std::to_string(net[v]));
    return Report::pass();
}

long long boundary_flow(const Graph & g, const IntegerFlow & flow, const std::vector<int> & vertices)
{
    std::vector<bool> in(g.vertex_count(), false);
    for (int v : vertices)
        in[v] = true;
    long long total = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        const int tail = flow.forward[e] ? g.edge(e).u : g.edge(e).v;
        const int head = g.edge(e).other(tail);
        if (in[tail] && !in[head])
            total += flow.weight[e];
        else if (!in[tail] && in[head])
            total -= flow.weight[e];
    }
    return total;
}

namespace {

    class FlowSearch {
    public:
        FlowSearch(const Graph & g, int k, SearchBudget & budget)
            : g_(g), k_(k), budget_(budget), net_(g.vertex_count(), 0), open_(g.vertex_count())
        {
            value_.assign(g.edge_count(), 0);
            for (int v = 0; v < g.vertex_count(); ++v)
                open_[v] = g.degree(v);
        }

        bool solve(bool first)
        {
            budget_.tick();
            std::vector<int> trail;
            auto undo = [&] {
                for (int e : trail)
                    unset(e);
            };
            // forced values at vertices with a single open edge
            bool progress = true;
            while (progress) {
                progress = false;
                for (int v = 0; v < g_.vertex_count(); ++v) {
                    if (open_[v] == 0 && net_[v] != 0) {
                        undo();
                        return false;
                    }
                    if (open_[v] != 1)
                        continue;
                    int f = -1;
                    for (int e : g_.incident(v))
                        if (value_[e] == 0)
                            f = e;
                    // v is the stored tail of f when v == u
                    const int w = g_.edge(f).u == v ? -net_[v] : net_[v];
                    if (w == 0 || w <= -k_ || w >= k_) {
                        undo();
                        return false;
                    }
                    set(f, w);
                    trail.push_back(f);
                    progress = true;
                }
            }
            int pick = -1, pick_open = 0;
            for (int e = 0; e < g_.edge_count(); ++e) {
                if (value_[e] != 0)
                    continue;
                int o = std::min(open_[g_.edge(e).u], open_[g_.edge(e).v]);
                if (pick == -1 || o < pick_open) {
                    pick = e;
                    pick_open = o;
                }
            }
            if (pick == -1)
                return true;
            for (int w = 1 - k_; w < k_; ++w) {
                // negating a flow gives a flow, so the first choice may be positive
                if (w == 0 || (first && w < 0))
                    continue;
                set(pick, w);
                if (solve(false))
                    return true;
                unset(pick);
            }
            undo();
            return false;
        }

        std::vector<int> value_;

    private:
        void set(int e, int w)
        {
            value_[e] = w;
            net_[g_.edge(e).u] += w;
            net_[g_.edge(e).v] -= w;
            --open_[g_.edge(e).u];
            --open_[g_.edge(e).v];
        }

        void unset(int e)
        {
            const int w = value_[e];
            value_[e] = 0;
            net_[g_.edge(e).u] -= w;
            net_[g_.edge(e).v] += w;
            ++open_[g_.edge(e).u];
            ++open_[g_.edge(e).v];
        }

        const Graph & g_;
        int k_;
        SearchBudget & budget_;
        std::vector<int> net_;
        std::vector<int> open_;
    };

} // namespace

std::optional<IntegerFlow> find_nzf(const Graph & g, int k, SearchBudget & budget)
{
    if (k < 2)
        throw Error(ErrorKind::InvalidArgument, "k must be at least 2");
    FlowSearch search(g, k, budget);
    if (!search.solve(true))
        return std::nullopt;
    IntegerFlow flow;
    for (int w : search.value_) {
        flow.forward.push_back(w > 0);
        flow.weight.push_back(w > 0 ? w : -w);
    }
    if (auto r = verify_nzf(g, flow, k); !r)
        throw Error(ErrorKind::InvalidArgument, "search produced an invalid flow: " + r.message);
    return flow;
}

bool short_circuit_cover_check(const Graph & g, int len)
{
    for (int e = 0; e < g.edge_count(); ++e) {
        const int s = g.edge(e).u, t = g.edge(e).v;
        std::vector<int> dist(g.vertex_count(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int f : g.incident(a)) {
                if (f == e)
                    continue;
                int b = g.edge(f).other(a);
                if (dist[b] == -1) {
                    dist[b] = dist[a] + 1;
                    q.push(b);
                }
            }
        }
        if (dist[t] == -1 || dist[t] + 1 > len)
            return false;
    }
    return true;
}

} // namespace sec
