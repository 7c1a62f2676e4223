#include "sec/latin.hpp"

#include "sec/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sec {

int LatinTrade::symbol_bound() const
{
    int top = 0;
    for (const auto & c : cells)
        for (int s : c.symbols)
            top = std::max(top, s);
    return top;
}

PartialLatinSquare LatinTrade::square(int t) const
{
    PartialLatinSquare p{rows, cols, {}};
    for (const auto & c : cells)
        p.cells.push_back({c.row, c.col, c.symbols.at(t)});
    return p;
}

namespace {

    std::string cell_name(int r, int c) { return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")"; }

} // namespace

Report verify_partial_latin_square(const PartialLatinSquare & p)
{
    std::set<std::pair<int, int>> filled, in_row, in_col;
    for (const auto & [r, c, k] : p.cells) {
        if (r < 0 || r >= p.rows || c < 0 || c >= p.cols || k < 1)
            return Report::fail("shape", "entry " + cell_name(r, c) + " out of range");
        if (!filled.insert({r, c}).second)
            return Report::fail("shape", "cell " + cell_name(r, c) + " filled twice");
        if (!in_row.insert({r, k}).second)
            return Report::fail("latin", "symbol " + std::to_string(k) + " repeated in row " + std::to_string(r + 1));
        if (!in_col.insert({c, k}).second)
            return Report::fail("latin", "symbol " + std::to_string(k) + " repeated in column " + std::to_string(c + 1));
    }
    return Report::pass();
}

Report verify_trade(const LatinTrade & trade)
{
    if (trade.mu < 2)
        return Report::fail("shape", "a trade needs at least two squares");
    std::set<std::pair<int, int>> filled;
    for (const auto & c : trade.cells) {
        if (static_cast<int>(c.symbols.size()) != trade.mu)
            return Report::fail("shape", "cell " + cell_name(c.row, c.col) + " has " + std::to_string(c.symbols.size())
                                             + " entries");
        if (!filled.insert({c.row, c.col}).second)
            return Report::fail("shape", "cell " + cell_name(c.row, c.col) + " listed twice");
    }
    for (int t = 0; t < trade.mu; ++t)
        if (auto r = verify_partial_latin_square(trade.square(t)); !r)
            return Report::fail(r.clause, "square " + std::to_string(t + 1) + ": " + r.message);
    for (const auto & c : trade.cells) {
        std::set<int> distinct(c.symbols.begin(), c.symbols.end());
        if (static_cast<int>(distinct.size()) != trade.mu)
            return Report::fail("distinct", "cell " + cell_name(c.row, c.col) + " repeats a symbol across squares");
    }
    // per line, the symbol set of each square
    std::map<int, std::vector<std::set<int>>> rows, cols;
    for (const auto & c : trade.cells) {
        auto & r = rows[c.row];
        auto & k = cols[c.col];
        r.resize(trade.mu);
        k.resize(trade.mu);
        for (int t = 0; t < trade.mu; ++t) {
            r[t].insert(c.symbols[t]);
            k[t].insert(c.symbols[t]);
        }
    }
    for (const auto & [i, sets] : rows)
        for (int t = 1; t < trade.mu; ++t)
            if (sets[t] != sets[0])
                return Report::fail("row", "row " + std::to_string(i + 1) + " differs between squares 1 and "
                                               + std::to_string(t + 1));
    for (const auto & [j, sets] : cols)
        for (int t = 1; t < trade.mu; ++t)
            if (sets[t] != sets[0])
                return Report::fail("column", "column " + std::to_string(j + 1) + " differs between squares 1 and "
                                                  + std::to_string(t + 1));
    if (trade.symmetric) {
        if (trade.rows != trade.cols)
            return Report::fail("symmetric", "symmetric trade must be square");
        std::map<std::pair<int, int>, const TradeCell *> at;
        for (const auto & c : trade.cells)
            at[{c.row, c.col}] = &c;
        for (const auto & c : trade.cells) {
            if (c.row == c.col)
                return Report::fail("symmetric", "diagonal cell " + cell_name(c.row, c.col) + " is filled");
            auto it = at.find({c.col, c.row});
            if (it == at.end() || it->second->symbols != c.symbols)
                return Report::fail("symmetric", "cell " + cell_name(c.row, c.col) + " has no mirror image");
        }
    }
    return Report::pass();
}

std::pair<Graph, SimultaneousColoring> trade_to_graph(const LatinTrade & trade, TradeLayout layout)
{
    if (auto r = verify_trade(trade); !r)
        throw Error(ErrorKind::InvalidTrade, r.clause + ": " + r.message);
    std::vector<Edge> edges;
    std::map<Edge, const TradeCell *> source;
    int n = 0;
    std::optional<std::vector<Side>> sides;
    if (layout == TradeLayout::Bipartite) {
        n = trade.rows + trade.cols;
        for (const auto & c : trade.cells) {
            Edge e(c.row, trade.rows + c.col);
            edges.push_back(e);
            source[e] = &c;
        }
        sides.emplace(n, Side::Y);
        std::fill(sides->begin(), sides->begin() + trade.rows, Side::X);
    }
    else {
        if (!trade.symmetric)
            throw Error(ErrorKind::NotSymmetric, "trade is not flagged symmetric");
        n = trade.rows;
        for (const auto & c : trade.cells)
            if (c.row < c.col) {
                Edge e(c.row, c.col);
                edges.push_back(e);
                source[e] = &c;
            }
    }
    Graph g(n, std::move(edges), std::move(sides));
    std::vector<std::vector<int>> tuples;
    for (const auto & e : g.edges())
        tuples.push_back(source.at(e)->symbols);
    auto sc = from_tuples(trade.mu, trade.symbol_bound(), tuples);
    if (auto r = verify_simultaneous(g, sc); !r)
        throw Error(ErrorKind::InvalidTrade, "translated coloring fails " + r.clause + ": " + r.message);
    return {std::move(g), std::move(sc)};
}

LatinTrade coloring_to_trade(const Graph & g, const SimultaneousColoring & sc, TradeLayout layout)
{
    LatinTrade trade;
    trade.mu = sc.mu;
    trade.symmetric = layout == TradeLayout::Symmetric;
    auto symbols_of = [&](int e) {
        std::vector<int> s(sc.mu);
        for (int t = 0; t < sc.mu; ++t)
            s[t] = sc.color(t, e);
        return s;
    };
    if (layout == TradeLayout::Bipartite) {
        std::vector<Side> sides;
        if (g.has_bipartition())
            sides = *g.sides();
        else if (auto s = is_bipartite(g))
            sides = *s;
        else
            throw Error(ErrorKind::NotBipartite, "bipartite trade layout needs a bipartite graph");
        std::vector<int> index(g.vertex_count(), -1);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) > 0)
                index[v] = sides[v] == Side::X ? trade.rows++ : trade.cols++;
        for (int e = 0; e < g.edge_count(); ++e) {
            int x = g.edge(e).u, y = g.edge(e).v;
            if (sides[x] != Side::X)
                std::swap(x, y);
            trade.cells.push_back({index[x], index[y], symbols_of(e)});
        }
    }
    else {
        std::vector<int> index(g.vertex_count(), -1);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) > 0)
                index[v] = trade.rows++;
        trade.cols = trade.rows;
        for (int e = 0; e < g.edge_count(); ++e) {
            int a = index[g.edge(e).u], b = index[g.edge(e).v];
            trade.cells.push_back({a, b, symbols_of(e)});
            trade.cells.push_back({b, a, symbols_of(e)});
        }
    }
    std::sort(trade.cells.begin(), trade.cells.end(),
              [](const TradeCell & a, const TradeCell & b) { return std::pair(a.row, a.col) < std::pair(b.row, b.col); });
    return trade;
}

std::vector<int> spectrum_scan(int mu, int max_volume, SearchBudget & budget)
{
    if (mu < 2)
        throw Error(ErrorKind::InvalidArgument, "spectrum scan needs mu >= 2");
    std::vector<int> feasible;
    for (int s = 1; s <= max_volume; ++s)
        for (const auto & g : bipartite_graphs(s, mu))
            if (decide_mu_se(g, mu, s, budget)) {
                feasible.push_back(s);
                break;
            }
    return feasible;
}

LatinTrade volume_ten_bitrade()
{
    // rows of the two squares, 0 = empty
    static const int first[4][4] = {{1, 2, 0, 0}, {2, 4, 3, 0}, {0, 1, 4, 3}, {3, 0, 0, 1}};
    static const int second[4][4] = {{2, 1, 0, 0}, {3, 2, 4, 0}, {0, 4, 3, 1}, {1, 0, 0, 3}};
    LatinTrade trade;
    trade.mu = 2;
    trade.rows = trade.cols = 4;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (first[i][j] != 0)
                trade.cells.push_back({i, j, {first[i][j], second[i][j]}});
    return trade;
}

} // namespace sec
