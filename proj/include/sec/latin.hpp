#pragma once

#include "sec/coloring.hpp"
#include "sec/error.hpp"
#include "sec/graph.hpp"

#include <array>
#include <utility>
#include <vector>

namespace sec {

/// Filled cell (row, col) of a μ-way trade; symbols[t] is its entry in
/// square T_t. Rows and columns are 0-based, symbols positive.
struct TradeCell {
    int row = 0;
    int col = 0;
    std::vector<int> symbols;
};

/// Triples (i, j; k) with at most one per position.
struct PartialLatinSquare {
    int rows = 0;
    int cols = 0;
    std::vector<std::array<int, 3>> cells;

    int volume() const { return static_cast<int>(cells.size()); }
};

Report verify_partial_latin_square(const PartialLatinSquare & p);

/// μ partial Latin squares on one shape, stored cell-wise.
struct LatinTrade {
    int mu = 0;
    int rows = 0;
    int cols = 0;
    std::vector<TradeCell> cells;
    bool symmetric = false;

    int volume() const { return static_cast<int>(cells.size()); }
    /// Largest symbol used; symbols carry no a-priori bound.
    int symbol_bound() const;
    PartialLatinSquare square(int t) const;
};

/// Clauses: "shape", "latin", "distinct", "row", "column", "symmetric".
Report verify_trade(const LatinTrade & trade);

enum class TradeLayout { Bipartite, Symmetric };

/// Bipartite layout: rows are X = 0..rows-1, columns Y = rows..rows+cols-1.
/// Symmetric layout: vertex i per row, one edge per unordered filled pair.
std::pair<Graph, SimultaneousColoring> trade_to_graph(const LatinTrade & trade,
                                                      TradeLayout layout = TradeLayout::Bipartite);

/// Inverse of trade_to_graph. Rows follow side X (or all vertices in the
/// symmetric layout) in vertex order; vertices without edges are dropped.
LatinTrade coloring_to_trade(const Graph & g, const SimultaneousColoring & sc,
                             TradeLayout layout = TradeLayout::Bipartite);

/// Volumes s <= max_volume admitting a μ-way trade, found by running the
/// exact search over every bipartite graph with s edges and minimum degree
/// at least μ.
std::vector<int> spectrum_scan(int mu, int max_volume, SearchBudget & budget);

/// The 4x4 bitrade of volume 10 whose graph is
/// families::volume_ten_bitrade_graph().
LatinTrade volume_ten_bitrade();

} // namespace sec
