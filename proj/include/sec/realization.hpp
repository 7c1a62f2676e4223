#pragma once

#include "sec/error.hpp"
#include "sec/graph.hpp"

#include <optional>
#include <vector>

namespace sec {

/// Degrees of the two sides; a realization numbers x_i as vertex i and
/// y_j as vertex |x| + j.
struct BipartiteDegreeSequence {
    std::vector<int> x;
    std::vector<int> y;
};

/// Gale–Ryser test.
bool is_bipartite_graphic(const BipartiteDegreeSequence & s);

/// Degrees of side X then side Y, in vertex order.
BipartiteDegreeSequence degree_sequence(const Graph & g);

std::optional<Graph> realize_bipartite(const BipartiteDegreeSequence & s);

/// Realization with edge connectivity >= mu, by improving 2-switches.
Graph realize_connected(const BipartiteDegreeSequence & s, int mu, SearchBudget & budget);
Graph realize_connected(const BipartiteDegreeSequence & s, int mu);

} // namespace sec
