#pragma once

#include "sec/graph.hpp"

#include <vector>

// Brute-force reference procedures, deliberately unrelated to the library's
// search code. Only for graphs with a handful of edges and vertices.
namespace oracle {

/// Some pair of proper colorings with colors 1..colors having equal palettes
/// at every vertex and different colors on every edge.
bool two_se(const sec::Graph & g, int colors);

/// Least k with a proper k-edge-coloring, by plain enumeration.
int chromatic_index(const sec::Graph & g);

bool bipartite(const sec::Graph & g);

/// Indices of edges whose removal raises the component count.
std::vector<int> bridges(const sec::Graph & g);

/// Minimum |[S, V-S]| over all nonempty proper subsets S.
int edge_connectivity(const sec::Graph & g);

/// Shortest circuit length, 0 for forests.
int girth(const sec::Graph & g);

int components(const sec::Graph & g);

} // namespace oracle
