#pragma once

#include "sec/graph.hpp"

#include <functional>
#include <vector>

// Isomorph rejection for the small graphs the exhaustive checks walk over:
// colour refinement plus individualisation, taking the lexicographically
// least relabelled edge list over all leaves. Adequate up to ~14 vertices.
namespace sec {

struct CanonicalForm {
    /// labelling[v] = canonical position of vertex v
    std::vector<int> labelling;
    /// vertex colours in canonical order followed by the relabelled sorted edges
    std::vector<int> certificate;
};

CanonicalForm canonical_form(const Graph & g, const std::vector<int> & vertex_colours = {});

/// Every automorphism as a vertex map (perm[v] = image of v).
std::vector<std::vector<int>> automorphisms(const Graph & g);

/// All connected graphs with 1..max_edges edges, one per isomorphism class.
/// The callback sees graphs grouped by increasing edge count.
void for_each_connected_graph(int max_edges, const std::function<void(const Graph &)> & visit);

/// All bipartite graphs (possibly disconnected) with exactly `edges` edges,
/// no isolated vertices and every degree >= min_degree, one per isomorphism
/// class. The bipartition is attached with rows as side X.
std::vector<Graph> bipartite_graphs(int edges, int min_degree);

} // namespace sec
