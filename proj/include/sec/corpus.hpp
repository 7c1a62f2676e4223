#pragma once

#include "sec/coloring.hpp"
#include "sec/graph.hpp"

#include <string>
#include <vector>

// Fixed collections of colored graphs shared by the acceptance checks,
// the tests and `sectool repro`.
namespace sec::corpus {

struct Colored {
    std::string name;
    Graph graph;
    SimultaneousColoring coloring;
};

/// μ-SE colored graphs on at most 10 vertices, mu in {2, 3}.
std::vector<Colored> operands(int mu);

/// Regular operands (name, graph) and the 1-factorable ones.
std::vector<std::pair<std::string, Graph>> regular_graphs();
std::vector<std::pair<std::string, Graph>> one_factorable_graphs();

/// Every output of the construction matrix: wheels, complete bipartite
/// graphs, complete graphs, joins, both products, subdivisions.
std::vector<Colored> construction_matrix();

/// Operands of both μ plus the family constructions, without the pairwise
/// products; used for the round-trip checks.
std::vector<Colored> round_trip_corpus();

} // namespace sec::corpus
