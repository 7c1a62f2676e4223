#pragma once

#include "sec/coloring.hpp"
#include "sec/factorization.hpp"
#include "sec/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

// Explicit μ-SE colorings. Every builder verifies its output before
// returning and throws std::logic_error if that check fails.
namespace sec {

/// Coordinate t colors factor j (1-based) with ((j - 1 + t) mod r) + 1.
SimultaneousColoring color_with_factorization(const Graph & g, const OneFactorization & f, int mu);
SimultaneousColoring color_one_factorable(const Graph & g, int mu);

/// Color of x_i y_j (0-based) in coordinate t of the K_{n,m} coloring.
int complete_bipartite_color(int n, int m, int t, int i, int j);
/// On families::complete_bipartite(n, m) with max(n, m) colors.
SimultaneousColoring color_complete_bipartite(int n, int m, int mu);

/// On join(g1, g2). The K_{n1,n2} bundle is shifted past both inputs' colors.
SimultaneousColoring color_join(const Graph & g1, const SimultaneousColoring & sc1, const Graph & g2,
                                const SimultaneousColoring & sc2);
/// On cartesian_product(g, h): g-edges keep scg, h-edges get sch shifted by
/// scg.num_colors.
SimultaneousColoring color_cartesian_sum(const Graph & g, const SimultaneousColoring & scg, const Graph & h,
                                         const SimultaneousColoring & sch);
/// On cartesian_product(g, h) with r + s colors, g r-regular, h s-regular
/// and 1-factorable.
SimultaneousColoring color_cartesian_regular(const Graph & g, const Graph & h, int mu);
/// On lexicographic_product(g, h).
SimultaneousColoring color_lexicographic(const Graph & g, const Graph & h, const SimultaneousColoring & sch);
/// On families::wheel(n), 2 coordinates, n colors.
SimultaneousColoring color_wheel(int n);

/// Outcome of checking one of the embedded K7 / K9 tables.
struct TableCheck {
    SimultaneousColoring printed;
    Report report;
    /// one line per offending entry; empty when the table verifies
    std::vector<std::string> discrepancies;
};

/// n in {7, 9}; the 3-coordinate table on families::complete(n).
TableCheck check_complete_table(int n);

/// Every violated condition of a μ-SE coloring, one line each.
std::vector<std::string> coloring_violations(const Graph & g, const SimultaneousColoring & sc);

/// μ-SE coloring of K_n. Empty for n in {2, 3, 5}. Odd n needs mu in {2, 3};
/// even n accepts mu <= n - 1.
std::optional<SimultaneousColoring> color_complete(int n, int mu);

/// Replaces edge e by a path with 2k inner vertices (see subdivide_edge)
/// colored a, b, a, ... / b, a, b, ... where (a, b) are e's colors.
std::pair<Graph, SimultaneousColoring> subdivide_coloring(const Graph & g, const SimultaneousColoring & sc, Edge e,
                                                          int k);

/// 2-SE coloring from an even Hamiltonian circuit whose complement is
/// bipartite with an oriented cycle double cover.
SimultaneousColoring color_from_hamiltonian(const Graph & g, const std::vector<int> & circuit, SearchBudget & budget);
SimultaneousColoring color_from_hamiltonian(const Graph & g, const std::vector<int> & circuit);

} // namespace sec
