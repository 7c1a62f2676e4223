#pragma once

#include "sec/graph.hpp"

#include <vector>

// Named graphs used by the constructions, the tests and the CLI. Numbering is
// fixed so colorings built downstream are reproducible.
namespace sec::families {

Graph empty(int n);
Graph path(int n);
/// v_i ~ v_{i+1 mod n}.
Graph cycle(int n);
Graph complete(int n);
/// X = 0..n-1, Y = n..n+m-1, bipartition attached.
Graph complete_bipartite(int n, int m);
/// Vertices are bit strings, bipartition by parity.
Graph hypercube(int d);
/// Outer 5-circuit 0..4, spokes i ~ i+5, inner pentagram i+5 ~ (i+2 mod 5)+5.
Graph petersen();
/// Incidence graph of the Fano plane: points 0..6, lines 7..13.
Graph heawood();
/// Rim v_1..v_n are vertices 0..n-1, hub is vertex n (join of C_n and K_1).
Graph wheel(int n);
Graph circulant(int n, const std::vector<int> & jumps);
/// G □ K2 with (u, b) numbered 2u + b.
Graph prism(const Graph & base);
/// The 8-vertex bipartite graph of the volume-10 bitrade:
/// x1..x4 = 0..3, y1..y4 = 4..7.
Graph volume_ten_bitrade_graph();
/// K_{4,4} minus {x_i y_i : i <= 3}, i.e. x_i y_j for i != j plus x4 y4.
Graph non_three_se_graph();

} // namespace sec::families
