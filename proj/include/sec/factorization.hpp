#pragma once

#include "sec/error.hpp"
#include "sec/graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sec {

/// Partition of E(G) into perfect matchings, each stored as edge indices.
struct OneFactorization {
    std::vector<std::vector<int>> factors;
};

/// Exact search for a proper edge coloring with colors 1..colors. Edges are
/// picked by fewest remaining options; new colors enter in increasing order.
std::optional<std::vector<int>> find_proper_edge_coloring(const Graph & g, int colors, SearchBudget & budget);

bool verify_one_factorization(const Graph & g, const OneFactorization & f, std::string * why = nullptr);

/// Closed forms for K_2l, K_n,n, Q_d and prisms G' □ K2 (numbered as
/// families::prism); exact Δ-edge-coloring otherwise. Throws NotRegular.
std::optional<OneFactorization> one_factorization(const Graph & g, SearchBudget & budget);
std::optional<OneFactorization> one_factorization(const Graph & g);

/// Circle method on families::complete(n), n even.
OneFactorization round_robin_factorization(int n);
/// x_i -> y_{i+t mod n} on families::complete_bipartite(n, n).
OneFactorization shifted_factorization(int n);
/// Dimension matchings on families::hypercube(d).
OneFactorization dimension_factorization(int d);
/// Factorization of families::prism(base) from a proper coloring of the
/// r-regular base with colors 1..r+1: factor i takes the color-i edges in
/// both layers plus the vertical edges at vertices missing color i.
OneFactorization prism_factorization(const Graph & base, std::span<const int> base_coloring);

OneFactorization factorization_from_coloring(const Graph & g, std::span<const int> coloring, int colors);

} // namespace sec
