#pragma once

#include "sec/coloring.hpp"
#include "sec/error.hpp"
#include "sec/graph.hpp"

#include <optional>
#include <vector>

namespace sec {

/// Cyclic vertex sequence v_1..v_k (k >= 3, distinct, consecutive adjacent).
using Circuit = std::vector<int>;

/// Edge indices of a circuit in traversal order (edge k joins c[k] and
/// c[k+1 mod len]); nullopt when c is not a circuit of g.
std::optional<std::vector<int>> circuit_edges(const Graph & g, const Circuit & c);

/// True when every vertex has even degree in the edge subset.
bool is_cycle(const Graph & g, const std::vector<int> & edge_indices);

struct CycleDoubleCover {
    std::vector<Circuit> circuits;
    /// class label (positive) per circuit
    std::optional<std::vector<int>> classes;
    /// circuit_colorings[i][k] in {1, 2} colors edge k of circuit i
    std::optional<std::vector<std::vector<int>>> circuit_colorings;
};

struct OrientedCDC {
    /// each circuit is traversed c[0] -> c[1] -> ... -> c[0]
    std::vector<Circuit> directed_circuits;
};

Report verify_cdc(const Graph & g, const CycleDoubleCover & cover);
Report verify_ocdc(const Graph & g, const OrientedCDC & cover);

/// The three conditions a CDC built from a 2-SE coloring satisfies.
struct SeCdcProperties {
    bool even_circuits = false;
    bool enough_classes = false;
    bool edges_two_coloured = false;

    bool all() const { return even_circuits && enough_classes && edges_two_coloured; }
};

SeCdcProperties se_cdc_properties(const Graph & g, const CycleDoubleCover & cover);

/// Class j collects the circuits of f_1^j ∪ f_2^j, each 2-colored by which
/// coordinate carries j.
CycleDoubleCover se_to_cdc(const Graph & g, const SimultaneousColoring & sc);

/// Chooses one alternating 2-coloring per circuit so that the two circuits
/// through every edge disagree; nullopt when no such choice exists.
std::optional<SimultaneousColoring> cdc_to_se(const Graph & g, const CycleDoubleCover & cover);

/// Same cover with one class per circuit.
CycleDoubleCover with_singleton_classes(CycleDoubleCover cover);
/// Greedily merges vertex-disjoint circuits until at most `target` classes
/// remain (or no merge is possible).
CycleDoubleCover with_merged_classes(const Graph & g, CycleDoubleCover cover, int target);

OrientedCDC se_to_ocdc_bipartite(const Graph & g, const SimultaneousColoring & sc);
SimultaneousColoring ocdc_to_se_bipartite(const Graph & g, const OrientedCDC & cover);

/// Exhaustive search for an OCDC whose members are circuits of length >= 3.
/// Budget exhaustion surfaces as SearchBudgetExceeded.
std::optional<OrientedCDC> find_ocdc(const Graph & g, SearchBudget & budget);

/// All circuits of g of even length, each starting at its least vertex and
/// listed with c[1] < c.back(); sorted lexicographically.
std::vector<Circuit> even_circuits(const Graph & g);

/// Every CDC of g by even circuits, deduplicated as multisets and, when
/// `up_to_automorphism`, under Aut(g). Throws LimitExceeded past `limit`.
std::vector<CycleDoubleCover> enumerate_even_cdcs(const Graph & g, int limit, SearchBudget & budget,
                                                  bool up_to_automorphism = true);

/// Partition of E(g) into even circuits; g must have all degrees even.
std::optional<std::vector<Circuit>> even_circuit_decomposition(const Graph & g, SearchBudget & budget);

/// Orientation is relative to the stored edge (u < v): forward[e] means u -> v.
struct IntegerFlow {
    std::vector<bool> forward;
    std::vector<int> weight;
};

Report verify_nzf(const Graph & g, const IntegerFlow & flow, int k);
/// Net outflow of `vertices` (as a set) under the flow.
long long boundary_flow(const Graph & g, const IntegerFlow & flow, const std::vector<int> & vertices);
std::optional<IntegerFlow> find_nzf(const Graph & g, int k, SearchBudget & budget);

/// Every edge lies on a circuit of length <= len.
bool short_circuit_cover_check(const Graph & g, int len);

} // namespace sec
