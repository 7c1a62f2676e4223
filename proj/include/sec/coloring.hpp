#pragma once

#include "sec/error.hpp"
#include "sec/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sec {

/// Colors are 1..num_colors, indexed by edge index of the host graph.
struct EdgeColoring {
    int num_colors = 0;
    std::vector<int> colors;
};

/// μ parallel edge colorings over one color set [num_colors];
/// colorings[t][e] is the color of edge e in coordinate t.
struct SimultaneousColoring {
    int mu = 0;
    int num_colors = 0;
    std::vector<std::vector<int>> colorings;

    int color(int coordinate, int edge) const { return colorings[coordinate][edge]; }
    EdgeColoring coordinate(int t) const { return {num_colors, colorings[t]}; }
    /// Highest color actually used.
    int used_colors() const;
    /// Keeps the first `keep` coordinates.
    SimultaneousColoring truncated(int keep) const;
};

/// Outcome of a verifier: `clause` names the failed condition, `message`
/// carries the witness. Empty clause means success.
struct Report {
    bool ok = true;
    std::string clause;
    std::string message;

    explicit operator bool() const { return ok; }

    static Report pass() { return {}; }
    static Report fail(std::string clause, std::string message) { return {false, std::move(clause), std::move(message)}; }
};

Report verify_proper(const Graph & g, const EdgeColoring & c);

/// Clauses: "shape", "mu-bound", "range", "proper", "palette", "distinct".
Report verify_simultaneous(const Graph & g, const SimultaneousColoring & sc);

/// Palette of v in coordinate t as a sorted color list.
std::vector<int> palette(const Graph & g, const SimultaneousColoring & sc, int t, int v);

/// Exact χ'(g) together with an optimal proper coloring.
EdgeColoring optimal_edge_coloring(const Graph & g, SearchBudget & budget);
int chromatic_index(const Graph & g, SearchBudget & budget);
int chromatic_index(const Graph & g);

/// Complete search for a μ-SE coloring with color set [colors].
std::optional<SimultaneousColoring> decide_mu_se(const Graph & g, int mu, int colors, SearchBudget & budget);
std::optional<SimultaneousColoring> decide_mu_se(const Graph & g, int mu, int colors);

/// Least l <= max_colors admitting a μ-SE coloring; nullopt means none up
/// to max_colors.
std::optional<int> se_chromatic_number(const Graph & g, int mu, int max_colors, SearchBudget & budget,
                                       SimultaneousColoring * witness = nullptr);

struct FilterResult {
    bool passes = true;
    std::vector<std::string> failed;
};

/// Necessary conditions on a minimal counterexample to the strong SE
/// conjecture: bipartite, bridgeless, 2-connected, δ=2 and Δ=3, no
/// nontrivial 2-edge cut, G-v bridgeless and N(u)∩N(w)={v} at every
/// degree-2 vertex v with N(v)={u,w}.
FilterResult counterexample_filter(const Graph & g);

/// |E(G)| >= k χ'(G) for a bridgeless 2-SE colorable graph of girth >= 2k-1.
bool check_girth_bound(const Graph & g, const SimultaneousColoring & sc, int k);

/// Builds per-edge color tuples into a SimultaneousColoring; `tuples[e]`
/// holds the μ colors of edge e.
SimultaneousColoring from_tuples(int mu, int num_colors, const std::vector<std::vector<int>> & tuples);

} // namespace sec
