#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace sec {

/// Undirected edge stored with u < v. Vertices are 0-based inside the
/// library; the text formats shift them to 1-based labels.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    int other(int w) const { return w == u ? v : u; }
    bool touches(int w) const { return w == u || w == v; }

    auto operator<=>(const Edge &) const = default;
};

enum class Side : std::uint8_t { X = 0, Y = 1 };

/// Finite simple graph with a canonical (sorted) edge list, so an edge index
/// names the same edge across runs. An optional bipartition assigns every
/// vertex a side and is checked against every edge on construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count, std::vector<Edge> edges = {},
                   std::optional<std::vector<Side>> sides = std::nullopt);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge> & edges() const { return edges_; }
    const Edge & edge(int index) const { return edges_[index]; }

    /// Edge indices incident to v, ordered by neighbour.
    std::span<const int> incident(int v) const { return incident_[v]; }
    std::span<const int> neighbors(int v) const { return neighbors_[v]; }
    int degree(int v) const { return static_cast<int>(incident_[v].size()); }
    int min_degree() const;
    int max_degree() const;
    std::vector<int> degrees() const;

    std::optional<int> edge_index(int u, int v) const;
    bool adjacent(int u, int v) const { return edge_index(u, v).has_value(); }

    const std::optional<std::vector<Side>> & sides() const { return sides_; }
    bool has_bipartition() const { return sides_.has_value(); }
    Side side(int v) const { return (*sides_)[v]; }
    std::vector<int> side_vertices(Side s) const;

    Graph with_sides(std::vector<Side> sides) const;
    Graph without_sides() const;

    bool operator==(const Graph & other) const
    {
        return n_ == other.n_ && edges_ == other.edges_ && sides_ == other.sides_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::optional<std::vector<Side>> sides_;
    std::vector<std::vector<int>> incident_;
    std::vector<std::vector<int>> neighbors_;
};

/// [S, S̄] with S given as a sorted vertex list.
struct EdgeCut {
    std::vector<int> side;
    std::vector<int> cut_edges;
    int size = 0;
    bool nontrivial = false;
};

struct EdgeConnectivity {
    int value = 0;
    EdgeCut witness;
};

inline constexpr int infinite_girth = std::numeric_limits<int>::max();

std::optional<std::vector<Side>> is_bipartite(const Graph & g);
/// Returns g with a bipartition attached; throws NotBipartite otherwise.
Graph ensure_bipartition(const Graph & g);

std::vector<int> connected_components(const Graph & g, std::vector<int> * component_of = nullptr);
int component_count(const Graph & g);
bool is_connected(const Graph & g);

std::vector<int> bridges(const Graph & g);
bool is_bridgeless(const Graph & g);

EdgeCut make_cut(const Graph & g, std::vector<int> side);
EdgeConnectivity edge_connectivity(const Graph & g);
/// Every edge set of size κ'(g) whose removal disconnects g.
std::vector<std::vector<int>> minimum_cuts(const Graph & g, int connectivity);

int girth(const Graph & g);

/// Disjoint union plus all cross edges; g1's vertices keep their numbers,
/// g2's vertex v becomes |V(g1)| + v.
Graph join(const Graph & g1, const Graph & g2);
/// Vertex (u, v) is numbered u * |V(h)| + v.
Graph cartesian_product(const Graph & g, const Graph & h);
/// Vertex (u, v) is numbered u * |V(h)| + v.
Graph lexicographic_product(const Graph & g, const Graph & h);
/// Replaces edge e = uv (u < v) by the path u, n, n+1, ..., n+t-1, v.
/// The bipartition survives only when t is even.
Graph subdivide_edge(const Graph & g, Edge e, int t);
Graph remove_edges(const Graph & g, std::span<const int> edge_indices);

} // namespace sec
