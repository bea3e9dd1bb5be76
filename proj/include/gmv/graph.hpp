#pragma once

// Simple undirected graphs on at most 64 labeled vertices, their matrices,
// constructors, combination operators and the graph6 / edge-list formats.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gmv/partition.hpp"

namespace gmv {

using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxCanonicalVertices = 10;

class Graph {
public:
  Graph() = default;
  /// Edgeless graph on n vertices. Throws std::out_of_range if n > 64.
  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<int, int>> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept;

  bool has_edge(int i, int j) const;
  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  /// Neighbors of v as a bitmask.
  VertexMask neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const;
  VertexMask all_vertices() const noexcept;

  /// Edges (i, j), i < j, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexMask> adj_;
};

enum class Family { path, cycle, complete, star, empty };

Partition degree_sequence(const Graph& g);
/// Degrees in vertex order (unsorted).
std::vector<int> degrees(const Graph& g);
int max_degree(const Graph& g);

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix laplacian(const Graph& g);
/// n x m signed incidence; edge columns in lexicographic order, the smaller
/// endpoint is the tail (-1) and the larger the head (+1).
IntMatrix oriented_incidence(const Graph& g);
IntMatrix multiply_transpose(const IntMatrix& m);  // m * m^T

Graph complement(const Graph& g);
Graph disjoint_sum(const Graph& a, const Graph& b);
/// Throws std::invalid_argument on a vertex-count mismatch, or when
/// `require_disjoint` is set and the edge sets overlap.
Graph edge_union(const Graph& g, const Graph& h, bool require_disjoint = false);
/// Subgraph induced by `vertices`, relabeled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph induced_subgraph(const Graph& g, VertexMask vertices);
/// Vertices of a mask in increasing order.
std::vector<int> mask_vertices(VertexMask mask);

/// Bit 0 adds an isolated vertex, bit 1 a dominating vertex.
Graph threshold_graph(std::span<const int> creation);
/// Creation sequence if g is a threshold graph.
std::optional<std::vector<int>> threshold_creation_sequence(const Graph& g);
bool is_threshold(const Graph& g);

Graph tree_from_prufer(std::span<const int> sequence);
Graph standard_family(Family kind, int n);

/// Vertices reachable from v.
VertexMask component_mask(const Graph& g, int v);
int component_count(const Graph& g);
bool is_connected(const Graph& g);
/// nullopt when disconnected.
std::optional<int> diameter(const Graph& g);
bool is_tree(const Graph& g);
VertexMask isolated_vertices(const Graph& g);

/// Applies `perm` (old vertex v -> new vertex perm[v]).
Graph relabel(const Graph& g, std::span<const int> perm);

/// graph6 of the canonical relabeling; equal iff isomorphic. n <= 10.
std::string canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// "n m" header followed by m lines "i j" (0-based).
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace gmv
