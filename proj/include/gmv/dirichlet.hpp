#pragma once

// (edge, vertex) pairs: a graph with a set D of deleted boundary vertices.
// The Dirichlet Laplacian is the principal submatrix of L(G) on U = V \ D.

#include "gmv/gm.hpp"
#include "gmv/graph.hpp"
#include "gmv/spectra.hpp"

namespace gmv {

struct VertexPair {
  Graph graph;
  VertexMask deleted = 0;

  VertexPair() = default;
  /// Throws std::out_of_range if `deleted` names a vertex outside the graph.
  VertexPair(Graph g, VertexMask d);

  VertexMask undeleted() const noexcept { return graph.all_vertices() & ~deleted; }
};

/// Principal submatrix of the Laplacian on U, vertices in increasing order.
/// Throws std::invalid_argument if U is empty.
IntMatrix dirichlet_laplacian_int(const VertexPair& p);
SymMatrix dirichlet_laplacian(const VertexPair& p);

/// Spectrum of the Dirichlet Laplacian.
Spectrum pair_spectrum(const VertexPair& p);

/// d_v = number of undeleted neighbours, for every v in V (deleted ones
/// included).
Partition pair_degree_sequence(const VertexPair& p);

/// For each u in U (increasing), its number of deleted neighbours.
std::vector<int> boundary_degrees(const VertexPair& p);
/// For each d in D (increasing), its number of undeleted neighbours.
std::vector<int> deleted_degrees(const VertexPair& p);
/// |D| x |U| 0-1 incidence of the edges between D and U.
IntMatrix cross_incidence(const VertexPair& p);

GmReport pair_gm_check(const VertexPair& p, double tolerance = kDefaultTolerance);

struct ReductionChainReport {
  std::string graph6;
  VertexMask deleted = 0;
  bool link1 = false;  // s(E,D) majorized by s(G|_U) + b
  bool link2 = false;  // b majorized by a^T
  bool link3 = false;  // s(G|_U) majorized by d^T(G|_U)
  bool final = false;  // s(E,D) majorized by d^T(E,D)
  bool identity_check = false;  // d^T(E,D) == d^T(G|_U) + a^T
  bool laplacian_identity = false;  // L(E,D) == L(G|_U) + Diag(b)
  bool deleted_edges_irrelevant = false;
};

ReductionChainReport reduction_chain_check(const VertexPair& p, double tolerance = kDefaultTolerance);

/// Pair reports for every single-vertex deletion (G, {v}).
std::vector<GmReport> single_deletion_reports(const Graph& g, double tolerance = kDefaultTolerance);

}  // namespace gmv
