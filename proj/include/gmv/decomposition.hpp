#pragma once

// Decomposition certificates: H = (A + B) u C where C holds the edges
// crossing a vertex bipartition V = V_A u V_B.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gmv/gm.hpp"
#include "gmv/graph.hpp"

namespace gmv {

struct Cut {
  Graph h;
  VertexMask va = 0;  // V_A; V_B is the rest
  Graph a;            // induced on V_A, relabeled
  Graph b;            // induced on V_B, relabeled
  Graph c;            // on all of V, cross edges only

  VertexMask vb() const noexcept { return h.all_vertices() & ~va; }
};

/// Throws std::invalid_argument unless both sides are nonempty.
Cut make_cut(const Graph& h, VertexMask va);

/// Conditions that need only degree sequences.
struct CutConditions {
  int m = 0;  // max degree of C; 0 when C has no edges
  bool cond_cle = false;    // d^T_i(C) <= min(d^T_i(A), d^T_i(B)) for all i
  bool cond_order = false;  // d^T_1(B) <= d^T_m(A), vacuous for m = 0
  bool cond_dt = false;     // d^T(H) dominates sort(d^T(A), d^T(B)) + d^T(C)
};

struct HypothesisReport {
  bool gm_a = false;
  bool gm_b = false;
  bool gm_c = false;
  bool cond_cle = false;
  bool cond_order = false;
  bool cond_dt = false;
  int m = 0;
  bool theorem_applies = false;
};

CutConditions cut_conditions(const Cut& cut);
HypothesisReport check_abc(const Cut& cut, double tolerance = kDefaultTolerance);

/// d^T(H) dominates sort(d^T(A) + d^T(B), d^T(C)); true for every cut.
bool claim_cgc_check(const Cut& cut);

/// V_A masks with vertex 0 in V_A, increasing; 2^(n-1) - 1 of them.
/// Throws std::invalid_argument for n < 2 or n > 24.
std::vector<VertexMask> enumerate_cuts(const Graph& h);

enum class DecomposeMode { theorem, dt };
std::string_view to_string(DecomposeMode mode);

struct Decomposition {
  Cut cut;
  HypothesisReport report;
};

/// First qualifying cut; for each mask the orientation A = mask side is
/// tried before the swapped one.
std::optional<Decomposition> decompose_search(const Graph& h, DecomposeMode mode,
                                              double tolerance = kDefaultTolerance);

/// Decomposable under `mode`, or its complement is, or a degree shortcut
/// applies to either.
bool closure_decomposable(const Graph& h, DecomposeMode mode, double tolerance = kDefaultTolerance);

struct CensusModeResult {
  DecomposeMode mode = DecomposeMode::theorem;
  bool closure = false;
  std::size_t decomposable = 0;
  std::vector<std::string> residual;  // graph6 of classes not decomposable
  std::vector<VertexMask> cut_masks;  // per class, 0 when none found
  bool residual_gm_pass = true;
};

struct CensusResult {
  int n = 0;
  std::size_t total_classes = 0;
  std::vector<std::string> classes;     // graph6, enumeration order
  std::vector<CensusModeResult> modes;  // theorem, dt, theorem+closure, dt+closure
};

CensusResult census(int n, double tolerance = kDefaultTolerance, unsigned workers = 1);
inline CensusResult census_six(double tolerance = kDefaultTolerance, unsigned workers = 1) {
  return census(6, tolerance, workers);
}

struct Certificate {
  enum class Kind { threshold_base, abc_node, direct_eigen };
  Kind kind = Kind::direct_eigen;
  Graph graph;
  VertexMask va = 0;                  // abc_node only
  std::vector<Certificate> children;  // abc_node: A, B, C
};

std::string_view to_string(Certificate::Kind kind);

/// Diameter induction: stars are threshold leaves, otherwise cut the first
/// internal edge and recurse. Throws std::invalid_argument for non-trees.
Certificate tree_certificate(const Graph& t);

/// Re-derives every node. Throws std::invalid_argument on a malformed tree.
bool verify_certificate(const Certificate& cert, double tolerance = kDefaultTolerance);

/// Every leaf is a threshold base.
bool all_leaves_threshold(const Certificate& cert);

/// C = k disjoint edges joining vertex i of A to vertex i of B. Returns the
/// simplified condition (A and B each have >= 2k non-isolated vertices) and
/// throws std::logic_error if it disagrees with the general conditions.
bool disjoint_edge_case_check(const Graph& a, const Graph& b, int k);

}  // namespace gmv
