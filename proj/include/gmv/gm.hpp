#pragma once

// Grone-Merris verdicts: is the Laplacian spectrum majorized by the
// conjugate degree sequence?

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gmv/graph.hpp"
#include "gmv/partition.hpp"
#include "gmv/spectra.hpp"

namespace gmv {

/// Sufficient conditions for GM that need no eigensolve.
enum class Shortcut { none, regular, nearly_regular, max_degree_le_3, complement_reduced };

std::string_view to_string(Shortcut s);

struct GmReport {
  std::string graph6;
  bool holds = false;
  /// max_i |lambda_i - d^T_i| <= tolerance.
  bool equality = false;
  std::vector<double> prefix_margins;
  /// 1-based prefix lengths whose margin is within tolerance of zero.
  std::vector<std::size_t> tight_prefixes;
  Shortcut shortcut = Shortcut::none;

  // Not serialized in the JSON report; kept for text output and callers.
  RealSeq spectrum;
  Partition conjugate_degrees;
  std::optional<std::size_t> first_violation;
};

/// Compares a spectrum against a conjugate partition. The total is checked
/// by the exact integer identity trace == sum(conjugate), passed as
/// `exact_trace`; prefixes use `tolerance`.
GmReport compare_spectrum(const RealSeq& spectrum, const Partition& conjugate_degrees,
                          std::int64_t exact_trace, double tolerance);

GmReport gm_check(const Graph& g, double tolerance = kDefaultTolerance);

/// lambda_1 <= d^T_1 and lambda_1 + lambda_2 <= d^T_1 + d^T_2, after
/// stripping isolated vertices.
std::pair<bool, bool> first_two_inequalities(const Graph& g, double tolerance = kDefaultTolerance);

/// All degrees in {k-1, k} for some k.
bool is_nearly_regular(const Graph& g);
Shortcut shortcut_check(const Graph& g);

/// Whichever of g and its complement has fewer edges; ties keep g.
Graph complement_reduce(const Graph& g);

}  // namespace gmv
