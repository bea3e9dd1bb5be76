#include "gmv/gm.hpp"

#include <algorithm>
#include <cmath>

namespace gmv {

std::string_view to_string(Shortcut s) {
  switch (s) {
    case Shortcut::none: return "none";
    case Shortcut::regular: return "regular";
    case Shortcut::nearly_regular: return "nearly_regular";
    case Shortcut::max_degree_le_3: return "max_degree_le_3";
    case Shortcut::complement_reduced: return "complement_reduced";
  }
  return "none";
}

GmReport compare_spectrum(const RealSeq& spectrum, const Partition& conjugate_degrees,
                          std::int64_t exact_trace, double tolerance) {
  const std::size_t n = std::max(spectrum.size(), conjugate_degrees.size());
  const RealSeq dt = RealSeq::from_partition(conjugate_degrees.padded(n));

  GmReport report;
  report.spectrum = spectrum;
  report.conjugate_degrees = conjugate_degrees;

  const MajorizationVerdict prefix = dominance_prefix(dt, spectrum, tolerance);
  report.prefix_margins = prefix.prefix_margins;
  report.first_violation = prefix.first_violation;
  const bool sum_ok = conjugate_degrees.sum() == exact_trace;
  report.holds = prefix.holds && sum_ok;
  if (!sum_ok && !report.first_violation) report.first_violation = n;

  double deviation = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lambda = i < spectrum.size() ? spectrum.values[i] : 0.0;
    deviation = std::max(deviation, std::abs(lambda - dt.values[i]));
  }
  report.equality = report.holds && deviation <= tolerance;

  for (std::size_t k = 0; k < report.prefix_margins.size(); ++k)
    if (report.prefix_margins[k] <= tolerance) report.tight_prefixes.push_back(k + 1);
  return report;
}

GmReport gm_check(const Graph& g, double tolerance) {
  const Spectrum spectrum = laplacian_spectrum(g);
  GmReport report = compare_spectrum(spectrum.values, conjugate(degree_sequence(g)),
                                     2 * static_cast<std::int64_t>(g.edge_count()), tolerance);
  report.graph6 = write_graph6(g);
  report.shortcut = shortcut_check(g);
  return report;
}

std::pair<bool, bool> first_two_inequalities(const Graph& g, double tolerance) {
  const VertexMask keep = g.all_vertices() & ~isolated_vertices(g);
  const Graph core = induced_subgraph(g, keep);
  const std::vector<double>& lambda = laplacian_spectrum(core).values.values;
  const Partition dt = conjugate(degree_sequence(core));
  auto at = [&](std::size_t i) { return i < lambda.size() ? lambda[i] : 0.0; };
  const bool first = at(0) <= dt[0] + tolerance;
  const bool second = at(0) + at(1) <= dt[0] + dt[1] + tolerance;
  return {first, second};
}

bool is_nearly_regular(const Graph& g) {
  if (g.order() == 0) return true;
  const std::vector<int> d = degrees(g);
  const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
  return *hi - *lo <= 1;
}

Shortcut shortcut_check(const Graph& g) {
  const std::vector<int> d = degrees(g);
  if (std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>{}) == d.end())
    return Shortcut::regular;
  if (is_nearly_regular(g)) return Shortcut::nearly_regular;
  if (max_degree(g) <= 3) return Shortcut::max_degree_le_3;
  const Graph c = complement(g);
  if (max_degree(c) <= 3 || is_nearly_regular(c)) return Shortcut::complement_reduced;
  return Shortcut::none;
}

Graph complement_reduce(const Graph& g) {
  Graph c = complement(g);
  return c.edge_count() < g.edge_count() ? c : g;
}

}  // namespace gmv
