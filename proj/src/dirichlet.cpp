#include "gmv/dirichlet.hpp"

#include <bit>
#include <stdexcept>

namespace gmv {

VertexPair::VertexPair(Graph g, VertexMask d) : graph(std::move(g)), deleted(d) {
  if (deleted & ~graph.all_vertices()) throw std::out_of_range("deleted vertex outside the graph");
}

IntMatrix dirichlet_laplacian_int(const VertexPair& p) {
  const std::vector<int> u = mask_vertices(p.undeleted());
  if (u.empty()) throw std::invalid_argument("pair has no undeleted vertices");
  const IntMatrix full = laplacian(p.graph);
  IntMatrix out(u.size(), u.size(), 0);
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t c = 0; c < u.size(); ++c)
      out(r, c) = full(static_cast<std::size_t>(u[r]), static_cast<std::size_t>(u[c]));
  return out;
}

SymMatrix dirichlet_laplacian(const VertexPair& p) {
  return SymMatrix::from_int(dirichlet_laplacian_int(p));
}

Spectrum pair_spectrum(const VertexPair& p) { return psd_spectrum(dirichlet_laplacian(p)); }

Partition pair_degree_sequence(const VertexPair& p) {
  std::vector<int> d(static_cast<std::size_t>(p.graph.order()));
  for (int v = 0; v < p.graph.order(); ++v)
    d[static_cast<std::size_t>(v)] = std::popcount(p.graph.neighbors(v) & p.undeleted());
  return Partition::from_unsorted(std::move(d));
}

std::vector<int> boundary_degrees(const VertexPair& p) {
  std::vector<int> b;
  for (int u : mask_vertices(p.undeleted())) b.push_back(std::popcount(p.graph.neighbors(u) & p.deleted));
  return b;
}

std::vector<int> deleted_degrees(const VertexPair& p) {
  std::vector<int> a;
  for (int d : mask_vertices(p.deleted)) a.push_back(std::popcount(p.graph.neighbors(d) & p.undeleted()));
  return a;
}

IntMatrix cross_incidence(const VertexPair& p) {
  const std::vector<int> d = mask_vertices(p.deleted);
  const std::vector<int> u = mask_vertices(p.undeleted());
  IntMatrix m(d.size(), u.size(), 0);
  for (std::size_t r = 0; r < d.size(); ++r)
    for (std::size_t c = 0; c < u.size(); ++c) m(r, c) = p.graph.has_edge(d[r], u[c]) ? 1 : 0;
  return m;
}

GmReport pair_gm_check(const VertexPair& p, double tolerance) {
  const IntMatrix l = dirichlet_laplacian_int(p);
  std::int64_t trace = 0;
  for (std::size_t i = 0; i < l.rows; ++i) trace += l(i, i);
  const Spectrum s = psd_spectrum(SymMatrix::from_int(l));
  GmReport report = compare_spectrum(s.values, conjugate(pair_degree_sequence(p)), trace, tolerance);
  report.graph6 = write_graph6(p.graph);
  report.shortcut = p.deleted == 0 ? shortcut_check(p.graph) : Shortcut::none;
  return report;
}

namespace {

struct PairOutputs {
  std::vector<double> spectrum;
  Partition degrees;
};

PairOutputs pair_outputs(const VertexPair& p) {
  return {pair_spectrum(p).values.values, pair_degree_sequence(p)};
}

}  // namespace

ReductionChainReport reduction_chain_check(const VertexPair& p, double tolerance) {
  const VertexMask u_mask = p.undeleted();
  if (u_mask == 0) throw std::invalid_argument("pair has no undeleted vertices");

  ReductionChainReport r;
  r.graph6 = write_graph6(p.graph);
  r.deleted = p.deleted;

  const Graph gu = induced_subgraph(p.graph, u_mask);
  const std::vector<int> b = boundary_degrees(p);
  const Partition a = Partition::from_unsorted(deleted_degrees(p));

  const IntMatrix l_pair = dirichlet_laplacian_int(p);
  IntMatrix l_sum = laplacian(gu);
  for (std::size_t i = 0; i < b.size(); ++i) l_sum(i, i) += b[i];
  r.laplacian_identity = l_pair == l_sum;

  const Spectrum s_pair = psd_spectrum(SymMatrix::from_int(l_pair));
  const Spectrum s_u = laplacian_spectrum(gu);
  const RealSeq b_sorted = RealSeq::from_partition(Partition::from_unsorted(b));
  r.link1 = majorizes(add_sorted(s_u.values, b_sorted), s_pair.values, tolerance).holds;

  r.link2 = gale_ryser_check(cross_incidence(p)).holds;
  r.link3 = gm_check(gu, tolerance).holds;
  r.final = pair_gm_check(p, tolerance).holds;
  r.identity_check =
      conjugate(pair_degree_sequence(p)) == conjugate(degree_sequence(gu)) + conjugate(a);

  Graph stripped = p.graph;
  for (auto [i, j] : p.graph.edges())
    if (((p.deleted >> i) & 1U) && ((p.deleted >> j) & 1U)) stripped.remove_edge(i, j);
  const PairOutputs before = pair_outputs(p);
  const PairOutputs after = pair_outputs(VertexPair(stripped, p.deleted));
  r.deleted_edges_irrelevant = before.spectrum == after.spectrum && before.degrees == after.degrees;
  return r;
}

std::vector<GmReport> single_deletion_reports(const Graph& g, double tolerance) {
  std::vector<GmReport> out;
  if (g.order() < 2) return out;
  for (int v = 0; v < g.order(); ++v)
    out.push_back(pair_gm_check(VertexPair(g, VertexMask{1} << v), tolerance));
  return out;
}

}  // namespace gmv
