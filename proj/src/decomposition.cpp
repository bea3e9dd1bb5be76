#include "gmv/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "gmv/enumeration.hpp"

namespace gmv {

Cut make_cut(const Graph& h, VertexMask va) {
  const VertexMask all = h.all_vertices();
  if (va == 0 || (va & ~all) || va == all)
    throw std::invalid_argument("cut sides must be nonempty and cover V");
  Cut cut;
  cut.h = h;
  cut.va = va;
  cut.a = induced_subgraph(h, va);
  cut.b = induced_subgraph(h, all & ~va);
  cut.c = Graph(h.order());
  for (auto [i, j] : h.edges()) {
    const bool ia = (va >> i) & 1U, ja = (va >> j) & 1U;
    if (ia != ja) cut.c.add_edge(i, j);
  }
  return cut;
}

CutConditions cut_conditions(const Cut& cut) {
  const Partition dta = conjugate(degree_sequence(cut.a));
  const Partition dtb = conjugate(degree_sequence(cut.b));
  const Partition dtc = conjugate(degree_sequence(cut.c));
  const Partition dth = conjugate(degree_sequence(cut.h));

  CutConditions cond;
  cond.m = static_cast<int>(dtc.size());
  cond.cond_cle = true;
  for (std::size_t i = 0; i < dtc.size(); ++i)
    if (dtc[i] > std::min(dta[i], dtb[i])) cond.cond_cle = false;
  cond.cond_order = cond.m == 0 || dtb[0] <= dta[static_cast<std::size_t>(cond.m - 1)];
  cond.cond_dt = majorizes(dth, sorted_concat(dta, dtb) + dtc).holds;
  return cond;
}

HypothesisReport check_abc(const Cut& cut, double tolerance) {
  const CutConditions cond = cut_conditions(cut);
  HypothesisReport r;
  r.m = cond.m;
  r.cond_cle = cond.cond_cle;
  r.cond_order = cond.cond_order;
  r.cond_dt = cond.cond_dt;
  r.gm_a = gm_check(cut.a, tolerance).holds;
  r.gm_b = gm_check(cut.b, tolerance).holds;
  r.gm_c = gm_check(cut.c, tolerance).holds;
  r.theorem_applies = r.gm_a && r.gm_b && r.gm_c && r.cond_cle && r.cond_order;
  return r;
}

bool claim_cgc_check(const Cut& cut) {
  const Partition dtg = conjugate(degree_sequence(cut.a)) + conjugate(degree_sequence(cut.b));
  const Partition dtc = conjugate(degree_sequence(cut.c));
  const Partition dth = conjugate(degree_sequence(cut.h));
  return majorizes(dth, sorted_concat(dtg, dtc)).holds;
}

std::vector<VertexMask> enumerate_cuts(const Graph& h) {
  const int n = h.order();
  if (n < 2 || n > 24) throw std::invalid_argument("cut enumeration needs 2 <= n <= 24");
  const VertexMask all = h.all_vertices();
  std::vector<VertexMask> out;
  out.reserve((std::size_t{1} << (n - 1)) - 1);
  for (VertexMask va = 1; va < all; va += 2) out.push_back(va);
  return out;
}

std::string_view to_string(DecomposeMode mode) {
  return mode == DecomposeMode::theorem ? "theorem" : "dt";
}

std::optional<Decomposition> decompose_search(const Graph& h, DecomposeMode mode, double tolerance) {
  if (h.order() < 2) return std::nullopt;
  const VertexMask all = h.all_vertices();
  for (VertexMask mask : enumerate_cuts(h)) {
    for (VertexMask va : {mask, all & ~mask}) {
      Cut cut = make_cut(h, va);
      const CutConditions cond = cut_conditions(cut);
      const bool combinatorial =
          mode == DecomposeMode::theorem ? cond.cond_cle && cond.cond_order : cond.cond_dt;
      if (!combinatorial) continue;
      HypothesisReport report = check_abc(cut, tolerance);
      const bool ok = mode == DecomposeMode::theorem
                          ? report.theorem_applies
                          : report.gm_a && report.gm_b && report.gm_c && report.cond_dt;
      if (ok) return Decomposition{std::move(cut), report};
    }
  }
  return std::nullopt;
}

bool closure_decomposable(const Graph& h, DecomposeMode mode, double tolerance) {
  return shortcut_check(h) != Shortcut::none || decompose_search(h, mode, tolerance) ||
         decompose_search(complement(h), mode, tolerance);
}

CensusResult census(int n, double tolerance, unsigned workers) {
  const std::vector<Graph> classes = all_graphs(n);
  CensusResult result;
  result.n = n;
  result.total_classes = classes.size();
  for (const Graph& g : classes) result.classes.push_back(write_graph6(g));

  struct Row {
    VertexMask cut[2] = {0, 0};
    bool found[2] = {false, false};
    bool closure[2] = {false, false};
    bool gm = false;
  };
  std::vector<Row> rows(classes.size());
  parallel_for(classes.size(), workers, [&](std::size_t i) {
    const Graph& g = classes[i];
    Row& row = rows[i];
    const bool shortcut = shortcut_check(g) != Shortcut::none;
    const Graph gc = complement(g);
    for (int m = 0; m < 2; ++m) {
      const auto mode = m == 0 ? DecomposeMode::theorem : DecomposeMode::dt;
      if (auto d = decompose_search(g, mode, tolerance)) {
        row.found[m] = true;
        row.cut[m] = d->cut.va;
      }
      row.closure[m] = row.found[m] || shortcut || decompose_search(gc, mode, tolerance).has_value();
    }
    row.gm = gm_check(g, tolerance).holds;
  });

  for (int closure = 0; closure < 2; ++closure)
    for (int m = 0; m < 2; ++m) {
      CensusModeResult mr;
      mr.mode = m == 0 ? DecomposeMode::theorem : DecomposeMode::dt;
      mr.closure = closure == 1;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const bool dec = closure ? rows[i].closure[m] : rows[i].found[m];
        mr.cut_masks.push_back(rows[i].found[m] ? rows[i].cut[m] : 0);
        if (dec) {
          ++mr.decomposable;
        } else {
          mr.residual.push_back(result.classes[i]);
          mr.residual_gm_pass = mr.residual_gm_pass && rows[i].gm;
        }
      }
      result.modes.push_back(std::move(mr));
    }
  return result;
}

std::string_view to_string(Certificate::Kind kind) {
  switch (kind) {
    case Certificate::Kind::threshold_base: return "threshold_base";
    case Certificate::Kind::abc_node: return "abc_node";
    case Certificate::Kind::direct_eigen: return "direct_eigen";
  }
  return "direct_eigen";
}

Certificate tree_certificate(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("tree certificate needs a tree");
  if (*diameter(t) <= 2) return Certificate{Certificate::Kind::threshold_base, t, 0, {}};

  for (auto [i, j] : t.edges()) {
    if (t.degree(i) < 2 || t.degree(j) < 2) continue;
    Graph split = t;
    split.remove_edge(i, j);
    const VertexMask side_i = component_mask(split, i);
    const VertexMask side_j = t.all_vertices() & ~side_i;
    // The larger component plays A so that d^T_1(B) <= d^T_1(A).
    const VertexMask va = std::popcount(side_j) > std::popcount(side_i) ? side_j : side_i;
    const Cut cut = make_cut(t, va);
    Certificate node{Certificate::Kind::abc_node, t, va, {}};
    node.children.push_back(tree_certificate(cut.a));
    node.children.push_back(tree_certificate(cut.b));
    node.children.push_back(Certificate{Certificate::Kind::threshold_base, cut.c, 0, {}});
    return node;
  }
  throw std::logic_error("tree of diameter > 2 without an internal edge");
}

bool verify_certificate(const Certificate& cert, double tolerance) {
  switch (cert.kind) {
    case Certificate::Kind::threshold_base: {
      if (!cert.children.empty()) throw std::invalid_argument("threshold leaf with children");
      const GmReport r = gm_check(cert.graph, tolerance);
      return r.holds && r.equality;
    }
    case Certificate::Kind::direct_eigen:
      if (!cert.children.empty()) throw std::invalid_argument("eigen leaf with children");
      return gm_check(cert.graph, tolerance).holds;
    case Certificate::Kind::abc_node: {
      if (cert.children.size() != 3) throw std::invalid_argument("abc node needs children A, B, C");
      const Cut cut = make_cut(cert.graph, cert.va);
      const CutConditions cond = cut_conditions(cut);
      bool ok = cond.cond_cle && cond.cond_order;
      ok = ok && cert.children[0].graph == cut.a && cert.children[1].graph == cut.b &&
           cert.children[2].graph == cut.c;
      for (const Certificate& child : cert.children) ok = verify_certificate(child, tolerance) && ok;
      return ok;
    }
  }
  throw std::invalid_argument("unknown certificate kind");
}

bool all_leaves_threshold(const Certificate& cert) {
  if (cert.children.empty()) return cert.kind == Certificate::Kind::threshold_base;
  return std::all_of(cert.children.begin(), cert.children.end(), all_leaves_threshold);
}

bool disjoint_edge_case_check(const Graph& a, const Graph& b, int k) {
  if (k < 0 || k > a.order() || k > b.order())
    throw std::invalid_argument("need 0 <= k <= min(|V_A|, |V_B|)");
  Graph h = disjoint_sum(a, b);
  for (int i = 0; i < k; ++i) h.add_edge(i, a.order() + i);

  auto non_isolated = [](const Graph& g) {
    return g.order() - std::popcount(isolated_vertices(g));
  };
  const bool simplified = non_isolated(a) >= 2 * k && non_isolated(b) >= 2 * k;

  const VertexMask va = a.all_vertices();
  bool general = false;
  for (VertexMask side : {va, h.all_vertices() & ~va}) {
    const CutConditions cond = cut_conditions(make_cut(h, side));
    general = general || (cond.cond_cle && cond.cond_order);
  }
  if (general != simplified)
    throw std::logic_error("disjoint-edge condition disagrees with the general conditions");
  return simplified;
}

}  // namespace gmv
