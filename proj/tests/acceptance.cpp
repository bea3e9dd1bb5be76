// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gmv/decomposition.hpp"
#include "gmv/dirichlet.hpp"
#include "gmv/enumeration.hpp"
#include "gmv/report.hpp"

using namespace gmv;

namespace {

constexpr double kGmTol = 1e-7;
constexpr double kDualityTol = 2e-7;
constexpr double kTraceRel = 1e-8;
constexpr int kTrials = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failed = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s  %2d  %s: %s  (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
  if (!o.pass) ++failed;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RealSeq random_sorted(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return sort_desc(RealSeq(v, false));
}

RealMatrix random_psd(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> z(0.0, 1.0);
  const IntMatrix l = laplacian(random_graph(n, 0.5, rng()));
  std::vector<double> x(static_cast<std::size_t>(2 * n));
  for (double& e : x) e = z(rng);
  RealMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = l(i, j) + x[i] * x[j] + x[n + i] * x[n + j];
  return m;
}

RealMatrix add(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix s = a;
  for (std::size_t k = 0; k < s.data.size(); ++k) s.data[k] += b.data[k];
  return s;
}

Outcome census_criterion() {
  const CensusResult c = census_six(kGmTol, 1);
  bool all_gm = true;
  for (const Graph& g : all_graphs(6)) all_gm = all_gm && gm_check(g, kGmTol).holds;

  std::vector<const CensusModeResult*> reproducing;
  std::ostringstream detail;
  detail << c.total_classes << " classes, all GM " << (all_gm ? "yes" : "NO") << "; decomposable";
  for (const auto& m : c.modes) {
    detail << " " << mode_label(m) << "=" << m.decomposable;
    if (m.decomposable == kReferenceDecomposableSix) reproducing.push_back(&m);
  }
  bool pass = c.total_classes == 156 && all_gm && reproducing.size() == 1;
  if (reproducing.size() == 1) {
    const CensusModeResult& m = *reproducing.front();
    pass = pass && m.residual.size() == 10 && m.residual_gm_pass;
    detail << "; reproducing mode " << mode_label(m) << ", " << m.residual.size()
           << " residual, GM on residual " << (m.residual_gm_pass ? "pass" : "FAIL");
  } else {
    detail << "; " << reproducing.size() << " modes reproduce " << kReferenceDecomposableSix;
  }
  // discrepancy report for the modes that do not reproduce the figure
  std::fprintf(stderr, "census discrepancy report (n=6, reference %zu):\n", kReferenceDecomposableSix);
  for (const auto& m : c.modes) {
    if (m.decomposable == kReferenceDecomposableSix) continue;
    std::fprintf(stderr, "  %s: %zu decomposable, residual:", mode_label(m).c_str(), m.decomposable);
    for (const auto& g6 : m.residual) std::fprintf(stderr, " %s", g6.c_str());
    std::fprintf(stderr, "\n");
  }
  return {pass, detail.str()};
}

Outcome threshold_criterion() {
  double worst = 0.0;
  std::size_t count = 0;
  for (int n = 1; n <= 9; ++n) {
    for (std::uint32_t bits = 0; bits < (1U << (n - 1)); ++bits) {
      std::vector<int> creation(n, 0);
      for (int i = 1; i < n; ++i) creation[i] = static_cast<int>(bits >> (i - 1) & 1);
      const Graph g = threshold_graph(creation);
      const auto& lambda = laplacian_spectrum(g).values.values;
      const Partition dt = conjugate(degree_sequence(g));
      for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(lambda[i] - dt[i]));
      ++count;
    }
  }
  std::ostringstream d;
  d << count << " creation sequences n<=9, max |lambda_i - d^T_i| = " << worst;
  return {worst <= kGmTol, d.str()};
}

Outcome trees_criterion() {
  std::size_t count = 0, bad = 0;
  for (int n = 2; n <= 10; ++n)
    for (const Graph& t : all_trees(n)) {
      ++count;
      const Certificate cert = tree_certificate(t);
      if (!gm_check(t, kGmTol).holds || !verify_certificate(cert, kGmTol) || !all_leaves_threshold(cert)) ++bad;
    }
  std::ostringstream d;
  d << count << " trees n<=10, " << bad << " failing GM/certificate/leaf checks";
  return {bad == 0 && count == 200, d.str()};
}

Outcome duality_criterion() {
  std::mt19937_64 rng(1004);
  double worst = 0.0;
  std::size_t disagree = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::uniform_real_distribution<double> p(0.05, 0.95);
    const Graph g = random_graph(n, p(rng), rng());
    const Graph gc = complement(g);
    const auto& a = laplacian_spectrum(g).values.values;
    const auto& b = laplacian_spectrum(gc).values.values;
    for (int i = 0; i + 1 < n; ++i) worst = std::max(worst, std::abs(a[i] - (n - b[n - 2 - i])));
    if (gm_check(g, kGmTol).holds != gm_check(gc, kGmTol).holds) ++disagree;
  }
  std::ostringstream d;
  d << "500 random graphs n<=12, max duality error " << worst << ", verdict disagreements " << disagree;
  return {worst <= kDualityTol && disagree == 0, d.str()};
}

Outcome small_closure_criterion() {
  std::size_t count = 0, bad = 0;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs(n)) {
      ++count;
      const bool degree_ok = max_degree(g) <= 3 || max_degree(complement(g)) <= 3;
      if (!degree_ok || !gm_check(g, kGmTol).holds) ++bad;
    }
  std::ostringstream d;
  d << count << " classes n<=5, " << bad << " violating the degree observation or GM";
  return {bad == 0 && count == 52, d.str()};
}

Outcome properties_criterion() {
  std::mt19937_64 rng(1006);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  struct Tally {
    const char* name;
    int fails = 0;
    int exercised = 0;
  };
  Tally m1{"m1"}, fan{"fan"}, gr{"gale-ryser"}, xyp{"xyP"}, xyz{"xyz"}, ij{"ij"}, xyxy{"xyxy"},
      cgc{"claim"}, chain{"abc-chain"};

  for (int t = 0; t < kTrials; ++t) {
    const int n = 2 + t % 9;
    const RealMatrix a = random_psd(rng, n), b = random_psd(rng, n);
    const RealSeq la = eigenvalues_sym(SymMatrix(a)).values, lb = eigenvalues_sym(SymMatrix(b)).values;
    const RealSeq ls = eigenvalues_sym(SymMatrix(add(a, b))).values;
    ++m1.exercised;
    m1.fails += !majorizes(ls, sort_desc(concat(la, lb)), kGmTol).holds;
    ++fan.exercised;
    fan.fails += !majorizes(add_sorted(la, lb), ls, kGmTol).holds;
  }
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    IntMatrix m(rows, cols, 0);
    const double density = unit(rng);
    for (int& x : m.data) x = unit(rng) < density ? 1 : 0;
    ++gr.exercised;
    gr.fails += !gale_ryser_check(m).holds;
  }
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t n = 2 + rng() % 9;
    const RealSeq y = random_sorted(rng, n);
    const RealMatrix p = random_doubly_stochastic(n, rng());
    const RealSeq py = sort_desc(RealSeq(multiply(p, y.values), false));
    ++xyp.exercised;
    xyp.fails += !majorizes(y, py, kGmTol).holds;

    // x <= y built as a doubly stochastic image; z arbitrary
    const RealSeq z = random_sorted(rng, 1 + rng() % 6);
    ++xyz.exercised;
    xyz.fails += !majorizes(sort_desc(concat(y, z)), sort_desc(concat(py, z)), kGmTol).holds;

    const std::size_t i = rng() % (n - 1), j = i + 1 + rng() % (n - 1 - i);
    const double amount = unit(rng) * (y.values[i] - y.values[j]) / 2;
    std::vector<double> moved = y.values;
    moved[i] -= amount;
    moved[j] += amount;
    ++ij.exercised;
    ij.fails += !majorizes(y, sort_desc(RealSeq(moved, false)), kGmTol).holds;

    const RealSeq y2 = random_sorted(rng, n);
    const RealSeq x2 = sort_desc(RealSeq(multiply(random_doubly_stochastic(n, rng()), y2.values), false));
    ++xyxy.exercised;
    xyxy.fails += !majorizes(add_sorted(y, y2), add_sorted(py, x2), kGmTol).holds;
  }
  for (int t = 0; t < kTrials; ++t) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph h = random_graph(n, unit(rng), rng());
    VertexMask va = 1 | (rng() & h.all_vertices());
    if (va == h.all_vertices()) va &= ~(VertexMask{1} << (n - 1));
    ++cgc.exercised;
    cgc.fails += !claim_cgc_check(make_cut(h, va));
  }
  // Sparse crossings so the hypotheses are met often enough to matter.
  int premise_met = 0;
  for (int t = 0; t < kTrials; ++t) {
    const int na = 1 + static_cast<int>(rng() % 5), nb = 1 + static_cast<int>(rng() % 5);
    const Graph a = random_graph(na, unit(rng), rng()), b = random_graph(nb, unit(rng), rng());
    Graph h = disjoint_sum(a, b);
    const int cross = static_cast<int>(rng() % 3);
    for (int k = 0; k < cross; ++k) {
      const int u = static_cast<int>(rng() % na), v = na + static_cast<int>(rng() % nb);
      if (!h.has_edge(u, v)) h.add_edge(u, v);
    }
    const Cut cut = make_cut(h, a.all_vertices());
    const HypothesisReport r = check_abc(cut, kGmTol);
    ++chain.exercised;
    bool ok = !r.theorem_applies || r.cond_dt;
    if (r.cond_dt && r.gm_a && r.gm_b && r.gm_c) {
      ++premise_met;
      ok = ok && gm_check(h, kGmTol).holds;
    }
    chain.fails += !ok;
  }

  std::ostringstream d;
  int total_fails = 0;
  bool enough = premise_met > 100;
  for (const Tally* t : {&m1, &fan, &gr, &xyp, &xyz, &ij, &xyxy, &cgc, &chain}) {
    d << t->name << " " << t->exercised - t->fails << "/" << t->exercised << "  ";
    total_fails += t->fails;
    enough = enough && t->exercised >= kTrials;
  }
  d << "(chain premise met " << premise_met << ")";
  return {total_fails == 0 && enough, d.str()};
}

Outcome dirichlet_criterion() {
  std::mt19937_64 rng(1007);
  int broken = 0, mismatched = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph g = random_graph(n, 0.2 + 0.6 * (t % 4) / 3.0, rng());
    VertexMask d = rng() & g.all_vertices();
    if (d == g.all_vertices()) d &= ~VertexMask{1};
    const ReductionChainReport r = reduction_chain_check(VertexPair(g, d), kGmTol);
    if (!(r.link1 && r.link2 && r.link3 && r.final && r.identity_check)) ++broken;

    const VertexPair empty(g, 0);
    const GmReport plain = gm_check(g, kGmTol), pair = pair_gm_check(empty, kGmTol);
    const bool same = render_gm(plain, Format::json) == render_gm(pair, Format::json) &&
                      plain.spectrum.values == pair.spectrum.values &&
                      plain.prefix_margins == pair.prefix_margins;
    if (!same) ++mismatched;
  }
  std::ostringstream out;
  out << "500 random pairs n<=12, " << broken << " with a failed link, " << mismatched
      << " empty-D reports differing from the plain check";
  return {broken == 0 && mismatched == 0, out.str()};
}

Outcome first_two_criterion() {
  std::size_t exhaustive = 0, bad = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : all_graphs(n)) {
      ++exhaustive;
      const auto [one, two] = first_two_inequalities(g, kGmTol);
      bad += !(one && two);
    }
  std::mt19937_64 rng(1008);
  std::uniform_real_distribution<double> p(0.05, 0.95);
  for (int t = 0; t < 5000; ++t) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 16), p(rng), rng());
    const auto [one, two] = first_two_inequalities(g, kGmTol);
    bad += !(one && two);
  }
  std::ostringstream d;
  d << exhaustive << " classes n<=7 + 5000 random n<=16, " << bad << " failures";
  return {bad == 0 && exhaustive == 1252, d.str()};
}

Outcome eigensolver_criterion() {
  std::mt19937_64 rng(1009);
  std::uniform_real_distribution<double> p(0.05, 0.95);
  double worst_trace = 0.0, worst_frob = 0.0;
  int nonzero_last = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 50);
    const Graph g = random_graph(n, p(rng), rng());
    const SymMatrix l = SymMatrix::from_int(laplacian(g));
    const auto& v = laplacian_spectrum(g).values.values;
    double sum = 0.0, squares = 0.0;
    for (double x : v) {
      sum += x;
      squares += x * x;
    }
    const double two_m = 2.0 * static_cast<double>(g.edge_count());
    const double frob2 = l.frobenius_norm() * l.frobenius_norm();
    worst_trace = std::max(worst_trace, std::abs(sum - two_m) / std::max(1.0, two_m));
    if (frob2 > 0) worst_frob = std::max(worst_frob, std::abs(squares - frob2) / frob2);
    nonzero_last += v.back() != 0.0;
  }
  std::ostringstream d;
  d << "200 random Laplacians n<=50, trace rel err " << worst_trace << ", Frobenius rel err " << worst_frob
    << ", lambda_n not exactly 0 in " << nonzero_last;
  return {worst_trace <= kTraceRel && worst_frob <= kTraceRel && nonzero_last == 0, d.str()};
}

Outcome determinism_criterion() {
  const auto base = std::filesystem::temp_directory_path() / "gmv-acceptance-sweep";
  std::filesystem::remove_all(base);
  std::vector<std::string> outputs;
  std::vector<std::string> labels;
  for (unsigned workers : {1U, 2U, 8U, 8U}) {
    const auto dir = base / ("run-" + std::to_string(outputs.size()));
    const SweepReport r = sweep(6, {true, true}, workers, kGmTol, dir);
    outputs.push_back(slurp(dir / "sweep.csv") + "\n--\n" + slurp(dir / "summary.json") + "\n--\n" +
                      render_sweep(r, Format::json) + render_sweep(r, Format::csv));
    labels.push_back(std::to_string(workers));
  }
  std::filesystem::remove_all(base);
  bool same = true;
  for (const auto& o : outputs) same = same && o == outputs.front();
  std::ostringstream d;
  d << "sweep(6) with workers 1,2,8 and a repeated 8-worker run: " << (same ? "byte-identical" : "DIFFERENT")
    << " (" << outputs.front().size() << " bytes, hash " << fnv1a_hex(outputs.front()) << ")";
  return {same, d.str()};
}

}  // namespace

int main() {
  criterion(1, "six-vertex census", census_criterion);
  criterion(2, "threshold equality", threshold_criterion);
  criterion(3, "trees", trees_criterion);
  criterion(4, "complement duality", duality_criterion);
  criterion(5, "small-graph closure", small_closure_criterion);
  criterion(6, "unconditional properties", properties_criterion);
  criterion(7, "Dirichlet reduction", dirichlet_criterion);
  criterion(8, "first two inequalities", first_two_criterion);
  criterion(9, "eigensolver quality", eigensolver_criterion);
  criterion(10, "determinism", determinism_criterion);
  std::printf("%d of 10 criteria failed\n", failed);
  return failed;
}
