#pragma once

// Independent reference implementations used only by the tests. None of
// these call into the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gmv/graph.hpp"

namespace oracle {

// Characteristic polynomial det(xI - M) of an integer matrix by
// Faddeev-LeVerrier. Coefficients from x^n down to x^0. The divisions are
// exact for integer input.
inline std::vector<long long> charpoly(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  std::vector<std::vector<long long>> mk(n, std::vector<long long>(n, 0));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I
    std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long long s = 0;
        for (std::size_t t = 0; t < n; ++t) s += m[i][t] * mk[t][j];
        next[i][j] = s + (i == j ? c[k - 1] : 0);
      }
    mk = next;
    long long tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) tr += m[i][t] * mk[t][i];
    c[k] = -tr / static_cast<long long>(k);
  }
  return c;
}

inline std::vector<std::vector<long long>> laplacian_ll(const gmv::Graph& g) {
  const int n = g.order();
  std::vector<std::vector<long long>> l(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.has_edge(i, j)) {
        l[i][j] = -1;
        ++l[i][i];
      }
  return l;
}

// Coefficients of prod (x - r_i), highest degree first.
inline std::vector<double> poly_from_roots(const std::vector<double>& roots) {
  std::vector<double> c{1.0};
  for (double r : roots) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= r * c[i];
    }
    c = next;
  }
  return c;
}

inline std::vector<double> eigen_spectrum(const std::vector<std::vector<double>>& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m[i][j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> v(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(v.rbegin(), v.rend());
  return v;
}

inline std::vector<double> eigen_laplacian_spectrum(const gmv::Graph& g) {
  std::vector<std::vector<double>> m(g.order(), std::vector<double>(g.order(), 0.0));
  const auto l = laplacian_ll(g);
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) m[i][j] = static_cast<double>(l[i][j]);
  return eigen_spectrum(m);
}

// Minimum upper-triangle edge code over all n! relabelings.
inline std::uint64_t brute_canonical_key(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t key = 0;
    for (auto [a, b] : edges) {
      int i = perm[a], j = perm[b];
      if (i > j) std::swap(i, j);
      // bit index of (i, j) in column-major upper triangle order
      key |= std::uint64_t{1} << (j * (j - 1) / 2 + i);
    }
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Isomorphism classes on n labeled vertices, by exhaustive labeling. n <= 6.
inline std::size_t brute_class_count(int n) {
  const int pairs = n * (n - 1) / 2;
  std::set<std::uint64_t> keys;
  std::vector<std::pair<int, int>> all;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) all.emplace_back(i, j);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < pairs; ++b)
      if (mask >> b & 1) edges.push_back(all[b]);
    keys.insert(brute_canonical_key(n, edges));
  }
  return keys.size();
}

// AHU encoding of a free tree rooted at its center(s).
inline std::string ahu_rooted(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != parent) kids.push_back(ahu_rooted(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

inline std::string ahu_free(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = next;
  }
  std::string best;
  for (int c : layer) {
    const std::string s = ahu_rooted(adj, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// Prufer decoding, written independently of the library.
inline std::vector<std::vector<int>> prufer_decode(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> deg(n, 1);
  for (int x : seq) ++deg[x];
  std::vector<std::vector<int>> adj(n);
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int x : seq) {
    int leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    link(leaf, x);
    --deg[leaf];
    --deg[x];
  }
  int u = -1;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) {
      if (u < 0) u = v;
      else link(u, v);
    }
  return adj;
}

// Unlabeled trees on n vertices via all n^(n-2) Prufer sequences.
inline std::size_t prufer_tree_count(int n) {
  std::set<std::string> forms;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    forms.insert(ahu_free(prufer_decode(seq)));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return forms.size();
}

inline std::string ahu_of(const gmv::Graph& t) {
  std::vector<std::vector<int>> adj(t.order());
  for (auto [i, j] : t.edges()) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  return ahu_free(adj);
}

}  // namespace oracle
