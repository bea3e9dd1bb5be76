#include "gmv/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gmv/error.hpp"

namespace gmv {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

VertexMask full_mask(int n) { return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw std::out_of_range("graph order must be in [0, 64]");
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  for (auto [i, j] : edges) add_edge(i, j);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (VertexMask row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

bool Graph::has_edge(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return (adj_[static_cast<std::size_t>(i)] >> j) & 1U;
}

void Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::invalid_argument("self-loops are not allowed");
  adj_[static_cast<std::size_t>(i)] |= bit(j);
  adj_[static_cast<std::size_t>(j)] |= bit(i);
}

void Graph::remove_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  adj_[static_cast<std::size_t>(i)] &= ~bit(j);
  adj_[static_cast<std::size_t>(j)] &= ~bit(i);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

VertexMask Graph::all_vertices() const noexcept { return full_mask(n_); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (VertexMask rest = adj_[static_cast<std::size_t>(i)] & ~full_mask(i + 1); rest;
         rest &= rest - 1)
      out.emplace_back(i, std::countr_zero(rest));
  return out;
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> out(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = g.degree(v);
  return out;
}

Partition degree_sequence(const Graph& g) { return Partition::from_unsorted(degrees(g)); }

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

IntMatrix adjacency_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  IntMatrix a(n, n, 0);
  for (auto [i, j] : g.edges()) {
    a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
    a(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = 1;
  }
  return a;
}

IntMatrix laplacian(const Graph& g) {
  IntMatrix l = adjacency_matrix(g);
  for (auto& x : l.data) x = -x;
  for (int v = 0; v < g.order(); ++v)
    l(static_cast<std::size_t>(v), static_cast<std::size_t>(v)) = g.degree(v);
  return l;
}

IntMatrix oriented_incidence(const Graph& g) {
  const auto edges = g.edges();
  IntMatrix d(static_cast<std::size_t>(g.order()), edges.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    d(static_cast<std::size_t>(edges[e].first), e) = -1;
    d(static_cast<std::size_t>(edges[e].second), e) = 1;
  }
  return d;
}

IntMatrix multiply_transpose(const IntMatrix& m) {
  IntMatrix out(m.rows, m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.rows; ++j) {
      int acc = 0;
      for (std::size_t k = 0; k < m.cols; ++k) acc += m(i, k) * m(j, k);
      out(i, j) = acc;
    }
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.has_edge(i, j)) out.add_edge(i, j);
  return out;
}

Graph disjoint_sum(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > kMaxVertices)
    throw std::out_of_range("disjoint sum exceeds 64 vertices");
  Graph out(a.order() + b.order());
  for (auto [i, j] : a.edges()) out.add_edge(i, j);
  for (auto [i, j] : b.edges()) out.add_edge(i + a.order(), j + a.order());
  return out;
}

Graph edge_union(const Graph& g, const Graph& h, bool require_disjoint) {
  if (g.order() != h.order()) throw std::invalid_argument("edge union needs equal vertex counts");
  Graph out = g;
  for (auto [i, j] : h.edges()) {
    if (require_disjoint && out.has_edge(i, j))
      throw std::invalid_argument("edge sets are not disjoint");
    out.add_edge(i, j);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  VertexMask seen = 0;
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range in induced subgraph");
    if (seen & bit(v)) throw std::invalid_argument("duplicate vertex in induced subgraph");
    seen |= bit(v);
  }
  const int k = static_cast<int>(vertices.size());
  Graph out(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.has_edge(vertices[static_cast<std::size_t>(a)], vertices[static_cast<std::size_t>(b)]))
        out.add_edge(a, b);
  return out;
}

std::vector<int> mask_vertices(VertexMask mask) {
  std::vector<int> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

Graph induced_subgraph(const Graph& g, VertexMask vertices) {
  if (vertices & ~g.all_vertices()) throw std::out_of_range("vertex mask exceeds graph order");
  const auto list = mask_vertices(vertices);
  return induced_subgraph(g, std::span<const int>(list));
}

Graph threshold_graph(std::span<const int> creation) {
  if (creation.empty()) throw std::invalid_argument("creation sequence is empty");
  Graph g(static_cast<int>(creation.size()));
  for (int v = 0; v < g.order(); ++v) {
    const int b = creation[static_cast<std::size_t>(v)];
    if (b != 0 && b != 1) throw std::invalid_argument("creation sequence entries must be 0 or 1");
    if (b == 1)
      for (int u = 0; u < v; ++u) g.add_edge(u, v);
  }
  return g;
}

std::optional<std::vector<int>> threshold_creation_sequence(const Graph& g) {
  VertexMask remaining = g.all_vertices();
  std::vector<int> reversed;
  while (remaining) {
    const int left = std::popcount(remaining);
    bool removed = false;
    for (VertexMask rest = remaining; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int deg = std::popcount(g.neighbors(v) & remaining);
      if (deg == 0 || deg == left - 1) {
        reversed.push_back(left == 1 ? 0 : (deg == 0 ? 0 : 1));
        remaining &= ~bit(v);
        removed = true;
        break;
      }
    }
    if (!removed) return std::nullopt;
  }
  return std::vector<int>(reversed.rbegin(), reversed.rend());
}

bool is_threshold(const Graph& g) { return threshold_creation_sequence(g).has_value(); }

Graph tree_from_prufer(std::span<const int> sequence) {
  const int n = static_cast<int>(sequence.size()) + 2;
  Graph g(n);
  std::vector<int> count(static_cast<std::size_t>(n), 1);
  for (int x : sequence) {
    if (x < 0 || x >= n) throw std::out_of_range("Pruefer entry out of range");
    ++count[static_cast<std::size_t>(x)];
  }
  for (int x : sequence) {
    int leaf = 0;
    while (count[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    g.add_edge(leaf, x);
    --count[static_cast<std::size_t>(leaf)];
    --count[static_cast<std::size_t>(x)];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (count[static_cast<std::size_t>(v)] != 1) continue;
    if (u < 0) {
      u = v;
    } else {
      g.add_edge(u, v);
      break;
    }
  }
  return g;
}

Graph standard_family(Family kind, int n) {
  Graph g(n);
  switch (kind) {
    case Family::path:
      for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
      break;
    case Family::cycle:
      if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
      for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
      break;
    case Family::complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
      break;
    case Family::star:
      for (int v = 1; v < n; ++v) g.add_edge(0, v);
      break;
    case Family::empty:
      break;
  }
  return g;
}

namespace {

// BFS layers from `source`; returns eccentricity and the reached set.
std::pair<int, VertexMask> bfs(const Graph& g, int source) {
  VertexMask seen = bit(source), frontier = seen;
  int depth = 0;
  while (true) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    next &= ~seen;
    if (!next) return {depth, seen};
    seen |= next;
    frontier = next;
    ++depth;
  }
}

}  // namespace

VertexMask component_mask(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
  return bfs(g, v).second;
}

int component_count(const Graph& g) {
  VertexMask left = g.all_vertices();
  int count = 0;
  while (left) {
    left &= ~bfs(g, std::countr_zero(left)).second;
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::optional<int> diameter(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, bfs(g, v).first);
  return best;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && is_connected(g) &&
         g.edge_count() == static_cast<std::size_t>(g.order() - 1);
}

VertexMask isolated_vertices(const Graph& g) {
  VertexMask out = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.neighbors(v) == 0) out |= bit(v);
  return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order()))
    throw std::invalid_argument("permutation size mismatch");
  Graph out(g.order());
  for (auto [i, j] : g.edges())
    out.add_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  return out;
}

namespace {

// Colour refinement: start from degrees, split by the multiset of neighbour
// colours until stable. Colours are ranks of isomorphism-invariant
// signatures, so the induced cell order is itself invariant.
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color = degrees(g);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(color[static_cast<std::size_t>(v)]);
      std::vector<int> nb;
      for (VertexMask m = g.neighbors(v); m; m &= m - 1)
        nb.push_back(color[static_cast<std::size_t>(std::countr_zero(m))]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
    }
    auto uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v)
      color[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<std::size_t>(v)]) -
          uniq.begin());
    if (uniq.size() == classes) return color;
    classes = uniq.size();
  }
}

// Upper-triangle bits in graph6 order, first bit most significant.
std::uint64_t adjacency_key(const Graph& g, const std::vector<int>& at_position) {
  const int n = g.order();
  std::uint64_t key = 0;
  for (int j = 1; j < n; ++j) {
    const VertexMask row = g.neighbors(at_position[static_cast<std::size_t>(j)]);
    for (int i = 0; i < j; ++i) key = (key << 1) | ((row >> at_position[static_cast<std::size_t>(i)]) & 1U);
  }
  return key;
}

}  // namespace

Graph canonical_graph(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalVertices)
    throw std::out_of_range("canonical form supports at most 10 vertices");
  if (n <= 1) return g;

  const std::vector<int> color = refine_colors(g);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)];
  });
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // [begin, end) in `order`
  for (std::size_t b = 0; b < order.size();) {
    std::size_t e = b;
    while (e < order.size() && color[static_cast<std::size_t>(order[e])] ==
                                   color[static_cast<std::size_t>(order[b])])
      ++e;
    cells.emplace_back(b, e);
    b = e;
  }

  std::uint64_t best_key = ~std::uint64_t{0};
  std::vector<int> best = order;
  while (true) {
    const std::uint64_t key = adjacency_key(g, order);
    if (key < best_key) {
      best_key = key;
      best = order;
    }
    std::size_t c = cells.size();
    while (c > 0) {
      auto [b, e] = cells[c - 1];
      if (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(b),
                                order.begin() + static_cast<std::ptrdiff_t>(e)))
        break;
      --c;
    }
    if (c == 0) break;
  }

  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) perm[static_cast<std::size_t>(best[static_cast<std::size_t>(p)])] = p;
  return relabel(g, perm);
}

std::string canonical_form(const Graph& g) { return write_graph6(canonical_graph(g)); }

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

int graph6_value(char c) {
  if (c < 63 || c > 126) throw ParseError(std::string("graph6: invalid character '") + c + "'");
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > text.size()) throw ParseError("graph6: truncated vertex count");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < count; ++i) value = (value << 6) | static_cast<std::uint64_t>(graph6_value(text[pos++]));
    return value;
  };
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() > 1 && text[1] != '~') {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > static_cast<std::uint64_t>(kMaxVertices))
    throw ParseError("graph6: graphs above 64 vertices are not supported");

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * static_cast<std::size_t>(order > 0 ? order - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " edge bytes, found " +
                     std::to_string(text.size() - pos));

  Graph g(order);
  std::size_t k = 0;
  for (int j = 1; j < order; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int value = graph6_value(text[pos + k / 6]);
      if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  for (; k < bytes * 6; ++k)
    if ((graph6_value(text[pos + k / 6]) >> (5 - k % 6)) & 1)
      throw ParseError("graph6: nonzero padding bits");
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = filled = 0;
      }
    }
  if (filled) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> row;
    std::string tok;
    while (ls >> tok) {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("edge list: not an integer: " + tok);
      row.push_back(value);
    }
    if (row.empty()) continue;
    if (row.size() != 2) throw ParseError("edge list: each line needs exactly two integers");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("edge list: missing 'n m' header");
  const long long n = rows[0][0], m = rows[0][1];
  if (n < 0 || n > kMaxVertices) throw ParseError("edge list: vertex count out of range");
  if (m < 0 || static_cast<std::size_t>(m) != rows.size() - 1)
    throw ParseError("edge list: header edge count does not match the listed edges");
  Graph g(static_cast<int>(n));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const long long i = rows[r][0], j = rows[r][1];
    if (i < 0 || j < 0 || i >= n || j >= n) throw ParseError("edge list: vertex out of range");
    if (i == j) throw ParseError("edge list: self-loop");
    if (g.has_edge(static_cast<int>(i), static_cast<int>(j)))
      throw ParseError("edge list: duplicate edge");
    g.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [i, j] : g.edges()) out += std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

}  // namespace gmv
