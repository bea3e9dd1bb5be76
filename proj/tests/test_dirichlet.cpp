#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "gmv/dirichlet.hpp"
#include "gmv/enumeration.hpp"

using namespace gmv;

namespace {

const Graph k2 = standard_family(Family::complete, 2);
const Graph p3(3, {{0, 1}, {1, 2}});

VertexPair random_pair(std::mt19937_64& rng, int max_n) {
  const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
  Graph g = random_graph(n, 0.45, rng());
  VertexMask d = rng() & g.all_vertices();
  if (d == g.all_vertices()) d &= ~VertexMask{1};
  return VertexPair(g, d);
}

}  // namespace

TEST_CASE("dirichlet_laplacian examples") {
  const VertexPair a(k2, 0b10);
  CHECK(dirichlet_laplacian_int(a).data == std::vector<int>{1});
  CHECK(pair_spectrum(a).values.values == std::vector<double>{1});

  const VertexPair b(p3, 0b010);
  CHECK(dirichlet_laplacian_int(b).data == std::vector<int>{1, 0, 0, 1});
  CHECK(pair_spectrum(b).values.values == std::vector<double>{1, 1});

  const Graph c5 = standard_family(Family::cycle, 5);
  CHECK(dirichlet_laplacian_int(VertexPair(c5, 0)) == laplacian(c5));
  CHECK_THROWS_AS(dirichlet_laplacian_int(VertexPair(k2, 0b11)), std::invalid_argument);
  CHECK_THROWS_AS(VertexPair(k2, 0b100), std::out_of_range);
}

TEST_CASE("pair_degree_sequence examples") {
  const VertexPair b(p3, 0b010);
  CHECK(pair_degree_sequence(b) == Partition{2, 0, 0});
  CHECK(conjugate(pair_degree_sequence(b)) == Partition{1, 1});
  CHECK(pair_degree_sequence(VertexPair(p3, 0)) == degree_sequence(p3));
  const VertexPair a(k2, 0b10);
  CHECK(pair_degree_sequence(a) == Partition{1, 0});
  CHECK(conjugate(pair_degree_sequence(a)) == Partition{1});
  CHECK(boundary_degrees(b) == std::vector<int>{1, 1});
  CHECK(deleted_degrees(b) == std::vector<int>{2});
  CHECK(cross_incidence(b).data == std::vector<int>{1, 1});
}

TEST_CASE("pair_gm_check examples") {
  const GmReport p = pair_gm_check(VertexPair(p3, 0b010));
  CHECK(p.holds);
  CHECK(p.equality);

  const Graph star = standard_family(Family::star, 4);
  const int center = star.degree(0) == 3 ? 0 : 3;
  const GmReport s = pair_gm_check(VertexPair(star, VertexMask{1} << center));
  CHECK(s.spectrum.values == std::vector<double>{1, 1, 1});
  CHECK(s.conjugate_degrees == Partition{1, 1, 1});
  CHECK(s.equality);

  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(1 + trial % 12, 0.5, rng());
    const GmReport plain = gm_check(g), pair = pair_gm_check(VertexPair(g, 0));
    CHECK(plain.holds == pair.holds);
    CHECK(plain.equality == pair.equality);
    CHECK(plain.prefix_margins == pair.prefix_margins);
    CHECK(plain.tight_prefixes == pair.tight_prefixes);
    CHECK(plain.shortcut == pair.shortcut);
    CHECK(plain.graph6 == pair.graph6);
    CHECK(plain.spectrum.values == pair.spectrum.values);
  }
}

TEST_CASE("reduction chain examples") {
  const ReductionChainReport r = reduction_chain_check(VertexPair(p3, 0b010));
  CHECK(r.link1);
  CHECK(r.link2);
  CHECK(r.link3);
  CHECK(r.final);
  CHECK(r.identity_check);
  CHECK(r.laplacian_identity);
  CHECK(r.deleted_edges_irrelevant);

  const ReductionChainReport e = reduction_chain_check(VertexPair(standard_family(Family::cycle, 5), 0));
  CHECK(e.link1);
  CHECK(e.link2);
  CHECK(e.link3);
  CHECK(e.final);
}

TEST_CASE("pair invariants on random pairs") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    const VertexPair p = random_pair(rng, 12);
    const ReductionChainReport r = reduction_chain_check(p);
    CHECK(r.link1);
    CHECK(r.link2);
    CHECK(r.link3);
    CHECK(r.final);
    CHECK(r.identity_check);
    CHECK(r.laplacian_identity);
    CHECK(r.deleted_edges_irrelevant);

    // exact trace rule: cross edges count once, internal edges twice
    const IntMatrix l = dirichlet_laplacian_int(p);
    std::int64_t trace = 0;
    for (std::size_t i = 0; i < l.rows; ++i) trace += l(i, i);
    CHECK(trace == pair_degree_sequence(p).sum());

    // adding every edge inside D changes nothing
    Graph filled = p.graph;
    const auto d = mask_vertices(p.deleted);
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j) filled.add_edge(d[i], d[j]);
    const VertexPair q(filled, p.deleted);
    CHECK(dirichlet_laplacian_int(q) == dirichlet_laplacian_int(p));
    CHECK(pair_degree_sequence(q) == pair_degree_sequence(p));
  }
}

TEST_CASE("single deletions") {
  const Graph c5 = standard_family(Family::cycle, 5);
  const auto reports = single_deletion_reports(c5);
  CHECK(reports.size() == 5);
  for (const auto& r : reports) CHECK(r.holds);
}
