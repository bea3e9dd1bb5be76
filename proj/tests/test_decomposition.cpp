#include <doctest.h>

#include <stdexcept>

#include <random>

#include "gmv/decomposition.hpp"
#include "gmv/enumeration.hpp"

using namespace gmv;

namespace {

const Graph p4 = standard_family(Family::path, 4);

}  // namespace

TEST_CASE("make_cut") {
  const Cut cut = make_cut(p4, 0b0011);
  CHECK(cut.a == standard_family(Family::complete, 2));
  CHECK(cut.b == standard_family(Family::complete, 2));
  CHECK(cut.c.edges() == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(cut.vb() == 0b1100);
  CHECK_THROWS_AS(make_cut(p4, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_cut(p4, 0b1111), std::invalid_argument);
}

TEST_CASE("check_abc examples") {
  const HypothesisReport mid = check_abc(make_cut(p4, 0b0011));
  CHECK(mid.m == 1);
  CHECK(mid.cond_cle);
  CHECK(mid.cond_order);
  CHECK(mid.theorem_applies);
  CHECK(mid.cond_dt);

  const Graph star = standard_family(Family::star, 4);
  const int leaf = star.degree(0) == 3 ? 1 : 0;
  const HypothesisReport iso = check_abc(make_cut(star, VertexMask{1} << leaf));
  CHECK_FALSE(iso.cond_cle);
  CHECK_FALSE(iso.theorem_applies);

  // no crossing edges: only GM on the parts matters
  const Graph two = disjoint_sum(standard_family(Family::cycle, 4), standard_family(Family::star, 3));
  const HypothesisReport empty_c = check_abc(make_cut(two, 0b1111));
  CHECK(empty_c.m == 0);
  CHECK(empty_c.cond_cle);
  CHECK(empty_c.cond_order);
  CHECK(empty_c.theorem_applies == (empty_c.gm_a && empty_c.gm_b));
  CHECK(empty_c.theorem_applies);
}

TEST_CASE("claim_cgc_check") {
  CHECK(claim_cgc_check(make_cut(p4, 0b0011)));
  CHECK(claim_cgc_check(make_cut(standard_family(Family::cycle, 6), 0b000111)));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 9;
    const Graph g = random_graph(n, 0.5, rng());
    const VertexMask va = 1 | (rng() & g.all_vertices() & ~VertexMask{1});
    if (va == g.all_vertices()) continue;
    CHECK(claim_cgc_check(make_cut(g, va)));
  }
}

TEST_CASE("enumerate_cuts") {
  CHECK(enumerate_cuts(Graph(2)).size() == 1);
  CHECK(enumerate_cuts(Graph(4)).size() == 7);
  const auto six = enumerate_cuts(Graph(6));
  CHECK(six.size() == 31);
  for (std::size_t i = 0; i < six.size(); ++i) {
    CHECK((six[i] & 1) == 1);
    if (i) CHECK(six[i - 1] < six[i]);
  }
  CHECK_THROWS_AS(enumerate_cuts(Graph(1)), std::invalid_argument);
}

TEST_CASE("decompose_search examples") {
  const auto d = decompose_search(p4, DecomposeMode::theorem);
  REQUIRE(d);
  CHECK(d->cut.va == 0b0011);
  CHECK_FALSE(decompose_search(standard_family(Family::complete, 6), DecomposeMode::theorem));

  const Graph two = disjoint_sum(standard_family(Family::cycle, 5), standard_family(Family::complete, 3));
  const auto e = decompose_search(two, DecomposeMode::theorem);
  REQUIRE(e);
  CHECK(e->report.theorem_applies);
}

TEST_CASE("cut invariants over all small classes") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& h : all_graphs(n)) {
      const bool gm_h = gm_check(h).holds;
      for (VertexMask va : enumerate_cuts(h)) {
        for (VertexMask side : {va, h.all_vertices() & ~va}) {
          const Cut cut = make_cut(h, side);
          CHECK(h.edge_count() == cut.a.edge_count() + cut.b.edge_count() + cut.c.edge_count());
          CHECK(claim_cgc_check(cut));
          const HypothesisReport r = check_abc(cut);
          if (r.theorem_applies) CHECK(r.cond_dt);
          if (r.cond_dt && r.gm_a && r.gm_b && r.gm_c) CHECK(gm_h);
        }
      }
    }
  }
}

TEST_CASE("census on six vertices") {
  const CensusResult c = census_six();
  CHECK(c.total_classes == 156);
  REQUIRE(c.modes.size() == 4);
  CHECK(c.modes[0].decomposable == 62);
  CHECK(c.modes[1].decomposable == 73);
  CHECK(c.modes[2].decomposable == 146);
  CHECK(c.modes[3].decomposable == 148);
  CHECK(c.modes[2].residual.size() == 10);
  for (const auto& m : c.modes) CHECK(m.residual_gm_pass);

  const CensusResult parallel = census(6, kDefaultTolerance, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(parallel.modes[i].residual == c.modes[i].residual);
    CHECK(parallel.modes[i].cut_masks == c.modes[i].cut_masks);
  }
  for (const Graph& g : all_graphs(6))
    CHECK(closure_decomposable(g, DecomposeMode::theorem) ==
          (std::find(c.modes[2].residual.begin(), c.modes[2].residual.end(), write_graph6(g)) ==
           c.modes[2].residual.end()));
}

TEST_CASE("tree certificates") {
  const Certificate k2 = tree_certificate(standard_family(Family::complete, 2));
  CHECK(k2.kind == Certificate::Kind::threshold_base);
  CHECK(tree_certificate(standard_family(Family::star, 5)).kind == Certificate::Kind::threshold_base);

  const Certificate p5 = tree_certificate(standard_family(Family::path, 5));
  CHECK(p5.kind == Certificate::Kind::abc_node);
  REQUIRE(p5.children.size() == 3);
  CHECK(verify_certificate(p5));
  CHECK(all_leaves_threshold(p5));

  // swapping A and B breaks d^T_1(B) <= d^T_m(A)
  Certificate swapped = p5;
  swapped.va = p5.graph.all_vertices() & ~p5.va;
  std::swap(swapped.children[0], swapped.children[1]);
  CHECK_FALSE(verify_certificate(swapped));

  const Certificate fake{Certificate::Kind::threshold_base, standard_family(Family::cycle, 4), 0, {}};
  CHECK_FALSE(verify_certificate(fake));
  Certificate malformed = p5;
  malformed.children.pop_back();
  CHECK_THROWS_AS(verify_certificate(malformed), std::invalid_argument);
  CHECK_THROWS_AS(tree_certificate(standard_family(Family::cycle, 4)), std::invalid_argument);

  for (int n = 2; n <= 9; ++n)
    for (const Graph& t : all_trees(n)) {
      const Certificate cert = tree_certificate(t);
      CHECK(verify_certificate(cert));
      CHECK(all_leaves_threshold(cert));
    }
}

TEST_CASE("disjoint edge case") {
  CHECK(disjoint_edge_case_check(p4, p4, 2));
  CHECK_FALSE(disjoint_edge_case_check(standard_family(Family::complete, 2), p4, 2));
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph a = random_graph(2 + trial % 6, 0.4, rng());
    const Graph b = random_graph(2 + trial % 5, 0.4, rng());
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(a.order(), b.order())));
    CHECK_NOTHROW(disjoint_edge_case_check(a, b, k));
  }
}
