#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "oracle.hpp"
#include "wlx/canonical.hpp"
#include "wlx/constructions.hpp"
#include "wlx/errors.hpp"
#include "wlx/graph.hpp"

using wlx::Graph;

namespace {

std::map<int, int> degree_histogram(const Graph& g) {
  std::map<int, int> h;
  for (int v = 0; v < g.n(); ++v) h[g.degree(v)]++;
  return h;
}

bool regular(const Graph& g, int r) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != r) return false;
  return true;
}

int common_neighbors(const Graph& g, int a, int b) {
  int c = 0;
  for (int w : g.neighbors(a)) c += g.has_edge(b, w) && w != a && w != b;
  return c;
}

int component_count(const Graph& g) {
  std::vector<int> seen(g.n(), 0);
  int comps = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

}  // namespace

TEST_CASE("degree-identical blind pair") {
  auto p = wlx::gen_wl1_pair();
  CHECK(p.a.n() == 6);
  CHECK(p.b.n() == 6);
  CHECK(regular(p.a, 2));
  CHECK(regular(p.b, 2));
  CHECK(component_count(p.a) == 2);
  CHECK(component_count(p.b) == 1);
  CHECK_FALSE(wlx::are_isomorphic(p.a, p.b));
}

TEST_CASE("apexed twin cycles vs apexed double cycle") {
  auto p = wlx::gen_cll_vs_c2l(3);
  CHECK(p.a.n() == 7);
  CHECK(p.b.n() == 7);
  CHECK(p.a.degree(p.root_a) == 6);
  CHECK(p.b.degree(p.root_b) == 6);
  for (int v = 0; v < 7; ++v)
    if (v != p.root_a) CHECK(p.a.degree(v) == 3);
  CHECK_FALSE(wlx::are_isomorphic(p.a, p.b));
  CHECK_THROWS_AS(wlx::gen_cll_vs_c2l(2), wlx::InvalidParam);
}

TEST_CASE("the two strongly regular 16-node graphs") {
  auto rook = wlx::gen_rook44();
  auto shr = wlx::gen_shrikhande();
  for (const auto* g : {&rook, &shr}) {
    CHECK(g->n() == 16);
    CHECK(g->m() == 48);
    CHECK(regular(*g, 6));
    for (int a = 0; a < 16; ++a)
      for (int b = a + 1; b < 16; ++b)
        CHECK(common_neighbors(*g, a, b) == 2);  // lambda = mu = 2
  }
  CHECK_FALSE(wlx::are_isomorphic(rook, shr));
  // Through every node: two 4-cliques in the grid graph, none in the other.
  CHECK(oracle::clique_count(rook, 0, 4) == 2);
  CHECK(oracle::clique_count(shr, 0, 4) == 0);
  auto pair = wlx::gen_rook_shrikhande();
  CHECK(pair.root_a == 0);
  CHECK(pair.root_b == 0);
}

TEST_CASE("consecutive even/odd cycle pair") {
  auto p = wlx::gen_cycle_pair(2);
  CHECK(p.a.n() == 6);
  CHECK(p.b.n() == 7);
  CHECK(regular(p.a, 2));
  CHECK(regular(p.b, 2));
  CHECK(p.root_a == 0);
  CHECK_THROWS_AS(wlx::gen_cycle_pair(0), wlx::InvalidParam);
}

TEST_CASE("path-to-triangle vs path-to-arms pair") {
  auto p = wlx::gen_swl_pair(1);
  CHECK(p.a.n() == 4);
  CHECK(p.b.n() == 6);
  CHECK(p.root_a == 0);
  CHECK(p.a.degree(0) == 1);
  CHECK(p.b.degree(0) == 1);
  CHECK(p.a.degree(1) == 3);  // path end carrying the triangle
  CHECK(p.b.degree(1) == 3);  // path end carrying the two arms
  CHECK(oracle::clique_count(p.a, 1, 3) == 1);
  CHECK(oracle::clique_count(p.b, 1, 3) == 0);

  auto q = wlx::gen_swl_pair(0);
  CHECK(q.a.n() == 3);
  CHECK(q.b.n() == 5);
}

TEST_CASE("marking-vs-removal pair: degrees and chord placement") {
  auto p = wlx::gen_markdrop_pair();
  CHECK(p.a.n() == 25);
  CHECK(p.b.n() == 25);
  auto expected = std::map<int, int>{{14, 1}, {4, 14}, {1, 10}};
  CHECK(degree_histogram(p.a) == expected);
  CHECK(degree_histogram(p.b) == expected);
  CHECK(p.root_a == 0);
  CHECK(p.a.degree(0) == 14);
  // The separating structure: only the second graph has a chorded 4-cycle.
  CHECK_FALSE(p.a.has_edge(1, 3));
  CHECK_FALSE(p.a.has_edge(2, 4));
  CHECK(p.b.has_edge(1, 3));
  // First graph's chords sit in the 10-cycle two apart.
  CHECK(p.a.has_edge(5, 7));
  CHECK(p.a.has_edge(10, 12));
  CHECK(p.b.has_edge(5, 10));
}

TEST_CASE("gadget base and expansion") {
  auto base = wlx::gen_base_3regular(8);
  CHECK(base.n() == 8);
  CHECK(regular(base, 3));
  CHECK_THROWS_AS(wlx::gen_base_3regular(6), wlx::InvalidParam);
  CHECK(wlx::cfi_twist_positions(8) == 12);

  int root = -1;
  auto plain = wlx::cfi_graph(base, -1, &root);
  CHECK(plain.n() == 80);
  CHECK(plain.m() == 120);
  CHECK(regular(plain, 3));
  CHECK(root == 0);

  auto p = wlx::gen_cfi_pair(8);
  CHECK(p.a.n() == 80);
  CHECK(p.b.n() == 80);
  CHECK(p.root_a == 0);
  CHECK(regular(p.b, 3));
}

TEST_CASE("small gadget pair is non-isomorphic") {
  auto p = wlx::gen_cfi_pair(4);
  CHECK(p.a.n() == 40);
  CHECK(p.b.n() == 40);
  CHECK(regular(p.a, 3));
  CHECK_FALSE(wlx::are_isomorphic(p.a, p.b));
}

TEST_CASE("copy pair balances node counts") {
  auto p = wlx::gen_copy_pair(3, 4);
  CHECK(p.a.n() == 12);
  CHECK(p.b.n() == 12);
  CHECK(component_count(p.a) == 4);  // four triangles
  CHECK(component_count(p.b) == 3);  // three squares
  CHECK_THROWS_AS(wlx::gen_copy_pair(4, 4), wlx::InvalidParam);
  CHECK_THROWS_AS(wlx::gen_copy_pair(2, 5), wlx::InvalidParam);
}

TEST_CASE("registry covers every advertised generator") {
  for (const auto& name : wlx::generator_names()) {
    auto p = wlx::generate_named(name, 5, 2, 8, 6, 7);
    CHECK(p.a.n() > 0);
    CHECK(p.name.size() > 0);
  }
  CHECK_THROWS_AS(wlx::generate_named("nope", 5, 2, 8, 6, 7), wlx::InvalidParam);
}
