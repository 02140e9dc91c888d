#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "oracle.hpp"
#include "wlx/canonical.hpp"
#include "wlx/errors.hpp"
#include "wlx/graph.hpp"

using wlx::Graph;

TEST_CASE("graph edge bookkeeping and validation") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  CHECK(g.n() == 4);
  CHECK(g.m() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  CHECK_THROWS_AS(g.add_edge(1, 1), wlx::InvalidParam);
  CHECK_THROWS_AS(g.add_edge(0, 4), wlx::InvalidParam);
  CHECK_THROWS_AS(g.add_edge(-1, 0), wlx::InvalidParam);
  CHECK_THROWS_AS(g.add_edge(1, 0), wlx::InvalidParam);  // duplicate
}

TEST_CASE("bfs distances and eccentricity") {
  auto p = wlx::path_graph(5);
  auto d = wlx::bfs_distances(p, 0);
  CHECK(d == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(wlx::eccentricity(p, 0) == 4);
  CHECK(wlx::eccentricity(p, 2) == 2);

  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  auto dd = wlx::bfs_distances(two, 0);
  CHECK(dd[2] == -1);
  CHECK(wlx::eccentricity(two, 0) == 1);  // max finite distance
}

TEST_CASE("message-passing ball of C5 at depth 2 is a 5-path, induced ball is C5") {
  auto c5 = wlx::cycle_graph(5);
  auto mp = wlx::message_passing_neighborhood(c5, 0, 2);
  auto ind = wlx::induced_radius_neighborhood(c5, 0, 2);

  // Same node set (everything is within distance 2) ...
  CHECK(mp.rg.g.n() == 5);
  CHECK(ind.rg.g.n() == 5);
  for (int v = 0; v < 5; ++v) {
    CHECK(mp.old_to_new[v] >= 0);
    CHECK(ind.old_to_new[v] >= 0);
  }
  // ... but the far edge (between the two distance-2 nodes) is only visible
  // to the induced ball: a 2-round computation at the root cannot use it.
  CHECK(mp.rg.g.m() == 4);
  CHECK(ind.rg.g.m() == 5);
  auto p5 = wlx::path_graph(5);
  CHECK(oracle::isomorphic(mp.rg.g, p5, mp.rg.root, 2));
  CHECK(oracle::isomorphic(ind.rg.g, c5, ind.rg.root, 0));
}

TEST_CASE("message-passing ball of C6 at depth 2 is the centered 5-path") {
  auto c6 = wlx::cycle_graph(6);
  auto mp = wlx::message_passing_neighborhood(c6, 0, 2);
  CHECK(mp.rg.g.n() == 5);  // the opposite node is at distance 3
  CHECK(oracle::isomorphic(mp.rg.g, wlx::path_graph(5), mp.rg.root, 2));
}

TEST_CASE("depth >= eccentricity reproduces the whole graph") {
  auto c6 = wlx::cycle_graph(6);
  for (int d = 3; d <= 5; ++d) {
    auto mp = wlx::message_passing_neighborhood(c6, 0, d);
    CHECK(mp.rg.g.n() == 6);
    CHECK(mp.rg.g.m() == 6);
    CHECK(oracle::isomorphic(mp.rg.g, c6, mp.rg.root, 0));
  }
}

TEST_CASE("extraction id order follows (distance, old id)") {
  auto c5 = wlx::cycle_graph(5);
  auto mp = wlx::message_passing_neighborhood(c5, 2, 1);
  // distance 0: node 2 -> id 0; distance 1: nodes 1, 3 -> ids 1, 2.
  CHECK(mp.rg.root == 0);
  CHECK(mp.old_to_new[2] == 0);
  CHECK(mp.old_to_new[1] == 1);
  CHECK(mp.old_to_new[3] == 2);
  CHECK(mp.old_to_new[0] == -1);
  CHECK(mp.old_to_new[4] == -1);
}

TEST_CASE("induced subgraph keeps exactly the inner edges") {
  auto k4 = wlx::complete_graph(4);
  auto ex = wlx::induced_subgraph(k4, {0, 2, 3}, 2);
  CHECK(ex.rg.g.n() == 3);
  CHECK(ex.rg.g.m() == 3);
  CHECK(ex.rg.root == ex.old_to_new[2]);
  CHECK_THROWS_AS(wlx::induced_subgraph(k4, {0, 0, 1}, -1), wlx::InvalidParam);
}

TEST_CASE("disjoint union and apex join") {
  auto c3 = wlx::cycle_graph(3);
  auto u = wlx::disjoint_union({c3, c3});
  CHECK(u.n() == 6);
  CHECK(u.m() == 6);
  CHECK_FALSE(u.has_edge(0, 3));

  auto ap = wlx::apex_join(u);
  CHECK(ap.g.n() == 7);
  CHECK(ap.g.degree(ap.root) == 6);
  for (int v = 0; v < 6; ++v) CHECK(ap.g.has_edge(ap.root, v));
}

TEST_CASE("permuted relabels but preserves isomorphism type") {
  auto p4 = wlx::path_graph(4);
  p4.set_color(0, 7);
  std::mt19937 rng(99);
  std::vector<int> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    auto h = wlx::permuted(p4, perm);
    CHECK(h.color(perm[0]) == 7);
    CHECK(h.has_edge(perm[0], perm[1]));
    CHECK(oracle::isomorphic(p4, h));
  }
}

TEST_CASE("basic families have the right shape") {
  CHECK(wlx::cycle_graph(3).m() == 3);
  CHECK(wlx::path_graph(1).m() == 0);
  CHECK(wlx::complete_graph(5).m() == 10);
  CHECK_THROWS_AS(wlx::cycle_graph(2), wlx::InvalidParam);
}
