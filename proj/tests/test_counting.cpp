#include <doctest.h>

#include <vector>

#include "oracle.hpp"
#include "wlx/analysis.hpp"
#include "wlx/constructions.hpp"
#include "wlx/corpus.hpp"
#include "wlx/errors.hpp"
#include "wlx/extensions.hpp"
#include "wlx/graph.hpp"

using wlx::CountQuery;
using wlx::Pattern;

TEST_CASE("incident counts match the subset-enumeration oracle") {
  auto corpus = wlx::exhaustive_connected(6);
  for (const auto& g : corpus)
    for (int u = 0; u < g.n(); ++u)
      for (int len = 3; len <= 5; ++len) {
        CHECK(wlx::incident_count(g, u, {Pattern::CLIQUE, len}) ==
              oracle::clique_count(g, u, len));
        CHECK(wlx::incident_count(g, u, {Pattern::INDUCED_CYCLE, len}) ==
              oracle::induced_cycle_count(g, u, len));
      }
}

TEST_CASE("incident counts on the dense named graphs") {
  auto rook = wlx::gen_rook44();
  auto shr = wlx::gen_shrikhande();
  CHECK(wlx::incident_count(rook, 0, {Pattern::CLIQUE, 3}) == 6);
  CHECK(wlx::incident_count(shr, 0, {Pattern::CLIQUE, 3}) == 6);
  CHECK(wlx::incident_count(rook, 0, {Pattern::CLIQUE, 4}) == 2);
  CHECK(wlx::incident_count(shr, 0, {Pattern::CLIQUE, 4}) == 0);
  auto c6 = wlx::cycle_graph(6);
  CHECK(wlx::incident_count(c6, 0, {Pattern::INDUCED_CYCLE, 6}) == 1);
  CHECK(wlx::incident_count(c6, 0, {Pattern::INDUCED_CYCLE, 4}) == 0);
}

TEST_CASE("count query limits") {
  auto c4 = wlx::cycle_graph(4);
  CHECK_THROWS_AS(wlx::incident_count(c4, 0, {Pattern::CLIQUE, 2}),
                  wlx::InvalidParam);
  CHECK_THROWS_AS(wlx::incident_count(c4, 0, {Pattern::CLIQUE, 9}),
                  wlx::InvalidParam);
  wlx::Graph big(70);
  for (int v = 0; v + 1 < 70; ++v) big.add_edge(v, v + 1);
  CHECK_THROWS_AS(wlx::incident_count(big, 0, {Pattern::CLIQUE, 3}),
                  wlx::BudgetExceeded);
}

TEST_CASE("count-consistency scan finds the planted counterexample") {
  auto pair = wlx::gen_wl1_pair();
  std::vector<wlx::Graph> corpus{pair.a, pair.b};
  wlx::Session session;
  // Plain depth-2 colors are constant on 2-regular graphs, but triangle
  // membership differs: must report a violation.
  auto res = wlx::can_count(wlx::ExtensionSpec::parse("M:0:d=2"), corpus,
                            {Pattern::CLIQUE, 3}, session);
  CHECK_FALSE(res.well_defined);
  CHECK(res.first.count != res.second.count);
  CHECK(res.first.graph == 0);
  CHECK(res.second.graph == 1);
}

TEST_CASE("census colors determine their own counted patterns") {
  auto corpus = wlx::exhaustive_connected(5);
  wlx::Session session;
  auto res = wlx::can_count(wlx::ExtensionSpec::parse("S:3:d=2"), corpus,
                            {Pattern::CLIQUE, 3}, session);
  CHECK(res.well_defined);
}
