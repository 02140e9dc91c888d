// Color refinement. One round maps a node's color to the interned pair
// (own color, sorted multiset of neighbor colors); iterating to a fixed round
// count or to stabilization gives the 1-round / stable node invariants.
// Folklore k-tuple refinement lives here too; k=1 reduces to plain neighbor
// refinement exactly.
//
// All cross-graph comparisons run both graphs in lockstep against one shared
// InternTable so color ids are comparable; stabilization is detected on the
// joint partition.
#pragma once

#include <vector>

#include "wlx/graph.hpp"
#include "wlx/intern.hpp"

namespace wlx {

inline constexpr int kStable = -1;

// Raw node colors lifted into the table (round-0 colors).
std::vector<int> interned_node_colors(const Graph& g, InternTable& table);

// As above but each node additionally carries a mark bit; marked and unmarked
// nodes with equal raw colors get distinct round-0 colors. Refining this init
// IS the marked-run refinement: injective updates preserve the split.
std::vector<int> marked_node_colors(const Graph& g, const std::vector<bool>& marked,
                                    InternTable& table);

std::vector<int> refine_once(const Graph& g, const std::vector<int>& cur,
                             InternTable& table);

// rounds >= 0 runs exactly that many rounds; kStable runs until the class
// count stops changing (at most n rounds can refine).
std::vector<int> refine_rounds(const Graph& g, std::vector<int> init, int rounds,
                               InternTable& table);

// Lockstep refinement of two graphs. trace.a[r] / trace.b[r] are the colors
// after r rounds (index 0 = init). With rounds == kStable the trace ends at
// the first round whose joint class count matches the previous round.
struct PairTrace {
  std::vector<std::vector<int>> a, b;

  const std::vector<int>& last_a() const { return a.back(); }
  const std::vector<int>& last_b() const { return b.back(); }
  int rounds() const { return static_cast<int>(a.size()) - 1; }
};

PairTrace refine_pair_trace(const Graph& g1, const Graph& g2,
                            std::vector<int> init1, std::vector<int> init2,
                            int rounds, InternTable& table);

// Sorted copy (multiset view) of a color vector.
std::vector<int> color_multiset(const std::vector<int>& colors);

// d-round color of u as seen by a d-round message-passing computation:
// extract the message-passing d-ball, refine exactly d rounds, read the root.
int rooted_color(const Graph& g, int u, int d, InternTable& table);

// Folklore k-tuple refinement, run in lockstep over any number of graphs so
// stable colors are comparable across all of them.
struct KfwlOptions {
  long long tuple_budget;  // max sum of n_i^k
  KfwlOptions();           // reads WLX_TUPLE_BUDGET, default 10^7
};

struct KfwlJointResult {
  int rounds = 0;                        // rounds to joint stabilization
  std::vector<std::vector<int>> diag;    // per graph: stable color of (u,..,u)
  std::vector<std::vector<int>> tuples;  // per graph: sorted stable tuple colors
};

// k >= 1; k == 1 delegates to plain neighbor refinement (the generic tuple
// update would drop adjacency for k == 1). Throws BudgetExceeded when the
// tuple space is over budget and InvalidParam for k outside [1, 8].
KfwlJointResult kfwl_joint(const std::vector<const Graph*>& gs, int k,
                           InternTable& table, const KfwlOptions& opt = {});

struct KfwlPairResult {
  bool equivalent = false;  // stable tuple-color multisets equal
  int rounds = 0;           // rounds run to joint stabilization
  int witness_round = -1;   // first round with differing multisets, -1 if none
  std::vector<int> diag1, diag2;  // stable color of (u,...,u) per node
};

KfwlPairResult kfwl_compare(const Graph& g1, const Graph& g2, int k,
                            InternTable& table, const KfwlOptions& opt = {});

}  // namespace wlx
