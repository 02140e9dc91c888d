// Canonical forms. certificate() returns a byte string that is equal for two
// (rooted, colored) graphs iff they are isomorphic (root- and
// color-preserving). Implemented as individualization-refinement over
// rank-normalized color refinement with invariant-trace pruning: the canonical
// form is the lexicographically least (trace, leaf string) over the search
// tree, and the leaf string encodes the full adjacency, so equality is exact.
#pragma once

#include <compare>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wlx/graph.hpp"

namespace wlx {

struct Certificate {
  std::string bytes;
  bool operator==(const Certificate&) const = default;
  auto operator<=>(const Certificate&) const = default;
};

// Node-count cap for canonicalization (env WLX_CERT_LIMIT, default 128).
int certificate_node_limit();

// root = -1 for unrooted. Throws SizeLimitExceeded above the node cap.
Certificate certificate(const Graph& g, int root = -1);

bool are_isomorphic(const Graph& a, const Graph& b);
bool rooted_isomorphic(const RootedGraph& a, const RootedGraph& b);

// Enumerates every connected node set containing u with at most max_size
// nodes, each exactly once, in a deterministic order; visit receives the set
// sorted ascending. Throws BudgetExceeded after `budget` sets.
void for_each_connected_set_at(const Graph& g, int u, int max_size,
                               long long budget,
                               const std::function<void(const std::vector<int>&)>& visit);

// Memo cache for certificates of small induced subgraphs, keyed by the packed
// induced adjacency; reusable across census calls on the same graph or corpus.
class CertCache {
 public:
  const Certificate& rooted_cert(const Graph& g, const std::vector<int>& nodes,
                                 int root_old);
  std::size_t size() const { return memo_.size(); }

 private:
  std::unordered_map<std::string, Certificate> memo_;
};

}  // namespace wlx
