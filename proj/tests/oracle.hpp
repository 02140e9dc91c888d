// Independent brute-force oracles used only by the tests. Everything here is
// implemented from first principles on top of the Graph accessors — no
// refinement, no interning, no canonicalization from the library under test —
// so agreement is evidence, not circularity.
//
//   isomorphic / canonical_string / automorphism_count: exhaustive
//     permutation search (intended for n <= 8).
//   census: enumerate ALL node subsets containing u, keep the connected
//     induced ones, canonicalize each rooted at u.
//   clique_count / induced_cycle_count: enumerate subsets, test the pattern.
//   labeled_connected: the classic counting recurrence.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "wlx/graph.hpp"

namespace oracle {

// ---------------------------------------------------------- small helpers --

inline void for_each_combination(
    const std::vector<int>& pool, int r,
    const std::function<void(const std::vector<int>&)>& fn) {
  const int n = static_cast<int>(pool.size());
  if (r < 0 || r > n) return;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> pick(r);
  while (true) {
    for (int i = 0; i < r; ++i) pick[i] = pool[idx[i]];
    fn(pick);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Adjacency of the induced subgraph on `nodes` (positions index the matrix).
inline std::vector<std::vector<bool>> induced_matrix(const wlx::Graph& g,
                                                     const std::vector<int>& nodes) {
  const int s = static_cast<int>(nodes.size());
  std::vector<std::vector<bool>> adj(s, std::vector<bool>(s, false));
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      if (g.has_edge(nodes[i], nodes[j])) adj[i][j] = adj[j][i] = true;
  return adj;
}

inline bool matrix_connected(const std::vector<std::vector<bool>>& adj) {
  const int s = static_cast<int>(adj.size());
  if (s == 0) return false;
  std::vector<bool> seen(s, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < s; ++w)
      if (adj[v][w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == s;
}

// -------------------------------------------------------- isomorphism part --

inline bool isomorphic(const wlx::Graph& a, const wlx::Graph& b, int root_a = -1,
                       int root_b = -1) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  if ((root_a >= 0) != (root_b >= 0)) return false;
  const int n = a.n();
  if (n == 0) return true;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (root_a >= 0 && perm[root_a] != root_b) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      ok = a.color(v) == b.color(perm[v]);
    for (const auto& [x, y] : a.edges()) {
      if (!ok) break;
      ok = b.has_edge(perm[x], perm[y]);
    }
    if (ok) return true;  // m equal, so edge injection is a bijection
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Encoding of one labeling: "n|root|colors|adjacency-bits".
inline std::string encode_under(const wlx::Graph& g, const std::vector<int>& perm,
                                int root) {
  const int n = g.n();
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[perm[v]] = v;
  std::string s = std::to_string(n) + "|" +
                  std::to_string(root >= 0 ? perm[root] : -1) + "|";
  for (int nv = 0; nv < n; ++nv) s += std::to_string(g.color(inv[nv])) + ",";
  s += "|";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      s += g.has_edge(inv[i], inv[j]) ? '1' : '0';
  return s;
}

inline std::string canonical_string(const wlx::Graph& g, int root = -1) {
  const int n = g.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string cur = encode_under(g, perm, root);
    if (best.empty() || cur < best) best = std::move(cur);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline long long automorphism_count(const wlx::Graph& g) {
  const int n = g.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = g.color(v) == g.color(perm[v]);
    for (const auto& [x, y] : g.edges()) {
      if (!ok) break;
      ok = g.has_edge(perm[x], perm[y]);
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// ------------------------------------------------------------ census part --

// Canonical string of the induced subgraph on `nodes` rooted at `root_old`
// (a member of nodes), built without the library's induced_subgraph.
inline std::string induced_canonical(const wlx::Graph& g,
                                     const std::vector<int>& nodes, int root_old) {
  const int s = static_cast<int>(nodes.size());
  wlx::Graph sub(s);
  int root_new = -1;
  for (int i = 0; i < s; ++i) {
    sub.set_color(i, g.color(nodes[i]));
    if (nodes[i] == root_old) root_new = i;
  }
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      if (g.has_edge(nodes[i], nodes[j])) sub.add_edge(i, j);
  return canonical_string(sub, root_new);
}

// census[s-1] = sorted canonical strings of all connected induced subgraphs
// on exactly s nodes containing u, rooted at u, for s = 1..k.
inline std::vector<std::vector<std::string>> census(const wlx::Graph& g, int u,
                                                    int k) {
  std::vector<std::vector<std::string>> out(k);
  std::vector<int> others;
  for (int v = 0; v < g.n(); ++v)
    if (v != u) others.push_back(v);
  for (int s = 1; s <= k; ++s) {
    for_each_combination(others, s - 1, [&](const std::vector<int>& rest) {
      std::vector<int> nodes = rest;
      nodes.push_back(u);
      std::sort(nodes.begin(), nodes.end());
      if (!matrix_connected(induced_matrix(g, nodes))) return;
      out[s - 1].push_back(induced_canonical(g, nodes, u));
    });
    std::sort(out[s - 1].begin(), out[s - 1].end());
  }
  return out;
}

// ---------------------------------------------------------- counting part --

inline long long clique_count(const wlx::Graph& g, int u, int len) {
  std::vector<int> others;
  for (int v = 0; v < g.n(); ++v)
    if (v != u) others.push_back(v);
  long long count = 0;
  for_each_combination(others, len - 1, [&](const std::vector<int>& rest) {
    for (int v : rest)
      if (!g.has_edge(u, v)) return;
    for (size_t i = 0; i < rest.size(); ++i)
      for (size_t j = i + 1; j < rest.size(); ++j)
        if (!g.has_edge(rest[i], rest[j])) return;
    ++count;
  });
  return count;
}

inline long long induced_cycle_count(const wlx::Graph& g, int u, int len) {
  std::vector<int> others;
  for (int v = 0; v < g.n(); ++v)
    if (v != u) others.push_back(v);
  long long count = 0;
  for_each_combination(others, len - 1, [&](const std::vector<int>& rest) {
    std::vector<int> nodes = rest;
    nodes.push_back(u);
    auto adj = induced_matrix(g, nodes);
    for (const auto& row : adj) {
      int deg = 0;
      for (bool b : row) deg += b;
      if (deg != 2) return;
    }
    if (matrix_connected(adj)) ++count;  // 2-regular + connected = one cycle
  });
  return count;
}

// Number of P3s (induced 3-node paths) containing u, any position.
inline long long induced_p3_count(const wlx::Graph& g, int u) {
  std::vector<int> others;
  for (int v = 0; v < g.n(); ++v)
    if (v != u) others.push_back(v);
  long long count = 0;
  for_each_combination(others, 2, [&](const std::vector<int>& rest) {
    std::vector<int> nodes = {u, rest[0], rest[1]};
    int edges = g.has_edge(nodes[0], nodes[1]) + g.has_edge(nodes[0], nodes[2]) +
                g.has_edge(nodes[1], nodes[2]);
    if (edges == 2) ++count;
  });
  return count;
}

// ------------------------------------------------- labeled connected count --

// c_n = 2^C(n,2) - sum_{k=1}^{n-1} C(n-1, k-1) c_k 2^C(n-k, 2).
inline long long labeled_connected(int n) {
  auto choose = [](int a, int b) {
    long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  std::vector<long long> c(n + 1, 0);
  for (int m = 1; m <= n; ++m) {
    long long total = 1LL << (m * (m - 1) / 2);
    for (int k = 1; k < m; ++k)
      total -= choose(m - 1, k - 1) * c[k] * (1LL << ((m - k) * (m - k - 1) / 2));
    c[m] = total;
  }
  return c[n];
}

}  // namespace oracle
