#include "wlx/canonical.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "wlx/errors.hpp"
#include "wlx/intern.hpp"

namespace wlx {

int certificate_node_limit() {
  if (const char* env = std::getenv("WLX_CERT_LIMIT")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 128;
}

namespace {

// Colors relabeled to 0..c-1 ranks, ordered by value.
std::vector<int> rank_by_value(const std::vector<int>& colors) {
  std::vector<int> vals(colors);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<int> out(colors.size());
  for (std::size_t v = 0; v < colors.size(); ++v)
    out[v] = static_cast<int>(
        std::lower_bound(vals.begin(), vals.end(), colors[v]) - vals.begin());
  return out;
}

int class_count(const std::vector<int>& ranks) {
  int mx = -1;
  for (int r : ranks) mx = std::max(mx, r);
  return mx + 1;
}

void append_class_sizes(const std::vector<int>& ranks, std::vector<int>& trace) {
  std::vector<int> sizes(class_count(ranks), 0);
  for (int r : ranks) ++sizes[r];
  trace.push_back(-7);
  trace.insert(trace.end(), sizes.begin(), sizes.end());
}

// Refine to stability with rank-normalized colors: each round keys every node
// by (rank, sorted neighbor ranks) and re-ranks by sorted key order, so ranks
// are relabeling-invariant. Appends per-round class sizes to trace.
std::vector<int> invariant_refine(const Graph& g, std::vector<int> colors,
                                  std::vector<int>& trace) {
  colors = rank_by_value(colors);
  append_class_sizes(colors, trace);
  int classes = class_count(colors);
  for (int round = 0; round < g.n(); ++round) {
    if (classes == g.n()) break;
    using Key = std::pair<int, std::vector<int>>;
    std::vector<Key> keys(g.n());
    for (int v = 0; v < g.n(); ++v) {
      std::vector<int> nbr;
      nbr.reserve(g.degree(v));
      for (int w : g.neighbors(v)) nbr.push_back(colors[w]);
      std::sort(nbr.begin(), nbr.end());
      keys[v] = {colors[v], std::move(nbr)};
    }
    std::vector<Key> uniq(keys);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    int nc = static_cast<int>(uniq.size());
    if (nc == classes) break;
    for (int v = 0; v < g.n(); ++v)
      colors[v] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), keys[v]) - uniq.begin());
    classes = nc;
    append_class_sizes(colors, trace);
  }
  return colors;
}

struct Searcher {
  const Graph& g;
  int root;
  bool have = false;
  std::vector<int> best_trace{};
  std::string best_leaf{};

  // <0: partial already beats best; 0: tied so far; >0: prune.
  int cmp_prefix(const std::vector<int>& partial) const {
    if (!have) return -1;
    std::size_t m = std::min(partial.size(), best_trace.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (partial[i] != best_trace[i]) return partial[i] < best_trace[i] ? -1 : 1;
    }
    if (partial.size() > best_trace.size()) return 1;  // best is a strict prefix
    return 0;
  }

  std::string leaf_string(const std::vector<int>& colors) const {
    int n = g.n();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[colors[v]] = v;
    KeyBuf kb;
    kb.tag('G');
    kb.put(n);
    kb.put(root >= 0 ? colors[root] : -1);
    for (int r = 0; r < n; ++r) kb.put(g.color(inv[r]));
    int acc = 0, nbits = 0;
    std::string bits;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        acc = (acc << 1) | (g.has_edge(inv[i], inv[j]) ? 1 : 0);
        if (++nbits == 8) {
          bits.push_back(static_cast<char>(acc));
          acc = nbits = 0;
        }
      }
    if (nbits > 0) bits.push_back(static_cast<char>(acc << (8 - nbits)));
    std::string out = kb.str();
    out.append(bits);
    return out;
  }

  void descend(const std::vector<int>& colors, const std::vector<int>& trace) {
    int cmp = cmp_prefix(trace);
    if (cmp > 0) return;

    // Target cell: smallest non-singleton class, lowest rank on ties.
    std::vector<int> sizes(class_count(colors), 0);
    for (int r : colors) ++sizes[r];
    int target = -1;
    for (int r = 0; r < static_cast<int>(sizes.size()); ++r)
      if (sizes[r] > 1 && (target < 0 || sizes[r] < sizes[target])) target = r;

    if (target < 0) {
      std::string leaf = leaf_string(colors);
      if (!have || trace < best_trace ||
          (trace == best_trace && leaf < best_leaf)) {
        have = true;
        best_trace = trace;
        best_leaf = std::move(leaf);
      }
      return;
    }

    for (int v = 0; v < g.n(); ++v) {
      if (colors[v] != target) continue;
      auto child = colors;
      child[v] = -1;
      auto child_trace = trace;
      auto refined = invariant_refine(g, std::move(child), child_trace);
      descend(refined, child_trace);
    }
  }
};

}  // namespace

Certificate certificate(const Graph& g, int root) {
  if (g.n() > certificate_node_limit())
    throw SizeLimitExceeded("graph exceeds certificate node limit");
  if (root < -1 || root >= g.n()) throw InvalidParam("certificate root out of range");

  Searcher s{g, root};
  std::vector<int> init(g.n());
  {
    // Root (if any) gets a strictly smaller initial key than same-colored nodes.
    std::vector<int> keys(g.n());
    for (int v = 0; v < g.n(); ++v)
      keys[v] = g.color(v) * 2 + (v == root ? 0 : 1);
    init = keys;
  }
  std::vector<int> trace;
  auto refined = invariant_refine(g, std::move(init), trace);
  s.descend(refined, trace);
  return Certificate{std::move(s.best_leaf)};
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  return certificate(a) == certificate(b);
}

bool rooted_isomorphic(const RootedGraph& a, const RootedGraph& b) {
  if (a.g.n() != b.g.n() || a.g.m() != b.g.m()) return false;
  return certificate(a.g, a.root) == certificate(b.g, b.root);
}

void for_each_connected_set_at(const Graph& g, int u, int max_size,
                               long long budget,
                               const std::function<void(const std::vector<int>&)>& visit) {
  if (u < 0 || u >= g.n()) throw InvalidParam("census node out of range");
  if (max_size < 1) throw InvalidParam("census size must be >= 1");

  // States: 0 free, 1 in current set, 2 banned for the rest of this subtree.
  std::vector<char> state(g.n(), 0);
  std::vector<char> tmp(g.n(), 0);
  std::vector<int> set_nodes;
  long long visited = 0;

  auto emit = [&](const std::vector<int>& s) {
    if (++visited > budget) throw BudgetExceeded("census set budget exceeded");
    auto sorted = s;
    std::sort(sorted.begin(), sorted.end());
    visit(sorted);
  };

  // Each connected superset of {u} is produced exactly once: extension nodes
  // are consumed left to right, and a consumed node is banned in all later
  // branches of the same level.
  auto rec = [&](auto&& self, const std::vector<int>& ext) -> void {
    emit(set_nodes);
    if (static_cast<int>(set_nodes.size()) == max_size) return;
    std::vector<int> banned_here;
    for (std::size_t i = 0; i < ext.size(); ++i) {
      int w = ext[i];
      std::vector<int> child_ext;
      for (std::size_t j = i + 1; j < ext.size(); ++j) {
        child_ext.push_back(ext[j]);
        tmp[ext[j]] = 1;
      }
      for (int x : g.neighbors(w))
        if (state[x] == 0 && !tmp[x] && x != w) child_ext.push_back(x);
      for (std::size_t j = i + 1; j < ext.size(); ++j) tmp[ext[j]] = 0;

      state[w] = 1;
      set_nodes.push_back(w);
      self(self, child_ext);
      set_nodes.pop_back();
      state[w] = 2;
      banned_here.push_back(w);
    }
    for (int w : banned_here) state[w] = 0;
  };

  state[u] = 1;
  set_nodes.push_back(u);
  std::vector<int> ext0;
  for (int w : g.neighbors(u)) ext0.push_back(w);
  rec(rec, ext0);
  state[u] = 0;
}

const Certificate& CertCache::rooted_cert(const Graph& g,
                                          const std::vector<int>& nodes,
                                          int root_old) {
  KeyBuf kb;
  kb.tag('K');
  kb.put(static_cast<int>(nodes.size()));
  int root_idx = -1;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == root_old) root_idx = static_cast<int>(i);
  kb.put(root_idx);
  for (int v : nodes) kb.put(g.color(v));
  int acc = 0, nbits = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      acc = (acc << 1) | (g.has_edge(nodes[i], nodes[j]) ? 1 : 0);
      if (++nbits == 30) {
        kb.put(acc);
        acc = nbits = 0;
      }
    }
  if (nbits > 0) kb.put(acc);

  auto it = memo_.find(kb.str());
  if (it != memo_.end()) return it->second;
  auto ex = induced_subgraph(g, nodes, root_old);
  auto cert = certificate(ex.rg.g, ex.rg.root);
  return memo_.emplace(kb.str(), std::move(cert)).first->second;
}

}  // namespace wlx
