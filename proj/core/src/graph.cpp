#include "wlx/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "wlx/errors.hpp"

namespace wlx {

Graph::Graph(int n) {
  if (n < 0) throw InvalidParam("graph size must be >= 0");
  adj_.resize(n);
  colors_.assign(n, 0);
}

void Graph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= n() || b >= n())
    throw InvalidParam("edge endpoint out of range: " + std::to_string(a) + "," +
                       std::to_string(b));
  if (a == b) throw InvalidParam("self-loop at node " + std::to_string(a));
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(adj_[a].begin(), adj_[a].end(), b);
  if (it != adj_[a].end() && *it == b)
    throw InvalidParam("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
  adj_[a].insert(it, b);
  adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
  edges_.emplace_back(a, b);
}

bool Graph::has_edge(int a, int b) const {
  if (a < 0 || b < 0 || a >= n() || b >= n() || a == b) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::vector<std::pair<int, int>> Graph::sorted_edges() const {
  auto es = edges_;
  std::sort(es.begin(), es.end());
  return es;
}

bool Graph::operator==(const Graph& o) const {
  return adj_ == o.adj_ && colors_ == o.colors_;
}

std::vector<int> bfs_distances(const Graph& g, int u) {
  if (u < 0 || u >= g.n()) throw InvalidParam("bfs source out of range");
  std::vector<int> dist(g.n(), -1);
  std::queue<int> q;
  dist[u] = 0;
  q.push(u);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

int eccentricity(const Graph& g, int u) {
  auto dist = bfs_distances(g, u);
  int e = 0;
  for (int d : dist) e = std::max(e, d);
  return e;
}

namespace {

// Shared extraction core: keep nodes with dist <= radius, order new ids by
// (distance, old id), and admit an edge iff `keep_edge` approves it.
template <typename EdgePred>
Extraction extract_ball(const Graph& g, int u, int radius, EdgePred keep_edge) {
  if (radius < 0) throw InvalidParam("extraction radius must be >= 0");
  auto dist = bfs_distances(g, u);
  std::vector<int> nodes;
  for (int v = 0; v < g.n(); ++v)
    if (dist[v] >= 0 && dist[v] <= radius) nodes.push_back(v);
  std::stable_sort(nodes.begin(), nodes.end(),
                   [&](int a, int b) { return dist[a] < dist[b]; });

  Extraction ex;
  ex.old_to_new.assign(g.n(), -1);
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    ex.old_to_new[nodes[i]] = i;

  Graph sub(static_cast<int>(nodes.size()));
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    sub.set_color(i, g.color(nodes[i]));
  for (auto [a, b] : g.edges()) {
    int na = ex.old_to_new[a], nb = ex.old_to_new[b];
    if (na >= 0 && nb >= 0 && keep_edge(dist[a], dist[b])) sub.add_edge(na, nb);
  }
  ex.rg.g = std::move(sub);
  ex.rg.root = ex.old_to_new[u];
  return ex;
}

}  // namespace

Extraction message_passing_neighborhood(const Graph& g, int u, int d) {
  return extract_ball(g, u, d,
                      [d](int da, int db) { return da <= d - 1 || db <= d - 1; });
}

Extraction induced_radius_neighborhood(const Graph& g, int u, int k) {
  return extract_ball(g, u, k, [](int, int) { return true; });
}

Extraction induced_subgraph(const Graph& g, const std::vector<int>& nodes,
                            int root_old) {
  Extraction ex;
  ex.old_to_new.assign(g.n(), -1);
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    int v = nodes[i];
    if (v < 0 || v >= g.n()) throw InvalidParam("induced node out of range");
    if (ex.old_to_new[v] >= 0) throw InvalidParam("duplicate node in induced set");
    ex.old_to_new[v] = i;
  }
  Graph sub(static_cast<int>(nodes.size()));
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    sub.set_color(i, g.color(nodes[i]));
  for (auto [a, b] : g.edges()) {
    int na = ex.old_to_new[a], nb = ex.old_to_new[b];
    if (na >= 0 && nb >= 0) sub.add_edge(na, nb);
  }
  ex.rg.g = std::move(sub);
  ex.rg.root = root_old >= 0 ? ex.old_to_new[root_old] : -1;
  return ex;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  int total = 0;
  for (const auto& p : parts) total += p.n();
  Graph g(total);
  int off = 0;
  for (const auto& p : parts) {
    for (int v = 0; v < p.n(); ++v) g.set_color(off + v, p.color(v));
    for (auto [a, b] : p.edges()) g.add_edge(off + a, off + b);
    off += p.n();
  }
  return g;
}

RootedGraph apex_join(const Graph& g) {
  Graph out(g.n() + 1);
  for (int v = 0; v < g.n(); ++v) out.set_color(v, g.color(v));
  for (auto [a, b] : g.edges()) out.add_edge(a, b);
  for (int v = 0; v < g.n(); ++v) out.add_edge(v, g.n());
  return RootedGraph{std::move(out), g.n()};
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n())
    throw InvalidParam("permutation size mismatch");
  std::vector<bool> seen(g.n(), false);
  for (int p : perm) {
    if (p < 0 || p >= g.n() || seen[p]) throw InvalidParam("not a permutation");
    seen[p] = true;
  }
  Graph out(g.n());
  for (int v = 0; v < g.n(); ++v) out.set_color(perm[v], g.color(v));
  for (auto [a, b] : g.edges()) out.add_edge(perm[a], perm[b]);
  return out;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidParam("cycle needs >= 3 nodes");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  if (n < 1) throw InvalidParam("path needs >= 1 node");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

}  // namespace wlx
