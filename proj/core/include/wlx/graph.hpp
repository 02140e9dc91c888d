// Undirected simple graphs with optional integer node colors, plus the
// neighborhood-extraction and composition operations everything else builds on.
// Neighbor lists are kept sorted; node ids are 0-based and dense.
#pragma once

#include <utility>
#include <vector>

namespace wlx {

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  // Throws InvalidParam on self-loops, out-of-range ids, or duplicates.
  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Edges as (a, b) with a < b, in insertion order; sorted_edges() is lex.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::vector<std::pair<int, int>> sorted_edges() const;

  int color(int v) const { return colors_[v]; }
  void set_color(int v, int c) { colors_[v] = c; }
  const std::vector<int>& colors() const { return colors_; }

  bool operator==(const Graph& o) const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> colors_;
};

struct RootedGraph {
  Graph g;
  int root = 0;
};

// Result of extracting a neighborhood: the sub graph plus the old-id -> new-id
// map (-1 for nodes outside the extraction).
struct Extraction {
  RootedGraph rg;
  std::vector<int> old_to_new;
};

// BFS distances from u; -1 for unreachable nodes.
std::vector<int> bfs_distances(const Graph& g, int u);

// Max finite BFS distance from u.
int eccentricity(const Graph& g, int u);

// Nodes at distance <= d from u, with exactly the edges a d-round
// message-passing computation at u can traverse: an edge survives iff one
// endpoint is at distance <= d-1. New ids follow (distance, old id) order.
Extraction message_passing_neighborhood(const Graph& g, int u, int d);

// Nodes at distance <= k from u with ALL edges among them (induced ball).
Extraction induced_radius_neighborhood(const Graph& g, int u, int k);

// Induced subgraph on the given nodes (need not be sorted; ids dedup-checked).
Extraction induced_subgraph(const Graph& g, const std::vector<int>& nodes,
                            int root_old = -1);

Graph disjoint_union(const std::vector<Graph>& parts);

// New node adjacent to every existing node; returned graph is rooted there.
RootedGraph apex_join(const Graph& g);

// Relabel nodes by perm (new id of v = perm[v]); perm must be a permutation.
Graph permuted(const Graph& g, const std::vector<int>& perm);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);

}  // namespace wlx
