#include "wlx/constructions.hpp"

#include <algorithm>
#include <array>

#include "wlx/errors.hpp"

namespace wlx {

namespace {

void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvalidParam("generator postcondition failed: " + what);
}

void ensure_regular(const Graph& g, int deg, const std::string& name) {
  for (int v = 0; v < g.n(); ++v)
    ensure(g.degree(v) == deg, name + " regularity");
}

}  // namespace

GraphPair gen_wl1_pair() {
  GraphPair p;
  p.name = "wl1_pair";
  p.a = disjoint_union({cycle_graph(3), cycle_graph(3)});
  p.b = cycle_graph(6);
  ensure(p.a.n() == 6 && p.b.n() == 6 && p.a.m() == 6 && p.b.m() == 6,
         "wl1_pair sizes");
  ensure_regular(p.a, 2, "wl1_pair");
  ensure_regular(p.b, 2, "wl1_pair");
  return p;
}

GraphPair gen_cll_vs_c2l(int l) {
  if (l < 3) throw InvalidParam("cycle length parameter must be >= 3");
  GraphPair p;
  p.name = "cll_vs_c2l";
  auto ra = apex_join(disjoint_union({cycle_graph(l), cycle_graph(l)}));
  auto rb = apex_join(cycle_graph(2 * l));
  p.a = ra.g;
  p.b = rb.g;
  p.root_a = ra.root;
  p.root_b = rb.root;
  ensure(p.a.n() == 2 * l + 1 && p.b.n() == 2 * l + 1, "apexed pair size");
  ensure(p.a.degree(p.root_a) == 2 * l && p.b.degree(p.root_b) == 2 * l,
         "apex degree");
  for (int v = 0; v < 2 * l; ++v)
    ensure(p.a.degree(v) == 3 && p.b.degree(v) == 3, "cycle node degree");
  return p;
}

Graph gen_rook44() {
  Graph g(16);
  auto id = [](int r, int c) { return r * 4 + c; };
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      for (int c2 = c + 1; c2 < 4; ++c2) g.add_edge(id(r, c), id(r, c2));
      for (int r2 = r + 1; r2 < 4; ++r2) g.add_edge(id(r, c), id(r2, c));
    }
  ensure(g.m() == 48, "rook edge count");
  ensure_regular(g, 6, "rook");
  return g;
}

Graph gen_shrikhande() {
  Graph g(16);
  auto id = [](int x, int y) { return ((x % 4) + 4) % 4 * 4 + ((y % 4) + 4) % 4; };
  const std::array<std::pair<int, int>, 3> steps{{{1, 0}, {0, 1}, {1, 1}}};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (auto [dx, dy] : steps) {
        int a = id(x, y), b = id(x + dx, y + dy);
        if (!g.has_edge(a, b)) g.add_edge(a, b);
      }
  ensure(g.m() == 48, "shrikhande edge count");
  ensure_regular(g, 6, "shrikhande");
  return g;
}

GraphPair gen_rook_shrikhande() {
  GraphPair p;
  p.name = "rook_shrikhande";
  p.a = gen_rook44();
  p.b = gen_shrikhande();
  p.root_a = 0;
  p.root_b = 0;
  return p;
}

GraphPair gen_cycle_pair(int k) {
  if (k < 1) throw InvalidParam("cycle pair parameter must be >= 1");
  GraphPair p;
  p.name = "cycle_pair";
  p.a = cycle_graph(2 * k + 2);
  p.b = cycle_graph(2 * k + 3);
  p.root_a = 0;
  p.root_b = 0;
  return p;
}

GraphPair gen_swl_pair(int k) {
  if (k < 0) throw InvalidParam("path length must be >= 0");
  GraphPair p;
  p.name = "swl_pair";
  const int v = k;  // path 0..k, root u = 0
  {
    Graph a(k + 3);
    for (int i = 0; i < k; ++i) a.add_edge(i, i + 1);
    a.add_edge(v, k + 1);
    a.add_edge(v, k + 2);
    a.add_edge(k + 1, k + 2);
    p.a = std::move(a);
  }
  {
    Graph b(k + 5);
    for (int i = 0; i < k; ++i) b.add_edge(i, i + 1);
    b.add_edge(v, k + 1);
    b.add_edge(k + 1, k + 2);
    b.add_edge(v, k + 3);
    b.add_edge(k + 3, k + 4);
    p.b = std::move(b);
  }
  p.root_a = 0;
  p.root_b = 0;
  ensure(p.a.n() == k + 3 && p.b.n() == k + 5, "swl pair sizes");
  return p;
}

GraphPair gen_markdrop_pair() {
  // Node ids: 0 = hub u, 1..4 = 4-cycle, 5..14 = 10-cycle, 15..24 = leaves.
  auto build = [](bool first) {
    Graph g(25);
    for (int i = 0; i < 4; ++i) g.add_edge(1 + i, 1 + (i + 1) % 4);
    for (int i = 0; i < 10; ++i) g.add_edge(5 + i, 5 + (i + 1) % 10);
    for (int v = 1; v <= 14; ++v) g.add_edge(0, v);
    std::vector<int> chorded;
    if (first) {
      g.add_edge(5 + 0, 5 + 2);
      g.add_edge(5 + 5, 5 + 7);
      chorded = {5, 7, 10, 12};
    } else {
      g.add_edge(5 + 0, 5 + 5);
      g.add_edge(1 + 0, 1 + 2);
      chorded = {1, 3, 5, 10};
    }
    int leaf = 15;
    for (int v = 1; v <= 14; ++v)
      if (std::find(chorded.begin(), chorded.end(), v) == chorded.end())
        g.add_edge(v, leaf++);
    ensure(leaf == 25, "markdrop leaf count");
    return g;
  };
  GraphPair p;
  p.name = "markdrop";
  p.a = build(true);
  p.b = build(false);
  p.root_a = 0;
  p.root_b = 0;
  for (const Graph* g : {&p.a, &p.b}) {
    ensure(g->degree(0) == 14, "hub degree");
    int deg4 = 0, deg1 = 0;
    for (int v = 1; v < 25; ++v) {
      if (g->degree(v) == 4) ++deg4;
      if (g->degree(v) == 1) ++deg1;
    }
    ensure(deg4 == 14 && deg1 == 10, "markdrop degree profile");
  }
  return p;
}

Graph gen_base_3regular(int n0) {
  if (n0 < 4 || n0 % 4 != 0)
    throw InvalidParam("base size must be a positive multiple of 4");
  Graph g(n0);
  for (int i = 0; i < n0; ++i)
    if (!g.has_edge(i, (i + 1) % n0)) g.add_edge(i, (i + 1) % n0);
  for (int i = 0; i < n0 / 4; ++i) {
    if (!g.has_edge(4 * i, 4 * i + 2)) g.add_edge(4 * i, 4 * i + 2);
    if (!g.has_edge(4 * i + 1, 4 * i + 3)) g.add_edge(4 * i + 1, 4 * i + 3);
  }
  ensure_regular(g, 3, "base");
  return g;
}

Graph cfi_graph(const Graph& base, int twist_edge, int* out_root) {
  const int n0 = base.n();
  for (int v = 0; v < n0; ++v)
    if (base.degree(v) != 3) throw InvalidParam("gadget base must be 3-regular");
  auto base_edges = base.sorted_edges();
  const int m0 = static_cast<int>(base_edges.size());
  if (twist_edge < -1 || twist_edge >= m0)
    throw InvalidParam("twist edge out of range");

  // Edge ids by sorted order; per vertex the 3 incident edge ids, ascending.
  std::vector<std::array<int, 3>> inc(n0, {-1, -1, -1});
  std::vector<int> fill(n0, 0);
  for (int e = 0; e < m0; ++e) {
    auto [x, y] = base_edges[e];
    inc[x][fill[x]++] = e;
    inc[y][fill[y]++] = e;
  }

  // Layout: per vertex v, 4 gadget nodes at 4v + s, s indexing the even
  // subsets {}, {e1,e2}, {e1,e3}, {e2,e3} of inc[v]. Outer pairs follow:
  // for incidence index (ordered by (v, slot)), nodes base_off + 2*idx (a)
  // and base_off + 2*idx + 1 (b).
  const int base_off = 4 * n0;
  auto incidence_index = [&](int v, int e) {
    for (int s = 0; s < 3; ++s)
      if (inc[v][s] == e) return v * 3 + s;
    throw InvalidParam("incidence lookup failed");
  };
  auto a_node = [&](int v, int e) { return base_off + 2 * incidence_index(v, e); };
  auto b_node = [&](int v, int e) { return a_node(v, e) + 1; };

  Graph g(4 * n0 + 2 * 3 * n0);
  const std::array<std::array<bool, 3>, 4> even_subsets{{
      {false, false, false},
      {true, true, false},
      {true, false, true},
      {false, true, true},
  }};
  for (int v = 0; v < n0; ++v)
    for (int s = 0; s < 4; ++s) {
      int inner = 4 * v + s;
      for (int slot = 0; slot < 3; ++slot) {
        int e = inc[v][slot];
        int outer = even_subsets[s][slot] ? a_node(v, e) : b_node(v, e);
        g.add_edge(inner, outer);
      }
    }
  for (int e = 0; e < m0; ++e) {
    auto [x, y] = base_edges[e];
    if (e == twist_edge) {
      g.add_edge(a_node(x, e), b_node(y, e));
      g.add_edge(b_node(x, e), a_node(y, e));
    } else {
      g.add_edge(a_node(x, e), a_node(y, e));
      g.add_edge(b_node(x, e), b_node(y, e));
    }
  }
  ensure(g.n() == 10 * n0 && g.m() == 12 * n0 + 3 * n0, "gadget graph size");
  ensure_regular(g, 3, "gadget graph");
  if (out_root) *out_root = 0;  // empty-subset node of vertex 0
  return g;
}

GraphPair gen_cfi_pair(int n0) {
  Graph base = gen_base_3regular(n0);
  auto edges = base.sorted_edges();
  int twist = -1;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    if (edges[e] == std::make_pair(n0 / 2 - 1, n0 / 2)) twist = e;
  ensure(twist >= 0, "default twist edge present");
  GraphPair p;
  p.name = "cfi";
  p.a = cfi_graph(base, -1, &p.root_a);
  p.b = cfi_graph(base, twist, &p.root_b);
  return p;
}

GraphPair gen_copy_pair(int l1, int l2) {
  if (l1 < 3 || l2 <= l1) throw InvalidParam("copy pair needs 3 <= l1 < l2");
  std::vector<Graph> as(l2, cycle_graph(l1));
  std::vector<Graph> bs(l1, cycle_graph(l2));
  GraphPair p;
  p.name = "copy_pair";
  p.a = disjoint_union(as);
  p.b = disjoint_union(bs);
  ensure(p.a.n() == l1 * l2 && p.b.n() == l1 * l2, "copy pair sizes");
  return p;
}

int cfi_twist_positions(int n0) {
  return gen_base_3regular(n0).m();
}

GraphPair generate_named(const std::string& name, int l, int k, int n0, int l1,
                         int l2) {
  if (name == "wl1_pair") return gen_wl1_pair();
  if (name == "cll_vs_c2l") return gen_cll_vs_c2l(l);
  if (name == "rook44") {
    GraphPair p;
    p.name = "rook44";
    p.a = gen_rook44();
    p.b = Graph();
    return p;
  }
  if (name == "shrikhande") {
    GraphPair p;
    p.name = "shrikhande";
    p.a = gen_shrikhande();
    p.b = Graph();
    return p;
  }
  if (name == "rook_shrikhande") return gen_rook_shrikhande();
  if (name == "cycle_pair") return gen_cycle_pair(k);
  if (name == "swl_pair") return gen_swl_pair(k);
  if (name == "markdrop") return gen_markdrop_pair();
  if (name == "base3reg") {
    GraphPair p;
    p.name = "base3reg";
    p.a = gen_base_3regular(n0);
    p.b = Graph();
    return p;
  }
  if (name == "cfi") return gen_cfi_pair(n0);
  if (name == "copy_pair") return gen_copy_pair(l1, l2);
  throw InvalidParam("unknown generator '" + name + "'");
}

std::vector<std::string> generator_names() {
  return {"wl1_pair",  "cll_vs_c2l", "rook44",   "shrikhande",
          "rook_shrikhande", "cycle_pair", "swl_pair", "markdrop",
          "base3reg",  "cfi",        "copy_pair"};
}

}  // namespace wlx
