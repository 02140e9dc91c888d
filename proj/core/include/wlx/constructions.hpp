// Generators for every separation pair used by the analysis drivers. Each
// generator validates its own postconditions (sizes, regularity, degree
// profiles) and throws InvalidParam on bad parameters.
#pragma once

#include <string>
#include <vector>

#include "wlx/graph.hpp"

namespace wlx {

struct GraphPair {
  std::string name;
  Graph a, b;
  int root_a = -1, root_b = -1;  // -1 when the pair has no designated roots
};

// Two triangles vs a six-cycle: the classic degree-identical 1-WL-blind pair.
GraphPair gen_wl1_pair();

// Apex over (C_l + C_l) vs apex over C_{2l}; roots are the apexes. l >= 3.
GraphPair gen_cll_vs_c2l(int l);

// 4x4 rook's graph vs the Shrikhande graph (both SRG(16,6,2,2)); roots 0.
Graph gen_rook44();
Graph gen_shrikhande();
GraphPair gen_rook_shrikhande();

// C_{2k+2} vs C_{2k+3}, roots 0. k >= 1.
GraphPair gen_cycle_pair(int k);

// Path with k edges from root u to v; then a triangle at v (a) versus two
// pendant length-2 paths at v (b). Roots u. k >= 0.
GraphPair gen_swl_pair(int k);

// The 25-node marking-vs-removal pair: hub u over a 4-cycle and a 10-cycle
// (u adjacent to all 14 cycle nodes), chords placed differently per side, and
// one pendant leaf on every chordless cycle node. Roots u.
GraphPair gen_markdrop_pair();

// 3-regular base for the gadget construction: cycle 0..n0-1 plus chords
// (4i, 4i+2) and (4i+1, 4i+3). n0 must be a positive multiple of 4.
Graph gen_base_3regular(int n0);

// Gadget expansion of a 3-regular base graph: per base vertex the four even
// subsets of its incident edges, per incidence an outer pair; twist_edge
// swaps that base edge's outer join (-1 = untwisted). out_root, when given,
// receives the empty-subset gadget node of base vertex 0.
Graph cfi_graph(const Graph& base, int twist_edge, int* out_root = nullptr);

// Untwisted vs twisted expansion of gen_base_3regular(n0); the default twist
// is the cycle edge (n0/2 - 1, n0/2). Roots = empty-subset nodes of vertex 0.
GraphPair gen_cfi_pair(int n0);

// l2 copies of C_{l1} vs l1 copies of C_{l2}; both on l1*l2 nodes, unrooted.
// 3 <= l1 < l2.
GraphPair gen_copy_pair(int l1, int l2);

// Number of base edges of gen_base_3regular(n0) (twist positions).
int cfi_twist_positions(int n0);

// Registry used by the CLI: name -> generated pair, with integer params.
GraphPair generate_named(const std::string& name, int l, int k, int n0, int l1,
                         int l2);
std::vector<std::string> generator_names();

}  // namespace wlx
