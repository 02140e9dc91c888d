// The three refinement extensions and their node/graph-level colors.
//
//   S (census):      feature(u) = multiset of rooted certificates of all
//                    connected induced subgraphs containing u with <= k nodes.
//   N (ball certs):  feature(u) = rooted certificate of the induced ball of
//                    radius k around u.
//   M / R (runs):    for every subset of <= k nodes of the induced d-ball of
//                    u, rerun d rounds of refinement with the subset marked
//                    (M) or removed (R) and read the root's color; the
//                    profile maps subset size -> sorted readout multiset.
//
// Node-level extended color for S/N pairs the root's own feature with the
// root's plain d-round color; features of other nodes never enter. Graph
// level attaches features to every node, refines d rounds on the whole graph,
// and reads the color multiset.
#pragma once

#include <string>
#include <vector>

#include "wlx/canonical.hpp"
#include "wlx/graph.hpp"
#include "wlx/intern.hpp"

namespace wlx {

enum class ExtKind { WL1, KFWL, SK, NK, MK };
enum class MkMode { MARK, REMOVE };

struct ExtensionSpec {
  ExtKind kind = ExtKind::WL1;
  int k = 0;
  int d = 0;
  MkMode mode = MkMode::MARK;

  // Canonical display/parse form: WL1:d=2, FWL:2, S:3:d=2, N:1:d=2,
  // M:2:d=2:mark, M:2:d=2:remove (R:2:d=2 parses as the remove form).
  std::string str() const;
  static ExtensionSpec parse(const std::string& text);
};

// Throws InvalidParam when k/d are outside the kind's legal range.
void validate_spec(const ExtensionSpec& spec);

// Shared state for one comparison session: colors and certificates are only
// comparable between calls that used the same session.
struct Session {
  InternTable table;
  CertCache certs;
  long long run_budget;   // M/R runs and census sets (WLX_RUN_BUDGET, 2*10^6)
  Session();
};

// S feature: per size s in 1..k the sorted certificate-id multiset; flattened
// into one interned id. Requires k <= d+1 or ecc(u) <= d when used inside an
// extended color (validity of the d-round readout); the census itself only
// needs k >= 1.
std::vector<std::vector<int>> sk_census(const Graph& g, int u, int k, Session& s);
int sk_feature_id(const Graph& g, int u, int k, Session& s);

// N feature: rooted certificate of the induced radius-k ball.
int nk_feature_id(const Graph& g, int u, int k, Session& s);

// Throws InvalidParam unless k <= d+1 or ecc(u) <= d (the d-round readout
// cannot see a census that reaches outside the d-ball otherwise).
void check_sk_valid(const Graph& g, int u, int k, int d);

// Node-level extended color: WL1 is the plain d-round color, SK/NK pair the
// root's feature with its d-round color, MK interns the run profile. KFWL
// needs a joint run over the graphs being compared and lives in analysis.
int extended_rooted_color(const Graph& g, int u, const ExtensionSpec& spec,
                          Session& s);

// profile[j] = sorted readouts over all j-subsets, j = 0..k. REMOVE runs whose
// subset contains the root read out InternTable::kRootRemoved.
using MkProfile = std::vector<std::vector<int>>;
MkProfile mk_run_profile(const Graph& g, int u, int k, int d, MkMode mode,
                         Session& s);
int mk_profile_id(const MkProfile& profile, Session& s);

struct MkComparison {
  bool inseparable = true;
  int witness_size = -1;  // smallest subset size whose multisets differ
};
MkComparison mk_compare(const Graph& g1, int u1, const Graph& g2, int u2, int k,
                        int d, MkMode mode, Session& s);

// Graph-level init colors (every node carries its own feature) for SK/NK.
// Throws InvalidParam when the kind's graph-level precondition fails
// (SK: k <= d+1 or all eccentricities <= d; NK: k < d).
std::vector<int> graph_feature_colors(const Graph& g, const ExtensionSpec& spec,
                                      Session& s);

// Graph-level readout multiset after d rounds (WL1/SK/NK) or the multiset of
// per-node profile ids (MK). KFWL graph level lives in analysis (joint runs).
std::vector<int> graph_level_multiset(const Graph& g, const ExtensionSpec& spec,
                                      Session& s);

}  // namespace wlx
