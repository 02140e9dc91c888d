// Comparison drivers and counting analyses on top of the extensions:
// node/graph-level distinguish verdicts with witnesses, brute-force incident
// pattern counts, count-consistency scans (does equal color force equal
// count?), and the fixed hierarchy sanity rules used by the test suite.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wlx/extensions.hpp"
#include "wlx/graph.hpp"

namespace wlx {

enum class Verdict { SEPARATED, INSEPARABLE };
enum class Level { NODE, GRAPH };

std::string to_string(Verdict v);
std::string to_string(Level l);

struct DistinguishReport {
  Verdict verdict = Verdict::INSEPARABLE;
  std::string spec;     // canonical extension spec string
  Level level = Level::NODE;
  std::string witness;  // non-empty iff SEPARATED
};

// Node level: compare the extension's colors of the two roots.
DistinguishReport distinguish(const RootedGraph& a, const RootedGraph& b,
                              const ExtensionSpec& spec, Session& s);

// Graph level: compare readout multisets (joint stable runs for WL1/FWL).
DistinguishReport distinguish_graph(const Graph& a, const Graph& b,
                                    const ExtensionSpec& spec, Session& s);

enum class Pattern { CLIQUE, INDUCED_CYCLE };

struct CountQuery {
  Pattern pattern = Pattern::CLIQUE;
  int len = 3;  // >= 3; cliques up to 8, cycles up to 8, n <= 64
};

// Brute-force count of cliques / induced cycles through u.
long long incident_count(const Graph& g, int u, const CountQuery& q);

struct Occurrence {
  int graph = -1, node = -1;
  long long count = 0;
};

struct CanCountResult {
  bool well_defined = true;
  Occurrence first, second;  // the counterexample pair when !well_defined
};

// Scans every node of every corpus graph under one shared session; the
// extension "can count" the query iff equal extension color implies equal
// incident count. The first violation in scan order is reported.
CanCountResult can_count(const ExtensionSpec& spec,
                         const std::vector<Graph>& corpus, const CountQuery& q,
                         Session& s);

struct HierarchyViolation {
  std::string rule;
  int graph_a = -1, node_a = -1, graph_b = -1, node_b = -1;
};

// Fixed rule set over all node pairs of the corpus, one shared session:
//   wl1-into-ext:  plain WL1 separation implies every extension separates
//                  (checked for S/N/M/R at k <= 2),
//   s3-into-n1:    equal N_1 color implies equal S_3 color,
//   s3-into-fwl2:  equal 2-FWL diagonal color implies equal S_3 color,
//   remove-into-mark: M_1 REMOVE separation implies M_1 MARK separation.
// All at shared depth d. Returns every violation found.
std::vector<HierarchyViolation> hierarchy_sanity(const std::vector<Graph>& corpus,
                                                 int d, Session& s);

}  // namespace wlx
