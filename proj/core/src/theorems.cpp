#include "wlx/theorems.hpp"

#include <chrono>
#include <functional>

#include "wlx/analysis.hpp"
#include "wlx/canonical.hpp"
#include "wlx/constructions.hpp"
#include "wlx/corpus.hpp"
#include "wlx/errors.hpp"
#include "wlx/refine.hpp"

namespace wlx {

namespace {

long long param(const TheoremOptions& opt, const std::string& key,
                long long def) {
  auto it = opt.params.find(key);
  return it == opt.params.end() ? def : it->second;
}

struct Builder {
  TheoremReport rep;
  Session session;

  void expect_verdict(const std::string& subject, Verdict expected,
                      const DistinguishReport& got) {
    Claim c;
    c.subject = subject;
    c.expected = to_string(expected);
    c.observed = to_string(got.verdict);
    c.witness = got.witness;
    c.pass = got.verdict == expected;
    rep.claims.push_back(std::move(c));
  }

  void expect_node(const RootedGraph& a, const RootedGraph& b,
                   const std::string& spec_text, Verdict expected) {
    auto spec = ExtensionSpec::parse(spec_text);
    expect_verdict(spec.str() + " node", expected,
                   distinguish(a, b, spec, session));
  }

  void expect_graph(const Graph& a, const Graph& b, const std::string& spec_text,
                    Verdict expected) {
    auto spec = ExtensionSpec::parse(spec_text);
    expect_verdict(spec.str() + " graph", expected,
                   distinguish_graph(a, b, spec, session));
  }

  void expect_count(const std::string& spec_text,
                    const std::vector<Graph>& corpus, const CountQuery& q,
                    bool expect_well_defined) {
    auto spec = ExtensionSpec::parse(spec_text);
    auto res = can_count(spec, corpus, q, session);
    Claim c;
    c.subject = spec.str() + (q.pattern == Pattern::CLIQUE ? " count cliques "
                                                           : " count cycles ") +
                std::to_string(q.len);
    c.expected = expect_well_defined ? "WELL_DEFINED" : "COUNTEREXAMPLE";
    c.observed = res.well_defined ? "WELL_DEFINED" : "COUNTEREXAMPLE";
    if (!res.well_defined)
      c.witness = "g" + std::to_string(res.first.graph) + ":n" +
                  std::to_string(res.first.node) + " count " +
                  std::to_string(res.first.count) + " vs g" +
                  std::to_string(res.second.graph) + ":n" +
                  std::to_string(res.second.node) + " count " +
                  std::to_string(res.second.count);
    c.pass = res.well_defined == expect_well_defined;
    rep.claims.push_back(std::move(c));
  }

  void expect_flag(const std::string& subject, bool expected, bool observed,
                   std::string witness = {}) {
    Claim c;
    c.subject = subject;
    c.expected = expected ? "true" : "false";
    c.observed = observed ? "true" : "false";
    c.witness = std::move(witness);
    c.pass = expected == observed;
    rep.claims.push_back(std::move(c));
  }
};

RootedGraph rooted(const Graph& g, int root) { return RootedGraph{g, root}; }

// Class counts never shrink and classes never merge along a refinement trace.
bool refinement_monotone(const Graph& g, Session& s) {
  auto cur = interned_node_colors(g, s.table);
  for (int round = 0; round < g.n() + 1; ++round) {
    auto next = refine_once(g, cur, s.table);
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v)
        if (next[u] == next[v] && cur[u] != cur[v]) return false;
    cur = std::move(next);
  }
  return true;
}

void run_thm1(Builder& b, const TheoremOptions& opt) {
  const int d = static_cast<int>(param(opt, "d", 2));
  const int k = static_cast<int>(param(opt, "k", 2));
  b.rep.title = "marking runs separate the hub pair that removal runs miss";
  b.rep.params = {{"d", d}, {"k", k}};
  auto p = gen_markdrop_pair();
  auto a = rooted(p.a, p.root_a), bb = rooted(p.b, p.root_b);
  std::string base = std::to_string(k) + ":d=" + std::to_string(d);
  b.expect_node(a, bb, "R:" + base, Verdict::INSEPARABLE);
  b.expect_node(a, bb, "M:" + base, Verdict::SEPARATED);
}

void run_thm2(Builder& b, const TheoremOptions& opt) {
  const int count = static_cast<int>(param(opt, "count", 40));
  const int max_n = static_cast<int>(param(opt, "max_n", 9));
  b.rep.title = "injective updates: monotone refinement, marking covers removal";
  b.rep.params = {{"count", count}, {"max_n", max_n},
                  {"seed", static_cast<long long>(opt.seed)}};
  auto corpus = random_connected_corpus(5, max_n, count, opt.seed);
  bool monotone = true;
  for (const auto& g : corpus) monotone = monotone && refinement_monotone(g, b.session);
  b.expect_flag("refinement monotonicity over random corpus", true, monotone);
  auto violations = hierarchy_sanity(corpus, 3, b.session);
  b.expect_flag("hierarchy sanity violations == 0", true, violations.empty(),
                violations.empty() ? "" : violations.front().rule);
}

void run_thm3(Builder& b, const TheoremOptions& opt) {
  const int l = static_cast<int>(param(opt, "l", 5));
  const int k = static_cast<int>(param(opt, "k", 2));
  const int d = static_cast<int>(param(opt, "d", 2));
  b.rep.title = "apexed twin-cycles vs double cycle: ball certs and 2-tuples see "
                "what censuses and runs miss";
  b.rep.params = {{"l", l}, {"k", k}, {"d", d}};
  auto p = gen_cll_vs_c2l(l);
  auto a = rooted(p.a, p.root_a), bb = rooted(p.b, p.root_b);
  std::string ds = "d=" + std::to_string(d);
  b.expect_node(a, bb, "N:1:" + ds, Verdict::SEPARATED);
  b.expect_node(a, bb, "FWL:2", Verdict::SEPARATED);
  b.expect_node(a, bb, "S:" + std::to_string(l) + ":" + ds, Verdict::INSEPARABLE);
  // One claim covering both run modes: inseparable means neither mode splits.
  auto mark = distinguish(a, bb,
                          ExtensionSpec{ExtKind::MK, k, d, MkMode::MARK},
                          b.session);
  auto remove = distinguish(a, bb,
                            ExtensionSpec{ExtKind::MK, k, d, MkMode::REMOVE},
                            b.session);
  Claim c;
  c.subject = "M:" + std::to_string(k) + ":" + ds + " node (mark and remove)";
  c.expected = to_string(Verdict::INSEPARABLE);
  bool insep = mark.verdict == Verdict::INSEPARABLE &&
               remove.verdict == Verdict::INSEPARABLE;
  c.observed = insep ? "INSEPARABLE" : "SEPARATED";
  c.witness = mark.verdict == Verdict::SEPARATED ? mark.witness : remove.witness;
  c.pass = insep;
  b.rep.claims.push_back(std::move(c));
}

void run_thm4(Builder& b, const TheoremOptions& opt) {
  const int n0 = static_cast<int>(param(opt, "n0", 8));
  b.rep.title = "radius-1 ball certificates beat 2-tuple refinement on apexed "
                "gadget pairs";
  b.rep.params = {{"n0", n0}};
  auto p = gen_cfi_pair(n0);
  b.expect_graph(p.a, p.b, "FWL:2", Verdict::INSEPARABLE);
  auto aa = apex_join(p.a);
  auto ab = apex_join(p.b);
  b.expect_node(aa, ab, "N:1:d=2", Verdict::SEPARATED);
}

void run_thm5(Builder& b, const TheoremOptions& opt) {
  const int k = static_cast<int>(param(opt, "k", 2));
  const int d = static_cast<int>(param(opt, "d", k + 1));
  b.rep.title = "one marking run beats radius-k balls and size-(2k+1) censuses "
                "on near-equal cycles";
  b.rep.params = {{"k", k}, {"d", d}};
  auto p = gen_cycle_pair(k);
  auto a = rooted(p.a, p.root_a), bb = rooted(p.b, p.root_b);
  std::string ds = "d=" + std::to_string(d);
  b.expect_node(a, bb, "M:1:" + ds + ":mark", Verdict::SEPARATED);
  b.expect_node(a, bb, "N:" + std::to_string(k) + ":" + ds, Verdict::INSEPARABLE);
  b.expect_node(a, bb, "S:" + std::to_string(2 * k + 1) + ":" + ds,
                Verdict::INSEPARABLE);
}

void run_thm6(Builder& b, const TheoremOptions& opt) {
  const int d = static_cast<int>(param(opt, "d", 2));
  b.rep.title = "two marks split the strongly regular twins that 2-tuples miss";
  b.rep.params = {{"d", d}};
  auto p = gen_rook_shrikhande();
  b.expect_graph(p.a, p.b, "FWL:2", Verdict::INSEPARABLE);
  b.expect_node(rooted(p.a, 0), rooted(p.b, 0),
                "M:2:d=" + std::to_string(d) + ":mark", Verdict::SEPARATED);
}

void run_thm7(Builder& b, const TheoremOptions& opt) {
  const int k = static_cast<int>(param(opt, "k", 1));
  const int d = static_cast<int>(param(opt, "d", k + 2));
  const int max_n = static_cast<int>(param(opt, "max_n", 7));
  b.rep.title = "size-(k+2) censuses within radius-k balls; size-(k+3) beyond";
  b.rep.params = {{"k", k}, {"d", d}, {"max_n", max_n}};

  // Containment: equal N_k color must force equal S_{k+2} color.
  auto corpus = exhaustive_connected(max_n);
  std::string nk = "N:" + std::to_string(k) + ":d=" + std::to_string(d);
  std::string sk2 = "S:" + std::to_string(k + 2) + ":d=" + std::to_string(d);
  auto nspec = ExtensionSpec::parse(nk);
  auto sspec = ExtensionSpec::parse(sk2);
  long long violations = 0;
  {
    std::map<int, int> strong_to_weak;
    for (const auto& g : corpus)
      for (int v = 0; v < g.n(); ++v) {
        int ncol = extended_rooted_color(g, v, nspec, b.session);
        int scol = extended_rooted_color(g, v, sspec, b.session);
        auto [it, inserted] = strong_to_weak.emplace(ncol, scol);
        if (!inserted && it->second != scol) ++violations;
      }
  }
  b.expect_flag("equal " + nk + " forces equal " + sk2 + " (violations == 0)",
                true, violations == 0,
                violations ? std::to_string(violations) + " violations" : "");

  auto p = gen_swl_pair(k);
  auto a = rooted(p.a, p.root_a), bb = rooted(p.b, p.root_b);
  b.expect_node(a, bb, nk, Verdict::INSEPARABLE);
  b.expect_node(a, bb, "S:" + std::to_string(k + 3) + ":d=" + std::to_string(d),
                Verdict::SEPARATED);
}

void run_thm8(Builder& b, const TheoremOptions& opt) {
  const int d = static_cast<int>(param(opt, "d", 3));
  b.rep.title = "size-4 censuses beat 2-tuples on the strongly regular twins";
  b.rep.params = {{"d", d}};
  auto p = gen_rook_shrikhande();
  auto a = rooted(p.a, 0), bb = rooted(p.b, 0);
  b.expect_graph(p.a, p.b, "FWL:2", Verdict::INSEPARABLE);
  b.expect_node(a, bb, "S:4:d=" + std::to_string(d), Verdict::SEPARATED);
  b.expect_node(a, bb, "S:3:d=2", Verdict::INSEPARABLE);
}

void run_thm9(Builder& b, const TheoremOptions& opt) {
  const int k = static_cast<int>(param(opt, "k", 1));
  const int d = static_cast<int>(param(opt, "d", 2));
  b.rep.title = "size-(2k+2) censuses beat k marking runs on apexed twin cycles";
  b.rep.params = {{"k", k}, {"d", d}};
  auto p = gen_cll_vs_c2l(2 * k + 1);
  auto a = rooted(p.a, p.root_a), bb = rooted(p.b, p.root_b);
  std::string ds = "d=" + std::to_string(d);
  b.expect_node(a, bb, "M:" + std::to_string(k) + ":" + ds + ":mark",
                Verdict::INSEPARABLE);
  b.expect_node(a, bb, "S:" + std::to_string(2 * k + 2) + ":" + ds,
                Verdict::SEPARATED);
}

void run_thm10(Builder& b, const TheoremOptions& opt) {
  const int n0 = static_cast<int>(param(opt, "n0", 8));
  b.rep.title = "gadget pairs: nonisomorphic yet blind to refinement, 2-tuples, "
                "and small marking runs";
  auto p = gen_cfi_pair(n0);
  const int d = static_cast<int>(
      param(opt, "d", eccentricity(p.a, p.root_a)));
  b.rep.params = {{"n0", n0}, {"d", d}};

  b.expect_flag("pair is nonisomorphic", true, !are_isomorphic(p.a, p.b));
  b.expect_graph(p.a, p.b, "WL1", Verdict::INSEPARABLE);
  b.expect_graph(p.a, p.b, "FWL:2", Verdict::INSEPARABLE);
  auto a = rooted(p.a, p.root_a), bb = rooted(p.b, p.root_b);
  std::string ds = "d=" + std::to_string(d);
  b.expect_node(a, bb, "M:1:" + ds + ":mark", Verdict::INSEPARABLE);
  b.expect_node(a, bb, "M:2:" + ds + ":mark", Verdict::INSEPARABLE);

  auto aa = apex_join(p.a);
  auto ab = apex_join(p.b);
  b.expect_node(aa, ab, "N:1:d=2", Verdict::SEPARATED);

  // Twist position must not matter: every twisted variant is isomorphic.
  Graph base = gen_base_3regular(n0);
  const int positions = base.m();
  Certificate ref;
  int iso_count = 0;
  for (int e = 0; e < positions; ++e) {
    auto cert = certificate(cfi_graph(base, e));
    if (e == 0) ref = cert;
    if (cert == ref) ++iso_count;
  }
  b.expect_flag("twist mobility: all " + std::to_string(positions) +
                    " twist positions isomorphic",
                true, iso_count == positions,
                std::to_string(iso_count) + "/" + std::to_string(positions));
}

void run_thm11(Builder& b, const TheoremOptions& opt) {
  const int k = static_cast<int>(param(opt, "k", 3));
  const int d = static_cast<int>(param(opt, "d", std::max(2, k - 1)));
  b.rep.title = "censuses count their own size: cliques and cycles up to k, "
                "but not (k+1)-cycles";
  b.rep.params = {{"k", k}, {"d", d}};
  std::string sk = "S:" + std::to_string(k) + ":d=" + std::to_string(d);

  auto wl1 = gen_wl1_pair();
  auto rs = gen_rook_shrikhande();
  auto cll = gen_cll_vs_c2l(3);
  std::vector<Graph> corpus{wl1.a, wl1.b, rs.a, rs.b, cll.a, cll.b};
  b.expect_count(sk, corpus, {Pattern::CLIQUE, k}, true);

  corpus.push_back(cycle_graph(k + 1));
  corpus.push_back(cycle_graph(k + 2));
  b.expect_count(sk, corpus, {Pattern::INDUCED_CYCLE, k}, true);
  std::vector<Graph> cycles{cycle_graph(k + 1), cycle_graph(k + 2)};
  b.expect_count(sk, cycles, {Pattern::INDUCED_CYCLE, k + 1}, false);
}

void run_thm12(Builder& b, const TheoremOptions& opt) {
  const int k = static_cast<int>(param(opt, "k", 2));
  const int d = static_cast<int>(param(opt, "d", k + 1));
  b.rep.title = "ball certificates count cliques and short cycles, but not "
                "(2k+2)-cycles";
  b.rep.params = {{"k", k}, {"d", d}};

  auto rs = gen_rook_shrikhande();
  std::vector<Graph> rs_corpus{rs.a, rs.b};
  b.expect_count("N:1:d=2", rs_corpus, {Pattern::CLIQUE, 4}, true);

  auto cyc = gen_cycle_pair(k);
  std::vector<Graph> cyc_corpus{cyc.a, cyc.b};
  std::string nk = "N:" + std::to_string(k) + ":d=" + std::to_string(d);
  b.expect_count(nk, cyc_corpus, {Pattern::INDUCED_CYCLE, 2 * k + 1}, true);
  b.expect_count(nk, cyc_corpus, {Pattern::INDUCED_CYCLE, 2 * k + 2}, false);
}

void run_thm13(Builder& b, const TheoremOptions& opt) {
  const int k = static_cast<int>(param(opt, "k", 2));
  const int d = static_cast<int>(param(opt, "d", 3));
  b.rep.title = "k marking runs count (k+2)-cliques; smaller k misses them";
  b.rep.params = {{"k", k}, {"d", d}};

  auto rs = gen_rook_shrikhande();
  std::vector<Graph> rs_corpus{rs.a, rs.b};
  b.expect_count("M:" + std::to_string(k) + ":d=" + std::to_string(d) + ":mark",
                 rs_corpus, {Pattern::CLIQUE, k + 2}, true);

  auto wl1 = gen_wl1_pair();
  std::vector<Graph> wl1_corpus{wl1.a, wl1.b};
  b.expect_count("M:0:d=2:mark", wl1_corpus, {Pattern::CLIQUE, 3}, false);

  auto cll = gen_cll_vs_c2l(3);
  std::vector<Graph> cll_corpus{cll.a, cll.b};
  b.expect_count("M:1:d=2:mark", cll_corpus, {Pattern::CLIQUE, 4}, false);
}

void run_thm14(Builder& b, const TheoremOptions& opt) {
  const int k = static_cast<int>(param(opt, "k", 2));
  const int d = static_cast<int>(param(opt, "d", k + 1));
  b.rep.title = "k marking runs with d >= k+1 count (k+1)-cycles";
  b.rep.params = {{"k", k}, {"d", d}};
  auto wl1 = gen_wl1_pair();
  auto cll = gen_cll_vs_c2l(3);
  std::vector<Graph> corpus{wl1.a, wl1.b, cll.a, cll.b};
  b.expect_count("M:" + std::to_string(k) + ":d=" + std::to_string(d) + ":mark",
                 corpus, {Pattern::INDUCED_CYCLE, k + 1}, true);
}

void run_appg1(Builder& b, const TheoremOptions& opt) {
  const int l1 = static_cast<int>(param(opt, "l1", 6));
  const int l2 = static_cast<int>(param(opt, "l2", 7));
  const int d = static_cast<int>(param(opt, "d", 3));
  b.rep.title = "cycle-copy pairs at graph level: censuses blind, one marking "
                "run separates";
  b.rep.params = {{"l1", l1}, {"l2", l2}, {"d", d}};
  auto p = gen_copy_pair(l1, l2);
  std::string ds = "d=" + std::to_string(d);
  b.expect_graph(p.a, p.b, "WL1", Verdict::INSEPARABLE);
  b.expect_graph(p.a, p.b, "S:" + std::to_string(l1 - 1) + ":" + ds,
                 Verdict::INSEPARABLE);
  b.expect_graph(p.a, p.b, "M:1:" + ds + ":mark", Verdict::SEPARATED);
}

void run_appg2(Builder& b, const TheoremOptions& opt) {
  const int l = static_cast<int>(param(opt, "l", 7));
  const int d = static_cast<int>(param(opt, "d", 3));
  b.rep.title = "apexed twin cycles at graph level: single markings and "
                "small censuses blind; pair markings separate (the apex "
                "broadcasts the marked pair's distance class), as do the "
                "full-cycle census and ball certificates";
  b.rep.params = {{"l", l}, {"d", d}};
  auto p = gen_cll_vs_c2l(l);
  std::string ds = "d=" + std::to_string(d);
  b.expect_graph(p.a, p.b, "M:1:" + ds + ":mark", Verdict::INSEPARABLE);
  b.expect_graph(p.a, p.b, "M:2:" + ds + ":mark", Verdict::SEPARATED);
  b.expect_graph(p.a, p.b, "S:" + std::to_string(l - 1) + ":" + ds,
                 Verdict::INSEPARABLE);
  b.expect_graph(p.a, p.b, "S:" + std::to_string(l) + ":" + ds,
                 Verdict::SEPARATED);
  b.expect_graph(p.a, p.b, "N:1:" + ds, Verdict::SEPARATED);
}

using Runner = void (*)(Builder&, const TheoremOptions&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> reg = {
      {"thm1", run_thm1},   {"thm2", run_thm2},   {"thm3", run_thm3},
      {"thm4", run_thm4},   {"thm5", run_thm5},   {"thm6", run_thm6},
      {"thm7", run_thm7},   {"thm8", run_thm8},   {"thm9", run_thm9},
      {"thm10", run_thm10}, {"thm11", run_thm11}, {"thm12", run_thm12},
      {"thm13", run_thm13}, {"thm14", run_thm14}, {"appg1", run_appg1},
      {"appg2", run_appg2},
  };
  return reg;
}

}  // namespace

std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

TheoremReport reproduce_theorem(const std::string& id,
                                const TheoremOptions& opt) {
  for (const auto& [name, fn] : registry()) {
    if (name != id) continue;
    Builder b;
    b.rep.id = id;
    auto start = std::chrono::steady_clock::now();
    fn(b, opt);
    auto end = std::chrono::steady_clock::now();
    b.rep.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    b.rep.passed = true;
    for (const auto& c : b.rep.claims) b.rep.passed = b.rep.passed && c.pass;
    return b.rep;
  }
  throw InvalidParam("unknown theorem id '" + id + "'");
}

}  // namespace wlx
