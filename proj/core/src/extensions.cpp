#include "wlx/extensions.hpp"

#include <algorithm>
#include <cstdlib>

#include "wlx/errors.hpp"
#include "wlx/refine.hpp"

namespace wlx {

namespace {

const char* kind_name(ExtKind k) {
  switch (k) {
    case ExtKind::WL1: return "WL1";
    case ExtKind::KFWL: return "FWL";
    case ExtKind::SK: return "S";
    case ExtKind::NK: return "N";
    case ExtKind::MK: return "M";
  }
  return "?";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw InvalidParam("bad " + what + " in extension spec: '" + s + "'");
  }
  if (used != s.size())
    throw InvalidParam("bad " + what + " in extension spec: '" + s + "'");
  return v;
}

int parse_d(const std::string& s) {
  if (s.rfind("d=", 0) != 0)
    throw InvalidParam("expected d=<rounds> in extension spec, got '" + s + "'");
  return parse_int(s.substr(2), "round count");
}

}  // namespace

std::string ExtensionSpec::str() const {
  std::string out = kind_name(kind);
  switch (kind) {
    case ExtKind::WL1:
      if (d >= 0) out += ":d=" + std::to_string(d);
      break;
    case ExtKind::KFWL:
      out += ":" + std::to_string(k);
      break;
    case ExtKind::SK:
    case ExtKind::NK:
      out += ":" + std::to_string(k) + ":d=" + std::to_string(d);
      break;
    case ExtKind::MK:
      out += ":" + std::to_string(k) + ":d=" + std::to_string(d) +
             (mode == MkMode::MARK ? ":mark" : ":remove");
      break;
  }
  return out;
}

ExtensionSpec ExtensionSpec::parse(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.empty() || parts[0].empty())
    throw InvalidParam("empty extension spec");
  ExtensionSpec spec;
  const std::string& kind = parts[0];
  if (kind == "WL1") {
    spec.kind = ExtKind::WL1;
    spec.d = kStable;
    if (parts.size() > 2) throw InvalidParam("WL1 takes at most d=<rounds>");
    if (parts.size() == 2) spec.d = parse_d(parts[1]);
  } else if (kind == "FWL" || kind == "KFWL") {
    spec.kind = ExtKind::KFWL;
    if (parts.size() != 2) throw InvalidParam("FWL spec is FWL:<k>");
    spec.k = parse_int(parts[1], "tuple arity");
  } else if (kind == "S" || kind == "N") {
    spec.kind = kind == "S" ? ExtKind::SK : ExtKind::NK;
    if (parts.size() != 3)
      throw InvalidParam(kind + " spec is " + kind + ":<k>:d=<rounds>");
    spec.k = parse_int(parts[1], "k");
    spec.d = parse_d(parts[2]);
  } else if (kind == "M" || kind == "R") {
    spec.kind = ExtKind::MK;
    spec.mode = kind == "R" ? MkMode::REMOVE : MkMode::MARK;
    if (parts.size() < 3 || parts.size() > 4)
      throw InvalidParam("M spec is M:<k>:d=<rounds>[:mark|:remove]");
    spec.k = parse_int(parts[1], "k");
    spec.d = parse_d(parts[2]);
    if (parts.size() == 4) {
      if (parts[3] == "mark")
        spec.mode = MkMode::MARK;
      else if (parts[3] == "remove")
        spec.mode = MkMode::REMOVE;
      else
        throw InvalidParam("mode must be mark or remove, got '" + parts[3] + "'");
    }
  } else {
    throw InvalidParam("unknown extension kind '" + kind + "'");
  }
  validate_spec(spec);
  return spec;
}

void validate_spec(const ExtensionSpec& spec) {
  switch (spec.kind) {
    case ExtKind::WL1:
      if (spec.d < 0 && spec.d != kStable)
        throw InvalidParam("WL1 rounds must be >= 0 or stable");
      break;
    case ExtKind::KFWL:
      if (spec.k < 1 || spec.k > 8)
        throw InvalidParam("FWL arity must be in [1, 8]");
      break;
    case ExtKind::SK:
      if (spec.k < 1) throw InvalidParam("S census size must be >= 1");
      if (spec.d < 0) throw InvalidParam("S rounds must be >= 0");
      break;
    case ExtKind::NK:
      if (spec.k < 0) throw InvalidParam("N radius must be >= 0");
      if (spec.d <= spec.k)
        throw InvalidParam("N radius requires k < d");
      break;
    case ExtKind::MK:
      if (spec.k < 0) throw InvalidParam("M subset size must be >= 0");
      if (spec.d < 0) throw InvalidParam("M rounds must be >= 0");
      break;
  }
}

Session::Session() : run_budget(2'000'000) {
  if (const char* env = std::getenv("WLX_RUN_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) run_budget = v;
  }
}

std::vector<std::vector<int>> sk_census(const Graph& g, int u, int k, Session& s) {
  if (k < 1) throw InvalidParam("census size must be >= 1");
  std::vector<std::vector<int>> by_size(k);  // by_size[s-1] holds size-s sets
  for_each_connected_set_at(g, u, k, s.run_budget, [&](const std::vector<int>& set) {
    const Certificate& cert = s.certs.rooted_cert(g, set, u);
    KeyBuf kb;
    kb.tag('F');
    kb.put_raw(cert.bytes);
    by_size[set.size() - 1].push_back(s.table.id_for(kb));
  });
  for (auto& v : by_size) std::sort(v.begin(), v.end());
  return by_size;
}

int sk_feature_id(const Graph& g, int u, int k, Session& s) {
  auto census = sk_census(g, u, k, s);
  KeyBuf kb;
  kb.tag('S');
  kb.put(k);
  for (const auto& bucket : census) kb.put_all(bucket);
  return s.table.id_for(kb);
}

int nk_feature_id(const Graph& g, int u, int k, Session& s) {
  if (k < 0) throw InvalidParam("ball radius must be >= 0");
  auto dist = bfs_distances(g, u);
  std::vector<int> nodes;
  for (int v = 0; v < g.n(); ++v)
    if (dist[v] >= 0 && dist[v] <= k) nodes.push_back(v);
  const Certificate& cert = s.certs.rooted_cert(g, nodes, u);
  KeyBuf kb;
  kb.tag('F');
  kb.put_raw(cert.bytes);
  return s.table.id_for(kb);
}

void check_sk_valid(const Graph& g, int u, int k, int d) {
  if (k <= d + 1) return;
  if (eccentricity(g, u) <= d) return;
  throw InvalidParam("S census needs k <= d+1 or the graph inside the d-ball");
}

int extended_rooted_color(const Graph& g, int u, const ExtensionSpec& spec,
                          Session& s) {
  validate_spec(spec);
  switch (spec.kind) {
    case ExtKind::WL1: {
      if (spec.d < 0) throw InvalidParam("node-level WL1 needs d >= 0");
      return rooted_color(g, u, spec.d, s.table);
    }
    case ExtKind::SK: {
      check_sk_valid(g, u, spec.k, spec.d);
      int feat = sk_feature_id(g, u, spec.k, s);
      KeyBuf kb;
      kb.tag('E');
      kb.tag('S');
      kb.put(spec.k);
      kb.put(feat);
      kb.put(rooted_color(g, u, spec.d, s.table));
      return s.table.id_for(kb);
    }
    case ExtKind::NK: {
      int feat = nk_feature_id(g, u, spec.k, s);
      KeyBuf kb;
      kb.tag('E');
      kb.tag('N');
      kb.put(spec.k);
      kb.put(feat);
      kb.put(rooted_color(g, u, spec.d, s.table));
      return s.table.id_for(kb);
    }
    case ExtKind::MK:
      return mk_profile_id(
          mk_run_profile(g, u, spec.k, spec.d, spec.mode, s), s);
    case ExtKind::KFWL:
      throw InvalidParam("FWL node colors need a joint run; see analysis");
  }
  throw InvalidParam("unreachable extension kind");
}

namespace {

// Lexicographic j-subset enumeration over [0, n).
template <typename Fn>
void for_each_subset(int n, int j, Fn&& fn) {
  std::vector<int> idx(j);
  for (int i = 0; i < j; ++i) idx[i] = i;
  if (j > n) return;
  while (true) {
    fn(idx);
    int i = j - 1;
    while (i >= 0 && idx[i] == n - j + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int t = i + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
  }
}

long long subset_count(int n, int k) {
  long long total = 0, c = 1;
  for (int j = 0; j <= k; ++j) {
    total += c;
    if (total > (1LL << 62)) return total;
    c = c * (n - j) / (j + 1);
    if (j + 1 > n) break;
  }
  return total;
}

}  // namespace

MkProfile mk_run_profile(const Graph& g, int u, int k, int d, MkMode mode,
                         Session& s) {
  if (k < 0) throw InvalidParam("subset size must be >= 0");
  if (d < 0) throw InvalidParam("round count must be >= 0");
  auto ex = induced_radius_neighborhood(g, u, d);
  const Graph& ball = ex.rg.g;
  const int root = ex.rg.root;
  const int nb = ball.n();
  if (subset_count(nb, std::min(k, nb)) > s.run_budget)
    throw BudgetExceeded("marking/removal run count exceeds budget");

  MkProfile profile(k + 1);
  for (int j = 0; j <= k; ++j) {
    auto& out = profile[j];
    if (j > nb) continue;
    for_each_subset(nb, j, [&](const std::vector<int>& subset) {
      if (mode == MkMode::MARK) {
        std::vector<bool> marked(nb, false);
        for (int x : subset) marked[x] = true;
        auto colors = refine_rounds(ball, marked_node_colors(ball, marked, s.table),
                                    d, s.table);
        out.push_back(colors[root]);
      } else {
        bool drops_root = std::find(subset.begin(), subset.end(), root) !=
                          subset.end();
        if (drops_root) {
          out.push_back(InternTable::kRootRemoved);
          return;
        }
        std::vector<int> keep;
        keep.reserve(nb - j);
        std::size_t si = 0;
        for (int v = 0; v < nb; ++v) {
          if (si < subset.size() && subset[si] == v) {
            ++si;
            continue;
          }
          keep.push_back(v);
        }
        auto sub = induced_subgraph(ball, keep, root);
        auto colors = refine_rounds(
            sub.rg.g, interned_node_colors(sub.rg.g, s.table), d, s.table);
        out.push_back(colors[sub.rg.root]);
      }
    });
    std::sort(out.begin(), out.end());
  }
  return profile;
}

int mk_profile_id(const MkProfile& profile, Session& s) {
  KeyBuf kb;
  kb.tag('P');
  kb.put(static_cast<int>(profile.size()));
  for (const auto& sizes : profile) kb.put_all(sizes);
  return s.table.id_for(kb);
}

MkComparison mk_compare(const Graph& g1, int u1, const Graph& g2, int u2, int k,
                        int d, MkMode mode, Session& s) {
  auto p1 = mk_run_profile(g1, u1, k, d, mode, s);
  auto p2 = mk_run_profile(g2, u2, k, d, mode, s);
  MkComparison cmp;
  for (int j = 0; j <= k; ++j) {
    if (p1[j] != p2[j]) {
      cmp.inseparable = false;
      cmp.witness_size = j;
      break;
    }
  }
  return cmp;
}

std::vector<int> graph_feature_colors(const Graph& g, const ExtensionSpec& spec,
                                      Session& s) {
  validate_spec(spec);
  std::vector<int> init(g.n());
  switch (spec.kind) {
    case ExtKind::SK: {
      bool covered = true;
      for (int v = 0; v < g.n() && covered; ++v)
        covered = eccentricity(g, v) <= spec.d;
      if (spec.k > spec.d + 1 && !covered)
        throw InvalidParam("graph-level S needs k <= d+1 or all balls covering");
      for (int v = 0; v < g.n(); ++v) {
        KeyBuf kb;
        kb.tag('G');
        kb.tag('S');
        kb.put(g.color(v));
        kb.put(sk_feature_id(g, v, spec.k, s));
        init[v] = s.table.id_for(kb);
      }
      return init;
    }
    case ExtKind::NK: {
      for (int v = 0; v < g.n(); ++v) {
        KeyBuf kb;
        kb.tag('G');
        kb.tag('N');
        kb.put(g.color(v));
        kb.put(nk_feature_id(g, v, spec.k, s));
        init[v] = s.table.id_for(kb);
      }
      return init;
    }
    default:
      throw InvalidParam("graph feature colors are for S/N kinds");
  }
}

std::vector<int> graph_level_multiset(const Graph& g, const ExtensionSpec& spec,
                                      Session& s) {
  validate_spec(spec);
  switch (spec.kind) {
    case ExtKind::WL1: {
      if (spec.d < 0)
        throw InvalidParam("stable graph-level WL1 needs a joint run; see analysis");
      return color_multiset(
          refine_rounds(g, interned_node_colors(g, s.table), spec.d, s.table));
    }
    case ExtKind::SK:
    case ExtKind::NK: {
      auto init = graph_feature_colors(g, spec, s);
      return color_multiset(refine_rounds(g, std::move(init), spec.d, s.table));
    }
    case ExtKind::MK: {
      std::vector<int> ids(g.n());
      for (int v = 0; v < g.n(); ++v)
        ids[v] = mk_profile_id(
            mk_run_profile(g, v, spec.k, spec.d, spec.mode, s), s);
      return color_multiset(ids);
    }
    case ExtKind::KFWL:
      throw InvalidParam("graph-level FWL needs a joint run; see analysis");
  }
  throw InvalidParam("unreachable extension kind");
}

}  // namespace wlx
