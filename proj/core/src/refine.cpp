#include "wlx/refine.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <unordered_set>

#include "wlx/errors.hpp"

namespace wlx {

std::vector<int> interned_node_colors(const Graph& g, InternTable& table) {
  std::vector<int> out(g.n());
  for (int v = 0; v < g.n(); ++v) {
    KeyBuf kb;
    kb.tag('C');
    kb.put(g.color(v));
    out[v] = table.id_for(kb);
  }
  return out;
}

std::vector<int> marked_node_colors(const Graph& g, const std::vector<bool>& marked,
                                    InternTable& table) {
  if (static_cast<int>(marked.size()) != g.n())
    throw InvalidParam("mark vector size mismatch");
  std::vector<int> out(g.n());
  for (int v = 0; v < g.n(); ++v) {
    KeyBuf kb;
    // Unmarked nodes intern with the plain node-color key so a run with an
    // empty mark set reproduces the unmarked refinement ids exactly.
    if (marked[v]) {
      kb.tag('M');
      kb.put(g.color(v));
    } else {
      kb.tag('C');
      kb.put(g.color(v));
    }
    out[v] = table.id_for(kb);
  }
  return out;
}

std::vector<int> refine_once(const Graph& g, const std::vector<int>& cur,
                             InternTable& table) {
  std::vector<int> next(g.n());
  std::vector<int> nbr;
  for (int v = 0; v < g.n(); ++v) {
    nbr.clear();
    for (int w : g.neighbors(v)) nbr.push_back(cur[w]);
    std::sort(nbr.begin(), nbr.end());
    KeyBuf kb;
    kb.tag('R');
    kb.put(cur[v]);
    kb.put_all(nbr);
    next[v] = table.id_for(kb);
  }
  return next;
}

namespace {

std::size_t distinct_count(const std::vector<int>& a, const std::vector<int>& b) {
  std::unordered_set<int> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  return s.size();
}

}  // namespace

std::vector<int> refine_rounds(const Graph& g, std::vector<int> init, int rounds,
                               InternTable& table) {
  if (static_cast<int>(init.size()) != g.n())
    throw InvalidParam("init coloring size mismatch");
  if (rounds == kStable) {
    std::vector<int> none;
    std::size_t classes = distinct_count(init, none);
    for (int r = 0; r < g.n() + 1; ++r) {
      auto next = refine_once(g, init, table);
      std::size_t nc = distinct_count(next, none);
      init = std::move(next);
      if (nc == classes) break;
      classes = nc;
    }
    return init;
  }
  if (rounds < 0) throw InvalidParam("negative round count");
  for (int r = 0; r < rounds; ++r) init = refine_once(g, init, table);
  return init;
}

PairTrace refine_pair_trace(const Graph& g1, const Graph& g2,
                            std::vector<int> init1, std::vector<int> init2,
                            int rounds, InternTable& table) {
  if (static_cast<int>(init1.size()) != g1.n() ||
      static_cast<int>(init2.size()) != g2.n())
    throw InvalidParam("init coloring size mismatch");
  PairTrace tr;
  tr.a.push_back(std::move(init1));
  tr.b.push_back(std::move(init2));
  if (rounds == kStable) {
    std::size_t classes = distinct_count(tr.a[0], tr.b[0]);
    int cap = g1.n() + g2.n() + 1;
    for (int r = 0; r < cap; ++r) {
      tr.a.push_back(refine_once(g1, tr.a.back(), table));
      tr.b.push_back(refine_once(g2, tr.b.back(), table));
      std::size_t nc = distinct_count(tr.a.back(), tr.b.back());
      if (nc == classes) break;
      classes = nc;
    }
    return tr;
  }
  if (rounds < 0) throw InvalidParam("negative round count");
  for (int r = 0; r < rounds; ++r) {
    tr.a.push_back(refine_once(g1, tr.a.back(), table));
    tr.b.push_back(refine_once(g2, tr.b.back(), table));
  }
  return tr;
}

std::vector<int> color_multiset(const std::vector<int>& colors) {
  auto out = colors;
  std::sort(out.begin(), out.end());
  return out;
}

int rooted_color(const Graph& g, int u, int d, InternTable& table) {
  auto ex = message_passing_neighborhood(g, u, d);
  auto colors = refine_rounds(ex.rg.g, interned_node_colors(ex.rg.g, table), d, table);
  return colors[ex.rg.root];
}

KfwlOptions::KfwlOptions() : tuple_budget(10'000'000) {
  if (const char* env = std::getenv("WLX_TUPLE_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) tuple_budget = v;
  }
}

namespace {

// Tuple machinery for k >= 2. Tuples of [0,n)^k are indexed in mixed radix:
// index = sum v_j * n^j. Atom arrays are fixed-size to avoid allocation; only
// the first k entries are meaningful.
constexpr int kMaxK = 8;
using Atom = std::array<int, kMaxK>;

struct TupleSpace {
  const Graph& g;
  int k;
  long long count;
  std::array<long long, kMaxK> pow;

  TupleSpace(const Graph& g_, int k_) : g(g_), k(k_) {
    count = 1;
    for (int j = 0; j < k; ++j) {
      pow[j] = count;
      count *= g.n();
    }
  }

  void decode(long long idx, std::array<int, kMaxK>& t) const {
    for (int j = 0; j < k; ++j) t[j] = static_cast<int>((idx / pow[j]) % g.n());
  }

  std::vector<int> init_colors(const std::vector<int>& node_colors,
                               InternTable& table) const {
    std::vector<int> out(count);
    std::array<int, kMaxK> t{};
    for (long long i = 0; i < count; ++i) {
      decode(i, t);
      KeyBuf kb;
      kb.tag('T');
      kb.put(k);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
          int rel = t[a] == t[b] ? 2 : (g.has_edge(t[a], t[b]) ? 1 : 0);
          kb.put(rel);
        }
      for (int a = 0; a < k; ++a) kb.put(node_colors[t[a]]);
      out[i] = table.id_for(kb);
    }
    return out;
  }

  std::vector<int> round(const std::vector<int>& cur, InternTable& table) const {
    std::vector<int> out(cur.size());
    std::array<int, kMaxK> t{};
    std::vector<Atom> atoms(g.n());
    for (long long i = 0; i < count; ++i) {
      decode(i, t);
      for (int w = 0; w < g.n(); ++w) {
        Atom& at = atoms[w];
        at.fill(-1);
        for (int j = 0; j < k; ++j) {
          long long sub = i + (static_cast<long long>(w) - t[j]) * pow[j];
          at[j] = cur[sub];
        }
      }
      std::sort(atoms.begin(), atoms.end());
      KeyBuf kb;
      kb.tag('U');
      kb.put(cur[i]);
      for (const Atom& at : atoms)
        for (int j = 0; j < k; ++j) kb.put(at[j]);
      out[i] = table.id_for(kb);
    }
    return out;
  }

  long long diag_index(int u) const {
    long long idx = 0;
    for (int j = 0; j < k; ++j) idx += u * pow[j];
    return idx;
  }
};

}  // namespace

KfwlJointResult kfwl_joint(const std::vector<const Graph*>& gs, int k,
                           InternTable& table, const KfwlOptions& opt) {
  if (k < 1 || k > kMaxK) throw InvalidParam("tuple arity must be in [1, 8]");
  KfwlJointResult res;
  const int ng = static_cast<int>(gs.size());
  res.diag.resize(ng);
  res.tuples.resize(ng);
  if (ng == 0) return res;

  if (k == 1) {
    // Lockstep neighbor refinement until the global class count stabilizes.
    std::vector<std::vector<int>> cur(ng);
    for (int i = 0; i < ng; ++i) cur[i] = interned_node_colors(*gs[i], table);
    auto count_all = [&]() {
      std::unordered_set<int> s;
      for (const auto& c : cur) s.insert(c.begin(), c.end());
      return s.size();
    };
    std::size_t classes = count_all();
    long long cap = 1;
    for (const auto* g : gs) cap += g->n();
    for (long long r = 0; r < cap; ++r) {
      for (int i = 0; i < ng; ++i) cur[i] = refine_once(*gs[i], cur[i], table);
      std::size_t nc = count_all();
      ++res.rounds;
      if (nc == classes) break;
      classes = nc;
    }
    for (int i = 0; i < ng; ++i) {
      res.diag[i] = cur[i];
      res.tuples[i] = color_multiset(cur[i]);
    }
    return res;
  }

  double space = 0;
  for (const auto* g : gs) {
    double s = 1;
    for (int j = 0; j < k; ++j) s *= g->n();
    space += s;
  }
  if (space > static_cast<double>(opt.tuple_budget))
    throw BudgetExceeded("tuple space exceeds budget");

  std::vector<TupleSpace> spaces;
  spaces.reserve(ng);
  for (const auto* g : gs) spaces.emplace_back(*g, k);
  std::vector<std::vector<int>> cur(ng);
  for (int i = 0; i < ng; ++i)
    cur[i] = spaces[i].init_colors(interned_node_colors(*gs[i], table), table);

  auto count_all = [&]() {
    std::unordered_set<int> s;
    for (const auto& c : cur) s.insert(c.begin(), c.end());
    return s.size();
  };
  std::size_t classes = count_all();
  long long cap = 1;
  for (const auto& t : spaces) cap += t.count;
  for (long long r = 0; r < cap; ++r) {
    for (int i = 0; i < ng; ++i) cur[i] = spaces[i].round(cur[i], table);
    std::size_t nc = count_all();
    ++res.rounds;
    if (nc == classes) break;
    classes = nc;
  }

  for (int i = 0; i < ng; ++i) {
    res.diag[i].resize(gs[i]->n());
    for (int u = 0; u < gs[i]->n(); ++u)
      res.diag[i][u] = cur[i][spaces[i].diag_index(u)];
    res.tuples[i] = color_multiset(cur[i]);
  }
  return res;
}

KfwlPairResult kfwl_compare(const Graph& g1, const Graph& g2, int k,
                            InternTable& table, const KfwlOptions& opt) {
  // Run jointly once for the stable data, then replay per-round multisets on
  // a fresh table to locate the first divergent round for the witness.
  auto joint = kfwl_joint({&g1, &g2}, k, table, opt);
  KfwlPairResult res;
  res.rounds = joint.rounds;
  res.diag1 = joint.diag[0];
  res.diag2 = joint.diag[1];
  res.equivalent = joint.tuples[0] == joint.tuples[1];
  if (!res.equivalent) {
    if (k == 1) {
      auto tr = refine_pair_trace(g1, g2, interned_node_colors(g1, table),
                                  interned_node_colors(g2, table), kStable, table);
      for (int r = 0; r <= tr.rounds(); ++r) {
        if (color_multiset(tr.a[r]) != color_multiset(tr.b[r])) {
          res.witness_round = r;
          break;
        }
      }
    } else {
      TupleSpace t1(g1, k), t2(g2, k);
      auto c1 = t1.init_colors(interned_node_colors(g1, table), table);
      auto c2 = t2.init_colors(interned_node_colors(g2, table), table);
      int round_idx = 0;
      while (color_multiset(c1) == color_multiset(c2) &&
             round_idx <= joint.rounds) {
        c1 = t1.round(c1, table);
        c2 = t2.round(c2, table);
        ++round_idx;
      }
      res.witness_round = round_idx;
    }
    if (res.witness_round < 0) res.witness_round = joint.rounds;
  }
  return res;
}

}  // namespace wlx
