#include "wlx/corpus.hpp"

#include <random>
#include <set>
#include <utility>

#include "wlx/canonical.hpp"
#include "wlx/errors.hpp"

namespace wlx {

std::vector<Graph> exhaustive_connected(int max_n) {
  if (max_n < 1) throw InvalidParam("corpus size must be >= 1");
  // Vertex augmentation: every connected graph on n nodes arises from a
  // connected graph on n-1 nodes (remove a non-cut vertex) plus a new node
  // attached to a nonempty neighbor set; dedup by certificate.
  std::vector<Graph> all;
  std::vector<Graph> level{Graph(1)};
  all.push_back(level[0]);
  for (int n = 2; n <= max_n; ++n) {
    std::set<Certificate> seen;
    std::vector<Graph> next;
    for (const Graph& g : level) {
      const int base = g.n();
      for (unsigned mask = 1; mask < (1u << base); ++mask) {
        Graph h(base + 1);
        for (int v = 0; v < base; ++v) h.set_color(v, g.color(v));
        for (auto [a, b] : g.edges()) h.add_edge(a, b);
        for (int v = 0; v < base; ++v)
          if (mask & (1u << v)) h.add_edge(v, base);
        auto cert = certificate(h);
        if (seen.insert(cert).second) next.push_back(std::move(h));
      }
    }
    level = std::move(next);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

std::vector<Graph> random_connected_corpus(int min_n, int max_n, int count,
                                           std::uint64_t seed) {
  if (min_n < 2 || max_n < min_n) throw InvalidParam("bad corpus size range");
  if (count < 0) throw InvalidParam("negative corpus count");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(min_n, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double probs[] = {0.2, 0.35, 0.5};

  std::vector<Graph> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    int n = size_dist(rng);
    double p = probs[rng() % 3];
    Graph g(n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (unit(rng) < p) g.add_edge(a, b);
    auto dist = bfs_distances(g, 0);
    bool connected = true;
    for (int d : dist) connected = connected && d >= 0;
    if (!connected) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace wlx
