// Test corpora: the exhaustive connected-graph catalog (one representative
// per isomorphism class) and seeded random connected graphs.
#pragma once

#include <cstdint>
#include <vector>

#include "wlx/graph.hpp"

namespace wlx {

// All connected graphs with 1..max_n nodes, one per isomorphism class,
// deduplicated by certificate. Grows fast: max_n <= 8 recommended
// (1,1,2,6,21,112,853,11117 classes).
std::vector<Graph> exhaustive_connected(int max_n);

// `count` connected Erdos-Renyi style graphs with n in [min_n, max_n],
// deterministic for a given seed.
std::vector<Graph> random_connected_corpus(int min_n, int max_n, int count,
                                           std::uint64_t seed);

}  // namespace wlx
