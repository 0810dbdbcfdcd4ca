#ifndef GRAPHBAND_TEST_SUPPORT_HPP
#define GRAPHBAND_TEST_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "graphband/graph.hpp"
#include "graphband/localsets.hpp"

namespace test_support {

// Connected graph on n vertices: random spanning tree plus `extra` random
// non-tree edges (duplicates collapse, so the edge count may be lower).
inline graphband::Graph random_connected_graph(int n, int extra,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace_back(order[pick(rng)], order[i]);
  }
  std::uniform_int_distribution<int> any(0, n - 1);
  for (int e = 0; e < extra; ++e) {
    int a = any(rng), b = any(rng);
    if (a != b) edges.emplace_back(a, b);
  }
  return graphband::Graph::from_edges(n, edges);
}

// Valid partition with a random sampling set of size k.
inline graphband::LocalSetPartition random_partition(const graphband::Graph& g,
                                                     int k, std::uint64_t seed) {
  auto s = graphband::random_sampling_set(g, k, seed);
  return graphband::voronoi_partition(g, s);
}

}  // namespace test_support

#endif
