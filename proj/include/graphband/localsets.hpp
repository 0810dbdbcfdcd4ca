#ifndef GRAPHBAND_LOCALSETS_HPP
#define GRAPHBAND_LOCALSETS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graphband/graph.hpp"

namespace graphband {

/// Sorted set of sampled vertex ids. Restricting a signal to the members
/// realizes the downsampling operator.
struct SamplingSet {
  std::vector<int> members;  // sorted, distinct

  static SamplingSet of(std::vector<int> ids);
  int size() const { return static_cast<int>(members.size()); }
};

/// Disjoint covering family {N(u)} over the sampled vertices. Each cell
/// contains its owner and induces a connected subgraph.
struct LocalSetPartition {
  SamplingSet sampling_set;
  std::vector<int> cell_of;               // vertex -> owner (sampled id)
  std::map<int, std::vector<int>> cells;  // owner -> sorted members

  static LocalSetPartition from_owner_map(const Graph& g, std::vector<int> owner);

  const std::vector<int>& cell(int u) const;
  void write_csv(const std::string& path) const;
  static LocalSetPartition read_csv(const Graph& g, const std::string& path);
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks disjointness/cover (structural), owner membership, and per-cell
// induced-subgraph connectivity. Violations are reported, not thrown.
ValidationReport validate_partition(const Graph& g, const LocalSetPartition& p);

// Canonical BFS tree of the induced subgraph: parent of v is the
// smallest-id in-cell neighbor at depth(v)-1. Returned map is indexed by
// vertex id; -1 for the root, -2 for vertices outside the cell.
std::vector<int> shortest_path_tree(const Graph& g, const std::vector<int>& cell,
                                    int root);

// K(u): largest subtree size hanging off the root in the canonical tree.
int maximal_multiple_number(const Graph& g, const std::vector<int>& cell, int root);

// K~(u) = |N(u)| - d_{N(u)}(u); defined as 0 for singleton cells.
int k_tilde(const Graph& g, const std::vector<int>& cell, int root);

// R(u): max BFS depth within the induced subgraph.
int radius(const Graph& g, const std::vector<int>& cell, int root);

// Diagnostic: min and max K(u) over all shortest-path-tree parent choices.
// Only for cells with at most max_cell_size vertices.
std::pair<int, int> k_range(const Graph& g, const std::vector<int>& cell,
                            int root, int max_cell_size = 12);

struct CellMeasures {
  int size = 0;
  int k = 0;
  int k_tilde = 0;
  int radius = 0;
};

struct PartitionMeasures {
  std::map<int, CellMeasures> per_cell;
  double q_max = 0.0;        // max sqrt(K(u) R(u))
  double q_tilde_max = 0.0;  // max sqrt(K~(u) R(u))
  int n_max = 0;
};

PartitionMeasures measures(const Graph& g, const LocalSetPartition& p);

struct GammaResult {
  double gamma = 0.0;
  bool guarantee_valid = false;  // gamma < 1, i.e. omega < 1/q_max^2
};

// gamma = q_max * sqrt(omega).
GammaResult gamma(double q_max, double omega);

// Greedy one-hop sampler: repeatedly claim the max-degree residual vertex
// and its residual neighbors as a cell. Ties by smallest id.
LocalSetPartition greedy_one_hop(const Graph& g);

// Multi-source BFS assignment; ties by smallest owner id; cell membership
// inherited from the BFS parent so induced subgraphs stay connected.
LocalSetPartition voronoi_partition(const Graph& g, const SamplingSet& s);

// k distinct vertices uniformly without replacement, deterministic per seed.
SamplingSet random_sampling_set(const Graph& g, int k, std::uint64_t seed);

}  // namespace graphband

#endif
