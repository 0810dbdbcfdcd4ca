#ifndef GRAPHBAND_GRAPH_HPP
#define GRAPHBAND_GRAPH_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace graphband {

class GraphBandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using GraphSignal = Eigen::VectorXd;

/// Undirected unweighted simple graph with contiguous vertex ids 0..n-1.
/// Immutable after construction; adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;

  // Deduplicates edges; throws on self-loops and out-of-range ids.
  static Graph from_edges(int n_vertices,
                          const std::vector<std::pair<int, int>>& edges);

  int n_vertices() const { return static_cast<int>(adj_.size()); }
  int n_edges() const { return n_edges_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  bool has_edge(int u, int v) const;

  // L = D - A, dense.
  Eigen::MatrixXd laplacian() const;

  int component_count() const;

  // Subgraph induced by the largest connected component, ids remapped to
  // 0..m-1 in ascending original-id order. old_ids (optional) receives the
  // original id of each new vertex.
  Graph largest_component(std::vector<int>* old_ids = nullptr) const;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_vertices())
      throw GraphBandError("vertex id " + std::to_string(v) +
                           " out of range [0, " + std::to_string(n_vertices()) + ")");
  }

  std::vector<std::vector<int>> adj_;
  int n_edges_ = 0;
};

// Edge-list file: "<u> <v>" per line, '#' comments, optional header
// "# vertices <N>". With one_based, ids are shifted down by one.
Graph load_edge_list(const std::string& path, bool one_based = false);

// Signal CSV: header "vertex,value", one row per vertex.
GraphSignal read_signal_csv(const std::string& path, int n_vertices);
void write_signal_csv(const std::string& path, const GraphSignal& f);

}  // namespace graphband

#endif
