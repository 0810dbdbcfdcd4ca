#include "graphband/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace graphband {

Graph Graph::from_edges(int n_vertices,
                        const std::vector<std::pair<int, int>>& edges) {
  if (n_vertices < 0) throw GraphBandError("negative vertex count");
  std::set<std::pair<int, int>> dedup;
  for (auto [u, v] : edges) {
    if (u == v)
      throw GraphBandError("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices)
      throw GraphBandError("edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ") out of declared range 0.." +
                           std::to_string(n_vertices - 1));
    dedup.emplace(std::min(u, v), std::max(u, v));
  }
  Graph g;
  g.adj_.assign(n_vertices, {});
  for (auto [u, v] : dedup) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  g.n_edges_ = static_cast<int>(dedup.size());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

Eigen::MatrixXd Graph::laplacian() const {
  const int n = n_vertices();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v) {
    L(v, v) = static_cast<double>(adj_[v].size());
    for (int w : adj_[v]) L(v, w) = -1.0;
  }
  return L;
}

namespace {

std::vector<int> component_labels(const Graph& g) {
  const int n = g.n_vertices();
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

}  // namespace

int Graph::component_count() const {
  if (n_vertices() == 0) return 0;
  auto label = component_labels(*this);
  return 1 + *std::max_element(label.begin(), label.end());
}

Graph Graph::largest_component(std::vector<int>* old_ids) const {
  auto label = component_labels(*this);
  const int n = n_vertices();
  int n_comp = n == 0 ? 0 : 1 + *std::max_element(label.begin(), label.end());
  std::vector<int> count(n_comp, 0);
  for (int l : label) ++count[l];
  int best = static_cast<int>(std::max_element(count.begin(), count.end()) -
                              count.begin());
  std::vector<int> new_id(n, -1), originals;
  for (int v = 0; v < n; ++v)
    if (label[v] == best) {
      new_id[v] = static_cast<int>(originals.size());
      originals.push_back(v);
    }
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    if (new_id[v] < 0) continue;
    for (int w : adj_[v])
      if (v < w) edges.emplace_back(new_id[v], new_id[w]);
  }
  if (old_ids) *old_ids = originals;
  return from_edges(static_cast<int>(originals.size()), edges);
}

Graph load_edge_list(const std::string& path, bool one_based) {
  std::ifstream in(path);
  if (!in) throw GraphBandError("cannot open edge list: " + path);
  std::vector<std::pair<int, int>> edges;
  long declared_n = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string word;
      if (hs >> word && word == "vertices") {
        long n;
        if (hs >> n) declared_n = n;
      }
      continue;
    }
    std::istringstream ls(line);
    long u, v;
    std::string extra;
    if (!(ls >> u >> v))
      throw GraphBandError(path + ":" + std::to_string(line_no) +
                           ": malformed edge line: '" + line + "'");
    if (one_based) {
      --u;
      --v;
    }
    if (u == v)
      throw GraphBandError(path + ":" + std::to_string(line_no) +
                           ": self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0)
      throw GraphBandError(path + ":" + std::to_string(line_no) +
                           ": negative vertex id");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  long max_id = -1;
  for (auto [u, v] : edges) max_id = std::max({max_id, (long)u, (long)v});
  long n = declared_n >= 0 ? declared_n : max_id + 1;
  if (declared_n >= 0 && max_id >= declared_n)
    throw GraphBandError(path + ": vertex id " + std::to_string(max_id) +
                         " exceeds declared count " + std::to_string(declared_n));
  return Graph::from_edges(static_cast<int>(n), edges);
}

GraphSignal read_signal_csv(const std::string& path, int n_vertices) {
  std::ifstream in(path);
  if (!in) throw GraphBandError("cannot open signal csv: " + path);
  GraphSignal f = GraphSignal::Zero(n_vertices);
  std::vector<bool> seen(n_vertices, false);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind("vertex", 0) == 0) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw GraphBandError(path + ":" + std::to_string(line_no) +
                           ": expected 'vertex,value'");
    int v = std::stoi(line.substr(0, comma));
    double x = std::stod(line.substr(comma + 1));
    if (v < 0 || v >= n_vertices)
      throw GraphBandError(path + ":" + std::to_string(line_no) +
                           ": vertex id out of range");
    if (!std::isfinite(x))
      throw GraphBandError(path + ":" + std::to_string(line_no) +
                           ": non-finite value");
    f[v] = x;
    seen[v] = true;
  }
  for (int v = 0; v < n_vertices; ++v)
    if (!seen[v])
      throw GraphBandError(path + ": missing value for vertex " +
                           std::to_string(v));
  return f;
}

void write_signal_csv(const std::string& path, const GraphSignal& f) {
  std::ofstream out(path);
  if (!out) throw GraphBandError("cannot write signal csv: " + path);
  out << "vertex,value\n";
  out.precision(17);
  for (int v = 0; v < f.size(); ++v) out << v << "," << f[v] << "\n";
}

}  // namespace graphband
