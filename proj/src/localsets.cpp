#include "graphband/localsets.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace graphband {

SamplingSet SamplingSet::of(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty()) throw GraphBandError("sampling set must be nonempty");
  return SamplingSet{std::move(ids)};
}

LocalSetPartition LocalSetPartition::from_owner_map(const Graph& g,
                                                    std::vector<int> owner) {
  const int n = g.n_vertices();
  if (static_cast<int>(owner.size()) != n)
    throw GraphBandError("owner map length does not match graph size");
  LocalSetPartition p;
  p.cell_of = std::move(owner);
  for (int v = 0; v < n; ++v) {
    int u = p.cell_of[v];
    if (u < 0 || u >= n)
      throw GraphBandError("owner of vertex " + std::to_string(v) +
                           " out of range");
    p.cells[u].push_back(v);
  }
  std::vector<int> samples;
  for (auto& [u, cell] : p.cells) samples.push_back(u);
  p.sampling_set = SamplingSet::of(std::move(samples));
  return p;
}

const std::vector<int>& LocalSetPartition::cell(int u) const {
  auto it = cells.find(u);
  if (it == cells.end())
    throw GraphBandError("no cell owned by vertex " + std::to_string(u));
  return it->second;
}

void LocalSetPartition::write_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw GraphBandError("cannot write partition csv: " + path);
  out << "vertex,owner\n";
  for (int v = 0; v < static_cast<int>(cell_of.size()); ++v)
    out << v << "," << cell_of[v] << "\n";
}

LocalSetPartition LocalSetPartition::read_csv(const Graph& g,
                                              const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphBandError("cannot open partition csv: " + path);
  std::vector<int> owner(g.n_vertices(), -1);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind("vertex", 0) == 0) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw GraphBandError(path + ":" + std::to_string(line_no) +
                           ": expected 'vertex,owner'");
    int v = std::stoi(line.substr(0, comma));
    int u = std::stoi(line.substr(comma + 1));
    if (v < 0 || v >= g.n_vertices())
      throw GraphBandError(path + ":" + std::to_string(line_no) +
                           ": vertex id out of range");
    owner[v] = u;
  }
  for (int v = 0; v < g.n_vertices(); ++v)
    if (owner[v] < 0)
      throw GraphBandError(path + ": no owner for vertex " + std::to_string(v));
  return LocalSetPartition::from_owner_map(g, std::move(owner));
}

namespace {

// BFS depths within the induced subgraph; -1 outside or unreached.
std::vector<int> cell_depths(const Graph& g, const std::vector<int>& cell,
                             int root) {
  std::vector<char> in_cell(g.n_vertices(), 0);
  for (int v : cell) in_cell[v] = 1;
  if (!in_cell[root]) throw GraphBandError("root is not a member of the cell");
  std::vector<int> depth(g.n_vertices(), -1);
  depth[root] = 0;
  std::deque<int> q{root};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.neighbors(v))
      if (in_cell[w] && depth[w] < 0) {
        depth[w] = depth[v] + 1;
        q.push_back(w);
      }
  }
  for (int v : cell)
    if (depth[v] < 0)
      throw GraphBandError("cell induces a disconnected subgraph (vertex " +
                           std::to_string(v) + " unreachable from root " +
                           std::to_string(root) + ")");
  return depth;
}

}  // namespace

std::vector<int> shortest_path_tree(const Graph& g, const std::vector<int>& cell,
                                    int root) {
  auto depth = cell_depths(g, cell, root);
  std::vector<int> parent(g.n_vertices(), -2);
  parent[root] = -1;
  for (int v : cell) {
    if (v == root) continue;
    int best = -1;
    for (int w : g.neighbors(v))  // neighbors sorted ascending
      if (depth[w] == depth[v] - 1) {
        best = w;
        break;
      }
    parent[v] = best;
  }
  return parent;
}

int maximal_multiple_number(const Graph& g, const std::vector<int>& cell,
                            int root) {
  if (cell.size() <= 1) return 0;
  auto depth = cell_depths(g, cell, root);
  auto parent = shortest_path_tree(g, cell, root);
  std::vector<int> order(cell);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return depth[a] > depth[b]; });
  std::vector<int> subtree(g.n_vertices(), 0);
  for (int v : cell) subtree[v] = 1;
  int k = 0;
  for (int v : order) {
    if (v == root) continue;
    if (parent[v] == root) k = std::max(k, subtree[v]);
    else subtree[parent[v]] += subtree[v];
  }
  return k;
}

int k_tilde(const Graph& g, const std::vector<int>& cell, int root) {
  if (cell.size() <= 1) return 0;
  std::vector<char> in_cell(g.n_vertices(), 0);
  for (int v : cell) in_cell[v] = 1;
  if (!in_cell[root]) throw GraphBandError("root is not a member of the cell");
  int d = 0;
  for (int w : g.neighbors(root)) d += in_cell[w];
  return static_cast<int>(cell.size()) - d;
}

int radius(const Graph& g, const std::vector<int>& cell, int root) {
  auto depth = cell_depths(g, cell, root);
  int r = 0;
  for (int v : cell) r = std::max(r, depth[v]);
  return r;
}

std::pair<int, int> k_range(const Graph& g, const std::vector<int>& cell,
                            int root, int max_cell_size) {
  if (static_cast<int>(cell.size()) > max_cell_size)
    throw GraphBandError("cell too large for exhaustive SPT enumeration");
  if (cell.size() <= 1) return {0, 0};
  auto depth = cell_depths(g, cell, root);
  std::vector<int> others;
  for (int v : cell)
    if (v != root) others.push_back(v);
  std::vector<std::vector<int>> candidates(others.size());
  for (size_t i = 0; i < others.size(); ++i)
    for (int w : g.neighbors(others[i]))
      if (depth[w] == depth[others[i]] - 1) candidates[i].push_back(w);

  std::vector<int> parent(g.n_vertices(), -1);
  int k_min = static_cast<int>(cell.size()), k_max = 0;
  std::vector<int> order(others);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return depth[a] > depth[b]; });

  auto eval = [&]() {
    std::vector<int> subtree(g.n_vertices(), 1);
    int k = 0;
    for (int v : order) {
      if (parent[v] == root) k = std::max(k, subtree[v]);
      else subtree[parent[v]] += subtree[v];
    }
    k_min = std::min(k_min, k);
    k_max = std::max(k_max, k);
  };
  // Depth-first over all parent assignments.
  std::vector<size_t> choice(others.size(), 0);
  size_t i = 0;
  while (true) {
    if (i == others.size()) {
      eval();
      if (i == 0) break;
      --i;
      ++choice[i];
      continue;
    }
    if (choice[i] >= candidates[i].size()) {
      if (i == 0) break;
      choice[i] = 0;
      --i;
      ++choice[i];
      continue;
    }
    parent[others[i]] = candidates[i][choice[i]];
    ++i;
  }
  return {k_min, k_max};
}

ValidationReport validate_partition(const Graph& g, const LocalSetPartition& p) {
  ValidationReport rep;
  const int n = g.n_vertices();
  std::vector<int> seen(n, 0);
  for (auto& [u, cell] : p.cells) {
    if (u < 0 || u >= n) {
      rep.violations.push_back("owner " + std::to_string(u) + " is not a vertex");
      continue;
    }
    bool owner_in = false;
    for (int v : cell) {
      if (v < 0 || v >= n) {
        rep.violations.push_back("cell of " + std::to_string(u) +
                                 " contains invalid vertex " + std::to_string(v));
        continue;
      }
      if (++seen[v] == 2)
        rep.violations.push_back("vertex " + std::to_string(v) +
                                 " belongs to more than one cell");
      owner_in |= (v == u);
    }
    if (!owner_in)
      rep.violations.push_back("owner " + std::to_string(u) +
                               " is not a member of its own cell");
    else {
      try {
        cell_depths(g, cell, u);
      } catch (const GraphBandError&) {
        rep.violations.push_back("cell of " + std::to_string(u) +
                                 " induces a disconnected subgraph");
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (seen[v] == 0)
      rep.violations.push_back("vertex " + std::to_string(v) +
                               " is not covered by any cell");
  return rep;
}

PartitionMeasures measures(const Graph& g, const LocalSetPartition& p) {
  auto rep = validate_partition(g, p);
  if (!rep.ok())
    throw GraphBandError("invalid partition: " + rep.violations.front());
  PartitionMeasures m;
  for (auto& [u, cell] : p.cells) {
    CellMeasures c;
    c.size = static_cast<int>(cell.size());
    c.k = maximal_multiple_number(g, cell, u);
    c.k_tilde = k_tilde(g, cell, u);
    c.radius = radius(g, cell, u);
    m.q_max = std::max(m.q_max, std::sqrt(double(c.k) * c.radius));
    m.q_tilde_max = std::max(m.q_tilde_max, std::sqrt(double(c.k_tilde) * c.radius));
    m.n_max = std::max(m.n_max, c.size);
    m.per_cell[u] = c;
  }
  return m;
}

GammaResult gamma(double q_max, double omega) {
  if (q_max < 0 || omega < 0)
    throw GraphBandError("gamma requires q_max >= 0 and omega >= 0");
  GammaResult r;
  r.gamma = q_max * std::sqrt(omega);
  r.guarantee_valid = r.gamma < 1.0;
  return r;
}

LocalSetPartition greedy_one_hop(const Graph& g) {
  const int n = g.n_vertices();
  if (n == 0) throw GraphBandError("empty graph");
  std::vector<std::set<int>> residual(n);
  for (int v = 0; v < n; ++v)
    residual[v] = {g.neighbors(v).begin(), g.neighbors(v).end()};
  std::vector<char> alive(n, 1);
  // (degree, -id): pops max degree, smallest id on ties.
  std::priority_queue<std::pair<int, int>> heap;
  for (int v = 0; v < n; ++v) heap.emplace(static_cast<int>(residual[v].size()), -v);

  std::vector<int> owner(n, -1);
  while (!heap.empty()) {
    auto [d, negv] = heap.top();
    heap.pop();
    int u = -negv;
    if (!alive[u] || d != static_cast<int>(residual[u].size())) continue;
    std::vector<int> cell{u};
    cell.insert(cell.end(), residual[u].begin(), residual[u].end());
    std::set<int> touched;
    for (int p : cell) {
      alive[p] = 0;
      owner[p] = u;
    }
    for (int p : cell) {
      for (int q : residual[p]) {
        residual[q].erase(p);
        if (alive[q]) touched.insert(q);
      }
      residual[p].clear();
    }
    for (int q : touched)
      heap.emplace(static_cast<int>(residual[q].size()), -q);
  }
  return LocalSetPartition::from_owner_map(g, std::move(owner));
}

LocalSetPartition voronoi_partition(const Graph& g, const SamplingSet& s) {
  const int n = g.n_vertices();
  std::vector<int> owner(n, -1);
  std::deque<int> q;
  for (int u : s.members) {  // ascending: smallest owner id wins ties
    if (u < 0 || u >= n)
      throw GraphBandError("sampled vertex " + std::to_string(u) + " out of range");
    owner[u] = u;
    q.push_back(u);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.neighbors(v))
      if (owner[w] < 0) {
        owner[w] = owner[v];  // inherit the BFS parent's cell
        q.push_back(w);
      }
  }
  for (int v = 0; v < n; ++v)
    if (owner[v] < 0)
      throw GraphBandError("vertex " + std::to_string(v) +
                           " unreachable from every sampled vertex");
  return LocalSetPartition::from_owner_map(g, std::move(owner));
}

SamplingSet random_sampling_set(const Graph& g, int k, std::uint64_t seed) {
  const int n = g.n_vertices();
  if (k < 1 || k > n)
    throw GraphBandError("sampling size " + std::to_string(k) +
                         " out of range [1, " + std::to_string(n) + "]");
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(ids[i], ids[pick(rng)]);
  }
  ids.resize(k);
  return SamplingSet::of(std::move(ids));
}

}  // namespace graphband
