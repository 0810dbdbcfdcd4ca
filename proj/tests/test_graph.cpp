#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "graphband/graph.hpp"
#include "test_support.hpp"

using graphband::Graph;
using graphband::GraphBandError;

namespace {

std::string write_temp(const std::string& content) {
  static int counter = 0;
  std::string path = "graph_test_" + std::to_string(counter++) + ".txt";
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("triangle edge list") {
  auto path = write_temp("0 1\n1 2\n2 0\n");
  Graph g = graphband::load_edge_list(path);
  CHECK(g.n_vertices() == 3);
  CHECK(g.n_edges() == 3);
  std::remove(path.c_str());
}

TEST_CASE("duplicate edges collapse") {
  auto path = write_temp("0 1\n1 0\n");
  Graph g = graphband::load_edge_list(path);
  CHECK(g.n_vertices() == 2);
  CHECK(g.n_edges() == 1);
  std::remove(path.c_str());
}

TEST_CASE("vertices header fixes size; comments skipped") {
  auto path = write_temp("# a comment\n# vertices 5\n0 1\n");
  Graph g = graphband::load_edge_list(path);
  CHECK(g.n_vertices() == 5);
  CHECK(g.n_edges() == 1);
  CHECK(g.component_count() == 4);
  std::remove(path.c_str());
}

TEST_CASE("self-loop is a hard error") {
  auto path = write_temp("0 0\n");
  CHECK_THROWS_AS(graphband::load_edge_list(path), GraphBandError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(Graph::from_edges(2, {{1, 1}}), GraphBandError);
}

TEST_CASE("out-of-range ids rejected") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), GraphBandError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{-1, 0}}), GraphBandError);
}

TEST_CASE("one-based ids shift down") {
  auto path = write_temp("1 2\n2 3\n");
  Graph g = graphband::load_edge_list(path, true);
  CHECK(g.n_vertices() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  std::remove(path.c_str());
}

TEST_CASE("laplacian of P2") {
  Graph g = Graph::from_edges(2, {{0, 1}});
  Eigen::MatrixXd L = g.laplacian();
  CHECK(L(0, 0) == doctest::Approx(1));
  CHECK(L(0, 1) == doctest::Approx(-1));
  CHECK(L(1, 0) == doctest::Approx(-1));
  CHECK(L(1, 1) == doctest::Approx(1));
}

TEST_CASE("laplacian of triangle") {
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  Eigen::MatrixXd L = g.laplacian();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(L(i, j) == doctest::Approx(i == j ? 2.0 : -1.0));
}

TEST_CASE("laplacian of star: hand-assembled D-A") {
  Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  Eigen::MatrixXd L = g.laplacian();
  CHECK(L(0, 0) == doctest::Approx(3));
  for (int j = 1; j < 4; ++j) {
    CHECK(L(j, j) == doctest::Approx(1));
    CHECK(L(0, j) == doctest::Approx(-1));
    CHECK(L(j, 0) == doctest::Approx(-1));
  }
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 1);
}

TEST_CASE("quadratic form equals edge sum of squared differences") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 5 + static_cast<int>(rng() % 20);
    Graph g = test_support::random_connected_graph(n, n / 2, rng());
    std::normal_distribution<double> normal;
    Eigen::VectorXd f(n);
    for (int i = 0; i < n; ++i) f[i] = normal(rng);
    double quad = f.dot(g.laplacian() * f);
    double edge_sum = 0.0;
    for (int u = 0; u < n; ++u)
      for (int v : g.neighbors(u))
        if (u < v) edge_sum += (f[u] - f[v]) * (f[u] - f[v]);
    CHECK(quad == doctest::Approx(edge_sum).epsilon(1e-9));
  }
}

TEST_CASE("component count and largest component extraction") {
  // Two triangles and an isolated vertex.
  Graph g = Graph::from_edges(
      7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {3, 5}});
  CHECK(g.component_count() == 3);
  std::vector<int> old_ids;
  Graph big = g.largest_component(&old_ids);
  CHECK(big.n_vertices() == 3);
  CHECK(big.n_edges() == 3);
  // Smallest-id component wins a size tie.
  CHECK(old_ids == std::vector<int>{0, 1, 2});
}

TEST_CASE("signal csv round trip") {
  Eigen::VectorXd f(4);
  f << 1.5, -2.25, 0.0, 31.0;
  std::string path = "sig_roundtrip.csv";
  graphband::write_signal_csv(path, f);
  Eigen::VectorXd g = graphband::read_signal_csv(path, 4);
  CHECK((f - g).lpNorm<Eigen::Infinity>() == doctest::Approx(0.0));
  std::remove(path.c_str());
}

TEST_CASE("signal csv wrong length rejected") {
  Eigen::VectorXd f(3);
  f << 1, 2, 3;
  std::string path = "sig_short.csv";
  graphband::write_signal_csv(path, f);
  CHECK_THROWS_AS(graphband::read_signal_csv(path, 5), GraphBandError);
  std::remove(path.c_str());
}
