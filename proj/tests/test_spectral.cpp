#include <doctest.h>

#include <random>

#include "graphband/spectral.hpp"
#include "test_support.hpp"

using graphband::BandlimitedSpace;
using graphband::Graph;
using graphband::SpectralBasis;

TEST_CASE("P2 spectrum is {0, 2}") {
  Graph g = Graph::from_edges(2, {{0, 1}});
  auto basis = SpectralBasis::compute(g.laplacian());
  CHECK(basis.eigenvalues()(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(basis.eigenvalues()(1) == doctest::Approx(2.0));
}

TEST_CASE("K3 spectrum is {0, 3, 3}") {
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  auto basis = SpectralBasis::compute(g.laplacian());
  CHECK(basis.eigenvalues()(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(basis.eigenvalues()(1) == doctest::Approx(3.0));
  CHECK(basis.eigenvalues()(2) == doctest::Approx(3.0));
}

TEST_CASE("4-cycle spectrum is {0, 2, 2, 4}") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto basis = SpectralBasis::compute(g.laplacian());
  CHECK(basis.eigenvalues()(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(basis.eigenvalues()(1) == doctest::Approx(2.0));
  CHECK(basis.eigenvalues()(2) == doctest::Approx(2.0));
  CHECK(basis.eigenvalues()(3) == doctest::Approx(4.0));
}

TEST_CASE("basis invariants on random graphs") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 4 + static_cast<int>(rng() % 25);
    Graph g = test_support::random_connected_graph(n, n, rng());
    Eigen::MatrixXd L = g.laplacian();
    auto basis = SpectralBasis::compute(L);

    for (int k = 0; k + 1 < n; ++k)
      CHECK(basis.eigenvalues()(k) <= basis.eigenvalues()(k + 1));
    CHECK(basis.eigenvalues().minCoeff() >= 0.0);

    const Eigen::MatrixXd& U = basis.eigenvectors();
    Eigen::MatrixXd gram = U.transpose() * U;
    CHECK((gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-8);

    Eigen::MatrixXd rebuilt =
        U * basis.eigenvalues().asDiagonal() * U.transpose();
    CHECK((rebuilt - L).cwiseAbs().maxCoeff() <=
          1e-7 * L.cwiseAbs().maxCoeff());

    // Connected graph: eigenvalue 0 is simple.
    CHECK(basis.eigenvalues()(1) > 1e-9);
  }
}

TEST_CASE("zero-eigenvalue multiplicity counts components") {
  // Triangle plus a separate edge.
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  auto basis = SpectralBasis::compute(g.laplacian());
  int zeros = 0;
  for (int k = 0; k < basis.dim(); ++k)
    if (basis.eigenvalues()(k) <= 1e-9) ++zeros;
  CHECK(zeros == g.component_count());
}

TEST_CASE("gft of an eigenvector is a coordinate vector") {
  Graph g = test_support::random_connected_graph(8, 6, 11);
  auto basis = SpectralBasis::compute(g.laplacian());
  Eigen::VectorXd fhat = graphband::gft(basis, basis.eigenvectors().col(3));
  for (int k = 0; k < 8; ++k)
    CHECK(std::abs(fhat[k]) == doctest::Approx(k == 3 ? 1.0 : 0.0).epsilon(1e-9));
}

TEST_CASE("constant signal concentrates on frequency zero") {
  Graph g = test_support::random_connected_graph(9, 5, 12);
  auto basis = SpectralBasis::compute(g.laplacian());
  Eigen::VectorXd fhat = graphband::gft(basis, Eigen::VectorXd::Ones(9));
  for (int k = 1; k < 9; ++k) CHECK(std::abs(fhat[k]) <= 1e-9);
  CHECK(std::abs(fhat[0]) == doctest::Approx(3.0));  // sqrt(9)
}

TEST_CASE("gft preserves norm and inverts") {
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  auto basis = SpectralBasis::compute(g.laplacian());
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  Eigen::VectorXd f(3);
  for (int i = 0; i < 3; ++i) f[i] = normal(rng);
  Eigen::VectorXd fhat = graphband::gft(basis, f);
  CHECK(fhat.norm() == doctest::Approx(f.norm()).epsilon(1e-12));
  CHECK((graphband::inverse_gft(basis, fhat) - f).norm() <= 1e-10);
}

TEST_CASE("projector behavior") {
  Graph g = test_support::random_connected_graph(12, 10, 21);
  auto basis = SpectralBasis::compute(g.laplacian());
  double omega = basis.eigenvalues()(5);
  BandlimitedSpace space(basis, omega);

  SUBCASE("fixed point on bandlimited input") {
    graphband::GraphSignal f = graphband::generate_bandlimited(space, 3);
    CHECK((space.project(f) - f).norm() <= 1e-9);
  }
  SUBCASE("annihilates out-of-band eigenvectors") {
    graphband::GraphSignal u = basis.eigenvectors().col(11);
    REQUIRE(basis.eigenvalues()(11) > omega);
    CHECK(space.project(u).norm() <= 1e-10);
  }
  SUBCASE("full band is the identity") {
    BandlimitedSpace full(basis, basis.eigenvalues()(11));
    std::mt19937_64 rng(5);
    std::normal_distribution<double> normal;
    Eigen::VectorXd f(12);
    for (int i = 0; i < 12; ++i) f[i] = normal(rng);
    CHECK((full.project(f) - f).norm() <= 1e-10);
  }
  SUBCASE("idempotent and self-adjoint") {
    std::mt19937_64 rng(6);
    std::normal_distribution<double> normal;
    Eigen::VectorXd f(12), h(12);
    for (int i = 0; i < 12; ++i) {
      f[i] = normal(rng);
      h[i] = normal(rng);
    }
    CHECK((space.project(space.project(f)) - space.project(f)).norm() <= 1e-10);
    CHECK(space.project(f).dot(h) == doctest::Approx(f.dot(space.project(h))));
  }
}

TEST_CASE("band dimension uses a closed interval") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto basis = SpectralBasis::compute(g.laplacian());
  CHECK(BandlimitedSpace(basis, 2.0).band_dim() == 3);  // 0, 2, 2
  CHECK(BandlimitedSpace(basis, 1.9).band_dim() == 1);
  CHECK(BandlimitedSpace(basis, 0.0).band_dim() == 1);
}

TEST_CASE("generator output is bandlimited, unit norm, deterministic") {
  Graph g = test_support::random_connected_graph(15, 12, 31);
  auto basis = SpectralBasis::compute(g.laplacian());
  BandlimitedSpace space(basis, basis.eigenvalues()(6));
  auto f = graphband::generate_bandlimited(space, 17);
  CHECK((space.project(f) - f).norm() <= 1e-10);
  CHECK(f.norm() == doctest::Approx(1.0).epsilon(1e-12));
  auto f2 = graphband::generate_bandlimited(space, 17);
  CHECK((f - f2).norm() == 0.0);
  auto f3 = graphband::generate_bandlimited(space, 18);
  CHECK((f - f3).norm() > 1e-3);
}

TEST_CASE("omega = 0 on a connected graph gives the constant signal") {
  Graph g = test_support::random_connected_graph(16, 10, 41);
  auto basis = SpectralBasis::compute(g.laplacian());
  BandlimitedSpace space(basis, 0.0);
  REQUIRE(space.band_dim() == 1);
  auto f = graphband::generate_bandlimited(space, 1);
  for (int i = 0; i < 16; ++i)
    CHECK(std::abs(f[i]) == doctest::Approx(0.25).epsilon(1e-9));  // 1/sqrt(16)
}

TEST_CASE("out-of-band energy") {
  Graph g = test_support::random_connected_graph(10, 8, 51);
  auto basis = SpectralBasis::compute(g.laplacian());
  BandlimitedSpace space(basis, basis.eigenvalues()(4));
  REQUIRE(basis.eigenvalues()(9) > basis.eigenvalues()(4));

  auto f = graphband::generate_bandlimited(space, 2);
  CHECK(space.out_of_band_energy(f) <= 1e-12);

  graphband::GraphSignal top = basis.eigenvectors().col(9);
  CHECK(space.out_of_band_energy(top) == doctest::Approx(1.0));

  graphband::GraphSignal mixed =
      2.0 * basis.eigenvectors().col(0) + 3.0 * basis.eigenvectors().col(9);
  CHECK(space.out_of_band_energy(mixed) == doctest::Approx(9.0));
}
