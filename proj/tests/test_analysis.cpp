#include <doctest.h>

#include <random>

#include "graphband/analysis.hpp"
#include "graphband/reconstruction.hpp"
#include "test_support.hpp"

using namespace graphband;

namespace {

LocalSetPartition full_sampling(const Graph& g) {
  std::vector<int> owner(g.n_vertices());
  for (int v = 0; v < g.n_vertices(); ++v) owner[v] = v;
  return LocalSetPartition::from_owner_map(g, owner);
}

}  // namespace

TEST_CASE("frame kind names") {
  CHECK(frame_kind_from_string("delta") == FrameKind::lowpass_delta);
  CHECK(frame_kind_from_string("weighted") == FrameKind::weighted_lowpass_delta);
  CHECK(frame_kind_from_string("indicator") == FrameKind::local_set_indicator);
  CHECK(frame_kind_name(FrameKind::lowpass_delta) == "delta");
  CHECK_THROWS_AS(frame_kind_from_string("nope"), GraphBandError);
}

TEST_CASE("full sampling delta frame operator is the band identity") {
  Graph g = test_support::random_connected_graph(11, 7, 151);
  auto basis = SpectralBasis::compute(g.laplacian());
  BandlimitedSpace space(basis, basis.eigenvalues()(4));
  auto p = full_sampling(g);
  Eigen::MatrixXd M = frame_operator_matrix(g, space, p, FrameKind::lowpass_delta);
  int m = space.band_dim();
  CHECK((M - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("single-element frame gives a rank-1 operator") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto basis = SpectralBasis::compute(g.laplacian());
  BandlimitedSpace space(basis, 2.0);  // band dim 3
  LocalSetPartition p = LocalSetPartition::from_owner_map(g, {0, 0, 0, 0});
  Eigen::MatrixXd M =
      frame_operator_matrix(g, space, p, FrameKind::lowpass_delta);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  CHECK(svd.singularValues()(0) > 1e-8);
  CHECK(svd.singularValues()(1) <= 1e-10);
}

TEST_CASE("full sampling certificate is tight") {
  Graph g = test_support::random_connected_graph(10, 6, 161);
  auto basis = SpectralBasis::compute(g.laplacian());
  BandlimitedSpace space(basis, basis.eigenvalues()(3));
  auto p = full_sampling(g);
  auto cert = certify_frame_bounds(g, space, p, FrameKind::lowpass_delta);
  CHECK(cert.measured_lower == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(cert.measured_upper == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(cert.theoretical_lower == doctest::Approx(1.0));
  CHECK(cert.theoretical_upper == doctest::Approx(1.0));
  CHECK(cert.satisfied);
  CHECK(cert.hypothesis_ok);
  CHECK(cert.gamma == 0.0);
}

TEST_CASE("all three frame kinds certify on random valid instances") {
  std::mt19937_64 rng(171);
  int done = 0;
  while (done < 15) {
    int n = 6 + static_cast<int>(rng() % 15);
    Graph g = test_support::random_connected_graph(n, n / 2, rng());
    auto p = test_support::random_partition(g, 2 + static_cast<int>(rng() % (n / 2)),
                                            rng());
    auto m = measures(g, p);
    double q = std::max(m.q_max, 1e-9);
    double omega = 0.8 / (q * q);
    auto basis = SpectralBasis::compute(g.laplacian());
    BandlimitedSpace space(basis, omega);
    if (space.band_dim() < 1) continue;
    ++done;
    for (FrameKind kind : {FrameKind::lowpass_delta,
                           FrameKind::weighted_lowpass_delta,
                           FrameKind::local_set_indicator}) {
      auto cert = certify_frame_bounds(g, space, p, kind);
      CHECK(cert.hypothesis_ok);
      CHECK(cert.satisfied);
      CHECK(cert.measured_lower >= cert.theoretical_lower - 1e-9);
      CHECK(cert.measured_upper <= cert.theoretical_upper + 1e-9);
    }
  }
}

TEST_CASE("hypothesis flag trips when gamma reaches 1") {
  Graph g = test_support::random_connected_graph(12, 6, 181);
  auto p = test_support::random_partition(g, 3, 7);
  auto m = measures(g, p);
  REQUIRE(m.q_max > 0.0);
  double omega = 1.5 / (m.q_max * m.q_max);
  auto basis = SpectralBasis::compute(g.laplacian());
  BandlimitedSpace space(basis, omega);
  auto cert = certify_frame_bounds(g, space, p, FrameKind::lowpass_delta);
  CHECK_FALSE(cert.hypothesis_ok);
  CHECK(cert.gamma >= 1.0);
}

TEST_CASE("contraction norm") {
  SUBCASE("zero under full sampling") {
    Graph g = test_support::random_connected_graph(9, 5, 191);
    auto basis = SpectralBasis::compute(g.laplacian());
    BandlimitedSpace space(basis, basis.eigenvalues()(3));
    CHECK(contraction_norm(g, space, full_sampling(g)) <= 1e-10);
  }
  SUBCASE("bounded by gamma when the hypothesis holds") {
    std::mt19937_64 rng(201);
    int done = 0;
    while (done < 10) {
      int n = 6 + static_cast<int>(rng() % 18);
      Graph g = test_support::random_connected_graph(n, n / 3, rng());
      auto p =
          test_support::random_partition(g, 2 + static_cast<int>(rng() % (n / 2)),
                                         rng());
      auto m = measures(g, p);
      if (m.q_tilde_max == 0.0) continue;
      double omega = 0.9 / (m.q_tilde_max * m.q_tilde_max);
      auto basis = SpectralBasis::compute(g.laplacian());
      BandlimitedSpace space(basis, omega);
      ++done;
      double gam = m.q_tilde_max * std::sqrt(omega);
      CHECK(contraction_norm(g, space, p) <= gam + 1e-9);
    }
  }
}

TEST_CASE("optimal step size") {
  SUBCASE("tight frame: one-step convergence factor 0") {
    OperatorCertificate cert;
    cert.measured_lower = 2.0;
    cert.measured_upper = 2.0;
    auto s = optimal_step_size(cert);
    CHECK(s.mu == doctest::Approx(0.5));
    CHECK(s.factor == doctest::Approx(0.0));
  }
  SUBCASE("A=0.25, B=2.25 gives mu=0.8, factor 0.8") {
    OperatorCertificate cert;
    cert.measured_lower = 0.25;
    cert.measured_upper = 2.25;
    auto s = optimal_step_size(cert);
    CHECK(s.mu == doctest::Approx(0.8));
    CHECK(s.factor == doctest::Approx(0.8));
  }
  SUBCASE("frame iteration with the optimal step respects the factor") {
    Graph g = test_support::random_connected_graph(12, 8, 211);
    auto p = test_support::random_partition(g, 5, 3);
    auto m = measures(g, p);
    REQUIRE(m.q_max > 0.0);
    double omega = 0.7 / (m.q_max * m.q_max);
    auto basis = SpectralBasis::compute(g.laplacian());
    BandlimitedSpace space(basis, omega);
    auto cert =
        certify_frame_bounds(g, space, p, FrameKind::weighted_lowpass_delta);
    auto s = optimal_step_size(cert);

    GraphSignal truth = generate_bandlimited(space, 19);
    SampleVector samples = take_samples(truth, p.sampling_set);
    Eigen::VectorXd weights(p.sampling_set.size());
    for (int i = 0; i < p.sampling_set.size(); ++i)
      weights[i] =
          static_cast<double>(p.cell(p.sampling_set.members[i]).size());
    ReconstructionConfig cfg;
    cfg.omega = omega;
    cfg.truth = truth;
    cfg.max_iterations = 60;
    auto rep = frame_iteration(space, p.sampling_set, weights, s.mu, samples, cfg);
    double final_err = (rep.signal - truth).norm() / truth.norm();
    CHECK(final_err <= 1e-8);
    for (size_t k = 0; k + 1 < rep.errors.size(); ++k) {
      if (rep.errors[k] <= 1e-13) break;
      CHECK(rep.errors[k + 1] <= s.factor * rep.errors[k] + 1e-8);
    }
  }
}

TEST_CASE("contraction norm crosses 1 only at or above the threshold") {
  Graph g = test_support::random_connected_graph(14, 7, 221);
  auto p = test_support::random_partition(g, 4, 11);
  auto m = measures(g, p);
  REQUIRE(m.q_tilde_max > 0.0);
  double threshold = 1.0 / (m.q_tilde_max * m.q_tilde_max);
  auto basis = SpectralBasis::compute(g.laplacian());
  for (double frac : {0.2, 0.5, 0.9, 0.99}) {
    BandlimitedSpace space(basis, frac * threshold);
    CHECK(contraction_norm(g, space, p) < 1.0);
  }
}
