#include "graphband/reconstruction.hpp"

#include <cmath>
#include <random>

namespace graphband {

Method method_from_string(const std::string& name) {
  if (name == "ilsr") return Method::ilsr;
  if (name == "iwr") return Method::iwr;
  if (name == "ipr") return Method::ipr;
  throw GraphBandError("unknown method '" + name + "' (want ilsr|iwr|ipr)");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::ilsr: return "ilsr";
    case Method::iwr: return "iwr";
    case Method::ipr: return "ipr";
  }
  return "?";
}

SampleVector take_samples(const GraphSignal& f, const SamplingSet& s) {
  SampleVector out(s.size());
  for (int i = 0; i < s.size(); ++i) {
    int u = s.members[i];
    if (u < 0 || u >= f.size())
      throw GraphBandError("sampled vertex out of signal range");
    out[i] = f[u];
  }
  return out;
}

namespace {

// Band rows of U_omega at the sampled vertices: r_u^T per row.
Eigen::MatrixXd sample_rows(const BandlimitedSpace& space, const SamplingSet& s) {
  Eigen::MatrixXd r(s.size(), space.band_dim());
  auto u_band = space.band_vectors();
  for (int i = 0; i < s.size(); ++i) r.row(i) = u_band.row(s.members[i]);
  return r;
}

// Band coordinates of delta_{N(u)} per sampled u, stacked as rows.
Eigen::MatrixXd indicator_rows(const BandlimitedSpace& space,
                               const LocalSetPartition& p) {
  Eigen::MatrixXd b =
      Eigen::MatrixXd::Zero(p.sampling_set.size(), space.band_dim());
  auto u_band = space.band_vectors();
  for (int i = 0; i < p.sampling_set.size(); ++i)
    for (int v : p.cell(p.sampling_set.members[i])) b.row(i) += u_band.row(v);
  return b;
}

struct IterationSetup {
  // c <- c + step^T * resid; c0 = step0^T * samples.
  Eigen::MatrixXd step;   // |S| x m
  Eigen::MatrixXd step0;  // |S| x m
  double bound_factor = -1.0;  // <0: no bound trace
  double gamma = 0.0;
  bool gamma_valid = false;
  bool degenerate_mu = false;
};

ReconstructionReport run_iteration(const BandlimitedSpace& space,
                                   const SamplingSet& s,
                                   const SampleVector& samples,
                                   const ReconstructionConfig& cfg,
                                   const IterationSetup& setup) {
  if (samples.size() != s.size())
    throw GraphBandError("sample vector does not match sampling set size");
  if (cfg.max_iterations < 1) throw GraphBandError("max_iterations must be >= 1");
  if (cfg.rel_tol <= 0) throw GraphBandError("rel_tol must be > 0");

  const Eigen::MatrixXd rows = sample_rows(space, s);
  const double samples_norm = samples.norm();

  Eigen::VectorXd truth_band;
  double truth_norm = 0.0;
  if (cfg.truth) {
    truth_band = space.to_band(*cfg.truth);
    truth_norm = cfg.truth->norm();
    if (truth_norm == 0.0) throw GraphBandError("truth signal has zero norm");
  }

  ReconstructionReport rep;
  rep.gamma = setup.gamma;
  rep.gamma_valid = setup.gamma_valid;
  rep.degenerate_mu = setup.degenerate_mu;

  Eigen::VectorXd c = setup.step0.transpose() * samples;

  auto record = [&](int k) {
    Eigen::VectorXd resid = samples - rows * c;
    double rel = samples_norm > 0 ? resid.norm() / samples_norm : resid.norm();
    rep.residuals.push_back(rel);
    if (cfg.truth) {
      double err = (space.from_band(c) - *cfg.truth).norm() / truth_norm;
      rep.errors.push_back(err);
      if (setup.bound_factor >= 0)
        rep.bounds.push_back(std::pow(setup.bound_factor, k) * rep.errors[0]);
    }
    return rel;
  };

  double rel = record(0);
  rep.termination = "max_iter";
  int k = 0;
  while (k < cfg.max_iterations) {
    if (rel <= cfg.rel_tol) {
      rep.termination = "converged";
      break;
    }
    Eigen::VectorXd resid = samples - rows * c;
    c += setup.step.transpose() * resid;
    ++k;
    rel = record(k);
  }
  if (rel <= cfg.rel_tol) rep.termination = "converged";
  rep.iterations = k;
  rep.signal = space.from_band(c);
  return rep;
}

GammaResult partition_gamma(const PartitionMeasures& m,
                            const ReconstructionConfig& cfg) {
  double q = cfg.use_exact_q ? m.q_max : m.q_tilde_max;
  return gamma(q, cfg.omega);
}

}  // namespace

GraphSignal local_propagation(const BandlimitedSpace& space,
                              const LocalSetPartition& p,
                              const SampleVector& samples) {
  if (samples.size() != p.sampling_set.size())
    throw GraphBandError("sample vector does not match partition sampling set");
  Eigen::MatrixXd b = indicator_rows(space, p);
  return space.from_band(b.transpose() * samples);
}

ReconstructionReport ilsr(const BandlimitedSpace& space, const SamplingSet& s,
                          const SampleVector& samples,
                          const ReconstructionConfig& cfg) {
  IterationSetup setup;
  setup.step = sample_rows(space, s);
  setup.step0 = setup.step;
  return run_iteration(space, s, samples, cfg, setup);
}

ReconstructionReport iwr(const Graph& g, const BandlimitedSpace& space,
                         const LocalSetPartition& p, const SampleVector& samples,
                         const ReconstructionConfig& cfg) {
  // measures() validates the partition.
  PartitionMeasures m = measures(g, p);
  GammaResult gr = partition_gamma(m, cfg);
  const auto& s = p.sampling_set;
  Eigen::MatrixXd rows = sample_rows(space, s);
  Eigen::VectorXd weights(s.size());
  for (int i = 0; i < s.size(); ++i)
    weights[i] = static_cast<double>(p.cell(s.members[i]).size());
  double scale = 1.0 / (1.0 + gr.gamma * gr.gamma);
  IterationSetup setup;
  setup.step = scale * weights.asDiagonal() * rows;
  setup.step0 = setup.step;
  double ga = gr.gamma;
  setup.bound_factor = 2.0 * ga / (1.0 + ga * ga);
  setup.gamma = ga;
  setup.gamma_valid = gr.guarantee_valid;
  return run_iteration(space, s, samples, cfg, setup);
}

ReconstructionReport ipr(const Graph& g, const BandlimitedSpace& space,
                         const LocalSetPartition& p, const SampleVector& samples,
                         const ReconstructionConfig& cfg) {
  PartitionMeasures m = measures(g, p);
  GammaResult gr = partition_gamma(m, cfg);
  IterationSetup setup;
  setup.step = indicator_rows(space, p);
  setup.step0 = setup.step;
  setup.bound_factor = gr.gamma;
  setup.gamma = gr.gamma;
  setup.gamma_valid = gr.guarantee_valid;
  return run_iteration(space, p.sampling_set, samples, cfg, setup);
}

ReconstructionReport reconstruct(const Graph& g, const BandlimitedSpace& space,
                                 const LocalSetPartition& p,
                                 const SampleVector& samples,
                                 const ReconstructionConfig& cfg) {
  switch (cfg.method) {
    case Method::ilsr: return ilsr(space, p.sampling_set, samples, cfg);
    case Method::iwr: return iwr(g, space, p, samples, cfg);
    case Method::ipr: return ipr(g, space, p, samples, cfg);
  }
  throw GraphBandError("unreachable");
}

ReconstructionReport frame_iteration(const BandlimitedSpace& space,
                                     const SamplingSet& s,
                                     const Eigen::VectorXd& weights, double mu,
                                     const SampleVector& samples,
                                     const ReconstructionConfig& cfg) {
  if (mu < 0) throw GraphBandError("step size mu must be >= 0");
  if (weights.size() != s.size())
    throw GraphBandError("weight vector does not match sampling set size");
  IterationSetup setup;
  setup.step = mu * weights.asDiagonal() * sample_rows(space, s);
  setup.step0 = setup.step;
  setup.degenerate_mu = (mu == 0.0);
  return run_iteration(space, s, samples, cfg, setup);
}

SampleVector add_observation_noise(const SampleVector& samples, double snr_db,
                                   std::uint64_t seed) {
  if (!std::isfinite(snr_db)) throw GraphBandError("snr_db must be finite");
  double sig_norm = samples.norm();
  if (sig_norm == 0.0)
    throw GraphBandError("cannot set SNR against zero-norm samples");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd noise(samples.size());
  for (int i = 0; i < noise.size(); ++i) noise[i] = normal(rng);
  double target_norm = sig_norm / std::pow(10.0, snr_db / 20.0);
  noise *= target_norm / noise.norm();
  return samples + noise;
}

double eigenvalue_lower_bound(const Graph& g) {
  if (g.component_count() != 1)
    throw GraphBandError("eigenvalue_lower_bound requires a connected graph");
  std::vector<int> all(g.n_vertices());
  for (int v = 0; v < g.n_vertices(); ++v) all[v] = v;
  double best = 0.0;
  for (int u = 0; u < g.n_vertices(); ++u) {
    double k = maximal_multiple_number(g, all, u);
    double r = radius(g, all, u);
    if (k > 0 && r > 0) best = std::max(best, 1.0 / (k * r));
  }
  return best;
}

}  // namespace graphband
