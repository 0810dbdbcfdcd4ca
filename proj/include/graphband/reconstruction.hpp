#ifndef GRAPHBAND_RECONSTRUCTION_HPP
#define GRAPHBAND_RECONSTRUCTION_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "graphband/localsets.hpp"
#include "graphband/spectral.hpp"

namespace graphband {

enum class Method { ilsr, iwr, ipr };

Method method_from_string(const std::string& name);
std::string method_name(Method m);

struct ReconstructionConfig {
  Method method = Method::ilsr;
  double omega = 0.0;  // priori-known cutoff; defines PW_omega
  int max_iterations = 1000;
  double rel_tol = 1e-9;
  std::optional<GraphSignal> truth;  // enables error/bound traces
  bool use_exact_q = false;          // gamma from Q_max instead of Q~_max
};

struct ReconstructionReport {
  GraphSignal signal;
  std::vector<double> errors;     // ||f^(k)-f||/||f|| incl. k=0 (needs truth)
  std::vector<double> residuals;  // sampled relative residual per iteration
  std::vector<double> bounds;     // theoretical decay trace (iwr/ipr only)
  int iterations = 0;
  std::string termination;  // "converged" | "max_iter"
  double gamma = 0.0;
  bool gamma_valid = false;  // gamma < 1
  bool degenerate_mu = false;
};

// Samples are given as a dense vector indexed like sampling_set.members.
using SampleVector = Eigen::VectorXd;

SampleVector take_samples(const GraphSignal& f, const SamplingSet& s);

// Gf = P_omega(sum_u f(u) delta_{N(u)}). Samples must align with the
// partition's sampling set.
GraphSignal local_propagation(const BandlimitedSpace& space,
                              const LocalSetPartition& p,
                              const SampleVector& samples);

ReconstructionReport ilsr(const BandlimitedSpace& space, const SamplingSet& s,
                          const SampleVector& samples,
                          const ReconstructionConfig& cfg);

ReconstructionReport iwr(const Graph& g, const BandlimitedSpace& space,
                         const LocalSetPartition& p, const SampleVector& samples,
                         const ReconstructionConfig& cfg);

ReconstructionReport ipr(const Graph& g, const BandlimitedSpace& space,
                         const LocalSetPartition& p, const SampleVector& samples,
                         const ReconstructionConfig& cfg);

// Convenience dispatcher; ilsr uses only p.sampling_set.
ReconstructionReport reconstruct(const Graph& g, const BandlimitedSpace& space,
                                 const LocalSetPartition& p,
                                 const SampleVector& samples,
                                 const ReconstructionConfig& cfg);

// Generic frame iteration f^(k+1) = f^(k) + mu * S(f - f^(k)) for the
// weighted lowpass-delta frame family (weights w_u on sampled residuals).
// mu < 0 is an error; mu = 0 runs but is flagged degenerate.
ReconstructionReport frame_iteration(const BandlimitedSpace& space,
                                     const SamplingSet& s,
                                     const Eigen::VectorXd& weights, double mu,
                                     const SampleVector& samples,
                                     const ReconstructionConfig& cfg);

// AWGN rescaled so the realized SNR matches snr_db exactly.
SampleVector add_observation_noise(const SampleVector& samples, double snr_db,
                                   std::uint64_t seed);

// Corollary-style lower bound on the smallest positive Laplacian
// eigenvalue: max over vertices of 1/(K(u) R(u)) with the whole graph as
// the local set.
double eigenvalue_lower_bound(const Graph& g);

}  // namespace graphband

#endif
