#ifndef GRAPHBAND_ANALYSIS_HPP
#define GRAPHBAND_ANALYSIS_HPP

#include <string>

#include "graphband/localsets.hpp"
#include "graphband/spectral.hpp"

namespace graphband {

enum class FrameKind {
  lowpass_delta,           // { P_w(delta_u) }
  weighted_lowpass_delta,  // { sqrt(|N(u)|) P_w(delta_u) }
  local_set_indicator,     // { P_w(delta_{N(u)}) }
};

FrameKind frame_kind_from_string(const std::string& name);
std::string frame_kind_name(FrameKind k);

// Frame operator expressed in the band eigenvector basis:
// M = U_w^T (sum_i g_i g_i^T) U_w, band_dim x band_dim, symmetric PSD.
Eigen::MatrixXd frame_operator_matrix(const Graph& g,
                                      const BandlimitedSpace& space,
                                      const LocalSetPartition& p,
                                      FrameKind kind);

struct OperatorCertificate {
  double measured_lower = 0.0;
  double measured_upper = 0.0;
  double theoretical_lower = 0.0;
  double theoretical_upper = 0.0;
  bool satisfied = false;       // measured within theoretical (1e-9 slack)
  bool hypothesis_ok = false;   // omega < 1/Q_max^2 (strict, 1e-12 guard)
  double gamma = 0.0;
  double q_max = 0.0;
  int n_max = 0;
};

// Measured bounds are the extreme eigenvalues of the frame operator
// matrix; theoretical bounds follow the frame kind. With use_k_tilde the
// hypothesis and gamma use Q~_max instead of Q_max.
OperatorCertificate certify_frame_bounds(const Graph& g,
                                         const BandlimitedSpace& space,
                                         const LocalSetPartition& p,
                                         FrameKind kind,
                                         bool use_k_tilde = false);

// Spectral norm of the band restriction of (I - G), G the local
// propagation operator.
double contraction_norm(const Graph& g, const BandlimitedSpace& space,
                        const LocalSetPartition& p);

struct StepSize {
  double mu = 0.0;      // 2/(A+B)
  double factor = 0.0;  // (B-A)/(B+A)
};

StepSize optimal_step_size(const OperatorCertificate& cert);

}  // namespace graphband

#endif
