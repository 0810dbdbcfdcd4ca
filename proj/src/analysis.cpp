#include "graphband/analysis.hpp"

#include <cmath>

namespace graphband {

FrameKind frame_kind_from_string(const std::string& name) {
  if (name == "delta" || name == "lowpass_delta") return FrameKind::lowpass_delta;
  if (name == "weighted" || name == "weighted_lowpass_delta")
    return FrameKind::weighted_lowpass_delta;
  if (name == "indicator" || name == "local_set_indicator")
    return FrameKind::local_set_indicator;
  throw GraphBandError("unknown frame kind '" + name +
                       "' (want delta|weighted|indicator)");
}

std::string frame_kind_name(FrameKind k) {
  switch (k) {
    case FrameKind::lowpass_delta: return "delta";
    case FrameKind::weighted_lowpass_delta: return "weighted";
    case FrameKind::local_set_indicator: return "indicator";
  }
  return "?";
}

namespace {

// Rows of the frame elements in band coordinates, one per sampled vertex.
Eigen::MatrixXd frame_rows(const BandlimitedSpace& space,
                           const LocalSetPartition& p, FrameKind kind) {
  const auto& s = p.sampling_set;
  const int m = space.band_dim();
  if (m == 0) throw GraphBandError("empty band");
  Eigen::MatrixXd rows(s.size(), m);
  auto u_band = space.band_vectors();
  for (int i = 0; i < s.size(); ++i) {
    int u = s.members[i];
    switch (kind) {
      case FrameKind::lowpass_delta:
        rows.row(i) = u_band.row(u);
        break;
      case FrameKind::weighted_lowpass_delta:
        rows.row(i) = std::sqrt(double(p.cell(u).size())) * u_band.row(u);
        break;
      case FrameKind::local_set_indicator: {
        rows.row(i).setZero();
        for (int v : p.cell(u)) rows.row(i) += u_band.row(v);
        break;
      }
    }
  }
  return rows;
}

}  // namespace

Eigen::MatrixXd frame_operator_matrix(const Graph& g,
                                      const BandlimitedSpace& space,
                                      const LocalSetPartition& p,
                                      FrameKind kind) {
  auto rep = validate_partition(g, p);
  if (!rep.ok())
    throw GraphBandError("invalid partition: " + rep.violations.front());
  Eigen::MatrixXd rows = frame_rows(space, p, kind);
  return rows.transpose() * rows;
}

OperatorCertificate certify_frame_bounds(const Graph& g,
                                         const BandlimitedSpace& space,
                                         const LocalSetPartition& p,
                                         FrameKind kind, bool use_k_tilde) {
  PartitionMeasures m = measures(g, p);
  OperatorCertificate cert;
  cert.q_max = use_k_tilde ? m.q_tilde_max : m.q_max;
  cert.n_max = m.n_max;
  cert.gamma = cert.q_max * std::sqrt(space.omega());
  // Strict paper hypothesis omega < 1/Q_max^2, with a small guard band.
  cert.hypothesis_ok =
      cert.q_max == 0.0 ||
      space.omega() < 1.0 / (cert.q_max * cert.q_max) - 1e-12;

  Eigen::MatrixXd op = frame_operator_matrix(g, space, p, kind);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op);
  if (es.info() != Eigen::Success)
    throw GraphBandError("frame operator eigendecomposition failed");
  cert.measured_lower = es.eigenvalues().minCoeff();
  cert.measured_upper = es.eigenvalues().maxCoeff();

  double gm = cert.gamma;
  switch (kind) {
    case FrameKind::lowpass_delta:
      cert.theoretical_lower = (1 - gm) * (1 - gm) / cert.n_max;
      cert.theoretical_upper = 1.0;
      break;
    case FrameKind::weighted_lowpass_delta:
      cert.theoretical_lower = (1 - gm) * (1 - gm);
      cert.theoretical_upper = (1 + gm) * (1 + gm);
      break;
    case FrameKind::local_set_indicator:
      cert.theoretical_lower = (1 - gm) * (1 - gm);
      cert.theoretical_upper = static_cast<double>(cert.n_max);
      break;
  }
  cert.satisfied = cert.theoretical_lower <= cert.measured_lower + 1e-9 &&
                   cert.measured_upper <= cert.theoretical_upper + 1e-9;
  return cert;
}

double contraction_norm(const Graph& g, const BandlimitedSpace& space,
                        const LocalSetPartition& p) {
  auto rep = validate_partition(g, p);
  if (!rep.ok())
    throw GraphBandError("invalid partition: " + rep.violations.front());
  const int m = space.band_dim();
  if (m == 0) throw GraphBandError("empty band");
  // Band matrix of G: sum_u b_u r_u^T with b_u the band coordinates of
  // delta_{N(u)} and r_u the band row at u.
  Eigen::MatrixXd b = frame_rows(space, p, FrameKind::local_set_indicator);
  Eigen::MatrixXd r = frame_rows(space, p, FrameKind::lowpass_delta);
  Eigen::MatrixXd op = Eigen::MatrixXd::Identity(m, m) - b.transpose() * r;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(op);
  return svd.singularValues().maxCoeff();
}

StepSize optimal_step_size(const OperatorCertificate& cert) {
  double a = cert.measured_lower, b = cert.measured_upper;
  if (a + b <= 0) throw GraphBandError("degenerate frame bounds A + B <= 0");
  return StepSize{2.0 / (a + b), (b - a) / (b + a)};
}

}  // namespace graphband
