#ifndef GRAPHBAND_SPECTRAL_HPP
#define GRAPHBAND_SPECTRAL_HPP

#include <cstdint>
#include <string>

#include "graphband/graph.hpp"

namespace graphband {

/// Eigenvalues (ascending, clamped at 0 within tolerance) and orthonormal
/// eigenvectors of a graph Laplacian.
class SpectralBasis {
 public:
  static SpectralBasis compute(const Eigen::MatrixXd& laplacian);

  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }
  int dim() const { return static_cast<int>(eigenvalues_.size()); }

  void write_spectrum_csv(const std::string& path) const;

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

/// PW_omega(G): the span of eigenvectors with eigenvalue <= omega.
/// Band membership uses a closed interval with a 1e-12 guard.
class BandlimitedSpace {
 public:
  BandlimitedSpace(const SpectralBasis& basis, double omega);

  double omega() const { return omega_; }
  int band_dim() const { return band_dim_; }
  const SpectralBasis& basis() const { return *basis_; }

  // Band eigenvector block U_omega (n x band_dim). Eigenvalues are sorted
  // ascending so the band is always a prefix of the columns.
  auto band_vectors() const { return basis_->eigenvectors().leftCols(band_dim_); }

  GraphSignal project(const GraphSignal& f) const;

  // Coefficients of f in the band basis (length band_dim).
  Eigen::VectorXd to_band(const GraphSignal& f) const;
  GraphSignal from_band(const Eigen::VectorXd& coeffs) const;

  double out_of_band_energy(const GraphSignal& f) const;

 private:
  const SpectralBasis* basis_;
  double omega_;
  int band_dim_;
};

// Full GFT: U^T f.
Eigen::VectorXd gft(const SpectralBasis& basis, const GraphSignal& f);
GraphSignal inverse_gft(const SpectralBasis& basis, const Eigen::VectorXd& fhat);

// P_omega applied to an i.i.d. standard-normal draw, normalized to unit
// 2-norm. Deterministic per seed.
GraphSignal generate_bandlimited(const BandlimitedSpace& space, std::uint64_t seed);

}  // namespace graphband

#endif
