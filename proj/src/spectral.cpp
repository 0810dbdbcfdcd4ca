#include "graphband/spectral.hpp"

#include <fstream>
#include <random>

namespace graphband {

namespace {
constexpr double kBandGuard = 1e-12;
constexpr double kZeroClamp = 1e-9;
}  // namespace

SpectralBasis SpectralBasis::compute(const Eigen::MatrixXd& laplacian) {
  if (laplacian.rows() != laplacian.cols())
    throw GraphBandError("laplacian is not square");
  double sym_err = (laplacian - laplacian.transpose()).cwiseAbs().maxCoeff();
  if (laplacian.size() > 0 && sym_err > 1e-10)
    throw GraphBandError("laplacian not symmetric (max asymmetry " +
                         std::to_string(sym_err) + ")");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian);
  if (solver.info() != Eigen::Success)
    throw GraphBandError("eigendecomposition failed to converge");
  SpectralBasis b;
  b.eigenvalues_ = solver.eigenvalues();
  b.eigenvectors_ = solver.eigenvectors();
  for (int k = 0; k < b.eigenvalues_.size(); ++k) {
    if (b.eigenvalues_[k] < -kZeroClamp)
      throw GraphBandError("laplacian has eigenvalue " +
                           std::to_string(b.eigenvalues_[k]) + " < 0");
    if (b.eigenvalues_[k] < 0.0) b.eigenvalues_[k] = 0.0;
  }
  return b;
}

void SpectralBasis::write_spectrum_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw GraphBandError("cannot write spectrum csv: " + path);
  out << "index,eigenvalue\n";
  out.precision(17);
  for (int k = 0; k < dim(); ++k) out << k << "," << eigenvalues_[k] << "\n";
}

BandlimitedSpace::BandlimitedSpace(const SpectralBasis& basis, double omega)
    : basis_(&basis), omega_(omega) {
  if (omega < 0) throw GraphBandError("cutoff omega must be >= 0");
  int m = 0;
  while (m < basis.dim() && basis.eigenvalues()[m] <= omega + kBandGuard) ++m;
  band_dim_ = m;
  if (band_dim_ == 0 && basis.dim() > 0)
    throw GraphBandError("empty band: no eigenvalue below cutoff");
}

GraphSignal BandlimitedSpace::project(const GraphSignal& f) const {
  return from_band(to_band(f));
}

Eigen::VectorXd BandlimitedSpace::to_band(const GraphSignal& f) const {
  if (f.size() != basis_->dim())
    throw GraphBandError("signal length does not match graph size");
  return band_vectors().transpose() * f;
}

GraphSignal BandlimitedSpace::from_band(const Eigen::VectorXd& coeffs) const {
  if (coeffs.size() != band_dim_)
    throw GraphBandError("coefficient length does not match band dimension");
  return band_vectors() * coeffs;
}

double BandlimitedSpace::out_of_band_energy(const GraphSignal& f) const {
  Eigen::VectorXd fhat = gft(*basis_, f);
  return fhat.tail(basis_->dim() - band_dim_).squaredNorm();
}

Eigen::VectorXd gft(const SpectralBasis& basis, const GraphSignal& f) {
  if (f.size() != basis.dim())
    throw GraphBandError("signal length does not match graph size");
  return basis.eigenvectors().transpose() * f;
}

GraphSignal inverse_gft(const SpectralBasis& basis, const Eigen::VectorXd& fhat) {
  if (fhat.size() != basis.dim())
    throw GraphBandError("spectrum length does not match graph size");
  return basis.eigenvectors() * fhat;
}

GraphSignal generate_bandlimited(const BandlimitedSpace& space,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  GraphSignal raw(space.basis().dim());
  for (int i = 0; i < raw.size(); ++i) raw[i] = normal(rng);
  GraphSignal g = space.project(raw);
  double nrm = g.norm();
  if (nrm == 0.0)
    throw GraphBandError("degenerate zero draw in generate_bandlimited");
  return g / nrm;
}

}  // namespace graphband
