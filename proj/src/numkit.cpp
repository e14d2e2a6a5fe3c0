#include "mlab/numkit.hpp"

#include <algorithm>
#include <cmath>

namespace mlab {

namespace {

void check_finite(const ComplexMatrix& m) {
  if (!m.allFinite()) throw validation_error("finite_entries");
}

void check_square(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw validation_error("square");
}

void check_hermitian(const ComplexMatrix& m) {
  check_finite(m);
  check_square(m);
  if (!is_hermitian(m)) throw validation_error("hermitian");
}

// Rotate each column so its largest-magnitude entry is real positive.
void fix_column_phases(ComplexMatrix& v) {
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    Eigen::Index imax = 0;
    v.col(c).cwiseAbs().maxCoeff(&imax);
    const Complex pivot = v(imax, c);
    const double mag = std::abs(pivot);
    if (mag > 0) v.col(c) *= std::conj(pivot) / mag;
  }
}

}  // namespace

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

EigResult eig_hermitian(const ComplexMatrix& m) {
  check_hermitian(m);
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  EigResult out;
  out.spectrum = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  fix_column_phases(out.vectors);
  return out;
}

RealVector eigvals_hermitian(const ComplexMatrix& m) {
  check_hermitian(m);
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  return solver.eigenvalues().reverse();
}

SvdResult svd(const ComplexMatrix& m) {
  check_finite(m);
  Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SvdResult out;
  out.left = solver.matrixU();
  out.singular = solver.singularValues();
  out.right = solver.matrixV();
  // Same phase applied to both sides keeps left * Σ * right† invariant.
  for (Eigen::Index c = 0; c < out.left.cols(); ++c) {
    Eigen::Index imax = 0;
    out.left.col(c).cwiseAbs().maxCoeff(&imax);
    const Complex pivot = out.left(imax, c);
    const double mag = std::abs(pivot);
    if (mag > 0) {
      const Complex phase = std::conj(pivot) / mag;
      out.left.col(c) *= phase;
      out.right.col(c) *= phase;
    }
  }
  return out;
}

double operator_norm(const ComplexMatrix& m) {
  const RealVector w = eigvals_hermitian(m);
  if (w.size() == 0) return 0.0;
  return std::max(std::abs(w(0)), std::abs(w(w.size() - 1)));
}

double min_norm(const ComplexMatrix& rho) {
  check_hermitian(rho);
  if (std::abs(rho.trace().real() - 1.0) > kNormTol || std::abs(rho.trace().imag()) > kNormTol)
    throw validation_error("unit_trace");
  const RealVector w = eigvals_hermitian(rho);
  if (w(w.size() - 1) < -kPsdTol) throw validation_error("psd");
  double smallest_positive = -1.0;
  for (Eigen::Index i = w.size() - 1; i >= 0; --i) {
    if (w(i) > kRankTol) {
      smallest_positive = w(i);
      break;
    }
  }
  if (smallest_positive < 0) throw validation_error("unit_trace", "spectrum vanishes");
  return smallest_positive < 1.0 - kRankTol ? smallest_positive : 0.0;
}

ComplexMatrix negative_part(const ComplexMatrix& h) {
  const EigResult eig = eig_hermitian(h);
  ComplexMatrix out = ComplexMatrix::Zero(h.rows(), h.cols());
  for (Eigen::Index i = 0; i < eig.spectrum.size(); ++i) {
    if (eig.spectrum(i) < -kNegativeEigTol)
      out.noalias() += (-eig.spectrum(i)) * eig.vectors.col(i) * eig.vectors.col(i).adjoint();
  }
  return out;
}

bool majorizes(const RealVector& x, const RealVector& y) {
  const Eigen::Index n = std::max(x.size(), y.size());
  if (n == 0) throw validation_error("probability_vector", "empty");
  RealVector a = RealVector::Zero(n);
  RealVector b = RealVector::Zero(n);
  a.head(x.size()) = x;
  b.head(y.size()) = y;
  if (std::abs(a.sum() - 1.0) > kProbSumTol || std::abs(b.sum() - 1.0) > kProbSumTol)
    throw validation_error("probability_sum");
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  double pa = 0.0, pb = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    pa += a(i);
    pb += b(i);
    if (pa > pb + kMajorizationSlack) return false;
  }
  return true;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 on the combined word
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(derive_seed(seed, stream));
}

ComplexMatrix random_ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = random_ginibre(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_density(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = random_ginibre(n, n, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

ComplexVector random_unit_vector(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v /= v.norm();
  return v;
}

ComplexMatrix random_isometry(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  if (cols > rows) throw validation_error("isometry_shape", "cols exceed rows");
  const ComplexMatrix g = random_ginibre(rows, cols, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix r = qr.matrixQR().topLeftCorner(cols, cols).triangularView<Eigen::Upper>();
  for (Eigen::Index c = 0; c < cols; ++c) {
    const double mag = std::abs(r(c, c));
    if (mag > 0) q.col(c) *= r(c, c) / mag;
  }
  return q;
}

RealVector random_simplex_point(Eigen::Index n, Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  RealVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double u = uniform(rng);
    while (u <= 0.0) u = uniform(rng);
    v(i) = -std::log(u);
  }
  v /= v.sum();
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace mlab
