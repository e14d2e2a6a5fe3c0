#pragma once

// Dense complex linear algebra for small quantum operators: Hermitian
// eigendecomposition, SVD, operator norms, negative parts, majorization,
// and seeded random matrix sources. All functions are pure; values are
// safe to share between threads.

#include <cstdint>
#include <random>

#include "mlab/types.hpp"

namespace mlab {

struct EigResult {
  RealVector spectrum;    // descending
  ComplexMatrix vectors;  // orthonormal columns, same order as spectrum
};

struct SvdResult {
  ComplexMatrix left;   // isometry columns
  RealVector singular;  // descending, >= 0
  ComplexMatrix right;  // isometry columns; m = left * singular.asDiagonal() * right.adjoint()
};

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (H + H†)/2 before solving; eigenvalues come out descending and each
/// eigenvector's largest-magnitude component is rotated to be real positive
/// so bases are reproducible.
EigResult eig_hermitian(const ComplexMatrix& m);

/// Descending eigenvalues only.
RealVector eigvals_hermitian(const ComplexMatrix& m);

SvdResult svd(const ComplexMatrix& m);

/// Largest |eigenvalue| of a Hermitian matrix (its operator norm).
double operator_norm(const ComplexMatrix& m);

/// Smallest strictly positive eigenvalue of a density matrix, with the
/// convention that a pure state (smallest positive eigenvalue 1) maps to 0.
/// Positivity is decided by kRankTol.
double min_norm(const ComplexMatrix& rho);

/// Positive-semidefinite part built from the negated negative eigenvalues:
/// sum of (-δ_i)|v_i⟩⟨v_i| over δ_i < -kNegativeEigTol.
ComplexMatrix negative_part(const ComplexMatrix& h);

/// Majorization x ≺ y between probability vectors (descending partial sums of
/// y dominate those of x, within kMajorizationSlack). Shorter input is
/// zero-padded; both must sum to 1 within kProbSumTol.
bool majorizes(const RealVector& x, const RealVector& y);

// ---------------------------------------------------------------------------
// Seeded randomness. Everything random in the library flows through an
// explicit engine derived from a single 64-bit seed, so results reproduce
// run to run and are independent of scheduling.

using Rng = std::mt19937_64;

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Matrix of standard complex Gaussians.
ComplexMatrix random_ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);
ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng);
/// G·G†, trace-normalized (full rank almost surely).
ComplexMatrix random_density(Eigen::Index n, Rng& rng);
ComplexVector random_unit_vector(Eigen::Index n, Rng& rng);
/// Haar-distributed isometry (QR of a Ginibre matrix, R-diagonal phases fixed).
ComplexMatrix random_isometry(Eigen::Index rows, Eigen::Index cols, Rng& rng);
/// Uniform point on the probability simplex, sorted descending
/// (exponential-normalization method).
RealVector random_simplex_point(Eigen::Index n, Rng& rng);

}  // namespace mlab
