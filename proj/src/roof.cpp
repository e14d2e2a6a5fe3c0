#include "mlab/roof.hpp"

#include <algorithm>
#include <cmath>

namespace mlab {

namespace {

constexpr double kMemberWeightFloor = 1e-12;

// exp(S) for skew-Hermitian S via the Hermitian eigendecomposition of iS.
ComplexMatrix exp_skew(const ComplexMatrix& s) {
  const ComplexMatrix k = Complex(0, 1) * s;  // Hermitian
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(k);
  ComplexVector phases(solver.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    const double d = solver.eigenvalues()(i);
    phases(i) = Complex(std::cos(d), -std::sin(d));  // e^{-i d}
  }
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

struct Objective {
  // columns are √p_j ψ_j
  ComplexMatrix scaled_members;
  Eigen::Index d_left = 0;
  Eigen::Index d_right = 0;
  std::function<double(const ComplexVector&)> pure_value;  // set for functional roofs
  const Measure* measure = nullptr;                        // set for measure roofs

  double member_value(const ComplexVector& unit) const {
    if (pure_value) return pure_value(unit);
    ComplexMatrix m(d_left, d_right);
    for (Eigen::Index a = 0; a < d_left; ++a)
      for (Eigen::Index b = 0; b < d_right; ++b) m(a, b) = unit(a * d_right + b);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m * m.adjoint(), Eigen::EigenvaluesOnly);
    RealVector spectrum = solver.eigenvalues().reverse();
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) spectrum(i) = std::max(spectrum(i), 0.0);
    return measure_on_spectrum(*measure, spectrum, static_cast<int>(d_left));
  }

  double operator()(const ComplexMatrix& v) const {
    const ComplexMatrix members = scaled_members * v.transpose();
    double total = 0;
    for (Eigen::Index k = 0; k < members.cols(); ++k) {
      const double q = members.col(k).squaredNorm();
      if (q < kMemberWeightFloor) continue;
      total += q * member_value(members.col(k) / std::sqrt(q));
    }
    return total;
  }
};

struct RestartOutcome {
  double value = 0.0;
  ComplexMatrix v;
  bool converged = false;
};

RestartOutcome run_restart(const Objective& objective, Eigen::Index m, Eigen::Index r,
                           std::uint64_t seed, std::uint64_t stream, bool identity_start,
                           const RoofOptions& opts) {
  Rng rng = make_rng(seed, stream);
  // The first restart at m = r descends from the spectral ensemble itself.
  ComplexMatrix v = identity_start ? ComplexMatrix(ComplexMatrix::Identity(m, r))
                                   : random_isometry(m, r, rng);
  double f = objective(v);
  double step = 0.4;
  int rejects = 0;
  constexpr int kWindow = 100;
  double window_start_value = f;
  RestartOutcome out;
  for (int iter = 1; iter <= opts.max_iterations; ++iter) {
    ComplexMatrix g = random_ginibre(m, m, rng);
    ComplexMatrix skew = 0.5 * (g - g.adjoint());
    const double scale = skew.norm();
    if (scale > 0) skew /= scale;
    const ComplexMatrix candidate = exp_skew(step * skew) * v;
    const double fc = objective(candidate);
    if (fc < f) {
      v = candidate;
      f = fc;
      rejects = 0;
    } else if (++rejects >= 12) {
      step *= 0.5;
      rejects = 0;
      if (step < 1e-9) {
        out.converged = true;
        break;
      }
    }
    if (iter % kWindow == 0) {
      const double improvement = window_start_value - f;
      if (improvement < opts.tol * std::max(1.0, std::abs(window_start_value))) {
        out.converged = true;
        break;
      }
      window_start_value = f;
    }
  }
  out.value = f;
  out.v = v;
  return out;
}

RoofResult optimize(const DensityMatrix& rho, const Objective& objective_template,
                    const RoofOptions& opts) {
  const Ensemble base = eig_ensemble(rho);
  const Eigen::Index r = static_cast<Eigen::Index>(base.states.size());
  if (r > opts.max_rank)
    throw capability_error("numerical rank " + std::to_string(r) + " exceeds the supported cap of " +
                           std::to_string(opts.max_rank));

  Objective objective = objective_template;
  objective.scaled_members.resize(rho.matrix.rows(), r);
  for (Eigen::Index j = 0; j < r; ++j)
    objective.scaled_members.col(j) =
        std::sqrt(base.probabilities(j)) * base.states[j].amplitudes;

  RoofResult result;
  if (r == 1) {
    // Unique decomposition up to phase.
    result.value = objective.member_value(base.states[0].amplitudes);
    result.best_ensemble = base;
    result.restarts_used = 1;
    result.converged = true;
    return result;
  }

  std::vector<int> sizes = opts.ensemble_sizes;
  if (sizes.empty())
    for (Eigen::Index m = r; m <= 2 * r; ++m) sizes.push_back(static_cast<int>(m));

  bool first = true;
  ComplexMatrix best_v;
  bool best_converged = false;
  int restarts_used = 0;
  for (const int m : sizes) {
    if (m < r) throw validation_error("ensemble_size", "fewer members than the rank");
    for (int restart = 0; restart < opts.restarts; ++restart) {
      const std::uint64_t stream =
          static_cast<std::uint64_t>(m) * 1000003ULL + static_cast<std::uint64_t>(restart);
      const bool identity_start = restart == 0 && m == r;
      const RestartOutcome outcome =
          run_restart(objective, m, r, opts.seed, stream, identity_start, opts);
      ++restarts_used;
      if (first || outcome.value < result.value) {
        first = false;
        result.value = outcome.value;
        best_v = outcome.v;
        best_converged = outcome.converged;
      }
    }
  }
  result.best_ensemble = apply_isometry(base, best_v);
  result.restarts_used = restarts_used;
  result.converged = best_converged;
  return result;
}

}  // namespace

DensityMatrix ensemble_density(const Ensemble& ensemble) {
  if (ensemble.states.empty()) throw validation_error("ensemble", "no members");
  ComplexMatrix rho =
      ComplexMatrix::Zero(ensemble.states[0].amplitudes.size(), ensemble.states[0].amplitudes.size());
  for (size_t j = 0; j < ensemble.states.size(); ++j)
    rho.noalias() += ensemble.probabilities(static_cast<Eigen::Index>(j)) *
                     ensemble.states[j].amplitudes * ensemble.states[j].amplitudes.adjoint();
  return make_density(std::move(rho), ensemble.states[0].signature);
}

Ensemble eig_ensemble(const DensityMatrix& rho) {
  const EigResult eig = eig_hermitian(rho.matrix);
  Ensemble out;
  std::vector<double> probs;
  for (Eigen::Index i = 0; i < eig.spectrum.size(); ++i) {
    if (eig.spectrum(i) > kRankTol) {
      probs.push_back(eig.spectrum(i));
      ComplexVector v = eig.vectors.col(i);
      v /= v.norm();
      out.states.push_back(PureState{std::move(v), rho.signature});
    }
  }
  out.probabilities = Eigen::Map<RealVector>(probs.data(), static_cast<Eigen::Index>(probs.size()));
  return out;
}

Ensemble apply_isometry(const Ensemble& base, const ComplexMatrix& v) {
  const Eigen::Index r = static_cast<Eigen::Index>(base.states.size());
  if (v.cols() != r) throw validation_error("isometry_shape", "columns must match the ensemble size");
  if (v.rows() < r) throw validation_error("isometry_shape", "fewer rows than columns");
  if ((v.adjoint() * v - ComplexMatrix::Identity(r, r)).cwiseAbs().maxCoeff() > kIsometryTol)
    throw validation_error("isometry", "columns are not orthonormal");

  ComplexMatrix scaled(base.states[0].amplitudes.size(), r);
  for (Eigen::Index j = 0; j < r; ++j)
    scaled.col(j) = std::sqrt(base.probabilities(j)) * base.states[j].amplitudes;
  const ComplexMatrix members = scaled * v.transpose();

  Ensemble out;
  std::vector<double> probs;
  for (Eigen::Index k = 0; k < members.cols(); ++k) {
    const double q = members.col(k).squaredNorm();
    if (q < kMemberWeightFloor) continue;
    probs.push_back(q);
    out.states.push_back(
        PureState{ComplexVector(members.col(k) / std::sqrt(q)), base.states[0].signature});
  }
  out.probabilities = Eigen::Map<RealVector>(probs.data(), static_cast<Eigen::Index>(probs.size()));
  return out;
}

RoofResult roof_value(const DensityMatrix& rho, const Measure& measure, const RoofOptions& opts) {
  if (measure.kind == MeasureKind::SchmidtRank)
    throw capability_error("roof of the average Schmidt rank is not the Schmidt number; use schmidt_number");
  if (!is_convex_roof_measure(measure.kind))
    throw capability_error(to_string(measure) + " is computed directly on mixed states, not by a roof");
  if (rho.signature.subsystems() != 2)
    throw validation_error("bipartite_signature", "apply a cut first");
  Objective objective;
  objective.measure = &measure;
  objective.d_left = rho.signature.dims[0];
  objective.d_right = rho.signature.dims[1];
  return optimize(rho, objective, opts);
}

RoofResult roof_value(const DensityMatrix& rho,
                      const std::function<double(const ComplexVector&)>& pure_value,
                      const RoofOptions& opts) {
  Objective objective;
  objective.pure_value = pure_value;
  return optimize(rho, objective, opts);
}

SchmidtNumberBounds schmidt_number(const DensityMatrix& rho, const RoofOptions& opts) {
  if (rho.signature.subsystems() != 2)
    throw validation_error("bipartite_signature", "apply a cut first");
  const Eigen::Index d_left = rho.signature.dims[0];
  const Eigen::Index d_right = rho.signature.dims[1];
  const int d_min = static_cast<int>(std::min(d_left, d_right));

  const Ensemble base = eig_ensemble(rho);
  const Eigen::Index r = static_cast<Eigen::Index>(base.states.size());
  if (r > opts.max_rank)
    throw capability_error("numerical rank " + std::to_string(r) + " exceeds the supported cap of " +
                           std::to_string(opts.max_rank));

  SchmidtNumberBounds bounds;
  if (r == 1) {
    const int rank = schmidt_rank(base.states[0]);
    bounds.lower = bounds.upper = rank;
    return bounds;
  }

  const RealVector pt_spectrum = eigvals_hermitian(partial_transpose(rho, 0));
  bounds.lower = pt_spectrum(pt_spectrum.size() - 1) < -kRankTol ? 2 : 1;

  auto tail_weight = [&](const ComplexVector& unit, int k) {
    ComplexMatrix m(d_left, d_right);
    for (Eigen::Index a = 0; a < d_left; ++a)
      for (Eigen::Index b = 0; b < d_right; ++b) m(a, b) = unit(a * d_right + b);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m * m.adjoint(), Eigen::EigenvaluesOnly);
    const RealVector spectrum = solver.eigenvalues().reverse();
    double tail = 0;
    for (Eigen::Index i = k; i < spectrum.size(); ++i) tail += std::max(spectrum(i), 0.0);
    return tail;
  };

  bounds.upper = d_min;
  for (int k = bounds.lower; k <= d_min; ++k) {
    if (k == d_min) {
      bounds.upper = k;
      break;
    }
    const RoofResult attempt = roof_value(
        rho,
        std::function<double(const ComplexVector&)>(
            [&](const ComplexVector& unit) { return tail_weight(unit, k); }),
        opts);
    bool all_within = true;
    for (const PureState& member : attempt.best_ensemble.states)
      if (tail_weight(member.amplitudes, k) > kRankTol) {
        all_within = false;
        break;
      }
    if (all_within) {
      bounds.upper = k;
      break;
    }
  }
  bounds.lower = std::min(bounds.lower, bounds.upper);
  return bounds;
}

}  // namespace mlab
