#pragma once

// Convex-roof extension of pure-state measures via optimization over
// isometry-parameterized ensembles, plus Schmidt-number bounds.
//
// The optimizer returns a certified upper bound on the true roof: the value
// is attained by the reported ensemble. Restarts derive their generators from
// (seed, ensemble size, restart index), so results are deterministic and
// independent of evaluation order.

#include <cstdint>
#include <functional>
#include <vector>

#include "mlab/measures.hpp"

namespace mlab {

struct Ensemble {
  RealVector probabilities;      // positive, sum 1
  std::vector<PureState> states; // shared signature
};

DensityMatrix ensemble_density(const Ensemble& ensemble);

struct RoofOptions {
  std::vector<int> ensemble_sizes;  // empty → {r, r+1, …, 2r}
  int restarts = 32;
  std::uint64_t seed = 42;
  double tol = 1e-8;       // relative improvement threshold per window
  int max_iterations = 2000;
  int max_rank = 8;        // desk scale; larger ranks are rejected
};

struct RoofResult {
  double value = 0.0;
  Ensemble best_ensemble;
  int restarts_used = 0;
  bool converged = false;  // improvement fell below tol over the final window
};

/// Spectral decomposition restricted to the numerical rank; the canonical
/// seed ensemble for the optimizer.
Ensemble eig_ensemble(const DensityMatrix& rho);

/// Mix an ensemble through an m×r isometry (orthonormal columns):
/// √q_k |φ_k⟩ = Σ_j V_{kj} √p_j |ψ_j⟩. Members with q_k < 1e-12 are dropped;
/// the reconstructed density matrix is unchanged.
Ensemble apply_isometry(const Ensemble& base, const ComplexMatrix& v);

RoofResult roof_value(const DensityMatrix& rho, const Measure& measure,
                      const RoofOptions& opts = {});

/// Generic roof over an arbitrary pure-state functional (value on a unit
/// amplitude vector). Used for the induced coherence measure.
RoofResult roof_value(const DensityMatrix& rho,
                      const std::function<double(const ComplexVector&)>& pure_value,
                      const RoofOptions& opts = {});

struct SchmidtNumberBounds {
  int lower = 1;  // 2 when the partial transpose certifies entanglement
  int upper = 1;  // smallest k admitting an ensemble of Schmidt-rank-<=k members
};

SchmidtNumberBounds schmidt_number(const DensityMatrix& rho, const RoofOptions& opts = {});

}  // namespace mlab
