#pragma once

// Pure-state entanglement quantities, their reduced functions on spectra,
// and the negativity family, which is computed directly on mixed states.

#include <optional>
#include <string>

#include "mlab/states.hpp"

namespace mlab {

enum class MeasureKind {
  EK,                     // Σ_{i>=k} λ_i², k >= 2
  E2Raw,                  // 1 - λ1² = 1 - ‖ρ^A‖
  E2Norm,                 // d/(d-1) · E2Raw, d = declared reduced dimension
  EMin,                   // λ_min² (smallest positive), 0 at product states
  EMinReinforced,         // EMin · Schmidt rank
  Tangle,                 // 2(1 - Σ δ_i²)
  Concurrence,            // √tangle
  Negativity,             // tr of the negative part of ρ^{T_A}
  PartialNegativity,      // operator norm of that negative part
  LogPartialNegativity,   // log2(N̂ + 1)
  SchmidtRank,
};

struct Measure {
  MeasureKind kind = MeasureKind::E2Norm;
  int k = 2;  // E_K order

  static Measure ek(int order) { return Measure{MeasureKind::EK, order}; }
  static Measure of(MeasureKind kind) { return Measure{kind, 2}; }
  bool operator==(const Measure&) const = default;
};

Measure parse_measure(const std::string& token);
std::string to_string(const Measure& m);

/// Measures extended to mixed states by the convex roof (rather than computed
/// directly from the partial transpose or rank structure).
bool is_convex_roof_measure(MeasureKind kind);
/// Zero exactly on separable states (E_K with k >= 3 is the exception).
bool is_faithful(const Measure& m);

enum class ReducedFunction { E2, E2Norm, Min, MinReinforced, Tangle, Neg, Hat };

ReducedFunction parse_reduced_function(const std::string& token);
std::string to_string(ReducedFunction h);
std::optional<ReducedFunction> reduced_function_of(const Measure& m);

// Pure-state operations. All require a bipartite signature; cut multipartite
// states first.
double e_k(const PureState& psi, int k);
double e2_raw(const PureState& psi);
/// Normalized to [0,1] by d/(d-1); d defaults to the declared reduced
/// subsystem (the first factor), configurable per call.
double e2_normalized(const PureState& psi, std::optional<int> d = std::nullopt);
double e_min(const PureState& psi);
double e_min_reinforced(const PureState& psi);
double tangle(const PureState& psi);
double concurrence(const PureState& psi);
int schmidt_rank(const PureState& psi);

// Negativity family on (possibly mixed) bipartite states.
double negativity(const DensityMatrix& rho);
double partial_negativity(const DensityMatrix& rho);
double log_partial_negativity(const DensityMatrix& rho);

/// Evaluate a reduced function h on a descending probability vector;
/// `ambient_dim` feeds the d/(d-1) normalization (and must be >= the vector
/// length). On every pure state, measure(ψ) equals its reduced function
/// evaluated on the Schmidt spectrum.
double reduced_function(ReducedFunction h, const RealVector& spectrum, int ambient_dim);

/// Uniform pure-state evaluation used by the roof optimizer and the monogamy
/// checker. Negativity-family measures use their Schmidt-spectrum closed
/// forms here (equal to the partial-transpose definitions on pure states).
double measure_pure(const Measure& m, const PureState& psi);

/// Same, on a full descending reduced spectrum (zeros included) with the
/// declared reduced dimension. This is the optimizer's hot path.
double measure_on_spectrum(const Measure& m, const RealVector& spectrum, int d_reduced);

}  // namespace mlab
