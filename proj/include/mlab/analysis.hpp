#pragma once

// Monogamy checking, concavity / strict-concavity scans, mixing-monotonicity
// checks, upper-bound verification, figure-family tables, and the coherence
// measure induced by a reduced function.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlab/roof.hpp"

namespace mlab {

inline constexpr double kGapTol = 1e-6;
inline constexpr double kWitnessFloor = 1e-6;
inline constexpr double kConcavityDeficitTol = 1e-9;
inline constexpr double kEqualityTol = 1e-12;

enum class MonogamyVerdict { ViolationWitness, Consistent, Inconclusive };

std::string to_string(MonogamyVerdict verdict);

struct MonogamyReport {
  Measure measure;
  double e_a_bc = 0.0;
  double e_ab = 0.0;   // roof upper bound for convex-roof measures, direct otherwise
  double e_ac = 0.0;   // certified entanglement witness value for the AC cut
  std::string e_ac_method;                 // "npt_proxy" | "direct" | "schmidt_number"
  std::optional<double> e_ac_roof_upper;   // informational, convex-roof measures only
  double disentangling_gap = 0.0;          // |e_a_bc - e_ab|
  MonogamyVerdict verdict = MonogamyVerdict::Inconclusive;
  double gap_tol = kGapTol;
  double witness_floor = kWitnessFloor;
};

struct MonogamyOptions {
  RoofOptions roof;
  double gap_tol = kGapTol;
  double witness_floor = kWitnessFloor;
};

/// Check the disentangling condition E(A|BC) = E(AB) and, when it holds,
/// whether the AC cut still carries certified entanglement. The verdict is
/// VIOLATION_WITNESS only with a closed gap and a witness above the floor;
/// an open gap is INCONCLUSIVE (the checker never certifies monogamy).
MonogamyReport monogamy_check(const PureState& tripartite, const Measure& measure,
                              const MonogamyOptions& opts = {});

/// Minimum eigenvalue of ρ^{T_A}; values below -1e-9 certify entanglement.
double npt_witness(const DensityMatrix& rho);

enum class StrictnessVerdict { StrictCandidate, NonStrictWitnessed, ConcavityViolated };

std::string to_string(StrictnessVerdict verdict);

struct ConcavitySample {
  RealVector x, y;
  double t = 0.0;
  double deficit = 0.0;
};

struct ConcavityReport {
  ReducedFunction function;
  int dim = 0;
  int samples = 0;
  std::vector<ConcavitySample> violations;
  long equality_count = 0;
  std::vector<ConcavitySample> equality_exemplars;  // capped at a few entries
  bool witness_pair_included = false;
  bool witness_pair_equality = false;
  StrictnessVerdict strict = StrictnessVerdict::StrictCandidate;
};

/// Sample spectrum pairs and mixing weights on the simplex and test
/// h(t·x + (1-t)·y) >= t·h(x) + (1-t)·h(y). For h_HAT at dim >= 3 the fixed
/// equality witness pair (1/3,1/3,1/3) vs (1/2,1/2,0) at t = 1/2 is always
/// included. An exact-equality witness requires deficit <= 1e-12 at genuine
/// separation (t(1-t)·‖x-y‖∞² >= 1e-6), which keeps near-identical random
/// pairs from masquerading as flat directions.
ConcavityReport concavity_scan(ReducedFunction h, int dim, int samples, std::uint64_t seed);

/// Flag-register LOCC comparison: embeds ψ, φ into √t ψ|0⟩ + √(1-t) φ|1⟩ and
/// checks E(Ψ, A|BC) >= t·E(ψ) + (1-t)·E(φ) - 1e-9.
bool mixing_monotonicity_check(const PureState& psi, const PureState& phi, double t,
                               const Measure& measure);

struct BoundsReport {
  double bound = 0.0;
  double roof_upper = 0.0;
  std::optional<double> analytic_roof;
  bool ok = false;
};

/// Spectral upper bounds: E2_NORM ≤ d/(d-1)·min{1-‖ρ^A‖, 1-‖ρ^B‖},
/// E_MIN ≤ min{‖ρ^A‖_min, ‖ρ^B‖_min}, E_MIN_REINFORCED ≤ min{r_A·, r_B·}.
/// `ok` asserts analytic_roof ≤ bound + 1e-9 when an analytic roof is known.
BoundsReport bounds_check(const DensityMatrix& rho, const Measure& measure,
                          const RoofOptions& opts = {},
                          std::optional<double> analytic_roof = std::nullopt);

/// Coherence induced by a reduced function in {h_E2, h_MIN, h_MIN_REINFORCED}
/// under the computational reference basis: h on the sorted |amplitude|²
/// vector for pure states, convex roof for mixed ones.
double coherence_ch(const PureState& psi, ReducedFunction h);
double coherence_ch(const DensityMatrix& rho, ReducedFunction h, const RoofOptions& opts = {});

struct FigureRow {
  double param1 = 0.0;
  double param2 = 0.0;
  double e2_norm = 0.0;
  double e_min = 0.0;
  double e_min_reinforced = 0.0;
  double tangle = 0.0;
  double partial_negativity = 0.0;
};

/// 3⊗3 family with Schmidt coefficients (√(2/3-t), √(1/3), √t), t ∈ [0, 1/3].
FigureRow figure_point_fig1(double t);
/// 3⊗3 family with Schmidt coefficients (√p, √q, √(1-p-q)), p >= q > 0, p+q <= 1.
FigureRow figure_point_fig2(double p, double q);
std::vector<FigureRow> figure_scan_fig1(int resolution);
std::vector<FigureRow> figure_scan_fig2(int resolution);

struct AcinProbeResult {
  MonogamyReport report;
  bool gap_closed = false;
  bool condition_set_holds = false;  // (λ2=λ4=0) or (λ1=0 and λ0<=λ3), meaningful when gap_closed
};

/// Run the E2 monogamy check on a three-qubit canonical-form state and, when
/// the disentangling gap closes, verify the closed-form condition set.
AcinProbeResult acin_disentangling_probe(const AcinParams& params,
                                         const MonogamyOptions& opts = {});

struct CorpusEntry {
  std::string name;
  DensityMatrix state;
  std::optional<double> analytic_e2_norm;
  std::optional<double> analytic_e_min;
  std::optional<double> analytic_e_min_reinforced;

  std::optional<double> analytic_roof(const Measure& measure) const;
};

/// Fixture states with known analytic roofs (pure states, the rank-2 mixed
/// reduction of the 3⊗4⊗2 family for E2, separable fixtures) plus a few
/// states carried for information only.
std::vector<CorpusEntry> bounds_corpus();

}  // namespace mlab
