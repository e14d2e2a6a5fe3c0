#pragma once

// Quantum state types, subsystem algebra (partial trace / transpose / cuts),
// Schmidt decomposition, and factories for the named state families.
//
// Subsystem ordering is fixed as A,B,C with row-major flattening:
// basis index = ((i_A * d_B) + i_B) * d_C + i_C. All factories comply.

#include <array>
#include <string>
#include <vector>

#include "mlab/numkit.hpp"
#include "mlab/types.hpp"

namespace mlab {

struct DimSignature {
  std::vector<int> dims;  // one entry per subsystem, each >= 2

  Eigen::Index total() const;
  int subsystems() const { return static_cast<int>(dims.size()); }
  bool operator==(const DimSignature&) const = default;
};

std::string to_string(const DimSignature& sig);
void validate_signature(const DimSignature& sig);

struct PureState {
  ComplexVector amplitudes;
  DimSignature signature;
};

struct DensityMatrix {
  ComplexMatrix matrix;
  DimSignature signature;
};

/// Validating constructors; they report the first violated invariant by name.
PureState make_pure(ComplexVector amplitudes, DimSignature signature);
DensityMatrix make_density(ComplexMatrix matrix, DimSignature signature);
DensityMatrix density_of(const PureState& psi);

struct SchmidtData {
  RealVector coefficients;    // descending, entries with λ² > kRankTol
  int rank = 0;               // count of coefficients kept
  ComplexMatrix left_basis;   // d_A × rank
  ComplexMatrix right_basis;  // d_B × rank
};

/// Bipartition of a multi-subsystem state; `left` lists the subsystem indices
/// that form the declared reduced side. Parsed from "A|BC"-style descriptors.
struct Cut {
  std::vector<int> left;
  std::vector<int> right;
};

Cut parse_cut(const std::string& text);
std::string to_string(const Cut& cut);

/// Coarse-grain to a bipartite state whose first factor collects the cut's
/// left subsystems (in the order listed) and whose second collects the right.
PureState apply_cut(const PureState& psi, const Cut& cut);
DensityMatrix apply_cut(const DensityMatrix& rho, const Cut& cut);

/// Trace out every subsystem not in `keep` (indices into the signature,
/// strictly increasing). The result keeps the original subsystem order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Transpose the indices of one subsystem of a bipartite state. The result is
/// Hermitian with trace 1 but generally not positive.
ComplexMatrix partial_transpose(const DensityMatrix& rho, int sys = 0);

/// Schmidt decomposition of a bipartite pure state. Tripartite inputs must be
/// cut first (apply_cut), otherwise this throws.
SchmidtData schmidt(const PureState& psi);

/// Squared Schmidt coefficients, descending, full length d_A (zeros included).
RealVector reduced_spectrum(const PureState& psi);

// ---------------------------------------------------------------------------
// State families.

enum class PhiRegime {
  A0Dominant,  // a0² = a0'² >= 1/2, a0 > a1 >= a2 > 0 (and primed alike)
  A0Minimal,   // a0 = a0', a1 >= a2 > a0 > 0 (and primed alike)
};

struct PhiParams {
  std::array<double, 3> a;        // coefficients of ψ0 (positive reals)
  std::array<double, 3> a_prime;  // coefficients of ψ1
  PhiRegime regime = PhiRegime::A0Dominant;
};

PhiParams phi_from_squares(const std::array<double, 3>& a_sq,
                           const std::array<double, 3>& a_prime_sq,
                           PhiRegime regime = PhiRegime::A0Dominant);
void validate_phi(const PhiParams& params);

/// (|ψ0⟩|0⟩ + |ψ1⟩|1⟩)/√2 on 3⊗4⊗2 with ψ0 = Σ a_i |i⟩|i⟩ and
/// ψ1 = a0'|0⟩|3⟩ + a1'|1⟩|2⟩ + a2'|2⟩|1⟩. B has four levels because ψ1 uses
/// B-levels {1,2,3}.
PureState make_phi(const PhiParams& params);

/// λ0|0⟩|00⟩ + λ1|1⟩|10⟩ + λ2|2⟩|11⟩ on 3⊗2⊗2, λ0 >= λ1 >= λ2 > 0.
PureState make_omega(double l0, double l1, double l2);

struct AcinParams {
  std::array<double, 5> lambda{};  // all >= 0, squares summing to 1
  double phase = 0.0;              // in [0, π]
};

/// Three-qubit canonical form λ0|000⟩ + λ1 e^{iφ}|100⟩ + λ2|101⟩ + λ3|110⟩ + λ4|111⟩.
PureState make_acin(const AcinParams& params);
bool acin_genuinely_entangled(const AcinParams& params);
bool acin_rho_ab_separable(const AcinParams& params);
bool acin_rho_ac_separable(const AcinParams& params);

PureState make_w();
PureState make_bell();
PureState make_max_entangled(int d);
/// Canonical embedding Σ c_i |i⟩|i⟩ (coefficients sorted descending first).
PureState pure_from_schmidt(const RealVector& coeffs, int d_a, int d_b);

PureState random_pure_state(const DimSignature& sig, Rng& rng);
DensityMatrix random_density_state(const DimSignature& sig, Rng& rng);

}  // namespace mlab
