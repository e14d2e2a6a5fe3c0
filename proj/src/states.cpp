#include "mlab/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace mlab {

namespace {

// Flat offsets of a subsystem subset: entry k is the contribution to the
// global row-major index when the subset's own row-major index equals k.
std::vector<Eigen::Index> subset_offsets(const std::vector<int>& dims,
                                         const std::vector<int>& subset) {
  std::vector<Eigen::Index> strides(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i)
    strides[i] = strides[i + 1] * dims[i + 1];

  Eigen::Index size = 1;
  for (int s : subset) size *= dims[s];

  std::vector<Eigen::Index> offsets(size, 0);
  for (Eigen::Index flat = 0; flat < size; ++flat) {
    Eigen::Index rem = flat;
    Eigen::Index off = 0;
    for (int i = static_cast<int>(subset.size()) - 1; i >= 0; --i) {
      const int s = subset[i];
      off += (rem % dims[s]) * strides[s];
      rem /= dims[s];
    }
    offsets[flat] = off;
  }
  return offsets;
}

void check_subset(const DimSignature& sig, const std::vector<int>& subset) {
  if (subset.empty()) throw validation_error("subsystem_index", "empty subset");
  for (size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || subset[i] >= sig.subsystems())
      throw validation_error("subsystem_index");
    if (i > 0 && subset[i] <= subset[i - 1])
      throw validation_error("subsystem_index", "must be strictly increasing");
  }
}

std::vector<int> complement_of(const DimSignature& sig, const std::vector<int>& subset) {
  std::vector<int> rest;
  for (int s = 0; s < sig.subsystems(); ++s)
    if (std::find(subset.begin(), subset.end(), s) == subset.end()) rest.push_back(s);
  return rest;
}

void fix_global_phase(ComplexVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > 1e-14) {
      v *= std::conj(v(i)) / mag;
      return;
    }
  }
}

}  // namespace

Eigen::Index DimSignature::total() const {
  Eigen::Index n = 1;
  for (int d : dims) n *= d;
  return n;
}

std::string to_string(const DimSignature& sig) {
  std::string out;
  for (size_t i = 0; i < sig.dims.size(); ++i) {
    if (i) out += "x";
    out += std::to_string(sig.dims[i]);
  }
  return out;
}

void validate_signature(const DimSignature& sig) {
  if (sig.dims.empty()) throw validation_error("dims", "no subsystems");
  for (int d : sig.dims)
    if (d < 2) throw validation_error("dims", "subsystem dimension below 2");
  // desk-scale envelope: up to three subsystems, modest total dimension
  if (sig.subsystems() > 3)
    throw capability_error("at most three subsystems are supported");
  if (sig.total() > 4096)
    throw capability_error("total dimension exceeds the supported desk scale");
}

PureState make_pure(ComplexVector amplitudes, DimSignature signature) {
  validate_signature(signature);
  if (amplitudes.size() != signature.total()) throw validation_error("dims_product");
  if (!amplitudes.allFinite()) throw validation_error("finite_entries");
  if (std::abs(amplitudes.norm() - 1.0) > kNormTol) throw validation_error("normalized");
  return PureState{std::move(amplitudes), std::move(signature)};
}

DensityMatrix make_density(ComplexMatrix matrix, DimSignature signature) {
  validate_signature(signature);
  if (matrix.rows() != signature.total() || matrix.cols() != signature.total())
    throw validation_error("dims_product");
  if (!matrix.allFinite()) throw validation_error("finite_entries");
  if (!is_hermitian(matrix)) throw validation_error("hermitian");
  if (std::abs(matrix.trace().real() - 1.0) > kNormTol) throw validation_error("unit_trace");
  const RealVector w = eigvals_hermitian(matrix);
  if (w(w.size() - 1) < -kPsdTol) throw validation_error("psd");
  return DensityMatrix{std::move(matrix), std::move(signature)};
}

DensityMatrix density_of(const PureState& psi) {
  DensityMatrix rho;
  rho.matrix = psi.amplitudes * psi.amplitudes.adjoint();
  rho.signature = psi.signature;
  return rho;
}

Cut parse_cut(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos || bar == 0 || bar + 1 == text.size())
    throw validation_error("cut", "expected '<left>|<right>' like A|BC");
  Cut cut;
  auto push = [](std::vector<int>& side, char c) {
    if (c < 'A' || c > 'C') throw validation_error("cut", "subsystems are A, B, C");
    side.push_back(c - 'A');
  };
  for (size_t i = 0; i < bar; ++i) push(cut.left, text[i]);
  for (size_t i = bar + 1; i < text.size(); ++i) push(cut.right, text[i]);
  std::vector<int> all = cut.left;
  all.insert(all.end(), cut.right.begin(), cut.right.end());
  std::sort(all.begin(), all.end());
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i)) throw validation_error("cut", "sides must partition the subsystems");
  return cut;
}

std::string to_string(const Cut& cut) {
  std::string out;
  for (int s : cut.left) out += static_cast<char>('A' + s);
  out += '|';
  for (int s : cut.right) out += static_cast<char>('A' + s);
  return out;
}

namespace {

void check_cut(const DimSignature& sig, const Cut& cut) {
  std::vector<int> all = cut.left;
  all.insert(all.end(), cut.right.begin(), cut.right.end());
  std::sort(all.begin(), all.end());
  if (static_cast<int>(all.size()) != sig.subsystems())
    throw validation_error("cut", "cut does not match the signature");
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i)) throw validation_error("cut", "cut does not partition the subsystems");
  if (cut.left.empty() || cut.right.empty()) throw validation_error("cut", "empty side");
}

}  // namespace

PureState apply_cut(const PureState& psi, const Cut& cut) {
  check_cut(psi.signature, cut);
  const auto& dims = psi.signature.dims;
  const auto left = subset_offsets(dims, cut.left);
  const auto right = subset_offsets(dims, cut.right);
  const Eigen::Index dl = static_cast<Eigen::Index>(left.size());
  const Eigen::Index dr = static_cast<Eigen::Index>(right.size());
  ComplexVector out(dl * dr);
  for (Eigen::Index l = 0; l < dl; ++l)
    for (Eigen::Index r = 0; r < dr; ++r) out(l * dr + r) = psi.amplitudes(left[l] + right[r]);
  PureState result;
  result.amplitudes = std::move(out);
  result.signature.dims = {static_cast<int>(dl), static_cast<int>(dr)};
  return result;
}

DensityMatrix apply_cut(const DensityMatrix& rho, const Cut& cut) {
  check_cut(rho.signature, cut);
  const auto& dims = rho.signature.dims;
  const auto left = subset_offsets(dims, cut.left);
  const auto right = subset_offsets(dims, cut.right);
  const Eigen::Index dl = static_cast<Eigen::Index>(left.size());
  const Eigen::Index dr = static_cast<Eigen::Index>(right.size());
  std::vector<Eigen::Index> perm(dl * dr);
  for (Eigen::Index l = 0; l < dl; ++l)
    for (Eigen::Index r = 0; r < dr; ++r) perm[l * dr + r] = left[l] + right[r];
  ComplexMatrix out(dl * dr, dl * dr);
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j) out(i, j) = rho.matrix(perm[i], perm[j]);
  DensityMatrix result;
  result.matrix = std::move(out);
  result.signature.dims = {static_cast<int>(dl), static_cast<int>(dr)};
  return result;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  check_subset(rho.signature, keep);
  const auto& dims = rho.signature.dims;
  const auto rest = complement_of(rho.signature, keep);
  const auto kept = subset_offsets(dims, keep);
  const auto traced = subset_offsets(dims, rest);
  const Eigen::Index dk = static_cast<Eigen::Index>(kept.size());
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i)
    for (Eigen::Index j = 0; j < dk; ++j) {
      Complex sum = 0;
      for (const Eigen::Index t : traced) sum += rho.matrix(kept[i] + t, kept[j] + t);
      out(i, j) = sum;
    }
  DensityMatrix result;
  result.matrix = std::move(out);
  for (int s : keep) result.signature.dims.push_back(dims[s]);
  return result;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, int sys) {
  if (rho.signature.subsystems() != 2)
    throw validation_error("bipartite_signature", "apply a cut first");
  if (sys != 0 && sys != 1) throw validation_error("subsystem_index");
  const Eigen::Index da = rho.signature.dims[0];
  const Eigen::Index db = rho.signature.dims[1];
  ComplexMatrix out(da * db, da * db);
  for (Eigen::Index a1 = 0; a1 < da; ++a1)
    for (Eigen::Index b1 = 0; b1 < db; ++b1)
      for (Eigen::Index a2 = 0; a2 < da; ++a2)
        for (Eigen::Index b2 = 0; b2 < db; ++b2) {
          const Eigen::Index row = a1 * db + b1;
          const Eigen::Index col = a2 * db + b2;
          const Eigen::Index prow = sys == 0 ? a2 * db + b1 : a1 * db + b2;
          const Eigen::Index pcol = sys == 0 ? a1 * db + b2 : a2 * db + b1;
          out(prow, pcol) = rho.matrix(row, col);
        }
  return out;
}

SchmidtData schmidt(const PureState& psi) {
  if (psi.signature.subsystems() != 2)
    throw validation_error("bipartite_signature", "declare a cut for multipartite states");
  const Eigen::Index da = psi.signature.dims[0];
  const Eigen::Index db = psi.signature.dims[1];
  ComplexMatrix m(da, db);
  for (Eigen::Index a = 0; a < da; ++a)
    for (Eigen::Index b = 0; b < db; ++b) m(a, b) = psi.amplitudes(a * db + b);
  const SvdResult dec = svd(m);
  int rank = 0;
  for (Eigen::Index i = 0; i < dec.singular.size(); ++i)
    if (dec.singular(i) * dec.singular(i) > kRankTol) ++rank;
  SchmidtData out;
  out.rank = rank;
  out.coefficients = dec.singular.head(rank);
  out.left_basis = dec.left.leftCols(rank);
  // m = U Σ V†, so |ψ⟩ = Σ λ_i |u_i⟩ ⊗ |conj(v_i)⟩.
  out.right_basis = dec.right.leftCols(rank).conjugate();
  return out;
}

RealVector reduced_spectrum(const PureState& psi) {
  if (psi.signature.subsystems() != 2)
    throw validation_error("bipartite_signature", "declare a cut for multipartite states");
  const Eigen::Index da = psi.signature.dims[0];
  const Eigen::Index db = psi.signature.dims[1];
  ComplexMatrix m(da, db);
  for (Eigen::Index a = 0; a < da; ++a)
    for (Eigen::Index b = 0; b < db; ++b) m(a, b) = psi.amplitudes(a * db + b);
  RealVector w = eigvals_hermitian(m * m.adjoint());
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = std::max(w(i), 0.0);
  return w;
}

PhiParams phi_from_squares(const std::array<double, 3>& a_sq,
                           const std::array<double, 3>& ap_sq, PhiRegime regime) {
  PhiParams p;
  for (int i = 0; i < 3; ++i) {
    if (a_sq[i] < 0 || ap_sq[i] < 0) throw validation_error("phi_positivity");
    p.a[i] = std::sqrt(a_sq[i]);
    p.a_prime[i] = std::sqrt(ap_sq[i]);
  }
  p.regime = regime;
  validate_phi(p);
  return p;
}

void validate_phi(const PhiParams& p) {
  auto sq_sum = [](const std::array<double, 3>& v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; };
  if (std::abs(sq_sum(p.a) - 1.0) > kNormTol || std::abs(sq_sum(p.a_prime) - 1.0) > kNormTol)
    throw validation_error("phi_normalization");
  for (double v : p.a)
    if (!(v > 0)) throw validation_error("phi_positivity");
  for (double v : p.a_prime)
    if (!(v > 0)) throw validation_error("phi_positivity");
  if (p.regime == PhiRegime::A0Dominant) {
    if (std::abs(p.a[0] * p.a[0] - p.a_prime[0] * p.a_prime[0]) > 1e-12)
      throw validation_error("phi_a0_match", "a0^2 must equal a0'^2");
    if (p.a[0] * p.a[0] < 0.5 - 1e-12)
      throw validation_error("phi_a0_weight", "a0^2 must be at least 1/2");
    if (!(p.a[0] > p.a[1] && p.a[1] >= p.a[2]))
      throw validation_error("phi_ordering", "need a0 > a1 >= a2");
    if (!(p.a_prime[0] > p.a_prime[1] && p.a_prime[1] >= p.a_prime[2]))
      throw validation_error("phi_ordering", "need a0' > a1' >= a2'");
  } else {
    if (std::abs(p.a[0] - p.a_prime[0]) > 1e-12)
      throw validation_error("phi_a0_match", "a0 must equal a0'");
    if (!(p.a[1] >= p.a[2] && p.a[2] > p.a[0]))
      throw validation_error("phi_ordering", "need a1 >= a2 > a0");
    if (!(p.a_prime[1] >= p.a_prime[2] && p.a_prime[2] > p.a_prime[0]))
      throw validation_error("phi_ordering", "need a1' >= a2' > a0'");
  }
  if (std::abs(p.a_prime[1] * p.a[2] - p.a[1] * p.a_prime[2]) <= 1e-12)
    throw validation_error("phi_cross_products", "a1'*a2 must differ from a1*a2'");
}

PureState make_phi(const PhiParams& p) {
  validate_phi(p);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  ComplexVector amps = ComplexVector::Zero(3 * 4 * 2);
  auto at = [&](int ia, int ib, int ic) -> Complex& { return amps((ia * 4 + ib) * 2 + ic); };
  at(0, 0, 0) = p.a[0] * inv_sqrt2;
  at(1, 1, 0) = p.a[1] * inv_sqrt2;
  at(2, 2, 0) = p.a[2] * inv_sqrt2;
  at(0, 3, 1) = p.a_prime[0] * inv_sqrt2;
  at(1, 2, 1) = p.a_prime[1] * inv_sqrt2;
  at(2, 1, 1) = p.a_prime[2] * inv_sqrt2;
  return make_pure(std::move(amps), DimSignature{{3, 4, 2}});
}

PureState make_omega(double l0, double l1, double l2) {
  if (!(l0 >= l1 && l1 >= l2)) throw validation_error("omega_ordering");
  if (!(l2 > 0)) throw validation_error("omega_positivity", "coefficients must be strictly positive");
  if (std::abs(l0 * l0 + l1 * l1 + l2 * l2 - 1.0) > kNormTol)
    throw validation_error("omega_normalization");
  ComplexVector amps = ComplexVector::Zero(3 * 2 * 2);
  auto at = [&](int ia, int ib, int ic) -> Complex& { return amps((ia * 2 + ib) * 2 + ic); };
  at(0, 0, 0) = l0;
  at(1, 1, 0) = l1;
  at(2, 1, 1) = l2;
  return make_pure(std::move(amps), DimSignature{{3, 2, 2}});
}

PureState make_acin(const AcinParams& p) {
  double sum = 0;
  for (double l : p.lambda) {
    if (l < 0) throw validation_error("acin_positivity");
    sum += l * l;
  }
  if (std::abs(sum - 1.0) > kNormTol) throw validation_error("acin_normalization");
  if (p.phase < 0 || p.phase > std::numbers::pi + 1e-12)
    throw validation_error("acin_phase", "phase must lie in [0, pi]");
  ComplexVector amps = ComplexVector::Zero(8);
  auto at = [&](int ia, int ib, int ic) -> Complex& { return amps((ia * 2 + ib) * 2 + ic); };
  at(0, 0, 0) = p.lambda[0];
  at(1, 0, 0) = p.lambda[1] * Complex(std::cos(p.phase), std::sin(p.phase));
  at(1, 0, 1) = p.lambda[2];
  at(1, 1, 0) = p.lambda[3];
  at(1, 1, 1) = p.lambda[4];
  fix_global_phase(amps);
  return make_pure(std::move(amps), DimSignature{{2, 2, 2}});
}

bool acin_genuinely_entangled(const AcinParams& p) {
  const auto& l = p.lambda;
  return l[0] > 0 && (l[2] * l[2] + l[4] * l[4]) > 0 && (l[3] * l[3] + l[4] * l[4]) > 0;
}

bool acin_rho_ab_separable(const AcinParams& p) { return p.lambda[3] * p.lambda[3] <= kRankTol; }

bool acin_rho_ac_separable(const AcinParams& p) { return p.lambda[2] * p.lambda[2] <= kRankTol; }

PureState make_w() {
  ComplexVector amps = ComplexVector::Zero(8);
  const double c = 1.0 / std::sqrt(3.0);
  amps(0b100) = c;
  amps(0b010) = c;
  amps(0b001) = c;
  return make_pure(std::move(amps), DimSignature{{2, 2, 2}});
}

PureState make_bell() {
  ComplexVector amps = ComplexVector::Zero(4);
  amps(0) = 1.0 / std::numbers::sqrt2;
  amps(3) = 1.0 / std::numbers::sqrt2;
  return make_pure(std::move(amps), DimSignature{{2, 2}});
}

PureState make_max_entangled(int d) {
  if (d < 2) throw validation_error("dims");
  ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
  const double c = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) amps(i * d + i) = c;
  return make_pure(std::move(amps), DimSignature{{d, d}});
}

PureState pure_from_schmidt(const RealVector& coeffs, int d_a, int d_b) {
  if (d_a < 2 || d_b < 2) throw validation_error("dims");
  if (coeffs.size() > std::min(d_a, d_b))
    throw validation_error("coefficient_count", "more coefficients than min(d_A, d_B)");
  RealVector sorted = coeffs;
  for (Eigen::Index i = 0; i < sorted.size(); ++i)
    if (sorted(i) < 0) throw validation_error("coefficient_order", "coefficients must be nonnegative");
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (std::abs(sorted.squaredNorm() - 1.0) > kNormTol)
    throw validation_error("coefficient_normalization");
  ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(d_a) * d_b);
  for (Eigen::Index i = 0; i < sorted.size(); ++i) amps(i * d_b + i) = sorted(i);
  return make_pure(std::move(amps), DimSignature{{d_a, d_b}});
}

PureState random_pure_state(const DimSignature& sig, Rng& rng) {
  validate_signature(sig);
  ComplexVector v = random_unit_vector(sig.total(), rng);
  fix_global_phase(v);
  return PureState{std::move(v), sig};
}

DensityMatrix random_density_state(const DimSignature& sig, Rng& rng) {
  validate_signature(sig);
  return DensityMatrix{random_density(sig.total(), rng), sig};
}

}  // namespace mlab
