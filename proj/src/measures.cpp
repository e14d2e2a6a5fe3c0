#include "mlab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace mlab {

namespace {

int rank_of(const RealVector& spectrum) {
  int rank = 0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i)
    if (spectrum(i) > kRankTol) ++rank;
  return rank;
}

double smallest_positive(const RealVector& spectrum) {
  for (Eigen::Index i = spectrum.size() - 1; i >= 0; --i)
    if (spectrum(i) > kRankTol) return spectrum(i);
  throw validation_error("probability_sum", "spectrum vanishes");
}

void check_probability_vector(const RealVector& spectrum) {
  if (spectrum.size() == 0) throw validation_error("probability_vector", "empty");
  double sum = 0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    if (spectrum(i) < -kRankTol) throw validation_error("probability_vector", "negative entry");
    if (i > 0 && spectrum(i) > spectrum(i - 1) + 1e-12)
      throw validation_error("probability_vector", "not descending");
    sum += spectrum(i);
  }
  if (std::abs(sum - 1.0) > kProbSumTol) throw validation_error("probability_sum");
}

const std::map<std::string, MeasureKind>& measure_tokens() {
  static const std::map<std::string, MeasureKind> tokens = {
      {"E2_RAW", MeasureKind::E2Raw},
      {"E2_NORM", MeasureKind::E2Norm},
      {"E_MIN", MeasureKind::EMin},
      {"E_MIN_REINFORCED", MeasureKind::EMinReinforced},
      {"TANGLE", MeasureKind::Tangle},
      {"CONCURRENCE", MeasureKind::Concurrence},
      {"NEGATIVITY", MeasureKind::Negativity},
      {"PARTIAL_NEGATIVITY", MeasureKind::PartialNegativity},
      {"LOG_PARTIAL_NEGATIVITY", MeasureKind::LogPartialNegativity},
      {"SCHMIDT_RANK", MeasureKind::SchmidtRank},
      {"SCHMIDT_NUMBER", MeasureKind::SchmidtRank},
  };
  return tokens;
}

}  // namespace

Measure parse_measure(const std::string& token) {
  if (token.rfind("E_K:", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(token.substr(4));
    } catch (const std::exception&) {
      throw validation_error("measure", "E_K order must be an integer");
    }
    if (k < 2) throw validation_error("measure", "E_K requires k >= 2");
    return Measure::ek(k);
  }
  const auto it = measure_tokens().find(token);
  if (it == measure_tokens().end()) throw validation_error("measure", "unknown measure " + token);
  return Measure::of(it->second);
}

std::string to_string(const Measure& m) {
  switch (m.kind) {
    case MeasureKind::EK: return "E_K:" + std::to_string(m.k);
    case MeasureKind::E2Raw: return "E2_RAW";
    case MeasureKind::E2Norm: return "E2_NORM";
    case MeasureKind::EMin: return "E_MIN";
    case MeasureKind::EMinReinforced: return "E_MIN_REINFORCED";
    case MeasureKind::Tangle: return "TANGLE";
    case MeasureKind::Concurrence: return "CONCURRENCE";
    case MeasureKind::Negativity: return "NEGATIVITY";
    case MeasureKind::PartialNegativity: return "PARTIAL_NEGATIVITY";
    case MeasureKind::LogPartialNegativity: return "LOG_PARTIAL_NEGATIVITY";
    case MeasureKind::SchmidtRank: return "SCHMIDT_RANK";
  }
  return "?";
}

bool is_convex_roof_measure(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::EK:
    case MeasureKind::E2Raw:
    case MeasureKind::E2Norm:
    case MeasureKind::EMin:
    case MeasureKind::EMinReinforced:
    case MeasureKind::Tangle:
    case MeasureKind::Concurrence:
      return true;
    default:
      return false;
  }
}

bool is_faithful(const Measure& m) {
  if (m.kind == MeasureKind::EK) return m.k == 2;
  return true;
}

ReducedFunction parse_reduced_function(const std::string& token) {
  static const std::map<std::string, ReducedFunction> tokens = {
      {"h_E2", ReducedFunction::E2},       {"h_E2_NORM", ReducedFunction::E2Norm},
      {"h_MIN", ReducedFunction::Min},     {"h_MIN_REINFORCED", ReducedFunction::MinReinforced},
      {"h_TANGLE", ReducedFunction::Tangle}, {"h_NEG", ReducedFunction::Neg},
      {"h_HAT", ReducedFunction::Hat},
  };
  const auto it = tokens.find(token);
  if (it == tokens.end()) throw validation_error("reduced_function", "unknown function " + token);
  return it->second;
}

std::string to_string(ReducedFunction h) {
  switch (h) {
    case ReducedFunction::E2: return "h_E2";
    case ReducedFunction::E2Norm: return "h_E2_NORM";
    case ReducedFunction::Min: return "h_MIN";
    case ReducedFunction::MinReinforced: return "h_MIN_REINFORCED";
    case ReducedFunction::Tangle: return "h_TANGLE";
    case ReducedFunction::Neg: return "h_NEG";
    case ReducedFunction::Hat: return "h_HAT";
  }
  return "?";
}

std::optional<ReducedFunction> reduced_function_of(const Measure& m) {
  switch (m.kind) {
    case MeasureKind::E2Raw: return ReducedFunction::E2;
    case MeasureKind::E2Norm: return ReducedFunction::E2Norm;
    case MeasureKind::EMin: return ReducedFunction::Min;
    case MeasureKind::EMinReinforced: return ReducedFunction::MinReinforced;
    case MeasureKind::Tangle: return ReducedFunction::Tangle;
    case MeasureKind::Negativity: return ReducedFunction::Neg;
    case MeasureKind::PartialNegativity: return ReducedFunction::Hat;
    default: return std::nullopt;
  }
}

double measure_on_spectrum(const Measure& m, const RealVector& spectrum, int d_reduced) {
  switch (m.kind) {
    case MeasureKind::EK: {
      if (m.k < 2) throw validation_error("measure", "E_K requires k >= 2");
      const int rank = rank_of(spectrum);
      if (m.k > rank) return 0.0;
      double sum = 0;
      for (int i = m.k - 1; i < rank; ++i) sum += spectrum(i);
      return sum;
    }
    case MeasureKind::E2Raw:
      return 1.0 - spectrum(0);
    case MeasureKind::E2Norm: {
      if (d_reduced < 2) throw validation_error("dims", "normalization needs d >= 2");
      return static_cast<double>(d_reduced) / (d_reduced - 1) * (1.0 - spectrum(0));
    }
    case MeasureKind::EMin: {
      const double v = smallest_positive(spectrum);
      return v < 1.0 - kRankTol ? v : 0.0;
    }
    case MeasureKind::EMinReinforced: {
      const double v = smallest_positive(spectrum);
      return v < 1.0 - kRankTol ? v * rank_of(spectrum) : 0.0;
    }
    case MeasureKind::Tangle:
      return 2.0 * std::max(0.0, 1.0 - spectrum.squaredNorm());
    case MeasureKind::Concurrence:
      return std::sqrt(2.0 * std::max(0.0, 1.0 - spectrum.squaredNorm()));
    case MeasureKind::Negativity: {
      // square roots amplify eigenvalue noise, so entries below the numerical
      // rank cutoff are treated as exact zeros
      double root_sum = 0;
      for (Eigen::Index i = 0; i < spectrum.size(); ++i)
        if (spectrum(i) > kRankTol) root_sum += std::sqrt(spectrum(i));
      return std::max(0.0, 0.5 * (root_sum * root_sum - 1.0));
    }
    case MeasureKind::PartialNegativity: {
      const double second =
          spectrum.size() > 1 && spectrum(1) > kRankTol ? spectrum(1) : 0.0;
      return spectrum(0) > kRankTol ? std::sqrt(spectrum(0) * second) : 0.0;
    }
    case MeasureKind::LogPartialNegativity: {
      const double second =
          spectrum.size() > 1 && spectrum(1) > kRankTol ? spectrum(1) : 0.0;
      return std::log2(1.0 + (spectrum(0) > kRankTol ? std::sqrt(spectrum(0) * second) : 0.0));
    }
    case MeasureKind::SchmidtRank:
      return rank_of(spectrum);
  }
  return 0.0;
}

double measure_pure(const Measure& m, const PureState& psi) {
  const RealVector spectrum = reduced_spectrum(psi);
  return measure_on_spectrum(m, spectrum, psi.signature.dims[0]);
}

double e_k(const PureState& psi, int k) {
  if (k < 2) throw validation_error("measure", "E_K requires k >= 2");
  return measure_pure(Measure::ek(k), psi);
}

double e2_raw(const PureState& psi) { return measure_pure(Measure::of(MeasureKind::E2Raw), psi); }

double e2_normalized(const PureState& psi, std::optional<int> d) {
  const RealVector spectrum = reduced_spectrum(psi);
  return measure_on_spectrum(Measure::of(MeasureKind::E2Norm), spectrum,
                             d.value_or(psi.signature.dims[0]));
}

double e_min(const PureState& psi) { return measure_pure(Measure::of(MeasureKind::EMin), psi); }

double e_min_reinforced(const PureState& psi) {
  return measure_pure(Measure::of(MeasureKind::EMinReinforced), psi);
}

double tangle(const PureState& psi) { return measure_pure(Measure::of(MeasureKind::Tangle), psi); }

double concurrence(const PureState& psi) {
  return measure_pure(Measure::of(MeasureKind::Concurrence), psi);
}

int schmidt_rank(const PureState& psi) {
  return static_cast<int>(measure_pure(Measure::of(MeasureKind::SchmidtRank), psi));
}

namespace {

RealVector npt_eigenvalues(const DensityMatrix& rho) {
  return eigvals_hermitian(partial_transpose(rho, 0));
}

}  // namespace

double negativity(const DensityMatrix& rho) {
  const RealVector w = npt_eigenvalues(rho);
  double total = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w(i) < -kNegativeEigTol) total += -w(i);
  return total;
}

double partial_negativity(const DensityMatrix& rho) {
  const RealVector w = npt_eigenvalues(rho);
  const double most_negative = w(w.size() - 1);
  return most_negative < -kNegativeEigTol ? -most_negative : 0.0;
}

double log_partial_negativity(const DensityMatrix& rho) {
  return std::log2(1.0 + partial_negativity(rho));
}

double reduced_function(ReducedFunction h, const RealVector& spectrum, int ambient_dim) {
  check_probability_vector(spectrum);
  if (ambient_dim < spectrum.size())
    throw validation_error("dims", "ambient dimension below spectrum length");
  switch (h) {
    case ReducedFunction::E2:
      return measure_on_spectrum(Measure::of(MeasureKind::E2Raw), spectrum, ambient_dim);
    case ReducedFunction::E2Norm:
      return measure_on_spectrum(Measure::of(MeasureKind::E2Norm), spectrum, ambient_dim);
    case ReducedFunction::Min:
      return measure_on_spectrum(Measure::of(MeasureKind::EMin), spectrum, ambient_dim);
    case ReducedFunction::MinReinforced:
      return measure_on_spectrum(Measure::of(MeasureKind::EMinReinforced), spectrum, ambient_dim);
    case ReducedFunction::Tangle:
      return measure_on_spectrum(Measure::of(MeasureKind::Tangle), spectrum, ambient_dim);
    case ReducedFunction::Neg:
      return measure_on_spectrum(Measure::of(MeasureKind::Negativity), spectrum, ambient_dim);
    case ReducedFunction::Hat:
      return measure_on_spectrum(Measure::of(MeasureKind::PartialNegativity), spectrum, ambient_dim);
  }
  throw validation_error("reduced_function");
}

}  // namespace mlab
