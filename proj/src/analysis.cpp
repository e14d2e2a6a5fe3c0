#include "mlab/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace mlab {

namespace {

constexpr size_t kEqualityExemplarCap = 8;

Cut cut_a_bc() { return Cut{{0}, {1, 2}}; }

}  // namespace

std::string to_string(MonogamyVerdict verdict) {
  switch (verdict) {
    case MonogamyVerdict::ViolationWitness: return "VIOLATION_WITNESS";
    case MonogamyVerdict::Consistent: return "CONSISTENT";
    case MonogamyVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_string(StrictnessVerdict verdict) {
  switch (verdict) {
    case StrictnessVerdict::StrictCandidate: return "STRICT_CANDIDATE";
    case StrictnessVerdict::NonStrictWitnessed: return "NON_STRICT_WITNESSED";
    case StrictnessVerdict::ConcavityViolated: return "CONCAVITY_VIOLATED";
  }
  return "?";
}

double npt_witness(const DensityMatrix& rho) {
  const RealVector w = eigvals_hermitian(partial_transpose(rho, 0));
  return w(w.size() - 1);
}

MonogamyReport monogamy_check(const PureState& tripartite, const Measure& measure,
                              const MonogamyOptions& opts) {
  if (tripartite.signature.subsystems() != 3)
    throw validation_error("tripartite_signature");
  if (measure.kind == MeasureKind::EK && measure.k >= 3)
    throw capability_error("E_K with k >= 3 is not faithful; no certified witness for the AC cut");

  const DensityMatrix rho = density_of(tripartite);
  const DensityMatrix rho_ab = partial_trace(rho, {0, 1});
  const DensityMatrix rho_ac = partial_trace(rho, {0, 2});
  const PureState psi_a_bc = apply_cut(tripartite, cut_a_bc());

  MonogamyReport report;
  report.measure = measure;
  report.gap_tol = opts.gap_tol;
  report.witness_floor = opts.witness_floor;

  switch (measure.kind) {
    case MeasureKind::Negativity:
    case MeasureKind::PartialNegativity:
    case MeasureKind::LogPartialNegativity: {
      auto direct = [&](const DensityMatrix& m) {
        switch (measure.kind) {
          case MeasureKind::Negativity: return negativity(m);
          case MeasureKind::PartialNegativity: return partial_negativity(m);
          default: return log_partial_negativity(m);
        }
      };
      report.e_a_bc = direct(density_of(psi_a_bc));
      report.e_ab = direct(rho_ab);
      report.e_ac = direct(rho_ac);
      report.e_ac_method = "direct";
      break;
    }
    case MeasureKind::SchmidtRank: {
      report.e_a_bc = schmidt_rank(psi_a_bc);
      const SchmidtNumberBounds ab = schmidt_number(rho_ab, opts.roof);
      const SchmidtNumberBounds ac = schmidt_number(rho_ac, opts.roof);
      report.e_ab = ab.upper;
      // Entanglement margin above a separable state; the lower bound is the
      // certified side.
      report.e_ac = ac.lower - 1;
      report.e_ac_method = "schmidt_number";
      if (ab.lower != ab.upper) {
        report.disentangling_gap = std::abs(report.e_a_bc - report.e_ab);
        report.verdict = MonogamyVerdict::Inconclusive;
        return report;
      }
      break;
    }
    default: {
      if (!is_faithful(measure))
        throw capability_error("no certified witness path for " + to_string(measure));
      report.e_a_bc = measure_pure(measure, psi_a_bc);
      report.e_ab = roof_value(rho_ab, measure, opts.roof).value;
      report.e_ac_roof_upper = roof_value(rho_ac, measure, opts.roof).value;
      // A strictly negative partial transpose certifies a nonzero roof for
      // every faithful measure; the optimizer alone could not (it only
      // upper-bounds). Report the partial negativity of the AC cut as the
      // witness value.
      report.e_ac = partial_negativity(rho_ac);
      report.e_ac_method = "npt_proxy";
      break;
    }
  }

  report.disentangling_gap = std::abs(report.e_a_bc - report.e_ab);
  if (report.disentangling_gap <= opts.gap_tol)
    report.verdict = report.e_ac > opts.witness_floor ? MonogamyVerdict::ViolationWitness
                                                      : MonogamyVerdict::Consistent;
  else
    report.verdict = MonogamyVerdict::Inconclusive;
  return report;
}

ConcavityReport concavity_scan(ReducedFunction h, int dim, int samples, std::uint64_t seed) {
  if (dim < 2) throw validation_error("dims");
  if (samples < 1) throw validation_error("samples");

  ConcavityReport report;
  report.function = h;
  report.dim = dim;
  report.samples = samples;

  auto evaluate = [&](const RealVector& x, const RealVector& y, double t) {
    const RealVector mix = t * x + (1.0 - t) * y;
    const double lhs = reduced_function(h, mix, dim);
    const double rhs = t * reduced_function(h, x, dim) + (1.0 - t) * reduced_function(h, y, dim);
    const double deficit = rhs - lhs;
    if (deficit > kConcavityDeficitTol) {
      report.violations.push_back({x, y, t, deficit});
      return;
    }
    const double separation = (x - y).cwiseAbs().maxCoeff();
    if (std::abs(deficit) <= kEqualityTol && t * (1.0 - t) * separation * separation >= 1e-6) {
      ++report.equality_count;
      if (report.equality_exemplars.size() < kEqualityExemplarCap)
        report.equality_exemplars.push_back({x, y, t, deficit});
    }
  };

  if (h == ReducedFunction::Hat && dim >= 3) {
    RealVector x = RealVector::Zero(dim);
    RealVector y = RealVector::Zero(dim);
    x.head(3).setConstant(1.0 / 3.0);
    y(0) = 0.5;
    y(1) = 0.5;
    const double t = 0.5;
    const RealVector mix = t * x + (1.0 - t) * y;
    const double lhs = reduced_function(h, mix, dim);
    const double rhs = t * reduced_function(h, x, dim) + (1.0 - t) * reduced_function(h, y, dim);
    report.witness_pair_included = true;
    report.witness_pair_equality = std::abs(rhs - lhs) <= kEqualityTol;
    evaluate(x, y, t);
  }

  for (int i = 0; i < samples; ++i) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(i));
    const RealVector x = random_simplex_point(dim, rng);
    const RealVector y = random_simplex_point(dim, rng);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double t = uniform(rng);
    evaluate(x, y, t);
  }

  if (!report.violations.empty())
    report.strict = StrictnessVerdict::ConcavityViolated;
  else if (report.equality_count > 0)
    report.strict = StrictnessVerdict::NonStrictWitnessed;
  else
    report.strict = StrictnessVerdict::StrictCandidate;
  return report;
}

bool mixing_monotonicity_check(const PureState& psi, const PureState& phi, double t,
                               const Measure& measure) {
  if (psi.signature.subsystems() != 2 || phi.signature != psi.signature)
    throw validation_error("bipartite_signature", "states must share one bipartite signature");
  if (t < 0.0 || t > 1.0) throw validation_error("mixing_weight");

  const Eigen::Index da = psi.signature.dims[0];
  const Eigen::Index db = psi.signature.dims[1];
  ComplexVector amps = ComplexVector::Zero(da * db * 2);
  const double s = std::sqrt(t);
  const double c = std::sqrt(1.0 - t);
  for (Eigen::Index i = 0; i < da * db; ++i) {
    amps(2 * i) = s * psi.amplitudes(i);
    amps(2 * i + 1) = c * phi.amplitudes(i);
  }
  PureState flagged = make_pure(std::move(amps),
                                DimSignature{{static_cast<int>(da), static_cast<int>(db), 2}});
  const PureState cut = apply_cut(flagged, cut_a_bc());
  const double lhs = measure_pure(measure, cut);
  const double rhs = t * measure_pure(measure, psi) + (1.0 - t) * measure_pure(measure, phi);
  return lhs >= rhs - 1e-9;
}

BoundsReport bounds_check(const DensityMatrix& rho, const Measure& measure,
                          const RoofOptions& opts, std::optional<double> analytic_roof) {
  if (rho.signature.subsystems() != 2)
    throw validation_error("bipartite_signature", "apply a cut first");
  if (measure.kind != MeasureKind::E2Norm && measure.kind != MeasureKind::EMin &&
      measure.kind != MeasureKind::EMinReinforced)
    throw capability_error("bounds are defined for E2_NORM, E_MIN, E_MIN_REINFORCED");

  const DensityMatrix rho_a = partial_trace(rho, {0});
  const DensityMatrix rho_b = partial_trace(rho, {1});

  BoundsReport report;
  switch (measure.kind) {
    case MeasureKind::E2Norm: {
      const int d = rho.signature.dims[0];
      report.bound = static_cast<double>(d) / (d - 1) *
                     std::min(1.0 - operator_norm(rho_a.matrix), 1.0 - operator_norm(rho_b.matrix));
      break;
    }
    case MeasureKind::EMin:
      report.bound = std::min(min_norm(rho_a.matrix), min_norm(rho_b.matrix));
      break;
    default: {
      auto rank = [](const DensityMatrix& m) {
        const RealVector w = eigvals_hermitian(m.matrix);
        int count = 0;
        for (Eigen::Index i = 0; i < w.size(); ++i)
          if (w(i) > kRankTol) ++count;
        return count;
      };
      report.bound = std::min(rank(rho_a) * min_norm(rho_a.matrix),
                              rank(rho_b) * min_norm(rho_b.matrix));
      break;
    }
  }
  report.roof_upper = roof_value(rho, measure, opts).value;
  report.analytic_roof = analytic_roof;
  report.ok = analytic_roof ? (*analytic_roof <= report.bound + 1e-9) : (report.bound >= 0.0);
  return report;
}

namespace {

RealVector sorted_weights(const ComplexVector& amplitudes) {
  RealVector w(amplitudes.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = std::norm(amplitudes(i));
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

void check_coherence_function(ReducedFunction h) {
  if (h != ReducedFunction::E2 && h != ReducedFunction::Min && h != ReducedFunction::MinReinforced)
    throw capability_error("coherence is induced by h_E2, h_MIN, or h_MIN_REINFORCED");
}

}  // namespace

double coherence_ch(const PureState& psi, ReducedFunction h) {
  check_coherence_function(h);
  return reduced_function(h, sorted_weights(psi.amplitudes), static_cast<int>(psi.amplitudes.size()));
}

double coherence_ch(const DensityMatrix& rho, ReducedFunction h, const RoofOptions& opts) {
  check_coherence_function(h);
  const int d = static_cast<int>(rho.matrix.rows());
  return roof_value(rho,
                    std::function<double(const ComplexVector&)>([h, d](const ComplexVector& v) {
                      return reduced_function(h, sorted_weights(v), d);
                    }),
                    opts)
      .value;
}

namespace {

FigureRow figure_row(double p1, double p2, const RealVector& coeffs) {
  const PureState psi = pure_from_schmidt(coeffs, 3, 3);
  FigureRow row;
  row.param1 = p1;
  row.param2 = p2;
  row.e2_norm = e2_normalized(psi);
  row.e_min = e_min(psi);
  row.e_min_reinforced = e_min_reinforced(psi);
  row.tangle = tangle(psi);
  row.partial_negativity = measure_pure(Measure::of(MeasureKind::PartialNegativity), psi);
  return row;
}

}  // namespace

FigureRow figure_point_fig1(double t) {
  if (t < 0.0 || t > 1.0 / 3.0 + 1e-12) throw validation_error("figure_grid", "t must lie in [0, 1/3]");
  RealVector coeffs(3);
  coeffs << std::sqrt(std::max(0.0, 2.0 / 3.0 - t)), std::sqrt(1.0 / 3.0), std::sqrt(std::max(0.0, t));
  return figure_row(t, 0.0, coeffs);
}

FigureRow figure_point_fig2(double p, double q) {
  if (!(p >= q && q > 0.0 && p + q <= 1.0 + 1e-12))
    throw validation_error("figure_grid", "need p >= q > 0 and p + q <= 1");
  RealVector coeffs(3);
  coeffs << std::sqrt(p), std::sqrt(q), std::sqrt(std::max(0.0, 1.0 - p - q));
  return figure_row(p, q, coeffs);
}

std::vector<FigureRow> figure_scan_fig1(int resolution) {
  if (resolution < 2) throw validation_error("figure_grid", "resolution must be at least 2");
  std::vector<FigureRow> rows;
  rows.reserve(resolution);
  for (int i = 0; i < resolution; ++i)
    rows.push_back(figure_point_fig1((1.0 / 3.0) * i / (resolution - 1)));
  return rows;
}

std::vector<FigureRow> figure_scan_fig2(int resolution) {
  if (resolution < 2) throw validation_error("figure_grid", "resolution must be at least 2");
  std::vector<FigureRow> rows;
  for (int i = 1; i <= resolution; ++i)
    for (int j = 1; j <= i; ++j) {
      const double p = static_cast<double>(i) / (resolution + 1);
      const double q = static_cast<double>(j) / (resolution + 1);
      if (p + q <= 1.0) rows.push_back(figure_point_fig2(p, q));
    }
  return rows;
}

AcinProbeResult acin_disentangling_probe(const AcinParams& params, const MonogamyOptions& opts) {
  const PureState psi = make_acin(params);
  AcinProbeResult result;
  result.report = monogamy_check(psi, Measure::of(MeasureKind::E2Raw), opts);
  result.gap_closed = result.report.disentangling_gap <= opts.gap_tol;
  const auto& l = params.lambda;
  const bool branch_a = l[2] * l[2] <= kRankTol && l[4] * l[4] <= kRankTol;
  const bool branch_b = l[1] * l[1] <= kRankTol && l[0] <= l[3] + 1e-9;
  result.condition_set_holds = branch_a || branch_b;
  return result;
}

std::optional<double> CorpusEntry::analytic_roof(const Measure& measure) const {
  switch (measure.kind) {
    case MeasureKind::E2Norm: return analytic_e2_norm;
    case MeasureKind::EMin: return analytic_e_min;
    case MeasureKind::EMinReinforced: return analytic_e_min_reinforced;
    default: return std::nullopt;
  }
}

std::vector<CorpusEntry> bounds_corpus() {
  std::vector<CorpusEntry> corpus;

  auto add_pure = [&](const std::string& name, const PureState& psi) {
    CorpusEntry entry;
    entry.name = name;
    entry.state = density_of(psi);
    entry.analytic_e2_norm = e2_normalized(psi);
    entry.analytic_e_min = e_min(psi);
    entry.analytic_e_min_reinforced = e_min_reinforced(psi);
    corpus.push_back(std::move(entry));
  };

  add_pure("bell", make_bell());
  add_pure("max_entangled_3", make_max_entangled(3));
  RealVector fig1_coeffs(3);
  fig1_coeffs << std::sqrt(0.5), std::sqrt(1.0 / 3.0), std::sqrt(1.0 / 6.0);
  add_pure("qutrit_half_third_sixth", pure_from_schmidt(fig1_coeffs, 3, 3));
  RealVector product_coeffs(1);
  product_coeffs << 1.0;
  add_pure("product_2x2", pure_from_schmidt(product_coeffs, 2, 2));

  {
    // Rank-2 AB reduction of the 3⊗4⊗2 family in the dominant-a0 regime:
    // every decomposition averages E2 to exactly 1 - a0².
    const PhiParams params = phi_from_squares({0.5, 0.3, 0.2}, {0.5, 0.26, 0.24});
    const PureState phi = make_phi(params);
    CorpusEntry entry;
    entry.name = "phi_dominant_ab";
    entry.state = partial_trace(density_of(phi), {0, 1});
    entry.analytic_e2_norm = 1.5 * (1.0 - 0.5);
    corpus.push_back(std::move(entry));
  }

  {
    CorpusEntry entry;
    entry.name = "separable_diag_2x2";
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 0.4;
    m(1, 1) = 0.1;
    m(2, 2) = 0.3;
    m(3, 3) = 0.2;
    entry.state = make_density(std::move(m), DimSignature{{2, 2}});
    entry.analytic_e2_norm = 0.0;
    entry.analytic_e_min = 0.0;
    entry.analytic_e_min_reinforced = 0.0;
    corpus.push_back(std::move(entry));
  }

  {
    // rank kept at 4 so the roof optimizer stays inside its rank cap
    CorpusEntry entry;
    entry.name = "separable_diag_3x3";
    ComplexMatrix m = ComplexMatrix::Zero(9, 9);
    m(0, 0) = 0.4;   // |00>
    m(2, 2) = 0.15;  // |02>
    m(4, 4) = 0.3;   // |11>
    m(8, 8) = 0.15;  // |22>
    entry.state = make_density(std::move(m), DimSignature{{3, 3}});
    entry.analytic_e2_norm = 0.0;
    entry.analytic_e_min = 0.0;
    entry.analytic_e_min_reinforced = 0.0;
    corpus.push_back(std::move(entry));
  }

  {
    // Carried without analytic roofs; exercises the bound >= 0 path.
    CorpusEntry entry;
    entry.name = "w_ab";
    entry.state = partial_trace(density_of(make_w()), {0, 1});
    corpus.push_back(std::move(entry));
  }

  return corpus;
}

}  // namespace mlab
