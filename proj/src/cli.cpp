#include "mlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mlab/analysis.hpp"
#include "mlab/stateio.hpp"

namespace mlab {

namespace {

enum ExitCode { kOk = 0, kAssertionFailure = 1, kValidation = 2, kCapability = 3, kIo = 4 };

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MONOTONE_LAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw validation_error("seed", "MONOTONE_LAB_SEED is not an integer");
    }
  }
  return 42;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

using ParamMap = std::map<std::string, std::vector<std::string>>;

ParamMap parse_params(const std::string& text) {
  ParamMap params;
  if (text.empty()) return params;
  for (const std::string& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw validation_error("params", "expected key=v or key=v1:v2:..., got '" + item + "'");
    params[item.substr(0, eq)] = split(item.substr(eq + 1), ':');
  }
  return params;
}

std::vector<double> param_or(const ParamMap& params, const std::string& key,
                             const std::vector<double>& fallback, size_t expected) {
  const auto it = params.find(key);
  if (it == params.end()) {
    if (fallback.size() != expected) throw validation_error("params", "bad default for " + key);
    return fallback;
  }
  if (it->second.size() != expected)
    throw validation_error("params", key + " expects " + std::to_string(expected) + " values");
  std::vector<double> values;
  for (const std::string& v : it->second) {
    try {
      values.push_back(std::stod(v));
    } catch (const std::exception&) {
      throw validation_error("params", "non-numeric value for " + key);
    }
  }
  return values;
}

std::string param_string(const ParamMap& params, const std::string& key,
                         const std::string& fallback) {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  if (it->second.size() != 1) throw validation_error("params", key + " expects one value");
  return it->second[0];
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open " + path);
  out << text;
  if (!out) throw std::ios_base::failure("write failed on " + path);
}

struct CommonFlags {
  std::string in_path;
  std::string out_path;
  std::string cut_text;
  std::string measure_text;
  std::string family = "phi";
  std::string params_text;
  std::uint64_t seed = 42;
  int restarts = 32;
  double tol = 1e-8;
};

RoofOptions roof_options(const CommonFlags& flags) {
  RoofOptions opts;
  opts.seed = flags.seed;
  opts.restarts = flags.restarts;
  opts.tol = flags.tol;
  return opts;
}

Cut cut_for(const StateVariant& state, const std::string& cut_text) {
  const int parts = signature_of(state).subsystems();
  if (!cut_text.empty()) return parse_cut(cut_text);
  if (parts == 2) return Cut{{0}, {1}};
  throw validation_error("cut", "a --cut like A|BC is required for multipartite inputs");
}

std::string convention_label(const Measure& m, int d_reduced) {
  switch (m.kind) {
    case MeasureKind::E2Norm: return "normalized(d=" + std::to_string(d_reduced) + ")";
    case MeasureKind::E2Raw: return "raw";
    case MeasureKind::EK: return "k=" + std::to_string(m.k);
    default: return "-";
  }
}

int cmd_measure(const CommonFlags& flags, std::ostream& out) {
  const StateVariant state = load_state(flags.in_path);
  const Cut cut = cut_for(state, flags.cut_text);
  std::ostringstream report;
  for (const std::string& token : split(flags.measure_text, ',')) {
    const Measure measure = parse_measure(token);
    double value = 0.0;
    int d_reduced = 0;
    if (const auto* pure = std::get_if<PureState>(&state)) {
      const PureState cut_state = apply_cut(*pure, cut);
      d_reduced = cut_state.signature.dims[0];
      switch (measure.kind) {
        case MeasureKind::Negativity: value = negativity(density_of(cut_state)); break;
        case MeasureKind::PartialNegativity: value = partial_negativity(density_of(cut_state)); break;
        case MeasureKind::LogPartialNegativity:
          value = log_partial_negativity(density_of(cut_state));
          break;
        default: value = measure_pure(measure, cut_state); break;
      }
    } else {
      const DensityMatrix cut_state = apply_cut(std::get<DensityMatrix>(state), cut);
      d_reduced = cut_state.signature.dims[0];
      switch (measure.kind) {
        case MeasureKind::Negativity: value = negativity(cut_state); break;
        case MeasureKind::PartialNegativity: value = partial_negativity(cut_state); break;
        case MeasureKind::LogPartialNegativity: value = log_partial_negativity(cut_state); break;
        default:
          throw capability_error(to_string(measure) +
                                 " needs a pure state here; use the roof command for mixed states");
      }
    }
    report << to_string(measure) << " value=" << format_number(value) << " cut=" << to_string(cut)
           << " convention=" << convention_label(measure, d_reduced) << "\n";
  }
  out << report.str();
  if (!flags.out_path.empty()) write_text(flags.out_path, report.str());
  return kOk;
}

struct FamilyRun {
  MonogamyReport report;
  std::optional<MonogamyVerdict> expected;
  bool probe_contradiction = false;  // acin probe: gap closed without the condition set
  std::string extra;                 // family-specific report lines
};

FamilyRun run_family(const CommonFlags& flags) {
  const ParamMap params = parse_params(flags.params_text);
  MonogamyOptions opts;
  opts.roof = roof_options(flags);
  FamilyRun run;

  auto measure_or = [&](MeasureKind fallback) {
    return flags.measure_text.empty() ? Measure::of(fallback) : parse_measure(flags.measure_text);
  };

  if (flags.family == "phi") {
    const auto a2 = param_or(params, "a2", {0.5, 0.3, 0.2}, 3);
    const auto ap2 = param_or(params, "ap2", {0.5, 0.26, 0.24}, 3);
    const std::string regime_text = param_string(params, "regime", "dominant");
    PhiRegime regime;
    if (regime_text == "dominant")
      regime = PhiRegime::A0Dominant;
    else if (regime_text == "minimal")
      regime = PhiRegime::A0Minimal;
    else
      throw validation_error("params", "regime must be dominant or minimal");
    const PhiParams phi = phi_from_squares({a2[0], a2[1], a2[2]}, {ap2[0], ap2[1], ap2[2]}, regime);
    const Measure measure = measure_or(MeasureKind::E2Raw);
    run.report = monogamy_check(make_phi(phi), measure, opts);
    if (regime == PhiRegime::A0Dominant &&
        (measure.kind == MeasureKind::E2Raw || measure.kind == MeasureKind::E2Norm))
      run.expected = MonogamyVerdict::ViolationWitness;
  } else if (flags.family == "omega") {
    const auto lam2 = param_or(params, "lam2", {0.5, 0.3, 0.2}, 3);
    const PureState omega =
        make_omega(std::sqrt(lam2[0]), std::sqrt(lam2[1]), std::sqrt(lam2[2]));
    const Measure measure = measure_or(MeasureKind::PartialNegativity);
    run.report = monogamy_check(omega, measure, opts);
    if (measure.kind == MeasureKind::PartialNegativity ||
        measure.kind == MeasureKind::LogPartialNegativity)
      run.expected = MonogamyVerdict::ViolationWitness;
  } else if (flags.family == "acin") {
    if (!flags.measure_text.empty() && parse_measure(flags.measure_text).kind != MeasureKind::E2Raw)
      throw validation_error("measure", "the acin probe is defined for E2_RAW");
    const auto lam = param_or(params, "lam", {0.5, 0.0, 0.5, 0.6, 0.3741657386773941}, 5);
    const auto phase = param_or(params, "phase", {0.0}, 1);
    AcinParams acin;
    acin.lambda = {lam[0], lam[1], lam[2], lam[3], lam[4]};
    acin.phase = phase[0];
    const AcinProbeResult probe = acin_disentangling_probe(acin, opts);
    run.report = probe.report;
    run.extra = std::string("gap_closed=") + (probe.gap_closed ? "yes" : "no") +
                " condition_set_holds=" + (probe.condition_set_holds ? "yes" : "no") + "\n";
    // The closed-form condition set is necessary for a closed gap.
    run.probe_contradiction = probe.gap_closed && !probe.condition_set_holds;
  } else if (flags.family == "w") {
    const Measure measure = measure_or(MeasureKind::SchmidtRank);
    run.report = monogamy_check(make_w(), measure, opts);
    if (measure.kind == MeasureKind::SchmidtRank)
      run.expected = MonogamyVerdict::ViolationWitness;
  } else if (flags.family == "file") {
    if (flags.in_path.empty()) throw validation_error("params", "family=file requires --in");
    const StateVariant state = load_state(flags.in_path);
    const auto* pure = std::get_if<PureState>(&state);
    if (pure == nullptr)
      throw capability_error("monogamy checks need a tripartite pure state input");
    if (flags.measure_text.empty()) throw validation_error("measure", "--measure is required");
    run.report = monogamy_check(*pure, parse_measure(flags.measure_text), opts);
  } else {
    throw validation_error("family", "expected phi, omega, acin, w, or file");
  }
  return run;
}

int cmd_monogamy(const CommonFlags& flags, std::ostream& out) {
  const FamilyRun run = run_family(flags);
  const MonogamyReport& r = run.report;
  std::ostringstream report;
  report << "family=" << flags.family << " measure=" << to_string(r.measure) << "\n"
         << "e_a_bc=" << format_number(r.e_a_bc) << "\n"
         << "e_ab=" << format_number(r.e_ab) << "\n"
         << "gap=" << format_number(r.disentangling_gap) << "\n"
         << "e_ac=" << format_number(r.e_ac) << " method=" << r.e_ac_method << "\n";
  if (r.e_ac_roof_upper)
    report << "e_ac_roof_upper=" << format_number(*r.e_ac_roof_upper) << "\n";
  report << "gap_tol=" << format_number(r.gap_tol)
         << " witness_floor=" << format_number(r.witness_floor) << "\n"
         << run.extra << "verdict=" << to_string(r.verdict) << "\n";
  out << report.str();

  if (!flags.out_path.empty()) {
    std::ostringstream csv;
    csv << "measure,e_a_bc,e_ab,e_ac,e_ac_method,gap,verdict\n"
        << to_string(r.measure) << ',' << format_number(r.e_a_bc) << ',' << format_number(r.e_ab)
        << ',' << format_number(r.e_ac) << ',' << r.e_ac_method << ','
        << format_number(r.disentangling_gap) << ',' << to_string(r.verdict) << "\n";
    write_text(flags.out_path, csv.str());
  }
  if (run.probe_contradiction) return kAssertionFailure;
  if (run.expected && r.verdict != *run.expected) return kAssertionFailure;
  return kOk;
}

int cmd_figures(const CommonFlags& flags, int fig, int resolution, std::ostream& out) {
  const std::vector<FigureRow> rows =
      fig == 1 ? figure_scan_fig1(resolution) : figure_scan_fig2(resolution);
  std::ostringstream csv;
  csv << "param1,param2,e2_norm,e_min,e_min_reinforced,tangle,partial_negativity\n";
  for (const FigureRow& row : rows)
    csv << format_number(row.param1) << ',' << format_number(row.param2) << ','
        << format_number(row.e2_norm) << ',' << format_number(row.e_min) << ','
        << format_number(row.e_min_reinforced) << ',' << format_number(row.tangle) << ','
        << format_number(row.partial_negativity) << "\n";
  if (flags.out_path.empty())
    out << csv.str();
  else
    write_text(flags.out_path, csv.str());
  return kOk;
}

int cmd_roof(const CommonFlags& flags, std::ostream& out) {
  if (flags.measure_text.empty()) throw validation_error("measure", "--measure is required");
  const Measure measure = parse_measure(flags.measure_text);
  const StateVariant state = load_state(flags.in_path);
  const Cut cut = cut_for(state, flags.cut_text);
  DensityMatrix rho = std::holds_alternative<PureState>(state)
                          ? density_of(apply_cut(std::get<PureState>(state), cut))
                          : apply_cut(std::get<DensityMatrix>(state), cut);
  const RoofOptions opts = roof_options(flags);
  std::ostringstream report;
  if (measure.kind == MeasureKind::SchmidtRank) {
    const SchmidtNumberBounds bounds = schmidt_number(rho, opts);
    report << "measure=SCHMIDT_NUMBER cut=" << to_string(cut) << "\n"
           << "lower=" << bounds.lower << "\nupper=" << bounds.upper << "\n";
  } else {
    const RoofResult result = roof_value(rho, measure, opts);
    report << "measure=" << to_string(measure) << " cut=" << to_string(cut) << "\n"
           << "value=" << format_number(result.value) << "\n"
           << "restarts_used=" << result.restarts_used << "\n"
           << "converged=" << (result.converged ? "yes" : "no") << "\n"
           << "ensemble_size=" << result.best_ensemble.states.size() << "\n";
  }
  out << report.str();
  if (!flags.out_path.empty()) write_text(flags.out_path, report.str());
  return kOk;
}

// --------------------------------------------------------------------------
// Property suites. Reports are plain deterministic text: same seed, same bytes.

struct SuiteResult {
  std::string report;
  std::string csv;  // optional machine-readable summary
  bool pass = true;
};

std::string spectrum_text(const RealVector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ':';
    out += format_number(v(i));
  }
  return out;
}

SuiteResult suite_concavity(std::uint64_t seed) {
  SuiteResult result;
  std::ostringstream out;
  std::ostringstream csv;
  out << "suite=concavity seed=" << seed << " samples=10000\n";
  csv << "function,dim,samples,violations,equalities,verdict\n";

  auto emit = [&](const ConcavityReport& report) {
    csv << to_string(report.function) << ',' << report.dim << ',' << report.samples << ','
        << report.violations.size() << ',' << report.equality_count << ','
        << to_string(report.strict) << "\n";
    if (!report.violations.empty()) {
      const ConcavitySample& first = report.violations.front();
      out << "first_violation " << to_string(report.function) << " d=" << report.dim
          << " x=" << spectrum_text(first.x) << " y=" << spectrum_text(first.y)
          << " t=" << format_number(first.t) << " deficit=" << format_number(first.deficit)
          << "\n";
    }
  };

  const ReducedFunction asserted[] = {ReducedFunction::E2, ReducedFunction::Min,
                                      ReducedFunction::MinReinforced, ReducedFunction::Tangle,
                                      ReducedFunction::Neg};
  for (const ReducedFunction h : asserted)
    for (int d = 2; d <= 4; ++d) {
      const ConcavityReport report = concavity_scan(h, d, 10000, seed);
      out << to_string(h) << " d=" << d << " violations=" << report.violations.size()
          << " equalities=" << report.equality_count << " verdict=" << to_string(report.strict)
          << "\n";
      emit(report);
      if (!report.violations.empty()) result.pass = false;
    }
  for (int d = 2; d <= 4; ++d) {
    const ConcavityReport report = concavity_scan(ReducedFunction::Hat, d, 10000, seed);
    out << "h_HAT d=" << d << " violations=" << report.violations.size()
        << " equalities=" << report.equality_count << " verdict=" << to_string(report.strict);
    if (d >= 3)
      out << " witness_equality=" << (report.witness_pair_equality ? "yes" : "no")
          << " concavity=conjecture";
    out << "\n";
    emit(report);
    if (d == 2) {
      // Strict concavity in dimension two: violations and equality witnesses
      // must both be absent.
      if (!report.violations.empty() || report.equality_count != 0) result.pass = false;
    } else {
      if (!report.witness_pair_equality) result.pass = false;
      if (d == 3 && !report.violations.empty()) result.pass = false;
    }
  }
  out << "RESULT=" << (result.pass ? "PASS" : "FAIL") << "\n";
  result.report = out.str();
  result.csv = csv.str();
  return result;
}

SuiteResult suite_bounds(std::uint64_t seed) {
  SuiteResult result;
  std::ostringstream out;
  out << "suite=bounds seed=" << seed << "\n";
  RoofOptions opts;
  opts.seed = seed;
  opts.restarts = 8;
  opts.max_iterations = 600;
  const Measure measures[] = {Measure::of(MeasureKind::E2Norm), Measure::of(MeasureKind::EMin),
                              Measure::of(MeasureKind::EMinReinforced)};
  for (const CorpusEntry& entry : bounds_corpus())
    for (const Measure& measure : measures) {
      const BoundsReport report =
          bounds_check(entry.state, measure, opts, entry.analytic_roof(measure));
      out << "state=" << entry.name << " measure=" << to_string(measure)
          << " bound=" << format_number(report.bound)
          << " roof_upper=" << format_number(report.roof_upper) << " analytic=";
      if (report.analytic_roof)
        out << format_number(*report.analytic_roof);
      else
        out << "-";
      out << " ok=" << (report.ok ? "yes" : "no") << "\n";
      if (!report.ok) result.pass = false;
    }
  out << "RESULT=" << (result.pass ? "PASS" : "FAIL") << "\n";
  result.report = out.str();
  return result;
}

SuiteResult suite_mixing(std::uint64_t seed) {
  SuiteResult result;
  std::ostringstream out;
  out << "suite=mixing seed=" << seed << " pairs=500 signature=3x3\n";
  const DimSignature sig{{3, 3}};
  const Measure measures[] = {Measure::of(MeasureKind::E2Raw), Measure::of(MeasureKind::EMin),
                              Measure::of(MeasureKind::Tangle)};
  for (const Measure& measure : measures) {
    int passes = 0;
    for (int i = 0; i < 500; ++i) {
      Rng rng = make_rng(seed, 7000 + static_cast<std::uint64_t>(i));
      const PureState psi = random_pure_state(sig, rng);
      const PureState phi = random_pure_state(sig, rng);
      std::uniform_real_distribution<double> uniform(0.0, 1.0);
      const double t = uniform(rng);
      if (mixing_monotonicity_check(psi, phi, t, measure)) ++passes;
    }
    out << "measure=" << to_string(measure) << " passes=" << passes << "/500\n";
    if (passes != 500) result.pass = false;
  }
  {
    Rng rng = make_rng(seed, 9001);
    const PureState psi = random_pure_state(sig, rng);
    const PureState phi = random_pure_state(sig, rng);
    const bool edges = mixing_monotonicity_check(psi, phi, 0.0, measures[0]) &&
                       mixing_monotonicity_check(psi, phi, 1.0, measures[0]) &&
                       mixing_monotonicity_check(psi, psi, 0.37, measures[0]);
    out << "edge_cases=" << (edges ? "pass" : "fail") << "\n";
    if (!edges) result.pass = false;
  }
  out << "RESULT=" << (result.pass ? "PASS" : "FAIL") << "\n";
  result.report = out.str();
  return result;
}

SuiteResult suite_coherence(std::uint64_t seed) {
  SuiteResult result;
  std::ostringstream out;
  out << "suite=coherence seed=" << seed << "\n";
  const ReducedFunction functions[] = {ReducedFunction::E2, ReducedFunction::Min,
                                       ReducedFunction::MinReinforced};

  bool basis_zero = true;
  for (int d = 2; d <= 5; ++d)
    for (int i = 0; i < d; ++i) {
      ComplexVector amps = ComplexVector::Zero(d);
      amps(i) = 1.0;
      const PureState basis{amps, DimSignature{{d}}};
      for (const ReducedFunction h : functions)
        if (std::abs(coherence_ch(basis, h)) > 1e-12) basis_zero = false;
    }
  out << "basis_states_zero=" << (basis_zero ? "yes" : "no") << "\n";
  if (!basis_zero) result.pass = false;

  double max_dev = 0.0;
  const int d = 4;
  for (int i = 0; i < 100; ++i) {
    Rng rng = make_rng(seed, 11000 + static_cast<std::uint64_t>(i));
    const PureState psi = random_pure_state(DimSignature{{d}}, rng);
    std::vector<int> perm(d);
    for (int j = 0; j < d; ++j) perm[j] = j;
    std::shuffle(perm.begin(), perm.end(), rng);
    ComplexVector shuffled(d);
    for (int j = 0; j < d; ++j) shuffled(perm[j]) = psi.amplitudes(j);
    const PureState permuted{shuffled, psi.signature};
    for (const ReducedFunction h : functions)
      max_dev = std::max(max_dev, std::abs(coherence_ch(psi, h) - coherence_ch(permuted, h)));
  }
  out << "permutation_invariance max_dev=" << format_number(max_dev)
      << " ok=" << (max_dev <= 1e-10 ? "yes" : "no") << "\n";
  if (max_dev > 1e-10) result.pass = false;

  ComplexVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const double value = coherence_ch(PureState{plus, DimSignature{{2}}}, ReducedFunction::E2);
  const bool qubit_ok = std::abs(value - 0.5) <= 1e-12;
  out << "max_coherent_qubit h_E2 value=" << format_number(value)
      << " ok=" << (qubit_ok ? "yes" : "no") << "\n";
  if (!qubit_ok) result.pass = false;

  out << "RESULT=" << (result.pass ? "PASS" : "FAIL") << "\n";
  result.report = out.str();
  return result;
}

int cmd_properties(const CommonFlags& flags, const std::string& suite, std::ostream& out) {
  SuiteResult result;
  if (suite == "concavity")
    result = suite_concavity(flags.seed);
  else if (suite == "bounds")
    result = suite_bounds(flags.seed);
  else if (suite == "mixing")
    result = suite_mixing(flags.seed);
  else if (suite == "coherence")
    result = suite_coherence(flags.seed);
  else
    throw validation_error("suite", "expected concavity, bounds, mixing, or coherence");
  out << result.report;
  // --out receives the CSV summary where one exists, the text report otherwise
  if (!flags.out_path.empty())
    write_text(flags.out_path, result.csv.empty() ? result.report : result.csv);
  return result.pass ? kOk : kAssertionFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"partial-norm entanglement monotones: measures, roofs, monogamy diagnostics"};
  app.require_subcommand(1);

  CommonFlags flags;
  try {
    flags.seed = default_seed();
  } catch (const validation_error& e) {
    err << "validation error [" << e.invariant() << "]: " << e.what() << "\n";
    return kValidation;
  }

  auto add_common = [&](CLI::App* cmd, bool with_roof_flags) {
    cmd->add_option("--seed", flags.seed, "random seed (MONOTONE_LAB_SEED overrides the default)");
    cmd->add_option("--out", flags.out_path, "write the report/CSV to this path");
    if (with_roof_flags) {
      cmd->add_option("--restarts", flags.restarts, "optimizer restarts per ensemble size");
      cmd->add_option("--tol", flags.tol, "optimizer convergence tolerance");
    }
  };

  CLI::App* measure = app.add_subcommand("measure", "evaluate measures on a state file");
  measure->add_option("--in", flags.in_path, "state file (JSON)")->required();
  measure->add_option("--measure", flags.measure_text, "comma-separated measure names")->required();
  measure->add_option("--cut", flags.cut_text, "bipartition like A|BC");
  add_common(measure, false);

  CLI::App* monogamy = app.add_subcommand("monogamy", "disentangling-condition check on a family");
  monogamy->add_option("--family", flags.family, "phi | omega | acin | w | file");
  monogamy->add_option("--params", flags.params_text, "family parameters, key=v1:v2,...");
  monogamy->add_option("--measure", flags.measure_text, "measure (family default otherwise)");
  monogamy->add_option("--in", flags.in_path, "state file for family=file");
  add_common(monogamy, true);

  int fig = 1;
  int resolution = 34;
  CLI::App* figures = app.add_subcommand("figures", "emit measure curves as CSV");
  figures->add_option("--fig", fig, "1 or 2")->check(CLI::Range(1, 2));
  figures->add_option("--resolution", resolution, "grid resolution (>= 2)");
  add_common(figures, false);

  std::string suite;
  CLI::App* properties = app.add_subcommand("properties", "seeded property suites");
  properties->add_option("--suite", suite, "concavity | bounds | mixing | coherence")->required();
  add_common(properties, false);

  CLI::App* roof = app.add_subcommand("roof", "convex-roof upper bound on a state file");
  roof->add_option("--in", flags.in_path, "state file (JSON)")->required();
  roof->add_option("--measure", flags.measure_text, "measure name")->required();
  roof->add_option("--cut", flags.cut_text, "bipartition like A|BC");
  add_common(roof, true);

  std::vector<std::string> argv_storage = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("monotone_lab");
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);  // prints help or the parse error
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (measure->parsed()) return cmd_measure(flags, out);
    if (monogamy->parsed()) return cmd_monogamy(flags, out);
    if (figures->parsed()) return cmd_figures(flags, fig, resolution, out);
    if (properties->parsed()) return cmd_properties(flags, suite, out);
    if (roof->parsed()) return cmd_roof(flags, out);
    err << "no command\n";
    return kValidation;
  } catch (const validation_error& e) {
    err << "validation error [" << e.invariant() << "]: " << e.what() << "\n";
    return kValidation;
  } catch (const capability_error& e) {
    err << "capability error: " << e.what() << "\n";
    return kCapability;
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIo;
  }
}

}  // namespace mlab
