#include "mlab/stateio.hpp"

#include <cfenv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mlab {

namespace {

using nlohmann::json;

ComplexVector parse_pairs(const json& data) {
  if (!data.is_array()) throw validation_error("data_shape", "data must be a list of [re, im] pairs");
  ComplexVector out(static_cast<Eigen::Index>(data.size()));
  Eigen::Index i = 0;
  for (const auto& entry : data) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      throw validation_error("data_shape", "each entry must be an [re, im] pair");
    out(i++) = Complex(entry[0].get<double>(), entry[1].get<double>());
  }
  return out;
}

json dump_pairs(const ComplexVector& values) {
  json out = json::array();
  for (Eigen::Index i = 0; i < values.size(); ++i)
    out.push_back({values(i).real(), values(i).imag()});
  return out;
}

}  // namespace

StateVariant parse_state(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw validation_error("json", e.what());
  }
  if (!doc.is_object()) throw validation_error("json", "top level must be an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) throw validation_error("kind");
  const std::string kind = doc["kind"].get<std::string>();
  if (kind != "pure" && kind != "mixed") throw validation_error("kind", "expected pure or mixed");
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty())
    throw validation_error("dims");
  DimSignature sig;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer()) throw validation_error("dims", "dimensions must be integers");
    sig.dims.push_back(d.get<int>());
  }
  validate_signature(sig);
  if (!doc.contains("data")) throw validation_error("data_shape", "missing data");
  ComplexVector flat = parse_pairs(doc["data"]);
  if (kind == "pure") {
    return make_pure(std::move(flat), std::move(sig));
  }
  const Eigen::Index n = sig.total();
  if (flat.size() != n * n) throw validation_error("dims_product");
  ComplexMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = flat(r * n + c);
  return make_density(std::move(m), std::move(sig));
}

StateVariant load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state(buffer.str());
}

std::string serialize_state(const StateVariant& state) {
  json doc;
  if (const auto* pure = std::get_if<PureState>(&state)) {
    doc["kind"] = "pure";
    doc["dims"] = pure->signature.dims;
    doc["data"] = dump_pairs(pure->amplitudes);
  } else {
    const auto& mixed = std::get<DensityMatrix>(state);
    doc["kind"] = "mixed";
    doc["dims"] = mixed.signature.dims;
    const Eigen::Index n = mixed.matrix.rows();
    ComplexVector flat(n * n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) flat(r * n + c) = mixed.matrix(r, c);
    doc["data"] = dump_pairs(flat);
  }
  return doc.dump(2) + "\n";
}

void save_state(const StateVariant& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open " + path);
  out << serialize_state(state);
  if (!out) throw std::ios_base::failure("write failed on " + path);
}

const DimSignature& signature_of(const StateVariant& state) {
  if (const auto* pure = std::get_if<PureState>(&state)) return pure->signature;
  return std::get<DensityMatrix>(state).signature;
}

std::string format_number(double value) {
  // glibc converts binary to decimal correctly rounded under the default
  // FE_TONEAREST mode, which resolves decimal ties to even.
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

}  // namespace mlab
