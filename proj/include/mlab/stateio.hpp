#pragma once

// JSON state files and CSV number formatting.
//
// State files are JSON documents with three fields:
//   kind: "pure" | "mixed"
//   dims: list of subsystem dimensions
//   data: list of [re, im] pairs — amplitudes for pure states, row-major
//         matrix entries for mixed ones.
// Loading applies the type invariants and reports the first violation by name.

#include <string>
#include <variant>

#include "mlab/states.hpp"

namespace mlab {

using StateVariant = std::variant<PureState, DensityMatrix>;

StateVariant parse_state(const std::string& json_text);
StateVariant load_state(const std::string& path);
std::string serialize_state(const StateVariant& state);
void save_state(const StateVariant& state, const std::string& path);

const DimSignature& signature_of(const StateVariant& state);

/// 9 significant digits, '.' decimal separator, round-half-even.
std::string format_number(double value);

}  // namespace mlab
