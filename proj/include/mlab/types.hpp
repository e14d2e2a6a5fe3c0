#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace mlab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Absolute tolerances. Spectra are trace-normalized throughout, so absolute
// thresholds are meaningful at every scale the library handles.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kRankTol = 1e-9;         // eigenvalues below this count as zero
inline constexpr double kNegativeEigTol = 1e-12; // cutoff for the negative part
inline constexpr double kNormTol = 1e-10;        // state norm / trace deviation
inline constexpr double kPsdTol = 1e-9;          // eigenvalue floor for density matrices
inline constexpr double kProbSumTol = 1e-8;      // probability-vector sum check
inline constexpr double kMajorizationSlack = 1e-10;
inline constexpr double kIsometryTol = 1e-9;

/// Input failed a named invariant. The invariant name is stable and is what
/// the CLI reports on exit code 2.
class validation_error : public std::invalid_argument {
 public:
  explicit validation_error(std::string invariant, const std::string& detail = "")
      : std::invalid_argument(detail.empty() ? invariant : invariant + ": " + detail),
        invariant_(std::move(invariant)) {}
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// Request is outside the supported envelope (rank caps, unsupported measures).
class capability_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mlab
