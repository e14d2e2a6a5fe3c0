#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "mlab/states.hpp"

using namespace mlab;

namespace {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

PhiParams default_phi() { return phi_from_squares({0.5, 0.3, 0.2}, {0.5, 0.26, 0.24}); }

}  // namespace

TEST_CASE("partial trace of a product state returns the kept factor") {
  Rng rng = make_rng(11, 0);
  const ComplexMatrix rho_a = random_density(2, rng);
  const ComplexMatrix rho_b = random_density(3, rng);
  const DensityMatrix prod = make_density(kron(rho_a, rho_b), DimSignature{{2, 3}});
  const DensityMatrix kept = partial_trace(prod, {0});
  CHECK((kept.matrix - rho_a).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(kept.signature.dims == std::vector<int>{2});
  const DensityMatrix kept_b = partial_trace(prod, {1});
  CHECK((kept_b.matrix - rho_b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace preserves the trace and rejects bad subsystems") {
  Rng rng = make_rng(12, 0);
  const DensityMatrix rho = random_density_state(DimSignature{{2, 2, 2}}, rng);
  const DensityMatrix ab = partial_trace(rho, {0, 1});
  CHECK(ab.matrix.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(partial_trace(rho, {3}), validation_error);
  CHECK_THROWS_AS(partial_trace(rho, {}), validation_error);
}

TEST_CASE("A-reduction of the phi family matches the closed form") {
  const PureState phi = make_phi(default_phi());
  const DensityMatrix rho_a = partial_trace(density_of(phi), {0});
  ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
  expected(0, 0) = 0.5;
  expected(1, 1) = (0.3 + 0.26) / 2;
  expected(2, 2) = (0.2 + 0.24) / 2;
  CHECK((rho_a.matrix - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Bell state reduces to the maximally mixed qubit") {
  const DensityMatrix rho_a = partial_trace(density_of(make_bell()), {0});
  CHECK((rho_a.matrix - 0.5 * ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial transpose of a product state stays positive") {
  Rng rng = make_rng(13, 0);
  const ComplexMatrix rho_a = random_density(2, rng);
  const ComplexMatrix rho_b = random_density(2, rng);
  const DensityMatrix prod = make_density(kron(rho_a, rho_b), DimSignature{{2, 2}});
  const RealVector w = eigvals_hermitian(partial_transpose(prod, 0));
  CHECK(w(w.size() - 1) > -1e-12);
}

TEST_CASE("partial transpose of the Bell state has eigenvalue -1/2") {
  const ComplexMatrix pt = partial_transpose(density_of(make_bell()), 0);
  // independent oracle: direct eigendecomposition
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> oracle(pt);
  CHECK(oracle.eigenvalues()(0) == doctest::Approx(-0.5).epsilon(1e-13));
}

TEST_CASE("partial transpose is a trace-preserving Hermitian involution") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Rng rng = make_rng(14, s);
    const DensityMatrix rho = random_density_state(DimSignature{{2, 3}}, rng);
    const ComplexMatrix pt = partial_transpose(rho, 0);
    CHECK(is_hermitian(pt));
    CHECK(pt.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    const DensityMatrix wrapped{pt, rho.signature};
    CHECK((partial_transpose(wrapped, 0) - rho.matrix).cwiseAbs().maxCoeff() < 1e-13);
    // transposing the second subsystem instead gives the full-transpose image
    CHECK((partial_transpose(rho, 1) - pt.transpose()).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("phi AC-reduction is NPT whenever the cross products differ") {
  const DensityMatrix rho_ac = partial_trace(density_of(make_phi(default_phi())), {0, 2});
  const RealVector w = eigvals_hermitian(partial_transpose(rho_ac, 0));
  CHECK(w(w.size() - 1) < -1e-9);
}

TEST_CASE("schmidt of basis and Bell states") {
  RealVector one(1);
  one << 1.0;
  const SchmidtData basis = schmidt(pure_from_schmidt(one, 2, 2));
  CHECK(basis.rank == 1);
  CHECK(basis.coefficients(0) == doctest::Approx(1.0).epsilon(1e-14));

  const SchmidtData bell = schmidt(make_bell());
  CHECK(bell.rank == 2);
  CHECK(bell.coefficients(0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));
  CHECK(bell.coefficients(1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("schmidt of the qutrit curve state at t = 1/6") {
  RealVector coeffs(3);
  coeffs << std::sqrt(2.0 / 3.0 - 1.0 / 6.0), std::sqrt(1.0 / 3.0), std::sqrt(1.0 / 6.0);
  const SchmidtData data = schmidt(pure_from_schmidt(coeffs, 3, 3));
  CHECK(data.rank == 3);
  CHECK(data.coefficients(0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
  CHECK(data.coefficients(1) == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-13));
  CHECK(data.coefficients(2) == doctest::Approx(std::sqrt(1.0 / 6.0)).epsilon(1e-13));
}

TEST_CASE("schmidt requires a bipartite signature") {
  CHECK_THROWS_AS(schmidt(make_w()), validation_error);
}

TEST_CASE("schmidt reconstruction and reduced-spectrum consistency") {
  const DimSignature signatures[] = {DimSignature{{2, 2}}, DimSignature{{3, 4}},
                                     DimSignature{{4, 3}}};
  int count = 0;
  for (const DimSignature& sig : signatures)
    for (std::uint64_t s = 0; s < 334; ++s) {
      Rng rng = make_rng(15, 1000 * sig.dims[0] + s);
      const PureState psi = random_pure_state(sig, rng);
      const SchmidtData data = schmidt(psi);

      ComplexVector rebuilt = ComplexVector::Zero(psi.amplitudes.size());
      for (int i = 0; i < data.rank; ++i)
        for (Eigen::Index a = 0; a < sig.dims[0]; ++a)
          for (Eigen::Index b = 0; b < sig.dims[1]; ++b)
            rebuilt(a * sig.dims[1] + b) +=
                data.coefficients(i) * data.left_basis(a, i) * data.right_basis(b, i);
      const Complex overlap = (rebuilt.adjoint() * psi.amplitudes)(0, 0);
      CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-8);

      // coefficients² equals the spectrum of the A-reduction
      const DensityMatrix rho_a = partial_trace(density_of(psi), {0});
      const RealVector w = eigvals_hermitian(rho_a.matrix);
      CHECK(std::abs(w(0) - data.coefficients(0) * data.coefficients(0)) < 1e-9);
      CHECK(std::abs(1.0 - data.coefficients.squaredNorm()) < 1e-9);
      ++count;
    }
  CHECK(count == 1002);
}

TEST_CASE("phi factory validates its constraint system") {
  const PureState phi = make_phi(default_phi());
  const RealVector w = eigvals_hermitian(partial_trace(density_of(phi), {0}).matrix);
  CHECK(w(0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(w(1) == doctest::Approx(0.28).epsilon(1e-13));
  CHECK(w(2) == doctest::Approx(0.22).epsilon(1e-13));

  CHECK_NOTHROW(phi_from_squares({0.2, 0.45, 0.35}, {0.2, 0.44, 0.36}, PhiRegime::A0Minimal));

  // equal cross products forbidden
  PhiParams equal_products;
  equal_products.a = {std::sqrt(0.5), std::sqrt(0.3), std::sqrt(0.2)};
  equal_products.a_prime = {std::sqrt(0.5), std::sqrt(0.3), std::sqrt(0.2)};
  try {
    make_phi(equal_products);
    CHECK(false);
  } catch (const validation_error& e) {
    CHECK(e.invariant() == "phi_cross_products");
  }

  // regime mismatches
  CHECK_THROWS_AS(phi_from_squares({0.2, 0.45, 0.35}, {0.2, 0.44, 0.36}, PhiRegime::A0Dominant),
                  validation_error);
  CHECK_THROWS_AS(phi_from_squares({0.5, 0.3, 0.2}, {0.5, 0.26, 0.24}, PhiRegime::A0Minimal),
                  validation_error);
  CHECK_THROWS_AS(phi_from_squares({0.4, 0.35, 0.25}, {0.4, 0.33, 0.27}, PhiRegime::A0Dominant),
                  validation_error);
}

TEST_CASE("dominant-regime A-spectrum always peaks at a0 squared") {
  int tested = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    Rng rng = make_rng(16, s);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double a0_sq = 0.5 + 0.35 * uniform(rng);
    const double rest = 1.0 - a0_sq;
    const double a1_sq = rest * (0.5 + 0.49 * uniform(rng));
    const double a2_sq = rest - a1_sq;
    const double b1_sq = rest * (0.5 + 0.49 * uniform(rng));
    const double b2_sq = rest - b1_sq;
    PhiParams params;
    try {
      params = phi_from_squares({a0_sq, a1_sq, a2_sq}, {a0_sq, b1_sq, b2_sq});
    } catch (const validation_error&) {
      continue;  // occasional draw violates the ordering or cross-product rule
    }
    const RealVector w =
        eigvals_hermitian(partial_trace(density_of(make_phi(params)), {0}).matrix);
    CHECK(std::abs(w(0) - a0_sq) < 1e-12);
    ++tested;
  }
  CHECK(tested > 150);
}

TEST_CASE("omega factory and its A-spectrum") {
  const PureState omega = make_omega(std::sqrt(0.5), std::sqrt(0.3), std::sqrt(0.2));
  CHECK(omega.signature.dims == std::vector<int>{3, 2, 2});
  const RealVector w = eigvals_hermitian(partial_trace(density_of(omega), {0}).matrix);
  CHECK(w(0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(w(1) == doctest::Approx(0.3).epsilon(1e-13));
  CHECK(w(2) == doctest::Approx(0.2).epsilon(1e-13));

  CHECK_THROWS_AS(make_omega(std::sqrt(0.7), std::sqrt(0.3), 0.0), validation_error);
  CHECK_THROWS_AS(make_omega(std::sqrt(0.2), std::sqrt(0.3), std::sqrt(0.5)), validation_error);
  CHECK_THROWS_AS(make_omega(0.9, 0.3, 0.2), validation_error);
}

TEST_CASE("acin factory basics and separability predicates") {
  AcinParams basis;
  basis.lambda = {1, 0, 0, 0, 0};
  const PureState zero_state = make_acin(basis);
  CHECK(std::abs(zero_state.amplitudes(0) - Complex(1, 0)) < 1e-14);
  CHECK(zero_state.amplitudes.tail(7).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_FALSE(acin_genuinely_entangled(basis));

  AcinParams generic;
  generic.lambda = {0.6, 0.2, 0.4, 0.5, std::sqrt(1 - 0.36 - 0.04 - 0.16 - 0.25)};
  generic.phase = 0.3;
  CHECK(acin_genuinely_entangled(generic));

  // predicates vs a PPT oracle on both two-qubit reductions (PPT ⇔ separable in 2⊗2)
  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng rng = make_rng(17, s);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    AcinParams p;
    for (int i = 0; i < 5; ++i) p.lambda[i] = uniform(rng);
    if (s % 2 == 0) p.lambda[3] = 0.0;
    if (s % 3 == 0) p.lambda[2] = 0.0;
    double norm = 0;
    for (double v : p.lambda) norm += v * v;
    if (norm <= 0) continue;
    for (double& v : p.lambda) v /= std::sqrt(norm);
    p.phase = uniform(rng) * 3.14159;
    const DensityMatrix rho = density_of(make_acin(p));
    const DensityMatrix rho_ab = partial_trace(rho, {0, 1});
    const DensityMatrix rho_ac = partial_trace(rho, {0, 2});
    const bool ab_ppt = eigvals_hermitian(partial_transpose(rho_ab, 0)).minCoeff() > -1e-9;
    const bool ac_ppt = eigvals_hermitian(partial_transpose(rho_ac, 0)).minCoeff() > -1e-9;
    CHECK(ab_ppt == acin_rho_ab_separable(p));
    CHECK(ac_ppt == acin_rho_ac_separable(p));
  }
}

TEST_CASE("acin validation") {
  AcinParams bad;
  bad.lambda = {1, 1, 0, 0, 0};
  CHECK_THROWS_AS(make_acin(bad), validation_error);
  AcinParams bad_phase;
  bad_phase.lambda = {1, 0, 0, 0, 0};
  bad_phase.phase = 4.0;
  CHECK_THROWS_AS(make_acin(bad_phase), validation_error);
}

TEST_CASE("standard factories") {
  const PureState w = make_w();
  const double c = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(w.amplitudes(0b100) - Complex(c, 0)) < 1e-14);
  CHECK(std::abs(w.amplitudes(0b010) - Complex(c, 0)) < 1e-14);
  CHECK(std::abs(w.amplitudes(0b001) - Complex(c, 0)) < 1e-14);

  const RealVector spectrum =
      eigvals_hermitian(partial_trace(density_of(make_max_entangled(3)), {0}).matrix);
  for (int i = 0; i < 3; ++i) CHECK(spectrum(i) == doctest::Approx(1.0 / 3).epsilon(1e-13));

  RealVector coeffs(2);
  coeffs << 1.0, 0.0;
  const PureState basis = pure_from_schmidt(coeffs, 2, 2);
  CHECK(std::abs(basis.amplitudes(0) - Complex(1, 0)) < 1e-14);

  RealVector too_many(3);
  too_many << 0.8, 0.4, std::sqrt(1 - 0.64 - 0.16);
  CHECK_THROWS_AS(pure_from_schmidt(too_many, 2, 4), validation_error);
}

TEST_CASE("cut descriptors parse and apply") {
  const Cut a_bc = parse_cut("A|BC");
  CHECK(a_bc.left == std::vector<int>{0});
  CHECK(a_bc.right == std::vector<int>{1, 2});
  CHECK(to_string(a_bc) == "A|BC");
  CHECK_THROWS_AS(parse_cut("A|BD"), validation_error);
  CHECK_THROWS_AS(parse_cut("AB"), validation_error);
  CHECK_THROWS_AS(parse_cut("A|AB"), validation_error);

  // spectrum across A|BC equals the A-reduction spectrum
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng = make_rng(18, s);
    const PureState psi = random_pure_state(DimSignature{{2, 3, 2}}, rng);
    const PureState cut = apply_cut(psi, a_bc);
    CHECK(cut.signature.dims == std::vector<int>{2, 6});
    const RealVector via_cut = reduced_spectrum(cut);
    const RealVector via_trace = eigvals_hermitian(partial_trace(density_of(psi), {0}).matrix);
    CHECK((via_cut - via_trace).cwiseAbs().maxCoeff() < 1e-11);
  }

  // a permuted cut reorders subsystems consistently between both overloads
  Rng rng = make_rng(18, 99);
  const PureState psi = random_pure_state(DimSignature{{2, 3, 2}}, rng);
  const Cut b_ac = parse_cut("B|AC");
  const PureState cut_pure = apply_cut(psi, b_ac);
  const DensityMatrix cut_density = apply_cut(density_of(psi), b_ac);
  CHECK((density_of(cut_pure).matrix - cut_density.matrix).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("type validation reports the first violated invariant") {
  ComplexVector unnormalized(4);
  unnormalized << 0.5, 0, 0, 0;
  try {
    make_pure(unnormalized, DimSignature{{2, 2}});
    CHECK(false);
  } catch (const validation_error& e) {
    CHECK(e.invariant() == "normalized");
  }

  ComplexVector ok(4);
  ok << 1, 0, 0, 0;
  try {
    make_pure(ok, DimSignature{{2, 3}});
    CHECK(false);
  } catch (const validation_error& e) {
    CHECK(e.invariant() == "dims_product");
  }

  try {
    make_density(0.5 * ComplexMatrix::Identity(4, 4), DimSignature{{2, 2}});
    CHECK(false);
  } catch (const validation_error& e) {
    CHECK(e.invariant() == "unit_trace");
  }

  ComplexMatrix not_psd = ComplexMatrix::Zero(4, 4);
  not_psd(0, 0) = 1.5;
  not_psd(1, 1) = -0.5;
  try {
    make_density(not_psd, DimSignature{{2, 2}});
    CHECK(false);
  } catch (const validation_error& e) {
    CHECK(e.invariant() == "psd");
  }

  ComplexMatrix not_herm = ComplexMatrix::Identity(4, 4) * 0.25;
  not_herm(0, 1) = Complex(0, 0.5);
  try {
    make_density(not_herm, DimSignature{{2, 2}});
    CHECK(false);
  } catch (const validation_error& e) {
    CHECK(e.invariant() == "hermitian");
  }
}

TEST_CASE("signatures outside the desk-scale envelope are rejected") {
  ComplexVector amps = ComplexVector::Zero(16);
  amps(0) = 1.0;
  CHECK_THROWS_AS(make_pure(amps, DimSignature{{2, 2, 2, 2}}), capability_error);
  ComplexVector big = ComplexVector::Zero(8192);
  big(0) = 1.0;
  CHECK_THROWS_AS(make_pure(big, DimSignature{{128, 64}}), capability_error);
}

TEST_CASE("acin with vanishing lambda2 leaves the AC reduction PPT") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Rng rng = make_rng(19, s);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    AcinParams p;
    p.lambda = {uniform(rng), uniform(rng), 0.0, uniform(rng), uniform(rng)};
    double norm = 0;
    for (double v : p.lambda) norm += v * v;
    if (norm <= 0) continue;
    for (double& v : p.lambda) v /= std::sqrt(norm);
    const DensityMatrix rho_ac = partial_trace(density_of(make_acin(p)), {0, 2});
    CHECK(eigvals_hermitian(partial_transpose(rho_ac, 0)).minCoeff() > -1e-9);
  }
}
