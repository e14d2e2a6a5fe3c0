#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include "mlab/numkit.hpp"

using namespace mlab;

TEST_CASE("eig_hermitian on the identity") {
  const EigResult eig = eig_hermitian(ComplexMatrix::Identity(3, 3));
  for (int i = 0; i < 3; ++i) CHECK(eig.spectrum(i) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eig_hermitian on an already diagonal matrix") {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = 2.0 / 3.0;
  m(1, 1) = 1.0 / 6.0;
  m(2, 2) = 1.0 / 6.0;
  const EigResult eig = eig_hermitian(m);
  CHECK(eig.spectrum(0) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(eig.spectrum(1) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(eig.spectrum(2) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("eig_hermitian reconstruction oracle") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng = make_rng(1234, s);
    const ComplexMatrix h = random_hermitian(5, rng);
    const EigResult eig = eig_hermitian(h);
    const ComplexMatrix reconstructed =
        eig.vectors * eig.spectrum.asDiagonal() * eig.vectors.adjoint();
    CHECK((reconstructed - h).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((eig.vectors.adjoint() * eig.vectors - ComplexMatrix::Identity(5, 5))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
    for (Eigen::Index i = 0; i + 1 < eig.spectrum.size(); ++i)
      CHECK(eig.spectrum(i) >= eig.spectrum(i + 1));
    // eigenvector equations
    for (Eigen::Index i = 0; i < 5; ++i)
      CHECK((h * eig.vectors.col(i) - eig.spectrum(i) * eig.vectors.col(i)).norm() < 1e-9);
  }
}

TEST_CASE("eig_hermitian rejects bad input") {
  CHECK_THROWS_AS(eig_hermitian(ComplexMatrix::Zero(2, 3)), validation_error);
  ComplexMatrix m(2, 2);
  m << Complex(0, 0), Complex(1, 0), Complex(2, 0), Complex(0, 0);
  CHECK_THROWS_AS(eig_hermitian(m), validation_error);
}

TEST_CASE("density spectra are normalized probability vectors") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng = make_rng(99, s);
    const RealVector w = eigvals_hermitian(random_density(4, rng));
    CHECK(w(w.size() - 1) > -1e-10);
    CHECK(w.sum() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("svd of the zero matrix") {
  const SvdResult dec = svd(ComplexMatrix::Zero(3, 4));
  CHECK(dec.singular.maxCoeff() == 0.0);
}

TEST_CASE("svd of a diagonal matrix") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 0.9;
  m(1, 1) = 0.3;
  const SvdResult dec = svd(m);
  CHECK(dec.singular(0) == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(dec.singular(1) == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("svd reconstruction oracle") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng = make_rng(777, s);
    const ComplexMatrix m = random_ginibre(3, 4, rng);
    const SvdResult dec = svd(m);
    const ComplexMatrix reconstructed =
        dec.left * dec.singular.asDiagonal() * dec.right.adjoint();
    CHECK((reconstructed - m).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((dec.left.adjoint() * dec.left - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() <
          1e-10);
    CHECK((dec.right.adjoint() * dec.right - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() <
          1e-10);
    for (Eigen::Index i = 0; i + 1 < dec.singular.size(); ++i)
      CHECK(dec.singular(i) >= dec.singular(i + 1));
  }
}

TEST_CASE("operator norm basics") {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = 2.0 / 3.0;
  m(1, 1) = 1.0 / 6.0;
  m(2, 2) = 1.0 / 6.0;
  CHECK(operator_norm(m) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(operator_norm(ComplexMatrix::Identity(3, 3) / 3.0) == doctest::Approx(1.0 / 3.0));
  Rng rng = make_rng(5, 0);
  const ComplexVector v = random_unit_vector(4, rng);
  CHECK(operator_norm(v * v.adjoint()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("min_norm piecewise rule") {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = 2.0 / 3.0;
  m(1, 1) = 1.0 / 6.0;
  m(2, 2) = 1.0 / 6.0;
  CHECK(min_norm(m) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));

  Rng rng = make_rng(6, 0);
  const ComplexVector v = random_unit_vector(3, rng);
  CHECK(min_norm(v * v.adjoint()) == 0.0);  // smallest positive eigenvalue is 1

  ComplexMatrix rank2 = ComplexMatrix::Zero(3, 3);
  rank2(0, 0) = 3.0 / 5.0;
  rank2(1, 1) = 2.0 / 5.0;
  CHECK(min_norm(rank2) == doctest::Approx(2.0 / 5.0).epsilon(1e-14));

  CHECK_THROWS_AS(min_norm(2.0 * ComplexMatrix::Identity(2, 2)), validation_error);
}

TEST_CASE("negative_part splits signs") {
  Rng rng = make_rng(7, 0);
  const ComplexMatrix psd = random_density(3, rng);
  CHECK(negative_part(psd).cwiseAbs().maxCoeff() < 1e-12);

  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 0.5;
  m(1, 1) = -0.5;
  const ComplexMatrix neg = negative_part(m);
  CHECK(std::abs(neg(0, 0)) < 1e-14);
  CHECK(neg(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("negative part of the Bell partial transpose") {
  // Built and decomposed by hand, independent of the states module.
  ComplexMatrix pt = ComplexMatrix::Zero(4, 4);
  pt(0, 0) = 0.5;
  pt(3, 3) = 0.5;
  pt(1, 2) = 0.5;  // partial transpose swaps the |00><11| coherences
  pt(2, 1) = 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> oracle(pt);
  CHECK(oracle.eigenvalues()(0) == doctest::Approx(-0.5).epsilon(1e-14));

  const ComplexMatrix neg = negative_part(pt);
  const RealVector w = eigvals_hermitian(neg);
  CHECK(w(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w(1) < 1e-12);
  CHECK(w(w.size() - 1) > -1e-14);  // PSD
}

TEST_CASE("negative_part norm equals the most negative eigenvalue") {
  for (std::uint64_t s = 0; s < 25; ++s) {
    Rng rng = make_rng(321, s);
    const ComplexMatrix h = random_hermitian(4, rng);
    const RealVector w = eigvals_hermitian(h);
    const double most_negative = std::max(0.0, -w(w.size() - 1));
    if (most_negative > 1e-9)
      CHECK(operator_norm(negative_part(h)) == doctest::Approx(most_negative).epsilon(1e-10));
  }
}

TEST_CASE("majorization basics") {
  RealVector u(3), top(3);
  u << 1.0 / 3, 1.0 / 3, 1.0 / 3;
  top << 1.0, 0.0, 0.0;
  CHECK(majorizes(u, u));
  CHECK(majorizes(u, top));
  CHECK_FALSE(majorizes(top, u));

  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng = make_rng(1717, s);
    const RealVector x = random_simplex_point(4, rng);
    CHECK(majorizes(x, x));          // reflexive
    RealVector uniform4 = RealVector::Constant(4, 0.25);
    CHECK(majorizes(uniform4, x));   // uniform is majorized by everything
  }

  RealVector bad(2);
  bad << 0.9, 0.3;
  CHECK_THROWS_AS(majorizes(bad, bad), validation_error);
}

TEST_CASE("mixture majorization: spectrum of a mix is majorized by the mixed spectra") {
  // 500 seeded pairs with t on a grid; the displayed relation
  // δ(tρ+(1-t)σ) ≺ tδ(ρ)+(1-t)δ(σ).
  int checked = 0;
  for (std::uint64_t s = 0; s < 500; ++s) {
    Rng rng = make_rng(2024, s);
    const ComplexMatrix rho = random_density(3, rng);
    const ComplexMatrix sigma = random_density(3, rng);
    const RealVector wr = eigvals_hermitian(rho);
    const RealVector ws = eigvals_hermitian(sigma);
    for (int ti = 1; ti <= 9; ++ti) {
      const double t = 0.1 * ti;
      const RealVector mix_spectrum = eigvals_hermitian(t * rho + (1 - t) * sigma);
      const RealVector avg = t * wr + (1 - t) * ws;
      CHECK(majorizes(mix_spectrum, avg));
      ++checked;
    }
  }
  CHECK(checked == 4500);
}

TEST_CASE("random isometries have orthonormal columns") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng = make_rng(888, s);
    const ComplexMatrix v = random_isometry(4, 2, rng);
    CHECK((v.adjoint() * v - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
  }
  Rng rng = make_rng(888, 99);
  CHECK_THROWS_AS(random_isometry(2, 4, rng), validation_error);
}

TEST_CASE("simplex sampling is normalized and descending") {
  Rng rng = make_rng(31, 0);
  for (int i = 0; i < 50; ++i) {
    const RealVector x = random_simplex_point(5, rng);
    CHECK(x.sum() == doctest::Approx(1.0).epsilon(1e-12));
    for (Eigen::Index j = 0; j + 1 < x.size(); ++j) CHECK(x(j) >= x(j + 1));
    CHECK(x(x.size() - 1) >= 0.0);
  }
}

TEST_CASE("seed derivation is deterministic and stream-separated") {
  CHECK(derive_seed(42, 0) == derive_seed(42, 0));
  CHECK(derive_seed(42, 0) != derive_seed(42, 1));
  CHECK(derive_seed(42, 0) != derive_seed(43, 0));
}
