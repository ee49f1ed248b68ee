#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "numrad/decomp.hpp"
#include "numrad/ensembles.hpp"
#include "numrad/rng.hpp"
#include "numrad/smallherm.hpp"

using namespace numrad;

namespace {

CMatrix random_cmatrix(int n, Rng& rng) {
  CMatrix g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = rng.cnormal();
  return g;
}

CMatrix random_hermitian(int n, Rng& rng) {
  const CMatrix g = random_cmatrix(n, rng);
  return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST_CASE("matrix constructors and validation") {
  CHECK(zero_matrix(3).norm() == 0.0);
  CHECK(identity_matrix(4).trace() == Complex(4.0, 0.0));
  const CMatrix j2 = jordan_block(2);
  CHECK(j2(0, 1) == Complex(1.0, 0.0));
  CHECK(j2(1, 0) == Complex(0.0, 0.0));

  CMatrix bad(2, 3);
  bad.setZero();
  CHECK_THROWS_AS(validate_matrix(bad), InvalidArgument);

  CMatrix nan_mat = zero_matrix(2);
  nan_mat(0, 0) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(validate_matrix(nan_mat), InvalidArgument);

  CHECK_THROWS_AS(zero_matrix(kDimCap + 1), InvalidArgument);

  const auto rows = std::vector<std::vector<Complex>>{
      {Complex(1, 0), Complex(0, 1)}, {Complex(0, -1), Complex(2, 0)}};
  const CMatrix m = matrix_from_rows(rows);
  CHECK(m(0, 1) == Complex(0, 1));
  CHECK(m(1, 0) == Complex(0, -1));
}

TEST_CASE("hermitian_eig on fixed inputs") {
  SUBCASE("identity") {
    const HermitianEigen e = hermitian_eig(identity_matrix(2));
    CHECK(e.values(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e.values(1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((e.vectors.adjoint() * e.vectors - identity_matrix(2)).norm() < 1e-12);
  }
  SUBCASE("symmetry-forced spectrum of [[0,1],[1,0]]") {
    CMatrix a = zero_matrix(2);
    a(0, 1) = 1.0;
    a(1, 0) = 1.0;
    const HermitianEigen e = hermitian_eig(a);
    CHECK(e.values(0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(e.values(1) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("rejects a non-Hermitian matrix") {
    CHECK_THROWS_AS(hermitian_eig(jordan_block(2)), NotHermitian);
  }
  SUBCASE("accepts a 1e-14 Hermitian perturbation, rejects 1e-8") {
    Rng rng(11, "herm-tol", 0);
    CMatrix a = random_hermitian(4, rng);
    CMatrix nudged = a;
    nudged(0, 1) += Complex(0.0, 1e-14);
    CHECK_NOTHROW(hermitian_eig(nudged));
    nudged(0, 1) += Complex(1e-8, 0.0);
    CHECK_THROWS_AS(hermitian_eig(nudged), NotHermitian);
  }
}

TEST_CASE("hermitian_eig reconstruction contract over random draws") {
  for (std::uint64_t t = 0; t < 24; ++t) {
    Rng rng(101, "eig-recon", t);
    const int n = rng.uniform_int(1, 8);
    const CMatrix a = random_hermitian(n, rng);
    const HermitianEigen e = hermitian_eig(a);
    const double scale = std::max(1.0, operator_norm(a));
    CHECK(operator_norm(e.reconstruct() - a) <= 1e-12 * scale);
    CHECK(operator_norm(e.vectors.adjoint() * e.vectors -
                        identity_matrix(n)) <= 1e-12);
    for (int i = 0; i + 1 < n; ++i) CHECK(e.values(i) <= e.values(i + 1));
  }
}

TEST_CASE("eigenvector phase convention is deterministic") {
  Rng rng(77, "phase", 3);
  const CMatrix a = random_hermitian(6, rng);
  const HermitianEigen e1 = hermitian_eig(a);
  const HermitianEigen e2 = hermitian_eig(a);
  CHECK((e1.vectors - e2.vectors).norm() == 0.0);
  for (int j = 0; j < 6; ++j) {
    // first significant component real nonnegative
    const double colmax = e1.vectors.col(j).cwiseAbs().maxCoeff();
    for (int i = 0; i < 6; ++i) {
      const Complex z = e1.vectors(i, j);
      if (std::abs(z) > 1e-12 * colmax) {
        CHECK(z.imag() == 0.0);
        CHECK(z.real() >= 0.0);
        break;
      }
    }
  }
}

TEST_CASE("svd on fixed inputs") {
  SUBCASE("diagonal with signs") {
    CMatrix a = zero_matrix(2);
    a(0, 0) = 3.0;
    a(1, 1) = -4.0;
    const SingularTriple s = svd(a);
    CHECK(s.sigma(0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(s.sigma(1) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(operator_norm(a) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(ell(a) == doctest::Approx(3.0).epsilon(1e-14));
  }
  SUBCASE("rank-one nilpotent") {
    const SingularTriple s = svd(jordan_block(2));
    CHECK(s.sigma(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.sigma(1) == doctest::Approx(0.0).epsilon(1e-14));
  }
}

TEST_CASE("svd cross-checks against the eigendecomposition of A*A") {
  for (std::uint64_t t = 0; t < 12; ++t) {
    Rng rng(2024, "svd-cross", t);
    const CMatrix a = random_cmatrix(6, rng);
    const SingularTriple s = svd(a);
    const double scale = std::max(1.0, s.sigma(0));
    CHECK(operator_norm(s.u * s.sigma.asDiagonal() * s.v.adjoint() - a) <=
          1e-12 * scale);
    CHECK(operator_norm(s.u.adjoint() * s.u - identity_matrix(6)) <= 1e-12);
    CHECK(operator_norm(s.v.adjoint() * s.v - identity_matrix(6)) <= 1e-12);
    // sigma_1^2 equals the top eigenvalue of A^* A (independent route)
    const HermitianEigen e = hermitian_eig(CMatrix(a.adjoint() * a));
    CHECK(s.sigma(0) * s.sigma(0) ==
          doctest::Approx(e.values(5)).epsilon(1e-10));
  }
}

TEST_CASE("operator norm dominates the sampled quadratic sup") {
  Rng rng(5, "norm-sup", 0);
  const CMatrix a = random_cmatrix(5, rng);
  const double nrm = operator_norm(a);
  const double low = ell(a);
  double sup = 0.0;
  double inf = 1e300;
  for (int i = 0; i < 1000; ++i) {
    CVector x(5);
    for (int j = 0; j < 5; ++j) x(j) = rng.cnormal();
    x.normalize();
    const double v = (a * x).norm();
    sup = std::max(sup, v);
    inf = std::min(inf, v);
  }
  CHECK(sup <= nrm + 1e-8);
  CHECK(low <= inf + 1e-8);
  // equality approached at the last right-singular vector
  const SingularTriple s = svd(a);
  CHECK((a * s.v.col(4)).norm() == doctest::Approx(low).epsilon(1e-10));
}

TEST_CASE("polar decomposition") {
  SUBCASE("already positive") {
    Rng rng(8, "polar-psd", 0);
    const CMatrix g = random_cmatrix(4, rng);
    const CMatrix a = g.adjoint() * g + 0.3 * identity_matrix(4);
    const PolarFactors pf = polar(a);
    CHECK(operator_norm(pf.unitary - identity_matrix(4)) <= 1e-10);
  }
  SUBCASE("negative identity") {
    const CMatrix a = -identity_matrix(3);
    const PolarFactors pf = polar(a);
    CHECK(operator_norm(pf.unitary + identity_matrix(3)) <= 1e-10);
    CHECK(operator_norm(pf.modulus - identity_matrix(3)) <= 1e-10);
  }
  SUBCASE("random invertible reconstruction") {
    for (std::uint64_t t = 0; t < 8; ++t) {
      Rng rng(13, "polar-recon", t);
      CMatrix a = random_cmatrix(5, rng) + 2.0 * identity_matrix(5);
      const PolarFactors pf = polar(a);
      const double scale = std::max(1.0, operator_norm(a));
      CHECK(operator_norm(pf.unitary.adjoint() * pf.unitary -
                          identity_matrix(5)) <= 1e-10);
      CHECK(operator_norm(pf.unitary * pf.modulus - a) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("operator modulus") {
  SUBCASE("jordan block") {
    const CMatrix j2 = jordan_block(2);
    CMatrix want = zero_matrix(2);
    want(1, 1) = 1.0;
    CHECK(operator_norm(abs_op(j2) - want) <= 1e-12);
    CMatrix want_adj = zero_matrix(2);
    want_adj(0, 0) = 1.0;
    CHECK(operator_norm(abs_adjoint(j2) - want_adj) <= 1e-12);
  }
  SUBCASE("complex scalar multiple of the identity") {
    const Complex c(1.5, -2.0);
    const CMatrix a = c * identity_matrix(3);
    CHECK(operator_norm(abs_op(a) - std::abs(c) * identity_matrix(3)) <= 1e-12);
  }
  SUBCASE("|A|^2 = A^*A and spectrum matches the singular values") {
    for (std::uint64_t t = 0; t < 8; ++t) {
      Rng rng(99, "absop", t);
      const CMatrix a = random_cmatrix(6, rng);
      const CMatrix mod = abs_op(a);
      const double n2 = std::max(1.0, operator_norm(a));
      CHECK(operator_norm(mod * mod - a.adjoint() * a) <= 1e-10 * n2 * n2);
      const HermitianEigen e = hermitian_eig(mod);
      const SingularTriple s = svd(a);
      for (int i = 0; i < 6; ++i) {
        CHECK(e.values(5 - i) == doctest::Approx(s.sigma(i)).epsilon(1e-10));
      }
    }
  }
  SUBCASE("unitary invariance |UA| = |A|") {
    Rng rng(7, "absop-unitary", 1);
    const CMatrix a = random_cmatrix(5, rng);
    CMatrix g = random_cmatrix(5, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    const CMatrix u = qr.householderQ();
    CHECK(operator_norm(abs_op(u * a) - abs_op(a)) <= 1e-10);
  }
}

TEST_CASE("mat_power") {
  Rng rng(3, "matpow", 0);
  const CMatrix a = random_cmatrix(4, rng);
  CHECK(operator_norm(mat_power(a, 0) - identity_matrix(4)) == 0.0);
  CHECK(operator_norm(mat_power(a, 1) - a) == 0.0);
  CHECK(operator_norm(mat_power(jordan_block(2), 2)) == 0.0);
  CHECK(operator_norm(mat_power(a, 5) - a * a * a * a * a) <=
        1e-12 * std::pow(operator_norm(a), 5));
  CHECK_THROWS_AS(mat_power(a, -1), InvalidArgument);
}

TEST_CASE("spectral radius") {
  SUBCASE("diagonal") {
    CMatrix a = zero_matrix(3);
    a(0, 0) = 1.0;
    a(1, 1) = -3.0;
    a(2, 2) = Complex(0.0, 2.0);
    const SpectralRadiusResult r = spectral_radius(a);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(3.0).epsilon(1e-6));
  }
  SUBCASE("nilpotent") {
    const SpectralRadiusResult r = spectral_radius(jordan_block(2));
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(0.0).epsilon(1e-5));
  }
  SUBCASE("random unitary has radius 1") {
    for (std::uint64_t t = 0; t < 6; ++t) {
      Rng rng(55, "spec-unitary", t);
      const CMatrix u = haar_unitary(4, rng);
      const SpectralRadiusResult r = spectral_radius(u);
      CHECK(r.converged);
      CHECK(r.value == doctest::Approx(1.0).epsilon(1e-5));
    }
  }
  SUBCASE("hermitian radius equals the norm") {
    for (std::uint64_t t = 0; t < 8; ++t) {
      Rng rng(56, "spec-herm", t);
      const CMatrix a = random_hermitian(5, rng);
      const SpectralRadiusResult r = spectral_radius(a);
      CHECK(r.converged);
      CHECK(r.value ==
            doctest::Approx(operator_norm(a)).epsilon(1e-5));
    }
  }
}

TEST_CASE("small hermitian extremes agree with the full solver") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    Rng rng(31337, "smallherm", t);
    const int n = rng.uniform_int(1, 12);
    const CMatrix a = random_hermitian(n, rng);
    smallherm::HermExtremes ext(n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) ext.buffer()[i + j * n] = a(i, j);
    ext.reduce();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(a, Eigen::EigenvaluesOnly);
    const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    CHECK(std::abs(ext.lambda_max() - es.eigenvalues()(n - 1)) <= 1e-12 * scale);
    CHECK(std::abs(ext.lambda_min() - es.eigenvalues()(0)) <= 1e-12 * scale);
  }
}
