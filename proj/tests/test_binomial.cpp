#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "numrad/binomial.hpp"
#include "numrad/decomp.hpp"
#include "numrad/ensembles.hpp"
#include "numrad/rng.hpp"

using namespace numrad;

namespace {

CMatrix random_cmatrix(int n, Rng& rng) {
  return sample_matrix(Ensemble::ginibre, n, rng);
}

// (a + d_b)^k applied to the identity, iterated directly; the oracle the
// term construction A^k + D_k is checked against.
CMatrix lifted_power_of_one(const CMatrix& a, const CMatrix& b, int k) {
  CMatrix e = identity_matrix(static_cast<int>(a.rows()));
  for (int i = 0; i < k; ++i) e = a * e + b * e - e * b;
  return e;
}

}  // namespace

TEST_CASE("commutator basics") {
  Rng rng(41, "comm", 0);
  const CMatrix a = random_cmatrix(4, rng);
  const CMatrix x = random_cmatrix(4, rng);
  CHECK(operator_norm(commutator(a, a)) == 0.0);
  CHECK(operator_norm(commutator(identity_matrix(4), x)) == 0.0);
  CHECK(operator_norm(commutator(a, x) + commutator(x, a)) <=
        1e-14 * norm_scale(a) * norm_scale(x));
  CHECK_THROWS_AS(commutator(a, identity_matrix(3)), DimensionMismatch);

  // shift pair: [raise, lower] = diag(1, -1)
  const CMatrix up = jordan_block(2);
  const CMatrix down = up.adjoint();
  CMatrix want = zero_matrix(2);
  want(0, 0) = 1.0;
  want(1, 1) = -1.0;
  CHECK(operator_norm(commutator(up, down) - want) == 0.0);
}

TEST_CASE("derivation and Jacobi properties") {
  for (std::uint64_t t = 0; t < 12; ++t) {
    Rng rng(42, "deriv", t);
    const int n = rng.uniform_int(2, 6);
    const CMatrix a = random_cmatrix(n, rng);
    const CMatrix b = random_cmatrix(n, rng);
    const CMatrix c = random_cmatrix(n, rng);
    const CMatrix x = random_cmatrix(n, rng);
    const CMatrix y = random_cmatrix(n, rng);
    const double scale = std::pow(
        std::max({norm_scale(a), norm_scale(b), norm_scale(c), norm_scale(x),
                  norm_scale(y)}),
        3);

    // Leibniz rule d_a(xy) = d_a(x) y + x d_a(y)
    CHECK(operator_norm(commutator(a, CMatrix(x * y)) -
                        (commutator(a, x) * y + x * commutator(a, y))) <=
          1e-10 * scale);
    // (a - d_a) x = x a
    CHECK(operator_norm(CMatrix(a * x) - commutator(a, x) - CMatrix(x * a)) <=
          1e-10 * scale);
    // Jacobi identity
    const CMatrix jac = commutator(a, commutator(b, c)) +
                        commutator(b, commutator(c, a)) +
                        commutator(c, commutator(a, b));
    CHECK(operator_norm(jac) <= 1e-10 * scale);
  }
}

TEST_CASE("essential part by the recurrence") {
  Rng rng(43, "ess", 0);
  const CMatrix a = random_cmatrix(4, rng);
  const CMatrix b = random_cmatrix(4, rng);

  CHECK(operator_norm(essential_part(b, a, 0)) == 0.0);
  CHECK(operator_norm(essential_part(b, a, 1)) == 0.0);  // d_b(1) = 0
  CHECK(operator_norm(essential_part(b, a, 2) - (b * a - a * b)) <= 1e-12);

  // cross-check: (a + d_b)^k (1) = a^k + D_k
  for (int k = 0; k <= 6; ++k) {
    const CMatrix lhs = lifted_power_of_one(a, b, k);
    const CMatrix rhs = mat_power(a, k) + essential_part(b, a, k);
    const double scale = std::pow(norm_scale(a) + 2.0 * norm_scale(b), k);
    CHECK(operator_norm(lhs - rhs) <= 1e-10 * std::max(1.0, scale));
  }
  CHECK_THROWS_AS(essential_part(b, a, 33), CapExceeded);
  CHECK_THROWS_AS(essential_part(b, a, -1), InvalidArgument);
}

TEST_CASE("essential part vanishes for commuting operators") {
  for (std::uint64_t t = 0; t < 8; ++t) {
    Rng rng(44, "ess-comm", t);
    OperatorInstance inst =
        sample_instance(Shape::pair_commuting, Ensemble::commuting,
                        rng.uniform_int(2, 6), 0, rng);
    const CMatrix& a = inst.matrices[0];
    const CMatrix& b = inst.matrices[1];
    for (int n = 1; n <= 6; ++n) {
      const double scale =
          std::max(1.0, std::pow(norm_scale(a) + 2.0 * norm_scale(b), n));
      CHECK(operator_norm(essential_part(b, a, n)) <=
            n * std::exp2(n) * 1e-10 * scale);
    }
  }
}

TEST_CASE("binomial coefficients are exact") {
  CHECK(binomial_coefficient(0, 0) == 1);
  CHECK(binomial_coefficient(5, 2) == 10);
  CHECK(binomial_coefficient(32, 16) == 601080390ULL);
  CHECK_THROWS_AS(binomial_coefficient(33, 1), InvalidArgument);
  CHECK_THROWS_AS(binomial_coefficient(4, 5), InvalidArgument);
}

TEST_CASE("binomial expansion") {
  SUBCASE("first order is the plain sum") {
    Rng rng(45, "exp1", 0);
    const CMatrix a = random_cmatrix(3, rng);
    const CMatrix b = random_cmatrix(3, rng);
    const BinomialExpansion e = expand_binomial(a, b, 1);
    CHECK(e.terms.size() == 2);
    CHECK(operator_norm(e.sum - (a + b)) <= 1e-14 * (norm_scale(a) + norm_scale(b)));
    CHECK(operator_norm(e.terms[0] - b) == 0.0);  // {1} b
    CHECK(operator_norm(e.terms[1] - a) == 0.0);  // {a + D_1} = a
  }
  SUBCASE("commuting pairs collapse to the classical terms") {
    Rng rng(46, "exp-comm", 1);
    OperatorInstance inst = sample_instance(Shape::pair_commuting,
                                            Ensemble::commuting, 4, 0, rng);
    const CMatrix& a = inst.matrices[0];
    const CMatrix& b = inst.matrices[1];
    const int n = 4;
    const BinomialExpansion e = expand_binomial(a, b, n);
    for (int k = 0; k <= n; ++k) {
      const CMatrix classical = mat_power(a, k) * mat_power(b, n - k);
      const double scale = std::max(
          1.0, std::pow(norm_scale(a) + 2.0 * norm_scale(b), n));
      CHECK(operator_norm(e.terms[k] - classical) <= 1e-8 * scale);
    }
  }
  SUBCASE("random non-commuting pair reproduces the direct cube") {
    for (std::uint64_t t = 0; t < 10; ++t) {
      Rng rng(47, "exp3", t);
      const CMatrix a = random_cmatrix(4, rng);
      const CMatrix b = random_cmatrix(4, rng);
      const BinomialExpansion e = expand_binomial(a, b, 3);
      const CMatrix direct = mat_power(a + b, 3);
      CHECK(operator_norm(e.sum - direct) <=
            1e-10 * std::max(1.0, operator_norm(direct)));
    }
  }
  SUBCASE("identity across orders and dimensions") {
    for (std::uint64_t t = 0; t < 20; ++t) {
      Rng rng(48, "exp-id", t);
      const int dim = rng.uniform_int(2, 8);
      const int n = rng.uniform_int(0, 8);
      const CMatrix a = random_cmatrix(dim, rng);
      const CMatrix b = random_cmatrix(dim, rng);
      const BinomialExpansion e = expand_binomial(a, b, n);
      const double bound =
          std::max(1.0, std::pow(operator_norm(a) + operator_norm(b),
                                 static_cast<double>(n)));
      CHECK(operator_norm(e.sum - mat_power(a + b, n)) <= 1e-9 * bound);
    }
  }
  SUBCASE("caps and dimension checks") {
    Rng rng(49, "exp-cap", 0);
    const CMatrix a = random_cmatrix(2, rng);
    CHECK_THROWS_AS(expand_binomial(a, identity_matrix(3), 2),
                    DimensionMismatch);
    CHECK_THROWS_AS(expand_binomial(a, a, 33), CapExceeded);
  }
}
