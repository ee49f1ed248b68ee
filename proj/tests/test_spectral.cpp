#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "numrad/ensembles.hpp"
#include "numrad/rng.hpp"
#include "numrad/spectral.hpp"

using namespace numrad;

namespace {

CMatrix random_psd(int n, Rng& rng) {
  return sample_matrix(Ensemble::psd, n, rng);
}

StateVector half_half() {
  CVector x(2);
  x << Complex(1, 0), Complex(1, 0);
  return make_state(x);
}

CMatrix diag01() {
  CMatrix a = zero_matrix(2);
  a(1, 1) = 1.0;
  return a;
}

}  // namespace

TEST_CASE("scalar function evaluation") {
  CHECK(ScalarFn::power(0.0).eval(0.0) == 1.0);  // 0^0 := 1
  CHECK(ScalarFn::power(0.5).eval(0.0) == 0.0);
  CHECK(ScalarFn::power(2.0).eval(3.0) == doctest::Approx(9.0));
  CHECK(ScalarFn::polynomial({1, 2, 1}).eval(2.0) == doctest::Approx(9.0));
  CHECK(ScalarFn::exponential().eval(1.0) == doctest::Approx(std::exp(1.0)));
  CHECK(ScalarFn::log1p_fn().eval(0.0) == 0.0);
  CHECK(ScalarFn::identity().eval(7.5) == 7.5);
  CHECK(ScalarFn::constant(-3.0).eval(100.0) == -3.0);
  CHECK(ScalarFn::sqrt_of(ScalarFn::power(2.0)).eval(5.0) ==
        doctest::Approx(5.0));

  CHECK_THROWS_AS(ScalarFn::identity().eval(-1.0), DomainError);
  CHECK_THROWS_AS(ScalarFn::sqrt_of(ScalarFn::constant(-1.0)).eval(1.0),
                  DomainError);
  // finite-or-throw: exp overflows past ~709
  CHECK_THROWS_AS(ScalarFn::exponential().eval(1e12), DomainError);
  CHECK_THROWS_AS(ScalarFn::power(-0.5), InvalidArgument);
}

TEST_CASE("scalar function JSON round trip") {
  const ScalarFn fns[] = {
      ScalarFn::power(0.37),
      ScalarFn::polynomial({0.5, -1.0, 2.0}),
      ScalarFn::exponential(),
      ScalarFn::log1p_fn(),
      ScalarFn::sqrt_of(ScalarFn::polynomial({1.0, 1.0})),
      ScalarFn::identity(),
      ScalarFn::constant(2.5),
  };
  for (const auto& f : fns) {
    const ScalarFn g = ScalarFn::from_json(f.to_json());
    for (double t : {0.0, 0.3, 1.0, 4.7, 100.0}) {
      CHECK(f.eval(t) == g.eval(t));
    }
  }
  CHECK_THROWS_AS(ScalarFn::from_json(nlohmann::json{{"kind", "nope"}}),
                  ParseError);
}

TEST_CASE("power pair satisfies f*g = t exactly in value") {
  const PowerPair pp = power_pair(0.3);
  for (double t : {0.0, 0.5, 2.0, 17.0}) {
    CHECK(pp.f.eval(t) * pp.g.eval(t) == doctest::Approx(t).epsilon(1e-15));
  }
  CHECK_THROWS_AS(power_pair(1.5), InvalidArgument);
}

TEST_CASE("apply_fn") {
  SUBCASE("sqrt of a diagonal") {
    CMatrix a = zero_matrix(2);
    a(0, 0) = 4.0;
    a(1, 1) = 9.0;
    const CMatrix r = apply_fn(ScalarFn::power(0.5), a);
    CHECK(r(0, 0).real() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r(1, 1).real() == doctest::Approx(3.0).epsilon(1e-14));
  }
  SUBCASE("identity function returns the operator") {
    Rng rng(1, "applyfn-id", 0);
    const CMatrix a = random_psd(5, rng);
    CHECK(operator_norm(apply_fn(ScalarFn::identity(), a) - a) <=
          1e-10 * norm_scale(a));
  }
  SUBCASE("polynomial matches the matrix Horner oracle") {
    for (std::uint64_t t = 0; t < 8; ++t) {
      Rng rng(2, "applyfn-poly", t);
      const CMatrix a = random_psd(5, rng);
      const CMatrix got = apply_fn(ScalarFn::polynomial({1, 2, 1}), a);
      const CMatrix want = identity_matrix(5) + 2.0 * a + a * a;
      CHECK(operator_norm(got - want) <= 1e-10 * norm_scale(want));
    }
  }
  SUBCASE("commutes with the argument") {
    Rng rng(3, "applyfn-comm", 0);
    const CMatrix a = random_psd(6, rng);
    const CMatrix f = apply_fn(ScalarFn::exponential(), a);
    CHECK(operator_norm(f * a - a * f) <= 1e-10 * norm_scale(a) * norm_scale(f));
  }
  SUBCASE("rejects indefinite input") {
    CMatrix a = zero_matrix(2);
    a(0, 0) = 1.0;
    a(1, 1) = -1.0;
    CHECK_THROWS_AS(apply_fn(ScalarFn::power(0.5), a), NotPsd);
  }
  SUBCASE("clamps tiny negative eigenvalues") {
    CMatrix a = zero_matrix(2);
    a(0, 0) = 1.0;
    a(1, 1) = -1e-14;
    CHECK_NOTHROW(apply_fn(ScalarFn::power(0.5), a));
  }
  SUBCASE("sqrt_of raises on a negative inner value over the spectrum") {
    CMatrix a = identity_matrix(2) * 3.0;
    // inner value 1 - t is negative at t = 3
    CHECK_THROWS_AS(
        apply_fn(ScalarFn::sqrt_of(ScalarFn::polynomial({1.0, -1.0})), a),
        DomainError);
  }
}

TEST_CASE("quadratic form") {
  CHECK(qform(identity_matrix(3), make_state(CVector::Ones(3))).real() ==
        doctest::Approx(1.0).epsilon(1e-14));
  CVector e1(2);
  e1 << 1.0, 0.0;
  CHECK(std::abs(qform(diag01(), StateVector(e1))) <= 1e-15);
  CHECK(qform(diag01(), half_half()).real() ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(qform(identity_matrix(3), half_half()), DimensionMismatch);
  // real within 1e-12 * ||M|| for Hermitian M
  Rng rng(4, "qform-real", 0);
  const CMatrix a = random_psd(6, rng);
  const StateVector x = make_state([&] {
    CVector v(6);
    for (int i = 0; i < 6; ++i) v(i) = rng.cnormal();
    return v;
  }());
  CHECK(std::abs(qform(a, x).imag()) <= 1e-12 * operator_norm(a));
}

TEST_CASE("Chebyshev functional on the two-atom example") {
  const CMatrix a = diag01();
  const StateVector x = half_half();
  const ScalarFn id = ScalarFn::identity();
  CHECK(cheb_functional(id, id, a, x) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(cheb_double_sum(id, id, a, x) == doctest::Approx(0.25).epsilon(1e-12));

  // eigenvector state: point mass, zero covariance for any pair
  CVector e2(2);
  e2 << 0.0, 1.0;
  CHECK(std::abs(cheb_functional(ScalarFn::exponential(), id, a,
                                 StateVector(e2))) <= 1e-12);

  // constants are uncorrelated with everything
  CHECK(std::abs(cheb_functional(ScalarFn::constant(3.0),
                                 ScalarFn::power(2.0), a, x)) <= 1e-12);

  // single eigenvalue: all spectral gaps vanish
  CHECK(std::abs(cheb_double_sum(ScalarFn::exponential(), id,
                                 identity_matrix(3),
                                 make_state(CVector::Ones(3)))) <= 1e-15);
}

TEST_CASE("both Chebyshev routes agree over random draws") {
  for (std::uint64_t t = 0; t < 60; ++t) {
    Rng rng(1001, "cheb-agree", t);
    const int n = rng.uniform_int(2, 10);
    const CMatrix a = random_psd(n, rng);
    const StateVector x = make_state([&] {
      CVector v(n);
      for (int i = 0; i < n; ++i) v(i) = rng.cnormal();
      return v;
    }());
    const PowerPair pp = power_pair(rng.uniform(0.0, 1.0));
    const double c1 = cheb_functional(pp.f, pp.g, a, x);
    const double c2 = cheb_double_sum(pp.f, pp.g, a, x);
    const double scale =
        std::max(1.0, operator_norm(apply_fn(pp.f, a)) *
                          operator_norm(apply_fn(pp.g, a)));
    CHECK(std::abs(c1 - c2) <= 1e-10 * scale);
  }
}

TEST_CASE("variance form is nonnegative") {
  for (std::uint64_t t = 0; t < 30; ++t) {
    Rng rng(1002, "cheb-var", t);
    const int n = rng.uniform_int(2, 8);
    const CMatrix a = random_psd(n, rng);
    const StateVector x = make_state([&] {
      CVector v(n);
      for (int i = 0; i < n; ++i) v(i) = rng.cnormal();
      return v;
    }());
    const ScalarFn f = ScalarFn::power(rng.uniform(0.0, 2.0));
    CHECK(cheb_double_sum(f, f, a, x) >= 0.0);
    CHECK(cheb_functional(f, f, a, x) >= -1e-12 * norm_scale(a));
  }
}

TEST_CASE("pre-Gruss slack") {
  SUBCASE("equal functions mean Cauchy-Schwarz equality") {
    Rng rng(5, "gruss-eq", 0);
    const CMatrix a = random_psd(4, rng);
    const StateVector x = make_state([&] {
      CVector v(4);
      for (int i = 0; i < 4; ++i) v(i) = rng.cnormal();
      return v;
    }());
    const ScalarFn f = ScalarFn::power(0.7);
    CHECK(std::abs(pre_gruss_slack(f, f, a, x)) <= 1e-10 * norm_scale(a));
  }
  SUBCASE("two-atom equality case (t, t^2)") {
    CHECK(std::abs(pre_gruss_slack(ScalarFn::identity(), ScalarFn::power(2.0),
                                   diag01(), half_half())) <= 1e-12);
  }
  SUBCASE("random power pairs stay nonnegative") {
    for (std::uint64_t t = 0; t < 40; ++t) {
      Rng rng(1003, "gruss-pos", t);
      const CMatrix a = random_psd(6, rng);
      const StateVector x = make_state([&] {
        CVector v(6);
        for (int i = 0; i < 6; ++i) v(i) = rng.cnormal();
        return v;
      }());
      const PowerPair pp = power_pair(0.3);
      CHECK(pre_gruss_slack(pp.f, pp.g, a, x) >= -1e-10 * norm_scale(a));
    }
  }
  SUBCASE("alpha in [0, 1/2] stays nonnegative") {
    for (std::uint64_t t = 0; t < 25; ++t) {
      Rng rng(1004, "gruss-alpha", t);
      const int n = rng.uniform_int(2, 8);
      const CMatrix a = random_psd(n, rng);
      const StateVector x = make_state([&] {
        CVector v(n);
        for (int i = 0; i < n; ++i) v(i) = rng.cnormal();
        return v;
      }());
      const PowerPair pp = power_pair(rng.uniform(0.0, 0.5));
      CHECK(pre_gruss_slack(pp.f, pp.g, a, x) >= -1e-9 * norm_scale(a));
    }
  }
}

TEST_CASE("synchronous and asynchronous monotone pairs have signed covariance") {
  for (std::uint64_t t = 0; t < 30; ++t) {
    Rng rng(1005, "sync", t);
    const int n = rng.uniform_int(2, 8);
    const CMatrix a = random_psd(n, rng);
    const StateVector x = make_state([&] {
      CVector v(n);
      for (int i = 0; i < n; ++i) v(i) = rng.cnormal();
      return v;
    }());
    const ScalarFn f = ScalarFn::power(rng.uniform(0.3, 2.0));
    const ScalarFn g_up = ScalarFn::log1p_fn();
    const ScalarFn g_down = ScalarFn::polynomial({1.0, -1.0});  // 1 - t
    const double scale = norm_scale(a) * norm_scale(a);
    CHECK(cheb_functional(f, g_up, a, x) >= -1e-10 * scale);
    CHECK(cheb_functional(f, g_down, a, x) <= 1e-10 * scale);
  }
}

TEST_CASE("power pair multiplies back to the operator at matrix level") {
  for (std::uint64_t t = 0; t < 20; ++t) {
    Rng rng(1006, "pp-matrix", t);
    const int n = rng.uniform_int(2, 8);
    const CMatrix a = random_psd(n, rng);
    const PowerPair pp = power_pair(rng.uniform(0.0, 1.0));
    const CMatrix prod = apply_fn(pp.f, a) * apply_fn(pp.g, a);
    CHECK(operator_norm(prod - a) <= 1e-10 * norm_scale(a));
  }
}
