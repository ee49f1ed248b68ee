#include "numrad/spectral.hpp"

#include <cmath>

namespace numrad {

namespace {

struct AppliedFn {
  CMatrix matrix;
  RVector values;      // f(lambda_i) over the clamped spectrum
  double sup = 0.0;    // max |f(lambda_i)| = ||f(a)||
};

// Shared worker so the Chebyshev routes can reuse one eigendecomposition;
// arithmetic is identical to chaining the public operations.
AppliedFn apply_on_eig(const ScalarFn& f, const HermitianEigen& eig,
                       double scale) {
  const Eigen::Index n = eig.values.size();
  RVector lam = eig.values;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (lam(i) < -1e-10 * scale) {
      throw NotPsd("eigenvalue " + std::to_string(lam(i)) +
                   " below the PSD tolerance");
    }
    if (lam(i) < 0.0) lam(i) = 0.0;
  }
  AppliedFn out;
  out.values.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = f.eval(lam(i));
    out.sup = std::max(out.sup, std::abs(out.values(i)));
  }
  out.matrix = eig.vectors * out.values.asDiagonal() * eig.vectors.adjoint();
  return out;
}

double psd_scale(const HermitianEigen& eig) {
  return std::max(1.0, eig.values.cwiseAbs().maxCoeff());
}

}  // namespace

CMatrix apply_fn(const ScalarFn& f, const CMatrix& a) {
  const HermitianEigen eig = hermitian_eig(a);
  return apply_on_eig(f, eig, psd_scale(eig)).matrix;
}

Complex qform(const CMatrix& m, const StateVector& x) {
  validate_matrix(m);
  if (m.rows() != x.x.size()) {
    throw DimensionMismatch("matrix is " + std::to_string(m.rows()) +
                            "-dimensional, state is " + std::to_string(x.x.size()));
  }
  return inner(m * x.x, x.x);
}

double cheb_functional(const ScalarFn& f, const ScalarFn& g, const CMatrix& a,
                       const StateVector& x) {
  const HermitianEigen eig = hermitian_eig(a);
  const double scale = psd_scale(eig);
  const AppliedFn fa = apply_on_eig(f, eig, scale);
  const AppliedFn ga = apply_on_eig(g, eig, scale);
  const Complex c =
      qform(fa.matrix * ga.matrix, x) - qform(fa.matrix, x) * qform(ga.matrix, x);
  const double tol = 1e-10 * std::max(1.0, fa.sup * ga.sup);
  if (std::abs(c.imag()) > tol) {
    throw NumericError("Chebyshev functional has imaginary part " +
                       std::to_string(c.imag()));
  }
  return c.real();
}

double cheb_double_sum(const ScalarFn& f, const ScalarFn& g, const CMatrix& a,
                       const StateVector& x) {
  const HermitianEigen eig = hermitian_eig(a);
  if (eig.values.size() != x.x.size()) {
    throw DimensionMismatch("state dimension does not match the operator");
  }
  const double scale = psd_scale(eig);
  const AppliedFn fa = apply_on_eig(f, eig, scale);
  const AppliedFn ga = apply_on_eig(g, eig, scale);
  const Eigen::Index n = eig.values.size();
  RVector p(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    p(i) = std::norm(inner(x.x, eig.vectors.col(i)));
  }
  double acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      acc += (fa.values(i) - fa.values(j)) * (ga.values(i) - ga.values(j)) *
             p(i) * p(j);
    }
  }
  return 0.5 * acc;
}

namespace {

double clamp_variance(double v, const char* which) {
  if (v >= 0.0) return v;
  if (v >= -1e-12) return 0.0;
  throw NumericError(std::string("Chebyshev variance C(") + which +
                     ") is " + std::to_string(v) + ", beyond the clamp window");
}

}  // namespace

double pre_gruss_slack(const ScalarFn& f, const ScalarFn& g, const CMatrix& a,
                       const StateVector& x) {
  const double cff = clamp_variance(cheb_functional(f, f, a, x), "f,f");
  const double cgg = clamp_variance(cheb_functional(g, g, a, x), "g,g");
  const double cfg = cheb_functional(f, g, a, x);
  return std::sqrt(cff) * std::sqrt(cgg) - std::abs(cfg);
}

}  // namespace numrad
