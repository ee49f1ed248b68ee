#include "numrad/decomp.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "numrad/smallherm.hpp"

namespace numrad {

namespace {

// Phase convention: rotate the column so its first significant component is
// real nonnegative. Returns the phase applied.
Complex pin_phase(Eigen::Ref<CVector> col) {
  const double colmax = col.cwiseAbs().maxCoeff();
  if (colmax == 0.0) return Complex(1.0, 0.0);
  for (Eigen::Index i = 0; i < col.size(); ++i) {
    const double m = std::abs(col(i));
    if (m > 1e-12 * colmax) {
      const Complex phase = std::conj(col(i)) / m;
      col *= phase;
      col(i) = Complex(m, 0.0);  // kill the rounding residue in Im
      return phase;
    }
  }
  return Complex(1.0, 0.0);
}

RVector singular_values_only(const CMatrix& a) {
  Eigen::JacobiSVD<CMatrix> s(a);
  return s.singularValues();
}

// ||a|| via the Hermitian extreme of [0 a; a^* 0] would be overkill; the
// sigma-only Jacobi sweep is cheap at the dimensions this toolkit allows.
double opnorm_impl(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return singular_values_only(a)(0);
}

}  // namespace

CMatrix HermitianEigen::reconstruct() const {
  return vectors * values.asDiagonal() * vectors.adjoint();
}

double operator_norm(const CMatrix& a) {
  validate_matrix(a);
  return opnorm_impl(a);
}

double ell(const CMatrix& a) {
  validate_matrix(a);
  const RVector s = singular_values_only(a);
  return s(s.size() - 1);
}

double norm_scale(const CMatrix& a) { return std::max(1.0, opnorm_impl(a)); }

HermitianEigen hermitian_eig(const CMatrix& a) {
  validate_matrix(a);
  const CMatrix defect = a - a.adjoint();
  if (defect.cwiseAbs().maxCoeff() != 0.0) {
    const double dev = opnorm_impl(defect);
    if (dev > 1e-12 * norm_scale(a)) {
      throw NotHermitian("matrix deviates from Hermitian by " + std::to_string(dev));
    }
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a);
  if (es.info() != Eigen::Success) {
    throw NoConvergence("hermitian eigensolver did not converge");
  }
  HermitianEigen out{es.eigenvalues(), es.eigenvectors()};
  for (Eigen::Index j = 0; j < out.vectors.cols(); ++j) {
    pin_phase(out.vectors.col(j));
  }
  return out;
}

SingularTriple svd(const CMatrix& a) {
  validate_matrix(a);
  Eigen::JacobiSVD<CMatrix> s(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (s.info() != Eigen::Success) throw NoConvergence("svd did not converge");
  SingularTriple out{s.matrixU(), s.singularValues(), s.matrixV()};
  for (Eigen::Index j = 0; j < out.v.cols(); ++j) {
    const Complex phase = pin_phase(out.v.col(j));
    out.u.col(j) *= phase;
  }
  return out;
}

PolarFactors polar(const CMatrix& a) {
  const SingularTriple s = svd(a);
  PolarFactors out;
  out.unitary = s.u * s.v.adjoint();
  out.modulus = s.v * s.sigma.asDiagonal() * s.v.adjoint();
  return out;
}

CMatrix abs_op(const CMatrix& a) {
  const SingularTriple s = svd(a);
  return s.v * s.sigma.asDiagonal() * s.v.adjoint();
}

CMatrix abs_adjoint(const CMatrix& a) {
  const SingularTriple s = svd(a);
  return s.u * s.sigma.asDiagonal() * s.u.adjoint();
}

CMatrix mat_power(const CMatrix& a, int k) {
  validate_matrix(a);
  if (k < 0) throw InvalidArgument("negative power " + std::to_string(k));
  CMatrix result = identity_matrix(static_cast<int>(a.rows()));
  CMatrix base = a;
  int e = k;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

SpectralRadiusResult spectral_radius(const CMatrix& a) {
  validate_matrix(a);
  CMatrix m = a;
  double log_acc = 0.0;  // accumulated log-scale, already divided by 2^k
  double prev = -1.0;
  for (int k = 0; k <= 40; ++k) {
    const double s = opnorm_impl(m);
    if (s < 1e-300) return {0.0, true};
    log_acc += std::log(s) / std::exp2(k);
    const double est = std::exp(log_acc);
    if (k >= 1 && std::abs(est - prev) <= 1e-6 * est) return {est, true};
    prev = est;
    if (k < 40) {
      m /= s;
      m = m * m;
    }
  }
  return {prev, false};
}

}  // namespace numrad
