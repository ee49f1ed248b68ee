#pragma once

#include "numrad/matrix.hpp"

namespace numrad {

// Eigenvalues ascending, eigenvector columns unitary. The pair realizes the
// discrete spectral measure: atoms values[i] with masses |<x, v_i>|^2.
struct HermitianEigen {
  RVector values;
  CMatrix vectors;

  CMatrix reconstruct() const;
};

// a = u * diag(sigma) * v^*, sigma descending and nonnegative.
struct SingularTriple {
  CMatrix u;
  RVector sigma;
  CMatrix v;
};

// a = unitary * modulus with modulus Hermitian PSD.
struct PolarFactors {
  CMatrix unitary;
  CMatrix modulus;
};

struct SpectralRadiusResult {
  double value = 0.0;
  bool converged = true;
};

// Hermitian eigendecomposition. Throws NotHermitian if
// ||a - a^*|| > 1e-12 * max(1, ||a||). Eigenvector phases are pinned: the
// first significant component of each column is made real nonnegative.
HermitianEigen hermitian_eig(const CMatrix& a);

// Full SVD with deterministic column phases (same pinning rule, applied to
// v and mirrored into u so the product is unchanged).
SingularTriple svd(const CMatrix& a);

// Largest / smallest singular value.
double operator_norm(const CMatrix& a);
double ell(const CMatrix& a);

// Polar decomposition a = U |a| with U = W V^* completed through the SVD on
// singular inputs.
PolarFactors polar(const CMatrix& a);

// Operator modulus |a| = (a^* a)^{1/2} and |a^*| = (a a^*)^{1/2}.
CMatrix abs_op(const CMatrix& a);
CMatrix abs_adjoint(const CMatrix& a);

// a^k by repeated squaring, a^0 = I.
CMatrix mat_power(const CMatrix& a, int k);

// Gelfand iteration r = lim ||a^{2^k}||^{1/2^k} with per-step
// renormalization; stops when two successive estimates agree within 1e-6
// relative or k = 40 (result flagged unconverged in that case). Accuracy is
// about 1e-5 relative for diagonalizable inputs.
SpectralRadiusResult spectral_radius(const CMatrix& a);

// max(1, sigma_1(a)), the scale most tolerances are expressed against.
double norm_scale(const CMatrix& a);

}  // namespace numrad
