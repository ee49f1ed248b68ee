#pragma once

#include <Eigen/Dense>
#include <complex>
#include <initializer_list>
#include <vector>

#include "numrad/errors.hpp"

namespace numrad {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Hard dimension cap enforced at every API boundary. The toolkit is a
// desk-scale verifier, not an HPC kernel.
inline constexpr int kDimCap = 64;

// Throws InvalidArgument unless a is square, within the dimension cap and
// free of NaN/Inf entries.
void validate_matrix(const CMatrix& a);

CMatrix zero_matrix(int n);
CMatrix identity_matrix(int n);

// Row-major construction, rows.size() == n, each row of length n.
CMatrix matrix_from_rows(const std::vector<std::vector<Complex>>& rows);

// n x n Jordan nilpotent block (ones on the superdiagonal).
CMatrix jordan_block(int n);

// Unit vector with invariant | ||x|| - 1 | <= 1e-12, the state the
// quadratic form is evaluated at.
struct StateVector {
  CVector x;

  explicit StateVector(CVector v);
  int dim() const { return static_cast<int>(x.size()); }
};

// Normalizes v and wraps it; throws InvalidArgument on the zero vector.
StateVector make_state(const CVector& v);

// Inner product with the convention <x,y> linear in x, conjugate-linear
// in y (so <Tx,x> = x^* T x).
inline Complex inner(const CVector& x, const CVector& y) { return y.dot(x); }

}  // namespace numrad
