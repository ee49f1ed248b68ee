#include "numrad/matrix.hpp"

#include <cmath>

namespace numrad {

void validate_matrix(const CMatrix& a) {
  if (a.rows() != a.cols()) {
    throw InvalidArgument("matrix must be square, got " +
                          std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()));
  }
  if (a.rows() < 1) throw InvalidArgument("matrix dimension must be >= 1");
  if (a.rows() > kDimCap) {
    throw InvalidArgument("dimension " + std::to_string(a.rows()) +
                          " exceeds cap " + std::to_string(kDimCap));
  }
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Complex& z = a(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InvalidArgument("matrix entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ") is not finite");
      }
    }
  }
}

CMatrix zero_matrix(int n) {
  if (n < 1 || n > kDimCap) throw InvalidArgument("bad dimension " + std::to_string(n));
  return CMatrix::Zero(n, n);
}

CMatrix identity_matrix(int n) {
  if (n < 1 || n > kDimCap) throw InvalidArgument("bad dimension " + std::to_string(n));
  return CMatrix::Identity(n, n);
}

CMatrix matrix_from_rows(const std::vector<std::vector<Complex>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1 || n > kDimCap) throw InvalidArgument("bad row count " + std::to_string(n));
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw InvalidArgument("row " + std::to_string(i) + " has length " +
                            std::to_string(rows[i].size()) + ", expected " +
                            std::to_string(n));
    }
    for (int j = 0; j < n; ++j) a(i, j) = rows[i][j];
  }
  validate_matrix(a);
  return a;
}

CMatrix jordan_block(int n) {
  CMatrix j = zero_matrix(n);
  for (int i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
  return j;
}

StateVector::StateVector(CVector v) : x(std::move(v)) {
  if (x.size() < 1) throw InvalidArgument("empty state vector");
  const double nrm = x.norm();
  if (!std::isfinite(nrm) || std::abs(nrm - 1.0) > 1e-12) {
    throw InvalidArgument("state vector norm " + std::to_string(nrm) +
                          " is not 1 within 1e-12");
  }
}

StateVector make_state(const CVector& v) {
  const double nrm = v.norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm)) {
    throw InvalidArgument("cannot normalize zero or non-finite vector");
  }
  return StateVector(v / nrm);
}

}  // namespace numrad
