#pragma once

#include <complex>

namespace numrad::smallherm {

// Extreme eigenvalues of small dense Hermitian matrices. Householder
// reduction to a real symmetric tridiagonal followed by Sturm-count
// bisection. This is the workhorse of the theta sweeps, where only the
// largest/smallest eigenvalue is needed and the full solver overhead of a
// general eigensolver would dominate the runtime.
inline constexpr int kMaxDim = 24;

class HermExtremes {
 public:
  explicit HermExtremes(int n);

  // n*n column-major slot the caller fills with a Hermitian matrix.
  std::complex<double>* buffer() { return a_; }

  // Reduces the buffer to tridiagonal form (destroys the buffer).
  void reduce();

  // Valid after reduce().
  double lambda_max() const;
  double lambda_min() const;

 private:
  int count_below(double x) const;  // Sturm count of eigenvalues < x

  int n_;
  std::complex<double> a_[kMaxDim * kMaxDim];
  std::complex<double> v_[kMaxDim];
  std::complex<double> p_[kMaxDim];
  double d_[kMaxDim];
  double e2_[kMaxDim];
  double pivmin_ = 0.0;
  double glo_ = 0.0;  // Gershgorin bounds
  double ghi_ = 0.0;
};

}  // namespace numrad::smallherm
