#pragma once

#include <cstdint>
#include <vector>

#include "numrad/matrix.hpp"

namespace numrad {

// [a, x] = a x - x a.
CMatrix commutator(const CMatrix& a, const CMatrix& x);

// Essential non-commutative part D_n(b, a), defined by the recurrence
// D_{n+1} = d_b(a^n) + (a + d_b) D_n with D_0 = 0, where (a + d_b) acts on
// a matrix X as aX + bX - Xb. Satisfies (a + d_b)^n(1) = a^n + D_n and
// vanishes identically when a and b commute. n <= 32.
CMatrix essential_part(const CMatrix& b, const CMatrix& a, int n);

// (a + b)^n = sum_k C(n,k) {a^k + D_k(b,a)} b^{n-k}. Terms exclude the
// binomial coefficient; they feed the per-term operator bounds downstream.
struct BinomialExpansion {
  int n = 0;
  std::vector<CMatrix> terms;           // term k = {a^k + D_k(b,a)} b^{n-k}
  std::vector<std::uint64_t> coefficients;  // C(n, k), exact
  CMatrix sum;                          // sum_k C(n,k) * terms[k]
};

BinomialExpansion expand_binomial(const CMatrix& a, const CMatrix& b, int n);

// Exact C(n, k) for n <= 32.
std::uint64_t binomial_coefficient(int n, int k);

}  // namespace numrad
