#pragma once

#include "numrad/decomp.hpp"
#include "numrad/matrix.hpp"
#include "numrad/scalar_fn.hpp"

namespace numrad {

// f(a) = V diag(f(lambda_i)) V^* for Hermitian PSD a. Eigenvalues in
// [-1e-10 * max(1,||a||), 0) are clamped to 0; anything below that raises
// NotPsd. Domain failures of f propagate as DomainError.
CMatrix apply_fn(const ScalarFn& f, const CMatrix& a);

// <m x, x>.
Complex qform(const CMatrix& m, const StateVector& x);

// C(f,g;a;x) = <f(a)g(a)x,x> - <f(a)x,x><g(a)x,x>, computed through the
// matrix route (apply_fn products and quadratic forms). The imaginary part
// must vanish within 1e-10 * max(1, ||f(a)|| ||g(a)||) and is discarded.
double cheb_functional(const ScalarFn& f, const ScalarFn& g, const CMatrix& a,
                       const StateVector& x);

// Equivalent double-sum form over the discrete spectral measure:
// 1/2 sum_{i,j} (f(l_i)-f(l_j))(g(l_i)-g(l_j)) p_i p_j, p_i = |<x,v_i>|^2.
double cheb_double_sum(const ScalarFn& f, const ScalarFn& g, const CMatrix& a,
                       const StateVector& x);

// C(f,f)^{1/2} C(g,g)^{1/2} - |C(f,g)|. Variances in [-1e-12, 0) clamp to
// zero; below the window raises NumericError.
double pre_gruss_slack(const ScalarFn& f, const ScalarFn& g, const CMatrix& a,
                       const StateVector& x);

}  // namespace numrad
