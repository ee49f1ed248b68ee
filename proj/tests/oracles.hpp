// Test-only oracles, kept independent of the implementation paths they
// check: random-vector sampling of the numerical range, a projected
// gradient minimizer for w_min, and convex-geometry helpers.
#pragma once

#include <algorithm>
#include <cmath>

#include "numrad/matrix.hpp"
#include "numrad/rng.hpp"

namespace numrad::oracles {

inline CVector random_unit(int n, Rng& rng) {
  CVector v(n);
  double nrm2 = 0.0;
  do {
    for (int i = 0; i < n; ++i) v(i) = rng.cnormal();
    nrm2 = v.squaredNorm();
  } while (!(nrm2 > 1e-12));
  return v / std::sqrt(nrm2);
}

// sup over sampled unit vectors of |<Tx, x>|.
inline double sampled_radius(const CMatrix& t, int samples, Rng& rng) {
  const int n = static_cast<int>(t.rows());
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    const CVector x = random_unit(n, rng);
    best = std::max(best, std::abs(inner(t * x, x)));
  }
  return best;
}

// inf over sampled unit vectors of |<Tx, x>|.
inline double sampled_min_radius(const CMatrix& t, int samples, Rng& rng) {
  const int n = static_cast<int>(t.rows());
  double best = 1e300;
  for (int i = 0; i < samples; ++i) {
    const CVector x = random_unit(n, rng);
    best = std::min(best, std::abs(inner(t * x, x)));
  }
  return best;
}

// Projected-gradient minimizer of |<Tx,x>| on the unit sphere with random
// restarts: the cross-check oracle for the support-function w_min. Each of
// the 200 steps starts at step size 0.1 and halves until it decreases the
// objective.
inline double minimizer_wmin(const CMatrix& t, int restarts, Rng& rng) {
  const int n = static_cast<int>(t.rows());
  const CMatrix tadj = t.adjoint();
  double best = 1e300;
  for (int r = 0; r < restarts; ++r) {
    CVector x = random_unit(n, rng);
    double fx = std::norm(inner(t * x, x));
    for (int it = 0; it < 200; ++it) {
      const CVector tx = t * x;
      const Complex q = inner(tx, x);
      // gradient of |x^* T x|^2 with respect to conj(x)
      CVector grad = std::conj(q) * tx + q * (tadj * x);
      grad -= inner(grad, x) * x;  // tangent projection
      const double gn = grad.norm();
      if (gn < 1e-16) break;
      bool moved = false;
      double step = 0.1 / std::max(1.0, gn);
      while (step * gn > 1e-15) {
        CVector xn = x - step * grad;
        xn.normalize();
        const double fn = std::norm(inner(t * xn, xn));
        if (fn < fx) {
          x = xn;
          fx = fn;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
    best = std::min(best, std::sqrt(fx));
  }
  return best;
}

// Signed distance of z from the convex hull boundary of a point set is not
// needed; the acceptance checks only use membership within tolerance for
// polygons given by their vertices (counterclockwise).
inline bool inside_convex_polygon(const Complex& z,
                                  const std::vector<Complex>& ccw_vertices,
                                  double tol) {
  const size_t m = ccw_vertices.size();
  for (size_t i = 0; i < m; ++i) {
    const Complex a = ccw_vertices[i];
    const Complex b = ccw_vertices[(i + 1) % m];
    const double cross = (b.real() - a.real()) * (z.imag() - a.imag()) -
                         (b.imag() - a.imag()) * (z.real() - a.real());
    if (cross < -tol) return false;
  }
  return true;
}

}  // namespace numrad::oracles
