#pragma once

#include <vector>

#include "numrad/matrix.hpp"

namespace numrad {

struct WminResult {
  double value = 0.0;
  // Set when the support maximum lies in [-1e-10, 0]: the origin sits on
  // the boundary of the numerical range within tolerance.
  bool boundary = false;
};

struct BoundaryPoint {
  double theta = 0.0;
  Complex z;
};

// w(t) = max_theta lambda_max((e^{i theta} t + e^{-i theta} t^*)/2) on a
// 1024-point grid with golden-section refinement (theta tolerance 1e-10)
// around the top 8 grid maxima.
double numerical_radius(const CMatrix& t);

// Distance from the origin to W(t) through the support function:
// max(0, max_theta lambda_min(Re(e^{-i theta} t))). Same grid/refinement
// scheme as the radius.
WminResult minimal_numerical_radius(const CMatrix& t);

// For each theta_k = 2 pi k / m, the point <t u, u> where u is a top
// eigenvector of Re(e^{-i theta_k} t). All points lie inside W(t); their
// hull approximates it from within. m >= 3.
std::vector<BoundaryPoint> range_boundary(const CMatrix& t, int m);

// Shoelace area of the inscribed polygon from 1024 boundary points.
double range_area(const CMatrix& t);

}  // namespace numrad
