#include "numrad/radius.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <utility>

#include "numrad/smallherm.hpp"

namespace numrad {

namespace {

constexpr int kGridPoints = 1024;
constexpr int kRefineCount = 8;
constexpr double kThetaTol = 1e-10;
constexpr double kTwoPi = 6.283185307179586476925286766559;

// Hermitian pencil cos(theta) h + sin(theta) k; every support-function
// sweep reduces to extreme eigenvalues along it.
class Pencil {
 public:
  Pencil(CMatrix h, CMatrix k)
      : h_(std::move(h)), k_(std::move(k)), n_(static_cast<int>(h_.rows())),
        fast_(n_ <= smallherm::kMaxDim ? std::make_unique<smallherm::HermExtremes>(n_)
                                       : nullptr) {}

  // lambda_max and lambda_min at one angle.
  std::pair<double, double> extremes(double theta) const {
    if (reduce_at(theta)) return {fast_->lambda_max(), fast_->lambda_min()};
    const auto& ev = slow_eigenvalues(theta);
    return {ev(n_ - 1), ev(0)};
  }

  double eval_max(double theta) const {
    if (reduce_at(theta)) return fast_->lambda_max();
    return slow_eigenvalues(theta)(n_ - 1);
  }

  double eval_min(double theta) const {
    if (reduce_at(theta)) return fast_->lambda_min();
    return slow_eigenvalues(theta)(0);
  }

 private:
  bool reduce_at(double theta) const {
    if (!fast_) return false;
    const double c = std::cos(theta), s = std::sin(theta);
    Complex* buf = fast_->buffer();
    const Complex* ph = h_.data();
    const Complex* pk = k_.data();
    const int nn = n_ * n_;
    for (int i = 0; i < nn; ++i) buf[i] = c * ph[i] + s * pk[i];
    fast_->reduce();
    return true;
  }

  RVector slow_eigenvalues(double theta) const {
    const double c = std::cos(theta), s = std::sin(theta);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(c * h_ + s * k_,
                                              Eigen::EigenvaluesOnly);
    return es.eigenvalues();
  }

  CMatrix h_;
  CMatrix k_;
  int n_;
  mutable std::unique_ptr<smallherm::HermExtremes> fast_;
};

// Grid of an objective over [0, 2pi). The pencil satisfies
// M(theta + pi) = -M(theta), so 512 reductions cover all 1024 points.
template <typename Objective>
std::vector<double> grid_values(const Pencil& pencil, Objective pick_and_flip) {
  std::vector<double> g(kGridPoints);
  for (int k = 0; k < kGridPoints / 2; ++k) {
    const double theta = kTwoPi * k / kGridPoints;
    const auto [mx, mn] = pencil.extremes(theta);
    const auto [here, there] = pick_and_flip(mx, mn);
    g[k] = here;
    g[k + kGridPoints / 2] = there;
  }
  return g;
}

// Golden-section maximization on [a, b] down to the theta tolerance.
template <typename F>
double golden_max(F f, double a, double b) {
  constexpr double gr = 0.61803398874989484820;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > kThetaTol) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    }
  }
  return std::max(fc, fd);
}

// Shared sweep: grid, then golden refinement around the top local maxima.
template <typename F>
double sweep_max(const std::vector<double>& grid, F f) {
  const int n = static_cast<int>(grid.size());
  std::vector<int> peaks;
  for (int k = 0; k < n; ++k) {
    const double left = grid[(k + n - 1) % n];
    const double right = grid[(k + 1) % n];
    if (grid[k] >= left && grid[k] >= right) peaks.push_back(k);
  }
  const int keep = std::min<int>(kRefineCount, static_cast<int>(peaks.size()));
  std::partial_sort(peaks.begin(), peaks.begin() + keep, peaks.end(),
                    [&](int a, int b) {
                      if (grid[a] != grid[b]) return grid[a] > grid[b];
                      return a < b;
                    });
  double best = *std::max_element(grid.begin(), grid.end());
  const double h = kTwoPi / static_cast<double>(n);
  for (int r = 0; r < keep; ++r) {
    const double center = h * peaks[r];
    best = std::max(best, golden_max(f, center - h, center + h));
  }
  return best;
}

Pencil radius_pencil(const CMatrix& t) {
  const CMatrix h = 0.5 * (t + t.adjoint());
  const CMatrix k = Complex(0.0, 0.5) * (t - t.adjoint());
  return Pencil(h, k);
}

}  // namespace

double numerical_radius(const CMatrix& t) {
  validate_matrix(t);
  // H_theta = (e^{i theta} t + e^{-i theta} t^*)/2 = cos H0 + sin K0.
  const Pencil pencil = radius_pencil(t);
  const auto grid = grid_values(
      pencil, [](double mx, double mn) { return std::pair(mx, -mn); });
  return sweep_max(grid, [&](double th) { return pencil.eval_max(th); });
}

WminResult minimal_numerical_radius(const CMatrix& t) {
  validate_matrix(t);
  // Re(e^{-i theta} t) = cos H0 - sin K0; maximize its smallest eigenvalue.
  const CMatrix h = 0.5 * (t + t.adjoint());
  const CMatrix k = Complex(0.0, -0.5) * (t - t.adjoint());
  const Pencil pencil(h, k);
  const auto grid = grid_values(
      pencil, [](double mx, double mn) { return std::pair(mn, -mx); });
  const double support =
      sweep_max(grid, [&](double th) { return pencil.eval_min(th); });
  WminResult out;
  if (support >= -1e-10 && support <= 0.0) {
    out.value = 0.0;
    out.boundary = true;
  } else {
    out.value = std::max(0.0, support);
  }
  return out;
}

std::vector<BoundaryPoint> range_boundary(const CMatrix& t, int m) {
  validate_matrix(t);
  if (m < 3) throw InvalidArgument("boundary sampling needs at least 3 points");
  const int n = static_cast<int>(t.rows());
  const CMatrix h = 0.5 * (t + t.adjoint());
  const CMatrix k = Complex(0.0, -0.5) * (t - t.adjoint());
  std::vector<BoundaryPoint> points;
  points.reserve(m);
  Eigen::SelfAdjointEigenSolver<CMatrix> es;
  for (int i = 0; i < m; ++i) {
    const double theta = kTwoPi * i / m;
    es.compute(std::cos(theta) * h + std::sin(theta) * k);
    if (es.info() != Eigen::Success) {
      throw NoConvergence("eigensolver failed during boundary sampling");
    }
    const CVector u = es.eigenvectors().col(n - 1);
    points.push_back({theta, inner(t * u, u)});
  }
  return points;
}

double range_area(const CMatrix& t) {
  const auto pts = range_boundary(t, kGridPoints);
  double acc = 0.0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const Complex& a = pts[i].z;
    const Complex& b = pts[(i + 1) % pts.size()].z;
    acc += a.real() * b.imag() - b.real() * a.imag();
  }
  return 0.5 * std::abs(acc);
}

}  // namespace numrad
