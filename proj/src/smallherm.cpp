#include "numrad/smallherm.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace numrad::smallherm {

namespace {
using Cx = std::complex<double>;
constexpr double kSafMin = std::numeric_limits<double>::min();
}  // namespace

HermExtremes::HermExtremes(int n) : n_(n) { assert(n >= 1 && n <= kMaxDim); }

void HermExtremes::reduce() {
  const int n = n_;
  Cx* a = a_;
  auto at = [&](int i, int j) -> Cx& { return a[i + j * n]; };

  for (int k = 0; k + 2 < n; ++k) {
    // Householder vector for column k below the diagonal.
    double xnorm2 = 0.0;
    for (int i = k + 1; i < n; ++i) xnorm2 += std::norm(at(i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) {
      e2_[k] = 0.0;
      continue;
    }
    const Cx x0 = at(k + 1, k);
    const double ax0 = std::abs(x0);
    const Cx alpha = (ax0 == 0.0) ? Cx(-xnorm, 0.0) : -(x0 / ax0) * xnorm;
    e2_[k] = xnorm2;  // |alpha|^2

    const int m = n - (k + 1);
    Cx* v = v_;
    v[0] = x0 - alpha;
    for (int i = 1; i < m; ++i) v[i] = at(k + 1 + i, k);
    double vv = 0.0;
    for (int i = 0; i < m; ++i) vv += std::norm(v[i]);
    if (vv == 0.0) continue;
    const double tau = 2.0 / vv;

    // p = tau * S v on the trailing block S = a[k+1.., k+1..].
    Cx* p = p_;
    for (int i = 0; i < m; ++i) {
      Cx acc(0.0, 0.0);
      const int row = k + 1 + i;
      for (int j = 0; j < m; ++j) acc += at(row, k + 1 + j) * v[j];
      p[i] = tau * acc;
    }
    // K = tau * (v^* p) / 2 is real since S is Hermitian.
    double vp_re = 0.0;
    for (int i = 0; i < m; ++i) vp_re += (std::conj(v[i]) * p[i]).real();
    const double kk = 0.5 * tau * vp_re;
    // q = p - K v;  S <- S - q v^* - v q^*
    for (int i = 0; i < m; ++i) p[i] -= kk * v[i];
    for (int j = 0; j < m; ++j) {
      const Cx vj = std::conj(v[j]);
      const Cx qj = std::conj(p[j]);
      const int col = k + 1 + j;
      for (int i = 0; i < m; ++i) {
        at(k + 1 + i, col) -= p[i] * vj + v[i] * qj;
      }
    }
  }

  for (int i = 0; i < n; ++i) d_[i] = at(i, i).real();
  if (n >= 2) e2_[n - 2] = std::norm(at(n - 1, n - 2));

  double e2max = 0.0;
  for (int i = 0; i + 1 < n; ++i) e2max = std::max(e2max, e2_[i]);
  pivmin_ = std::max(kSafMin, kSafMin * e2max);

  // Gershgorin interval for the tridiagonal.
  double lo = d_[0], hi = d_[0];
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::sqrt(e2_[i - 1]);
    if (i + 1 < n) r += std::sqrt(e2_[i]);
    lo = std::min(lo, d_[i] - r);
    hi = std::max(hi, d_[i] + r);
  }
  const double pad = 1e-12 * std::max({std::abs(lo), std::abs(hi), 1.0});
  glo_ = lo - pad;
  ghi_ = hi + pad;
}

int HermExtremes::count_below(double x) const {
  // Sign agreements of the characteristic-polynomial recurrence, in the
  // multiplication-only form (divisions would dominate the sweep cost).
  int cnt = 0;
  double prev = 1.0;
  double cur = d_[0] - x;
  if (cur == 0.0) cur = -prev * kSafMin;
  if (cur < 0.0) ++cnt;
  for (int i = 1; i < n_; ++i) {
    double next = (d_[i] - x) * cur - e2_[i - 1] * prev;
    if (next == 0.0) next = -cur * kSafMin;
    if ((next < 0.0) != (cur < 0.0)) ++cnt;
    prev = cur;
    cur = next;
    const double mag = std::abs(cur);
    if (mag > 1e150) {
      cur *= 1e-300;
      prev *= 1e-300;
    } else if (mag < 1e-150 && mag > 0.0) {
      cur *= 1e300;
      prev *= 1e300;
    }
  }
  return cnt;
}

double HermExtremes::lambda_max() const {
  const int n = n_;
  if (n == 1) return d_[0];
  if (n == 2) {
    const double mid = 0.5 * (d_[0] + d_[1]);
    const double off = 0.5 * (d_[0] - d_[1]);
    return mid + std::sqrt(off * off + e2_[0]);
  }
  double lo = glo_, hi = ghi_;
  while (hi - lo > 1e-14 * std::max({1.0, std::abs(lo), std::abs(hi)})) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(mid) == n) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double HermExtremes::lambda_min() const {
  const int n = n_;
  if (n == 1) return d_[0];
  if (n == 2) {
    const double mid = 0.5 * (d_[0] + d_[1]);
    const double off = 0.5 * (d_[0] - d_[1]);
    return mid - std::sqrt(off * off + e2_[0]);
  }
  double lo = glo_, hi = ghi_;
  while (hi - lo > 1e-14 * std::max({1.0, std::abs(lo), std::abs(hi)})) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace numrad::smallherm
