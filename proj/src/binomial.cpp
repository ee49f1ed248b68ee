#include "numrad/binomial.hpp"

namespace numrad {

namespace {

constexpr int kBinomialCap = 32;

void check_same_dims(const CMatrix& a, const CMatrix& b) {
  validate_matrix(a);
  validate_matrix(b);
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("operands are " + std::to_string(a.rows()) +
                            "- and " + std::to_string(b.rows()) + "-dimensional");
  }
}

// D_0 .. D_n via the recurrence, alongside the powers of a it consumes.
std::vector<CMatrix> essential_parts_upto(const CMatrix& b, const CMatrix& a,
                                          int n) {
  const int dim = static_cast<int>(a.rows());
  std::vector<CMatrix> d;
  d.reserve(n + 1);
  d.push_back(zero_matrix(dim));
  CMatrix apow = identity_matrix(dim);  // a^m while computing D_{m+1}
  for (int m = 0; m < n; ++m) {
    const CMatrix& dm = d.back();
    CMatrix next = (b * apow - apow * b) + a * dm + b * dm - dm * b;
    d.push_back(std::move(next));
    if (m + 1 < n) apow = apow * a;
  }
  return d;
}

}  // namespace

CMatrix commutator(const CMatrix& a, const CMatrix& x) {
  check_same_dims(a, x);
  return a * x - x * a;
}

CMatrix essential_part(const CMatrix& b, const CMatrix& a, int n) {
  check_same_dims(b, a);
  if (n < 0) throw InvalidArgument("negative order " + std::to_string(n));
  if (n > kBinomialCap) {
    throw CapExceeded("order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kBinomialCap));
  }
  return essential_parts_upto(b, a, n).back();
}

std::uint64_t binomial_coefficient(int n, int k) {
  if (n < 0 || n > kBinomialCap || k < 0 || k > n) {
    throw InvalidArgument("binomial coefficient out of range");
  }
  // Pascal row; every value fits comfortably in 64 bits for n <= 32.
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) row[j] += row[j - 1];
  }
  return row[k];
}

BinomialExpansion expand_binomial(const CMatrix& a, const CMatrix& b, int n) {
  check_same_dims(a, b);
  if (n < 0) throw InvalidArgument("negative order " + std::to_string(n));
  if (n > kBinomialCap) {
    throw CapExceeded("order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kBinomialCap));
  }
  const int dim = static_cast<int>(a.rows());
  const std::vector<CMatrix> d = essential_parts_upto(b, a, n);

  std::vector<CMatrix> bpow;
  bpow.reserve(n + 1);
  bpow.push_back(identity_matrix(dim));
  for (int j = 1; j <= n; ++j) bpow.push_back(bpow.back() * b);

  BinomialExpansion out;
  out.n = n;
  out.sum = zero_matrix(dim);
  CMatrix apow = identity_matrix(dim);
  for (int k = 0; k <= n; ++k) {
    CMatrix term = (apow + d[k]) * bpow[n - k];
    const std::uint64_t coeff = binomial_coefficient(n, k);
    out.sum += static_cast<double>(coeff) * term;
    out.terms.push_back(std::move(term));
    out.coefficients.push_back(coeff);
    if (k < n) apow = apow * a;
  }
  return out;
}

}  // namespace numrad
