#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "numrad/errors.hpp"

namespace numrad {

// Closed family of real functions on [0, inf) used by the spectral
// calculus. Power(0) is the constant 1 everywhere: 0^0 := 1.
class ScalarFn {
 public:
  enum class Kind { power, poly, exp, log1p, sqrt_of, identity, constant };

  static ScalarFn power(double alpha);  // alpha >= 0
  static ScalarFn polynomial(std::vector<double> coeffs);  // ascending degree
  static ScalarFn exponential();
  static ScalarFn log1p_fn();
  static ScalarFn sqrt_of(ScalarFn inner);
  static ScalarFn identity();
  static ScalarFn constant(double c);

  // Throws DomainError on t < 0, on sqrt of a negative inner value and on
  // overflow to a non-finite result.
  double eval(double t) const;

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }

  nlohmann::ordered_json to_json() const;
  static ScalarFn from_json(const nlohmann::json& j);
  std::string describe() const;

 private:
  ScalarFn() = default;

  Kind kind_ = Kind::identity;
  double alpha_ = 0.0;  // power exponent or constant value
  std::vector<double> coeffs_;
  std::shared_ptr<const ScalarFn> inner_;
};

// (t^alpha, t^{1-alpha}) with f(t) * g(t) = t exactly; alpha in [0, 1].
struct PowerPair {
  ScalarFn f;
  ScalarFn g;
};

PowerPair power_pair(double alpha);

}  // namespace numrad
