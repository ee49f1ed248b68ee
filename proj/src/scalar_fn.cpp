#include "numrad/scalar_fn.hpp"

#include <cmath>

namespace numrad {

ScalarFn ScalarFn::power(double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgument("power exponent must be finite and >= 0");
  }
  ScalarFn f;
  f.kind_ = Kind::power;
  f.alpha_ = alpha;
  return f;
}

ScalarFn ScalarFn::polynomial(std::vector<double> coeffs) {
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw InvalidArgument("non-finite polynomial coefficient");
  }
  ScalarFn f;
  f.kind_ = Kind::poly;
  f.coeffs_ = std::move(coeffs);
  return f;
}

ScalarFn ScalarFn::exponential() {
  ScalarFn f;
  f.kind_ = Kind::exp;
  return f;
}

ScalarFn ScalarFn::log1p_fn() {
  ScalarFn f;
  f.kind_ = Kind::log1p;
  return f;
}

ScalarFn ScalarFn::sqrt_of(ScalarFn inner) {
  ScalarFn f;
  f.kind_ = Kind::sqrt_of;
  f.inner_ = std::make_shared<ScalarFn>(std::move(inner));
  return f;
}

ScalarFn ScalarFn::identity() {
  ScalarFn f;
  f.kind_ = Kind::identity;
  return f;
}

ScalarFn ScalarFn::constant(double c) {
  if (!std::isfinite(c)) throw InvalidArgument("non-finite constant");
  ScalarFn f;
  f.kind_ = Kind::constant;
  f.alpha_ = c;
  return f;
}

double ScalarFn::eval(double t) const {
  if (!(t >= 0.0)) {
    throw DomainError("scalar function argument " + std::to_string(t) +
                      " outside [0, inf)");
  }
  double v = 0.0;
  switch (kind_) {
    case Kind::power:
      v = (alpha_ == 0.0) ? 1.0 : std::pow(t, alpha_);
      break;
    case Kind::poly: {
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
      break;
    }
    case Kind::exp:
      v = std::exp(t);
      break;
    case Kind::log1p:
      v = std::log1p(t);
      break;
    case Kind::sqrt_of: {
      const double u = inner_->eval(t);
      if (u < 0.0) {
        throw DomainError("sqrt_of applied to negative value " + std::to_string(u));
      }
      v = std::sqrt(u);
      break;
    }
    case Kind::identity:
      v = t;
      break;
    case Kind::constant:
      v = alpha_;
      break;
  }
  if (!std::isfinite(v)) {
    throw DomainError(describe() + " overflows at t = " + std::to_string(t));
  }
  return v;
}

nlohmann::ordered_json ScalarFn::to_json() const {
  nlohmann::ordered_json j;
  switch (kind_) {
    case Kind::power:
      j["kind"] = "power";
      j["alpha"] = alpha_;
      break;
    case Kind::poly:
      j["kind"] = "poly";
      j["coeffs"] = coeffs_;
      break;
    case Kind::exp:
      j["kind"] = "exp";
      break;
    case Kind::log1p:
      j["kind"] = "log1p";
      break;
    case Kind::sqrt_of:
      j["kind"] = "sqrt_of";
      j["inner"] = inner_->to_json();
      break;
    case Kind::identity:
      j["kind"] = "identity";
      break;
    case Kind::constant:
      j["kind"] = "const";
      j["c"] = alpha_;
      break;
  }
  return j;
}

ScalarFn ScalarFn::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("scalar function JSON must be an object with a \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "power") return power(j.at("alpha").get<double>());
    if (kind == "poly") return polynomial(j.at("coeffs").get<std::vector<double>>());
    if (kind == "exp") return exponential();
    if (kind == "log1p") return log1p_fn();
    if (kind == "sqrt_of") return sqrt_of(from_json(j.at("inner")));
    if (kind == "identity") return identity();
    if (kind == "const") return constant(j.at("c").get<double>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad scalar function JSON: ") + e.what());
  }
  throw ParseError("unknown scalar function kind \"" + kind + "\"");
}

std::string ScalarFn::describe() const {
  switch (kind_) {
    case Kind::power:
      return "t^" + std::to_string(alpha_);
    case Kind::poly: {
      std::string s = "poly[";
      for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coeffs_[i]);
      }
      return s + "]";
    }
    case Kind::exp:
      return "exp(t)";
    case Kind::log1p:
      return "log1p(t)";
    case Kind::sqrt_of:
      return "sqrt(" + inner_->describe() + ")";
    case Kind::identity:
      return "t";
    case Kind::constant:
      return "const " + std::to_string(alpha_);
  }
  return "?";
}

PowerPair power_pair(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("power pair exponent must lie in [0, 1]");
  }
  return {ScalarFn::power(alpha), ScalarFn::power(1.0 - alpha)};
}

}  // namespace numrad
