#include "numrad/evaluate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "numrad/binomial.hpp"
#include "numrad/decomp.hpp"
#include "numrad/radius.hpp"
#include "numrad/spectral.hpp"

namespace numrad {

namespace {

// ---------------------------------------------------------------------
// Parameter sampling
// ---------------------------------------------------------------------

ScalarFn sample_nondecreasing_fn(Rng& rng) {
  switch (rng.uniform_int(0, 5)) {
    case 0: return ScalarFn::power(rng.uniform(0.0, 2.0));
    case 1: return ScalarFn::identity();
    case 2: return ScalarFn::log1p_fn();
    case 3: return ScalarFn::exponential();
    case 4: {
      std::vector<double> c(static_cast<size_t>(rng.uniform_int(2, 3)));
      for (auto& v : c) v = rng.uniform(0.0, 1.0);
      return ScalarFn::polynomial(std::move(c));
    }
    default: return ScalarFn::sqrt_of(ScalarFn::power(rng.uniform(0.0, 2.0)));
  }
}

ScalarFn sample_nonincreasing_fn(Rng& rng) {
  if (rng.coin()) return ScalarFn::polynomial({rng.uniform(0.0, 2.0), -1.0});
  return ScalarFn::constant(rng.uniform(0.0, 2.0));
}

ScalarFn sample_nonneg_fn(Rng& rng) {
  switch (rng.uniform_int(0, 5)) {
    case 0: return ScalarFn::power(rng.uniform(0.0, 2.0));
    case 1: return ScalarFn::identity();
    case 2: return ScalarFn::log1p_fn();
    case 3: return ScalarFn::exponential();
    case 4: {
      std::vector<double> c(static_cast<size_t>(rng.uniform_int(2, 3)));
      for (auto& v : c) v = rng.uniform(0.0, 1.0);
      return ScalarFn::polynomial(std::move(c));
    }
    default: return ScalarFn::constant(rng.uniform(0.1, 2.0));
  }
}

ScalarFn sample_general_fn(Rng& rng) {
  switch (rng.uniform_int(0, 6)) {
    case 0: return ScalarFn::power(rng.uniform(0.0, 2.0));
    case 1: return ScalarFn::identity();
    case 2: return ScalarFn::log1p_fn();
    case 3: return ScalarFn::exponential();
    case 4: {
      std::vector<double> c(static_cast<size_t>(rng.uniform_int(2, 4)));
      for (auto& v : c) v = rng.uniform(-1.0, 1.0);
      return ScalarFn::polynomial(std::move(c));
    }
    case 5: return ScalarFn::constant(rng.uniform(-2.0, 2.0));
    default: return ScalarFn::sqrt_of(ScalarFn::power(rng.uniform(0.0, 2.0)));
  }
}

}  // namespace

Json sample_params(const InequalityDescriptor& d, Rng& rng,
                   const Json& overrides) {
  Json p = Json::object();
  auto pick_alpha = [&] {
    if (overrides.contains("alpha")) {
      const double a = overrides["alpha"].get<double>();
      if (a < d.alpha_lo || a > d.alpha_hi) {
        throw InvalidArgument("alpha " + std::to_string(a) +
                              " outside [" + std::to_string(d.alpha_lo) + ", " +
                              std::to_string(d.alpha_hi) + "] for " + d.id);
      }
      return a;
    }
    return rng.uniform(d.alpha_lo, d.alpha_hi);
  };
  auto pick_n = [&] {
    if (overrides.contains("n")) {
      const int n = overrides["n"].get<int>();
      if (n < d.n_lo || n > d.n_hi) {
        throw InvalidArgument("order n outside the descriptor range for " + d.id);
      }
      return n;
    }
    return rng.uniform_int(d.n_lo, d.n_hi);
  };

  switch (d.params) {
    case ParamKind::none:
      break;
    case ParamKind::alpha:
      p["alpha"] = pick_alpha();
      break;
    case ParamKind::alpha_and_n:
      p["alpha"] = pick_alpha();
      p["n"] = pick_n();
      break;
    case ParamKind::power_p:
      p["p"] = overrides.contains("p") ? overrides["p"].get<double>()
                                       : rng.uniform(0.05, 2.0);
      if (!(p["p"].get<double>() > 0.0)) {
        throw InvalidArgument("p must be positive");
      }
      break;
    case ParamKind::pair_general:
      p["f"] = overrides.contains("f") ? Json(overrides["f"])
                                       : sample_general_fn(rng).to_json();
      p["g"] = overrides.contains("g") ? Json(overrides["g"])
                                       : sample_general_fn(rng).to_json();
      break;
    case ParamKind::pair_nonneg:
      p["f"] = overrides.contains("f") ? Json(overrides["f"])
                                       : sample_nonneg_fn(rng).to_json();
      p["g"] = overrides.contains("g") ? Json(overrides["g"])
                                       : sample_nonneg_fn(rng).to_json();
      break;
    case ParamKind::single_nonneg:
      p["f"] = overrides.contains("f") ? Json(overrides["f"])
                                       : sample_nonneg_fn(rng).to_json();
      break;
    case ParamKind::pair_monotone: {
      const bool sync = overrides.contains("direction")
                            ? overrides["direction"] == "sync"
                            : rng.coin();
      p["direction"] = sync ? "sync" : "async";
      if (overrides.contains("f") && overrides.contains("g")) {
        p["f"] = overrides["f"];
        p["g"] = overrides["g"];
      } else {
        p["f"] = sample_nondecreasing_fn(rng).to_json();
        p["g"] =
            (sync ? sample_nondecreasing_fn(rng) : sample_nonincreasing_fn(rng))
                .to_json();
      }
      break;
    }
  }
  return p;
}

namespace {

// ---------------------------------------------------------------------
// Shape plumbing
// ---------------------------------------------------------------------

void check_shape(const InequalityDescriptor& d, const OperatorInstance& inst) {
  size_t want_m = 0;
  switch (d.shape) {
    case Shape::single_operator:
    case Shape::operator_state:
      want_m = 1;
      break;
    case Shape::pair:
    case Shape::pair_commuting:
    case Shape::pair_reid:
    case Shape::pair_kittaneh:
      want_m = 2;
      break;
    case Shape::vector_triple:
      want_m = 0;
      break;
  }
  if (inst.matrices.size() != want_m) {
    throw ShapeMismatch(d.id + " expects " + std::to_string(want_m) +
                        " matrices, instance has " +
                        std::to_string(inst.matrices.size()));
  }
  if (static_cast<int>(inst.states.size()) < d.n_states) {
    throw ShapeMismatch(d.id + " expects " + std::to_string(d.n_states) +
                        " states, instance has " +
                        std::to_string(inst.states.size()));
  }
  for (const auto& m : inst.matrices) {
    if (m.rows() != inst.matrices.front().rows()) {
      throw ShapeMismatch("instance matrices have mixed dimensions");
    }
  }
}

// ---------------------------------------------------------------------
// Evaluators
// ---------------------------------------------------------------------

struct Sides {
  double lhs = 0.0;
  double rhs = 0.0;
  Json extras = Json::object();
};

double w_of(const CMatrix& m) { return numerical_radius(m); }
double wmin_of(const CMatrix& m) { return minimal_numerical_radius(m).value; }

ScalarFn fn_param(const Json& params, const char* key) {
  if (!params.contains(key)) {
    throw InvalidArgument(std::string("missing function parameter \"") + key +
                          "\"");
  }
  return ScalarFn::from_json(params[key]);
}

double alpha_param(const Json& params) {
  if (!params.contains("alpha")) throw InvalidArgument("missing alpha");
  return params["alpha"].get<double>();
}

int n_param(const Json& params) {
  if (!params.contains("n")) throw InvalidArgument("missing n");
  return params["n"].get<int>();
}

double real_qform(const CMatrix& m, const StateVector& x) {
  return qform(m, x).real();
}

// Chain a <= b <= c: report the binding link.
Sides chain2(double a, double b, double c, Json extras) {
  Sides s;
  s.extras = std::move(extras);
  if (b - a <= c - b) {
    s.lhs = a;
    s.rhs = b;
  } else {
    s.lhs = b;
    s.rhs = c;
  }
  return s;
}

double clamped_variance(double v) {
  if (v >= 0.0) return v;
  if (v >= -1e-12) return 0.0;
  throw NumericError("Chebyshev variance " + std::to_string(v) +
                     " beyond the clamp window");
}

// sqrt(||F||^2 - l(F_half)^2) brackets of the (e.4.x) family.
double bracket_root(double norm_sq_minus_ell_sq) {
  if (norm_sq_minus_ell_sq < 0.0) {
    throw DomainError("negative value " + std::to_string(norm_sq_minus_ell_sq) +
                      " under a bound's square root");
  }
  return std::sqrt(norm_sq_minus_ell_sq);
}

Sides eval_sides(const InequalityDescriptor& d, const OperatorInstance& inst,
                 const Json& params) {
  const std::string& id = d.id;
  Sides s;

  if (id == "I1.1L") {
    const CMatrix& t = inst.matrices[0];
    s.lhs = 0.5 * operator_norm(t);
    s.rhs = w_of(t);
  } else if (id == "I1.1R") {
    const CMatrix& t = inst.matrices[0];
    s.lhs = w_of(t);
    s.rhs = operator_norm(t);
  } else if (id == "I1.2") {
    const CMatrix& t = inst.matrices[0];
    s.lhs = w_of(t);
    s.rhs = 0.5 * (operator_norm(t) + std::sqrt(operator_norm(t * t)));
  } else if (id == "I1.3L" || id == "I1.3R") {
    const CMatrix& a = inst.matrices[0];
    const CMatrix m = a.adjoint() * a + a * a.adjoint();
    const double w2 = w_of(a) * w_of(a);
    if (id == "I1.3L") {
      s.lhs = 0.25 * operator_norm(m);
      s.rhs = w2;
    } else {
      s.lhs = w2;
      s.rhs = 0.5 * operator_norm(m);
    }
  } else if (id == "I1.4") {
    const CMatrix& t = inst.matrices[0];
    const double wt = w_of(t);
    const PolarFactors pf = polar(t);
    const CMatrix root = apply_fn(ScalarFn::power(0.5), pf.modulus);
    const CMatrix aluthge = root * pf.unitary * root;
    const double nt = operator_norm(t);
    const double mid = 0.5 * (nt + w_of(aluthge));
    const double hi = 0.5 * (nt + std::sqrt(operator_norm(t * t)));
    s = chain2(wt, mid, hi,
               Json{{"w", wt}, {"mid", mid}, {"upper", hi}});
  } else if (id == "I1.5") {
    const CMatrix& t = inst.matrices[0];
    s.lhs = w_of(t) * w_of(t);
    s.rhs = 0.5 * (operator_norm(t) + w_of(t * t));
  } else if (id == "T1.1") {
    const CMatrix& a = inst.matrices[0];
    const StateVector x(inst.states[0]);
    const ScalarFn f = fn_param(params, "f");
    const ScalarFn g = fn_param(params, "g");
    const CMatrix fa = apply_fn(f, a);
    const CMatrix ga = apply_fn(g, a);
    const double pfg = real_qform(fa * ga, x);
    const double pf = real_qform(fa, x);
    const double pg = real_qform(ga, x);
    const bool sync = params.value("direction", "sync") == std::string("sync");
    if (sync) {
      s.lhs = pf * pg;
      s.rhs = pfg;
    } else {
      s.lhs = pfg;
      s.rhs = pf * pg;
    }
  } else if (id == "T2.1" || id == "C2.2\xce\xb1") {
    const CMatrix& a = inst.matrices[0];
    const StateVector x(inst.states[0]);
    ScalarFn f = ScalarFn::identity();
    ScalarFn g = ScalarFn::identity();
    if (id == "T2.1") {
      f = fn_param(params, "f");
      g = fn_param(params, "g");
    } else {
      const PowerPair pp = power_pair(alpha_param(params));
      f = pp.f;
      g = pp.g;
    }
    const double cff = clamped_variance(cheb_functional(f, f, a, x));
    const double cgg = clamped_variance(cheb_functional(g, g, a, x));
    s.lhs = std::abs(cheb_functional(f, g, a, x));
    s.rhs = std::sqrt(cff) * std::sqrt(cgg);
  } else if (id == "SCHWARZ") {
    const CMatrix& a = inst.matrices[0];
    const StateVector x(inst.states[0]);
    const StateVector y(inst.states[1]);
    s.lhs = std::norm(inner(a * x.x, y.x));
    s.rhs = real_qform(a, x) * real_qform(a, y);
  } else if (id == "REID" || id == "HALMOS") {
    const CMatrix& a = inst.matrices[0];
    const CMatrix& b = inst.matrices[1];
    const StateVector x(inst.states[0]);
    s.lhs = std::abs(qform(a * b, x));
    double factor = 0.0;
    if (id == "REID") {
      factor = operator_norm(b);
    } else {
      const SpectralRadiusResult r = spectral_radius(b);
      if (!r.converged) {
        throw NumericError("spectral radius did not converge for HALMOS");
      }
      factor = r.value;
    }
    s.rhs = factor * real_qform(a, x);
  } else if (id == "KATO") {
    const CMatrix& a = inst.matrices[0];
    const StateVector x(inst.states[0]);
    const StateVector y(inst.states[1]);
    const double alpha = alpha_param(params);
    const CMatrix p = apply_fn(ScalarFn::power(2.0 * alpha), abs_op(a));
    const CMatrix q = apply_fn(ScalarFn::power(2.0 * (1.0 - alpha)), abs_adjoint(a));
    s.lhs = std::norm(inner(a * x.x, y.x));
    s.rhs = real_qform(p, x) * real_qform(q, y);
  } else if (id == "KITT") {
    const CMatrix& a = inst.matrices[0];
    const CMatrix& b = inst.matrices[1];
    const StateVector x(inst.states[0]);
    const StateVector y(inst.states[1]);
    const PowerPair pp = power_pair(alpha_param(params));
    const SpectralRadiusResult r = spectral_radius(b);
    if (!r.converged) {
      throw NumericError("spectral radius did not converge for KITT");
    }
    const CMatrix fm = apply_fn(pp.f, abs_op(a));
    const CMatrix gm = apply_fn(pp.g, abs_adjoint(a));
    s.lhs = std::abs(inner(a * (b * x.x), y.x));
    s.rhs = r.value * (fm * x.x).norm() * (gm * y.x).norm();
  } else if (id == "E4.2") {
    const CMatrix& a = inst.matrices[0];
    const ScalarFn f = fn_param(params, "f");
    const ScalarFn g = fn_param(params, "g");
    const CMatrix fa = apply_fn(f, a);
    const CMatrix ga = apply_fn(g, a);
    s.lhs = w_of(fa * ga) - wmin_of(fa) * wmin_of(ga);
    const double bf = std::pow(operator_norm(fa), 2) -
                      std::pow(ell(apply_fn(ScalarFn::sqrt_of(f), a)), 2);
    const double bg = std::pow(operator_norm(ga), 2) -
                      std::pow(ell(apply_fn(ScalarFn::sqrt_of(g), a)), 2);
    s.rhs = bracket_root(bf) * bracket_root(bg);
  } else if (id == "E4.3" || id == "E4.4") {
    const CMatrix& a = inst.matrices[0];
    const double alpha = (id == "E4.4") ? 0.5 : alpha_param(params);
    const CMatrix fa = apply_fn(ScalarFn::power(alpha), a);
    const CMatrix ga = apply_fn(ScalarFn::power(1.0 - alpha), a);
    s.lhs = w_of(a) - wmin_of(fa) * wmin_of(ga);
    const double bf = std::pow(operator_norm(fa), 2) -
                      std::pow(ell(apply_fn(ScalarFn::power(alpha / 2.0), a)), 2);
    const double bg =
        std::pow(operator_norm(ga), 2) -
        std::pow(ell(apply_fn(ScalarFn::power((1.0 - alpha) / 2.0), a)), 2);
    s.rhs = bracket_root(bf) * bracket_root(bg);
  } else if (id == "E4.5") {
    const CMatrix& a = inst.matrices[0];
    const ScalarFn f = fn_param(params, "f");
    const CMatrix fa = apply_fn(f, a);
    s.lhs = w_of(fa * fa) - std::pow(wmin_of(fa), 2);
    s.rhs = std::pow(operator_norm(fa), 2) -
            std::pow(ell(apply_fn(ScalarFn::sqrt_of(f), a)), 2);
  } else if (id == "E4.6") {
    const CMatrix& a = inst.matrices[0];
    const double p = params.at("p").get<double>();
    s.lhs = w_of(apply_fn(ScalarFn::power(2.0 * p), a)) -
            std::pow(wmin_of(apply_fn(ScalarFn::power(p), a)), 2);
    s.rhs = std::pow(operator_norm(apply_fn(ScalarFn::power(p), a)), 2) -
            std::pow(ell(apply_fn(ScalarFn::power(p / 2.0), a)), 2);
  } else if (id == "E4.7" || id == "E4.8" || id == "E4.9") {
    const CMatrix& a = inst.matrices[0];
    const double alpha = (id == "E4.9") ? 0.5 : alpha_param(params);
    const CMatrix fa = apply_fn(ScalarFn::power(alpha), a);
    const CMatrix ga = apply_fn(ScalarFn::power(1.0 - alpha), a);
    s.lhs = w_of(a) - wmin_of(fa) * wmin_of(ga);
    const CMatrix mod = abs_op(a);
    const CMatrix mod_adj = abs_adjoint(a);
    const CMatrix f2 = apply_fn(ScalarFn::power(2.0 * alpha), mod);
    const CMatrix g2 = apply_fn(ScalarFn::power(2.0 * (1.0 - alpha)), mod_adj);
    const double ell_f = ell(apply_fn(ScalarFn::power(alpha / 2.0), a));
    const double ell_g = ell(apply_fn(ScalarFn::power((1.0 - alpha) / 2.0), a));
    s.rhs = 0.5 * operator_norm(f2 + g2) -
            std::pow(ell_f, 2) * std::pow(ell_g, 2);
  } else if (id == "KEY") {
    const CVector& x = inst.states[0];
    const CVector& y = inst.states[1];
    const CVector& e = inst.states[2];
    s.lhs = std::abs(inner(x, e) * inner(e, y));
    s.rhs = 0.5 * (std::abs(inner(x, y)) + x.norm() * y.norm());
  } else if (id == "EQ2.11") {
    const CMatrix& a = inst.matrices[0];
    const CMatrix& b = inst.matrices[1];
    const CMatrix a2 = a * a;
    const CMatrix b2 = b * b;
    const double branch1 = w_of(b * a2 * b) + std::pow(operator_norm(a * b), 2);
    const double branch2 = w_of(a * b2 * a) + std::pow(operator_norm(b * a), 2);
    s.lhs = w_of(mat_power(a + b, 2));
    s.rhs = w_of(a2) + w_of(b2) + 0.25 * std::min(branch1, branch2);
    s.extras = Json{{"branch_baab", branch1}, {"branch_abba", branch2}};
  } else if (id == "EQ2.14") {
    const CMatrix& a = inst.matrices[0];
    const CMatrix a2 = a * a;
    s.lhs = w_of(a2);
    s.rhs = 0.125 * (w_of(mat_power(a, 4)) + std::pow(operator_norm(a2), 2));
  } else if (id == "EQ2.18" || id == "NORM-REM") {
    const CMatrix& a = inst.matrices[0];
    const CMatrix& b = inst.matrices[1];
    const int n = n_param(params);
    const PowerPair pp = power_pair(alpha_param(params));
    const BinomialExpansion exp = expand_binomial(a, b, n);
    const CMatrix direct = mat_power(a + b, n);
    const double residual = operator_norm(exp.sum - direct);
    double acc = 0.0;
    for (size_t k = 0; k < exp.terms.size(); ++k) {
      const CMatrix& term = exp.terms[k];
      const CMatrix lhs_mod = apply_fn(pp.f, abs_op(term));
      const CMatrix rhs_mod = apply_fn(pp.g, abs_adjoint(term));
      acc += static_cast<double>(exp.coefficients[k]) *
             operator_norm(lhs_mod + rhs_mod);
    }
    s.lhs = (id == "EQ2.18") ? w_of(direct) : operator_norm(direct);
    s.rhs = 0.5 * acc;
    s.extras = Json{{"expansion_residual_norm", residual}};
  } else if (id == "EQ2.19" || id == "EQ2.19-literal") {
    const CMatrix& a = inst.matrices[0];
    const CMatrix& b = inst.matrices[1];
    const PowerPair pp = power_pair(alpha_param(params));
    const CMatrix first = (id == "EQ2.19") ? a : CMatrix(a + commutator(b, a));
    const CMatrix total = apply_fn(pp.f, abs_op(b)) +
                          apply_fn(pp.g, abs_adjoint(b)) +
                          apply_fn(pp.f, abs_op(first)) +
                          apply_fn(pp.g, abs_adjoint(first));
    s.lhs = w_of(a + b);
    s.rhs = 0.5 * operator_norm(total);
  } else if (id == "EQ2.20") {
    const CMatrix& a = inst.matrices[0];
    const CMatrix& b = inst.matrices[1];
    const int n = n_param(params);
    const PowerPair pp = power_pair(alpha_param(params));
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) {
      const CMatrix term = mat_power(a, k) * mat_power(b, n - k);
      acc += static_cast<double>(binomial_coefficient(n, k)) *
             operator_norm(apply_fn(pp.f, abs_op(term)) +
                           apply_fn(pp.g, abs_adjoint(term)));
    }
    s.lhs = w_of(mat_power(a + b, n));
    s.rhs = 0.5 * acc;
  } else if (id == "EQ2.21" || id == "EQ2.22") {
    const CMatrix& a = inst.matrices[0];
    const int n = n_param(params);
    const PowerPair pp = power_pair(alpha_param(params));
    const CMatrix m = mat_power(a, n);
    s.lhs = w_of(m);
    s.rhs = 0.5 * operator_norm(apply_fn(pp.f, abs_op(m)) +
                                apply_fn(pp.g, abs_adjoint(m)));
  } else if (id == "EQ2.23") {
    const CMatrix& a = inst.matrices[0];
    const PowerPair pp = power_pair(alpha_param(params));
    s.lhs = w_of(a);
    s.rhs = 0.5 * operator_norm(apply_fn(pp.f, abs_op(a)) +
                                apply_fn(pp.g, abs_adjoint(a)));
  } else if (id == "EQ2.24") {
    const CMatrix& a = inst.matrices[0];
    const double wa = w_of(a);
    const double na = operator_norm(a);
    const int dim = static_cast<int>(a.rows());
    const double mid = 0.5 * operator_norm(abs_op(a) + identity_matrix(dim));
    const double hi =
        0.25 * (1.0 + na + std::sqrt((na - 1.0) * (na - 1.0) + 4.0 * na));
    s = chain2(wa, mid, hi, Json{{"w", wa}, {"mid", mid}, {"upper", hi}});
  } else if (id == "FK3") {
    const CMatrix& a = inst.matrices[0];
    const CMatrix& b = inst.matrices[1];
    const double na = operator_norm(a);
    const double nb = operator_norm(b);
    const CMatrix ra = apply_fn(ScalarFn::power(0.5), a);
    const CMatrix rb = apply_fn(ScalarFn::power(0.5), b);
    const double cross = operator_norm(ra * rb);
    s.lhs = operator_norm(a + b);
    s.rhs = 0.5 * (na + nb +
                   std::sqrt((na - nb) * (na - nb) + 4.0 * cross * cross));
  } else if (id == "KITT-SQ") {
    const CMatrix& a = inst.matrices[0];
    const double alpha = alpha_param(params);
    s.lhs = w_of(a);
    s.rhs = 0.5 * operator_norm(
                      apply_fn(ScalarFn::power(2.0 * alpha), abs_op(a)) +
                      apply_fn(ScalarFn::power(2.0 * (1.0 - alpha)),
                               abs_adjoint(a)));
  } else {
    throw UnknownId("no evaluator for id \"" + id + "\"");
  }
  return s;
}

std::vector<std::string> effective_ensembles(
    const InequalityDescriptor& d, const std::vector<std::string>& override_list) {
  const bool conditioned = d.shape == Shape::pair_commuting ||
                           d.shape == Shape::pair_reid ||
                           d.shape == Shape::pair_kittaneh ||
                           d.shape == Shape::vector_triple;
  if (conditioned || override_list.empty()) return d.ensembles;
  return override_list;
}

Ensemble ensemble_for_trial(const InequalityDescriptor& d,
                            const std::vector<std::string>& pool,
                            std::uint64_t trial) {
  switch (d.shape) {
    case Shape::pair_commuting: return Ensemble::commuting;
    case Shape::pair_reid: return Ensemble::reid;
    case Shape::pair_kittaneh: return Ensemble::kittaneh;
    case Shape::vector_triple: return Ensemble::ginibre;  // tag only
    default: break;
  }
  if (pool.empty()) return Ensemble::ginibre;
  const auto name = pool[trial % pool.size()];
  const auto e = ensemble_from_name(name);
  if (!e) throw InvalidArgument("unknown ensemble \"" + name + "\"");
  return *e;
}

}  // namespace

Json instance_to_json(const OperatorInstance& inst) {
  Json j;
  j["ensemble"] = inst.ensemble;
  j["dim"] = inst.dim;
  j["seed_path"] =
      Json{{"seed", inst.seed}, {"stream", inst.stream}, {"trial", inst.trial}};
  Json ms = Json::array();
  for (const auto& m : inst.matrices) ms.push_back(matrix_to_json(m));
  j["matrices"] = std::move(ms);
  Json ss = Json::array();
  for (const auto& v : inst.states) ss.push_back(vector_to_json(v));
  j["states"] = std::move(ss);
  return j;
}

OperatorInstance conjugate_instance(const OperatorInstance& inst,
                                    const CMatrix& u) {
  OperatorInstance out = inst;
  for (auto& m : out.matrices) m = u.adjoint() * m * u;
  for (auto& v : out.states) v = u.adjoint() * v;
  return out;
}

Trial make_trial(const InequalityDescriptor& desc, std::uint64_t seed,
                 std::uint64_t trial, int dim_lo, int dim_hi,
                 const std::vector<std::string>& ensembles,
                 const Json& overrides) {
  Rng rng(seed, desc.id, trial);
  const int dim = rng.uniform_int(dim_lo, dim_hi);
  const auto pool = effective_ensembles(desc, ensembles);
  const Ensemble e = ensemble_for_trial(desc, pool, trial);

  Trial t;
  t.instance = sample_instance(desc.shape, e, dim, desc.n_states, rng);
  t.instance.seed = seed;
  t.instance.stream = desc.id;
  t.instance.trial = trial;
  t.params = sample_params(desc, rng, overrides);
  return t;
}

EvaluationReport evaluate(const std::string& id, const OperatorInstance& inst,
                          const Json& params) {
  const auto start = std::chrono::steady_clock::now();
  const InequalityDescriptor& desc = find_descriptor(id);
  check_shape(desc, inst);

  const Sides s = eval_sides(desc, inst, params);
  if (!std::isfinite(s.lhs) || !std::isfinite(s.rhs)) {
    throw NumericError(id + " produced a non-finite side");
  }

  EvaluationReport rep;
  rep.id = id;
  rep.lhs = s.lhs;
  rep.rhs = s.rhs;
  rep.slack = s.rhs - s.lhs;
  const double scale = std::max({1.0, std::abs(s.lhs), std::abs(s.rhs)});
  rep.tol = (desc.wide_tol ? 1e-4 : 1e-8) * scale;
  rep.violated = rep.slack < -rep.tol;
  rep.params = params;
  rep.witness = instance_to_json(inst);
  rep.extras = s.extras;
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

Json EvaluationReport::to_json() const {
  Json j;
  j["id"] = id;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["slack"] = slack;
  j["tol"] = tol;
  j["violated"] = violated;
  j["params"] = params;
  if (!extras.empty()) j["extras"] = extras;
  j["instance"] = witness;
  return j;
}

bool SuiteReport::any_fail() const {
  for (const auto& r : results) {
    if (r.failed()) return true;
  }
  return false;
}

Json SuiteReport::to_json() const {
  Json j;
  j["seed"] = config.seed;
  j["registry_version"] = kRegistryVersion;
  Json cfg;
  cfg["ids"] = config.ids.empty() ? Json(registry_ids()) : Json(config.ids);
  cfg["dims"] = Json::array({config.dim_lo, config.dim_hi});
  cfg["trials"] = config.trials;
  cfg["ensembles"] =
      config.ensembles.empty() ? Json::array({"default"}) : Json(config.ensembles);
  j["config"] = std::move(cfg);
  j["toolkit_tolerances"] = Json{
      {"violation", "1e-8*max(1,|lhs|,|rhs|)"},
      {"violation_spectral_radius_ids", "1e-4*max(1,|lhs|,|rhs|)"},
      {"radius_grid_points", 1024},
      {"radius_theta_tolerance", 1e-10},
      {"eig_reconstruction", "1e-12*max(1,norm)"},
      {"chebyshev_identity", "1e-10*scale"},
      {"spectral_radius_relative", 1e-5},
  };
  Json out_results = Json::array();
  for (const auto& r : results) {
    Json e;
    e["id"] = r.id;
    e["status"] = status_name(r.status);
    e["inhomogeneous"] = r.inhomogeneous;
    e["trials"] = r.trials;
    e["violations"] = r.violations;
    e["inconclusive"] = r.inconclusive;
    e["min_slack"] = r.min_slack ? Json(round12(*r.min_slack)) : Json(nullptr);
    e["mean_slack"] = r.mean_slack ? Json(round12(*r.mean_slack)) : Json(nullptr);
    if (r.worst) {
      e["worst_witness"] = r.worst->to_json();
    } else {
      e["worst_witness"] = Json(nullptr);
    }
    out_results.push_back(std::move(e));
  }
  j["results"] = std::move(out_results);
  return j;
}

SuiteReport run_suite(const SuiteConfig& config) {
  if (config.trials < 0) throw InvalidArgument("negative trial count");
  if (config.dim_lo < 2 || config.dim_hi > 16 || config.dim_lo > config.dim_hi) {
    throw InvalidArgument("dims must satisfy 2 <= lo <= hi <= 16");
  }
  std::vector<std::string> ids = config.ids;
  if (ids.empty()) ids = registry_ids();

  SuiteReport report;
  report.config = config;
  for (const auto& id : ids) {
    const InequalityDescriptor& desc = find_descriptor(id);
    IdAggregate agg;
    agg.id = id;
    agg.status = desc.status;
    agg.inhomogeneous = desc.inhomogeneous;
    double slack_sum = 0.0;
    int valid = 0;
    for (int t = 0; t < config.trials; ++t) {
      agg.trials++;
      try {
        const Trial trial = make_trial(desc, config.seed, t, config.dim_lo,
                                       config.dim_hi, config.ensembles, {});
        EvaluationReport rep = evaluate(id, trial.instance, trial.params);
        if (rep.violated) agg.violations++;
        slack_sum += rep.slack;
        valid++;
        if (!agg.min_slack || rep.slack < *agg.min_slack) {
          agg.min_slack = rep.slack;
          agg.worst = std::move(rep);
        }
      } catch (const NumericError&) {
        agg.inconclusive++;
      } catch (const DomainError&) {
        agg.inconclusive++;
      } catch (const NotPsd&) {
        agg.inconclusive++;
      } catch (const NoConvergence&) {
        agg.inconclusive++;
      } catch (const ConditionUnsatisfiable&) {
        agg.inconclusive++;
      }
    }
    if (valid > 0) agg.mean_slack = slack_sum / valid;
    report.results.push_back(std::move(agg));
  }
  return report;
}

EvaluationReport tightness_search(const SearchConfig& config) {
  const InequalityDescriptor& desc = find_descriptor(config.id);
  std::optional<EvaluationReport> best_abs;
  std::optional<EvaluationReport> best_neg;
  for (int t = 0; t < config.budget; ++t) {
    try {
      const Trial trial = make_trial(desc, config.seed, t, config.dim_lo,
                                     config.dim_hi, config.ensembles,
                                     config.overrides);
      EvaluationReport rep = evaluate(config.id, trial.instance, trial.params);
      if (!best_abs || std::abs(rep.slack) < std::abs(best_abs->slack)) {
        best_abs = rep;
      }
      if (rep.violated && (!best_neg || rep.slack < best_neg->slack)) {
        best_neg = std::move(rep);
      }
    } catch (const NumericError&) {
    } catch (const DomainError&) {
    } catch (const NotPsd&) {
    } catch (const NoConvergence&) {
    } catch (const ConditionUnsatisfiable&) {
    }
  }
  if (desc.status == Status::novel && best_neg) return *best_neg;
  if (best_abs) return *best_abs;
  throw NumericError("every search trial was inconclusive for " + config.id);
}

}  // namespace numrad
