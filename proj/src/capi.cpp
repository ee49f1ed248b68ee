#include "numrad.h"

#include <cstring>
#include <string>

#include "numrad/binomial.hpp"
#include "numrad/decomp.hpp"
#include "numrad/evaluate.hpp"
#include "numrad/json_io.hpp"
#include "numrad/radius.hpp"
#include "numrad/registry.hpp"

using namespace numrad;

struct nr_matrix {
  CMatrix m;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nr_status status_of(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return NR_ERR_PARSE;
  if (dynamic_cast<const DimensionMismatch*>(&e)) return NR_ERR_DIMENSION_MISMATCH;
  if (dynamic_cast<const NotHermitian*>(&e)) return NR_ERR_NOT_HERMITIAN;
  if (dynamic_cast<const NotPsd*>(&e)) return NR_ERR_NOT_PSD;
  if (dynamic_cast<const DomainError*>(&e)) return NR_ERR_DOMAIN;
  if (dynamic_cast<const NoConvergence*>(&e)) return NR_ERR_NO_CONVERGENCE;
  if (dynamic_cast<const CapExceeded*>(&e)) return NR_ERR_CAP_EXCEEDED;
  if (dynamic_cast<const ShapeMismatch*>(&e)) return NR_ERR_SHAPE_MISMATCH;
  if (dynamic_cast<const UnknownId*>(&e)) return NR_ERR_UNKNOWN_ID;
  if (dynamic_cast<const ConditionUnsatisfiable*>(&e))
    return NR_ERR_CONDITION_UNSATISFIABLE;
  if (dynamic_cast<const NumericError*>(&e)) return NR_ERR_INCONCLUSIVE;
  if (dynamic_cast<const InvalidArgument*>(&e)) return NR_ERR_INVALID_ARGUMENT;
  return NR_ERR_INTERNAL;
}

template <typename Fn>
nr_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return NR_OK;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (...) {
    g_last_error = "unknown error";
    return NR_ERR_INTERNAL;
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

SuiteConfig parse_suite_config(const char* config_json) {
  if (!config_json) throw InvalidArgument("null config");
  const nlohmann::json j = parse_json(config_json, "verify config");
  SuiteConfig cfg;
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("ids") && !j["ids"].is_null()) {
    if (j["ids"].is_string()) {
      if (j["ids"].get<std::string>() != "all") {
        throw ParseError("\"ids\" must be \"all\" or an array of ids");
      }
    } else {
      cfg.ids = j["ids"].get<std::vector<std::string>>();
    }
  }
  if (j.contains("dims")) {
    const auto& d = j["dims"];
    if (!d.is_array() || d.size() != 2) throw ParseError("\"dims\" must be [lo, hi]");
    cfg.dim_lo = d[0].get<int>();
    cfg.dim_hi = d[1].get<int>();
  }
  if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
  if (j.contains("ensembles") && !j["ensembles"].is_null()) {
    if (j["ensembles"].is_string()) {
      if (j["ensembles"].get<std::string>() != "default") {
        throw ParseError("\"ensembles\" must be \"default\" or an array");
      }
    } else {
      cfg.ensembles = j["ensembles"].get<std::vector<std::string>>();
    }
  }
  return cfg;
}

}  // namespace

extern "C" {

nr_status nr_matrix_create(int n, const double* entries, nr_matrix** out) {
  return guarded([&] {
    if (!entries || !out) throw InvalidArgument("null argument");
    if (n < 1 || n > kDimCap) {
      throw InvalidArgument("dimension outside [1, " + std::to_string(kDimCap) + "]");
    }
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double re = entries[2 * (i * n + j)];
        const double im = entries[2 * (i * n + j) + 1];
        m(i, j) = Complex(re, im);
      }
    }
    validate_matrix(m);
    *out = new nr_matrix{std::move(m)};
  });
}

nr_status nr_matrix_from_json(const char* json_text, nr_matrix** out) {
  return guarded([&] {
    if (!json_text || !out) throw InvalidArgument("null argument");
    *out = new nr_matrix{matrix_from_json(parse_json(json_text, "matrix"))};
  });
}

nr_status nr_matrix_to_json(const nr_matrix* m, char** out_json) {
  return guarded([&] {
    if (!m || !out_json) throw InvalidArgument("null argument");
    *out_json = dup_string(dump(matrix_to_json(m->m)));
  });
}

int nr_matrix_dim(const nr_matrix* m) {
  return m ? static_cast<int>(m->m.rows()) : 0;
}

void nr_matrix_free(nr_matrix* m) { delete m; }

void nr_string_free(char* s) { delete[] s; }

nr_status nr_compute(const nr_matrix* m, const char* quantity, double* out) {
  bool approximate = false;
  const nr_status st = guarded([&] {
    if (!m || !quantity || !out) throw InvalidArgument("null argument");
    const std::string q = quantity;
    if (q == "w") {
      *out = numerical_radius(m->m);
    } else if (q == "wmin") {
      *out = minimal_numerical_radius(m->m).value;
    } else if (q == "norm") {
      *out = operator_norm(m->m);
    } else if (q == "ell") {
      *out = ell(m->m);
    } else if (q == "r") {
      const SpectralRadiusResult r = spectral_radius(m->m);
      *out = r.value;
      approximate = !r.converged;
    } else if (q == "range-area") {
      *out = range_area(m->m);
    } else {
      throw InvalidArgument("unknown quantity \"" + q + "\"");
    }
  });
  if (st != NR_OK) return st;
  if (approximate) {
    g_last_error = "spectral radius did not converge within 40 doublings";
    return NR_ERR_INCONCLUSIVE;
  }
  return NR_OK;
}

nr_status nr_range_boundary_csv(const nr_matrix* m, int points, char** out_csv) {
  return guarded([&] {
    if (!m || !out_csv) throw InvalidArgument("null argument");
    *out_csv = dup_string(boundary_csv(range_boundary(m->m, points)));
  });
}

nr_status nr_expand_binomial_json(const nr_matrix* a, const nr_matrix* b, int n,
                                  char** out_json) {
  return guarded([&] {
    if (!a || !b || !out_json) throw InvalidArgument("null argument");
    const BinomialExpansion e = expand_binomial(a->m, b->m, n);
    const double residual = operator_norm(e.sum - mat_power(a->m + b->m, n));
    *out_json = dup_string(dump(expansion_to_json(e, residual)));
  });
}

nr_status nr_verify_json(const char* config_json, char** out_report_json,
                         int* any_fail) {
  return guarded([&] {
    if (!out_report_json) throw InvalidArgument("null output");
    const SuiteConfig cfg = parse_suite_config(config_json);
    const SuiteReport report = run_suite(cfg);
    *out_report_json = dup_string(dump(report.to_json()));
    if (any_fail) *any_fail = report.any_fail() ? 1 : 0;
  });
}

nr_status nr_search_json(const char* config_json, char** out_report_json) {
  return guarded([&] {
    if (!config_json || !out_report_json) throw InvalidArgument("null argument");
    const nlohmann::json j = parse_json(config_json, "search config");
    SearchConfig cfg;
    if (!j.contains("id")) throw ParseError("search config needs an \"id\"");
    cfg.id = j["id"].get<std::string>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("dims")) {
      cfg.dim_lo = j["dims"][0].get<int>();
      cfg.dim_hi = j["dims"][1].get<int>();
    }
    if (j.contains("budget")) cfg.budget = j["budget"].get<int>();
    if (j.contains("ensemble") && !j["ensemble"].is_null()) {
      cfg.ensembles = {j["ensemble"].get<std::string>()};
    }
    for (const char* key : {"alpha", "p", "n"}) {
      if (j.contains(key)) cfg.overrides[key] = j[key];
    }
    const EvaluationReport rep = tightness_search(cfg);
    *out_report_json = dup_string(dump(rep.to_json()));
  });
}

nr_status nr_evaluate_json(const char* id, const nr_matrix* const* matrices,
                           size_t n_matrices, const char* params_json,
                           unsigned long long seed, char** out_report_json) {
  return guarded([&] {
    if (!id || !out_report_json) throw InvalidArgument("null argument");
    if (n_matrices > 0 && !matrices) throw InvalidArgument("null matrices");
    const InequalityDescriptor& desc = find_descriptor(id);
    OperatorInstance inst;
    inst.ensemble = "explicit";
    inst.stream = id;
    inst.seed = seed;
    for (size_t i = 0; i < n_matrices; ++i) {
      if (!matrices[i]) throw InvalidArgument("null matrix handle");
      inst.matrices.push_back(matrices[i]->m);
    }
    inst.dim = inst.matrices.empty() ? 0 : static_cast<int>(inst.matrices[0].rows());
    Rng rng(seed, id, 0);
    const int dim = inst.dim > 0 ? inst.dim : 2;
    const int want_states = desc.shape == Shape::vector_triple ? 3 : desc.n_states;
    for (int i = 0; i < want_states; ++i) {
      inst.states.push_back(sample_state(dim, rng));
    }
    Json params = Json::object();
    if (params_json && params_json[0] != '\0') {
      params = parse_json(params_json, "params");
    }
    Rng prng(seed, std::string(id) + "/params", 0);
    const Json sampled = sample_params(desc, prng, params);
    const EvaluationReport rep = evaluate(id, inst, sampled);
    *out_report_json = dup_string(dump(rep.to_json()));
  });
}

nr_status nr_registry_json(char** out_json) {
  return guarded([&] {
    if (!out_json) throw InvalidArgument("null output");
    Json arr = Json::array();
    for (const auto& d : registry()) {
      arr.push_back(Json{{"id", d.id},
                         {"status", status_name(d.status)},
                         {"anchor", d.anchor},
                         {"summary", d.summary},
                         {"inhomogeneous", d.inhomogeneous}});
    }
    *out_json = dup_string(dump(arr));
  });
}

const char* nr_status_name(nr_status s) {
  switch (s) {
    case NR_OK: return "ok";
    case NR_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case NR_ERR_PARSE: return "parse-error";
    case NR_ERR_DIMENSION_MISMATCH: return "dimension-mismatch";
    case NR_ERR_NOT_HERMITIAN: return "not-hermitian";
    case NR_ERR_NOT_PSD: return "not-psd";
    case NR_ERR_DOMAIN: return "domain-error";
    case NR_ERR_NO_CONVERGENCE: return "no-convergence";
    case NR_ERR_CAP_EXCEEDED: return "cap-exceeded";
    case NR_ERR_SHAPE_MISMATCH: return "shape-mismatch";
    case NR_ERR_UNKNOWN_ID: return "unknown-id";
    case NR_ERR_CONDITION_UNSATISFIABLE: return "condition-unsatisfiable";
    case NR_ERR_INCONCLUSIVE: return "inconclusive";
    case NR_ERR_INTERNAL: return "internal-error";
  }
  return "?";
}

const char* nr_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
