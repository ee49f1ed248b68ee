#pragma once

#include <optional>
#include <string>
#include <vector>

#include "numrad/ensembles.hpp"
#include "numrad/json_io.hpp"
#include "numrad/registry.hpp"

namespace numrad {

struct EvaluationReport {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  double tol = 0.0;
  bool violated = false;
  Json params;   // sampled or pinned parameters (exponents, orders, fns)
  Json witness;  // serialized instance
  Json extras;   // per-id diagnostics (chain links, min branches, ...)
  double seconds = 0.0;  // in-memory only, never serialized

  Json to_json() const;
};

// Both sampled from the stream keyed by (seed, id, trial).
struct Trial {
  OperatorInstance instance;
  Json params;
};

// overrides may pin "alpha", "p" or "n"; ensembles may override the
// descriptor's default rotation (ignored by conditioned shapes).
Trial make_trial(const InequalityDescriptor& desc, std::uint64_t seed,
                 std::uint64_t trial, int dim_lo, int dim_hi,
                 const std::vector<std::string>& ensembles,
                 const Json& overrides);

// Draws whatever parameters the entry needs from the stream, honoring any
// pinned fields in overrides.
Json sample_params(const InequalityDescriptor& desc, Rng& rng,
                   const Json& overrides);

// lhs and rhs are computed exclusively through the toolkit operations.
// tol = 1e-8 * max(1, |lhs|, |rhs|), widened to 1e-4 * scale for entries
// whose bound contains the spectral radius. Numeric failures propagate as
// exceptions and are recorded as inconclusive by the drivers.
EvaluationReport evaluate(const std::string& id, const OperatorInstance& inst,
                          const Json& params);

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::vector<std::string> ids;  // empty = whole registry
  int dim_lo = 2;
  int dim_hi = 8;
  int trials = 1000;
  std::vector<std::string> ensembles;  // empty = per-id defaults
};

struct IdAggregate {
  std::string id;
  Status status = Status::established;
  bool inhomogeneous = false;
  int trials = 0;
  int violations = 0;
  int inconclusive = 0;
  std::optional<double> min_slack;
  std::optional<double> mean_slack;
  std::optional<EvaluationReport> worst;

  bool failed() const {
    return status == Status::established && violations > 0;
  }
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<IdAggregate> results;

  bool any_fail() const;
  Json to_json() const;
};

SuiteReport run_suite(const SuiteConfig& config);

struct SearchConfig {
  std::string id;
  std::uint64_t seed = 7;
  int dim_lo = 2;
  int dim_hi = 4;
  int budget = 1000;
  std::vector<std::string> ensembles;  // empty = descriptor defaults
  Json overrides;                      // pinned alpha / p / n
};

// Returns the trial with minimal |slack|; for novel entries with at least
// one violation, the most negative slack instead. Throws NumericError if
// every trial was inconclusive.
EvaluationReport tightness_search(const SearchConfig& config);

Json instance_to_json(const OperatorInstance& inst);

// Conjugates every matrix by u^* . u and every state by u^*; used by the
// unitary-invariance property checks.
OperatorInstance conjugate_instance(const OperatorInstance& inst,
                                    const CMatrix& u);

}  // namespace numrad
