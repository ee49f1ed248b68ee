#pragma once

#include <string>
#include <vector>

#include "numrad/ensembles.hpp"

namespace numrad {

// Established entries are classical results: a violation is a toolkit bug
// and fails the suite. Novel entries are bounds under evaluation: a
// violation is recorded as a finding and does not affect the exit status.
enum class Status { established, novel };

// What the evaluator needs sampled besides the instance.
enum class ParamKind {
  none,
  alpha,          // one exponent, range [alpha_lo, alpha_hi]
  alpha_and_n,    // exponent plus an expansion order
  power_p,        // p > 0
  pair_general,   // arbitrary f, g from the function family
  pair_nonneg,    // nonnegative f, g (square roots must exist)
  single_nonneg,  // one nonnegative f
  pair_monotone,  // synchronous or asynchronous monotone pair
};

struct InequalityDescriptor {
  std::string id;
  std::string anchor;   // catalog label of the bound
  std::string summary;  // statement in one line
  Status status = Status::established;
  Shape shape = Shape::single_operator;
  int n_states = 0;
  // Sides scale with different powers of the instance; such entries can be
  // violated by pure rescaling and are flagged in every report.
  bool inhomogeneous = false;
  // Positive-homogeneity meta-check applies (lhs and rhs must scale with
  // the same power under instance scaling).
  bool scaling_checked = false;
  // Spectral radius enters the bound; violation tolerance widens to
  // 1e-4 * scale because that ingredient is only 1e-5-accurate.
  bool wide_tol = false;
  ParamKind params = ParamKind::none;
  double alpha_lo = 0.0;
  double alpha_hi = 1.0;
  int n_lo = 2;
  int n_hi = 5;
  std::vector<std::string> ensembles;  // default rotation for instances
};

const std::vector<InequalityDescriptor>& registry();

// Throws UnknownId.
const InequalityDescriptor& find_descriptor(const std::string& id);

std::vector<std::string> registry_ids();

inline constexpr const char* kRegistryVersion = "1";

std::string status_name(Status s);

}  // namespace numrad
