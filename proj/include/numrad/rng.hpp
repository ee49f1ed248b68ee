#pragma once

#include <cstdint>
#include <string_view>

#include "numrad/matrix.hpp"

namespace numrad {

// Counter-seeded xoshiro256++ stream. Streams are keyed by
// (master seed, stream label, index) so trial t of a given predicate is
// identical regardless of execution order, and gaussians come from an
// explicit Box-Muller so the byte-level output does not depend on the
// standard library in use.
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view stream, std::uint64_t index);

  std::uint64_t next_u64();
  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);   // [lo, hi)
  int uniform_int(int lo, int hi);        // inclusive
  bool coin();
  double normal();
  Complex cnormal();                      // (N + iN) / sqrt(2)

 private:
  std::uint64_t s_[4];
};

}  // namespace numrad
