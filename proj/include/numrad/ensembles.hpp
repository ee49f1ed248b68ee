#pragma once

#include <optional>
#include <string>
#include <vector>

#include "numrad/matrix.hpp"
#include "numrad/rng.hpp"

namespace numrad {

// Instance shapes the registry entries ask for.
enum class Shape {
  single_operator,
  pair,
  pair_commuting,
  pair_reid,
  pair_kittaneh,
  operator_state,   // one operator plus 1-2 unit states
  vector_triple,    // x, y and a unit e; no matrices
};

enum class Ensemble {
  ginibre,
  hermitian,
  psd,
  unitary,
  contraction,
  jordan,
  commuting,
  reid,
  kittaneh,
};

std::string ensemble_name(Ensemble e);
std::optional<Ensemble> ensemble_from_name(const std::string& name);

// One sampled universe for a predicate: the matrices, the unit states and
// the seed path that regenerates it.
struct OperatorInstance {
  std::vector<CMatrix> matrices;
  std::vector<CVector> states;  // unit vectors
  std::string ensemble;
  int dim = 0;
  std::uint64_t seed = 0;
  std::string stream;       // predicate id the stream was keyed with
  std::uint64_t trial = 0;
};

// Single matrix draw from one of the unconditioned ensembles.
CMatrix sample_matrix(Ensemble e, int dim, Rng& rng);

// Haar unitary via phase-fixed QR of a Ginibre draw.
CMatrix haar_unitary(int dim, Rng& rng);

// Unit state.
CVector sample_state(int dim, Rng& rng);

// Draws an instance of the requested shape. Conditioned shapes (commuting,
// reid, kittaneh) verify their flags within 1e-10 * scale and retry up to
// 100 times before raising ConditionUnsatisfiable. dim in [2, 16].
OperatorInstance sample_instance(Shape shape, Ensemble e, int dim, int n_states,
                                 Rng& rng);

}  // namespace numrad
