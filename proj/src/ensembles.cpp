#include "numrad/ensembles.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "numrad/decomp.hpp"

namespace numrad {

namespace {

CMatrix ginibre(int dim, Rng& rng) {
  CMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) g(i, j) = rng.cnormal();
  }
  return g;
}

CMatrix psd_invertible(int dim, Rng& rng) {
  const CMatrix g = ginibre(dim, rng);
  const double shift = rng.uniform(0.1, 1.0);
  return CMatrix(g.adjoint() * g) + shift * identity_matrix(dim);
}

CMatrix hermitian_draw(int dim, Rng& rng) {
  const CMatrix g = ginibre(dim, rng);
  return 0.5 * (g + g.adjoint());
}

double pair_scale(const CMatrix& a, const CMatrix& b) {
  return std::max(1.0, operator_norm(a) * operator_norm(b));
}

}  // namespace

std::string ensemble_name(Ensemble e) {
  switch (e) {
    case Ensemble::ginibre: return "ginibre";
    case Ensemble::hermitian: return "hermitian";
    case Ensemble::psd: return "psd";
    case Ensemble::unitary: return "unitary";
    case Ensemble::contraction: return "contraction";
    case Ensemble::jordan: return "jordan";
    case Ensemble::commuting: return "commuting";
    case Ensemble::reid: return "reid";
    case Ensemble::kittaneh: return "kittaneh";
  }
  return "?";
}

std::optional<Ensemble> ensemble_from_name(const std::string& name) {
  for (Ensemble e : {Ensemble::ginibre, Ensemble::hermitian, Ensemble::psd,
                     Ensemble::unitary, Ensemble::contraction, Ensemble::jordan,
                     Ensemble::commuting, Ensemble::reid, Ensemble::kittaneh}) {
    if (ensemble_name(e) == name) return e;
  }
  return std::nullopt;
}

CMatrix haar_unitary(int dim, Rng& rng) {
  const CMatrix g = ginibre(dim, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double m = std::abs(rjj);
    q.col(j) *= (m > 0.0) ? rjj / m : Complex(1.0, 0.0);
  }
  return q;
}

CVector sample_state(int dim, Rng& rng) {
  CVector v(dim);
  double nrm2 = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v(i) = rng.cnormal();
    nrm2 = v.squaredNorm();
  } while (!(nrm2 > 1e-12));
  return v / std::sqrt(nrm2);
}

CMatrix sample_matrix(Ensemble e, int dim, Rng& rng) {
  switch (e) {
    case Ensemble::ginibre:
      return ginibre(dim, rng);
    case Ensemble::hermitian:
      return hermitian_draw(dim, rng);
    case Ensemble::psd: {
      const CMatrix g = ginibre(dim, rng);
      return g.adjoint() * g;
    }
    case Ensemble::unitary:
      return haar_unitary(dim, rng);
    case Ensemble::contraction: {
      const CMatrix g = ginibre(dim, rng);
      const double nrm = operator_norm(g);
      if (nrm == 0.0) return g;
      return g * (rng.uniform(0.2, 1.0) / nrm);
    }
    case Ensemble::jordan: {
      CMatrix j = jordan_block(dim);
      if (rng.coin()) j += 1e-3 * ginibre(dim, rng);
      return j;
    }
    default:
      throw InvalidArgument("ensemble " + ensemble_name(e) +
                            " requires a conditioned pair shape");
  }
}

OperatorInstance sample_instance(Shape shape, Ensemble e, int dim, int n_states,
                                 Rng& rng) {
  if (dim < 2 || dim > 16) {
    throw InvalidArgument("instance dimension " + std::to_string(dim) +
                          " outside [2, 16]");
  }
  OperatorInstance inst;
  inst.ensemble = ensemble_name(e);
  inst.dim = dim;

  const int kMaxAttempts = 100;
  switch (shape) {
    case Shape::single_operator:
    case Shape::operator_state:
      inst.matrices.push_back(sample_matrix(e, dim, rng));
      break;

    case Shape::pair:
      inst.matrices.push_back(sample_matrix(e, dim, rng));
      inst.matrices.push_back(sample_matrix(e, dim, rng));
      break;

    case Shape::pair_commuting: {
      bool ok = false;
      for (int attempt = 0; attempt < kMaxAttempts && !ok; ++attempt) {
        const CMatrix a = hermitian_draw(dim, rng);
        const int degree = rng.uniform_int(1, 3);
        CMatrix b = zero_matrix(dim);
        CMatrix apow = identity_matrix(dim);
        for (int k = 0; k <= degree; ++k) {
          b += Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)) * apow;
          if (k < degree) apow = apow * a;
        }
        if (operator_norm(a * b - b * a) <= 1e-10 * pair_scale(a, b)) {
          inst.matrices = {a, b};
          ok = true;
        }
      }
      if (!ok) throw ConditionUnsatisfiable("could not build a commuting pair");
      break;
    }

    case Shape::pair_reid: {
      bool ok = false;
      for (int attempt = 0; attempt < kMaxAttempts && !ok; ++attempt) {
        const CMatrix a = psd_invertible(dim, rng);
        const CMatrix s = hermitian_draw(dim, rng);
        const CMatrix b = a.llt().solve(s);
        const CMatrix ab = a * b;
        if (operator_norm(ab - ab.adjoint()) <= 1e-10 * pair_scale(a, b)) {
          inst.matrices = {a, b};
          ok = true;
        }
      }
      if (!ok) throw ConditionUnsatisfiable("could not build a Reid pair");
      break;
    }

    case Shape::pair_kittaneh: {
      bool ok = false;
      for (int attempt = 0; attempt < kMaxAttempts && !ok; ++attempt) {
        const CMatrix d = psd_invertible(dim, rng);
        const CMatrix u = haar_unitary(dim, rng);
        const CMatrix s = hermitian_draw(dim, rng);
        const CMatrix a = u * d;
        const CMatrix b = d.llt().solve(s);
        const CMatrix mod = abs_op(a);
        if (operator_norm(mod * b - b.adjoint() * mod) <=
            1e-10 * pair_scale(a, b)) {
          inst.matrices = {a, b};
          ok = true;
        }
      }
      if (!ok) throw ConditionUnsatisfiable("could not build a Kittaneh pair");
      break;
    }

    case Shape::vector_triple:
      break;
  }

  if (shape == Shape::vector_triple) {
    // x, y unscaled; e unit. Scales drawn so homogeneity is exercised.
    CVector x = sample_state(dim, rng) * rng.uniform(0.2, 3.0);
    CVector y = sample_state(dim, rng) * rng.uniform(0.2, 3.0);
    inst.states.push_back(x);
    inst.states.push_back(y);
    inst.states.push_back(sample_state(dim, rng));
  } else {
    for (int i = 0; i < n_states; ++i) inst.states.push_back(sample_state(dim, rng));
  }
  return inst;
}

}  // namespace numrad
