#include "numrad/registry.hpp"

#include "numrad/errors.hpp"

namespace numrad {

namespace {

const std::vector<std::string> kMixedSingle = {"ginibre",     "hermitian",
                                               "psd",         "unitary",
                                               "contraction", "jordan"};
const std::vector<std::string> kMixedPair = {"ginibre", "hermitian",
                                             "contraction"};
const std::vector<std::string> kPsd = {"psd"};

std::vector<InequalityDescriptor> build_registry() {
  std::vector<InequalityDescriptor> r;

  auto add = [&](InequalityDescriptor d) { r.push_back(std::move(d)); };

  // --- Classical numerical radius sandwich and refinements -------------
  add({.id = "I1.1L",
       .anchor = "(1.1) lower",
       .summary = "0.5*||T|| <= w(T)",
       .status = Status::established,
       .shape = Shape::single_operator,
       .scaling_checked = true,
       .ensembles = kMixedSingle});
  add({.id = "I1.1R",
       .anchor = "(1.1) upper",
       .summary = "w(T) <= ||T||",
       .status = Status::established,
       .shape = Shape::single_operator,
       .scaling_checked = true,
       .ensembles = kMixedSingle});
  add({.id = "I1.2",
       .anchor = "(1.2)",
       .summary = "w(T) <= (||T|| + ||T^2||^{1/2}) / 2",
       .status = Status::established,
       .shape = Shape::single_operator,
       .ensembles = kMixedSingle});
  add({.id = "I1.3L",
       .anchor = "(1.3) lower",
       .summary = "||A*A + AA*||/4 <= w(A)^2",
       .status = Status::established,
       .shape = Shape::single_operator,
       .scaling_checked = true,
       .ensembles = kMixedSingle});
  add({.id = "I1.3R",
       .anchor = "(1.3) upper",
       .summary = "w(A)^2 <= ||A*A + AA*||/2",
       .status = Status::established,
       .shape = Shape::single_operator,
       .scaling_checked = true,
       .ensembles = kMixedSingle});
  add({.id = "I1.4",
       .anchor = "(1.4)",
       .summary = "w(T) <= (||T|| + w(T~))/2 <= (||T|| + ||T^2||^{1/2})/2",
       .status = Status::established,
       .shape = Shape::single_operator,
       .ensembles = kMixedSingle});
  add({.id = "I1.5",
       .anchor = "(1.5) as printed",
       .summary = "w(T)^2 <= (||T|| + w(T^2))/2, degree-mismatched as printed",
       .status = Status::novel,
       .shape = Shape::single_operator,
       .inhomogeneous = true,
       .ensembles = kMixedSingle});

  // --- Chebyshev functional -------------------------------------------
  add({.id = "T1.1",
       .anchor = "thm 1.1",
       .summary = "C(f,g;A;x) >= 0 for synchronous monotone pairs, <= 0 for "
                  "asynchronous",
       .status = Status::established,
       .shape = Shape::operator_state,
       .n_states = 1,
       .params = ParamKind::pair_monotone,
       .ensembles = kPsd});
  add({.id = "T2.1",
       .anchor = "(2.1)",
       .summary = "|C(f,g;A;x)| <= C(f,f)^{1/2} C(g,g)^{1/2}",
       .status = Status::established,
       .shape = Shape::operator_state,
       .n_states = 1,
       .params = ParamKind::pair_general,
       .ensembles = kPsd});
  add({.id = "C2.2\xce\xb1",
       .anchor = "(2.1) power corollary",
       .summary = "pre-Gruss bound for the pair (t^a, t^{1-a}), a in [0, 1/2]",
       .status = Status::established,
       .shape = Shape::operator_state,
       .n_states = 1,
       .params = ParamKind::alpha,
       .alpha_lo = 0.0,
       .alpha_hi = 0.5,
       .ensembles = kPsd});

  // --- Schwarz family ---------------------------------------------------
  add({.id = "SCHWARZ",
       .anchor = "schwarz",
       .summary = "|<Ax,y>|^2 <= <Ax,x><Ay,y> for PSD A",
       .status = Status::established,
       .shape = Shape::operator_state,
       .n_states = 2,
       .scaling_checked = true,
       .ensembles = kPsd});
  add({.id = "REID",
       .anchor = "reid",
       .summary = "|<ABx,x>| <= ||B|| <Ax,x> when A is PSD and AB selfadjoint",
       .status = Status::established,
       .shape = Shape::pair_reid,
       .n_states = 1,
       .ensembles = {"reid"}});
  add({.id = "HALMOS",
       .anchor = "reid, spectral-radius form",
       .summary = "|<ABx,x>| <= r(B) <Ax,x> under the Reid hypotheses",
       .status = Status::established,
       .shape = Shape::pair_reid,
       .n_states = 1,
       .wide_tol = true,
       .ensembles = {"reid"}});
  add({.id = "KATO",
       .anchor = "kato",
       .summary = "|<Ax,y>|^2 <= <|A|^{2a}x,x> <|A*|^{2(1-a)}y,y>",
       .status = Status::established,
       .shape = Shape::operator_state,
       .n_states = 2,
       .scaling_checked = true,
       .params = ParamKind::alpha,
       .ensembles = kMixedSingle});
  add({.id = "KITT",
       .anchor = "kittaneh mixed",
       .summary = "|<ABx,y>| <= r(B) ||f(|A|)x|| ||g(|A*|)y|| when "
                  "|A|B = B*|A| and f g = t",
       .status = Status::established,
       .shape = Shape::pair_kittaneh,
       .n_states = 2,
       .wide_tol = true,
       .params = ParamKind::alpha,
       .ensembles = {"kittaneh"}});

  // --- Radius bounds from the pre-Gruss route ---------------------------
  add({.id = "E4.2",
       .anchor = "(e.4.2)",
       .summary = "w(f(A)g(A)) - wmin(f(A)) wmin(g(A)) <= "
                  "[||f(A)||^2 - l(f^{1/2}(A))^2]^{1/2} "
                  "[||g(A)||^2 - l(g^{1/2}(A))^2]^{1/2}",
       .status = Status::novel,
       .shape = Shape::single_operator,
       .inhomogeneous = true,
       .params = ParamKind::pair_nonneg,
       .ensembles = kPsd});
  add({.id = "E4.3",
       .anchor = "(e.4.3)",
       .summary = "power form of (e.4.2)",
       .status = Status::novel,
       .shape = Shape::single_operator,
       .inhomogeneous = true,
       .params = ParamKind::alpha,
       .ensembles = kPsd});
  add({.id = "E4.4",
       .anchor = "(e.4.4)",
       .summary = "a = 1/2 case of (e.4.3)",
       .status = Status::novel,
       .shape = Shape::single_operator,
       .inhomogeneous = true,
       .ensembles = kPsd});
  add({.id = "E4.5",
       .anchor = "(e.4.5)",
       .summary = "w(f(A)^2) - wmin(f(A))^2 <= ||f(A)||^2 - l(f^{1/2}(A))^2",
       .status = Status::novel,
       .shape = Shape::single_operator,
       .inhomogeneous = true,
       .params = ParamKind::single_nonneg,
       .ensembles = kPsd});
  add({.id = "E4.6",
       .anchor = "(e.4.6)",
       .summary = "p-power form of (e.4.5)",
       .status = Status::novel,
       .shape = Shape::single_operator,
       .inhomogeneous = true,
       .params = ParamKind::power_p,
       .ensembles = kPsd});
  add({.id = "E4.7",
       .anchor = "(e.4.7)",
       .summary = "w(A) - wmin(f(A)) wmin(g(A)) <= ||f^2(|A|)+g^2(|A*|)||/2 "
                  "- l(f^{1/2}(A))^2 l(g^{1/2}(A))^2",
       .status = Status::novel,
       .shape = Shape::single_operator,
       .inhomogeneous = true,
       .params = ParamKind::alpha,
       .ensembles = kPsd});
  add({.id = "E4.8",
       .anchor = "(e.4.8)",
       .summary = "power form of (e.4.7)",
       .status = Status::novel,
       .shape = Shape::single_operator,
       .inhomogeneous = true,
       .params = ParamKind::alpha,
       .ensembles = kPsd});
  add({.id = "E4.9",
       .anchor = "(e.4.9)",
       .summary = "a = 1/2 case of (e.4.8)",
       .status = Status::novel,
       .shape = Shape::single_operator,
       .inhomogeneous = true,
       .ensembles = kPsd});

  // --- Cauchy-Schwarz refinement route ----------------------------------
  add({.id = "KEY",
       .anchor = "key",
       .summary = "|<x,e><e,y>| <= (|<x,y>| + ||x|| ||y||)/2 for unit e",
       .status = Status::established,
       .shape = Shape::vector_triple,
       .n_states = 3,
       .ensembles = {}});
  add({.id = "EQ2.11",
       .anchor = "(2.11)",
       .summary = "w((A+B)^2) <= w(A^2)+w(B^2) + min(w(BA^2B)+||AB||^2, "
                  "w(AB^2A)+||BA||^2)/4",
       .status = Status::novel,
       .shape = Shape::pair,
       .inhomogeneous = true,
       .ensembles = kMixedPair});
  add({.id = "EQ2.14",
       .anchor = "(2.14)",
       .summary = "w(A^2) <= (w(A^4) + ||A^2||^2)/8",
       .status = Status::novel,
       .shape = Shape::single_operator,
       .inhomogeneous = true,
       .ensembles = kMixedSingle});

  // --- Non-commutative binomial route ------------------------------------
  add({.id = "EQ2.18",
       .anchor = "(2.18)",
       .summary = "w((A+B)^n) <= sum_k C(n,k) ||f(|T_k|)+g(|T_k*|)|| / 2 over "
                  "the expansion terms T_k",
       .status = Status::novel,
       .shape = Shape::pair,
       .inhomogeneous = true,
       .params = ParamKind::alpha_and_n,
       .n_lo = 2,
       .n_hi = 5,
       .ensembles = kMixedPair});
  add({.id = "NORM-REM",
       .anchor = "(2.18) norm form",
       .summary = "||(A+B)^n|| bounded by the same term sum",
       .status = Status::novel,
       .shape = Shape::pair,
       .inhomogeneous = true,
       .params = ParamKind::alpha_and_n,
       .n_lo = 2,
       .n_hi = 5,
       .ensembles = kMixedPair});
  add({.id = "EQ2.19",
       .anchor = "(2.19), recurrence D_1 = 0",
       .summary = "w(A+B) <= ||f(|B|)+g(|B*|)+f(|A|)+g(|A*|)||/2",
       .status = Status::novel,
       .shape = Shape::pair,
       .inhomogeneous = true,
       .params = ParamKind::alpha,
       .ensembles = kMixedPair});
  add({.id = "EQ2.19-literal",
       .anchor = "(2.19) as printed",
       .summary = "variant with A + (BA - AB) inside the moduli",
       .status = Status::novel,
       .shape = Shape::pair,
       .inhomogeneous = true,
       .params = ParamKind::alpha,
       .ensembles = kMixedPair});
  add({.id = "EQ2.20",
       .anchor = "(2.20)",
       .summary = "commuting-pair form of (2.18) with terms A^k B^{n-k}",
       .status = Status::novel,
       .shape = Shape::pair_commuting,
       .inhomogeneous = true,
       .params = ParamKind::alpha_and_n,
       .n_lo = 2,
       .n_hi = 5,
       .ensembles = {"commuting"}});
  add({.id = "EQ2.21",
       .anchor = "(2.21)",
       .summary = "w(A^n) <= ||f(|A^n|)+g(|(A^n)*|)||/2",
       .status = Status::novel,
       .shape = Shape::single_operator,
       .inhomogeneous = true,
       .params = ParamKind::alpha_and_n,
       .n_lo = 1,
       .n_hi = 4,
       .ensembles = kMixedSingle});
  add({.id = "EQ2.22",
       .anchor = "(2.22)",
       .summary = "w(A^n) <= || |A^n|^a + |(A^n)*|^{1-a} ||/2",
       .status = Status::novel,
       .shape = Shape::single_operator,
       .inhomogeneous = true,
       .params = ParamKind::alpha_and_n,
       .n_lo = 1,
       .n_hi = 4,
       .ensembles = kMixedSingle});
  add({.id = "EQ2.23",
       .anchor = "(2.23)",
       .summary = "w(A) <= || |A|^a + |A*|^{1-a} ||/2",
       .status = Status::novel,
       .shape = Shape::single_operator,
       .inhomogeneous = true,
       .params = ParamKind::alpha,
       .ensembles = kMixedSingle});
  add({.id = "EQ2.24",
       .anchor = "(2.24)",
       .summary = "w(A) <= || |A| + 1 ||/2 <= (1+||A||+sqrt((||A||-1)^2+"
                  "4||A||))/4",
       .status = Status::novel,
       .shape = Shape::single_operator,
       .inhomogeneous = true,
       .ensembles = kMixedSingle});

  // --- Established companions --------------------------------------------
  add({.id = "FK3",
       .anchor = "psd norm sum",
       .summary = "||A+B|| <= (||A||+||B||+sqrt((||A||-||B||)^2+"
                  "4||A^{1/2}B^{1/2}||^2))/2 for PSD A, B",
       .status = Status::established,
       .shape = Shape::pair,
       .scaling_checked = true,
       .ensembles = {"psd"}});
  add({.id = "KITT-SQ",
       .anchor = "kittaneh squared-function radius bound",
       .summary = "w(A) <= ||f^2(|A|) + g^2(|A*|)||/2 with f g = t; the "
                  "established contrast to the unsquared novel forms",
       .status = Status::established,
       .shape = Shape::single_operator,
       .inhomogeneous = true,
       .params = ParamKind::alpha,
       .ensembles = kMixedSingle});

  return r;
}

}  // namespace

const std::vector<InequalityDescriptor>& registry() {
  static const std::vector<InequalityDescriptor> r = build_registry();
  return r;
}

const InequalityDescriptor& find_descriptor(const std::string& id) {
  for (const auto& d : registry()) {
    if (d.id == id) return d;
  }
  throw UnknownId("no registry entry with id \"" + id + "\"");
}

std::vector<std::string> registry_ids() {
  std::vector<std::string> ids;
  for (const auto& d : registry()) ids.push_back(d.id);
  return ids;
}

std::string status_name(Status s) {
  return s == Status::established ? "established" : "novel";
}

}  // namespace numrad
