#pragma once
// Finitely presented commutative rings k[x_1..x_m]/(f_1..f_r) with exact
// coefficients, restricted to monomial or univariate relation sets so normal
// forms are computable without a Groebner engine. Kaehler differentials,
// the two-term hypersurface cotangent complex, and square-zero extensions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qk/algebra.hpp"
#include "qk/fq.hpp"

namespace qk {

// Sparse multivariate polynomial over Q or F_p.
class Poly {
 public:
  explicit Poly(Index nvars) : nvars_(nvars) {}
  static Poly constant(Index nvars, const Fq& c);
  static Poly variable(Index nvars, Index i);
  static Poly monomial(std::vector<int> exps, const Fq& c);

  Index nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  // Single-term test (a monomial with unit coefficient times a scalar).
  bool is_monomial() const { return terms_.size() == 1; }
  int total_degree() const;
  // Degree in one variable; -1 for the zero polynomial.
  int degree_in(Index var) const;

  const std::map<std::vector<int>, Fq>& terms() const { return terms_; }
  void add_term(const std::vector<int>& exps, const Fq& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Fq& c) const;
  Poly derivative(Index var) const;

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  std::string to_string(const std::vector<std::string>& vars) const;

 private:
  Index nvars_;
  std::map<std::vector<int>, Fq> terms_;
};

// Parses sums of terms like "x^3", "2*x*y", "-3", "x0^2*x1" over the named
// variables. Throws SchemaError on malformed input.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                const Field& field);

class CommRingPres {
 public:
  // Guard: either every relation is a monomial, or there is one variable.
  CommRingPres(Field field, std::vector<std::string> vars, std::vector<Poly> relations);

  const Field& field() const { return field_; }
  Index nvars() const { return static_cast<Index>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Poly>& relations() const { return relations_; }

  bool monomial_case() const { return monomial_case_; }
  // Monic generator of the relation ideal in the univariate case; zero
  // polynomial when the ideal is zero.
  const Poly& univariate_generator() const;

  Poly normal_form(const Poly& p) const;

  // Monomial k-basis of the quotient, when finite-dimensional.
  std::optional<std::vector<std::vector<int>>> quotient_basis() const;

  struct AsAlgebra {
    FinDimAlgebra algebra;
    std::vector<std::vector<int>> basis;  // monomials for the coordinates
  };
  // Throws DomainError when the quotient is not finite-dimensional.
  AsAlgebra as_algebra() const;

  // Coordinates of the normal form of p in the quotient basis.
  FVec coordinates(const Poly& p, const std::vector<std::vector<int>>& basis) const;

 private:
  Field field_;
  std::vector<std::string> vars_;
  std::vector<Poly> relations_;
  bool monomial_case_;
  Poly uni_gen_;
};

// The module of Kaehler differentials as a presented module: generators
// dx_i, one relation row df_j per ring relation.
struct KaehlerModule {
  Index generators = 0;                       // number of dx_i
  std::vector<std::vector<Poly>> relations;   // rows df_j, entries in normal form
  bool free = false;                          // all relation rows vanish
  std::optional<Index> k_dimension;           // set when the ring is finite-dim
};
KaehlerModule kaehler_differentials(const CommRingPres& r);

// Two-term complex A e --(f')--> A dx for A = k[x]/(f): D_0 = coker = Omega,
// D_1 = ker = ann_A(f').
struct HypersurfaceCotangent {
  Index d0_dim = 0;
  Index d1_dim = 0;
  Poly annihilator;        // monic gcd(f, f'), the canonical invariant of D_0
  bool d0_matches_kaehler = false;
  HypersurfaceCotangent() : annihilator(1) {}
};
HypersurfaceCotangent hypersurface_cotangent(const CommRingPres& r);

// R + M with multiplication (r,m)(r',m') = (rr', rm' + mr'), for commutative
// R and a symmetric module given by its action matrices per R-basis element.
struct SquareZeroResult {
  FinDimAlgebra extension;
  FMat nilradical_basis;   // in extension coordinates
  bool nil_contains_module = false;
  bool nil_equals_module = false;
  bool extension_reduced = false;
};
SquareZeroResult square_zero_extension(const FinDimAlgebra& r,
                                       const std::vector<FMat>& module_action);

// Module structure on k^rank over R given by acting through one coordinate
// functional; convenience builders for fixtures.
std::vector<FMat> regular_module_action(const FinDimAlgebra& r);
// R = product of fields: action through the i-th factor on k^1.
std::vector<FMat> factor_module_action(const FinDimAlgebra& r, Index factor);

}  // namespace qk
