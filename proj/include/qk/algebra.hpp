#pragma once
// Finite-dimensional associative unital algebras by structure constants over
// Q or F_p. Associativity and the unit law are verified on basis triples at
// construction.

#include <vector>

#include "qk/field_linalg.hpp"
#include "qk/fq.hpp"
#include "qk/gmp_eigen.hpp"

namespace qk {

class FinDimAlgebra {
 public:
  // mul[i] is the matrix of left multiplication by e_i on coordinates:
  // column j of mul[i] holds the structure constants c[i][j][*] of e_i e_j.
  FinDimAlgebra(Field field, std::vector<FMat> mul, FVec unit);

  static FinDimAlgebra from_structure_constants(
      Field field, const std::vector<std::vector<std::vector<Fq>>>& c,
      const FVec& unit);

  // The ground field k as an algebra.
  static FinDimAlgebra ground(Field field);
  static FinDimAlgebra matrix_algebra(Field field, Index n);
  static FinDimAlgebra upper_triangular(Field field, Index n);
  // k x k with idempotent basis.
  static FinDimAlgebra product_of_fields(Field field, Index copies);
  // Tensor algebra on n generators truncated above total degree d: words of
  // length <= d, longer products vanish.
  static FinDimAlgebra truncated_tensor_algebra(Field field, Index gens, Index max_len);
  // Polynomial algebra on n commuting generators truncated above degree d.
  static FinDimAlgebra truncated_polynomial_algebra(Field field, Index gens, Index max_len);

  const Field& field() const { return field_; }
  Index dim() const { return dim_; }
  const FVec& unit() const { return unit_; }

  // e_i e_j in coordinates.
  FVec basis_product(Index i, Index j) const { return mul_[static_cast<std::size_t>(i)].col(j); }
  FVec product(const FVec& a, const FVec& b) const;
  // Left/right multiplication operators.
  FMat left_mult(const FVec& a) const;
  FMat right_mult(const FVec& a) const;
  FMat left_mult_basis(Index i) const { return mul_[static_cast<std::size_t>(i)]; }

  bool is_commutative() const;
  bool is_zero_ring() const { return dim_ == 0; }

  FVec power(const FVec& a, Index n) const;
  bool is_nilpotent_element(const FVec& a, Index exponent_bound) const;

 private:
  Field field_;
  Index dim_;
  std::vector<FMat> mul_;
  FVec unit_;
};

struct QuotientAlgebra {
  FinDimAlgebra algebra;
  FMat projection;  // quotient coordinates from ambient coordinates
  // Ambient basis indices that descend to the quotient basis; embedding them
  // back gives a linear section of the projection.
  std::vector<Index> section_coords;
};

// A / (two-sided ideal generated by all basis commutators); commutative by
// construction and verified. The projection realizes the unit map A -> Com(A).
QuotientAlgebra commutator_quotient(const FinDimAlgebra& a);

// Quotient of a by a two-sided ideal given by a spanning set (closure under
// left/right multiplication is taken internally).
QuotientAlgebra quotient_by_ideal(const FinDimAlgebra& a, const FMat& ideal_span);

// Nilradical of a commutative algebra: trace-form kernel in characteristic 0,
// iterated Frobenius kernel in characteristic p. Every basis vector of the
// result is additionally checked nilpotent with exponent bound 2*dim.
FMat nilradical(const FinDimAlgebra& a);
bool is_reduced(const FinDimAlgebra& a);

}  // namespace qk
