#pragma once
// Bimodules over a finite-dimensional algebra (Beck modules of the
// associative instance), the multiplication-kernel bimodule I_A, central
// quotients, and Hochschild homology via the bar complex.

#include <vector>

#include "qk/algebra.hpp"
#include "qk/field_linalg.hpp"

namespace qk {

class Bimodule {
 public:
  // left[i], right[i]: action of basis element e_i of the algebra. Unitality,
  // associativity of both actions and their commuting are verified.
  Bimodule(const FinDimAlgebra& algebra, std::vector<FMat> left,
           std::vector<FMat> right);

  // A over itself with outer multiplications.
  static Bimodule regular(const FinDimAlgebra& a);
  static Bimodule zero(const FinDimAlgebra& a);

  const FinDimAlgebra& algebra() const { return *algebra_; }
  Index dim() const { return dim_; }
  FMat left_action(const FVec& a) const;
  FMat right_action(const FVec& a) const;
  const FMat& left_basis(Index i) const { return left_[static_cast<std::size_t>(i)]; }
  const FMat& right_basis(Index i) const { return right_[static_cast<std::size_t>(i)]; }

 private:
  const FinDimAlgebra* algebra_;
  Index dim_;
  std::vector<FMat> left_, right_;
};

// I_A = ker(A (x) A -> A) with the outer bimodule actions; dim = dim(A)^2 -
// dim(A). Also returns the inclusion into A (x) A (basis columns).
struct MultKernel {
  Bimodule bimodule;
  FMat inclusion;  // dim(A)^2 x dim(I_A)
};
MultKernel mult_kernel_bimodule(const FinDimAlgebra& a);

// M / <a m - m a>: dimension and the quotient map matrix.
struct CentralQuotient {
  Index dim = 0;
  FMat quotient_map;  // dim x dim(M)
};
CentralQuotient central_quotient(const Bimodule& m);

// dim HH_n(A; M) for n = 0..max_degree via the bar complex M (x) A^{(x)n};
// normalized = true instead uses the complex modulo the degenerate
// subcomplex spanned by tensors with a unit factor.
std::vector<Index> hochschild_homology(const FinDimAlgebra& a, const Bimodule& m,
                                       Index max_degree, bool normalized = false,
                                       std::int64_t entry_cap = kDefaultEntryCap);

// Bar boundary b_n : M (x) A^n -> M (x) A^{n-1} (unnormalized).
FMat hochschild_boundary(const FinDimAlgebra& a, const Bimodule& m, Index n,
                         std::int64_t entry_cap = kDefaultEntryCap);

// Map of bimodules, verified equivariant for both actions.
class BimoduleMap {
 public:
  BimoduleMap(const Bimodule& domain, const Bimodule& codomain, FMat matrix);
  const Bimodule& domain() const { return *domain_; }
  const Bimodule& codomain() const { return *codomain_; }
  const FMat& matrix() const { return matrix_; }

 private:
  const Bimodule* domain_;
  const Bimodule* codomain_;
  FMat matrix_;
};

}  // namespace qk
