#pragma once
// Exact integer linear algebra on dense GMP matrices: Smith normal form,
// kernels, cokernels, exact solves, and the two-boundary homology kernel
// shared by every chain-level computation in the library.

#include <optional>
#include <vector>

#include "qk/abelian.hpp"
#include "qk/gmp_eigen.hpp"

namespace qk {

// u * m * v = d with u, v unimodular and d diagonal, nonnegative, satisfying
// the divisibility chain. Pivoting is fixed (smallest nonzero absolute value,
// row-major scan) so the output is deterministic.
struct SmithResult {
  IntMat u;
  IntMat d;
  IntMat v;
};

SmithResult smith_normal_form(const IntMat& m);

// Which transform matrices smith_decompose should accumulate. The homology
// and pushforward engines need inverses, which are cheaper to track during
// the reduction than to compute afterwards.
struct SmithOptions {
  bool with_u = false;
  bool with_uinv = false;
  bool with_v = false;
  bool with_vinv = false;
};

struct SmithDecomposition {
  IntMat d;
  Index rank = 0;
  std::vector<Int> invariant_factors;  // nonzero diagonal of d, in chain order
  std::optional<IntMat> u, uinv, v, vinv;
};

SmithDecomposition smith_decompose(IntMat w, const SmithOptions& opt);

// Basis of the integer kernel lattice of m, as columns. The kernel of an
// integer matrix is saturated, so this is a basis of the full kernel.
IntMat int_kernel_basis(const IntMat& m);

// Canonical form of Z^rows / (column span of m).
FGAbelianGroup int_cokernel(const IntMat& m);

// Exact solve a * x = b over the integers; nullopt when no integral solution
// exists. b may have several columns.
std::optional<IntMat> int_solve(const IntMat& a, const IntMat& b);

// ker(out) / im(in), where out has one column per generator and in's columns
// land in ker(out). Throws DomainError if some column of in is not a cycle.
FGAbelianGroup homology_of_pair(const IntMat& out, const IntMat& in);

// Rank over Q, computed by fraction-free elimination; independent of the
// Smith route on purpose (used as a cross-check in tests).
Index rational_rank(IntMat m);

// Exact determinant (fraction-free Bareiss); requires a square matrix.
Int det_bareiss(IntMat m);

// Sparse-aware product accumulating only through nonzero entries of b.
IntMat multiply_skipping_zeros(const IntMat& a, const IntMat& b);

}  // namespace qk
