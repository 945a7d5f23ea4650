#pragma once
// Exact row reduction over Q or F_p, and the subspace/quotient helpers the
// algebra engines are built on.

#include <optional>
#include <vector>

#include "qk/fq.hpp"
#include "qk/gmp_eigen.hpp"

namespace qk {

struct RowEchelon {
  FMat reduced;                    // reduced row-echelon form
  std::vector<Index> pivot_cols;   // one per nonzero row
  Index rank = 0;
};

RowEchelon row_reduce(FMat m);

Index field_rank(const FMat& m);

// Columns form a basis of ker(m).
FMat field_kernel_basis(const FMat& m);

inline Index field_cokernel_dim(const FMat& m) {
  return m.rows() - field_rank(m);
}

// Exact solve m * x = b; nullopt when inconsistent. b may have several
// columns; the particular solution with free variables set to zero.
std::optional<FMat> field_solve(const FMat& m, const FMat& b);

// A subspace W of k^dim given by a spanning set; supports reduction of
// vectors to a normal form modulo W and projection onto canonical complement
// coordinates (the non-pivot coordinates of k^dim / W).
class Subspace {
 public:
  // span: dim x (number of spanning vectors)
  explicit Subspace(const FMat& span);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return echelon_.rank; }
  Index codim() const { return ambient_ - echelon_.rank; }

  bool contains(const FVec& v) const;
  // Normal form of v modulo the subspace (still in k^ambient).
  FVec reduce(const FVec& v) const;
  // Coordinates of v + W in the complement basis {e_j + W : j non-pivot}.
  FVec project(const FVec& v) const;
  // codim x ambient matrix of the projection.
  FMat projection_matrix() const;
  // List of non-pivot coordinates, i.e. which ambient basis vectors descend
  // to the canonical basis of the quotient.
  const std::vector<Index>& complement_coords() const { return complement_; }

 private:
  Index ambient_;
  RowEchelon echelon_;  // rows span W
  std::vector<Index> complement_;
};

}  // namespace qk
