#pragma once
// Finite chain complexes of finitely generated free Z-modules, boundaries as
// integer matrices. The generic homology evaluator behind every derived
// functor in the library.

#include <vector>

#include "qk/abelian.hpp"
#include "qk/gmp_eigen.hpp"

namespace qk {

class ChainComplexZ {
 public:
  // ranks[n] is the rank in degree n (0..N); boundaries[n-1] maps degree n to
  // degree n-1, for n = 1..N. Dimensions and boundary*boundary = 0 are
  // checked at construction.
  ChainComplexZ(std::vector<Index> ranks, std::vector<IntMat> boundaries,
                std::int64_t entry_cap = kDefaultEntryCap);

  static ChainComplexZ zero(Index top_degree);

  Index top_degree() const { return static_cast<Index>(ranks_.size()) - 1; }
  Index rank(Index n) const;
  // Boundary from degree n to degree n-1; a zero 0 x rank(0) matrix at n = 0
  // and rank(N) x 0 past the top, so homology is uniform in n.
  IntMat boundary(Index n) const;

  const std::vector<Index>& ranks() const { return ranks_; }

  // Sum over n of (-1)^n rank(n).
  Int euler_characteristic() const;

 private:
  std::vector<Index> ranks_;
  std::vector<IntMat> boundaries_;
};

// ker(boundary_n) / im(boundary_{n+1}) in canonical form.
FGAbelianGroup chain_homology(const ChainComplexZ& c, Index n);

// Homology in all degrees 0..top.
std::vector<FGAbelianGroup> chain_homology_all(const ChainComplexZ& c);

}  // namespace qk
