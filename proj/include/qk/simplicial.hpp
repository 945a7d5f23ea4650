#pragma once
// Simplicial modules over Z, carried up to a finite truncation degree, with
// the Moore (normalized) and alternating-sum chain complexes. Face and
// degeneracy matrices are stored explicitly so the simplicial identities can
// be verified at construction.

#include <vector>

#include "qk/chain_complex.hpp"
#include "qk/gmp_eigen.hpp"

namespace qk {

class SimplicialZModule {
 public:
  // levels[n] is the rank in degree n = 0..N.
  // faces[n-1][i] is d_i : level_n -> level_{n-1}, i = 0..n, for n = 1..N.
  // degeneracies[n][i] is s_i : level_n -> level_{n+1}, i = 0..n, n = 0..N-1.
  // All simplicial identities expressible within the truncation are checked.
  SimplicialZModule(std::vector<Index> levels,
                    std::vector<std::vector<IntMat>> faces,
                    std::vector<std::vector<IntMat>> degeneracies,
                    std::int64_t entry_cap = kDefaultEntryCap);

  static SimplicialZModule constant(Index rank, Index top_degree);

  Index top_degree() const { return static_cast<Index>(levels_.size()) - 1; }
  Index level_rank(Index n) const { return levels_[static_cast<std::size_t>(n)]; }
  const IntMat& face(Index n, Index i) const;
  const IntMat& degeneracy(Index n, Index i) const;

  SimplicialZModule direct_sum(const SimplicialZModule& other) const;
  SimplicialZModule truncate(Index new_top) const;

 private:
  std::vector<Index> levels_;
  std::vector<std::vector<IntMat>> faces_;
  std::vector<std::vector<IntMat>> degeneracies_;
};

// Normalized chains: degree n is the intersection of ker d_i for i >= 1, on
// an explicitly computed integer basis; the boundary is d_0 restricted.
ChainComplexZ moore_complex(const SimplicialZModule& s);

// Unnormalized chains with boundary sum_i (-1)^i d_i.
ChainComplexZ alternating_sum_complex(const SimplicialZModule& s);

// pi_n = H_n of the Moore complex; only trustworthy below the truncation
// degree, so n must be at most top_degree - 1.
FGAbelianGroup simplicial_pi(const SimplicialZModule& s, Index n);

// Dold-Kan functor from chain complexes to simplicial modules, up to the
// given truncation degree. Levels are sums of copies of the chain groups
// indexed by the monotone surjections out of [n].
SimplicialZModule dold_kan(const ChainComplexZ& c, Index top_degree);

}  // namespace qk
