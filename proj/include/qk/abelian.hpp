#pragma once
// Canonical invariant-factor form of a finitely generated abelian group.
// Every homology computation in the library lands here, so equality of
// FGAbelianGroup values is isomorphism.

#include <string>
#include <vector>

#include "qk/gmp_eigen.hpp"

namespace qk {

class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;

  // Canonicalizes on construction: factors equal to 1 are dropped and the
  // divisibility chain d_i | d_{i+1} is enforced (throws DomainError if the
  // given list violates it; use from_factors to canonicalize arbitrary lists).
  FGAbelianGroup(Index free_rank, std::vector<Int> torsion);

  // Builds the canonical form of Z^free_rank + sum of Z/f for arbitrary
  // nonzero factors f (order and divisibility not required).
  static FGAbelianGroup from_factors(Index free_rank, const std::vector<Int>& factors);

  static FGAbelianGroup trivial() { return FGAbelianGroup(); }
  static FGAbelianGroup free(Index rank) { return FGAbelianGroup(rank, {}); }
  static FGAbelianGroup cyclic(const Int& n);

  Index free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }

  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_torsion_free() const { return torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  // Order of the torsion subgroup.
  Int torsion_order() const;

  FGAbelianGroup direct_sum(const FGAbelianGroup& other) const;

  // Number of homomorphisms into a finite abelian group; requires the target
  // to be finite.
  Int hom_count_into(const FGAbelianGroup& target) const;

  bool operator==(const FGAbelianGroup& other) const = default;

  // "0", "Z", "Z^2 + Z/2 + Z/4", ...
  std::string to_string() const;

 private:
  Index free_rank_ = 0;
  std::vector<Int> torsion_;
};

}  // namespace qk
