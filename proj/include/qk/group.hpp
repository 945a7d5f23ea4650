#pragma once
// Finite groups by multiplication table. Element 0 is the identity; the
// constructors fix a deterministic numbering so downstream results are
// reproducible.

#include <string>
#include <vector>

#include "qk/abelian.hpp"
#include "qk/gmp_eigen.hpp"

namespace qk {

class FinGroup {
 public:
  // Validates associativity, identity, and inverses; reports the failing
  // triple on violation.
  static FinGroup from_table(std::vector<std::vector<int>> table);
  static FinGroup trivial() { return cyclic(1); }
  static FinGroup cyclic(int n);
  // Permutations of {0..n-1} in lexicographic order (identity first), n <= 4.
  static FinGroup symmetric(int n);
  static FinGroup product(const FinGroup& a, const FinGroup& b);
  // Dihedral group of order 2n: elements 0..n-1 rotations, n..2n-1 reflections.
  static FinGroup dihedral(int n);
  // Quaternion group of order 8.
  static FinGroup quaternion();

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int g, int h) const { return table_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
  int inv(int g) const { return inverse_[static_cast<std::size_t>(g)]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool is_abelian() const;
  int element_order(int g) const;

  // Subgroup generated by the given elements, as a sorted element list.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;
  std::vector<int> commutator_subgroup() const;

  bool operator==(const FinGroup&) const = default;

 private:
  explicit FinGroup(std::vector<std::vector<int>> table);
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

// Group homomorphism, verified at construction.
class GroupHom {
 public:
  GroupHom(FinGroup domain, FinGroup codomain, std::vector<int> map);
  static GroupHom identity(const FinGroup& g);

  const FinGroup& domain() const { return domain_; }
  const FinGroup& codomain() const { return codomain_; }
  int operator()(int g) const { return map_[static_cast<std::size_t>(g)]; }
  const std::vector<int>& map() const { return map_; }

  bool is_surjective() const;
  GroupHom compose_after(const GroupHom& inner) const;  // this o inner

 private:
  FinGroup domain_, codomain_;
  std::vector<int> map_;
};

// G/[G,G] in canonical invariant-factor form.
FGAbelianGroup abelianize_group(const FinGroup& g);

// Canonical form of a finite abelian group given by its table.
FGAbelianGroup abelian_group_structure(const FinGroup& g);

// Quotient by a normal subgroup (elements listed); element 0 of the quotient
// is the identity coset, numbering by smallest coset representative.
FinGroup quotient_group(const FinGroup& g, const std::vector<int>& normal);

}  // namespace qk
