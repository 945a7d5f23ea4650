#pragma once
// Integral representations of finite groups (Z-free lattices with action),
// the Beck-module surrogates of the group instance: augmentation ideals,
// coinvariants, bar-complex group (co)homology, pushforward and pullback.

#include <optional>
#include <vector>

#include "qk/abelian.hpp"
#include "qk/gmp_eigen.hpp"
#include "qk/group.hpp"
#include "qk/simplicial.hpp"

namespace qk {

class ZGRep {
 public:
  // action[g] is the matrix of g on Z^rank; action(identity) = id and
  // action(g) action(h) = action(gh) are checked (which forces every action
  // matrix to be invertible over Z).
  ZGRep(FinGroup group, std::vector<IntMat> action);

  static ZGRep trivial(const FinGroup& g, Index rank);
  static ZGRep regular(const FinGroup& g);

  const FinGroup& group() const { return group_; }
  Index rank() const { return rank_; }
  const IntMat& action(int g) const { return action_[static_cast<std::size_t>(g)]; }

  ZGRep direct_sum(const ZGRep& other) const;

 private:
  FinGroup group_;
  Index rank_;
  std::vector<IntMat> action_;
};

// I_G = ker(ZG -> Z) on the basis {g_i - e : i = 1..|G|-1} in element order.
ZGRep augmentation_ideal(const FinGroup& g);

// Columns span the sublattice <m - g m>; cokernel is the coinvariants.
IntMat coinvariants_presentation(const ZGRep& m);
FGAbelianGroup coinvariants(const ZGRep& m);
// Invariant sublattice M^G, free of the returned rank.
FGAbelianGroup invariants(const ZGRep& m);

// H_n(G; M) for n = 0..max_degree from the inhomogeneous bar complex
// M (x) Z[G^n]; degenerate tuples retained.
std::vector<FGAbelianGroup> group_homology(const FinGroup& g, const ZGRep& m,
                                           Index max_degree,
                                           std::int64_t entry_cap = kDefaultEntryCap);

// H^n(G; M) from the dual bar cochain complex; H^0 is the invariants.
std::vector<FGAbelianGroup> group_cohomology(const FinGroup& g, const ZGRep& m,
                                             Index max_degree,
                                             std::int64_t entry_cap = kDefaultEntryCap);

// The bar construction as a simplicial Z-module, truncated at top_degree;
// the alternating sum of its faces is the group_homology boundary.
SimplicialZModule bar_simplicial_module(const FinGroup& g, const ZGRep& m,
                                        Index top_degree,
                                        std::int64_t entry_cap = kDefaultEntryCap);

// Equivariant map of lattices, verified at construction.
class ZGMap {
 public:
  ZGMap(const ZGRep& domain, const ZGRep& codomain, IntMat matrix);
  const ZGRep& domain() const { return *domain_; }
  const ZGRep& codomain() const { return *codomain_; }
  const IntMat& matrix() const { return matrix_; }

 private:
  const ZGRep* domain_;
  const ZGRep* codomain_;
  IntMat matrix_;
};

// Restriction of an H-lattice along f : G -> H.
ZGRep pullback_module(const GroupHom& f, const ZGRep& n);

// ZH (x)_{ZG} M along f : G -> H. The result need not be torsion-free, so
// the honest answer is the free lattice part together with the full
// finitely generated shadow.
struct PushforwardResult {
  ZGRep rep;                  // free part with the induced H-action
  FGAbelianGroup shadow;      // underlying group of the full pushforward
};
PushforwardResult pushforward_module(const GroupHom& f, const ZGRep& m);

// Number of equivariant maps M -> A where A is a finite abelian group with
// trivial G-action, found by enumerating tuples in A^rank against the
// integer-linear equivariance constraints. Guarded: |A|^rank <= limit.
Int count_equivariant_maps(const ZGRep& m, const FGAbelianGroup& a,
                           const Int& enumeration_limit = Int(2'000'000));

// The same hom-set enumerated explicitly: each map as the tuple of images of
// the lattice basis, entries componentwise against a's torsion factors.
std::vector<std::vector<std::vector<Int>>> enumerate_equivariant_maps(
    const ZGRep& m, const FGAbelianGroup& a,
    const Int& enumeration_limit = Int(2'000'000));

}  // namespace qk
