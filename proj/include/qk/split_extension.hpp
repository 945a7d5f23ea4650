#pragma once
// Split extensions of finite groups by finite abelian kernels: the semidirect
// product with the law (g,m)(g',m') = (gg', m + gm'), together with the
// commutativization comparison Com(G x| M) vs Com(G) + M_G.

#include <vector>

#include "qk/abelian.hpp"
#include "qk/group.hpp"

namespace qk {

class SplitExtensionGrp {
 public:
  // fiber must be abelian; action[g] is a permutation of the fiber elements
  // and must be an automorphism, with action a homomorphism from base.
  // Element (g,m) of the total group is numbered g*|M| + m, and the
  // multiplication law is verified elementwise at construction.
  SplitExtensionGrp(FinGroup base, FinGroup fiber,
                    std::vector<std::vector<int>> action);

  static SplitExtensionGrp direct_product(const FinGroup& base,
                                          const FinGroup& fiber);

  const FinGroup& base() const { return base_; }
  const FinGroup& fiber() const { return fiber_; }
  const FinGroup& total() const { return total_; }
  int act(int g, int m) const {
    return action_[static_cast<std::size_t>(g)][static_cast<std::size_t>(m)];
  }

  GroupHom projection() const;
  GroupHom zero_section() const;

  // M_G: coinvariants of the fiber under the base action, canonical form.
  FGAbelianGroup fiber_coinvariants() const;

 private:
  FinGroup base_, fiber_;
  std::vector<std::vector<int>> action_;
  FinGroup total_;
};

struct ComSplitResult {
  FGAbelianGroup total_ab;   // Com(G x| M)
  FGAbelianGroup predicted;  // Com(G) + M_G
};

ComSplitResult com_split_extension(const SplitExtensionGrp& e);

}  // namespace qk
