#include <random>

#include "doctest.h"
#include "qk/errors.hpp"
#include "qk/int_linalg.hpp"
#include "qk/simplicial.hpp"
#include "qk/split_extension.hpp"
#include "qk/zg_module.hpp"

using namespace qk;

namespace {

// Independent oracle: homology of the cyclic group C_m with trivial Z
// coefficients from its periodic free resolution
//   ... -> ZC -(N)-> ZC -(t-1)-> ZC -> Z -> 0,
// which after applying Z (x)_{ZC} - becomes ... -> Z -(0)-> Z -(m)-> Z -(0)-> Z.
FGAbelianGroup cyclic_homology_oracle(int m, Index n) {
  if (n == 0) return FGAbelianGroup::free(1);
  if (n % 2 == 1) return FGAbelianGroup::cyclic(m);
  return FGAbelianGroup::trivial();
}

FGAbelianGroup cyclic_cohomology_oracle(int m, Index n) {
  if (n == 0) return FGAbelianGroup::free(1);
  if (n % 2 == 0) return FGAbelianGroup::cyclic(m);
  return FGAbelianGroup::trivial();
}

}  // namespace

TEST_CASE("group constructors") {
  CHECK(FinGroup::trivial().order() == 1);
  CHECK(FinGroup::cyclic(5).order() == 5);
  CHECK(FinGroup::cyclic(5).is_abelian());
  const FinGroup s3 = FinGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  const FinGroup v4 = FinGroup::product(FinGroup::cyclic(2), FinGroup::cyclic(2));
  CHECK(v4.order() == 4);
  for (int g = 0; g < 4; ++g) CHECK(v4.element_order(g) <= 2);
  const FinGroup q8 = FinGroup::quaternion();
  CHECK(q8.order() == 8);
  CHECK_FALSE(q8.is_abelian());
  CHECK(q8.element_order(1) == 4);   // i
  CHECK(q8.element_order(4) == 2);   // -1
  const FinGroup d4 = FinGroup::dihedral(4);
  CHECK(d4.order() == 8);
  CHECK_FALSE(d4.is_abelian());

  // Broken table: swap one entry of C_3.
  auto t = FinGroup::cyclic(3).table();
  t[1][1] = 1;
  CHECK_THROWS_AS(FinGroup::from_table(t), SchemaError);
}

TEST_CASE("abelianization of groups") {
  CHECK(abelianize_group(FinGroup::cyclic(6)) == FGAbelianGroup::cyclic(6));
  CHECK(abelianize_group(FinGroup::product(FinGroup::cyclic(2), FinGroup::cyclic(2))) ==
        FGAbelianGroup(0, {2, 2}));
  CHECK(abelianize_group(FinGroup::symmetric(3)) == FGAbelianGroup::cyclic(2));
  CHECK(abelianize_group(FinGroup::quaternion()) == FGAbelianGroup(0, {2, 2}));
  CHECK(abelianize_group(FinGroup::symmetric(4)) == FGAbelianGroup::cyclic(2));
  // Commutator subgroup of S_3 is A_3.
  CHECK(FinGroup::symmetric(3).commutator_subgroup().size() == 3);
}

TEST_CASE("augmentation ideal") {
  CHECK(augmentation_ideal(FinGroup::trivial()).rank() == 0);

  const ZGRep ic2 = augmentation_ideal(FinGroup::cyclic(2));
  CHECK(ic2.rank() == 1);
  CHECK(ic2.action(1)(0, 0) == -1);

  const ZGRep ic3 = augmentation_ideal(FinGroup::cyclic(3));
  IntMat expected(2, 2);
  expected << -1, -1, 1, 0;
  CHECK(ic3.action(1) == expected);
}

TEST_CASE("coinvariants and invariants") {
  const FinGroup c2 = FinGroup::cyclic(2);
  CHECK(coinvariants(ZGRep::trivial(c2, 3)) == FGAbelianGroup::free(3));

  // C_2 swapping two coordinates.
  IntMat swap(2, 2);
  swap << 0, 1, 1, 0;
  const ZGRep swapped(c2, {IntMat::Identity(2, 2), swap});
  CHECK(coinvariants(swapped) == FGAbelianGroup::free(1));
  CHECK(invariants(swapped) == FGAbelianGroup::free(1));

  CHECK(coinvariants(augmentation_ideal(c2)) == FGAbelianGroup::cyclic(2));
  CHECK(invariants(ZGRep::regular(c2)) == FGAbelianGroup::free(1));
}

TEST_CASE("group homology against the cyclic oracle") {
  for (int m : {2, 3, 4, 6}) {
    const FinGroup g = FinGroup::cyclic(m);
    const auto h = group_homology(g, ZGRep::trivial(g, 1), 3);
    for (Index n = 0; n <= 3; ++n) CHECK(h[static_cast<std::size_t>(n)] ==
                                         cyclic_homology_oracle(m, n));
  }
}

TEST_CASE("group homology basics") {
  const FinGroup t = FinGroup::trivial();
  const auto h = group_homology(t, ZGRep::trivial(t, 1), 3);
  CHECK(h[0] == FGAbelianGroup::free(1));
  for (std::size_t n = 1; n <= 3; ++n) CHECK(h[n] == FGAbelianGroup::trivial());

  const FinGroup s3 = FinGroup::symmetric(3);
  const auto hs3 = group_homology(s3, ZGRep::trivial(s3, 1), 1);
  CHECK(hs3[1] == abelianize_group(s3));  // H_1 = Com(S_3) = Z/2

  // H_0(G; M) = coinvariants(M) on a twisted module.
  const ZGRep i3 = augmentation_ideal(FinGroup::cyclic(3));
  CHECK(group_homology(FinGroup::cyclic(3), i3, 0)[0] == coinvariants(i3));
}

TEST_CASE("group cohomology") {
  const FinGroup c2 = FinGroup::cyclic(2);
  const auto h = group_cohomology(c2, ZGRep::trivial(c2, 1), 3);
  for (Index n = 0; n <= 3; ++n)
    CHECK(h[static_cast<std::size_t>(n)] == cyclic_cohomology_oracle(2, n));

  // H^1(G; Z) = 0 for every finite G since Hom(G, Z) = 0.
  for (const FinGroup& g : {FinGroup::cyclic(4), FinGroup::symmetric(3),
                            FinGroup::quaternion()}) {
    CHECK(group_cohomology(g, ZGRep::trivial(g, 1), 1)[1] ==
          FGAbelianGroup::trivial());
  }

  // H^0 = invariants.
  const ZGRep reg = ZGRep::regular(FinGroup::cyclic(3));
  CHECK(group_cohomology(FinGroup::cyclic(3), reg, 0)[0] == invariants(reg));
}

TEST_CASE("bar construction as a simplicial module") {
  const FinGroup c2 = FinGroup::cyclic(2);
  const auto bar = bar_simplicial_module(c2, ZGRep::trivial(c2, 1), 3);
  CHECK(simplicial_pi(bar, 0) == FGAbelianGroup::free(1));
  CHECK(simplicial_pi(bar, 1) == FGAbelianGroup::cyclic(2));
  CHECK(simplicial_pi(bar, 2) == FGAbelianGroup::trivial());

  // Moore and alternating-sum homology agree, and the latter matches the
  // direct group-homology engine.
  const auto alt = alternating_sum_complex(bar);
  const auto hom = group_homology(c2, ZGRep::trivial(c2, 1), 2);
  for (Index n = 0; n <= 2; ++n) {
    CHECK(chain_homology(alt, n) == hom[static_cast<std::size_t>(n)]);
    CHECK(simplicial_pi(bar, n) == hom[static_cast<std::size_t>(n)]);
  }

  const FinGroup c3 = FinGroup::cyclic(3);
  const auto bar3 = bar_simplicial_module(c3, ZGRep::trivial(c3, 1), 3);
  CHECK(simplicial_pi(bar3, 1) == FGAbelianGroup::cyclic(3));
}

TEST_CASE("pullback and pushforward") {
  const FinGroup c2 = FinGroup::cyclic(2);
  const FinGroup c4 = FinGroup::cyclic(4);
  const GroupHom incl(c2, c4, {0, 2});
  const GroupHom q(c4, c2, {0, 1, 0, 1});

  SUBCASE("pullback restricts the action") {
    const ZGRep i4 = augmentation_ideal(c4);
    const ZGRep res = pullback_module(incl, i4);
    CHECK(res.rank() == 3);
    CHECK(res.action(1) == i4.action(2));

    const GroupHom id2 = GroupHom::identity(c2);
    const ZGRep twice = pullback_module(id2, res);
    CHECK(twice.action(1) == res.action(1));

    // Functoriality through a composite: pulling back along q o incl = id.
    const GroupHom comp = q.compose_after(incl);
    const ZGRep a = pullback_module(comp, augmentation_ideal(c2));
    const ZGRep b = pullback_module(incl, pullback_module(q, augmentation_ideal(c2)));
    CHECK(a.action(1) == b.action(1));
  }

  SUBCASE("pushforward to the trivial group is the coinvariants") {
    const GroupHom to_triv(c2, FinGroup::trivial(), {0, 0});
    const auto push = pushforward_module(to_triv, augmentation_ideal(c2));
    CHECK(push.shadow == FGAbelianGroup::cyclic(2));
    CHECK(push.rep.rank() == 0);
    CHECK(push.shadow == coinvariants(augmentation_ideal(c2)));
  }

  SUBCASE("induction of the regular representation") {
    const auto push = pushforward_module(incl, ZGRep::regular(c2));
    CHECK(push.rep.rank() == 4);
    CHECK(push.shadow == FGAbelianGroup::free(4));
    // ZC_4 as the induced module: compare canonical invariants.
    CHECK(coinvariants(push.rep) == coinvariants(ZGRep::regular(c4)));
    CHECK(invariants(push.rep) == invariants(ZGRep::regular(c4)));
  }

  SUBCASE("pushforward along the identity preserves the module") {
    const auto push = pushforward_module(GroupHom::identity(c2),
                                         augmentation_ideal(c2));
    CHECK(push.rep.rank() == 1);
    CHECK(push.shadow == FGAbelianGroup::free(1));
    CHECK(coinvariants(push.rep) == coinvariants(augmentation_ideal(c2)));
  }
}

TEST_CASE("split extensions") {
  const FinGroup c2 = FinGroup::cyclic(2);
  const FinGroup c3 = FinGroup::cyclic(3);
  const FinGroup c4 = FinGroup::cyclic(4);

  SUBCASE("direct product") {
    const auto e = SplitExtensionGrp::direct_product(c2, c3);
    CHECK(e.total().order() == 6);
    CHECK(e.total().is_abelian());
    const auto r = com_split_extension(e);
    CHECK(r.total_ab == r.predicted);
    CHECK(r.total_ab == FGAbelianGroup::cyclic(6));
  }

  SUBCASE("S_3 as C_2 acting on C_3 by inversion") {
    const SplitExtensionGrp e(c2, c3, {{0, 1, 2}, {0, 2, 1}});
    CHECK(e.total().order() == 6);
    CHECK_FALSE(e.total().is_abelian());
    const auto r = com_split_extension(e);
    CHECK(r.total_ab == r.predicted);
    CHECK(r.total_ab == FGAbelianGroup::cyclic(2));
  }

  SUBCASE("D_4 as C_2 acting on C_4 by inversion") {
    const SplitExtensionGrp e(c2, c4, {{0, 1, 2, 3}, {0, 3, 2, 1}});
    CHECK(e.total().order() == 8);
    const auto r = com_split_extension(e);
    CHECK(r.total_ab == r.predicted);
    CHECK(r.total_ab == FGAbelianGroup(0, {2, 2}));
    // The semidirect product with inversion action is dihedral.
    CHECK(abelianize_group(e.total()) == abelianize_group(FinGroup::dihedral(4)));
  }

  SUBCASE("non-automorphism action is rejected") {
    CHECK_THROWS_AS(SplitExtensionGrp(c2, c4, {{0, 1, 2, 3}, {1, 0, 3, 2}}),
                    DomainError);
  }
}

TEST_CASE("equivariant map enumeration") {
  const FinGroup c2 = FinGroup::cyclic(2);

  // Trivial Z-module into Z/4: all four constants.
  CHECK(count_equivariant_maps(ZGRep::trivial(c2, 1), FGAbelianGroup::cyclic(4)) == 4);

  // I_{C_2} into Z/4: equivariance forces 2x = 0.
  CHECK(count_equivariant_maps(augmentation_ideal(c2), FGAbelianGroup::cyclic(4)) == 2);

  // Against the adjunction formula |Hom(M_G, A)|.
  for (const ZGRep& m : {ZGRep::trivial(c2, 2), augmentation_ideal(c2),
                         ZGRep::regular(c2)}) {
    for (const auto& a :
         {FGAbelianGroup::cyclic(4), FGAbelianGroup(0, {2, 6})}) {
      CHECK(count_equivariant_maps(m, a) == coinvariants(m).hom_count_into(a));
    }
  }
}

TEST_CASE("shift isomorphism at small scale") {
  // H_i(G; I_G) = H_{i+1}(G; Z) through the connecting morphism of
  // 0 -> I_G -> ZG -> Z -> 0; compared as canonical values.
  for (const FinGroup& g : {FinGroup::cyclic(2), FinGroup::cyclic(3)}) {
    const auto left = group_homology(g, augmentation_ideal(g), 3);
    const auto right = group_homology(g, ZGRep::trivial(g, 1), 4);
    for (std::size_t i = 0; i <= 3; ++i) CHECK(left[i] == right[i + 1]);
  }
}
