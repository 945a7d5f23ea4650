#include "doctest.h"
#include "qk/bimodule.hpp"
#include "qk/comm_ring.hpp"
#include "qk/errors.hpp"

using namespace qk;

namespace {

const Field kQ{0};
const Field kF2{2};
const Field kF3{3};

CommRingPres ring_of(const Field& f, const std::vector<std::string>& vars,
                     const std::vector<std::string>& rels) {
  std::vector<Poly> ps;
  for (const auto& r : rels) ps.push_back(parse_poly(r, vars, f));
  return CommRingPres(f, vars, std::move(ps));
}

FinDimAlgebra dual_numbers(const Field& f) {
  return ring_of(f, {"x"}, {"x^2"}).as_algebra().algebra;
}

}  // namespace

TEST_CASE("algebra constructors and validation") {
  const auto m2 = FinDimAlgebra::matrix_algebra(kQ, 2);
  CHECK(m2.dim() == 4);
  CHECK_FALSE(m2.is_commutative());

  const auto ut2 = FinDimAlgebra::upper_triangular(kQ, 2);
  CHECK(ut2.dim() == 3);
  CHECK_FALSE(ut2.is_commutative());

  const auto qq = FinDimAlgebra::product_of_fields(kQ, 2);
  CHECK(qq.is_commutative());

  const auto eps = dual_numbers(kQ);
  CHECK(eps.dim() == 2);
  CHECK(eps.is_commutative());

  // Non-associative tensor: 1, a, b with a*a = b, a*b = 1, b*a = b*b = 0,
  // so (a a) a = 0 but a (a a) = 1.
  std::vector<FMat> bad(3, FMat::Zero(3, 3));
  bad[0] = FMat::Identity(3, 3);
  bad[1](2, 1) = Fq(1);  // a*a = b
  bad[1](0, 2) = Fq(1);  // a*b = 1
  bad[1](1, 0) = Fq(1);  // a*1 = a
  bad[2](2, 0) = Fq(1);  // b*1 = b
  FVec unit(3);
  unit << Fq(1), Fq(0), Fq(0);
  CHECK_THROWS_AS(FinDimAlgebra(kQ, bad, unit), SchemaError);

  // Unit-law violation.
  std::vector<FMat> no_unit(1, FMat::Zero(1, 1));
  FVec u1(1);
  u1 << Fq(1);
  CHECK_THROWS_AS(FinDimAlgebra(kQ, no_unit, u1), SchemaError);
}

TEST_CASE("commutator quotient") {
  SUBCASE("commutative input is unchanged") {
    const auto eps = dual_numbers(kQ);
    CHECK(commutator_quotient(eps).algebra.dim() == 2);
  }
  SUBCASE("full matrix algebra collapses to the zero ring") {
    const auto q = commutator_quotient(FinDimAlgebra::matrix_algebra(kQ, 2));
    CHECK(q.algebra.dim() == 0);
    CHECK(q.algebra.is_zero_ring());
  }
  SUBCASE("upper triangular 2x2 maps onto k x k") {
    const auto q = commutator_quotient(FinDimAlgebra::upper_triangular(kQ, 2));
    CHECK(q.algebra.dim() == 2);
    CHECK(q.algebra.is_commutative());
    CHECK(is_reduced(q.algebra));
  }
}

TEST_CASE("multiplication kernel bimodule") {
  SUBCASE("ground field has zero kernel") {
    CHECK(mult_kernel_bimodule(FinDimAlgebra::ground(kQ)).bimodule.dim() == 0);
  }
  SUBCASE("dual numbers") {
    CHECK(mult_kernel_bimodule(dual_numbers(kQ)).bimodule.dim() == 2);
  }
  SUBCASE("k x k") {
    CHECK(mult_kernel_bimodule(FinDimAlgebra::product_of_fields(kQ, 2)).bimodule.dim() == 2);
  }
  SUBCASE("dimension formula dim I_A = dim(A)^2 - dim(A)") {
    for (const auto& a :
         {FinDimAlgebra::matrix_algebra(kQ, 2), FinDimAlgebra::upper_triangular(kQ, 2),
          dual_numbers(kF2), ring_of(kQ, {"x"}, {"x^3"}).as_algebra().algebra}) {
      CHECK(mult_kernel_bimodule(a).bimodule.dim() == a.dim() * a.dim() - a.dim());
    }
  }
}

TEST_CASE("central quotient") {
  SUBCASE("commutative case: the module itself") {
    const auto eps = dual_numbers(kQ);
    CHECK(central_quotient(Bimodule::regular(eps)).dim == 2);
  }
  SUBCASE("M_2(Q) over itself collapses") {
    const auto m2 = FinDimAlgebra::matrix_algebra(kQ, 2);
    CHECK(central_quotient(Bimodule::regular(m2)).dim == 0);
  }
  SUBCASE("upper triangular") {
    const auto ut2 = FinDimAlgebra::upper_triangular(kQ, 2);
    CHECK(central_quotient(Bimodule::regular(ut2)).dim == 2);
  }
}

TEST_CASE("hochschild homology") {
  SUBCASE("ground field") {
    const auto k = FinDimAlgebra::ground(kQ);
    const auto dims = hochschild_homology(k, Bimodule::regular(k), 3);
    CHECK(dims == std::vector<Index>{1, 0, 0, 0});
  }
  SUBCASE("dual numbers over Q have period-one tail (2,1,1,1)") {
    const auto eps = dual_numbers(kQ);
    const auto dims = hochschild_homology(eps, Bimodule::regular(eps), 3);
    CHECK(dims == std::vector<Index>{2, 1, 1, 1});
  }
  SUBCASE("separable algebra M_2(Q): only HH_0 = center survives") {
    const auto m2 = FinDimAlgebra::matrix_algebra(kQ, 2);
    const auto dims = hochschild_homology(m2, Bimodule::regular(m2), 2);
    CHECK(dims == std::vector<Index>{1, 0, 0});
  }
  SUBCASE("HH_0(A;A) equals the central quotient dimension") {
    // Holds whenever the span of the commutators is already a sub-bimodule
    // (all commutative algebras, and UT_2 where both give dimension 2).
    for (const auto& a :
         {FinDimAlgebra::upper_triangular(kQ, 2), dual_numbers(kQ),
          FinDimAlgebra::product_of_fields(kQ, 2),
          ring_of(kQ, {"x"}, {"x^3"}).as_algebra().algebra, dual_numbers(kF2)}) {
      CHECK(hochschild_homology(a, Bimodule::regular(a), 0)[0] ==
            central_quotient(Bimodule::regular(a)).dim);
    }
    // For M_2 the two quotients genuinely differ: HH_0 kills only the span
    // sl_2 and sees the center, CQ kills the ideal it generates.
    const auto m2 = FinDimAlgebra::matrix_algebra(kQ, 2);
    CHECK(hochschild_homology(m2, Bimodule::regular(m2), 0)[0] == 1);
    CHECK(central_quotient(Bimodule::regular(m2)).dim == 0);
  }
  SUBCASE("normalized and unnormalized complexes agree") {
    for (const auto& a : {dual_numbers(kQ), dual_numbers(kF2),
                          FinDimAlgebra::product_of_fields(kQ, 2),
                          FinDimAlgebra::upper_triangular(kQ, 2)}) {
      const auto plain = hochschild_homology(a, Bimodule::regular(a), 2, false);
      const auto norm = hochschild_homology(a, Bimodule::regular(a), 2, true);
      CHECK(plain == norm);
    }
  }
  SUBCASE("characteristic 2 dual numbers") {
    const auto eps2 = dual_numbers(kF2);
    const auto dims = hochschild_homology(eps2, Bimodule::regular(eps2), 2);
    CHECK(dims[0] == 2);
    CHECK(dims[1] == 2);  // f' = 0 in characteristic 2
  }
}

TEST_CASE("polynomial parsing and rings") {
  const auto r = ring_of(kQ, {"x", "y"}, {"x^2", "x*y"});
  CHECK(r.monomial_case());
  const Poly p = parse_poly("2*x^2*y - 3*y + 1", {"x", "y"}, kQ);
  CHECK(p.total_degree() == 3);
  CHECK(r.normal_form(p).total_degree() == 1);  // 2x^2y and nothing else dies... -3y+1 stays

  CHECK_THROWS_AS(parse_poly("x + $", {"x"}, kQ), SchemaError);
  CHECK_THROWS_AS(ring_of(kQ, {"x", "y"}, {"x^2 + y"}), SchemaError);
}

TEST_CASE("kaehler differentials") {
  SUBCASE("free module for the polynomial ring") {
    const auto k = kaehler_differentials(ring_of(kQ, {"x", "y"}, {}));
    CHECK(k.generators == 2);
    CHECK(k.free);
    CHECK_FALSE(k.k_dimension.has_value());  // ring is infinite-dimensional
  }
  SUBCASE("Q[x]/(x^3)") {
    const auto k = kaehler_differentials(ring_of(kQ, {"x"}, {"x^3"}));
    CHECK(k.generators == 1);
    CHECK_FALSE(k.free);
    REQUIRE(k.k_dimension.has_value());
    CHECK(*k.k_dimension == 2);
  }
  SUBCASE("F_3[x]/(x^3) is free of rank 1 since 3x^2 = 0") {
    const auto k = kaehler_differentials(ring_of(kF3, {"x"}, {"x^3"}));
    CHECK(k.free);
    REQUIRE(k.k_dimension.has_value());
    CHECK(*k.k_dimension == 3);
  }
  SUBCASE("monomial surface k[x,y]/(xy)") {
    const auto k = kaehler_differentials(ring_of(kQ, {"x", "y"}, {"x*y"}));
    CHECK_FALSE(k.free);
    CHECK_FALSE(k.k_dimension.has_value());
  }
}

TEST_CASE("hypersurface cotangent complex") {
  SUBCASE("f = x gives the zero complex") {
    const auto h = hypersurface_cotangent(ring_of(kQ, {"x"}, {"x"}));
    CHECK(h.d0_dim == 0);
    CHECK(h.d1_dim == 0);
    CHECK(h.d0_matches_kaehler);
  }
  SUBCASE("f = x^3 over Q") {
    const auto h = hypersurface_cotangent(ring_of(kQ, {"x"}, {"x^3"}));
    CHECK(h.d0_dim == 2);
    CHECK(h.d1_dim == 2);
    CHECK(h.annihilator.total_degree() == 2);
    CHECK(h.d0_matches_kaehler);
  }
  SUBCASE("f = x^2 over F_2: derivative vanishes") {
    const auto h = hypersurface_cotangent(ring_of(kF2, {"x"}, {"x^2"}));
    CHECK(h.d0_dim == 2);
    CHECK(h.d1_dim == 2);
    CHECK(h.d0_matches_kaehler);
  }
}

TEST_CASE("square-zero extensions") {
  SUBCASE("trivial module keeps the base reduced") {
    const auto r = FinDimAlgebra::product_of_fields(kQ, 2);
    const auto z = square_zero_extension(r, std::vector<FMat>(2, FMat::Zero(0, 0)));
    CHECK(z.extension_reduced);
    CHECK(z.nil_equals_module);  // both are zero
  }
  SUBCASE("F_2 + F_2 is the dual numbers with Nil = M") {
    const auto f2 = FinDimAlgebra::ground(kF2);
    const auto z = square_zero_extension(f2, regular_module_action(f2));
    CHECK(z.extension.dim() == 2);
    CHECK_FALSE(z.extension_reduced);
    CHECK(z.nil_equals_module);
    CHECK(z.nilradical_basis.cols() == 1);
  }
  SUBCASE("QxQ with Q via the first factor") {
    const auto r = FinDimAlgebra::product_of_fields(kQ, 2);
    const auto z = square_zero_extension(r, factor_module_action(r, 0));
    CHECK(z.extension.dim() == 3);
    CHECK_FALSE(z.extension_reduced);
    CHECK(z.nil_equals_module);
    CHECK(z.nilradical_basis.cols() == 1);
  }
  SUBCASE("non-reduced base: Nil strictly contains M") {
    const auto eps = dual_numbers(kQ);
    const auto z = square_zero_extension(eps, regular_module_action(eps));
    CHECK(z.nil_contains_module);
    CHECK_FALSE(z.nil_equals_module);
  }
}

TEST_CASE("nilradical routes") {
  // Non-standard basis of the dual numbers: {1+e, 1-e}; no basis vector is
  // nilpotent, the kernel methods still find Nil = <e>.
  std::vector<FMat> mul(2, FMat::Zero(2, 2));
  // b0 = 1+e, b1 = 1-e: b0*b0 = 1+2e = (3/2)b0 - (1/2)b1 ... compute exactly:
  // 1+2e = a*b0 + b*b1 with a+b = 1, a-b = 2 -> a = 3/2, b = -1/2.
  mul[0] << Fq(mpq_class(3, 2)), Fq(mpq_class(1, 2)), Fq(mpq_class(-1, 2)),
      Fq(mpq_class(1, 2));
  // b0*b1 = 1 = (1/2)(b0 + b1); b1*b1 = 1-2e = -(1/2)b0 + (3/2)b1.
  mul[1] << Fq(mpq_class(1, 2)), Fq(mpq_class(-1, 2)), Fq(mpq_class(1, 2)),
      Fq(mpq_class(3, 2));
  FVec unit(2);
  unit << Fq(mpq_class(1, 2)), Fq(mpq_class(1, 2));
  const FinDimAlgebra a(kQ, mul, unit);
  CHECK(a.is_commutative());
  const FMat nil = nilradical(a);
  CHECK(nil.cols() == 1);
  CHECK_FALSE(is_reduced(a));

  CHECK(is_reduced(FinDimAlgebra::product_of_fields(kQ, 3)));
  CHECK(is_reduced(FinDimAlgebra::ground(kF3)));
  CHECK_FALSE(is_reduced(dual_numbers(kF2)));
}
