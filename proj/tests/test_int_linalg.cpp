#include <random>

#include "doctest.h"
#include "qk/chain_complex.hpp"
#include "qk/errors.hpp"
#include "qk/field_linalg.hpp"
#include "qk/int_linalg.hpp"

using namespace qk;

namespace {

IntMat make(Index r, Index c, std::initializer_list<long> vals) {
  IntMat m(r, c);
  auto it = vals.begin();
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = *it++;
  return m;
}

IntMat random_matrix(std::mt19937_64& rng, Index r, Index c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMat m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

void check_smith_contract(const IntMat& m) {
  const auto [u, d, v] = smith_normal_form(m);
  // Exact reconstruction.
  CHECK(multiply_skipping_zeros(multiply_skipping_zeros(u, m), v) == d);
  // Unimodular transforms.
  const Int du = det_bareiss(u);
  const Int dv = det_bareiss(v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  // Diagonal, nonnegative, divisibility chain; length = rank over Q.
  Index nonzero = 0;
  for (Index i = 0; i < d.rows(); ++i)
    for (Index j = 0; j < d.cols(); ++j)
      if (i != j) CHECK(d(i, j) == 0);
  for (Index i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    CHECK(d(i, i) >= 0);
    if (d(i, i) != 0) ++nonzero;
    if (i > 0 && d(i - 1, i - 1) != 0 && d(i, i) != 0)
      CHECK(d(i, i) % d(i - 1, i - 1) == 0);
    if (i > 0 && d(i - 1, i - 1) == 0) CHECK(d(i, i) == 0);
  }
  CHECK(nonzero == rational_rank(m));
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
  SUBCASE("diag(2,3) has invariant factors 1, 6") {
    const auto [u, d, v] = smith_normal_form(make(2, 2, {2, 0, 0, 3}));
    CHECK(d(0, 0) == 1);
    CHECK(d(1, 1) == 6);
  }
  SUBCASE("zero matrix is fixed with identity transforms") {
    const auto [u, d, v] = smith_normal_form(IntMat::Zero(2, 2));
    CHECK(d == IntMat::Zero(2, 2));
    CHECK(u == IntMat::Identity(2, 2));
    CHECK(v == IntMat::Identity(2, 2));
  }
  SUBCASE("[[2,4],[6,8]] has invariant factors 2, 4") {
    const auto [u, d, v] = smith_normal_form(make(2, 2, {2, 4, 6, 8}));
    CHECK(d(0, 0) == 2);
    CHECK(d(1, 1) == 4);
  }
  SUBCASE("deterministic output") {
    const IntMat m = make(3, 2, {4, 6, 2, 8, 10, 2});
    const auto a = smith_normal_form(m);
    const auto b = smith_normal_form(m);
    CHECK(a.u == b.u);
    CHECK(a.d == b.d);
    CHECK(a.v == b.v);
  }
}

TEST_CASE("smith normal form contract on random matrices") {
  std::mt19937_64 rng(20240511);
  std::uniform_int_distribution<Index> size(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMat m = random_matrix(rng, size(rng), size(rng), -9, 9);
    check_smith_contract(m);
  }
}

TEST_CASE("kernel, cokernel and solve over Z") {
  const IntMat m = make(2, 3, {1, 2, 3, 2, 4, 6});
  const IntMat k = int_kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK(multiply_skipping_zeros(m, k).isZero(0));

  CHECK(int_cokernel(make(2, 2, {2, 0, 0, 3})) == FGAbelianGroup::cyclic(6));
  CHECK(int_cokernel(IntMat::Zero(2, 2)) == FGAbelianGroup::free(2));

  const IntMat a = make(2, 2, {2, 0, 0, 3});
  const IntMat b = make(2, 1, {4, 9});
  const auto x = int_solve(a, b);
  REQUIRE(x.has_value());
  CHECK(multiply_skipping_zeros(a, *x) == b);
  CHECK_FALSE(int_solve(a, make(2, 1, {1, 0})).has_value());
}

TEST_CASE("chain homology on pinned complexes") {
  SUBCASE("multiplication by 2") {
    const ChainComplexZ c({1, 1}, {make(1, 1, {2})});
    CHECK(chain_homology(c, 0) == FGAbelianGroup::cyclic(2));
    CHECK(chain_homology(c, 1) == FGAbelianGroup::trivial());
  }
  SUBCASE("zero complex") {
    const ChainComplexZ c = ChainComplexZ::zero(3);
    for (Index n = 0; n <= 3; ++n)
      CHECK(chain_homology(c, n) == FGAbelianGroup::trivial());
  }
  SUBCASE("zero boundary") {
    const ChainComplexZ c({1, 1}, {IntMat::Zero(1, 1)});
    CHECK(chain_homology(c, 0) == FGAbelianGroup::free(1));
    CHECK(chain_homology(c, 1) == FGAbelianGroup::free(1));
  }
  SUBCASE("degree out of range") {
    const ChainComplexZ c({1, 1}, {make(1, 1, {2})});
    CHECK_THROWS_AS(chain_homology(c, 2), DomainError);
    CHECK_THROWS_AS(chain_homology(c, -1), DomainError);
  }
  SUBCASE("construction rejects non-complexes") {
    CHECK_THROWS_AS(
        ChainComplexZ({1, 1, 1}, {make(1, 1, {1}), make(1, 1, {1})}),
        DomainError);
  }
}

namespace {

// Random valid chain complex: each boundary factors through the kernel of
// the previous one.
ChainComplexZ random_complex(std::mt19937_64& rng, Index top, Index max_rank) {
  std::uniform_int_distribution<Index> rk(0, max_rank);
  std::vector<Index> ranks{rk(rng)};
  std::vector<IntMat> boundaries;
  for (Index n = 1; n <= top; ++n) {
    IntMat kernel;
    if (n == 1) {
      kernel = IntMat::Identity(ranks[0], ranks[0]);
    } else {
      kernel = int_kernel_basis(boundaries.back());
    }
    const Index next = rk(rng);
    const IntMat r = random_matrix(rng, kernel.cols(), next, -3, 3);
    boundaries.push_back(multiply_skipping_zeros(kernel, r));
    ranks.push_back(next);
  }
  return ChainComplexZ(std::move(ranks), std::move(boundaries));
}

}  // namespace

TEST_CASE("homology is invariant under a change of basis in each degree") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const ChainComplexZ c = random_complex(rng, 3, 4);
    // Conjugate every boundary by signed permutations.
    std::vector<IntMat> perms;
    for (Index n = 0; n <= 3; ++n) {
      const Index r = c.rank(n);
      std::vector<Index> idx(static_cast<std::size_t>(r));
      for (Index i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
      std::shuffle(idx.begin(), idx.end(), rng);
      IntMat p = IntMat::Zero(r, r);
      for (Index i = 0; i < r; ++i)
        p(idx[static_cast<std::size_t>(i)], i) = (rng() % 2 == 0) ? 1 : -1;
      perms.push_back(std::move(p));
    }
    std::vector<IntMat> conj;
    for (Index n = 1; n <= 3; ++n) {
      // p_{n-1} * b_n * p_n^{-1}; inverse of a signed permutation is its
      // transpose up to signs, recovered by exact solve.
      const IntMat pb = multiply_skipping_zeros(perms[n - 1], c.boundary(n));
      const auto x = int_solve(perms[n], IntMat::Identity(c.rank(n), c.rank(n)));
      REQUIRE(x.has_value());
      conj.push_back(multiply_skipping_zeros(pb, *x));
    }
    const ChainComplexZ cc(c.ranks(), std::move(conj));
    for (Index n = 0; n <= 3; ++n)
      CHECK(chain_homology(c, n) == chain_homology(cc, n));
  }
}

TEST_CASE("euler characteristic equals alternating sum of betti numbers") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const ChainComplexZ c = random_complex(rng, 3, 4);
    Int chi = 0;
    for (Index n = 0; n <= c.top_degree(); ++n) {
      const Index b = chain_homology(c, n).free_rank();
      chi += (n % 2 == 0) ? Int(b) : Int(-b);
    }
    CHECK(chi == c.euler_characteristic());
  }
}

TEST_CASE("field kernel and cokernel") {
  SUBCASE("identity over Q") {
    const FMat m = FMat::Identity(3, 3);
    CHECK(field_kernel_basis(m).cols() == 0);
    CHECK(field_cokernel_dim(m) == 0);
  }
  SUBCASE("multiplication by 2 over F_2") {
    FMat m(1, 1);
    m(0, 0) = Fq::in_char(2, 2);
    CHECK(field_kernel_basis(m).cols() == 1);
    CHECK(field_cokernel_dim(m) == 1);
  }
  SUBCASE("rank one over Q") {
    FMat m(2, 2);
    m << Fq(1), Fq(1), Fq(1), Fq(1);
    CHECK(field_kernel_basis(m).cols() == 1);
    CHECK(field_cokernel_dim(m) == 1);
  }
  SUBCASE("solve and subspace") {
    FMat m(2, 2);
    m << Fq(1), Fq(2), Fq(3), Fq(4);
    FMat b(2, 1);
    b << Fq(5), Fq(6);
    const auto x = field_solve(m, b);
    REQUIRE(x.has_value());
    CHECK(FMat(m * *x) == b);

    FMat span(3, 1);
    span << Fq(1), Fq(1), Fq(0);
    const Subspace w(span);
    CHECK(w.dim() == 1);
    CHECK(w.codim() == 2);
    FVec v(3);
    v << Fq(2), Fq(2), Fq(0);
    CHECK(w.contains(v));
    v << Fq(1), Fq(0), Fq(1);
    CHECK_FALSE(w.contains(v));
  }
}

TEST_CASE("entry cap is enforced") {
  CHECK_THROWS_AS(check_entry_cap(3, 4, 10), SizeCapError);
  CHECK_NOTHROW(check_entry_cap(3, 4, 12));
  std::vector<IntMat> big{IntMat::Zero(4, 3)};
  CHECK_THROWS_AS(ChainComplexZ({4, 3}, std::move(big), 10), SizeCapError);
}
