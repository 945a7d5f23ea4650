#include <random>

#include "doctest.h"
#include "qk/errors.hpp"
#include "qk/int_linalg.hpp"
#include "qk/simplicial.hpp"

using namespace qk;

namespace {

IntMat rnd(std::mt19937_64& rng, Index r, Index c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMat m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

ChainComplexZ random_complex(std::mt19937_64& rng, Index top, Index max_rank) {
  std::uniform_int_distribution<Index> rk(0, max_rank);
  std::vector<Index> ranks{rk(rng)};
  std::vector<IntMat> boundaries;
  for (Index n = 1; n <= top; ++n) {
    IntMat kernel = n == 1 ? IntMat(IntMat::Identity(ranks[0], ranks[0]))
                           : int_kernel_basis(boundaries.back());
    const Index next = rk(rng);
    boundaries.push_back(
        multiply_skipping_zeros(kernel, rnd(rng, kernel.cols(), next, -2, 2)));
    ranks.push_back(next);
  }
  return ChainComplexZ(std::move(ranks), std::move(boundaries));
}

}  // namespace

TEST_CASE("constant simplicial module") {
  const auto s = SimplicialZModule::constant(3, 4);
  const ChainComplexZ moore = moore_complex(s);
  // Degenerate everywhere: normalization concentrates in degree 0.
  CHECK(moore.rank(0) == 3);
  for (Index n = 1; n <= 4; ++n) CHECK(moore.rank(n) == 0);
  CHECK(simplicial_pi(s, 0) == FGAbelianGroup::free(3));
  for (Index n = 1; n <= 3; ++n)
    CHECK(simplicial_pi(s, n) == FGAbelianGroup::trivial());

  const ChainComplexZ alt = alternating_sum_complex(s);
  CHECK(chain_homology(alt, 0) == FGAbelianGroup::free(3));
  for (Index n = 1; n <= 3; ++n)
    CHECK(chain_homology(alt, n) == FGAbelianGroup::trivial());
}

TEST_CASE("two-level module with equal faces") {
  // levels (1,1), d_0 = d_1 = id: alternating boundary vanishes.
  std::vector<std::vector<IntMat>> faces{{IntMat::Identity(1, 1), IntMat::Identity(1, 1)}};
  std::vector<std::vector<IntMat>> degs{{IntMat::Identity(1, 1)}};
  const SimplicialZModule s({1, 1}, std::move(faces), std::move(degs));
  CHECK(chain_homology(alternating_sum_complex(s), 0) == FGAbelianGroup::free(1));
  CHECK(simplicial_pi(s, 0) == FGAbelianGroup::free(1));
}

TEST_CASE("construction rejects violated simplicial identities") {
  std::vector<std::vector<IntMat>> faces{{IntMat::Identity(1, 1), IntMat::Zero(1, 1)}};
  std::vector<std::vector<IntMat>> degs{{IntMat::Identity(1, 1)}};
  // d_1 s_0 = 0 != id.
  CHECK_THROWS_AS(SimplicialZModule({1, 1}, std::move(faces), std::move(degs)),
                  DomainError);
}

TEST_CASE("dold-kan realizes a chain complex") {
  SUBCASE("multiplication by 2 in degree 1") {
    IntMat two(1, 1);
    two(0, 0) = 2;
    const ChainComplexZ c({1, 1}, {two});
    const auto s = dold_kan(c, 3);
    CHECK(simplicial_pi(s, 0) == FGAbelianGroup::cyclic(2));
    CHECK(simplicial_pi(s, 1) == FGAbelianGroup::trivial());
    CHECK(simplicial_pi(s, 2) == FGAbelianGroup::trivial());
  }
  SUBCASE("homology of random complexes survives the round trip") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
      const ChainComplexZ c = random_complex(rng, 2, 3);
      const auto s = dold_kan(c, 3);
      for (Index n = 0; n <= 2; ++n)
        CHECK(simplicial_pi(s, n) == chain_homology(c, n));
    }
  }
}

TEST_CASE("normalization: moore and alternating-sum homology agree") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const ChainComplexZ c = random_complex(rng, 3, 3);
    const auto s = dold_kan(c, 3);
    const ChainComplexZ moore = moore_complex(s);
    const ChainComplexZ alt = alternating_sum_complex(s);
    for (Index n = 0; n <= 2; ++n)
      CHECK(chain_homology(moore, n) == chain_homology(alt, n));
  }
}

TEST_CASE("additivity of pi under direct sum") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = dold_kan(random_complex(rng, 2, 3), 3);
    const auto b = dold_kan(random_complex(rng, 2, 3), 3);
    const auto sum = a.direct_sum(b);
    for (Index n = 0; n <= 2; ++n)
      CHECK(simplicial_pi(sum, n) ==
            simplicial_pi(a, n).direct_sum(simplicial_pi(b, n)));
  }
}

TEST_CASE("truncation stability of pi") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const ChainComplexZ c = random_complex(rng, 3, 3);
    const auto big = dold_kan(c, 5);
    const auto small = big.truncate(3);
    for (Index n = 0; n <= 2; ++n)
      CHECK(simplicial_pi(big, n) == simplicial_pi(small, n));
  }
}
