#include "qk/chain_complex.hpp"

#include <sstream>

#include "qk/errors.hpp"
#include "qk/int_linalg.hpp"

namespace qk {

ChainComplexZ::ChainComplexZ(std::vector<Index> ranks,
                             std::vector<IntMat> boundaries,
                             std::int64_t entry_cap)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  if (ranks_.empty()) throw DomainError("ChainComplexZ: empty rank list");
  if (boundaries_.size() + 1 != ranks_.size())
    throw DomainError("ChainComplexZ: need exactly one boundary per positive degree");
  for (std::size_t n = 0; n < ranks_.size(); ++n) {
    if (ranks_[n] < 0) throw DomainError("ChainComplexZ: negative rank");
  }
  for (std::size_t n = 1; n < ranks_.size(); ++n) {
    const IntMat& b = boundaries_[n - 1];
    check_entry_cap(b.rows(), b.cols(), entry_cap);
    if (b.rows() != ranks_[n - 1] || b.cols() != ranks_[n]) {
      std::ostringstream os;
      os << "ChainComplexZ: boundary_" << n << " is " << b.rows() << "x"
         << b.cols() << ", expected " << ranks_[n - 1] << "x" << ranks_[n];
      throw DomainError(os.str());
    }
  }
  for (std::size_t n = 2; n < ranks_.size(); ++n) {
    IntMat sq = multiply_skipping_zeros(boundaries_[n - 2], boundaries_[n - 1]);
    if (!sq.isZero(0)) {
      std::ostringstream os;
      os << "ChainComplexZ: boundary_" << n - 1 << " * boundary_" << n
         << " is nonzero";
      throw DomainError(os.str());
    }
  }
}

ChainComplexZ ChainComplexZ::zero(Index top_degree) {
  std::vector<Index> ranks(static_cast<std::size_t>(top_degree) + 1, 0);
  std::vector<IntMat> bnds(static_cast<std::size_t>(top_degree),
                           IntMat::Zero(0, 0));
  return ChainComplexZ(std::move(ranks), std::move(bnds));
}

Index ChainComplexZ::rank(Index n) const {
  if (n < 0 || n > top_degree()) return 0;
  return ranks_[static_cast<std::size_t>(n)];
}

IntMat ChainComplexZ::boundary(Index n) const {
  if (n <= 0 || n > top_degree() + 1)
    return IntMat::Zero(n == 0 ? 0 : rank(n - 1), rank(n));
  if (n == top_degree() + 1) return IntMat::Zero(rank(n - 1), 0);
  return boundaries_[static_cast<std::size_t>(n) - 1];
}

Int ChainComplexZ::euler_characteristic() const {
  Int chi = 0;
  for (std::size_t n = 0; n < ranks_.size(); ++n) {
    if (n % 2 == 0)
      chi += ranks_[n];
    else
      chi -= ranks_[n];
  }
  return chi;
}

FGAbelianGroup chain_homology(const ChainComplexZ& c, Index n) {
  if (n < 0 || n > c.top_degree())
    throw DomainError("chain_homology: degree out of range");
  return homology_of_pair(c.boundary(n), c.boundary(n + 1));
}

std::vector<FGAbelianGroup> chain_homology_all(const ChainComplexZ& c) {
  std::vector<FGAbelianGroup> out;
  out.reserve(static_cast<std::size_t>(c.top_degree()) + 1);
  for (Index n = 0; n <= c.top_degree(); ++n) out.push_back(chain_homology(c, n));
  return out;
}

}  // namespace qk
