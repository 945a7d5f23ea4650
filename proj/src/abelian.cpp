#include "qk/abelian.hpp"

#include <sstream>

#include "qk/errors.hpp"
#include "qk/int_linalg.hpp"

namespace qk {

FGAbelianGroup::FGAbelianGroup(Index free_rank, std::vector<Int> torsion)
    : free_rank_(free_rank) {
  if (free_rank < 0) throw DomainError("FGAbelianGroup: negative free rank");
  for (auto& d : torsion) {
    if (d < 0) d = -d;
    if (d == 0) throw DomainError("FGAbelianGroup: zero invariant factor");
    if (d == 1) continue;
    torsion_.push_back(d);
  }
  for (std::size_t i = 0; i + 1 < torsion_.size(); ++i) {
    if (torsion_[i + 1] % torsion_[i] != 0)
      throw DomainError("FGAbelianGroup: divisibility chain violated");
  }
}

FGAbelianGroup FGAbelianGroup::from_factors(Index free_rank,
                                            const std::vector<Int>& factors) {
  // Diagonal matrix of the factors; its cokernel is canonical by SNF.
  IntMat d = IntMat::Zero(static_cast<Index>(factors.size()),
                          static_cast<Index>(factors.size()));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] == 0) throw DomainError("from_factors: zero factor");
    d(static_cast<Index>(i), static_cast<Index>(i)) = factors[i];
  }
  FGAbelianGroup out = int_cokernel(d);
  return FGAbelianGroup(free_rank + out.free_rank_, out.torsion_);
}

FGAbelianGroup FGAbelianGroup::cyclic(const Int& n) {
  if (n == 0) return free(1);
  return FGAbelianGroup(0, {n});
}

Int FGAbelianGroup::torsion_order() const {
  Int o = 1;
  for (const auto& d : torsion_) o *= d;
  return o;
}

FGAbelianGroup FGAbelianGroup::direct_sum(const FGAbelianGroup& other) const {
  std::vector<Int> all = torsion_;
  all.insert(all.end(), other.torsion_.begin(), other.torsion_.end());
  return from_factors(free_rank_ + other.free_rank_, all);
}

Int FGAbelianGroup::hom_count_into(const FGAbelianGroup& target) const {
  if (!target.is_finite())
    throw DomainError("hom_count_into: target must be finite");
  Int count = 1;
  for (const auto& e : target.torsion_) {
    for (Index i = 0; i < free_rank_; ++i) count *= e;
    for (const auto& d : torsion_) {
      Int g;
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t());
      count *= g;
    }
  }
  return count;
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ == 1) {
    os << "Z";
    first = false;
  } else if (free_rank_ > 1) {
    os << "Z^" << free_rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

}  // namespace qk
