#include "qk/split_extension.hpp"

#include <numeric>
#include <sstream>

#include "qk/errors.hpp"
#include "qk/int_linalg.hpp"

namespace qk {

namespace {

FinGroup build_total(const FinGroup& base, const FinGroup& fiber,
                     const std::vector<std::vector<int>>& action) {
  const int nb = base.order(), nm = fiber.order();
  const int n = nb * nm;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int g = x / nm, m = x % nm;
      const int gp = y / nm, mp = y % nm;
      // (g,m)(g',m') = (gg', m + g m')
      const int gm = fiber.mul(m, action[static_cast<std::size_t>(g)]
                                        [static_cast<std::size_t>(mp)]);
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          base.mul(g, gp) * nm + gm;
    }
  }
  return FinGroup::from_table(std::move(t));
}

}  // namespace

SplitExtensionGrp::SplitExtensionGrp(FinGroup base, FinGroup fiber,
                                     std::vector<std::vector<int>> action)
    : base_(std::move(base)),
      fiber_(std::move(fiber)),
      action_(std::move(action)),
      total_(FinGroup::trivial()) {
  if (!fiber_.is_abelian())
    throw DomainError("SplitExtensionGrp: fiber must be abelian");
  if (static_cast<int>(action_.size()) != base_.order())
    throw DomainError("SplitExtensionGrp: one permutation per base element");
  const int nm = fiber_.order();
  for (const auto& perm : action_) {
    if (static_cast<int>(perm.size()) != nm)
      throw DomainError("SplitExtensionGrp: action permutation has wrong size");
    std::vector<bool> hit(static_cast<std::size_t>(nm), false);
    for (int v : perm) {
      if (v < 0 || v >= nm || hit[static_cast<std::size_t>(v)])
        throw DomainError("SplitExtensionGrp: action is not a permutation");
      hit[static_cast<std::size_t>(v)] = true;
    }
  }
  // Each action[g] must be an automorphism of the fiber.
  for (int g = 0; g < base_.order(); ++g) {
    for (int a = 0; a < nm; ++a) {
      for (int b = 0; b < nm; ++b) {
        if (act(g, fiber_.mul(a, b)) != fiber_.mul(act(g, a), act(g, b))) {
          std::ostringstream os;
          os << "SplitExtensionGrp: action of " << g
             << " is not an automorphism at (" << a << "," << b << ")";
          throw DomainError(os.str());
        }
      }
    }
  }
  // action must be a homomorphism base -> Aut(fiber) with identity acting
  // trivially.
  for (int m = 0; m < nm; ++m)
    if (act(0, m) != m)
      throw DomainError("SplitExtensionGrp: identity must act trivially");
  for (int g = 0; g < base_.order(); ++g) {
    for (int h = 0; h < base_.order(); ++h) {
      for (int m = 0; m < nm; ++m) {
        if (act(base_.mul(g, h), m) != act(g, act(h, m)))
          throw DomainError("SplitExtensionGrp: action is not a homomorphism");
      }
    }
  }
  total_ = build_total(base_, fiber_, action_);

  // Sanity on the structure maps.
  const GroupHom comp = projection().compose_after(zero_section());
  for (int g = 0; g < base_.order(); ++g)
    if (comp(g) != g)
      throw DomainError("SplitExtensionGrp: projection o section != id");
}

SplitExtensionGrp SplitExtensionGrp::direct_product(const FinGroup& base,
                                                    const FinGroup& fiber) {
  std::vector<int> id(static_cast<std::size_t>(fiber.order()));
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> action(static_cast<std::size_t>(base.order()), id);
  return SplitExtensionGrp(base, fiber, std::move(action));
}

GroupHom SplitExtensionGrp::projection() const {
  const int nm = fiber_.order();
  std::vector<int> map;
  map.reserve(static_cast<std::size_t>(total_.order()));
  for (int x = 0; x < total_.order(); ++x) map.push_back(x / nm);
  return GroupHom(total_, base_, std::move(map));
}

GroupHom SplitExtensionGrp::zero_section() const {
  const int nm = fiber_.order();
  std::vector<int> map;
  map.reserve(static_cast<std::size_t>(base_.order()));
  for (int g = 0; g < base_.order(); ++g) map.push_back(g * nm);
  return GroupHom(base_, total_, std::move(map));
}

FGAbelianGroup SplitExtensionGrp::fiber_coinvariants() const {
  // Present M_G by one generator per fiber element, with the group law of M
  // and the identifications m = g m as relations.
  const int nm = fiber_.order();
  const int nb = base_.order();
  IntMat rel = IntMat::Zero(nm, static_cast<Index>(nm) * nm +
                                    static_cast<Index>(nb) * nm);
  Index col = 0;
  for (int a = 0; a < nm; ++a) {
    for (int b = 0; b < nm; ++b, ++col) {
      rel(a, col) += 1;
      rel(b, col) += 1;
      rel(fiber_.mul(a, b), col) -= 1;
    }
  }
  for (int g = 0; g < nb; ++g) {
    for (int m = 0; m < nm; ++m, ++col) {
      rel(m, col) += 1;
      rel(act(g, m), col) -= 1;
    }
  }
  return int_cokernel(rel);
}

ComSplitResult com_split_extension(const SplitExtensionGrp& e) {
  ComSplitResult r;
  r.total_ab = abelianize_group(e.total());
  r.predicted = abelianize_group(e.base()).direct_sum(e.fiber_coinvariants());
  return r;
}

}  // namespace qk
