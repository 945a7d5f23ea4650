#include "qk/zg_module.hpp"

#include <sstream>

#include "qk/errors.hpp"
#include "qk/int_linalg.hpp"

namespace qk {

ZGRep::ZGRep(FinGroup group, std::vector<IntMat> action)
    : group_(std::move(group)), action_(std::move(action)) {
  const int n = group_.order();
  if (static_cast<int>(action_.size()) != n)
    throw DomainError("ZGRep: one action matrix per group element required");
  rank_ = action_.empty() ? 0 : action_[0].rows();
  for (const IntMat& a : action_) {
    if (a.rows() != rank_ || a.cols() != rank_)
      throw DomainError("ZGRep: action matrices must be square of equal size");
  }
  if (!(action_[0] == IntMat::Identity(rank_, rank_)))
    throw DomainError("ZGRep: identity element must act as the identity");
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (!(multiply_skipping_zeros(this->action(g), this->action(h)) ==
            this->action(group_.mul(g, h)))) {
        std::ostringstream os;
        os << "ZGRep: action(g) action(h) != action(gh) at (" << g << "," << h
           << ")";
        throw DomainError(os.str());
      }
    }
  }
}

ZGRep ZGRep::trivial(const FinGroup& g, Index rank) {
  std::vector<IntMat> act(static_cast<std::size_t>(g.order()),
                          IntMat::Identity(rank, rank));
  return ZGRep(g, std::move(act));
}

ZGRep ZGRep::regular(const FinGroup& g) {
  const int n = g.order();
  std::vector<IntMat> act;
  act.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    IntMat a = IntMat::Zero(n, n);
    for (int h = 0; h < n; ++h) a(g.mul(x, h), h) = 1;
    act.push_back(std::move(a));
  }
  return ZGRep(g, std::move(act));
}

ZGRep ZGRep::direct_sum(const ZGRep& other) const {
  if (!(group_ == other.group_)) throw DomainError("direct_sum: different groups");
  std::vector<IntMat> act;
  for (int g = 0; g < group_.order(); ++g) {
    IntMat a = IntMat::Zero(rank_ + other.rank_, rank_ + other.rank_);
    a.topLeftCorner(rank_, rank_) = action(g);
    a.bottomRightCorner(other.rank_, other.rank_) = other.action(g);
    act.push_back(std::move(a));
  }
  return ZGRep(group_, std::move(act));
}

ZGRep augmentation_ideal(const FinGroup& g) {
  const int n = g.order();
  const Index r = n - 1;  // basis g_i - e, i = 1..n-1
  std::vector<IntMat> act;
  act.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    IntMat a = IntMat::Zero(r, r);
    for (int i = 1; i < n; ++i) {
      // x (g_i - e) = (x g_i - e) - (x - e), where a vanishing term means the
      // product hit the identity.
      const int xi = g.mul(x, i);
      if (xi != 0) a(xi - 1, i - 1) += 1;
      if (x != 0) a(x - 1, i - 1) -= 1;
    }
    act.push_back(std::move(a));
  }
  return ZGRep(g, std::move(act));
}

IntMat coinvariants_presentation(const ZGRep& m) {
  const int n = m.group().order();
  const Index r = m.rank();
  IntMat stacked(r, static_cast<Index>(n) * r);
  for (int g = 0; g < n; ++g)
    stacked.middleCols(static_cast<Index>(g) * r, r) =
        m.action(g) - IntMat::Identity(r, r);
  return stacked;
}

FGAbelianGroup coinvariants(const ZGRep& m) {
  return int_cokernel(coinvariants_presentation(m));
}

FGAbelianGroup invariants(const ZGRep& m) {
  const int n = m.group().order();
  const Index r = m.rank();
  IntMat stacked(static_cast<Index>(n) * r, r);
  for (int g = 0; g < n; ++g)
    stacked.middleRows(static_cast<Index>(g) * r, r) =
        m.action(g) - IntMat::Identity(r, r);
  return FGAbelianGroup::free(int_kernel_basis(stacked).cols());
}

namespace {

// Power |G|^k as Index with the entry cap kept in sight by the callers.
Index ipow(Index base, Index exp) {
  Index v = 1;
  for (Index i = 0; i < exp; ++i) v *= base;
  return v;
}

std::vector<int> tuple_digits(Index t, int order, Index n) {
  std::vector<int> d(static_cast<std::size_t>(n));
  for (Index i = n; i-- > 0;) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(t % order);
    t /= order;
  }
  return d;
}

Index tuple_index(const std::vector<int>& digits, int order) {
  Index t = 0;
  for (int g : digits) t = t * order + g;
  return t;
}

void add_identity_block(IntMat& b, Index row0, Index col0, Index mu, int sign) {
  for (Index i = 0; i < mu; ++i) b(row0 + i, col0 + i) += sign;
}

void add_matrix_block(IntMat& b, Index row0, Index col0, const IntMat& a, int sign) {
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      const Int& v = a(i, j);
      if (v == 0) continue;
      if (sign > 0)
        b(row0 + i, col0 + j) += v;
      else
        b(row0 + i, col0 + j) -= v;
    }
  }
}

// Boundary of the inhomogeneous bar complex, degree n -> n-1, as the
// alternating sum of the face maps.
IntMat bar_boundary(const FinGroup& g, const ZGRep& m, Index n,
                    std::int64_t cap) {
  const int o = g.order();
  const Index mu = m.rank();
  const Index rows = mu * ipow(o, n - 1);
  const Index cols = mu * ipow(o, n);
  check_entry_cap(rows, cols, cap);
  IntMat b = IntMat::Zero(rows, cols);
  const Index tuples = ipow(o, n);
  for (Index t = 0; t < tuples; ++t) {
    const auto dig = tuple_digits(t, o, n);
    const Index col0 = t * mu;
    // d_0: m (x) [g_1|...|g_n] -> g_1^{-1} m (x) [g_2|...|g_n]
    {
      std::vector<int> rest(dig.begin() + 1, dig.end());
      add_matrix_block(b, tuple_index(rest, o) * mu, col0,
                       m.action(g.inv(dig[0])), +1);
    }
    // d_i merges g_i g_{i+1}
    int sign = -1;
    for (Index i = 1; i < n; ++i) {
      std::vector<int> merged;
      merged.reserve(dig.size() - 1);
      for (std::size_t j = 0; j < dig.size(); ++j) {
        if (static_cast<Index>(j) == i - 1) {
          merged.push_back(g.mul(dig[j], dig[j + 1]));
          ++j;
        } else {
          merged.push_back(dig[j]);
        }
      }
      add_identity_block(b, tuple_index(merged, o) * mu, col0, mu, sign);
      sign = -sign;
    }
    // d_n drops g_n
    {
      std::vector<int> rest(dig.begin(), dig.end() - 1);
      add_identity_block(b, tuple_index(rest, o) * mu, col0, mu,
                         n % 2 == 0 ? +1 : -1);
    }
  }
  return b;
}

// Coboundary of the bar cochain complex, degree n -> n+1.
IntMat bar_coboundary(const FinGroup& g, const ZGRep& m, Index n,
                      std::int64_t cap) {
  const int o = g.order();
  const Index mu = m.rank();
  const Index rows = mu * ipow(o, n + 1);
  const Index cols = mu * ipow(o, n);
  check_entry_cap(rows, cols, cap);
  IntMat b = IntMat::Zero(rows, cols);
  const Index tuples = ipow(o, n + 1);
  for (Index s = 0; s < tuples; ++s) {
    const auto dig = tuple_digits(s, o, n + 1);
    const Index row0 = s * mu;
    // (delta f)(g_1..g_{n+1}) = g_1 f(g_2..g_{n+1})
    //   + sum_i (-1)^i f(..g_i g_{i+1}..) + (-1)^{n+1} f(g_1..g_n)
    {
      std::vector<int> rest(dig.begin() + 1, dig.end());
      add_matrix_block(b, row0, tuple_index(rest, o) * mu, m.action(dig[0]), +1);
    }
    int sign = -1;
    for (Index i = 1; i <= n; ++i) {
      std::vector<int> merged;
      merged.reserve(dig.size() - 1);
      for (std::size_t j = 0; j < dig.size(); ++j) {
        if (static_cast<Index>(j) == i - 1) {
          merged.push_back(g.mul(dig[j], dig[j + 1]));
          ++j;
        } else {
          merged.push_back(dig[j]);
        }
      }
      add_identity_block(b, row0, tuple_index(merged, o) * mu, mu, sign);
      sign = -sign;
    }
    {
      std::vector<int> rest(dig.begin(), dig.end() - 1);
      add_identity_block(b, row0, tuple_index(rest, o) * mu, mu,
                         n % 2 == 0 ? -1 : +1);
    }
  }
  return b;
}

}  // namespace

std::vector<FGAbelianGroup> group_homology(const FinGroup& g, const ZGRep& m,
                                           Index max_degree,
                                           std::int64_t entry_cap) {
  if (max_degree < 0) throw DomainError("group_homology: negative degree");
  std::vector<FGAbelianGroup> out;
  IntMat outgoing = IntMat::Zero(0, m.rank());  // boundary_0
  for (Index n = 0; n <= max_degree; ++n) {
    IntMat incoming = bar_boundary(g, m, n + 1, entry_cap);
    out.push_back(homology_of_pair(outgoing, incoming));
    outgoing = std::move(incoming);
  }
  return out;
}

std::vector<FGAbelianGroup> group_cohomology(const FinGroup& g, const ZGRep& m,
                                             Index max_degree,
                                             std::int64_t entry_cap) {
  if (max_degree < 0) throw DomainError("group_cohomology: negative degree");
  std::vector<FGAbelianGroup> out;
  IntMat incoming = IntMat::Zero(m.rank(), 0);  // delta_{-1}
  for (Index n = 0; n <= max_degree; ++n) {
    IntMat outgoing = bar_coboundary(g, m, n, entry_cap);
    out.push_back(homology_of_pair(outgoing, incoming));
    incoming = std::move(outgoing);
  }
  return out;
}

SimplicialZModule bar_simplicial_module(const FinGroup& g, const ZGRep& m,
                                        Index top_degree,
                                        std::int64_t entry_cap) {
  const int o = g.order();
  const Index mu = m.rank();
  std::vector<Index> levels;
  for (Index n = 0; n <= top_degree; ++n) levels.push_back(mu * ipow(o, n));
  std::vector<std::vector<IntMat>> faces, degs;
  for (Index n = 1; n <= top_degree; ++n) {
    const Index rows = levels[static_cast<std::size_t>(n - 1)];
    const Index cols = levels[static_cast<std::size_t>(n)];
    check_entry_cap(rows, cols, entry_cap);
    std::vector<IntMat> fam(static_cast<std::size_t>(n + 1),
                            IntMat::Zero(rows, cols));
    const Index tuples = ipow(o, n);
    for (Index t = 0; t < tuples; ++t) {
      const auto dig = tuple_digits(t, o, n);
      const Index col0 = t * mu;
      {
        std::vector<int> rest(dig.begin() + 1, dig.end());
        add_matrix_block(fam[0], tuple_index(rest, o) * mu, col0,
                         m.action(g.inv(dig[0])), +1);
      }
      for (Index i = 1; i < n; ++i) {
        std::vector<int> merged;
        for (std::size_t j = 0; j < dig.size(); ++j) {
          if (static_cast<Index>(j) == i - 1) {
            merged.push_back(g.mul(dig[j], dig[j + 1]));
            ++j;
          } else {
            merged.push_back(dig[j]);
          }
        }
        add_identity_block(fam[static_cast<std::size_t>(i)],
                           tuple_index(merged, o) * mu, col0, mu, +1);
      }
      {
        std::vector<int> rest(dig.begin(), dig.end() - 1);
        add_identity_block(fam[static_cast<std::size_t>(n)],
                           tuple_index(rest, o) * mu, col0, mu, +1);
      }
    }
    faces.push_back(std::move(fam));
  }
  for (Index n = 0; n < top_degree; ++n) {
    const Index rows = levels[static_cast<std::size_t>(n + 1)];
    const Index cols = levels[static_cast<std::size_t>(n)];
    std::vector<IntMat> fam(static_cast<std::size_t>(n + 1),
                            IntMat::Zero(rows, cols));
    const Index tuples = ipow(o, n);
    for (Index t = 0; t < tuples; ++t) {
      const auto dig = tuple_digits(t, o, n);
      for (Index i = 0; i <= n; ++i) {
        // s_i inserts the identity after slot i.
        std::vector<int> widened;
        widened.reserve(dig.size() + 1);
        for (std::size_t j = 0; j < dig.size(); ++j) {
          if (static_cast<Index>(j) == i) widened.push_back(0);
          widened.push_back(dig[j]);
        }
        if (static_cast<Index>(dig.size()) == i) widened.push_back(0);
        add_identity_block(fam[static_cast<std::size_t>(i)],
                           tuple_index(widened, o) * mu, t * mu, mu, +1);
      }
    }
    degs.push_back(std::move(fam));
  }
  return SimplicialZModule(std::move(levels), std::move(faces), std::move(degs),
                           entry_cap);
}

ZGMap::ZGMap(const ZGRep& domain, const ZGRep& codomain, IntMat matrix)
    : domain_(&domain), codomain_(&codomain), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain.rank() || matrix_.cols() != domain.rank())
    throw DomainError("ZGMap: matrix shape mismatch");
  if (!(domain.group() == codomain.group()))
    throw DomainError("ZGMap: different groups");
  for (int g = 0; g < domain.group().order(); ++g) {
    if (!(multiply_skipping_zeros(matrix_, domain.action(g)) ==
          multiply_skipping_zeros(codomain.action(g), matrix_)))
      throw DomainError("ZGMap: matrix is not equivariant");
  }
}

ZGRep pullback_module(const GroupHom& f, const ZGRep& n) {
  if (!(n.group() == f.codomain()))
    throw DomainError("pullback_module: module lives over the wrong group");
  std::vector<IntMat> act;
  for (int g = 0; g < f.domain().order(); ++g) act.push_back(n.action(f(g)));
  return ZGRep(f.domain(), std::move(act));
}

PushforwardResult pushforward_module(const GroupHom& f, const ZGRep& m) {
  if (!(m.group() == f.domain()))
    throw DomainError("pushforward_module: module lives over the wrong group");
  const FinGroup& gg = f.domain();
  const FinGroup& hh = f.codomain();
  const int ng = gg.order(), nh = hh.order();
  const Index mu = m.rank();
  const Index ambient = static_cast<Index>(nh) * mu;  // basis h (x) m_t

  // Relations h f(g) (x) m_t = h (x) g m_t.
  IntMat rel = IntMat::Zero(ambient, static_cast<Index>(nh) * ng * mu);
  Index col = 0;
  for (int h = 0; h < nh; ++h) {
    for (int g = 0; g < ng; ++g) {
      const int hf = hh.mul(h, f(g));
      const IntMat& a = m.action(g);
      for (Index t = 0; t < mu; ++t, ++col) {
        rel(static_cast<Index>(hf) * mu + t, col) += 1;
        for (Index s = 0; s < mu; ++s) {
          if (a(s, t) != 0) rel(static_cast<Index>(h) * mu + s, col) -= a(s, t);
        }
      }
    }
  }
  auto dec = smith_decompose(rel, {.with_u = true, .with_uinv = true});
  const Index free_rank = ambient - dec.rank;
  const IntMat proj = dec.u->bottomRows(free_rank);
  const IntMat sect = dec.uinv->rightCols(free_rank);

  std::vector<IntMat> act;
  for (int h = 0; h < nh; ++h) {
    // h permutes the h'-blocks.
    IntMat a = IntMat::Zero(ambient, ambient);
    for (int hp = 0; hp < nh; ++hp) {
      const int dst = hh.mul(h, hp);
      for (Index t = 0; t < mu; ++t)
        a(static_cast<Index>(dst) * mu + t, static_cast<Index>(hp) * mu + t) = 1;
    }
    act.push_back(multiply_skipping_zeros(proj, multiply_skipping_zeros(a, sect)));
  }
  return PushforwardResult{ZGRep(hh, std::move(act)),
                           FGAbelianGroup(free_rank, dec.invariant_factors)};
}

std::vector<std::vector<std::vector<Int>>> enumerate_equivariant_maps(
    const ZGRep& m, const FGAbelianGroup& a, const Int& enumeration_limit) {
  if (!a.is_finite())
    throw DomainError(
        "enumerate_equivariant_maps: infinite hom-set; pass finite coefficients");
  const auto& factors = a.torsion();
  const Index mu = m.rank();
  Int total = 1;
  const Int size = a.torsion_order();
  for (Index i = 0; i < mu; ++i) {
    total *= size;
    if (total > enumeration_limit)
      throw DomainError("enumerate_equivariant_maps: search space exceeds limit");
  }

  std::vector<std::vector<std::vector<Int>>> found;
  // Mixed-radix odometer over A^mu; each a_t is a residue tuple.
  std::vector<std::vector<Int>> tuple(
      static_cast<std::size_t>(mu),
      std::vector<Int>(factors.size(), Int(0)));
  if (factors.empty()) return {tuple};  // trivial target: only the zero map
  const int n = m.group().order();
  auto satisfies = [&]() {
    for (int g = 1; g < n; ++g) {
      const IntMat& act = m.action(g);
      for (Index t = 0; t < mu; ++t) {
        for (std::size_t j = 0; j < factors.size(); ++j) {
          Int lhs = 0;
          for (Index i = 0; i < mu; ++i) {
            if (act(i, t) != 0) lhs += act(i, t) * tuple[static_cast<std::size_t>(i)][j];
          }
          lhs -= tuple[static_cast<std::size_t>(t)][j];
          if (lhs % factors[j] != 0) return false;
        }
      }
    }
    return true;
  };
  for (;;) {
    if (satisfies()) found.push_back(tuple);
    // increment
    Index t = 0;
    std::size_t j = 0;
    for (;;) {
      if (t == mu) return found;
      auto& digit = tuple[static_cast<std::size_t>(t)][j];
      digit += 1;
      if (digit < factors[j]) break;
      digit = 0;
      if (++j == factors.size()) {
        j = 0;
        ++t;
      }
    }
  }
}

Int count_equivariant_maps(const ZGRep& m, const FGAbelianGroup& a,
                           const Int& enumeration_limit) {
  if (m.rank() == 0) return 1;
  return Int(enumerate_equivariant_maps(m, a, enumeration_limit).size());
}

}  // namespace qk
