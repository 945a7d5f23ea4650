#include "qk/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qk/errors.hpp"
#include "qk/int_linalg.hpp"

namespace qk {

FinGroup::FinGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = order();
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (mul(g, h) == 0 && mul(h, g) == 0) {
        inverse_[static_cast<std::size_t>(g)] = h;
        break;
      }
    }
  }
}

FinGroup FinGroup::from_table(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw SchemaError("group table: empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw SchemaError("group table: not square");
    for (int x : row)
      if (x < 0 || x >= n) throw SchemaError("group table: entry out of range");
  }
  auto mul = [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int g = 0; g < n; ++g) {
    if (mul(0, g) != g || mul(g, 0) != g) {
      std::ostringstream os;
      os << "group table: element 0 is not an identity at g=" << g;
      throw SchemaError(os.str());
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          std::ostringstream os;
          os << "group table: associativity fails at triple (" << a << "," << b
             << "," << c << ")";
          throw SchemaError(os.str());
        }
      }
    }
  }
  for (int g = 0; g < n; ++g) {
    bool has_inv = false;
    for (int h = 0; h < n; ++h)
      if (mul(g, h) == 0 && mul(h, g) == 0) has_inv = true;
    if (!has_inv) {
      std::ostringstream os;
      os << "group table: no inverse for element " << g;
      throw SchemaError(os.str());
    }
  }
  return FinGroup(std::move(table));
}

FinGroup FinGroup::cyclic(int n) {
  if (n < 1) throw SchemaError("cyclic group: order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return FinGroup(std::move(t));
}

FinGroup FinGroup::symmetric(int n) {
  if (n < 1 || n > 4) throw SchemaError("symmetric group: n must be 1..4");
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int ord = static_cast<int>(perms.size());
  auto rank_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) -
                            perms.begin());
  };
  std::vector<std::vector<int>> t(static_cast<std::size_t>(ord),
                                  std::vector<int>(static_cast<std::size_t>(ord)));
  for (int a = 0; a < ord; ++a) {
    for (int b = 0; b < ord; ++b) {
      // (a*b)(x) = a(b(x))
      std::vector<int> comp(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x)
        comp[static_cast<std::size_t>(x)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = rank_of(comp);
    }
  }
  return FinGroup(std::move(t));
}

FinGroup FinGroup::product(const FinGroup& a, const FinGroup& b) {
  const int na = a.order(), nb = b.order();
  const int n = na * nb;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int g = a.mul(x / nb, y / nb);
      const int h = b.mul(x % nb, y % nb);
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = g * nb + h;
    }
  }
  return FinGroup(std::move(t));
}

FinGroup FinGroup::dihedral(int n) {
  if (n < 1) throw SchemaError("dihedral group: n must be positive");
  const int ord = 2 * n;
  auto idx = [n](int rot, int refl) { return refl * n + ((rot % n) + n) % n; };
  std::vector<std::vector<int>> t(static_cast<std::size_t>(ord),
                                  std::vector<int>(static_cast<std::size_t>(ord)));
  for (int x = 0; x < ord; ++x) {
    for (int y = 0; y < ord; ++y) {
      const int rx = x % n, fx = x / n;
      const int ry = y % n, fy = y / n;
      // r^a f^b * r^c f^d = r^{a + (-1)^b c} f^{b+d}
      const int rot = fx == 0 ? rx + ry : rx - ry;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          idx(rot, (fx + fy) % 2);
    }
  }
  return FinGroup(std::move(t));
}

FinGroup FinGroup::quaternion() {
  // Elements 1, i, j, k, -1, -i, -j, -k as 0..7.
  // Encode q = s * u with sign s in {0,1} and unit u in {1,i,j,k}.
  auto unit_mul = [](int a, int b, int& sign) {
    // 0=1, 1=i, 2=j, 3=k
    static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{+1, +1, +1, +1},
                                  {+1, -1, +1, -1},
                                  {+1, -1, -1, +1},
                                  {+1, +1, -1, -1}};
    sign = sgn[a][b];
    return prod[a][b];
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int ux = x % 4, sx = x / 4;
      const int uy = y % 4, sy = y / 4;
      int s;
      const int u = unit_mul(ux, uy, s);
      int sign = (sx + sy) % 2;
      if (s < 0) sign = 1 - sign;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = sign * 4 + u;
    }
  }
  return from_table(std::move(t));
}

bool FinGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FinGroup::element_order(int g) const {
  int x = g, n = 1;
  while (x != 0) {
    x = mul(x, g);
    ++n;
  }
  return n;
}

std::vector<int> FinGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::set<int> seen{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int g : gens) {
        for (int y : {mul(x, g), mul(x, inv(g))}) {
          if (seen.insert(y).second) next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return std::vector<int>(seen.begin(), seen.end());
}

std::vector<int> FinGroup::commutator_subgroup() const {
  std::vector<int> comms;
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b)
      comms.push_back(mul(mul(inv(a), inv(b)), mul(a, b)));
  return generated_subgroup(comms);
}

GroupHom::GroupHom(FinGroup domain, FinGroup codomain, std::vector<int> map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
  if (static_cast<int>(map_.size()) != domain_.order())
    throw DomainError("GroupHom: map length does not match domain order");
  for (int x : map_)
    if (x < 0 || x >= codomain_.order())
      throw DomainError("GroupHom: image out of range");
  for (int a = 0; a < domain_.order(); ++a) {
    for (int b = 0; b < domain_.order(); ++b) {
      if ((*this)(domain_.mul(a, b)) != codomain_.mul((*this)(a), (*this)(b))) {
        std::ostringstream os;
        os << "GroupHom: not a homomorphism at pair (" << a << "," << b << ")";
        throw DomainError(os.str());
      }
    }
  }
}

GroupHom GroupHom::identity(const FinGroup& g) {
  std::vector<int> m(static_cast<std::size_t>(g.order()));
  std::iota(m.begin(), m.end(), 0);
  return GroupHom(g, g, std::move(m));
}

bool GroupHom::is_surjective() const {
  std::set<int> img(map_.begin(), map_.end());
  return static_cast<int>(img.size()) == codomain_.order();
}

GroupHom GroupHom::compose_after(const GroupHom& inner) const {
  if (!(inner.codomain_ == domain_))
    throw DomainError("GroupHom: composition mismatch");
  std::vector<int> m;
  m.reserve(inner.map_.size());
  for (int x : inner.map_) m.push_back((*this)(x));
  return GroupHom(inner.domain_, codomain_, std::move(m));
}

FGAbelianGroup abelianize_group(const FinGroup& g) {
  // The abelian group presented by one generator per element and the
  // relations x_a + x_b = x_{ab} is exactly G/[G,G].
  const int n = g.order();
  IntMat rel = IntMat::Zero(n, static_cast<Index>(n) * n);
  Index col = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b, ++col) {
      rel(a, col) += 1;
      rel(b, col) += 1;
      rel(g.mul(a, b), col) -= 1;
    }
  }
  return int_cokernel(rel);
}

FGAbelianGroup abelian_group_structure(const FinGroup& g) {
  if (!g.is_abelian())
    throw DomainError("abelian_group_structure: group is not abelian");
  return abelianize_group(g);
}

FinGroup quotient_group(const FinGroup& g, const std::vector<int>& normal) {
  const int n = g.order();
  std::set<int> sub(normal.begin(), normal.end());
  if (!sub.count(0)) throw DomainError("quotient_group: subgroup misses identity");
  for (int a : sub)
    for (int b : sub)
      if (!sub.count(g.mul(a, g.inv(b))))
        throw DomainError("quotient_group: not a subgroup");
  for (int a : sub)
    for (int x = 0; x < n; ++x)
      if (!sub.count(g.mul(g.mul(x, a), g.inv(x))))
        throw DomainError("quotient_group: subgroup is not normal");

  std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int a : sub) coset_of[static_cast<std::size_t>(g.mul(x, a))] = c;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m),
                                  std::vector<int>(static_cast<std::size_t>(m)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          coset_of[static_cast<std::size_t>(g.mul(reps[static_cast<std::size_t>(a)],
                                                  reps[static_cast<std::size_t>(b)]))];
  return FinGroup::from_table(std::move(t));
}

}  // namespace qk
