#include "qk/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "qk/errors.hpp"

namespace qk {

FinDimAlgebra::FinDimAlgebra(Field field, std::vector<FMat> mul, FVec unit)
    : field_(field),
      dim_(static_cast<Index>(mul.size())),
      mul_(std::move(mul)),
      unit_(std::move(unit)) {
  for (const FMat& m : mul_) {
    if (m.rows() != dim_ || m.cols() != dim_)
      throw SchemaError("algebra: multiplication tensor has wrong shape");
  }
  if (unit_.size() != dim_) throw SchemaError("algebra: unit vector has wrong size");
  if (dim_ == 0) return;  // the zero ring
  if (!(FMat(left_mult(unit_)) == FMat(FMat::Identity(dim_, dim_))) ||
      !(FMat(right_mult(unit_)) == FMat(FMat::Identity(dim_, dim_))))
    throw SchemaError("algebra: unit law fails");
  for (Index i = 0; i < dim_; ++i) {
    for (Index j = 0; j < dim_; ++j) {
      // (e_i e_j) e_k = e_i (e_j e_k) for all k, as operators.
      const FMat lhs = left_mult(basis_product(i, j));
      const FMat rhs = FMat(left_mult_basis(i) * left_mult_basis(j));
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "algebra: associativity fails at basis pair (" << i << "," << j << ")";
        throw SchemaError(os.str());
      }
    }
  }
}

FinDimAlgebra FinDimAlgebra::from_structure_constants(
    Field field, const std::vector<std::vector<std::vector<Fq>>>& c,
    const FVec& unit) {
  const Index d = static_cast<Index>(c.size());
  std::vector<FMat> mul;
  for (Index i = 0; i < d; ++i) {
    if (static_cast<Index>(c[static_cast<std::size_t>(i)].size()) != d)
      throw SchemaError("algebra: structure constants not cubical");
    FMat m = FMat::Zero(d, d);
    for (Index j = 0; j < d; ++j) {
      const auto& col = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (static_cast<Index>(col.size()) != d)
        throw SchemaError("algebra: structure constants not cubical");
      for (Index k = 0; k < d; ++k) m(k, j) = col[static_cast<std::size_t>(k)];
    }
    mul.push_back(std::move(m));
  }
  return FinDimAlgebra(field, std::move(mul), unit);
}

FinDimAlgebra FinDimAlgebra::ground(Field field) {
  FMat one(1, 1);
  one(0, 0) = field.make(1);
  FVec unit(1);
  unit(0) = field.make(1);
  return FinDimAlgebra(field, {one}, unit);
}

FinDimAlgebra FinDimAlgebra::matrix_algebra(Field field, Index n) {
  const Index d = n * n;
  auto idx = [n](Index r, Index c) { return r * n + c; };
  std::vector<FMat> mul(static_cast<std::size_t>(d), FMat::Zero(d, d));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        for (Index e = 0; e < n; ++e) {
          // E_{ab} E_{ce} = delta_{bc} E_{ae}
          if (b == c)
            mul[static_cast<std::size_t>(idx(a, b))](idx(a, e), idx(c, e)) =
                field.make(1);
        }
  FVec unit = FVec::Zero(d);
  for (Index a = 0; a < n; ++a) unit(idx(a, a)) = field.make(1);
  return FinDimAlgebra(field, std::move(mul), unit);
}

FinDimAlgebra FinDimAlgebra::upper_triangular(Field field, Index n) {
  std::vector<std::pair<Index, Index>> cells;
  for (Index r = 0; r < n; ++r)
    for (Index c = r; c < n; ++c) cells.emplace_back(r, c);
  const Index d = static_cast<Index>(cells.size());
  auto find = [&](Index r, Index c) {
    for (Index i = 0; i < d; ++i)
      if (cells[static_cast<std::size_t>(i)] == std::pair{r, c}) return i;
    return Index(-1);
  };
  std::vector<FMat> mul(static_cast<std::size_t>(d), FMat::Zero(d, d));
  for (Index i = 0; i < d; ++i) {
    const auto [a, b] = cells[static_cast<std::size_t>(i)];
    for (Index j = 0; j < d; ++j) {
      const auto [c, e] = cells[static_cast<std::size_t>(j)];
      if (b == c) mul[static_cast<std::size_t>(i)](find(a, e), j) = field.make(1);
    }
  }
  FVec unit = FVec::Zero(d);
  for (Index r = 0; r < n; ++r) unit(find(r, r)) = field.make(1);
  return FinDimAlgebra(field, std::move(mul), unit);
}

FinDimAlgebra FinDimAlgebra::product_of_fields(Field field, Index copies) {
  std::vector<FMat> mul(static_cast<std::size_t>(copies), FMat::Zero(copies, copies));
  for (Index i = 0; i < copies; ++i) mul[static_cast<std::size_t>(i)](i, i) = field.make(1);
  FVec unit = FVec::Zero(copies);
  for (Index i = 0; i < copies; ++i) unit(i) = field.make(1);
  return FinDimAlgebra(field, std::move(mul), unit);
}

namespace {

std::vector<std::vector<int>> words_up_to(Index gens, Index max_len) {
  std::vector<std::vector<int>> words{{}};
  std::size_t start = 0;
  for (Index len = 1; len <= max_len; ++len) {
    const std::size_t end = words.size();
    for (std::size_t w = start; w < end; ++w) {
      for (int g = 0; g < gens; ++g) {
        auto word = words[w];
        word.push_back(g);
        words.push_back(std::move(word));
      }
    }
    start = end;
  }
  return words;
}

}  // namespace

FinDimAlgebra FinDimAlgebra::truncated_tensor_algebra(Field field, Index gens,
                                                      Index max_len) {
  const auto words = words_up_to(gens, max_len);
  const Index d = static_cast<Index>(words.size());
  std::map<std::vector<int>, Index> index;
  for (Index i = 0; i < d; ++i) index[words[static_cast<std::size_t>(i)]] = i;
  std::vector<FMat> mul(static_cast<std::size_t>(d), FMat::Zero(d, d));
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      auto cat = words[static_cast<std::size_t>(i)];
      const auto& wj = words[static_cast<std::size_t>(j)];
      cat.insert(cat.end(), wj.begin(), wj.end());
      if (static_cast<Index>(cat.size()) <= max_len)
        mul[static_cast<std::size_t>(i)](index.at(cat), j) = field.make(1);
    }
  }
  FVec unit = FVec::Zero(d);
  unit(0) = field.make(1);
  return FinDimAlgebra(field, std::move(mul), unit);
}

FinDimAlgebra FinDimAlgebra::truncated_polynomial_algebra(Field field, Index gens,
                                                          Index max_len) {
  // Exponent vectors of total degree <= max_len, ordered by degree then lex.
  std::vector<std::vector<int>> monos;
  std::vector<int> cur(static_cast<std::size_t>(gens), 0);
  std::function<void(Index, Index)> rec = [&](Index pos, Index left) {
    if (pos == gens) {
      monos.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[static_cast<std::size_t>(pos)] = e;
      rec(pos + 1, left - e);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, max_len);
  auto degree = [](const std::vector<int>& m) {
    int s = 0;
    for (int e : m) s += e;
    return s;
  };
  std::stable_sort(monos.begin(), monos.end(),
                   [&](const auto& a, const auto& b) { return degree(a) < degree(b); });
  const Index d = static_cast<Index>(monos.size());
  std::map<std::vector<int>, Index> index;
  for (Index i = 0; i < d; ++i) index[monos[static_cast<std::size_t>(i)]] = i;
  std::vector<FMat> mul(static_cast<std::size_t>(d), FMat::Zero(d, d));
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      std::vector<int> sum = monos[static_cast<std::size_t>(i)];
      for (Index t = 0; t < gens; ++t)
        sum[static_cast<std::size_t>(t)] +=
            monos[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
      if (degree(sum) <= max_len)
        mul[static_cast<std::size_t>(i)](index.at(sum), j) = field.make(1);
    }
  }
  FVec unit = FVec::Zero(d);
  unit(0) = field.make(1);
  return FinDimAlgebra(field, std::move(mul), unit);
}

FVec FinDimAlgebra::product(const FVec& a, const FVec& b) const {
  FVec out = FVec::Zero(dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (a(i).is_zero()) continue;
    out += a(i) * (mul_[static_cast<std::size_t>(i)] * b);
  }
  return out;
}

FMat FinDimAlgebra::left_mult(const FVec& a) const {
  FMat out = FMat::Zero(dim_, dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (!a(i).is_zero()) out += a(i) * mul_[static_cast<std::size_t>(i)];
  }
  return out;
}

FMat FinDimAlgebra::right_mult(const FVec& a) const {
  FMat out = FMat::Zero(dim_, dim_);
  for (Index j = 0; j < dim_; ++j) out.col(j) = mul_[static_cast<std::size_t>(j)] * a;
  return out;
}

bool FinDimAlgebra::is_commutative() const {
  for (Index i = 0; i < dim_; ++i)
    for (Index j = i + 1; j < dim_; ++j)
      if (!(FVec(basis_product(i, j)) == FVec(basis_product(j, i)))) return false;
  return true;
}

FVec FinDimAlgebra::power(const FVec& a, Index n) const {
  FVec out = unit_;
  for (Index i = 0; i < n; ++i) out = product(out, a);
  return out;
}

bool FinDimAlgebra::is_nilpotent_element(const FVec& a, Index exponent_bound) const {
  FVec x = a;
  for (Index i = 1; i <= exponent_bound; ++i) {
    if (x.isZero(0)) return true;
    x = product(x, a);
  }
  return x.isZero(0);
}

QuotientAlgebra quotient_by_ideal(const FinDimAlgebra& a, const FMat& ideal_span) {
  const Index d = a.dim();
  FMat span = ideal_span;
  // Close under left and right multiplication by basis elements.
  for (;;) {
    Subspace sub(span);
    std::vector<FVec> fresh;
    for (Index i = 0; i < d; ++i) {
      const FMat li = a.left_mult_basis(i);
      for (Index c = 0; c < span.cols(); ++c) {
        const FVec v = span.col(c);
        const FVec lv = li * v;
        if (!sub.contains(lv)) fresh.push_back(lv);
        const FVec rv = a.product(v, FVec(FVec::Unit(d, i)));
        if (!sub.contains(rv)) fresh.push_back(rv);
      }
    }
    if (fresh.empty()) break;
    FMat wider(d, span.cols() + static_cast<Index>(fresh.size()));
    wider.leftCols(span.cols()) = span;
    for (std::size_t t = 0; t < fresh.size(); ++t)
      wider.col(span.cols() + static_cast<Index>(t)) = fresh[t];
    span = std::move(wider);
  }

  const Subspace sub(span);
  const FMat proj = sub.projection_matrix();
  const auto& coords = sub.complement_coords();
  const Index q = sub.codim();
  std::vector<FMat> mul(static_cast<std::size_t>(q), FMat::Zero(q, q));
  for (Index i = 0; i < q; ++i) {
    for (Index j = 0; j < q; ++j) {
      const FVec prod = a.basis_product(coords[static_cast<std::size_t>(i)],
                                        coords[static_cast<std::size_t>(j)]);
      mul[static_cast<std::size_t>(i)].col(j) = sub.project(prod);
    }
  }
  const FVec unit = sub.project(a.unit());
  return QuotientAlgebra{FinDimAlgebra(a.field(), std::move(mul), unit), proj,
                         coords};
}

QuotientAlgebra commutator_quotient(const FinDimAlgebra& a) {
  const Index d = a.dim();
  std::vector<FVec> comms;
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      const FVec c = a.basis_product(i, j) - a.basis_product(j, i);
      if (!c.isZero(0)) comms.push_back(c);
    }
  FMat span(d, static_cast<Index>(comms.size()));
  for (std::size_t t = 0; t < comms.size(); ++t)
    span.col(static_cast<Index>(t)) = comms[t];
  QuotientAlgebra out = quotient_by_ideal(a, span);
  if (!out.algebra.is_commutative())
    throw DomainError("commutator_quotient: output failed the commutativity check");
  return out;
}

FMat nilradical(const FinDimAlgebra& a) {
  if (!a.is_commutative())
    throw DomainError("nilradical: defined here for commutative algebras only");
  const Index d = a.dim();
  if (d == 0) return FMat::Zero(0, 0);
  FMat kernel;
  if (a.field().characteristic == 0) {
    // Kernel of the trace form T(x,y) = tr(L_{xy}).
    FMat gram(d, d);
    for (Index i = 0; i < d; ++i) {
      for (Index j = 0; j < d; ++j) {
        const FMat op = a.left_mult(a.basis_product(i, j));
        Fq tr(0);
        for (Index t = 0; t < d; ++t) tr += op(t, t);
        gram(i, j) = tr;
      }
    }
    kernel = field_kernel_basis(gram);
  } else {
    // Iterated Frobenius x -> x^p, an F_p-linear map on a commutative
    // algebra; its stable kernel is exactly the set of nilpotents.
    const unsigned p = a.field().characteristic;
    FMat frob(d, d);
    for (Index i = 0; i < d; ++i)
      frob.col(i) = a.power(FVec(FVec::Unit(d, i)), static_cast<Index>(p));
    FMat iter = frob;
    Index reach = static_cast<Index>(p);
    while (reach < d) {
      iter = FMat(frob * iter);
      reach *= static_cast<Index>(p);
    }
    kernel = field_kernel_basis(iter);
  }
  // Exponent-bound nilpotency check on the computed spanning set.
  for (Index c = 0; c < kernel.cols(); ++c) {
    if (!a.is_nilpotent_element(kernel.col(c), 2 * d))
      throw DomainError("nilradical: internal check failed (non-nilpotent basis vector)");
  }
  return kernel;
}

bool is_reduced(const FinDimAlgebra& a) {
  if (a.dim() == 0) return true;
  return nilradical(a).cols() == 0;
}

}  // namespace qk
