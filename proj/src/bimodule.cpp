#include "qk/bimodule.hpp"

#include <sstream>

#include "qk/errors.hpp"
#include "qk/int_linalg.hpp"

namespace qk {

namespace {

FMat kron(const FMat& a, const FMat& b) {
  FMat out = FMat::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (Index r = 0; r < b.rows(); ++r)
        for (Index c = 0; c < b.cols(); ++c)
          if (!b(r, c).is_zero())
            out(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return out;
}

Index ipow(Index base, Index exp) {
  Index v = 1;
  for (Index i = 0; i < exp; ++i) v *= base;
  return v;
}

std::vector<int> tuple_digits(Index t, Index base, Index n) {
  std::vector<int> d(static_cast<std::size_t>(n));
  for (Index i = n; i-- > 0;) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(t % base);
    t /= base;
  }
  return d;
}

Index tuple_index(const std::vector<int>& digits, Index base) {
  Index t = 0;
  for (int g : digits) t = t * base + g;
  return t;
}

}  // namespace

Bimodule::Bimodule(const FinDimAlgebra& algebra, std::vector<FMat> left,
                   std::vector<FMat> right)
    : algebra_(&algebra), left_(std::move(left)), right_(std::move(right)) {
  const Index d = algebra.dim();
  if (static_cast<Index>(left_.size()) != d ||
      static_cast<Index>(right_.size()) != d)
    throw DomainError("Bimodule: one action matrix per algebra basis element");
  dim_ = left_.empty() ? 0 : left_[0].rows();
  for (const FMat& m : left_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw DomainError("Bimodule: left action shape mismatch");
  for (const FMat& m : right_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw DomainError("Bimodule: right action shape mismatch");
  if (d == 0) return;
  const FMat id = FMat::Identity(dim_, dim_);
  if (!(left_action(algebra.unit()) == id) || !(right_action(algebra.unit()) == id))
    throw DomainError("Bimodule: actions are not unital");
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      const FVec prod = algebra.basis_product(i, j);
      if (!(left_action(prod) == FMat(left_basis(i) * left_basis(j))))
        throw DomainError("Bimodule: left action is not associative");
      if (!(right_action(prod) == FMat(right_basis(j) * right_basis(i))))
        throw DomainError("Bimodule: right action is not associative");
      if (!(FMat(left_basis(i) * right_basis(j)) ==
            FMat(right_basis(j) * left_basis(i))))
        throw DomainError("Bimodule: left and right actions do not commute");
    }
  }
}

Bimodule Bimodule::regular(const FinDimAlgebra& a) {
  std::vector<FMat> left, right;
  for (Index i = 0; i < a.dim(); ++i) {
    left.push_back(a.left_mult_basis(i));
    right.push_back(a.right_mult(FVec(FVec::Unit(a.dim(), i))));
  }
  return Bimodule(a, std::move(left), std::move(right));
}

Bimodule Bimodule::zero(const FinDimAlgebra& a) {
  std::vector<FMat> none(static_cast<std::size_t>(a.dim()), FMat::Zero(0, 0));
  return Bimodule(a, none, none);
}

FMat Bimodule::left_action(const FVec& a) const {
  FMat out = FMat::Zero(dim_, dim_);
  for (Index i = 0; i < a.size(); ++i)
    if (!a(i).is_zero()) out += a(i) * left_[static_cast<std::size_t>(i)];
  return out;
}

FMat Bimodule::right_action(const FVec& a) const {
  FMat out = FMat::Zero(dim_, dim_);
  for (Index i = 0; i < a.size(); ++i)
    if (!a(i).is_zero()) out += a(i) * right_[static_cast<std::size_t>(i)];
  return out;
}

MultKernel mult_kernel_bimodule(const FinDimAlgebra& a) {
  const Index d = a.dim();
  FMat mult = FMat::Zero(d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) mult.col(i * d + j) = a.basis_product(i, j);
  const FMat kernel = field_kernel_basis(mult);
  if (kernel.cols() != d * d - d)
    throw DomainError("mult_kernel_bimodule: kernel dimension is not d^2 - d");

  const FMat id = FMat::Identity(d, d);
  std::vector<FMat> left, right;
  for (Index x = 0; x < d; ++x) {
    const FMat ambient_left = kron(a.left_mult_basis(x), id);
    const FMat ambient_right = kron(id, a.right_mult(FVec(FVec::Unit(d, x))));
    auto lx = field_solve(kernel, FMat(ambient_left * kernel));
    auto rx = field_solve(kernel, FMat(ambient_right * kernel));
    if (!lx || !rx)
      throw DomainError("mult_kernel_bimodule: kernel is not invariant");
    left.push_back(std::move(*lx));
    right.push_back(std::move(*rx));
  }
  return MultKernel{Bimodule(a, std::move(left), std::move(right)), kernel};
}

CentralQuotient central_quotient(const Bimodule& m) {
  const Index d = m.algebra().dim();
  const Index mu = m.dim();
  std::vector<FVec> gens;
  for (Index i = 0; i < d; ++i) {
    const FMat diff = m.left_basis(i) - m.right_basis(i);
    for (Index j = 0; j < mu; ++j) {
      const FVec v = diff.col(j);
      if (!v.isZero(0)) gens.push_back(v);
    }
  }
  FMat span(mu, static_cast<Index>(gens.size()));
  for (std::size_t t = 0; t < gens.size(); ++t)
    span.col(static_cast<Index>(t)) = gens[t];
  // Close under both actions to get the sub-bimodule.
  for (;;) {
    Subspace sub(span);
    std::vector<FVec> fresh;
    for (Index i = 0; i < d; ++i) {
      for (Index c = 0; c < span.cols(); ++c) {
        const FVec v = span.col(c);
        const FVec lv = m.left_basis(i) * v;
        if (!sub.contains(lv)) fresh.push_back(lv);
        const FVec rv = m.right_basis(i) * v;
        if (!sub.contains(rv)) fresh.push_back(rv);
      }
    }
    if (fresh.empty()) break;
    FMat wider(mu, span.cols() + static_cast<Index>(fresh.size()));
    wider.leftCols(span.cols()) = span;
    for (std::size_t t = 0; t < fresh.size(); ++t)
      wider.col(span.cols() + static_cast<Index>(t)) = fresh[t];
    span = std::move(wider);
  }
  const Subspace sub(span);
  return CentralQuotient{sub.codim(), sub.projection_matrix()};
}

FMat hochschild_boundary(const FinDimAlgebra& a, const Bimodule& m, Index n,
                         std::int64_t entry_cap) {
  const Index d = a.dim();
  const Index mu = m.dim();
  const Index rows = mu * ipow(d, n - 1);
  const Index cols = mu * ipow(d, n);
  check_entry_cap(rows, cols, entry_cap);
  FMat b = FMat::Zero(rows, cols);
  const Index tuples = ipow(d, n);
  auto add_block = [&](Index row0, Index col0, const FMat& blk, const Fq& coef) {
    for (Index j = 0; j < blk.cols(); ++j)
      for (Index i = 0; i < blk.rows(); ++i)
        if (!blk(i, j).is_zero()) b(row0 + i, col0 + j) += coef * blk(i, j);
  };
  const FMat id = FMat::Identity(mu, mu);
  for (Index t = 0; t < tuples; ++t) {
    const auto dig = tuple_digits(t, d, n);
    const Index col0 = t * mu;
    // (m a_1) (x) a_2 ... a_n
    {
      std::vector<int> rest(dig.begin() + 1, dig.end());
      add_block(tuple_index(rest, d) * mu, col0, m.right_basis(dig[0]), Fq(1));
    }
    // merges, with structure constants fanning out over the basis
    int sign = -1;
    for (Index i = 1; i < n; ++i) {
      const FVec prod = a.basis_product(dig[static_cast<std::size_t>(i - 1)],
                                        dig[static_cast<std::size_t>(i)]);
      for (Index k = 0; k < d; ++k) {
        if (prod(k).is_zero()) continue;
        std::vector<int> merged;
        for (std::size_t j = 0; j < dig.size(); ++j) {
          if (static_cast<Index>(j) == i - 1) {
            merged.push_back(static_cast<int>(k));
            ++j;
          } else {
            merged.push_back(dig[j]);
          }
        }
        add_block(tuple_index(merged, d) * mu, col0, id,
                  sign > 0 ? prod(k) : Fq(-prod(k)));
      }
      sign = -sign;
    }
    // (-1)^n (a_n m) (x) a_1 ... a_{n-1}
    {
      std::vector<int> rest(dig.begin(), dig.end() - 1);
      add_block(tuple_index(rest, d) * mu, col0, m.left_basis(dig.back()),
                Fq(n % 2 == 0 ? 1 : -1));
    }
  }
  return b;
}

namespace {

// Span of the degenerate tensors (some slot equal to the unit) in M (x) A^n.
FMat degenerate_span(const FinDimAlgebra& a, const Bimodule& m, Index n) {
  const Index d = a.dim();
  const Index mu = m.dim();
  const FVec u = a.unit();
  const Index small = ipow(d, n - 1);
  FMat span = FMat::Zero(mu * ipow(d, n), n * small * mu);
  Index col = 0;
  for (Index slot = 0; slot < n; ++slot) {
    for (Index rest = 0; rest < small; ++rest) {
      const auto rd = tuple_digits(rest, d, n - 1);
      for (Index t = 0; t < mu; ++t, ++col) {
        for (Index k = 0; k < d; ++k) {
          if (u(k).is_zero()) continue;
          std::vector<int> full;
          full.reserve(static_cast<std::size_t>(n));
          for (std::size_t j = 0; j < rd.size(); ++j) {
            if (static_cast<Index>(j) == slot) full.push_back(static_cast<int>(k));
            full.push_back(rd[j]);
          }
          if (static_cast<Index>(rd.size()) == slot)
            full.push_back(static_cast<int>(k));
          span(tuple_index(full, d) * mu + t, col) += u(k);
        }
      }
    }
  }
  return span;
}

}  // namespace

std::vector<Index> hochschild_homology(const FinDimAlgebra& a, const Bimodule& m,
                                       Index max_degree, bool normalized,
                                       std::int64_t entry_cap) {
  if (max_degree < 0) throw DomainError("hochschild_homology: negative degree");
  const Index d = a.dim();
  const Index mu = m.dim();
  // dim HH_n = dim C_n - rank b_n - rank b_{n+1}.
  std::vector<Index> dims, ranks;
  std::vector<Index> cdims;
  if (!normalized) {
    for (Index n = 0; n <= max_degree + 1; ++n) {
      cdims.push_back(mu * ipow(d, n));
      if (n >= 1)
        ranks.push_back(field_rank(hochschild_boundary(a, m, n, entry_cap)));
    }
  } else {
    std::vector<Subspace> degen;  // for degrees 0..max_degree+1
    for (Index n = 0; n <= max_degree + 1; ++n) {
      const Index full = mu * ipow(d, n);
      check_entry_cap(full, n == 0 ? 1 : n * mu * ipow(d, n - 1), entry_cap);
      if (n == 0)
        degen.emplace_back(FMat::Zero(mu, 0));
      else
        degen.emplace_back(degenerate_span(a, m, n));
      cdims.push_back(degen.back().codim());
    }
    for (Index n = 1; n <= max_degree + 1; ++n) {
      const FMat b = hochschild_boundary(a, m, n, entry_cap);
      const auto& src = degen[static_cast<std::size_t>(n)];
      const auto& dst = degen[static_cast<std::size_t>(n - 1)];
      // The degenerate subcomplex must be closed under the boundary.
      const FMat span = degenerate_span(a, m, n);
      for (Index c = 0; c < span.cols(); ++c)
        if (!dst.project(FVec(b * span.col(c))).isZero(0))
          throw DomainError("hochschild_homology: degenerate subcomplex not closed");
      // Quotient boundary on the complement coordinates.
      FMat reduced(dst.codim(), src.codim());
      const auto& cc = src.complement_coords();
      for (std::size_t q = 0; q < cc.size(); ++q)
        reduced.col(static_cast<Index>(q)) = dst.project(b.col(cc[q]));
      ranks.push_back(field_rank(reduced));
    }
  }
  for (Index n = 0; n <= max_degree; ++n) {
    const Index out_rank = n == 0 ? 0 : ranks[static_cast<std::size_t>(n - 1)];
    const Index in_rank = ranks[static_cast<std::size_t>(n)];
    dims.push_back(cdims[static_cast<std::size_t>(n)] - out_rank - in_rank);
  }
  return dims;
}

BimoduleMap::BimoduleMap(const Bimodule& domain, const Bimodule& codomain,
                         FMat matrix)
    : domain_(&domain), codomain_(&codomain), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain.dim() || matrix_.cols() != domain.dim())
    throw DomainError("BimoduleMap: shape mismatch");
  const Index d = domain.algebra().dim();
  if (codomain.algebra().dim() != d)
    throw DomainError("BimoduleMap: different algebras");
  for (Index i = 0; i < d; ++i) {
    if (!(FMat(matrix_ * domain.left_basis(i)) ==
          FMat(codomain.left_basis(i) * matrix_)))
      throw DomainError("BimoduleMap: not left-equivariant");
    if (!(FMat(matrix_ * domain.right_basis(i)) ==
          FMat(codomain.right_basis(i) * matrix_)))
      throw DomainError("BimoduleMap: not right-equivariant");
  }
}

}  // namespace qk
