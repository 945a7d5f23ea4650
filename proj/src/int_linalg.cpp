#include "qk/int_linalg.hpp"

#include <sstream>

#include "qk/errors.hpp"

namespace qk {

void check_entry_cap(Index rows, Index cols, std::int64_t cap) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  if (cap < 1) throw SizeCapError("entry cap must be at least 1");
  const std::int64_t entries = static_cast<std::int64_t>(rows) * cols;
  if (entries > cap) {
    std::ostringstream os;
    os << "matrix of " << rows << "x" << cols << " = " << entries
       << " entries exceeds the entry cap " << cap;
    throw SizeCapError(os.str());
  }
}

namespace {

inline void submul(Int& x, const Int& q, const Int& y) {
  mpz_submul(x.get_mpz_t(), q.get_mpz_t(), y.get_mpz_t());
}

inline void addmul(Int& x, const Int& q, const Int& y) {
  mpz_addmul(x.get_mpz_t(), q.get_mpz_t(), y.get_mpz_t());
}

// In-place Smith reduction tracking w = state, with optional transform
// accumulation. Row ops act on u from the left (and on uinv inversely from
// the right); column ops act on v from the right (and on vinv inversely from
// the left), preserving u*m*v = w and u*uinv = v*vinv = id throughout.
class Reducer {
 public:
  Reducer(IntMat w, const SmithOptions& opt) : w_(std::move(w)) {
    const Index r = w_.rows(), c = w_.cols();
    if (opt.with_u) u_ = IntMat::Identity(r, r);
    if (opt.with_uinv) uinv_ = IntMat::Identity(r, r);
    if (opt.with_v) v_ = IntMat::Identity(c, c);
    if (opt.with_vinv) vinv_ = IntMat::Identity(c, c);
  }

  SmithDecomposition run() {
    const Index n = std::min(w_.rows(), w_.cols());
    Index k = 0;
    for (; k < n; ++k) {
      if (!move_pivot(k)) break;
      isolate(k);
    }
    for (Index i = 0; i < k; ++i) {
      if (w_(i, i) < 0) negate_row(i);
    }
    SmithDecomposition out;
    out.rank = 0;
    for (Index i = 0; i < k; ++i) {
      if (w_(i, i) != 0) {
        out.invariant_factors.push_back(w_(i, i));
        ++out.rank;
      }
    }
    out.d = std::move(w_);
    out.u = std::move(u_);
    out.uinv = std::move(uinv_);
    out.v = std::move(v_);
    out.vinv = std::move(vinv_);
    return out;
  }

 private:
  // Smallest nonzero |entry| in the trailing submatrix, first in row-major
  // order among ties; moved to (k,k). False when the submatrix is zero.
  bool move_pivot(Index k) {
    Index pi = -1, pj = -1;
    Int best;
    for (Index i = k; i < w_.rows(); ++i) {
      for (Index j = k; j < w_.cols(); ++j) {
        const Int& x = w_(i, j);
        if (x == 0) continue;
        if (pi < 0 || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
          pi = i;
          pj = j;
          best = x;
          if (mpz_cmpabs_ui(best.get_mpz_t(), 1) == 0) goto found;
        }
      }
    }
    if (pi < 0) return false;
  found:
    if (pi != k) swap_rows(pi, k);
    if (pj != k) swap_cols(pj, k);
    return true;
  }

  // Clears row k and column k and enforces that the pivot divides the whole
  // trailing submatrix, so the diagonal comes out in chain order.
  void isolate(Index k) {
    for (;;) {
      clear_column(k);
      clear_row(k);
      if (!column_clear(k)) continue;
      Index bi, bj;
      if (!find_nondivisible(k, bi, bj)) break;
      // Pull the offending row into row k; re-clearing shrinks the pivot to a
      // proper divisor, so this terminates.
      add_row(k, bi);
    }
  }

  void clear_column(Index k) {
    for (;;) {
      bool done = true;
      for (Index i = k + 1; i < w_.rows(); ++i) {
        if (w_(i, k) == 0) continue;
        Int q = w_(i, k) / w_(k, k);
        if (q != 0) row_submul(i, k, q);
        if (w_(i, k) != 0) {
          swap_rows(i, k);
          done = false;
        }
      }
      if (done) return;
    }
  }

  void clear_row(Index k) {
    for (;;) {
      bool done = true;
      for (Index j = k + 1; j < w_.cols(); ++j) {
        if (w_(k, j) == 0) continue;
        Int q = w_(k, j) / w_(k, k);
        if (q != 0) col_submul(j, k, q);
        if (w_(k, j) != 0) {
          swap_cols(j, k);
          done = false;
        }
      }
      if (done) return;
    }
  }

  bool column_clear(Index k) const {
    for (Index i = k + 1; i < w_.rows(); ++i)
      if (w_(i, k) != 0) return false;
    return true;
  }

  bool find_nondivisible(Index k, Index& bi, Index& bj) const {
    const Int& p = w_(k, k);
    if (mpz_cmpabs_ui(p.get_mpz_t(), 1) == 0) return false;
    for (Index i = k + 1; i < w_.rows(); ++i) {
      for (Index j = k + 1; j < w_.cols(); ++j) {
        if (w_(i, j) == 0) continue;
        if (!mpz_divisible_p(w_(i, j).get_mpz_t(), p.get_mpz_t())) {
          bi = i;
          bj = j;
          return true;
        }
      }
    }
    return false;
  }

  // --- elementary operations, mirrored into the transforms ---

  void swap_rows(Index i, Index j) {
    w_.row(i).swap(w_.row(j));
    if (u_.size()) u_.row(i).swap(u_.row(j));
    if (uinv_.size()) uinv_.col(i).swap(uinv_.col(j));
  }

  void swap_cols(Index i, Index j) {
    w_.col(i).swap(w_.col(j));
    if (v_.size()) v_.col(i).swap(v_.col(j));
    if (vinv_.size()) vinv_.row(i).swap(vinv_.row(j));
  }

  // row_i -= q * row_j
  void row_submul(Index i, Index j, const Int& q) {
    for (Index c = 0; c < w_.cols(); ++c) {
      if (w_(j, c) != 0) submul(w_(i, c), q, w_(j, c));
    }
    if (u_.size()) {
      for (Index c = 0; c < u_.cols(); ++c)
        if (u_(j, c) != 0) submul(u_(i, c), q, u_(j, c));
    }
    if (uinv_.size()) {
      for (Index r = 0; r < uinv_.rows(); ++r)
        if (uinv_(r, i) != 0) addmul(uinv_(r, j), q, uinv_(r, i));
    }
  }

  // row_i += row_j
  void add_row(Index i, Index j) {
    for (Index c = 0; c < w_.cols(); ++c) {
      if (w_(j, c) != 0) w_(i, c) += w_(j, c);
    }
    if (u_.size()) {
      for (Index c = 0; c < u_.cols(); ++c)
        if (u_(j, c) != 0) u_(i, c) += u_(j, c);
    }
    if (uinv_.size()) {
      for (Index r = 0; r < uinv_.rows(); ++r)
        if (uinv_(r, i) != 0) uinv_(r, j) -= uinv_(r, i);
    }
  }

  // col_i -= q * col_j
  void col_submul(Index i, Index j, const Int& q) {
    for (Index r = 0; r < w_.rows(); ++r) {
      if (w_(r, j) != 0) submul(w_(r, i), q, w_(r, j));
    }
    if (v_.size()) {
      for (Index r = 0; r < v_.rows(); ++r)
        if (v_(r, j) != 0) submul(v_(r, i), q, v_(r, j));
    }
    if (vinv_.size()) {
      for (Index c = 0; c < vinv_.cols(); ++c)
        if (vinv_(i, c) != 0) addmul(vinv_(j, c), q, vinv_(i, c));
    }
  }

  void negate_row(Index i) {
    for (Index c = 0; c < w_.cols(); ++c)
      if (w_(i, c) != 0) w_(i, c) = -w_(i, c);
    if (u_.size()) {
      for (Index c = 0; c < u_.cols(); ++c)
        if (u_(i, c) != 0) u_(i, c) = -u_(i, c);
    }
    if (uinv_.size()) {
      for (Index r = 0; r < uinv_.rows(); ++r)
        if (uinv_(r, i) != 0) uinv_(r, i) = -uinv_(r, i);
    }
  }

  IntMat w_;
  IntMat u_, uinv_, v_, vinv_;  // empty unless requested
};

}  // namespace

SmithDecomposition smith_decompose(IntMat w, const SmithOptions& opt) {
  return Reducer(std::move(w), opt).run();
}

SmithResult smith_normal_form(const IntMat& m) {
  auto dec = smith_decompose(m, {.with_u = true, .with_v = true});
  return SmithResult{std::move(*dec.u), std::move(dec.d), std::move(*dec.v)};
}

IntMat int_kernel_basis(const IntMat& m) {
  auto dec = smith_decompose(m, {.with_v = true});
  return dec.v->rightCols(m.cols() - dec.rank);
}

FGAbelianGroup int_cokernel(const IntMat& m) {
  auto dec = smith_decompose(m, {});
  return FGAbelianGroup(m.rows() - dec.rank, dec.invariant_factors);
}

std::optional<IntMat> int_solve(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) throw DomainError("int_solve: row mismatch");
  auto dec = smith_decompose(a, {.with_u = true, .with_v = true});
  IntMat ub = multiply_skipping_zeros(*dec.u, b);
  IntMat y = IntMat::Zero(a.cols(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < b.cols(); ++j) {
      if (i < dec.rank) {
        const Int& d = dec.d(i, i);
        if (!mpz_divisible_p(ub(i, j).get_mpz_t(), d.get_mpz_t()))
          return std::nullopt;
        y(i, j) = ub(i, j) / d;
      } else if (ub(i, j) != 0) {
        return std::nullopt;
      }
    }
  }
  return multiply_skipping_zeros(*dec.v, y);
}

FGAbelianGroup homology_of_pair(const IntMat& out, const IntMat& in) {
  const Index gens = out.cols();
  if (in.rows() != gens)
    throw DomainError("homology_of_pair: boundary dimensions disagree");
  if (gens == 0) return FGAbelianGroup::trivial();
  auto dec = smith_decompose(out, {.with_vinv = true});
  const Index k = gens - dec.rank;  // kernel rank
  IntMat y = multiply_skipping_zeros(*dec.vinv, in);
  for (Index i = 0; i < dec.rank; ++i)
    for (Index j = 0; j < y.cols(); ++j)
      if (y(i, j) != 0)
        throw DomainError("homology_of_pair: incoming map is not a cycle");
  auto quot = smith_decompose(y.bottomRows(k), {});
  return FGAbelianGroup(k - quot.rank, quot.invariant_factors);
}

Index rational_rank(IntMat m) {
  const Index rows = m.rows(), cols = m.cols();
  Int prev = 1;
  Index rank = 0;
  Index col = 0;
  for (Index k = 0; k < rows && col < cols; ++col) {
    Index piv = -1;
    for (Index i = k; i < rows; ++i) {
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != k) m.row(piv).swap(m.row(k));
    for (Index i = k + 1; i < rows; ++i) {
      for (Index j = col + 1; j < cols; ++j) {
        m(i, j) = m(k, col) * m(i, j) - m(i, col) * m(k, j);
        m(i, j) /= prev;
      }
      m(i, col) = 0;
    }
    prev = m(k, col);
    ++rank;
    ++k;
  }
  return rank;
}

Int det_bareiss(IntMat m) {
  if (m.rows() != m.cols()) throw DomainError("det_bareiss: square input required");
  const Index n = m.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Index piv = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (m(i, k) != 0) {
          piv = i;
          break;
        }
      }
      if (piv < 0) return 0;
      m.row(piv).swap(m.row(k));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        m(i, j) = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) /= prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

IntMat multiply_skipping_zeros(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows())
    throw DomainError("multiply_skipping_zeros: inner dimension mismatch");
  IntMat out = IntMat::Zero(a.rows(), b.cols());
  for (Index j = 0; j < b.cols(); ++j) {
    for (Index i = 0; i < b.rows(); ++i) {
      const Int& coef = b(i, j);
      if (coef == 0) continue;
      for (Index r = 0; r < a.rows(); ++r) {
        const Int& av = a(r, i);
        if (av != 0) addmul(out(r, j), coef, av);
      }
    }
  }
  return out;
}

}  // namespace qk
