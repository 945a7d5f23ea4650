#include "qk/field_linalg.hpp"

#include "qk/errors.hpp"

namespace qk {

RowEchelon row_reduce(FMat m) {
  const Index rows = m.rows(), cols = m.cols();
  RowEchelon out;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const Fq inv = m(r, c).inverse();
    for (Index j = c; j < cols; ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Fq f = m(i, c);
      if (f.is_zero()) continue;
      for (Index j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

Index field_rank(const FMat& m) { return row_reduce(m).rank; }

FMat field_kernel_basis(const FMat& m) {
  const RowEchelon re = row_reduce(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : re.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  FMat basis = FMat::Zero(cols, cols - re.rank);
  Index k = 0;
  for (Index c = 0; c < cols; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    basis(c, k) = Fq(1);
    for (Index r = 0; r < re.rank; ++r)
      basis(re.pivot_cols[static_cast<std::size_t>(r)], k) = -re.reduced(r, c);
    ++k;
  }
  return basis;
}

std::optional<FMat> field_solve(const FMat& m, const FMat& b) {
  if (m.rows() != b.rows()) throw DomainError("field_solve: row mismatch");
  const Index cols = m.cols();
  FMat aug(m.rows(), cols + b.cols());
  aug << m, b;
  const RowEchelon re = row_reduce(std::move(aug));
  FMat x = FMat::Zero(cols, b.cols());
  for (Index r = 0; r < re.rank; ++r) {
    const Index c = re.pivot_cols[static_cast<std::size_t>(r)];
    if (c >= cols) return std::nullopt;  // pivot in the b block: inconsistent
    for (Index j = 0; j < b.cols(); ++j) x(c, j) = re.reduced(r, cols + j);
  }
  return x;
}

Subspace::Subspace(const FMat& span) : ambient_(span.rows()) {
  echelon_ = row_reduce(span.transpose());
  std::vector<bool> is_pivot(static_cast<std::size_t>(ambient_), false);
  for (Index c : echelon_.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Index c = 0; c < ambient_; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) complement_.push_back(c);
}

FVec Subspace::reduce(const FVec& v) const {
  if (v.size() != ambient_) throw DomainError("Subspace::reduce: dimension mismatch");
  FVec out = v;
  for (Index r = 0; r < echelon_.rank; ++r) {
    const Index c = echelon_.pivot_cols[static_cast<std::size_t>(r)];
    const Fq f = out(c);
    if (f.is_zero()) continue;
    for (Index j = 0; j < ambient_; ++j) {
      if (!echelon_.reduced(r, j).is_zero()) out(j) -= f * echelon_.reduced(r, j);
    }
  }
  return out;
}

bool Subspace::contains(const FVec& v) const {
  const FVec r = reduce(v);
  for (Index j = 0; j < ambient_; ++j)
    if (!r(j).is_zero()) return false;
  return true;
}

FVec Subspace::project(const FVec& v) const {
  const FVec r = reduce(v);
  FVec out(static_cast<Index>(complement_.size()));
  for (std::size_t i = 0; i < complement_.size(); ++i)
    out(static_cast<Index>(i)) = r(complement_[i]);
  return out;
}

FMat Subspace::projection_matrix() const {
  FMat p(static_cast<Index>(complement_.size()), ambient_);
  for (Index c = 0; c < ambient_; ++c) {
    FVec e = FVec::Zero(ambient_);
    e(c) = Fq(1);
    p.col(c) = project(e);
  }
  return p;
}

}  // namespace qk
