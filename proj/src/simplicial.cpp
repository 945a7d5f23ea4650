#include "qk/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qk/errors.hpp"
#include "qk/int_linalg.hpp"

namespace qk {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

std::string ident(const char* kind, Index n, Index i, Index j) {
  std::ostringstream os;
  os << "simplicial identity " << kind << " fails at level " << n << " (i=" << i
     << ", j=" << j << ")";
  return os.str();
}

}  // namespace

SimplicialZModule::SimplicialZModule(std::vector<Index> levels,
                                     std::vector<std::vector<IntMat>> faces,
                                     std::vector<std::vector<IntMat>> degeneracies,
                                     std::int64_t entry_cap)
    : levels_(std::move(levels)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)) {
  require(!levels_.empty(), "SimplicialZModule: empty level list");
  const Index top = top_degree();
  require(static_cast<Index>(faces_.size()) == top,
          "SimplicialZModule: need face families for levels 1..N");
  require(static_cast<Index>(degeneracies_.size()) == top,
          "SimplicialZModule: need degeneracy families for levels 0..N-1");
  for (Index n = 1; n <= top; ++n) {
    const auto& fam = faces_[static_cast<std::size_t>(n - 1)];
    require(static_cast<Index>(fam.size()) == n + 1,
            "SimplicialZModule: level n needs n+1 faces");
    for (const IntMat& d : fam) {
      check_entry_cap(d.rows(), d.cols(), entry_cap);
      require(d.rows() == level_rank(n - 1) && d.cols() == level_rank(n),
              "SimplicialZModule: face dimension mismatch");
    }
  }
  for (Index n = 0; n < top; ++n) {
    const auto& fam = degeneracies_[static_cast<std::size_t>(n)];
    require(static_cast<Index>(fam.size()) == n + 1,
            "SimplicialZModule: level n needs n+1 degeneracies");
    for (const IntMat& s : fam) {
      check_entry_cap(s.rows(), s.cols(), entry_cap);
      require(s.rows() == level_rank(n + 1) && s.cols() == level_rank(n),
              "SimplicialZModule: degeneracy dimension mismatch");
    }
  }

  // d_i d_j = d_{j-1} d_i  (i < j), maps from level n to level n-2.
  for (Index n = 2; n <= top; ++n) {
    for (Index j = 1; j <= n; ++j) {
      for (Index i = 0; i < j; ++i) {
        const IntMat lhs = multiply_skipping_zeros(face(n - 1, i), face(n, j));
        const IntMat rhs = multiply_skipping_zeros(face(n - 1, j - 1), face(n, i));
        require(lhs == rhs, ident("d_i d_j = d_{j-1} d_i", n, i, j));
      }
    }
  }
  // s_i s_j = s_{j+1} s_i  (i <= j), maps from level n to level n+2.
  for (Index n = 0; n + 2 <= top; ++n) {
    for (Index j = 0; j <= n; ++j) {
      for (Index i = 0; i <= j; ++i) {
        const IntMat lhs =
            multiply_skipping_zeros(degeneracy(n + 1, i), degeneracy(n, j));
        const IntMat rhs =
            multiply_skipping_zeros(degeneracy(n + 1, j + 1), degeneracy(n, i));
        require(lhs == rhs, ident("s_i s_j = s_{j+1} s_i", n, i, j));
      }
    }
  }
  // d_i s_j relations, maps from level n to level n.
  for (Index n = 0; n < top; ++n) {
    for (Index j = 0; j <= n; ++j) {
      for (Index i = 0; i <= n + 1; ++i) {
        const IntMat comp = multiply_skipping_zeros(face(n + 1, i), degeneracy(n, j));
        if (i == j || i == j + 1) {
          require(comp == IntMat::Identity(level_rank(n), level_rank(n)),
                  ident("d_i s_j = id", n, i, j));
        } else if (i < j) {
          const IntMat rhs =
              n == 0 ? IntMat::Zero(0, 0)
                     : multiply_skipping_zeros(degeneracy(n - 1, j - 1), face(n, i));
          require(n > 0 && comp == rhs, ident("d_i s_j = s_{j-1} d_i", n, i, j));
        } else {
          const IntMat rhs =
              n == 0 ? IntMat::Zero(0, 0)
                     : multiply_skipping_zeros(degeneracy(n - 1, j), face(n, i - 1));
          require(n > 0 && comp == rhs, ident("d_i s_j = s_j d_{i-1}", n, i, j));
        }
      }
    }
  }
}

const IntMat& SimplicialZModule::face(Index n, Index i) const {
  return faces_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)];
}

const IntMat& SimplicialZModule::degeneracy(Index n, Index i) const {
  return degeneracies_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

SimplicialZModule SimplicialZModule::constant(Index rank, Index top_degree) {
  std::vector<Index> levels(static_cast<std::size_t>(top_degree) + 1, rank);
  std::vector<std::vector<IntMat>> faces, degs;
  for (Index n = 1; n <= top_degree; ++n)
    faces.emplace_back(static_cast<std::size_t>(n + 1),
                       IntMat::Identity(rank, rank));
  for (Index n = 0; n < top_degree; ++n)
    degs.emplace_back(static_cast<std::size_t>(n + 1),
                      IntMat::Identity(rank, rank));
  return SimplicialZModule(std::move(levels), std::move(faces), std::move(degs));
}

SimplicialZModule SimplicialZModule::direct_sum(const SimplicialZModule& o) const {
  require(top_degree() == o.top_degree(),
          "direct_sum: truncation degrees differ");
  auto block = [](const IntMat& a, const IntMat& b) {
    IntMat m = IntMat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    m.topLeftCorner(a.rows(), a.cols()) = a;
    m.bottomRightCorner(b.rows(), b.cols()) = b;
    return m;
  };
  std::vector<Index> levels;
  for (Index n = 0; n <= top_degree(); ++n)
    levels.push_back(level_rank(n) + o.level_rank(n));
  std::vector<std::vector<IntMat>> faces, degs;
  for (Index n = 1; n <= top_degree(); ++n) {
    std::vector<IntMat> fam;
    for (Index i = 0; i <= n; ++i) fam.push_back(block(face(n, i), o.face(n, i)));
    faces.push_back(std::move(fam));
  }
  for (Index n = 0; n < top_degree(); ++n) {
    std::vector<IntMat> fam;
    for (Index i = 0; i <= n; ++i)
      fam.push_back(block(degeneracy(n, i), o.degeneracy(n, i)));
    degs.push_back(std::move(fam));
  }
  return SimplicialZModule(std::move(levels), std::move(faces), std::move(degs));
}

SimplicialZModule SimplicialZModule::truncate(Index new_top) const {
  require(new_top >= 0 && new_top <= top_degree(), "truncate: bad degree");
  std::vector<Index> levels(levels_.begin(),
                            levels_.begin() + new_top + 1);
  std::vector<std::vector<IntMat>> faces(faces_.begin(), faces_.begin() + new_top);
  std::vector<std::vector<IntMat>> degs(degeneracies_.begin(),
                                        degeneracies_.begin() + new_top);
  return SimplicialZModule(std::move(levels), std::move(faces), std::move(degs));
}

ChainComplexZ moore_complex(const SimplicialZModule& s) {
  const Index top = s.top_degree();
  // Basis of the intersection of ker d_i (i >= 1) per level.
  std::vector<IntMat> bases;
  bases.push_back(IntMat::Identity(s.level_rank(0), s.level_rank(0)));
  for (Index n = 1; n <= top; ++n) {
    IntMat stacked(n * s.level_rank(n - 1), s.level_rank(n));
    for (Index i = 1; i <= n; ++i)
      stacked.middleRows((i - 1) * s.level_rank(n - 1), s.level_rank(n - 1)) =
          s.face(n, i);
    bases.push_back(int_kernel_basis(stacked));
  }
  std::vector<Index> ranks;
  for (const IntMat& b : bases) ranks.push_back(b.cols());
  std::vector<IntMat> boundaries;
  for (Index n = 1; n <= top; ++n) {
    const IntMat image = multiply_skipping_zeros(
        s.face(n, 0), bases[static_cast<std::size_t>(n)]);
    auto sol = int_solve(bases[static_cast<std::size_t>(n - 1)], image);
    if (!sol)
      throw DomainError("moore_complex: d_0 does not restrict to the kernel basis");
    boundaries.push_back(std::move(*sol));
  }
  return ChainComplexZ(std::move(ranks), std::move(boundaries));
}

ChainComplexZ alternating_sum_complex(const SimplicialZModule& s) {
  const Index top = s.top_degree();
  std::vector<Index> ranks;
  for (Index n = 0; n <= top; ++n) ranks.push_back(s.level_rank(n));
  std::vector<IntMat> boundaries;
  for (Index n = 1; n <= top; ++n) {
    IntMat b = IntMat::Zero(s.level_rank(n - 1), s.level_rank(n));
    for (Index i = 0; i <= n; ++i) {
      if (i % 2 == 0)
        b += s.face(n, i);
      else
        b -= s.face(n, i);
    }
    boundaries.push_back(std::move(b));
  }
  return ChainComplexZ(std::move(ranks), std::move(boundaries));
}

FGAbelianGroup simplicial_pi(const SimplicialZModule& s, Index n) {
  if (n < 0 || n > s.top_degree() - 1)
    throw DomainError(
        "simplicial_pi: degree exceeds the trustworthy range of the truncation");
  return chain_homology(moore_complex(s), n);
}

namespace {

// Monotone surjections [n] ->> [k], listed for k = 0..n, lexicographically
// within each k. Each map is its value vector of length n+1.
std::vector<std::vector<int>> surjections_from(int n) {
  std::vector<std::vector<int>> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> cur(static_cast<std::size_t>(n) + 1, 0);
    // Monotone surjections onto [k] correspond to the positions where the
    // value increments; enumerate by recursion on positions.
    std::vector<int> incr;  // increasing positions, size k, values in 1..n
    std::function<void(int, int)> rec = [&](int pos, int got) {
      if (got == k) {
        int v = 0;
        std::size_t idx = 0;
        for (int i = 0; i <= n; ++i) {
          if (idx < incr.size() && incr[idx] == i) {
            ++v;
            ++idx;
          }
          cur[static_cast<std::size_t>(i)] = v;
        }
        out.push_back(cur);
        return;
      }
      for (int i = pos; i <= n; ++i) {
        incr.push_back(i);
        rec(i + 1, got + 1);
        incr.pop_back();
      }
    };
    rec(1, 0);
  }
  return out;
}

std::vector<int> compose(const std::vector<int>& outer,
                         const std::vector<int>& inner) {
  std::vector<int> r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i)
    r[i] = outer[static_cast<std::size_t>(inner[i])];
  return r;
}

// Coface delta^i : [n-1] -> [n] (monotone injection missing i).
std::vector<int> coface(int n, int i) {
  std::vector<int> r;
  for (int v = 0; v <= n; ++v)
    if (v != i) r.push_back(v);
  return r;
}

// Codegeneracy sigma^i : [n+1] -> [n] (monotone surjection repeating i).
std::vector<int> codegeneracy(int n, int i) {
  std::vector<int> r;
  for (int v = 0; v <= n + 1; ++v) r.push_back(v <= i ? v : v - 1);
  return r;
}

struct EpiMono {
  std::vector<int> epi;   // [m] ->> [r]
  std::vector<int> mono;  // image values, [r] -> [k]
};

EpiMono epi_mono(const std::vector<int>& f) {
  EpiMono out;
  for (int v : f) {
    if (out.mono.empty() || out.mono.back() != v) out.mono.push_back(v);
    out.epi.push_back(static_cast<int>(out.mono.size()) - 1);
  }
  return out;
}

}  // namespace

SimplicialZModule dold_kan(const ChainComplexZ& c, Index top_degree) {
  const Index cd = c.top_degree();
  // Per level: the summand index list and offsets.
  struct Level {
    std::vector<std::vector<int>> surj;  // summand labels
    std::vector<Index> offset;           // column offset of each summand
    Index rank = 0;
  };
  std::vector<Level> levels;
  for (Index n = 0; n <= top_degree; ++n) {
    Level lv;
    for (auto& eta : surjections_from(static_cast<int>(n))) {
      const int k = eta.back();
      const Index rk = k <= cd ? c.rank(k) : 0;
      lv.surj.push_back(eta);
      lv.offset.push_back(lv.rank);
      lv.rank += rk;
    }
    levels.push_back(std::move(lv));
  }
  auto summand_rank = [&](const std::vector<int>& eta) {
    const int k = eta.back();
    return k <= cd ? c.rank(k) : 0;
  };
  auto find_summand = [&](Index level, const std::vector<int>& eta) {
    const auto& lv = levels[static_cast<std::size_t>(level)];
    for (std::size_t t = 0; t < lv.surj.size(); ++t)
      if (lv.surj[t] == eta) return lv.offset[t];
    throw DomainError("dold_kan: summand lookup failed");
  };

  // Matrix of Gamma(alpha) : level n -> level m for a monotone alpha:[m]->[n].
  auto operator_matrix = [&](Index m, Index n, const std::vector<int>& alpha) {
    const auto& src = levels[static_cast<std::size_t>(n)];
    IntMat out = IntMat::Zero(levels[static_cast<std::size_t>(m)].rank, src.rank);
    for (std::size_t t = 0; t < src.surj.size(); ++t) {
      const auto& eta = src.surj[t];
      const Index rk = summand_rank(eta);
      if (rk == 0) continue;
      const int k = eta.back();
      const EpiMono em = epi_mono(compose(eta, alpha));
      // Component is id when the mono part is the identity, the differential
      // when it is the top coface [k-1] -> [k], and zero otherwise.
      const bool mono_is_id = static_cast<int>(em.mono.size()) - 1 == k;
      bool mono_is_top_coface = false;
      if (!mono_is_id && static_cast<int>(em.mono.size()) == k) {
        mono_is_top_coface = true;
        for (std::size_t v = 0; v < em.mono.size(); ++v)
          if (em.mono[v] != static_cast<int>(v)) mono_is_top_coface = false;
      }
      if (mono_is_id) {
        const Index dst = find_summand(m, em.epi);
        out.block(dst, src.offset[t], rk, rk) = IntMat::Identity(rk, rk);
      } else if (mono_is_top_coface) {
        const Index dst = find_summand(m, em.epi);
        if (k - 1 >= 0 && c.rank(k - 1) > 0)
          out.block(dst, src.offset[t], c.rank(k - 1), rk) = c.boundary(k);
      }
    }
    return out;
  };

  std::vector<Index> ranks;
  for (auto& lv : levels) ranks.push_back(lv.rank);
  std::vector<std::vector<IntMat>> faces, degs;
  for (Index n = 1; n <= top_degree; ++n) {
    std::vector<IntMat> fam;
    for (Index i = 0; i <= n; ++i)
      fam.push_back(operator_matrix(
          n - 1, n, coface(static_cast<int>(n), static_cast<int>(i))));
    faces.push_back(std::move(fam));
  }
  for (Index n = 0; n < top_degree; ++n) {
    std::vector<IntMat> fam;
    for (Index i = 0; i <= n; ++i)
      fam.push_back(operator_matrix(
          n + 1, n, codegeneracy(static_cast<int>(n), static_cast<int>(i))));
    degs.push_back(std::move(fam));
  }
  return SimplicialZModule(std::move(ranks), std::move(faces), std::move(degs));
}

}  // namespace qk
