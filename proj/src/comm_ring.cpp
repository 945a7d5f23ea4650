#include "qk/comm_ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "qk/errors.hpp"
#include "qk/field_linalg.hpp"

namespace qk {

Poly Poly::constant(Index nvars, const Fq& c) {
  Poly p(nvars);
  p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Poly Poly::variable(Index nvars, Index i) {
  Poly p(nvars);
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.add_term(e, Fq(1));
  return p;
}

Poly Poly::monomial(std::vector<int> exps, const Fq& c) {
  Poly p(static_cast<Index>(exps.size()));
  p.add_term(exps, c);
  return p;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int Poly::degree_in(Index var) const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, e[static_cast<std::size_t>(var)]);
  return d;
}

void Poly::add_term(const std::vector<int>& exps, const Fq& c) {
  if (static_cast<Index>(exps.size()) != nvars_)
    throw DomainError("Poly: exponent vector has wrong length");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e = e1;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

Poly Poly::scaled(const Fq& c) const {
  Poly out(nvars_);
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return out;
}

Poly Poly::derivative(Index var) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    std::vector<int> d = e;
    d[static_cast<std::size_t>(var)] = k - 1;
    out.add_term(d, c * Fq(k));
  }
  return out;
}

std::string Poly::to_string(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (!(c == Fq(1))) {
      os << c.to_string();
      printed = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << vars[i];
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
    if (!printed) os << "1";
  }
  return os.str();
}

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                const Field& field) {
  const Index n = static_cast<Index>(vars.size());
  Poly out(n);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw SchemaError("polynomial: empty text");
  bool negative = false;
  // leading sign
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  while (i <= text.size()) {
    // parse one term: factors separated by '*'
    Fq coef = field.make(1);
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    bool any_factor = false;
    for (;;) {
      skip_ws();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        coef *= field.make(mpz_class(text.substr(i, j - i)));
        i = j;
        any_factor = true;
      } else if (i < text.size() &&
                 (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        std::size_t j = i;
        while (j < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
          ++j;
        const std::string name = text.substr(i, j - i);
        i = j;
        Index var = -1;
        for (Index v = 0; v < n; ++v)
          if (vars[static_cast<std::size_t>(v)] == name) var = v;
        if (var < 0) throw SchemaError("polynomial: unknown variable '" + name + "'");
        int power = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip_ws();
          std::size_t j2 = i;
          while (j2 < text.size() && std::isdigit(static_cast<unsigned char>(text[j2]))) ++j2;
          if (j2 == i) throw SchemaError("polynomial: missing exponent");
          power = std::stoi(text.substr(i, j2 - i));
          i = j2;
        }
        exps[static_cast<std::size_t>(var)] += power;
        any_factor = true;
      } else {
        throw SchemaError("polynomial: expected a factor at position " +
                          std::to_string(i) + " in '" + text + "'");
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any_factor) throw SchemaError("polynomial: empty term");
    out.add_term(exps, negative ? -coef : coef);
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      ++i;
      continue;
    }
    throw SchemaError("polynomial: unexpected character '" +
                      std::string(1, text[i]) + "' in '" + text + "'");
  }
  return out;
}

namespace {

// Univariate helpers on dense coefficient vectors (index = degree).
std::vector<Fq> to_dense(const Poly& p) {
  std::vector<Fq> c(static_cast<std::size_t>(std::max(p.total_degree() + 1, 1)), Fq(0));
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e[0])] = v;
  while (c.size() > 1 && c.back().is_zero()) c.pop_back();
  return c;
}

bool dense_is_zero(const std::vector<Fq>& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Fq> dense_rem(std::vector<Fq> a, const std::vector<Fq>& b) {
  while (!dense_is_zero(a) && a.size() >= b.size()) {
    const Fq q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    while (a.size() > 1 && a.back().is_zero()) a.pop_back();
    if (a.size() == 1 && a[0].is_zero()) break;
  }
  return a;
}

Poly from_dense(const std::vector<Fq>& c) {
  Poly p(1);
  for (std::size_t d = 0; d < c.size(); ++d)
    if (!c[d].is_zero()) p.add_term({static_cast<int>(d)}, c[d]);
  return p;
}

Poly monic_gcd_univariate(const std::vector<Poly>& polys) {
  std::vector<Fq> g{Fq(0)};
  for (const Poly& p : polys) {
    if (p.is_zero()) continue;
    std::vector<Fq> a = to_dense(p);
    if (dense_is_zero(g)) {
      g = a;
      continue;
    }
    // Euclid
    std::vector<Fq> x = g, y = a;
    while (!dense_is_zero(y)) {
      std::vector<Fq> r = dense_rem(x, y);
      x = y;
      y = r;
    }
    g = x;
  }
  if (!dense_is_zero(g)) {
    const Fq lead = g.back();
    for (auto& c : g) c = c / lead;
  }
  return from_dense(g);
}

}  // namespace

CommRingPres::CommRingPres(Field field, std::vector<std::string> vars,
                           std::vector<Poly> relations)
    : field_(field), vars_(std::move(vars)), relations_(std::move(relations)),
      uni_gen_(1) {
  for (const Poly& f : relations_) {
    if (f.nvars() != nvars())
      throw SchemaError("ring: relation has wrong variable count");
  }
  monomial_case_ = true;
  for (const Poly& f : relations_)
    if (!f.is_monomial()) monomial_case_ = false;
  if (!monomial_case_ && nvars() != 1)
    throw SchemaError(
        "ring: only monomial or univariate relation sets are supported");
  if (nvars() == 1) uni_gen_ = monic_gcd_univariate(relations_);
}

const Poly& CommRingPres::univariate_generator() const {
  if (nvars() != 1) throw DomainError("univariate_generator: ring is multivariate");
  return uni_gen_;
}

Poly CommRingPres::normal_form(const Poly& p) const {
  if (nvars() == 1 && !relations_.empty()) {
    if (uni_gen_.is_zero()) return p;
    return from_dense(dense_rem(to_dense(p), to_dense(uni_gen_)));
  }
  // Monomial case: drop every monomial divisible by a relation monomial.
  Poly out(nvars());
  for (const auto& [e, c] : p.terms()) {
    bool killed = false;
    for (const Poly& f : relations_) {
      const auto& fe = f.terms().begin()->first;
      bool divides = true;
      for (std::size_t i = 0; i < fe.size(); ++i)
        if (e[i] < fe[i]) divides = false;
      if (divides) {
        killed = true;
        break;
      }
    }
    if (!killed) out.add_term(e, c);
  }
  return out;
}

std::optional<std::vector<std::vector<int>>> CommRingPres::quotient_basis() const {
  if (nvars() == 1) {
    if (uni_gen_.is_zero()) return std::nullopt;  // k[x]
    const int d = uni_gen_.total_degree();
    if (d == 0) return std::vector<std::vector<int>>{};  // unit ideal: zero ring
    std::vector<std::vector<int>> basis;
    for (int e = 0; e < d; ++e) basis.push_back({e});
    return basis;
  }
  // Monomial case: basis = monomials not divisible by any relation monomial.
  // Finite iff every variable has a pure power among the relations.
  std::vector<int> bound(static_cast<std::size_t>(nvars()), -1);
  for (const Poly& f : relations_) {
    const auto& fe = f.terms().begin()->first;
    int support = 0, var = -1;
    for (std::size_t i = 0; i < fe.size(); ++i)
      if (fe[i] > 0) {
        ++support;
        var = static_cast<int>(i);
      }
    if (support == 1)
      bound[static_cast<std::size_t>(var)] =
          bound[static_cast<std::size_t>(var)] < 0
              ? fe[static_cast<std::size_t>(var)]
              : std::min(bound[static_cast<std::size_t>(var)], fe[static_cast<std::size_t>(var)]);
  }
  for (int b : bound)
    if (b < 0) return std::nullopt;
  std::vector<std::vector<int>> basis;
  std::vector<int> cur(static_cast<std::size_t>(nvars()), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == cur.size()) {
      const Poly m = Poly::monomial(cur, field_.make(1));
      if (!normal_form(m).is_zero()) basis.push_back(cur);
      return;
    }
    for (int e = 0; e < bound[pos]; ++e) {
      cur[pos] = e;
      rec(pos + 1);
    }
    cur[pos] = 0;
  };
  rec(0);
  return basis;
}

CommRingPres::AsAlgebra CommRingPres::as_algebra() const {
  auto basis = quotient_basis();
  if (!basis)
    throw DomainError("as_algebra: quotient ring is not finite-dimensional");
  const Index d = static_cast<Index>(basis->size());
  std::map<std::vector<int>, Index> index;
  for (Index i = 0; i < d; ++i) index[(*basis)[static_cast<std::size_t>(i)]] = i;
  auto coords_of = [&](const Poly& p) {
    FVec v = FVec::Zero(d);
    const Poly nf = normal_form(p);
    for (const auto& [e, c] : nf.terms()) {
      auto it = index.find(e);
      if (it == index.end())
        throw DomainError("as_algebra: normal form left the basis");
      v(it->second) = c;
    }
    return v;
  };
  std::vector<FMat> mul(static_cast<std::size_t>(d), FMat::Zero(d, d));
  for (Index i = 0; i < d; ++i) {
    const Poly pi = Poly::monomial((*basis)[static_cast<std::size_t>(i)], field_.make(1));
    for (Index j = 0; j < d; ++j) {
      const Poly pj = Poly::monomial((*basis)[static_cast<std::size_t>(j)], field_.make(1));
      mul[static_cast<std::size_t>(i)].col(j) = coords_of(pi * pj);
    }
  }
  FVec unit = coords_of(Poly::constant(nvars(), field_.make(1)));
  return AsAlgebra{FinDimAlgebra(field_, std::move(mul), unit), *basis};
}

FVec CommRingPres::coordinates(const Poly& p,
                               const std::vector<std::vector<int>>& basis) const {
  std::map<std::vector<int>, Index> index;
  for (Index i = 0; i < static_cast<Index>(basis.size()); ++i)
    index[basis[static_cast<std::size_t>(i)]] = i;
  FVec v = FVec::Zero(static_cast<Index>(basis.size()));
  const Poly nf = normal_form(p);
  for (const auto& [e, c] : nf.terms()) {
    auto it = index.find(e);
    if (it == index.end()) throw DomainError("coordinates: monomial not in basis");
    v(it->second) = c;
  }
  return v;
}

KaehlerModule kaehler_differentials(const CommRingPres& r) {
  KaehlerModule out;
  out.generators = r.nvars();
  for (const Poly& f : r.relations()) {
    std::vector<Poly> row;
    bool zero_row = true;
    for (Index i = 0; i < r.nvars(); ++i) {
      Poly d = r.normal_form(f.derivative(i));
      if (!d.is_zero()) zero_row = false;
      row.push_back(std::move(d));
    }
    if (!zero_row) out.relations.push_back(std::move(row));
  }
  out.free = out.relations.empty();

  const auto basis = r.quotient_basis();
  if (basis) {
    // dim Omega = m * dim A - rank of the span of all b * df_j.
    const Index da = static_cast<Index>(basis->size());
    const Index m = r.nvars();
    std::vector<FVec> cols;
    for (const auto& row : out.relations) {
      for (const auto& bmono : *basis) {
        const Poly b = Poly::monomial(bmono, r.field().make(1));
        FVec v = FVec::Zero(m * da);
        for (Index i = 0; i < m; ++i)
          v.segment(i * da, da) = r.coordinates(b * row[static_cast<std::size_t>(i)], *basis);
        cols.push_back(std::move(v));
      }
    }
    FMat span(m * da, static_cast<Index>(cols.size()));
    for (std::size_t t = 0; t < cols.size(); ++t)
      span.col(static_cast<Index>(t)) = cols[t];
    out.k_dimension = m * da - (cols.empty() ? 0 : field_rank(span));
  }
  return out;
}

HypersurfaceCotangent hypersurface_cotangent(const CommRingPres& r) {
  if (r.nvars() != 1 || r.relations().size() != 1)
    throw DomainError("hypersurface_cotangent: need one variable and one relation");
  const Poly& f = r.relations()[0];
  if (f.total_degree() < 1)
    throw DomainError("hypersurface_cotangent: relation must have degree >= 1");
  const auto as = r.as_algebra();
  const Index da = as.algebra.dim();

  const Poly fprime = r.normal_form(f.derivative(0));
  const FVec fp = r.coordinates(fprime, as.basis);
  const FMat mult = as.algebra.left_mult(fp);

  HypersurfaceCotangent out;
  out.d1_dim = field_kernel_basis(mult).cols();
  out.d0_dim = da - field_rank(mult);
  out.annihilator = monic_gcd_univariate({f, f.derivative(0)});

  // Cross-check the cokernel against the Kaehler presentation, and the
  // annihilator against a second route: the minimal monic g with g(x) * 1
  // in the image of multiplication by f'.
  const auto kae = kaehler_differentials(r);
  out.d0_matches_kaehler = kae.k_dimension.has_value() &&
                           *kae.k_dimension == out.d0_dim;
  const Subspace image(mult);
  Poly xpow = Poly::constant(1, r.field().make(1));
  FMat accum(image.codim(), 0);
  Index steps = 0;
  for (;;) {
    const FVec proj = image.project(r.coordinates(xpow, as.basis));
    FMat wider(image.codim(), accum.cols() + 1);
    wider << accum, proj;
    if (field_rank(wider) < wider.cols()) {
      // first dependence: its degree is the annihilator degree
      if (steps != static_cast<Index>(std::max(out.annihilator.total_degree(), 0)))
        out.d0_matches_kaehler = false;
      break;
    }
    accum = std::move(wider);
    xpow = xpow * Poly::variable(1, 0);
    ++steps;
    if (steps > da + 1) throw DomainError("hypersurface_cotangent: no dependence found");
  }
  return out;
}

SquareZeroResult square_zero_extension(const FinDimAlgebra& r,
                                       const std::vector<FMat>& module_action) {
  if (!r.is_commutative())
    throw DomainError("square_zero_extension: base must be commutative");
  const Index dr = r.dim();
  if (static_cast<Index>(module_action.size()) != dr)
    throw DomainError("square_zero_extension: one action matrix per base element");
  const Index mu = module_action.empty() ? 0 : module_action[0].rows();
  for (const FMat& a : module_action)
    if (a.rows() != mu || a.cols() != mu)
      throw DomainError("square_zero_extension: action shape mismatch");

  const Index d = dr + mu;
  std::vector<FMat> mul(static_cast<std::size_t>(d), FMat::Zero(d, d));
  auto act = [&](Index i) -> const FMat& { return module_action[static_cast<std::size_t>(i)]; };
  for (Index i = 0; i < dr; ++i) {
    // (e_i, 0)(e_j, 0) = (e_i e_j, 0); (e_i, 0)(0, f_j) = (0, e_i f_j)
    for (Index j = 0; j < dr; ++j)
      mul[static_cast<std::size_t>(i)].col(j).head(dr) = r.basis_product(i, j);
    for (Index j = 0; j < mu; ++j)
      mul[static_cast<std::size_t>(i)].col(dr + j).tail(mu) = act(i).col(j);
  }
  for (Index i = 0; i < mu; ++i) {
    // (0, f_i)(e_j, 0) = (0, e_j f_i); (0,f)(0,f') = 0
    for (Index j = 0; j < dr; ++j)
      mul[static_cast<std::size_t>(dr + i)].col(j).tail(mu) = act(j).col(i);
  }
  FVec unit = FVec::Zero(d);
  unit.head(dr) = r.unit();
  FinDimAlgebra ext(r.field(), std::move(mul), unit);
  if (!ext.is_commutative())
    throw DomainError("square_zero_extension: module action is not symmetric");

  SquareZeroResult out{std::move(ext), FMat(), false, false, false};
  out.nilradical_basis = nilradical(out.extension);
  const Subspace nil(out.nilradical_basis);
  out.nil_contains_module = true;
  for (Index j = 0; j < mu; ++j) {
    FVec fj = FVec::Zero(d);
    fj(dr + j) = r.field().make(1);
    if (!nil.contains(fj)) out.nil_contains_module = false;
  }
  out.nil_equals_module = out.nil_contains_module && nil.dim() == mu;
  out.extension_reduced = nil.dim() == 0;
  return out;
}

std::vector<FMat> regular_module_action(const FinDimAlgebra& r) {
  std::vector<FMat> act;
  for (Index i = 0; i < r.dim(); ++i) act.push_back(r.left_mult_basis(i));
  return act;
}

std::vector<FMat> factor_module_action(const FinDimAlgebra& r, Index factor) {
  std::vector<FMat> act;
  for (Index i = 0; i < r.dim(); ++i) {
    FMat a(1, 1);
    // project e_i to its coefficient on the chosen idempotent factor
    a(0, 0) = i == factor ? r.field().make(1) : r.field().make(0);
    act.push_back(std::move(a));
  }
  return act;
}

}  // namespace qk
