#include "qk/fq.hpp"

namespace qk {

Fq Fq::in_char(unsigned p, const mpz_class& v) {
  Fq out;
  out.p_ = p;
  out.v_ = v;
  out.reduce();
  return out;
}

void Fq::reduce() {
  if (p_ == 0) {
    v_.canonicalize();
    return;
  }
  if (v_.get_den() != 1) throw DomainError("Fq: non-integer value in F_p");
  mpz_class r = v_.get_num() % p_;
  if (r < 0) r += p_;
  v_ = r;
}

void Fq::align(Fq& a, Fq& b) {
  if (a.p_ == b.p_) return;
  if (a.p_ == 0 && a.v_.get_den() == 1) {
    a.p_ = b.p_;
    a.reduce();
    return;
  }
  if (b.p_ == 0 && b.v_.get_den() == 1) {
    b.p_ = a.p_;
    b.reduce();
    return;
  }
  throw DomainError("Fq: characteristic mismatch (" + std::to_string(a.p_) +
                    " vs " + std::to_string(b.p_) + ")");
}

Fq Fq::operator-() const {
  Fq out = *this;
  out.v_ = -out.v_;
  out.reduce();
  return out;
}

Fq& Fq::operator+=(const Fq& o) {
  Fq rhs = o;
  align(*this, rhs);
  v_ += rhs.v_;
  reduce();
  return *this;
}

Fq& Fq::operator-=(const Fq& o) {
  Fq rhs = o;
  align(*this, rhs);
  v_ -= rhs.v_;
  reduce();
  return *this;
}

Fq& Fq::operator*=(const Fq& o) {
  Fq rhs = o;
  align(*this, rhs);
  v_ *= rhs.v_;
  reduce();
  return *this;
}

Fq Fq::inverse() const {
  if (is_zero()) throw DomainError("Fq: inverse of zero");
  if (p_ == 0) {
    Fq out;
    out.v_ = 1 / v_;
    return out;
  }
  mpz_class inv;
  mpz_class p = p_;
  if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
    throw DomainError("Fq: value not invertible mod " + std::to_string(p_));
  return in_char(p_, inv);
}

Fq& Fq::operator/=(const Fq& o) {
  Fq rhs = o;
  align(*this, rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Fq& a, const Fq& b) {
  Fq x = a, y = b;
  Fq::align(x, y);
  return x.v_ == y.v_;
}

std::string Fq::to_string() const { return v_.get_str(); }

}  // namespace qk
