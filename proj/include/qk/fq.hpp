#pragma once
// Exact field scalar with runtime characteristic: rationals when char = 0,
// the prime field F_p when char = p. Characteristic-0 integer values coerce
// into F_p on contact (the canonical map Z -> F_p), which lets literals and
// Eigen's zero-fills mix freely with F_p entries; any other mismatch throws.

#include <gmpxx.h>

#include <Eigen/Core>
#include <ostream>
#include <string>

#include "qk/errors.hpp"

namespace qk {

class Fq {
 public:
  Fq() : p_(0) {}
  Fq(int v) : p_(0), v_(v) {}
  Fq(long v) : p_(0), v_(v) {}
  Fq(const mpz_class& v) : p_(0), v_(v) {}
  Fq(const mpq_class& v) : p_(0), v_(v) { v_.canonicalize(); }

  static Fq in_char(unsigned p, const mpz_class& v);
  static Fq rational(const mpq_class& v) { return Fq(v); }

  unsigned characteristic() const { return p_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fq operator-() const;
  Fq& operator+=(const Fq& o);
  Fq& operator-=(const Fq& o);
  Fq& operator*=(const Fq& o);
  Fq& operator/=(const Fq& o);
  friend Fq operator+(Fq a, const Fq& b) { return a += b; }
  friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
  friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
  friend Fq operator/(Fq a, const Fq& b) { return a /= b; }

  Fq inverse() const;

  friend bool operator==(const Fq& a, const Fq& b);
  friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

  // Magnitude and ordering on stored values; fields are unordered, these
  // exist so Eigen's exact zero tests and comparisons instantiate.
  friend Fq abs(const Fq& x) {
    Fq out = x;
    if (out.v_ < 0) out.v_ = -out.v_;
    return out;
  }
  friend bool operator<(const Fq& a, const Fq& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Fq& a, const Fq& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Fq& a, const Fq& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Fq& a, const Fq& b) { return a.v_ >= b.v_; }

  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Fq& x) {
    return os << x.v_;
  }

 private:
  void reduce();
  // Reconciles characteristics in place before a binary operation.
  static void align(Fq& a, Fq& b);

  unsigned p_;    // 0 = rationals
  mpq_class v_;   // integer in [0, p) when p_ > 0
};

using FMat = Eigen::Matrix<Fq, Eigen::Dynamic, Eigen::Dynamic>;
using FVec = Eigen::Matrix<Fq, Eigen::Dynamic, 1>;

// Tag for the coefficient field of an algebra / ring: char 0 means Q.
struct Field {
  unsigned characteristic = 0;
  Fq make(long v) const { return make(mpz_class(v)); }
  Fq make(const mpz_class& v) const {
    return characteristic == 0 ? Fq(v) : Fq::in_char(characteristic, v);
  }
  Fq make(const mpq_class& v) const {
    if (characteristic == 0) return Fq(v);
    // Needs an invertible denominator mod p.
    return Fq::in_char(characteristic, v.get_num()) /
           Fq::in_char(characteristic, v.get_den());
  }
  bool operator==(const Field&) const = default;
  std::string to_string() const {
    return characteristic == 0 ? "Q" : "F" + std::to_string(characteristic);
  }
};

}  // namespace qk

namespace Eigen {

template <>
struct NumTraits<qk::Fq> : GenericNumTraits<qk::Fq> {
  typedef qk::Fq Real;
  typedef qk::Fq NonInteger;
  typedef qk::Fq Nested;
  static inline Real epsilon() { return qk::Fq(); }
  static inline Real dummy_precision() { return qk::Fq(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};

}  // namespace Eigen
