#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "hecke_stab/error.hpp"
#include "hecke_stab/poly.hpp"

namespace hecke_stab {

// An element of the rational function field Q(q), kept as num/den with
// gcd(num, den) = 1 and den monic. Zero is 0/1, so equality is structural.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static Scalar q() { return Scalar(Poly::q()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_rational() const { return den_.is_one() && num_.is_constant(); }
  mpq_class as_rational() const {
    if (!is_rational()) throw Error("not rational", to_string());
    return num_.coeff(0);
  }

  Scalar operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.den_.is_one()) return Scalar(a.num_ + b.num_);
      return Scalar(a.num_ + b.num_, a.den_);
    }
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ * b.num_);
    // Cross-cancel before multiplying; the result is then already reduced.
    const Poly g1 = Poly::gcd(a.num_, b.den_);
    const Poly g2 = Poly::gcd(b.num_, a.den_);
    Scalar r;
    r.num_ = a.num_.exact_div(g1) * b.num_.exact_div(g2);
    r.den_ = a.den_.exact_div(g2) * b.den_.exact_div(g1);
    r.make_den_monic();
    return r;
  }

  Scalar inverse() const {
    if (is_zero()) throw Error("zero divisor");
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    r.make_den_monic();
    return r;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Integer power; negative exponents invert.
  Scalar pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1), base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  // Exact evaluation at q = q0.
  mpq_class specialize(const mpq_class& q0) const {
    const mpq_class d = den_.eval(q0);
    if (sgn(d) == 0) throw Error("pole", "at q=" + q0.get_str());
    return num_.eval(q0) / d;
  }

  // "q-1", "(q^2+1)/(q+1)", ...
  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    auto wrap = [](const Poly& p) {
      const std::string s = p.to_string();
      return p.terms() > 1 || s.find('*') != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
  }

  // Lossless "num/den" with both polynomials as sparse term lists.
  std::string serialize() const { return num_.serialize() + "/" + den_.serialize(); }

  static Scalar parse(const std::string& s) {
    const std::size_t split = s.find("]/[");
    if (split == std::string::npos) throw Error("parse", "scalar '" + s + "'");
    Poly num = Poly::parse(s.substr(0, split + 1));
    Poly den = Poly::parse(s.substr(split + 2));
    if (den.is_zero()) throw Error("zero divisor", s);
    return Scalar(std::move(num), std::move(den));
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw Error("zero divisor");
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (!den_.is_constant()) {
      const Poly g = Poly::gcd(num_, den_);
      if (!g.is_one()) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
      }
    }
    make_den_monic();
  }

  void make_den_monic() {
    if (den_.lead() != 1) {
      const mpq_class inv = 1 / den_.lead();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly num_;
  Poly den_;
};

}  // namespace hecke_stab
