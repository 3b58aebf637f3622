#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hecke_stab/error.hpp"

namespace hecke_stab {

// Univariate polynomial in q with rational coefficients, stored densely from
// the constant term upwards. The coefficient vector never has a trailing zero,
// so the zero polynomial is the empty vector.
class Poly {
 public:
  Poly() = default;
  Poly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) c_.emplace_back(c);
  }
  Poly(const mpq_class& c) {  // NOLINT(google-explicit-constructor)
    if (sgn(c) != 0) c_.push_back(c);
  }
  explicit Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const mpq_class& c, std::size_t k) {
    Poly p;
    if (sgn(c) == 0) return p;
    p.c_.resize(k + 1);
    p.c_[k] = c;
    return p;
  }
  static Poly q() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t terms() const {
    std::size_t t = 0;
    for (const auto& x : c_) t += sgn(x) != 0;
    return t;
  }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const mpq_class& lead() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpq_class(0); }

  Poly operator-() const {
    Poly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    if (b.c_.size() == 1) return a.scaled(b.c_[0]);
    if (a.c_.size() == 1) return b.scaled(a.c_[0]);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (sgn(b.c_[j]) == 0) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const mpq_class& s) const {
    Poly r;
    if (sgn(s) == 0) return r;
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(x * s);
    return r;
  }

  // Multiply by q^k.
  Poly shifted(std::size_t k) const {
    Poly r;
    if (is_zero()) return r;
    r.c_.assign(k, mpq_class(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  static void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    if (b.is_zero()) throw Error("zero divisor");
    rem = a;
    quo = Poly();
    if (a.degree() < b.degree()) return;
    quo.c_.assign(a.c_.size() - b.c_.size() + 1, mpq_class(0));
    const mpq_class inv_lead = 1 / b.lead();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      const std::size_t shift = rem.degree() - b.degree();
      mpq_class f = rem.lead() * inv_lead;
      for (std::size_t i = 0; i < b.c_.size(); ++i) rem.c_[i + shift] -= f * b.c_[i];
      quo.c_[shift] = std::move(f);
      rem.trim();
    }
    quo.trim();
  }

  // Quotient a / b, which must be exact.
  Poly exact_div(const Poly& b) const {
    if (b.c_.size() == 1) return scaled(1 / b.c_[0]);
    Poly quo, rem;
    divmod(*this, b, quo, rem);
    if (!rem.is_zero()) throw Error("inexact division");
    return quo;
  }

  Poly monic() const {
    if (is_zero() || lead() == 1) return *this;
    return scaled(1 / lead());
  }

  // Monic greatest common divisor; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(1);
    Poly quo, rem;
    while (!b.is_zero()) {
      divmod(a, b, quo, rem);
      a = std::move(b);
      b = rem.monic();
    }
    return a.monic();
  }

  mpq_class eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Human-readable form, e.g. "q^2-3/2*q+1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const mpq_class& c = c_[i];
      if (sgn(c) == 0) continue;
      const bool neg = sgn(c) < 0;
      const mpq_class mag = abs(c);
      if (!out.empty() || neg) out += neg ? "-" : "+";
      if (i == 0) {
        out += mag.get_str();
        continue;
      }
      if (mag != 1) out += mag.get_str() + "*";
      out += "q";
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

  // Sparse term list "[c*q^k,...]" from the highest degree down; "[]" for 0.
  std::string serialize() const {
    std::string out = "[";
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (sgn(c_[i]) == 0) continue;
      if (!first) out += ",";
      first = false;
      out += c_[i].get_str() + "*q^" + std::to_string(i);
    }
    return out + "]";
  }

  static Poly parse(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw Error("parse", "polynomial '" + s + "'");
    Poly p;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      const std::string term = body.substr(pos, comma - pos);
      const std::size_t star = term.find("*q^");
      if (star == std::string::npos) throw Error("parse", "term '" + term + "'");
      mpq_class c;
      if (c.set_str(term.substr(0, star), 10) != 0) throw Error("parse", "coefficient '" + term + "'");
      c.canonicalize();
      std::size_t k = 0;
      try {
        k = std::stoul(term.substr(star + 3));
      } catch (const std::exception&) {
        throw Error("parse", "exponent '" + term + "'");
      }
      p += monomial(c, k);
      pos = comma + 1;
    }
    return p;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  std::vector<mpq_class> c_;
};

}  // namespace hecke_stab
