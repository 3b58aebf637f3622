#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke_stab/error.hpp"
#include "hecke_stab/permutation.hpp"
#include "hecke_stab/scalar.hpp"

namespace hecke_stab {

// Element of the Hecke algebra H_n written in the basis {T_w : w in S_n}.
// Coefficients are finitely supported and zero coefficients are never stored.
// H_0 and H_1 are both the ground field (basis {T_e}).
class HeckeElement {
 public:
  explicit HeckeElement(std::size_t n = 0) : n_(n) {}

  static HeckeElement basis(const Permutation& w, const Scalar& c = Scalar(1)) {
    HeckeElement x(w.rank());
    if (!c.is_zero()) x.c_.emplace(w, c);
    return x;
  }
  static HeckeElement identity(std::size_t n) { return basis(Permutation(n)); }
  static HeckeElement generator(std::size_t n, int i) { return basis(Permutation::simple(n, i)); }
  // T_{s_{w[0]}} T_{s_{w[1]}} ...
  static HeckeElement word(std::size_t n, const std::vector<int>& w) {
    HeckeElement x = identity(n);
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = x.left_mul_generator(*it);
    return x;
  }

  std::size_t rank() const { return n_; }
  const std::map<Permutation, Scalar>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Scalar coefficient(const Permutation& w) const {
    auto it = c_.find(w);
    return it == c_.end() ? Scalar() : it->second;
  }

  void add_term(const Permutation& w, const Scalar& c) {
    if (w.rank() != n_) throw Error("rank mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = c_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  friend HeckeElement operator+(const HeckeElement& x, const HeckeElement& y) {
    if (x.n_ != y.n_) throw Error("rank mismatch");
    HeckeElement r = x;
    for (const auto& [w, c] : y.c_) r.add_term(w, c);
    return r;
  }
  friend HeckeElement operator-(const HeckeElement& x, const HeckeElement& y) { return x + y.scaled(-1); }
  HeckeElement scaled(const Scalar& s) const {
    HeckeElement r(n_);
    if (s.is_zero()) return r;
    for (const auto& [w, c] : c_) r.c_.emplace(w, c * s);
    return r;
  }

  // T_{s_i} * x, using T_s T_w = T_{sw} if l(sw) > l(w), else q T_{sw} + (q-1) T_w.
  HeckeElement left_mul_generator(int i) const {
    HeckeElement r(n_);
    const Scalar q = Scalar::q();
    const Scalar q1 = q - Scalar(1);
    for (const auto& [w, c] : c_) {
      const Permutation sw = w.left_mul_simple(i);
      if (w.left_ascent(i)) {
        r.add_term(sw, c);
      } else {
        r.add_term(sw, q * c);
        r.add_term(w, q1 * c);
      }
    }
    return r;
  }

  // Bilinear product; each T_u of the left factor is applied letter by letter
  // along its reduced word.
  friend HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) {
    if (x.n_ != y.n_) throw Error("rank mismatch");
    HeckeElement r(x.n_);
    for (const auto& [u, c] : x.c_) {
      HeckeElement part = y;
      const auto word = u.reduced_word();
      for (auto it = word.rbegin(); it != word.rend(); ++it) part = part.left_mul_generator(*it);
      r = r + part.scaled(c);
    }
    return r;
  }

  friend bool operator==(const HeckeElement& x, const HeckeElement& y) { return x.n_ == y.n_ && x.c_ == y.c_; }
  friend bool operator!=(const HeckeElement& x, const HeckeElement& y) { return !(x == y); }

  // The tower map H_n -> H_{n+1}, T_w -> T_w with S_n fixing the letter n+1.
  HeckeElement tau() const {
    HeckeElement r(n_ + 1);
    for (const auto& [w, c] : c_) r.c_.emplace(w.embed(n_ + 1), c);
    return r;
  }

  // Terms ordered by (length, one-line), labelled "T_e" or "T_<reduced word>".
  std::vector<std::pair<std::string, Scalar>> labelled_terms() const {
    std::vector<std::pair<Permutation, Scalar>> v(c_.begin(), c_.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
      const int la = a.first.length(), lb = b.first.length();
      return la != lb ? la < lb : a.first < b.first;
    });
    std::vector<std::pair<std::string, Scalar>> out;
    for (const auto& [w, c] : v) out.emplace_back(basis_label(w), c);
    return out;
  }

  static std::string basis_label(const Permutation& w) {
    const auto word = w.reduced_word();
    if (word.empty()) return "T_e";
    const bool wide = w.rank() > 9;
    std::string s = "T_";
    for (std::size_t k = 0; k < word.size(); ++k) s += (wide && k ? "," : "") + std::to_string(word[k]);
    return s;
  }

 private:
  std::size_t n_;
  std::map<Permutation, Scalar> c_;
};

}  // namespace hecke_stab
