#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "hecke_stab/error.hpp"

namespace hecke_stab {

// Element of the symmetric group S_n in one-line form. Products compose as
// functions: (u * v)(i) = u(v(i)). Generators s_i (1 <= i < n) swap i and i+1,
// and S_n sits inside S_{n+1} as the stabilizer of the letter n+1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

  // 1-based one-line notation [w(1), ..., w(n)].
  static Permutation from_one_line(const std::vector<int>& one_line) {
    Permutation p;
    p.img_.resize(one_line.size());
    std::vector<bool> seen(one_line.size(), false);
    for (std::size_t i = 0; i < one_line.size(); ++i) {
      const int v = one_line[i];
      if (v < 1 || static_cast<std::size_t>(v) > one_line.size() || seen[v - 1])
        throw Error("not a permutation");
      seen[v - 1] = true;
      p.img_[i] = static_cast<std::uint8_t>(v - 1);
    }
    return p;
  }

  static Permutation simple(std::size_t n, int i) {
    if (i < 1 || static_cast<std::size_t>(i) >= n) throw Error("generator range", "s_" + std::to_string(i));
    Permutation p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
  }

  // Product s_{w[0]} s_{w[1]} ... in S_n.
  static Permutation from_word(std::size_t n, const std::vector<int>& word) {
    Permutation p(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) p = p.left_mul_simple(*it);
    return p;
  }

  std::size_t rank() const { return img_.size(); }
  int operator()(int i) const { return img_[i - 1] + 1; }
  std::vector<int> one_line() const {
    std::vector<int> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[i] = img_[i] + 1;
    return v;
  }
  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) p.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return p;
  }

  friend Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.rank() != v.rank()) throw Error("rank mismatch");
    Permutation p;
    p.img_.resize(v.img_.size());
    for (std::size_t i = 0; i < v.img_.size(); ++i) p.img_[i] = u.img_[v.img_[i]];
    return p;
  }

  // Inversion count.
  int length() const {
    int l = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
      for (std::size_t j = i + 1; j < img_.size(); ++j) l += img_[i] > img_[j];
    return l;
  }

  // Position (1-based) of the value v, i.e. w^{-1}(v).
  int position_of(int v) const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] + 1 == v) return static_cast<int>(i) + 1;
    throw Error("value range");
  }

  // l(s_i w) > l(w): the value i sits left of the value i+1.
  bool left_ascent(int i) const { return position_of(i) < position_of(i + 1); }
  // l(w s_i) > l(w).
  bool right_ascent(int i) const { return img_[i - 1] < img_[i]; }

  Permutation left_mul_simple(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) >= rank()) throw Error("generator range", "s_" + std::to_string(i));
    Permutation p(*this);
    for (auto& v : p.img_) {
      if (v == i - 1)
        v = static_cast<std::uint8_t>(i);
      else if (v == i)
        v = static_cast<std::uint8_t>(i - 1);
    }
    return p;
  }
  Permutation right_mul_simple(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) >= rank()) throw Error("generator range", "s_" + std::to_string(i));
    Permutation p(*this);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
  }

  // Lexicographically smallest reduced word, by stripping the smallest left
  // descent at each step.
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    Permutation w(*this);
    for (;;) {
      int descent = 0;
      for (int i = 1; static_cast<std::size_t>(i) < w.rank(); ++i)
        if (!w.left_ascent(i)) {
          descent = i;
          break;
        }
      if (descent == 0) break;
      word.push_back(descent);
      w = w.left_mul_simple(descent);
    }
    return word;
  }

  // Same permutation in S_n (n >= rank) fixing the new letters.
  Permutation embed(std::size_t n) const {
    if (n < rank()) throw Error("rank mismatch", "cannot embed into a smaller group");
    Permutation p(n);
    std::copy(img_.begin(), img_.end(), p.img_.begin());
    return p;
  }

  // Same letters shifted by `offset`, inside S_{rank + offset}: the new letters
  // 1..offset are fixed. Used for tail (last-letter) parabolic subgroups.
  Permutation shifted_up(std::size_t offset) const {
    Permutation p(rank() + offset);
    for (std::size_t i = 0; i < img_.size(); ++i) p.img_[i + offset] = static_cast<std::uint8_t>(img_[i] + offset);
    return p;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < img_.size(); ++i) s += (i ? "," : "") + std::to_string(img_[i] + 1);
    return s + "]";
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.img_.size() != b.img_.size()) return a.img_.size() < b.img_.size();
    return a.img_ < b.img_;
  }

  std::size_t hash() const {
    std::size_t h = img_.size();
    for (auto v : img_) h = h * 131 + v;
    return h;
  }

 private:
  std::vector<std::uint8_t> img_;
};

// All of S_n in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace hecke_stab
