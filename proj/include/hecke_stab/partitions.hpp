#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hecke_stab/error.hpp"

namespace hecke_stab {

// Weakly decreasing list of positive parts; the empty list is the empty
// partition, with |()| = 0 and first part 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) throw Error("not a partition", to_string());
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  int first() const { return parts_.empty() ? 0 : parts_[0]; }
  // Part i (0-based), zero beyond the length.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const {
    std::vector<int> c(first(), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
  }

  // Comma-separated parts, "" for the empty partition.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s;
  }
  static Partition parse(const std::string& s) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t comma = s.find(',', pos);
      if (comma == std::string::npos) comma = s.size();
      const std::string tok = s.substr(pos, comma - pos);
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw Error("parse", "partition '" + s + "'");
      }
      if (used != tok.size()) throw Error("parse", "partition '" + s + "'");
      parts.push_back(v);
      pos = comma + 1;
    }
    for (int p : parts)
      if (p <= 0) throw Error("parse", "partition parts must be positive");
    return Partition(std::move(parts));
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  // Larger size first; within a size, reverse lexicographic so (n) leads.
  friend bool operator<(const Partition& a, const Partition& b) {
    const int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.parts_ > b.parts_;
  }

 private:
  std::vector<int> parts_;
};

// Nonnegative parts in a fixed order.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 0) throw Error("not a composition");
  }
  Composition(const Partition& p) : parts_(p.parts()) {}  // NOLINT(google-explicit-constructor)

  const std::vector<int>& parts() const { return parts_; }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  // Consecutive blocks as half-open 0-based ranges [begin, end).
  std::vector<std::pair<int, int>> blocks() const {
    std::vector<std::pair<int, int>> b;
    int start = 0;
    for (int p : parts_) {
      b.emplace_back(start, start + p);
      start += p;
    }
    return b;
  }
  // Whether s_i (1-based) lies in the Young subgroup, i.e. i and i+1 share a block.
  bool contains_generator(int i) const {
    int start = 0;
    for (int p : parts_) {
      if (i >= start + 1 && i + 1 <= start + p) return true;
      start += p;
    }
    return false;
  }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }
  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
};

// All partitions of n, (n) first, then reverse lexicographic.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// lambda[n] = (n - |lambda|, lambda_1, lambda_2, ...).
inline Partition pad(const Partition& lambda, int n) {
  if (n < lambda.size() + lambda.first()) throw Error("pad range");
  std::vector<int> parts{n - lambda.size()};
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  return Partition(std::move(parts));
}

// Tail (mu_2, mu_3, ...), total by construction.
inline Partition unpad(const Partition& mu) {
  if (mu.empty()) return Partition();
  return Partition(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
}

// Partitions mu of |lambda| + m containing lambda with mu/lambda a horizontal
// strip (no two added boxes in one column), in partition order.
inline std::vector<Partition> pieri_add(const Partition& lambda, int m) {
  if (m < 0) throw Error("range", "negative strip size");
  std::vector<Partition> out;
  const std::size_t rows = lambda.length() + 1;
  std::vector<int> mu(rows);
  // Row i may grow up to lambda_{i-1} (row 0 unbounded).
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == rows) {
      if (remaining == 0) out.emplace_back(mu);
      return;
    }
    const int base = lambda.part(i);
    const int cap = i == 0 ? remaining : std::min(remaining, lambda.part(i - 1) - base);
    for (int add = cap; add >= 0; --add) {
      mu[i] = base + add;
      self(self, i + 1, remaining - add);
    }
  };
  rec(rec, 0, m);
  std::sort(out.begin(), out.end());
  return out;
}

// Hook length formula.
inline mpz_class syt_count(const Partition& lambda) {
  const int n = lambda.size();
  const Partition conj = lambda.conjugate();
  mpz_class num = 1, den = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j) den *= (lambda.part(i) - j - 1) + (conj.part(j) - static_cast<int>(i) - 1) + 1;
  return num / den;
}

// Filled Young diagram; rows[i][j] is the entry in row i, column j. Entries
// are 1-based letters.
struct Tableau {
  std::vector<std::vector<int>> rows;

  int size() const {
    int s = 0;
    for (const auto& r : rows) s += static_cast<int>(r.size());
    return s;
  }
  // (row, column) of a letter, 0-based; assumes each letter occurs once.
  std::pair<int, int> position(int letter) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (rows[i][j] == letter) return {static_cast<int>(i), static_cast<int>(j)};
    throw Error("letter not in tableau");
  }
  // column - row of a letter.
  int content(int letter) const {
    auto [r, c] = position(letter);
    return c - r;
  }
  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows == b.rows; }
  friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows < b.rows; }
};

inline constexpr int kDefaultTableauBound = 8;

// Standard tableaux of shape lambda. Order: the largest letter is removed
// from each removable corner, corners taken top to bottom, recursively.
inline std::vector<Tableau> syt_enumerate(const Partition& lambda, int bound = kDefaultTableauBound) {
  if (lambda.size() > bound) throw Error("size bound", "tableaux of size " + std::to_string(lambda.size()));
  if (lambda.empty()) return {Tableau{}};
  std::vector<Tableau> out;
  const int n = lambda.size();
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (lambda.part(i) <= lambda.part(i + 1)) continue;  // not a corner
    std::vector<int> smaller = lambda.parts();
    --smaller[i];
    for (Tableau t : syt_enumerate(Partition(smaller), bound)) {
      if (t.rows.size() <= i) t.rows.resize(i + 1);
      t.rows[i].push_back(n);
      out.push_back(std::move(t));
    }
  }
  return out;
}

// Row-standard tableaux of shape `shape` and type `type`: row i has shape_i
// cells, letter k occurs type_k times, rows weakly increase.
inline std::vector<Tableau> row_standard_tableaux(const Composition& shape, const Composition& type) {
  if (shape.size() != type.size()) throw Error("composition size");
  std::vector<int> remaining = type.parts();
  std::vector<Tableau> out;
  Tableau cur;
  cur.rows.resize(shape.parts().size());
  const int letters = static_cast<int>(remaining.size());
  // Fill row `r` from letter `from` on, `left` cells still empty in that row.
  auto rec = [&](auto&& self, std::size_t r, int from, int left) -> void {
    if (r == shape.parts().size()) {
      out.push_back(cur);
      return;
    }
    if (left == 0) {
      const int next = r + 1 < shape.parts().size() ? shape.parts()[r + 1] : 0;
      self(self, r + 1, 0, next);
      return;
    }
    for (int k = from; k < letters; ++k) {
      if (remaining[k] == 0) continue;
      --remaining[k];
      cur.rows[r].push_back(k + 1);
      self(self, r, k, left - 1);
      cur.rows[r].pop_back();
      ++remaining[k];
    }
  };
  rec(rec, 0, 0, shape.parts().empty() ? 0 : shape.parts()[0]);
  return out;
}

// Predicted constituents of the module induced from S^lambda (tail acting by
// the index character) in degree n: every mu in pieri_add(lambda, n - |lambda|).
inline std::map<Partition, int> stable_multiplicity_oracle(const Partition& lambda, int n) {
  if (n < lambda.size()) throw Error("range", "n below |lambda|");
  std::map<Partition, int> out;
  for (const auto& mu : pieri_add(lambda, n - lambda.size())) out[mu] = 1;
  return out;
}

inline mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace hecke_stab
