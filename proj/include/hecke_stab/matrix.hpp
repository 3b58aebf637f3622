#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hecke_stab/error.hpp"
#include "hecke_stab/scalar.hpp"

namespace hecke_stab {

using Index = std::uint32_t;

// Sparse vector: entries sorted by index, no stored zeros.
using SVec = std::vector<std::pair<Index, Scalar>>;

inline SVec unit_vector(Index i) { return SVec{{i, Scalar(1)}}; }

inline SVec scaled(const SVec& v, const Scalar& s) {
  SVec r;
  if (s.is_zero()) return r;
  r.reserve(v.size());
  for (const auto& [i, x] : v) r.emplace_back(i, x * s);
  return r;
}

// a*x + b*y
inline SVec combine(const Scalar& a, const SVec& x, const Scalar& b, const SVec& y) {
  SVec r;
  r.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      Scalar v = a * x[i].second;
      if (!v.is_zero()) r.emplace_back(x[i].first, std::move(v));
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      Scalar v = b * y[j].second;
      if (!v.is_zero()) r.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = a * x[i].second + b * y[j].second;
      if (!v.is_zero()) r.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

inline SVec operator+(const SVec& x, const SVec& y) { return combine(1, x, 1, y); }
inline SVec operator-(const SVec& x, const SVec& y) { return combine(1, x, -1, y); }

inline Scalar entry(const SVec& v, Index i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, Index k) { return e.first < k; });
  return it != v.end() && it->first == i ? it->second : Scalar();
}

// Sum of a list of (coefficient, index) contributions, in any order.
inline SVec accumulate(std::vector<std::pair<Index, Scalar>> terms) {
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SVec r;
  for (auto& [i, x] : terms) {
    if (!r.empty() && r.back().first == i) {
      r.back().second += x;
      if (r.back().second.is_zero()) r.pop_back();
    } else if (!x.is_zero()) {
      r.emplace_back(i, std::move(x));
    }
  }
  return r;
}

// Sparse matrix over Q(q), stored by columns; column j is the image of the
// j-th basis vector, which is how every action matrix in the library is built.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.data_[j] = unit_vector(static_cast<Index>(j));
    return m;
  }
  static ExactMatrix scalar_identity(std::size_t n, const Scalar& s) {
    ExactMatrix m(n, n);
    if (s.is_zero()) return m;
    for (std::size_t j = 0; j < n; ++j) m.data_[j] = SVec{{static_cast<Index>(j), s}};
    return m;
  }
  // Row-major dense input.
  static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error("shape", "ragged rows");
      for (std::size_t j = 0; j < c; ++j)
        if (!rows[i][j].is_zero()) m.data_[j].emplace_back(static_cast<Index>(i), rows[i][j]);
    }
    return m;
  }
  static ExactMatrix from_columns(std::size_t rows, std::vector<SVec> cols) {
    ExactMatrix m(rows, cols.size());
    for (const auto& c : cols)
      if (!c.empty() && c.back().first >= rows) throw Error("shape", "column entry out of range");
    m.data_ = std::move(cols);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SVec& column(std::size_t j) const { return data_[j]; }
  const std::vector<SVec>& columns() const { return data_; }
  void set_column(std::size_t j, SVec v) { data_[j] = std::move(v); }

  Scalar at(std::size_t i, std::size_t j) const { return entry(data_[j], static_cast<Index>(i)); }
  void set(std::size_t i, std::size_t j, const Scalar& x) {
    SVec& c = data_[j];
    auto it = std::lower_bound(c.begin(), c.end(), static_cast<Index>(i),
                               [](const auto& e, Index k) { return e.first < k; });
    if (it != c.end() && it->first == i) {
      if (x.is_zero())
        c.erase(it);
      else
        it->second = x;
    } else if (!x.is_zero()) {
      c.insert(it, {static_cast<Index>(i), x});
    }
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : data_) n += c.size();
    return n;
  }
  bool is_zero() const { return nnz() == 0; }

  SVec apply(const SVec& v) const {
    std::vector<std::pair<Index, Scalar>> terms;
    for (const auto& [j, x] : v) {
      if (j >= cols_) throw Error("shape", "vector index out of range");
      for (const auto& [i, a] : data_[j]) terms.emplace_back(i, a * x);
    }
    return accumulate(std::move(terms));
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("shape", "product dimension mismatch");
    ExactMatrix r(a.rows_, b.cols_);
    for (std::size_t j = 0; j < b.cols_; ++j) r.data_[j] = a.apply(b.data_[j]);
    return r;
  }
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    a.require_same_shape(b);
    ExactMatrix r(a.rows_, a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j) r.data_[j] = a.data_[j] + b.data_[j];
    return r;
  }
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    a.require_same_shape(b);
    ExactMatrix r(a.rows_, a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j) r.data_[j] = a.data_[j] - b.data_[j];
    return r;
  }
  ExactMatrix scaled_by(const Scalar& s) const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.data_[j] = scaled(data_[j], s);
    return r;
  }
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  ExactMatrix transpose() const {
    std::vector<SVec> rows(rows_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, x] : data_[j]) rows[i].emplace_back(static_cast<Index>(j), x);
    return from_columns(cols_, std::move(rows));
  }

  Scalar trace() const {
    if (rows_ != cols_) throw Error("shape", "trace of non-square matrix");
    Scalar t;
    for (std::size_t j = 0; j < cols_; ++j) t += at(j, j);
    return t;
  }

  // Coordinate-wise evaluation at q = q0 (dense, row-major).
  std::vector<std::vector<mpq_class>> specialize(const mpq_class& q0) const {
    std::vector<std::vector<mpq_class>> out(rows_, std::vector<mpq_class>(cols_, 0));
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, x] : data_[j]) out[i][j] = x.specialize(q0);
    return out;
  }

  static ExactMatrix block_diagonal(const std::vector<const ExactMatrix*>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto* b : blocks) {
      r += b->rows_;
      c += b->cols_;
    }
    ExactMatrix m(r, c);
    std::size_t ro = 0, co = 0;
    for (const auto* b : blocks) {
      for (std::size_t j = 0; j < b->cols_; ++j)
        for (const auto& [i, x] : b->data_[j]) m.data_[co + j].emplace_back(static_cast<Index>(ro + i), x);
      ro += b->rows_;
      co += b->cols_;
    }
    return m;
  }

  // Kronecker product; basis index of (i, k) is i * b.rows + k.
  friend ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t ja = 0; ja < a.cols_; ++ja)
      for (std::size_t jb = 0; jb < b.cols_; ++jb) {
        SVec& col = m.data_[ja * b.cols_ + jb];
        for (const auto& [ia, x] : a.data_[ja])
          for (const auto& [ib, y] : b.data_[jb])
            col.emplace_back(static_cast<Index>(ia * b.rows_ + ib), x * y);
      }
    return m;
  }

 private:
  void require_same_shape(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("shape", "matrix sum dimension mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SVec> data_;
};

}  // namespace hecke_stab
