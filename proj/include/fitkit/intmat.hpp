#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fitkit/bigint.hpp"

namespace fitkit {

// Dense row-major matrix over Int. Rows are lattice vectors; the library
// follows the row-vector convention throughout (vectors multiply matrices
// from the left).
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMat identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const {
    return std::vector<Int>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  void set_row(std::size_t i, const std::vector<Int>& v) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
  }

  void append_row(const std::vector<Int>& v) {
    if (v.size() != cols_) throw std::invalid_argument("append_row: size mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const IntMat& o) const { return !(*this == o); }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

namespace detail {

inline bool vec_is_zero(const std::vector<Int>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace detail

// Incremental Hermite normal form of a lattice given by spanning rows.
// Maintains an echelon basis (strictly increasing pivot columns, positive
// pivots); finish() reduces entries above each pivot into [0, pivot) and
// returns the canonical HNF, which is unique per lattice regardless of the
// insertion order.
class HnfBuilder {
 public:
  explicit HnfBuilder(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  bool contains(const std::vector<Int>& v) const {
    std::vector<Int> r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if (r[p] == 0) continue;
      if (r[p] % rows_[i][p] != 0) return false;
      Int q = r[p] / rows_[i][p];
      axpy(r, -q, rows_[i]);
    }
    return detail::vec_is_zero(r);
  }

  // Adds a vector to the lattice, updating the echelon basis.
  void add(std::vector<Int> v) {
    if (v.size() != cols_) throw std::invalid_argument("HnfBuilder::add: size mismatch");
    std::size_t i = 0;
    while (!detail::vec_is_zero(v)) {
      std::size_t lead = leading_index(v);
      // skip past basis rows with smaller pivot columns
      while (i < rows_.size() && pivots_[i] < lead) ++i;
      if (i == rows_.size() || pivots_[i] > lead) {
        // new pivot column
        if (v[lead] < 0) negate(v);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(i), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(i), lead);
        return;
      }
      // same pivot column: combine
      Int& piv = rows_[i][lead];
      if (v[lead] % piv == 0) {
        Int q = v[lead] / piv;
        axpy(v, -q, rows_[i]);
      } else {
        Int x, y;
        Int g = xgcd(piv, v[lead], x, y);
        std::vector<Int> combined(cols_);
        for (std::size_t j = 0; j < cols_; ++j)
          combined[j] = x * rows_[i][j] + y * v[j];
        Int a = piv / g, b = v[lead] / g;
        std::vector<Int> rest(cols_);
        for (std::size_t j = 0; j < cols_; ++j)
          rest[j] = a * v[j] - b * rows_[i][j];
        rows_[i] = std::move(combined);
        v = std::move(rest);
      }
    }
  }

  void add_matrix_rows(const IntMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) add(m.row(i));
  }

  // Canonical HNF: entries above each pivot reduced into [0, pivot).
  IntMat finish() const {
    std::vector<std::vector<Int>> b = rows_;
    for (std::size_t i = b.size(); i-- > 0;) {
      const std::size_t p = pivots_[i];
      for (std::size_t k = 0; k < i; ++k) {
        Int q = b[k][p] / b[i][p];
        if (b[k][p] - q * b[i][p] < 0) q -= 1;
        if (q != 0)
          for (std::size_t j = 0; j < cols_; ++j) b[k][j] -= q * b[i][j];
      }
    }
    IntMat out(b.size(), cols_);
    for (std::size_t i = 0; i < b.size(); ++i) out.set_row(i, b[i]);
    return out;
  }

 private:
  static void axpy(std::vector<Int>& v, const Int& c, const std::vector<Int>& w) {
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * w[j];
  }
  static void negate(std::vector<Int>& v) {
    for (auto& x : v) x = -x;
  }
  static std::size_t leading_index(const std::vector<Int>& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) return j;
    throw std::logic_error("leading_index of zero vector");
  }

  std::size_t cols_;
  std::vector<std::vector<Int>> rows_;
  std::vector<std::size_t> pivots_;
};

inline IntMat hnf(const IntMat& m) {
  HnfBuilder b(m.cols());
  b.add_matrix_rows(m);
  return b.finish();
}

// Basis of {x in Z^m : x * A = 0} for an m x n matrix A, in canonical HNF.
// Row-reduces [A | I] with column priority on the A block; rows whose A part
// vanished carry a kernel basis in the tail.
inline IntMat kernel(const IntMat& a) {
  const std::size_t m = a.rows(), n = a.cols();
  HnfBuilder b(n + m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Int> v(n + m);
    for (std::size_t j = 0; j < n; ++j) v[j] = a.at(i, j);
    v[n + i] = 1;
    b.add(std::move(v));
  }
  IntMat h = b.finish();
  HnfBuilder ker(m);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool head_zero = true;
    for (std::size_t j = 0; j < n; ++j)
      if (h.at(i, j) != 0) { head_zero = false; break; }
    if (!head_zero) continue;
    std::vector<Int> tail(m);
    for (std::size_t j = 0; j < m; ++j) tail[j] = h.at(i, n + j);
    ker.add(std::move(tail));
  }
  return ker.finish();
}

inline std::size_t rank(const IntMat& m) {
  HnfBuilder b(m.cols());
  b.add_matrix_rows(m);
  return b.rank();
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { swap_row = i; break; }
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

struct SnfResult {
  std::vector<Int> divisors;  // d_1 | d_2 | ... (nonnegative)
  IntMat vinv;                // inverse of the accumulated column transform
};

// Smith normal form U*A*V = diag(divisors). Only V^{-1} is tracked:
// structure computations need coordinates in the transformed column basis,
// never U.
inline SnfResult snf(const IntMat& a_in) {
  IntMat a = a_in;
  const std::size_t m = a.rows(), n = a.cols();
  IntMat vinv = IntMat::identity(n);

  auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < n; ++j) a.at(dst, j) += c * a.at(src, j);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& c) {
    // A <- A * E with E = I + c * e_src e_dst^T; vinv <- E^{-1} * vinv.
    for (std::size_t i = 0; i < m; ++i) a.at(i, dst) += c * a.at(i, src);
    for (std::size_t j = 0; j < n; ++j) vinv.at(src, j) -= c * vinv.at(dst, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a.at(i, c), a.at(j, c));
  };
  auto col_negate = [&](std::size_t j) {
    for (std::size_t r = 0; r < m; ++r) a.at(r, j) = -a.at(r, j);
    for (std::size_t c = 0; c < n; ++c) vinv.at(j, c) = -vinv.at(j, c);
  };

  // Clears row t and column t outside the pivot (t,t), assuming some nonzero
  // entry exists in the trailing block. Terminates: each corrective swap
  // strictly decreases |a(t,t)|.
  auto clean_pivot = [&](std::size_t t) {
    for (;;) {
      // move a nonzero entry of minimal absolute value to (t,t)
      std::size_t pi = m, pj = n;
      Int best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a.at(i, j) != 0 && (best == 0 || abs_int(a.at(i, j)) < best)) {
            best = abs_int(a.at(i, j));
            pi = i; pj = j;
          }
      if (pi == m) return false;  // trailing block all zero
      if (pi != t) row_swap(pi, t);
      if (pj != t) col_swap(pj, t);
      if (a.at(t, t) < 0) col_negate(t);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m && !dirty; ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = a.at(i, t) / a.at(t, t);
        row_axpy(i, t, -q);
        if (a.at(i, t) != 0) dirty = true;  // remainder is strictly smaller
      }
      if (dirty) continue;
      for (std::size_t j = t + 1; j < n && !dirty; ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = a.at(t, j) / a.at(t, t);
        col_axpy(j, t, -q);
        if (a.at(t, j) != 0) dirty = true;
      }
      if (!dirty) return true;
    }
  };

  const std::size_t t_max = std::min(m, n);
  std::size_t diag = 0;
  while (diag < t_max && clean_pivot(diag)) ++diag;

  // Enforce the divisibility chain d_t | d_{t+1} (zeros are trailing).
  // Each fix touches only rows/columns t and t+1.
  auto fix_pair = [&](std::size_t t) {
    col_axpy(t, t + 1, 1);  // block becomes [d1 0; d2 d2]
    for (;;) {
      if (a.at(t + 1, t) != 0) {
        if (a.at(t, t) == 0) { row_swap(t, t + 1); continue; }
        Int q = a.at(t + 1, t) / a.at(t, t);
        row_axpy(t + 1, t, -q);
        if (a.at(t + 1, t) != 0) row_swap(t, t + 1);
        continue;
      }
      if (a.at(t, t + 1) != 0) {
        if (a.at(t, t) == 0) { col_swap(t, t + 1); continue; }
        Int q = a.at(t, t + 1) / a.at(t, t);
        col_axpy(t + 1, t, -q);
        if (a.at(t, t + 1) != 0) col_swap(t, t + 1);
        continue;
      }
      break;
    }
    if (a.at(t, t) < 0) col_negate(t);
    if (a.at(t + 1, t + 1) < 0) col_negate(t + 1);
  };
  bool changed = diag > 1;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t + 1 < diag; ++t) {
      if (a.at(t + 1, t + 1) % a.at(t, t) == 0) continue;
      fix_pair(t);
      changed = true;
    }
  }

  SnfResult out;
  out.divisors.resize(t_max);
  for (std::size_t t = 0; t < t_max; ++t) out.divisors[t] = abs_int(a.at(t, t));
  out.vinv = std::move(vinv);
  return out;
}

// Coordinates of v in the row lattice of an echelon HNF basis; nullopt if
// v is not in the lattice.
inline std::optional<std::vector<Int>> hnf_coordinates(const IntMat& basis,
                                                       std::vector<Int> v) {
  std::vector<std::size_t> pivots(basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t j = 0;
    while (j < basis.cols() && basis.at(i, j) == 0) ++j;
    if (j == basis.cols()) throw std::invalid_argument("hnf_coordinates: zero basis row");
    pivots[i] = j;
  }
  std::vector<Int> coords(basis.rows(), Int(0));
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    const std::size_t p = pivots[i];
    if (v[p] == 0) continue;
    if (v[p] % basis.at(i, p) != 0) return std::nullopt;
    Int q = v[p] / basis.at(i, p);
    coords[i] = q;
    for (std::size_t j = 0; j < basis.cols(); ++j) v[j] -= q * basis.at(i, j);
  }
  if (!detail::vec_is_zero(v)) return std::nullopt;
  return coords;
}

// Index [big : small] of lattices given by HNF bases with small <= big.
// Returns nullopt when the index is infinite (rank drop).
inline std::optional<Int> lattice_index(const IntMat& big, const IntMat& small) {
  if (small.rows() > big.rows()) throw std::invalid_argument("lattice_index: not contained");
  if (small.rows() < big.rows()) return std::nullopt;
  const std::size_t r = big.rows();
  IntMat coords(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    auto c = hnf_coordinates(big, small.row(i));
    if (!c) throw std::invalid_argument("lattice_index: small not contained in big");
    coords.set_row(i, *c);
  }
  Int d = det(coords);
  if (d == 0) return std::nullopt;
  return abs_int(d);
}

}  // namespace fitkit
