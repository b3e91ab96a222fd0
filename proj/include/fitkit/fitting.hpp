#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fitkit/ideal.hpp"

namespace fitkit {

// A rectangular matrix over Z[G]; rows are relations among the column
// generators (row-vector convention, matrices act from the right).
class GroupRingMatrix {
 public:
  GroupRingMatrix() = default;
  GroupRingMatrix(FiniteAbelianGroup g, std::size_t rows, std::size_t cols)
      : group_(std::move(g)),
        rows_(rows),
        cols_(cols),
        entries_(rows * cols, GroupRingElement(group_)) {
    for (std::size_t i = 0; i < rows; ++i)
      row_labels_.push_back("r" + std::to_string(i));
    for (std::size_t j = 0; j < cols; ++j)
      col_labels_.push_back("c" + std::to_string(j));
  }

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GroupRingElement& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const GroupRingElement& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::vector<std::string>& row_labels() { return row_labels_; }
  std::vector<std::string>& col_labels() { return col_labels_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

 private:
  FiniteAbelianGroup group_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<GroupRingElement> entries_;
  std::vector<std::string> row_labels_, col_labels_;
};

namespace detail {

// Enumerates all j x j minors of M for every 1 <= j <= max_size, expanding
// along the last column of each column prefix. A depth-first walk over
// column prefixes shares the cofactor tables between column subsets with a
// common prefix; within a prefix, minors are tabulated per row subset
// (combinadic rank).
class MinorEngine {
 public:
  MinorEngine(const GroupRingMatrix& m, std::size_t max_size)
      : m_(m), max_(std::min({max_size, m.rows(), m.cols()})) {
    binom_.assign(m_.rows() + 1, std::vector<unsigned long long>(max_ + 1, 0));
    for (std::size_t i = 0; i <= m_.rows(); ++i) {
      binom_[i][0] = 1;
      for (std::size_t j = 1; j <= max_ && j <= i; ++j)
        binom_[i][j] = binom_[i - 1][j - 1] + (j <= i - 1 ? binom_[i - 1][j] : 0);
    }
  }

  // sink(size, value) is called for every nonzero minor, over every column
  // subset of size <= max_size.
  void run(const std::function<void(std::size_t, const GroupRingElement&)>& sink) {
    if (max_ == 0 || m_.rows() == 0) return;
    std::vector<std::vector<GroupRingElement>> levels;
    std::vector<std::vector<char>> level_nonzero;
    dfs(levels, level_nonzero, sink);
  }

 private:
  // On entry, levels[0..d-1] hold the minors of the current column prefix
  // of length d = levels.size(); extend by every later column.
  void dfs(std::vector<std::vector<GroupRingElement>>& levels,
           std::vector<std::vector<char>>& level_nonzero,
           const std::function<void(std::size_t, const GroupRingElement&)>& sink) {
    const std::size_t depth = levels.size();
    if (depth == max_) return;
    const std::size_t j = depth + 1;  // minor size being built
    if (j > m_.rows()) return;
    const std::size_t first_col = cols_.empty() ? 0 : cols_.back() + 1;
    for (std::size_t c = first_col; c < m_.cols(); ++c) {
      cols_.push_back(c);
      const std::size_t count = static_cast<std::size_t>(binom_[m_.rows()][j]);
      std::vector<GroupRingElement> level(count, GroupRingElement(m_.group()));
      std::vector<char> nonzero(count, 0);
      std::vector<std::size_t> subset(j);
      for (std::size_t t = 0; t < j; ++t) subset[t] = t;
      for (;;) {
        GroupRingElement acc(m_.group());
        bool any = false;
        // expand along the newest column c
        for (std::size_t t = 0; t < j; ++t) {
          const GroupRingElement& e = m_.at(subset[t], c);
          if (e.is_zero()) continue;
          GroupRingElement term(m_.group());
          if (j == 1) {
            term = e;
          } else {
            const std::size_t r = rank_without(subset, t, j);
            if (!level_nonzero[depth - 1][r]) continue;
            term = e * levels[depth - 1][r];
          }
          if ((t + j - 1) % 2 == 1) term = -term;
          acc += term;
          any = true;
        }
        if (any && !acc.is_zero()) {
          const std::size_t r = rank_of(subset, j);
          level[r] = acc;
          nonzero[r] = 1;
          sink(j, level[r]);
        }
        // next row combination in lexicographic order
        std::size_t t = j;
        bool done = true;
        while (t-- > 0) {
          if (subset[t] < m_.rows() - (j - t)) {
            ++subset[t];
            for (std::size_t u = t + 1; u < j; ++u) subset[u] = subset[u - 1] + 1;
            done = false;
            break;
          }
        }
        if (done) break;
      }
      levels.push_back(std::move(level));
      level_nonzero.push_back(std::move(nonzero));
      dfs(levels, level_nonzero, sink);
      levels.pop_back();
      level_nonzero.pop_back();
      cols_.pop_back();
    }
  }

  std::size_t rank_of(const std::vector<std::size_t>& subset, std::size_t j) const {
    unsigned long long r = 0;
    for (std::size_t t = 0; t < j; ++t) r += binom_[subset[t]][t + 1];
    return static_cast<std::size_t>(r);
  }
  std::size_t rank_without(const std::vector<std::size_t>& subset, std::size_t skip,
                           std::size_t j) const {
    unsigned long long r = 0;
    std::size_t pos = 0;
    for (std::size_t t = 0; t < j; ++t) {
      if (t == skip) continue;
      r += binom_[subset[t]][pos + 1];
      ++pos;
    }
    return static_cast<std::size_t>(r);
  }

  const GroupRingMatrix& m_;
  std::size_t max_;
  std::vector<std::size_t> cols_;
  std::vector<std::vector<unsigned long long>> binom_;
};

}  // namespace detail

// Exact determinant over Z[G] by cofactor expansion with shared cofactor
// tables. Z[G] has zero divisors, so elimination-based methods are unsound.
inline GroupRingElement determinant(const GroupRingMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square");
  const std::size_t n = m.rows();
  if (n == 0) return GroupRingElement::one(m.group());
  GroupRingElement result(m.group());
  detail::MinorEngine engine(m, n);
  engine.run([&](std::size_t size, const GroupRingElement& v) {
    if (size == n) result = v;
  });
  return result;
}

// All Fitting ideals of the matrix at once: out[i] = Fitt_i for 0 <= i <= n,
// the ideal of (n-i) x (n-i) minors. Fitt_i = (1) for i >= n and 0 when
// n - i exceeds the row count.
inline std::vector<FractionalIdeal> fitting_ideals(const GroupRingMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<std::vector<GroupRingElement>> minors(n + 1);
  detail::MinorEngine engine(m, n);
  engine.run([&](std::size_t size, const GroupRingElement& v) {
    if (size <= n) minors[n - size].push_back(v);
  });
  std::vector<FractionalIdeal> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == n)
      out.push_back(FractionalIdeal::unit(m.group()));
    else
      out.push_back(FractionalIdeal::from_generators(m.group(), minors[i]));
  }
  return out;
}

inline FractionalIdeal fitt_i(const GroupRingMatrix& m, std::size_t i) {
  if (i >= m.cols()) return FractionalIdeal::unit(m.group());
  const std::size_t size = m.cols() - i;
  if (size > m.rows()) return FractionalIdeal::zero(m.group());
  std::vector<GroupRingElement> minors;
  detail::MinorEngine engine(m, size);
  engine.run([&](std::size_t sz, const GroupRingElement& v) {
    if (sz == size) minors.push_back(v);
  });
  return FractionalIdeal::from_generators(m.group(), minors);
}

// A finitely presented Z[G]-module: rows of `presentation` are the relations
// among cols() generators.
struct PresentedModule {
  GroupRingMatrix presentation;

  std::size_t generators() const { return presentation.cols(); }
};

// The block presentation of the augmentation kernel of I built from a cyclic
// decomposition with s parts: columns x_1..x_s; a row nu_l per part and a
// row (-tau_{l'} at x_l, tau_l at x_{l'}) per pair l < l'. Pair rows are
// ordered to match the usual display for s = 3 (x_2x_3, x_1x_3, x_1x_2).
inline GroupRingMatrix relation_matrix(const InertiaConfig& cfg) {
  const std::size_t s = cfg.s();
  auto taus = augmentation_generators(cfg).tau;
  auto nus = part_norms(cfg);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t l = 0; l < s; ++l)
    for (std::size_t lp = l + 1; lp < s; ++lp) pairs.emplace_back(l, lp);
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first > b.first;
            });
  GroupRingMatrix m(cfg.G, s + pairs.size(), s);
  for (std::size_t l = 0; l < s; ++l) {
    m.at(l, l) = nus[l];
    m.row_labels()[l] = "x" + std::to_string(l + 1) + "^2";
    m.col_labels()[l] = "x" + std::to_string(l + 1);
  }
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    auto [l, lp] = pairs[r];
    m.at(s + r, l) = -taus[lp];
    m.at(s + r, lp) = taus[l];
    m.row_labels()[s + r] =
        "x" + std::to_string(l + 1) + "x" + std::to_string(lp + 1);
  }
  return m;
}

// The pair-row submatrix alone (the nu rows removed).
inline GroupRingMatrix pair_relation_matrix(const FiniteAbelianGroup& g,
                                            const std::vector<GroupRingElement>& taus) {
  const std::size_t s = taus.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t l = 0; l < s; ++l)
    for (std::size_t lp = l + 1; lp < s; ++lp) pairs.emplace_back(l, lp);
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first > b.first;
            });
  GroupRingMatrix m(g, pairs.size(), s);
  for (std::size_t l = 0; l < s; ++l) m.col_labels()[l] = "x" + std::to_string(l + 1);
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    auto [l, lp] = pairs[r];
    m.at(r, l) = -taus[lp];
    m.at(r, lp) = taus[l];
    m.row_labels()[r] = "x" + std::to_string(l + 1) + "x" + std::to_string(lp + 1);
  }
  return m;
}

// Fitt_0(X / IX) = sum_{i=0}^{n} I^i Fitt_i(X) for a module with n
// generators and an integral ideal I.
inline FractionalIdeal quotient_fitting_ideal(const PresentedModule& x,
                                              const FractionalIdeal& ideal) {
  const std::size_t n = x.generators();
  auto fitts = fitting_ideals(x.presentation);
  FractionalIdeal acc = fitts[0];
  FractionalIdeal ipow = FractionalIdeal::unit(x.presentation.group());
  for (std::size_t i = 1; i <= n; ++i) {
    ipow = ipow.product(ideal);
    acc = acc.sum(ipow.product(fitts[i]));
  }
  return acc;
}

inline FractionalIdeal quotient_fitting_ideal(const PresentedModule& x,
                                              const GroupRingElement& g_elt) {
  return quotient_fitting_ideal(x, FractionalIdeal::principal(g_elt));
}

// Full relation module of Z[G]^s -> Z[G], e_l -> gens[l], computed as the
// integer kernel of the stacked multiplication matrices. The kernel is
// closed under the G-action, so its Z-basis rows form a (large but honest)
// presentation matrix of the ideal generated by gens — an oracle
// independent of any block construction.
inline GroupRingMatrix syzygy_presentation(const FiniteAbelianGroup& g,
                                           const std::vector<GroupRingElement>& gens) {
  const std::size_t s = gens.size();
  const std::size_t n = static_cast<std::size_t>(g.order());
  IntMat stacked(s * n, n);
  for (std::size_t l = 0; l < s; ++l) {
    IntMat m = multiplication_matrix(gens[l]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked.at(l * n + i, j) = m.at(i, j);
  }
  IntMat ker = kernel(stacked);
  GroupRingMatrix out(g, ker.rows(), s);
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    for (std::size_t l = 0; l < s; ++l) {
      std::vector<Int> coeffs(n);
      for (std::size_t j = 0; j < n; ++j) coeffs[j] = ker.at(r, l * n + j);
      out.at(r, l) = GroupRingElement::from_coeffs(g, std::move(coeffs));
    }
    out.row_labels()[r] = "k" + std::to_string(r);
  }
  return out;
}

}  // namespace fitkit
