#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fitkit/group_ring.hpp"
#include "fitkit/intmat.hpp"

namespace fitkit {

// A fractional ideal of Z[G], stored as delta^{-1} * L where L is an
// integral ideal (a G-translate-closed lattice in canonical HNF) and delta
// is a regular element (often a constant). Denominators are ring elements
// so that ideals scaled by inverses of non-constant regular elements are
// represented exactly, without ever inverting anything.
class FractionalIdeal {
 public:
  FractionalIdeal() = default;

  static FractionalIdeal zero(const FiniteAbelianGroup& g) {
    FractionalIdeal a;
    a.group_ = g;
    a.basis_ = IntMat(0, g.order());
    a.denom_ = GroupRingElement::one(g);
    a.gens_ = std::vector<GroupRingElement>{};
    return a;
  }

  static FractionalIdeal unit(const FiniteAbelianGroup& g) {
    return principal(GroupRingElement::one(g));
  }

  static FractionalIdeal principal(const GroupRingElement& x) {
    return from_generators(x.group(), {x});
  }

  // HNF of the lattice spanned by all G-translates of the generators.
  // Generators that add nothing to the lattice are dropped from the kept
  // module-generator list.
  static FractionalIdeal from_generators(
      const FiniteAbelianGroup& g, const std::vector<GroupRingElement>& gens,
      GroupRingElement denom = GroupRingElement(), bool check_denominator = false) {
    if (denom.coeffs().empty()) denom = GroupRingElement::one(g);
    if (!denom.group().same_group(g))
      throw std::invalid_argument("ideal denominator over a different group");
    if (check_denominator && !is_regular(denom))
      throw std::invalid_argument("ideal denominator must be a non-zero-divisor");
    HnfBuilder b(g.order());
    std::vector<GroupRingElement> kept;
    for (const auto& x : gens) {
      if (!x.group().same_group(g))
        throw std::invalid_argument("ideal generator over a different group");
      if (x.is_zero()) continue;
      if (b.contains(x.coeffs())) continue;
      kept.push_back(x);
      for (int t = 0; t < g.order(); ++t) b.add(x.translate(t).coeffs());
    }
    FractionalIdeal a;
    a.group_ = g;
    a.basis_ = b.finish();
    a.denom_ = std::move(denom);
    a.gens_ = std::move(kept);
    return a;
  }

  const FiniteAbelianGroup& group() const { return group_; }
  const IntMat& basis() const { return basis_; }
  const GroupRingElement& denominator() const { return denom_; }
  const std::optional<std::vector<GroupRingElement>>& module_gens() const {
    return gens_;
  }

  bool is_zero() const { return basis_.rows() == 0; }
  std::size_t lattice_rank() const { return basis_.rows(); }

  bool denominator_is_one() const {
    return denom_ == GroupRingElement::one(group_);
  }

  // The numerator lattice rows as ring elements.
  std::vector<GroupRingElement> basis_elements() const {
    std::vector<GroupRingElement> out;
    out.reserve(basis_.rows());
    for (std::size_t i = 0; i < basis_.rows(); ++i)
      out.push_back(GroupRingElement::from_coeffs(group_, basis_.row(i)));
    return out;
  }

  // Numerator lattice multiplied by a ring element, as canonical HNF.
  // Translate closure is preserved by multiplication.
  IntMat scaled_basis(const GroupRingElement& c) const {
    HnfBuilder b(group_.order());
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      GroupRingElement row = GroupRingElement::from_coeffs(group_, basis_.row(i)) * c;
      if (!row.is_zero()) b.add(row.coeffs());
    }
    return b.finish();
  }

  // this + other (denominators cross-multiplied unless equal).
  FractionalIdeal sum(const FractionalIdeal& o) const {
    check(o);
    FractionalIdeal out;
    out.group_ = group_;
    HnfBuilder b(group_.order());
    if (denom_ == o.denom_) {
      out.denom_ = denom_;
      b.add_matrix_rows(basis_);
      b.add_matrix_rows(o.basis_);
      if (gens_ && o.gens_) {
        auto gens = *gens_;
        gens.insert(gens.end(), o.gens_->begin(), o.gens_->end());
        out.gens_ = std::move(gens);
      }
    } else {
      out.denom_ = denom_ * o.denom_;
      b.add_matrix_rows(scaled_basis(o.denom_));
      b.add_matrix_rows(o.scaled_basis(denom_));
      // cross-multiplied generators are still module generators
      if (gens_ && o.gens_) {
        std::vector<GroupRingElement> gens;
        for (const auto& x : *gens_) gens.push_back(x * o.denom_);
        for (const auto& x : *o.gens_) gens.push_back(x * denom_);
        out.gens_ = std::move(gens);
      }
    }
    out.basis_ = b.finish();
    out.prune_gens();
    return out;
  }

  // this * other. When both sides carry module generators, their pairwise
  // products generate the product ideal over Z[G]; otherwise the pairwise
  // products of the full lattice bases span it over Z directly.
  FractionalIdeal product(const FractionalIdeal& o) const {
    check(o);
    if (is_zero() || o.is_zero()) {
      FractionalIdeal z = zero(group_);
      z.denom_ = denom_ * o.denom_;
      return z;
    }
    if (gens_ && o.gens_ && gens_->size() * o.gens_->size() <= 256) {
      std::vector<GroupRingElement> prods;
      prods.reserve(gens_->size() * o.gens_->size());
      for (const auto& x : *gens_)
        for (const auto& y : *o.gens_) prods.push_back(x * y);
      return from_generators(group_, prods, denom_ * o.denom_);
    }
    HnfBuilder b(group_.order());
    auto rows_a = basis_elements();
    auto rows_b = o.basis_elements();
    for (const auto& x : rows_a)
      for (const auto& y : rows_b) {
        GroupRingElement p = x * y;
        if (!p.is_zero()) b.add(p.coeffs());
      }
    FractionalIdeal out;
    out.group_ = group_;
    out.basis_ = b.finish();
    out.denom_ = denom_ * o.denom_;
    return out;
  }

  // this^e with the empty-product convention: e = 0 gives the unit ideal.
  FractionalIdeal power(unsigned e) const {
    if (e == 0) return unit(group_);
    if (gens_ && denominator_is_one()) {
      // monomials of degree e in the module generators
      std::vector<GroupRingElement> monomials;
      std::vector<std::size_t> idx(e, 0);
      const std::size_t n = gens_->size();
      if (n == 0) return zero(group_);
      for (;;) {
        GroupRingElement m = GroupRingElement::one(group_);
        for (std::size_t i = 0; i < e; ++i) m = m * (*gens_)[idx[i]];
        monomials.push_back(std::move(m));
        // next non-decreasing index tuple
        std::size_t i = e;
        while (i-- > 0) {
          if (idx[i] + 1 < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < e; ++j) idx[j] = idx[i];
            break;
          }
          if (i == 0) return from_generators(group_, monomials);
        }
      }
    }
    FractionalIdeal acc = *this;
    for (unsigned i = 1; i < e; ++i) acc = acc.product(*this);
    return acc;
  }

  // Same numerator lattice, reinterpreted over a new (regular) denominator.
  FractionalIdeal with_denominator(const GroupRingElement& d) const {
    FractionalIdeal out = *this;
    out.denom_ = d;
    return out;
  }

  // Scale by a ring element (multiply the numerator lattice).
  FractionalIdeal scaled(const GroupRingElement& c) const {
    if (c.is_zero()) {
      FractionalIdeal z = zero(group_);
      z.denom_ = denom_;
      return z;
    }
    FractionalIdeal out;
    out.group_ = group_;
    out.basis_ = scaled_basis(c);
    out.denom_ = denom_;
    if (gens_) {
      std::vector<GroupRingElement> gens;
      for (const auto& x : *gens_) gens.push_back(x * c);
      out.gens_ = std::move(gens);
    }
    out.prune_gens();
    return out;
  }

  // b <= a  <=>  delta_a * num(b) <= delta_b * num(a).
  bool contains(const FractionalIdeal& b) const {
    check(b);
    IntMat big = denom_ == b.denom_ ? basis_ : scaled_basis(b.denom_);
    IntMat small = denom_ == b.denom_ ? b.basis_ : b.scaled_basis(denom_);
    HnfBuilder h(group_.order());
    h.add_matrix_rows(big);
    for (std::size_t i = 0; i < small.rows(); ++i)
      if (!h.contains(small.row(i))) return false;
    return true;
  }

  bool contains_element(const GroupRingElement& x) const {
    return contains(principal(x));
  }

  bool equals(const FractionalIdeal& o) const {
    check(o);
    if (denom_ == o.denom_) return basis_ == o.basis_;
    return scaled_basis(o.denom_) == o.scaled_basis(denom_);
  }

  // [a : b] for b <= a; nullopt when infinite.
  std::optional<Int> quotient_index(const FractionalIdeal& b) const {
    check(b);
    IntMat big = denom_ == b.denom_ ? basis_ : scaled_basis(b.denom_);
    IntMat small = denom_ == b.denom_ ? b.basis_ : b.scaled_basis(denom_);
    if (small.rows() == 0) {
      if (big.rows() == 0) return Int(1);
      return std::nullopt;
    }
    if (!contains(b)) throw std::invalid_argument("quotient_index: not contained");
    return lattice_index(big, small);
  }

  // b tensor Z_p <= a tensor Z_p: ranks must agree after adjoining b to a,
  // and the finite index [a+b : a] must be prime to p.
  bool p_locally_contains(const FractionalIdeal& b, int p) const {
    check(b);
    IntMat big = denom_ == b.denom_ ? basis_ : scaled_basis(b.denom_);
    IntMat small = denom_ == b.denom_ ? b.basis_ : b.scaled_basis(denom_);
    if (small.rows() == 0) return true;
    HnfBuilder h(group_.order());
    h.add_matrix_rows(big);
    h.add_matrix_rows(small);
    if (h.rank() != big.rows()) return false;
    auto idx = lattice_index(h.finish(), big);
    if (!idx) return false;
    return *idx % p != 0;
  }

  bool p_locally_equal(const FractionalIdeal& o, int p) const {
    return p_locally_contains(o, p) && o.p_locally_contains(*this, p);
  }

 private:
  void check(const FractionalIdeal& o) const {
    if (!group_.same_group(o.group_))
      throw std::invalid_argument("ideals over different groups");
  }

  // Drop module generators that are redundant over Z[G]; keeps reported
  // generator lists and later products small.
  void prune_gens() {
    if (!gens_ || gens_->size() <= 1) return;
    std::vector<GroupRingElement> kept;
    HnfBuilder b(group_.order());
    for (const auto& x : *gens_) {
      if (x.is_zero()) continue;
      if (b.contains(x.coeffs())) continue;
      kept.push_back(x);
      for (int t = 0; t < group_.order(); ++t) b.add(x.translate(t).coeffs());
    }
    gens_ = std::move(kept);
  }

  FiniteAbelianGroup group_;
  IntMat basis_;
  GroupRingElement denom_;
  std::optional<std::vector<GroupRingElement>> gens_;
};

inline FractionalIdeal ideal_sum(const FractionalIdeal& a, const FractionalIdeal& b) {
  return a.sum(b);
}
inline FractionalIdeal ideal_product(const FractionalIdeal& a, const FractionalIdeal& b) {
  return a.product(b);
}

// Augmentation-kernel ideals of I and D inside Z[G].
inline FractionalIdeal inertia_augmentation_ideal(const InertiaConfig& cfg) {
  auto gens = augmentation_generators(cfg);
  return FractionalIdeal::from_generators(cfg.G, gens.tau);
}

inline FractionalIdeal decomposition_augmentation_ideal(const InertiaConfig& cfg) {
  auto gens = augmentation_generators(cfg);
  return FractionalIdeal::from_generators(cfg.G, gens.id_gens);
}

// Kernel of Z[G] -> Z[G/H] as a lattice, computed independently from the
// coset structure (each coefficient vector summing to zero on every coset).
inline FractionalIdeal augmentation_kernel_lattice(const FiniteAbelianGroup& g,
                                                   const Subgroup& h) {
  QuotientGroup q = quotient_group(g, h);
  IntMat cosum(g.order(), q.group.order());
  for (int i = 0; i < g.order(); ++i) cosum.at(i, q.proj[i]) = 1;
  IntMat ker = kernel(cosum);
  std::vector<GroupRingElement> rows;
  for (std::size_t i = 0; i < ker.rows(); ++i)
    rows.push_back(GroupRingElement::from_coeffs(g, ker.row(i)));
  return FractionalIdeal::from_generators(g, rows);
}

}  // namespace fitkit
