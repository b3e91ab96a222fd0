#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fitkit/cyclotomic.hpp"
#include "fitkit/group.hpp"
#include "fitkit/intmat.hpp"

namespace fitkit {

// An element of Z[G]: a dense integer coefficient vector indexed by the
// deterministic element enumeration of G.
class GroupRingElement {
 public:
  GroupRingElement() = default;

  explicit GroupRingElement(FiniteAbelianGroup g)
      : group_(std::move(g)), coeffs_(group_.order(), Int(0)) {}

  static GroupRingElement monomial(const FiniteAbelianGroup& g, int elem,
                                   const Int& c = Int(1)) {
    GroupRingElement x(g);
    x.coeffs_[elem] = c;
    return x;
  }

  static GroupRingElement constant(const FiniteAbelianGroup& g, const Int& c) {
    return monomial(g, g.identity(), c);
  }

  static GroupRingElement one(const FiniteAbelianGroup& g) {
    return constant(g, 1);
  }

  static GroupRingElement from_coeffs(const FiniteAbelianGroup& g,
                                      std::vector<Int> coeffs) {
    if (static_cast<int>(coeffs.size()) != g.order())
      throw std::invalid_argument("coefficient vector length mismatch");
    GroupRingElement x(g);
    x.coeffs_ = std::move(coeffs);
    return x;
  }

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& coeff(int elem) const { return coeffs_[elem]; }
  Int& coeff(int elem) { return coeffs_[elem]; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  Int augmentation() const {
    Int s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    return a -= b;
  }
  GroupRingElement operator-() const {
    GroupRingElement out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  GroupRingElement operator*(const Int& c) const {
    GroupRingElement out = *this;
    for (auto& x : out.coeffs_) x *= c;
    return out;
  }

  // Convolution product.
  friend GroupRingElement operator*(const GroupRingElement& a,
                                    const GroupRingElement& b) {
    a.check(b);
    GroupRingElement out(a.group_);
    const int n = a.group_.order();
    for (int i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (b.coeffs_[j] == 0) continue;
        out.coeffs_[a.group_.op(i, j)] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  GroupRingElement pow(unsigned e) const {
    GroupRingElement acc = one(group_);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
  }

  bool operator==(const GroupRingElement& o) const {
    return group_.same_group(o.group_) && coeffs_ == o.coeffs_;
  }
  bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

  // Translate by a group element: x -> g * x.
  GroupRingElement translate(int g) const {
    GroupRingElement out(group_);
    for (int i = 0; i < group_.order(); ++i)
      if (coeffs_[i] != 0) out.coeffs_[group_.op(g, i)] = coeffs_[i];
    return out;
  }

  // Push forward along a tabulated homomorphism into another group.
  GroupRingElement map_through(const FiniteAbelianGroup& target,
                               const std::vector<int>& hom_table) const {
    GroupRingElement out(target);
    for (int i = 0; i < group_.order(); ++i)
      if (coeffs_[i] != 0) out.coeffs_[hom_table[i]] += coeffs_[i];
    return out;
  }

  std::string describe() const {
    std::string s;
    for (int i = 0; i < group_.order(); ++i) {
      if (coeffs_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += coeffs_[i].str() + "*g" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check(const GroupRingElement& o) const {
    if (!group_.same_group(o.group_))
      throw std::invalid_argument("group ring elements over different groups");
  }

  FiniteAbelianGroup group_;
  std::vector<Int> coeffs_;
};

// numerator / denominator with a positive integer denominator; represents
// an element of Q[G]. Every fractional element used here becomes integral
// after multiplying by #I, so integer denominators suffice and keep the
// lattice arithmetic exact.
struct ScaledElement {
  GroupRingElement numerator;
  Int denominator = 1;

  ScaledElement() = default;
  ScaledElement(GroupRingElement num, Int den)
      : numerator(std::move(num)), denominator(std::move(den)) {
    if (denominator <= 0) throw std::invalid_argument("denominator must be positive");
  }

  bool operator==(const ScaledElement& o) const {
    return numerator * o.denominator == o.numerator * denominator;
  }

  ScaledElement operator*(const ScaledElement& o) const {
    return ScaledElement(numerator * o.numerator, denominator * o.denominator);
  }
  ScaledElement operator*(const GroupRingElement& x) const {
    return ScaledElement(numerator * x, denominator);
  }
};

// nu_H = sum of all elements of the subgroup H, as an element of Z[parent].
inline GroupRingElement norm_element(const Subgroup& h) {
  GroupRingElement x(h.parent());
  for (int e : h.elements()) x.coeff(e) = 1;
  return x;
}

// Matrix of y -> y * x on Z[G] in the row-vector convention:
// row i holds the coefficients of g_i * x.
inline IntMat multiplication_matrix(const GroupRingElement& x) {
  const auto& g = x.group();
  const int n = g.order();
  IntMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x.coeff(j) != 0) m.at(i, g.op(i, j)) = x.coeff(j);
  return m;
}

// Value of the character with exponent tuple `exps` at the ring element x,
// computed in Z[zeta_conductor].
inline CyclotomicInt character_value(const GroupRingElement& x,
                                     const std::vector<int>& exps, int conductor) {
  const auto& g = x.group();
  std::vector<Int> raw(conductor, Int(0));
  for (int i = 0; i < g.order(); ++i) {
    if (x.coeff(i) == 0) continue;
    auto t = g.tuple_of(i);
    long long phase = 0;
    for (std::size_t f = 0; f < t.size(); ++f)
      phase += static_cast<long long>(exps[f]) * t[f] * (conductor / g.factors()[f]);
    raw[static_cast<std::size_t>(phase % conductor)] += x.coeff(i);
  }
  CyclotomicInt out(conductor);
  std::vector<Int> reduced = CyclotomicInt::reduce(conductor, std::move(raw));
  for (std::size_t i = 0; i < reduced.size(); ++i)
    if (reduced[i] != 0) out += CyclotomicInt::root_power(conductor, i) * reduced[i];
  return out;
}

// x is a non-zero-divisor of Z[G] iff no character of G kills it; this is
// equivalent to the multiplication matrix having nonzero determinant, which
// is what is_regular_det checks (the oracle for this fast path).
inline bool is_regular(const GroupRingElement& x) {
  const auto& g = x.group();
  if (x.is_zero()) return g.order() == 0;
  const int m = g.exponent();
  std::vector<int> exps(g.num_factors(), 0);
  for (int psi = 0; psi < g.order(); ++psi) {
    auto e = g.tuple_of(psi);
    if (character_value(x, e, m).is_zero()) return false;
  }
  return true;
}

inline bool is_regular_det(const GroupRingElement& x) {
  return det(multiplication_matrix(x)) != 0;
}

// The distinguished local elements: g over Z[G/I], its lift over Z[G], and
// the fractional element h as (#I*h, #I).
struct SpecialElements {
  QuotientGroup quotient;          // G/I with projection
  GroupRingElement g_bar;          // 1 - phi^{-1} + #I in Z[G/I]
  GroupRingElement g_lift;         // 1 - phi_lift^{-1} + #I in Z[G]
  ScaledElement h;                 // (#I - nu_I phi_lift^{-1} + #I nu_I) / #I
};

inline SpecialElements special_elements(const InertiaConfig& cfg) {
  SpecialElements out;
  out.quotient = quotient_group(cfg.G, cfg.I);
  const Int ni = cfg.I.order();
  const int phi_inv = cfg.G.inverse(cfg.phi_lift);

  out.g_lift = GroupRingElement::constant(cfg.G, ni) +
               GroupRingElement::one(cfg.G) -
               GroupRingElement::monomial(cfg.G, phi_inv);

  const auto& q = out.quotient.group;
  out.g_bar = GroupRingElement::constant(q, ni) + GroupRingElement::one(q) -
              GroupRingElement::monomial(q, out.quotient(phi_inv));

  GroupRingElement nu = norm_element(cfg.I);
  GroupRingElement h_num = GroupRingElement::constant(cfg.G, ni) -
                           nu * GroupRingElement::monomial(cfg.G, phi_inv) +
                           nu * ni;
  out.h = ScaledElement(std::move(h_num), ni);

  if (!is_regular(out.g_lift) || !is_regular(out.g_bar) ||
      !is_regular(out.h.numerator))
    throw std::logic_error("special elements must be non-zero-divisors");
  return out;
}

// glift = 1 - phi_lift^{-1} + #I, the in-Z[G] lift of g.
inline GroupRingElement g_lift_element(const InertiaConfig& cfg) {
  return GroupRingElement::constant(cfg.G, Int(cfg.I.order())) +
         GroupRingElement::one(cfg.G) -
         GroupRingElement::monomial(cfg.G, cfg.G.inverse(cfg.phi_lift));
}

// #I*h = #I - nu_I*phi^{-1} + #I*nu_I, the integral numerator of h.
inline GroupRingElement h_numerator(const InertiaConfig& cfg) {
  const Int ni = cfg.I.order();
  GroupRingElement nu = norm_element(cfg.I);
  return GroupRingElement::constant(cfg.G, ni) -
         nu * GroupRingElement::monomial(cfg.G, cfg.G.inverse(cfg.phi_lift)) + nu * ni;
}

// #I*(1 - (nu_I/#I)*phi^{-1}) = #I - nu_I*phi^{-1}.
inline GroupRingElement b_numerator(const InertiaConfig& cfg) {
  const Int ni = cfg.I.order();
  GroupRingElement nu = norm_element(cfg.I);
  return GroupRingElement::constant(cfg.G, ni) -
         nu * GroupRingElement::monomial(cfg.G, cfg.G.inverse(cfg.phi_lift));
}

// tau_l = sigma_l - 1 from the decomposition of I, and the generator list
// of the augmentation-kernel ideal of D (the taus plus 1 - phi_lift^{-1}).
struct AugmentationGenerators {
  std::vector<GroupRingElement> tau;      // generate ker(Z[G] -> Z[G/I])
  std::vector<GroupRingElement> id_gens;  // generate ker(Z[G] -> Z[G/D])
};

inline AugmentationGenerators augmentation_generators(const InertiaConfig& cfg) {
  AugmentationGenerators out;
  for (auto& [gen, ord] : cfg.decomposition.parts) {
    (void)ord;
    out.tau.push_back(GroupRingElement::monomial(cfg.G, gen) -
                      GroupRingElement::one(cfg.G));
  }
  out.id_gens = out.tau;
  out.id_gens.push_back(GroupRingElement::one(cfg.G) -
                        GroupRingElement::monomial(cfg.G, cfg.G.inverse(cfg.phi_lift)));
  return out;
}

// Norm elements nu_l of the decomposition parts.
inline std::vector<GroupRingElement> part_norms(const InertiaConfig& cfg) {
  std::vector<GroupRingElement> out;
  for (auto& [gen, ord] : cfg.decomposition.parts) {
    GroupRingElement nu(cfg.G);
    int x = cfg.G.identity();
    for (int i = 0; i < ord; ++i) {
      nu.coeff(x) += 1;
      x = cfg.G.op(x, gen);
    }
    out.push_back(std::move(nu));
  }
  return out;
}

}  // namespace fitkit
