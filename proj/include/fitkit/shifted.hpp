#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "fitkit/fitting.hpp"

namespace fitkit {

// Canonical, deterministic key for a local configuration; used to merge
// parallel sweep output.
inline std::string config_key(const InertiaConfig& cfg) {
  std::string s = "G=" + cfg.G.describe() + "|I=";
  for (std::size_t i = 0; i < cfg.I.elements().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cfg.I.elements()[i]);
  }
  s += "|D=";
  for (std::size_t i = 0; i < cfg.D.elements().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cfg.D.elements()[i]);
  }
  s += "|phi=" + std::to_string(cfg.phi_lift) + "|dec=";
  for (std::size_t l = 0; l < cfg.decomposition.parts.size(); ++l) {
    if (l) s += ",";
    s += std::to_string(cfg.decomposition.parts[l].first) + ":" +
         std::to_string(cfg.decomposition.parts[l].second);
  }
  return s;
}

// The fractional ideal generated by h = (#I*h)/#I.
inline FractionalIdeal h_as_ideal(const InertiaConfig& cfg) {
  return FractionalIdeal::from_generators(
      cfg.G, {h_numerator(cfg)},
      GroupRingElement::constant(cfg.G, Int(cfg.I.order())));
}

// B = (1 - (nu_I/#I)*phi^{-1}) as a fractional ideal.
inline FractionalIdeal b_ideal(const InertiaConfig& cfg) {
  return FractionalIdeal::from_generators(
      cfg.G, {b_numerator(cfg)},
      GroupRingElement::constant(cfg.G, Int(cfg.I.order())));
}

// Z_i: generated by all products of s-i distinct part norms nu_l.
// Z_0 = (nu_I), Z_s = (1).
inline FractionalIdeal z_ideal(const InertiaConfig& cfg, std::size_t i) {
  const std::size_t s = cfg.s();
  if (i > s) throw std::invalid_argument("z_ideal: index out of range");
  const std::size_t take = s - i;
  auto nus = part_norms(cfg);
  std::vector<GroupRingElement> gens;
  std::vector<std::size_t> sel(take);
  for (std::size_t t = 0; t < take; ++t) sel[t] = t;
  if (take == 0) return FractionalIdeal::unit(cfg.G);
  for (;;) {
    GroupRingElement prod = GroupRingElement::one(cfg.G);
    for (std::size_t t = 0; t < take; ++t) prod = prod * nus[sel[t]];
    gens.push_back(std::move(prod));
    std::size_t t = take;
    bool done = true;
    while (t-- > 0) {
      if (sel[t] < s - (take - t)) {
        ++sel[t];
        for (std::size_t u = t + 1; u < take; ++u) sel[u] = sel[u - 1] + 1;
        done = false;
        break;
      }
    }
    if (done) break;
  }
  return FractionalIdeal::from_generators(cfg.G, gens);
}

// The combined ideal sum_{i=1..s} Z_i * I_D^{i-1}. Independent of the
// chosen decomposition of I; verified, not assumed, by
// verify_j_independence.
inline FractionalIdeal j_combined_ideal(const InertiaConfig& cfg) {
  const std::size_t s = cfg.s();
  if (s == 0) throw std::invalid_argument("j_combined_ideal: needs s >= 1");
  FractionalIdeal id_d = decomposition_augmentation_ideal(cfg);
  FractionalIdeal acc = FractionalIdeal::zero(cfg.G);
  FractionalIdeal dpow = FractionalIdeal::unit(cfg.G);
  for (std::size_t i = 1; i <= s; ++i) {
    acc = acc.sum(z_ideal(cfg, i).product(dpow));
    if (i < s) dpow = dpow.product(id_d);
  }
  return acc;
}

// J_i: (nu_I) for i = 0, and sum_{j=0..s-i} Z_{i+j} * I_I^j for 1 <= i <= s.
inline FractionalIdeal j_i_ideal(const InertiaConfig& cfg, std::size_t i) {
  const std::size_t s = cfg.s();
  if (i > s) throw std::invalid_argument("j_i_ideal: index out of range");
  if (i == 0) return FractionalIdeal::principal(norm_element(cfg.I));
  FractionalIdeal id_i = inertia_augmentation_ideal(cfg);
  FractionalIdeal acc = FractionalIdeal::zero(cfg.G);
  FractionalIdeal ipow = FractionalIdeal::unit(cfg.G);
  for (std::size_t j = 0; j + i <= s; ++j) {
    acc = acc.sum(z_ideal(cfg, i + j).product(ipow));
    if (j + i < s) ipow = ipow.product(id_i);
  }
  return acc;
}

// First shifted Fitting ideal of A = Z[G/I]/(g), computed from the minors
// of the block relation matrix: (sum_{i=0..s} glift^i Fitt_i(M)) / glift.
inline FractionalIdeal first_shift_ideal(const InertiaConfig& cfg) {
  GroupRingElement gl = g_lift_element(cfg);
  auto fitts = fitting_ideals(relation_matrix(cfg));
  const std::size_t s = cfg.s();
  FractionalIdeal acc = fitts[0];
  GroupRingElement gpow = GroupRingElement::one(cfg.G);
  for (std::size_t i = 1; i <= s; ++i) {
    gpow = gpow * gl;
    acc = acc.sum(fitts[i].scaled(gpow));
  }
  return acc.with_denominator(gl);
}

// Minus-one shifted Fitting ideal of A: (glift, nu_I) / glift, the integral
// form of (1, nu_I g^{-1}).
inline FractionalIdeal minus_shift_ideal(const InertiaConfig& cfg) {
  GroupRingElement gl = g_lift_element(cfg);
  return FractionalIdeal::from_generators(cfg.G, {gl, norm_element(cfg.I)}, gl);
}

// Closed form of h * Fitt^[1](A): (nu_I, (1 - (nu_I/#I) phi^{-1}) * Jcal),
// built as ((#I*nu_I) + B*Jcal) / #I.
inline FractionalIdeal h_shift1_closed_form(const InertiaConfig& cfg) {
  const Int ni = cfg.I.order();
  FractionalIdeal jc = j_combined_ideal(cfg);
  FractionalIdeal first =
      FractionalIdeal::principal(norm_element(cfg.I) * ni);
  return first.sum(jc.scaled(b_numerator(cfg)))
      .with_denominator(GroupRingElement::constant(cfg.G, ni));
}

// One verification record. lhs/rhs hold the two independently computed
// sides of the failing (or main) comparison.
struct ShiftReport {
  std::string config;
  std::string check;
  bool skipped = false;
  bool pass = false;
  FractionalIdeal lhs, rhs;
  std::optional<Int> index_if_unequal;
  std::string note;
  double duration_ms = 0;
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline void record_mismatch(ShiftReport& r, const FractionalIdeal& lhs,
                            const FractionalIdeal& rhs) {
  r.lhs = lhs;
  r.rhs = rhs;
  if (rhs.contains(lhs))
    r.index_if_unequal = rhs.quotient_index(lhs).value_or(Int(0));
  else if (lhs.contains(rhs))
    r.index_if_unequal = lhs.quotient_index(rhs).value_or(Int(0));
}

}  // namespace detail

// h * Fitt^[1](A) computed from minors equals the closed form
// (nu_I, (1 - (nu_I/#I) phi^{-1}) * Jcal), as fractional ideals.
inline ShiftReport verify_theorem2(const InertiaConfig& cfg) {
  detail::Stopwatch sw;
  ShiftReport r;
  r.config = config_key(cfg);
  r.check = "theorem2";
  FractionalIdeal lhs = h_as_ideal(cfg).product(first_shift_ideal(cfg));
  FractionalIdeal rhs = h_shift1_closed_form(cfg);
  r.pass = lhs.equals(rhs);
  r.lhs = lhs;
  r.rhs = rhs;
  if (!r.pass) detail::record_mismatch(r, lhs, rhs);
  r.duration_ms = sw.ms();
  return r;
}

// Both formulas for the minus-one shift: the ideal is independent of the
// chosen lift of phi, and h * Fitt^<-1>(A) = (nu_I, 1 - (nu_I/#I) phi^{-1}).
inline ShiftReport verify_prop41(const InertiaConfig& cfg) {
  detail::Stopwatch sw;
  ShiftReport r;
  r.config = config_key(cfg);
  r.check = "prop41";
  r.pass = true;

  FractionalIdeal base = minus_shift_ideal(cfg);
  for (int tau : cfg.I.elements()) {
    InertiaConfig alt = cfg;
    alt.phi_lift = cfg.G.op(cfg.phi_lift, tau);
    FractionalIdeal other = minus_shift_ideal(alt);
    if (!base.equals(other)) {
      r.pass = false;
      r.note = "lift dependence at tau=" + std::to_string(tau);
      detail::record_mismatch(r, base, other);
      r.duration_ms = sw.ms();
      return r;
    }
  }

  const Int ni = cfg.I.order();
  FractionalIdeal lhs = h_as_ideal(cfg).product(base);
  FractionalIdeal rhs =
      FractionalIdeal::from_generators(
          cfg.G, {norm_element(cfg.I) * ni, b_numerator(cfg)},
          GroupRingElement::constant(cfg.G, ni));
  r.pass = lhs.equals(rhs);
  r.lhs = lhs;
  r.rhs = rhs;
  if (!r.pass) {
    r.note = "h * Fitt^<-1> formula";
    detail::record_mismatch(r, lhs, rhs);
  }
  r.duration_ms = sw.ms();
  return r;
}

// Fitt^[1](A) is contained in Fitt^<-1>(A); equality whenever I is cyclic.
// Strictness for non-cyclic I is recorded as data, never asserted.
inline ShiftReport verify_cor42(const InertiaConfig& cfg) {
  detail::Stopwatch sw;
  ShiftReport r;
  r.config = config_key(cfg);
  r.check = "cor42";
  FractionalIdeal lo = first_shift_ideal(cfg);
  FractionalIdeal hi = minus_shift_ideal(cfg);
  r.lhs = lo;
  r.rhs = hi;
  if (!hi.contains(lo)) {
    r.pass = false;
    r.note = "inclusion fails";
    r.duration_ms = sw.ms();
    return r;
  }
  bool equal = lo.equals(hi);
  if (is_cyclic(cfg.I)) {
    r.pass = equal;
    r.note = equal ? "equality (cyclic I)" : "cyclic I but inclusion strict";
  } else {
    r.pass = true;
    if (!equal) {
      auto idx = hi.quotient_index(lo);
      r.index_if_unequal = idx.value_or(Int(0));
      r.note = "strict inclusion, index " +
               (idx ? idx->str() : std::string("infinite"));
    } else {
      r.note = "equality";
    }
  }
  r.duration_ms = sw.ms();
  return r;
}

// Fitting ideals of the pair-row matrix match the closed form:
// (1) for i >= s, 0 for i = 0 (s >= 1), (tau_1..tau_s)^{s-i} between.
inline ShiftReport verify_prop_n(const std::vector<int>& part_orders) {
  detail::Stopwatch sw;
  ShiftReport r;
  r.check = "prop-N";
  std::vector<int> factors;
  for (int n : part_orders) factors.push_back(n);
  FiniteAbelianGroup g(factors);
  r.config = "G=" + g.describe();
  const std::size_t s = part_orders.size();
  std::vector<GroupRingElement> taus;
  std::vector<int> t(g.num_factors(), 0);
  for (std::size_t l = 0; l < s; ++l) {
    std::fill(t.begin(), t.end(), 0);
    if (g.factors()[l] > 1) t[l] = 1;
    taus.push_back(GroupRingElement::monomial(g, g.index_of(t)) -
                   GroupRingElement::one(g));
  }
  GroupRingMatrix n_mat = pair_relation_matrix(g, taus);
  FractionalIdeal tau_ideal = FractionalIdeal::from_generators(g, taus);
  r.pass = true;
  for (std::size_t i = 0; i <= s + 1; ++i) {
    FractionalIdeal got = fitt_i(n_mat, i);
    FractionalIdeal want;
    if (i >= s)
      want = FractionalIdeal::unit(g);
    else if (i == 0)
      want = FractionalIdeal::zero(g);
    else
      want = tau_ideal.power(static_cast<unsigned>(s - i));
    if (!got.equals(want)) {
      r.pass = false;
      r.note = "mismatch at i=" + std::to_string(i);
      detail::record_mismatch(r, got, want);
      break;
    }
  }
  r.duration_ms = sw.ms();
  return r;
}

// Fitt_i of the block matrix equals J_i for 0 <= i <= s; optionally also
// cross-checked against the syzygy-kernel presentation of the same ideal.
inline ShiftReport verify_prop_ji(const InertiaConfig& cfg, bool with_syzygy_oracle) {
  detail::Stopwatch sw;
  ShiftReport r;
  r.config = config_key(cfg);
  r.check = "prop-Ji";
  r.pass = true;
  auto fitts = fitting_ideals(relation_matrix(cfg));
  const std::size_t s = cfg.s();
  std::vector<FractionalIdeal> oracle;
  if (with_syzygy_oracle) {
    auto taus = augmentation_generators(cfg).tau;
    oracle = fitting_ideals(syzygy_presentation(cfg.G, taus));
  }
  for (std::size_t i = 0; i <= s; ++i) {
    FractionalIdeal want = j_i_ideal(cfg, i);
    if (!fitts[i].equals(want)) {
      r.pass = false;
      r.note = "block matrix vs J_i at i=" + std::to_string(i);
      detail::record_mismatch(r, fitts[i], want);
      break;
    }
    if (with_syzygy_oracle && !oracle[i].equals(want)) {
      r.pass = false;
      r.note = "syzygy oracle vs J_i at i=" + std::to_string(i);
      detail::record_mismatch(r, oracle[i], want);
      break;
    }
  }
  if (r.pass && with_syzygy_oracle) r.note = "syzygy oracle included";
  r.duration_ms = sw.ms();
  return r;
}

// Jcal computed from several decompositions of I agrees pairwise.
inline ShiftReport verify_j_independence(
    const InertiaConfig& cfg,
    const std::vector<std::vector<std::pair<int, int>>>& alt_decompositions) {
  detail::Stopwatch sw;
  ShiftReport r;
  r.config = config_key(cfg);
  r.check = "J-independence";
  FractionalIdeal base = j_combined_ideal(cfg);
  r.pass = true;
  for (std::size_t k = 0; k < alt_decompositions.size(); ++k) {
    InertiaConfig alt = make_config(cfg.G, cfg.I, cfg.D, cfg.phi_lift,
                                    alt_decompositions[k]);
    FractionalIdeal other = j_combined_ideal(alt);
    if (!base.equals(other)) {
      r.pass = false;
      r.note = "decomposition #" + std::to_string(k) + " disagrees";
      detail::record_mismatch(r, base, other);
      break;
    }
  }
  r.duration_ms = sw.ms();
  return r;
}

// Fitt^[1] recomputed with every lift of phi agrees (well-definedness).
inline ShiftReport verify_shift1_lift_independence(const InertiaConfig& cfg) {
  detail::Stopwatch sw;
  ShiftReport r;
  r.config = config_key(cfg);
  r.check = "shift1-lift-independence";
  FractionalIdeal base = first_shift_ideal(cfg);
  r.pass = true;
  for (int tau : cfg.I.elements()) {
    InertiaConfig alt = cfg;
    alt.phi_lift = cfg.G.op(cfg.phi_lift, tau);
    FractionalIdeal other = first_shift_ideal(alt);
    if (!base.equals(other)) {
      r.pass = false;
      r.note = "lift dependence at tau=" + std::to_string(tau);
      detail::record_mismatch(r, base, other);
      break;
    }
  }
  r.duration_ms = sw.ms();
  return r;
}

}  // namespace fitkit
