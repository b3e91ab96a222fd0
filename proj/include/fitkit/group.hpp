#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fitkit/intmat.hpp"

namespace fitkit {

// A finite abelian group given as a product of cyclic groups of orders
// factors[0], ..., factors[k-1]. Elements are exponent tuples, enumerated
// lexicographically (first coordinate most significant) and addressed by
// their enumeration index. Immutable after construction; cheap to copy.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<int>{1}) {}

  explicit FiniteAbelianGroup(std::vector<int> factors) {
    if (factors.empty()) factors = {1};
    for (int n : factors)
      if (n < 1) throw std::invalid_argument("group factor must be >= 1");
    auto d = std::make_shared<Data>();
    d->factors = std::move(factors);
    d->order = 1;
    for (int n : d->factors) d->order *= n;
    d->exponent = 1;
    for (int n : d->factors) d->exponent = std::lcm(d->exponent, n);
    const std::size_t k = d->factors.size();
    d->strides.assign(k, 1);
    for (std::size_t i = k; i-- > 1;)
      d->strides[i - 1] = d->strides[i] * d->factors[i];
    d->mul.assign(static_cast<std::size_t>(d->order) * d->order, 0);
    d->inv.assign(d->order, 0);
    std::vector<int> ta(k), tb(k), tc(k);
    for (int a = 0; a < d->order; ++a) {
      tuple_of_impl(*d, a, ta);
      for (std::size_t i = 0; i < k; ++i)
        tc[i] = ta[i] == 0 ? 0 : d->factors[i] - ta[i];
      d->inv[a] = index_of_impl(*d, tc);
      for (int b = 0; b < d->order; ++b) {
        tuple_of_impl(*d, b, tb);
        for (std::size_t i = 0; i < k; ++i) tc[i] = (ta[i] + tb[i]) % d->factors[i];
        d->mul[static_cast<std::size_t>(a) * d->order + b] = index_of_impl(*d, tc);
      }
    }
    data_ = std::move(d);
  }

  const std::vector<int>& factors() const { return data_->factors; }
  int order() const { return data_->order; }
  int exponent() const { return data_->exponent; }
  std::size_t num_factors() const { return data_->factors.size(); }

  int op(int a, int b) const {
    return data_->mul[static_cast<std::size_t>(a) * data_->order + b];
  }
  int inverse(int a) const { return data_->inv[a]; }
  int identity() const { return 0; }

  int power(int a, long long e) const {
    const int n = order();
    long long r = e % n;
    if (r < 0) r += n;
    int acc = 0;
    for (long long i = 0; i < r; ++i) acc = op(acc, a);
    return acc;
  }

  int element_order(int a) const {
    int k = 1, x = a;
    while (x != 0) { x = op(x, a); ++k; }
    return k;
  }

  std::vector<int> tuple_of(int id) const {
    std::vector<int> t(num_factors());
    tuple_of_impl(*data_, id, t);
    return t;
  }

  int index_of(const std::vector<int>& t) const {
    if (t.size() != num_factors())
      throw std::invalid_argument("element tuple length mismatch");
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] < 0 || t[i] >= data_->factors[i])
        throw std::invalid_argument("element exponent out of range");
    return index_of_impl(*data_, t);
  }

  bool same_group(const FiniteAbelianGroup& o) const {
    return data_ == o.data_ || data_->factors == o.data_->factors;
  }

  std::string describe() const {
    std::string s;
    for (std::size_t i = 0; i < num_factors(); ++i) {
      if (i) s += "x";
      s += "C" + std::to_string(data_->factors[i]);
    }
    return s;
  }

 private:
  struct Data {
    std::vector<int> factors;
    std::vector<int> strides;
    int order = 1;
    int exponent = 1;
    std::vector<int> mul;
    std::vector<int> inv;
  };

  static void tuple_of_impl(const Data& d, int id, std::vector<int>& t) {
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      t[i] = id / d.strides[i];
      id %= d.strides[i];
    }
  }
  static int index_of_impl(const Data& d, const std::vector<int>& t) {
    int id = 0;
    for (std::size_t i = 0; i < d.factors.size(); ++i) id += t[i] * d.strides[i];
    return id;
  }

  std::shared_ptr<const Data> data_;
};

// A subgroup stored by its full sorted element enumeration (desk scale).
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(FiniteAbelianGroup parent, std::vector<int> generators,
           std::vector<int> sorted_elements)
      : parent_(std::move(parent)),
        generators_(std::move(generators)),
        elements_(std::move(sorted_elements)) {}

  const FiniteAbelianGroup& parent() const { return parent_; }
  const std::vector<int>& generators() const { return generators_; }
  const std::vector<int>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool is_trivial() const { return elements_.size() == 1; }

  bool contains(int id) const {
    return std::binary_search(elements_.begin(), elements_.end(), id);
  }

  bool contains_subgroup(const Subgroup& other) const {
    for (int e : other.elements())
      if (!contains(e)) return false;
    return true;
  }

  bool operator==(const Subgroup& o) const {
    return parent_.same_group(o.parent_) && elements_ == o.elements_;
  }

 private:
  FiniteAbelianGroup parent_;
  std::vector<int> generators_;
  std::vector<int> elements_;
};

// Smallest subgroup containing the given generators (ids must be valid).
inline Subgroup subgroup_generated(const FiniteAbelianGroup& g,
                                   const std::vector<int>& gens) {
  std::vector<char> seen(g.order(), 0);
  seen[g.identity()] = 1;
  std::vector<int> frontier = {g.identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int s : gens) {
        if (s < 0 || s >= g.order())
          throw std::invalid_argument("subgroup_generated: bad element id");
        int y = g.op(x, s);
        if (!seen[y]) { seen[y] = 1; next.push_back(y); }
      }
    frontier = std::move(next);
  }
  std::vector<int> elems;
  for (int i = 0; i < g.order(); ++i)
    if (seen[i]) elems.push_back(i);
  return Subgroup(g, gens, std::move(elems));
}

inline Subgroup subgroup_from_tuples(const FiniteAbelianGroup& g,
                                     const std::vector<std::vector<int>>& gens) {
  std::vector<int> ids;
  ids.reserve(gens.size());
  for (const auto& t : gens) ids.push_back(g.index_of(t));
  return subgroup_generated(g, ids);
}

inline Subgroup trivial_subgroup(const FiniteAbelianGroup& g) {
  return subgroup_generated(g, {});
}

inline Subgroup full_subgroup(const FiniteAbelianGroup& g) {
  std::vector<int> gens;
  std::vector<int> t(g.num_factors(), 0);
  for (std::size_t i = 0; i < g.num_factors(); ++i) {
    if (g.factors()[i] == 1) continue;
    std::fill(t.begin(), t.end(), 0);
    t[i] = 1;
    gens.push_back(g.index_of(t));
  }
  return subgroup_generated(g, gens);
}

namespace detail {

// Preimage lattice of a subgroup in Z^k (contains diag(n_i) Z^k), in HNF.
inline IntMat preimage_lattice(const Subgroup& h) {
  const auto& g = h.parent();
  const std::size_t k = g.num_factors();
  HnfBuilder b(k);
  for (int e : h.elements()) {
    auto t = g.tuple_of(e);
    std::vector<Int> row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = t[i];
    b.add(std::move(row));
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Int> row(k, Int(0));
    row[i] = g.factors()[i];
    b.add(std::move(row));
  }
  return b.finish();
}

}  // namespace detail

// Internal direct-sum structure of a subgroup: generators g_i of pairwise
// independent cyclic factors with orders d_1 | d_2 | ... (ascending),
// computed from the Smith normal form of the relation lattice.
inline std::vector<std::pair<int, Int>> abelian_structure(const Subgroup& h) {
  const auto& g = h.parent();
  const std::size_t k = g.num_factors();
  IntMat basis = detail::preimage_lattice(h);  // k x k, full rank
  // diag(n) = C * basis for an integral C
  IntMat c(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Int> v(k, Int(0));
    v[i] = g.factors()[i];
    auto coords = hnf_coordinates(basis, v);
    if (!coords) throw std::logic_error("abelian_structure: relation lattice broken");
    c.set_row(i, *coords);
  }
  SnfResult s = snf(c);
  // generator of the i-th cyclic factor: (row i of Vinv) * basis, mod n
  std::vector<std::pair<int, Int>> out;
  for (std::size_t i = 0; i < k; ++i) {
    if (s.divisors[i] == 1) continue;
    std::vector<int> t(k);
    for (std::size_t j = 0; j < k; ++j) {
      Int acc = 0;
      for (std::size_t l = 0; l < k; ++l) acc += s.vinv.at(i, l) * basis.at(l, j);
      Int m = acc % g.factors()[j];
      if (m < 0) m += g.factors()[j];
      t[j] = static_cast<int>(m);
    }
    out.emplace_back(g.index_of(t), s.divisors[i]);
  }
  return out;
}

// Invariant factors of a subgroup in decreasing order (empty for trivial).
inline std::vector<int> invariant_factors(const Subgroup& h) {
  auto parts = abelian_structure(h);
  std::vector<int> out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it)
    out.push_back(static_cast<int>(it->second));
  return out;
}

inline bool is_cyclic(const Subgroup& h) { return invariant_factors(h).size() <= 1; }

// Number of invariant factors of the p-Sylow subgroup.
inline int p_rank(const Subgroup& h, int p) {
  int r = 0;
  for (int d : invariant_factors(h))
    if (d % p == 0) ++r;
  return r;
}

// A decomposition of a subgroup into an internal direct product of cyclic
// parts (generator, order); trivial parts with order 1 are permitted.
struct CyclicDecomposition {
  Subgroup subgroup;
  std::vector<std::pair<int, int>> parts;  // (generator id in the parent, order)

  std::size_t size() const { return parts.size(); }
};

// Checks the internal direct product property by enumeration.
inline bool decomposition_is_valid(const CyclicDecomposition& d) {
  long long prod = 1;
  for (auto& [gen, ord] : d.parts) {
    if (d.subgroup.parent().element_order(gen) != ord) return false;
    prod *= ord;
  }
  if (prod != d.subgroup.order()) return false;
  const auto& g = d.subgroup.parent();
  std::vector<char> seen(g.order(), 0);
  std::vector<int> idx(d.parts.size(), 0);
  long long count = 0;
  for (;;) {
    int x = g.identity();
    for (std::size_t l = 0; l < d.parts.size(); ++l)
      x = g.op(x, g.power(d.parts[l].first, idx[l]));
    if (seen[x] || !d.subgroup.contains(x)) return false;
    seen[x] = 1;
    ++count;
    std::size_t l = 0;
    while (l < d.parts.size() && ++idx[l] == d.parts[l].second) idx[l++] = 0;
    if (l == d.parts.size()) break;
  }
  return count == d.subgroup.order();
}

// Canonical decomposition: invariant factors, decreasing orders; a trivial
// subgroup gets a single trivial part so downstream block constructions
// always see s >= 1. pad_to appends trivial parts.
inline CyclicDecomposition cyclic_decomposition(
    const Subgroup& h, std::optional<std::size_t> pad_to = std::nullopt) {
  auto structure = abelian_structure(h);
  CyclicDecomposition d;
  d.subgroup = h;
  for (auto it = structure.rbegin(); it != structure.rend(); ++it)
    d.parts.emplace_back(it->first, static_cast<int>(it->second));
  if (d.parts.empty()) d.parts.emplace_back(h.parent().identity(), 1);
  if (pad_to) {
    if (*pad_to < d.parts.size())
      throw std::invalid_argument("pad_to smaller than the minimal factor count");
    while (d.parts.size() < *pad_to)
      d.parts.emplace_back(h.parent().identity(), 1);
  }
  return d;
}

// p-Sylow subgroup and its complement; G = G_p x G' internally.
inline std::pair<Subgroup, Subgroup> sylow_split(const FiniteAbelianGroup& g, int p) {
  std::vector<int> gens_p, gens_prime;
  std::vector<int> t(g.num_factors(), 0);
  for (std::size_t i = 0; i < g.num_factors(); ++i) {
    int n = g.factors()[i];
    int pe = 1;
    while (n % p == 0) { n /= p; pe *= p; }
    // factor i = C_{pe} x C_{n}; CRT generators
    std::fill(t.begin(), t.end(), 0);
    if (pe > 1) { t[i] = n; gens_p.push_back(g.index_of(t)); }
    std::fill(t.begin(), t.end(), 0);
    if (n > 1) { t[i] = pe; gens_prime.push_back(g.index_of(t)); }
  }
  return {subgroup_generated(g, gens_p), subgroup_generated(g, gens_prime)};
}

inline bool is_p_group(const Subgroup& h, int p) {
  int n = h.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

// Quotient group G/H, presented by invariant factors (decreasing), with the
// projection tabulated on element ids.
struct QuotientGroup {
  FiniteAbelianGroup group;
  std::vector<int> proj;  // parent element id -> quotient element id

  int operator()(int parent_id) const { return proj[parent_id]; }
};

inline QuotientGroup quotient_group(const FiniteAbelianGroup& g, const Subgroup& h) {
  if (!h.parent().same_group(g))
    throw std::invalid_argument("quotient_group: subgroup of a different group");
  const std::size_t k = g.num_factors();
  IntMat basis = detail::preimage_lattice(h);
  SnfResult s = snf(basis);  // U * basis * V = D; quotient = Z^k / rows(basis)
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k; ++i)
    if (s.divisors[i] != 1) keep.push_back(i);
  std::vector<int> qfactors;
  for (auto it = keep.rbegin(); it != keep.rend(); ++it)
    qfactors.push_back(static_cast<int>(s.divisors[*it]));
  QuotientGroup q;
  q.group = FiniteAbelianGroup(qfactors.empty() ? std::vector<int>{1} : qfactors);
  q.proj.resize(g.order());
  // y mod rows(basis) corresponds to (y * V) mod D with V = vinv^{-1};
  // vinv is unimodular, so its inverse is integral (adjugate; k is tiny).
  IntMat v(k, k);
  {
    Int d = det(s.vinv);
    if (d != 1 && d != -1) throw std::logic_error("quotient_group: vinv not unimodular");
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        IntMat minor_m(k - 1, k - 1);
        for (std::size_t r = 0, rr = 0; r < k; ++r) {
          if (r == j) continue;
          for (std::size_t c = 0, cc = 0; c < k; ++c) {
            if (c == i) continue;
            minor_m.at(rr, cc) = s.vinv.at(r, c);
            ++cc;
          }
          ++rr;
        }
        Int cof = det(minor_m);
        if ((i + j) % 2 == 1) cof = -cof;
        v.at(i, j) = cof / d;
      }
  }
  for (int id = 0; id < g.order(); ++id) {
    auto t = g.tuple_of(id);
    std::vector<int> qt;
    for (auto it = keep.rbegin(); it != keep.rend(); ++it) {
      Int acc = 0;
      for (std::size_t j = 0; j < k; ++j) acc += Int(t[j]) * v.at(j, *it);
      Int m = acc % s.divisors[*it];
      if (m < 0) m += s.divisors[*it];
      qt.push_back(static_cast<int>(m));
    }
    if (qt.empty()) qt = {0};
    q.proj[id] = q.group.index_of(qt);
  }
  return q;
}

// A subgroup re-presented as a finite abelian group in its own right, with
// maps to and from the ambient group.
struct EmbeddedGroup {
  FiniteAbelianGroup group;
  std::vector<int> to_parent;    // own id -> parent id
  std::vector<int> from_parent;  // parent id -> own id, -1 outside

  int lift(int own_id) const { return to_parent[own_id]; }
  int restrict_id(int parent_id) const {
    int r = from_parent[parent_id];
    if (r < 0) throw std::invalid_argument("element not in subgroup");
    return r;
  }
};

inline EmbeddedGroup subgroup_as_group(const Subgroup& h) {
  auto decomp = cyclic_decomposition(h);
  std::vector<int> factors;
  for (auto& [gen, ord] : decomp.parts) factors.push_back(ord);
  EmbeddedGroup e;
  e.group = FiniteAbelianGroup(factors);
  e.to_parent.resize(e.group.order());
  e.from_parent.assign(h.parent().order(), -1);
  const auto& g = h.parent();
  for (int id = 0; id < e.group.order(); ++id) {
    auto t = e.group.tuple_of(id);
    int x = g.identity();
    for (std::size_t l = 0; l < decomp.parts.size(); ++l)
      x = g.op(x, g.power(decomp.parts[l].first, t[l]));
    e.to_parent[id] = x;
    e.from_parent[x] = id;
  }
  return e;
}

// Enumerates every subgroup of G, deterministically ordered by
// (order, element set).
inline std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g) {
  std::vector<std::vector<int>> seen_sets;
  std::vector<Subgroup> out;
  std::vector<Subgroup> frontier = {trivial_subgroup(g)};
  seen_sets.push_back(frontier[0].elements());
  out.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : frontier) {
      for (int x = 0; x < g.order(); ++x) {
        if (h.contains(x)) continue;
        std::vector<int> gens = h.generators();
        gens.push_back(x);
        Subgroup bigger = subgroup_generated(g, gens);
        if (std::find(seen_sets.begin(), seen_sets.end(), bigger.elements()) !=
            seen_sets.end())
          continue;
        seen_sets.push_back(bigger.elements());
        out.push_back(bigger);
        next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

// The local datum the whole library revolves around: subgroups I <= D of G
// with D/I cyclic, a chosen lift of a generator of D/I, and a cyclic
// decomposition of I.
struct InertiaConfig {
  FiniteAbelianGroup G;
  Subgroup I;
  Subgroup D;
  int phi_lift = 0;  // element of D whose coset generates D/I
  CyclicDecomposition decomposition;

  std::size_t s() const { return decomposition.size(); }
  int inertia_order() const { return I.order(); }
};

inline InertiaConfig make_config(
    const FiniteAbelianGroup& g, const Subgroup& inertia, const Subgroup& decomp_grp,
    int phi_lift,
    std::optional<std::vector<std::pair<int, int>>> decomposition_parts = std::nullopt) {
  if (!decomp_grp.contains_subgroup(inertia))
    throw std::invalid_argument("config: I not contained in D");
  if (!decomp_grp.contains(phi_lift))
    throw std::invalid_argument("config: frobenius lift not in D");
  // D/I cyclic generated by the coset of phi_lift  <=>  <I, phi_lift> = D
  std::vector<int> gens = inertia.generators();
  gens.push_back(phi_lift);
  if (subgroup_generated(g, gens).elements() != decomp_grp.elements())
    throw std::invalid_argument("config: coset of the lift does not generate D/I");
  InertiaConfig cfg;
  cfg.G = g;
  cfg.I = inertia;
  cfg.D = decomp_grp;
  cfg.phi_lift = phi_lift;
  if (decomposition_parts) {
    cfg.decomposition.subgroup = inertia;
    cfg.decomposition.parts = *decomposition_parts;
    if (!decomposition_is_valid(cfg.decomposition))
      throw std::invalid_argument("config: invalid cyclic decomposition of I");
  } else {
    cfg.decomposition = cyclic_decomposition(inertia);
  }
  return cfg;
}

}  // namespace fitkit
