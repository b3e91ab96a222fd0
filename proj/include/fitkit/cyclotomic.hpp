#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "fitkit/bigint.hpp"

namespace fitkit {

namespace detail {

// Exact division of integer polynomials (coefficients ascending).
inline std::vector<Int> poly_divide_exact(std::vector<Int> num,
                                          const std::vector<Int>& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  std::vector<Int> d = den;
  while (!d.empty() && d.back() == 0) d.pop_back();
  if (d.empty()) throw std::invalid_argument("poly division by zero");
  if (num.empty()) return {};
  if (num.size() < d.size()) throw std::invalid_argument("poly division not exact");
  std::vector<Int> q(num.size() - d.size() + 1, Int(0));
  for (std::size_t i = q.size(); i-- > 0;) {
    Int lead = num[i + d.size() - 1];
    if (lead % d.back() != 0) throw std::invalid_argument("poly division not exact");
    Int c = lead / d.back();
    q[i] = c;
    if (c != 0)
      for (std::size_t j = 0; j < d.size(); ++j) num[i + j] -= c * d[j];
  }
  for (const auto& r : num)
    if (r != 0) throw std::invalid_argument("poly division left a remainder");
  return q;
}

}  // namespace detail

// m-th cyclotomic polynomial, coefficients ascending; memoized.
inline const std::vector<Int>& cyclotomic_polynomial(int m) {
  static std::map<int, std::vector<Int>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  if (m < 1) throw std::invalid_argument("cyclotomic conductor must be >= 1");
  std::function<std::vector<Int>(int)> compute = [&](int n) -> std::vector<Int> {
    auto hit = cache.find(n);
    if (hit != cache.end()) return hit->second;
    std::vector<Int> num(n + 1, Int(0));  // x^n - 1
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
      if (n % d == 0) num = detail::poly_divide_exact(num, compute(d));
    cache[n] = num;
    return num;
  };
  compute(m);
  return cache.at(m);
}

// An element of Z[zeta_m], stored as a polynomial in zeta_m reduced modulo
// the m-th cyclotomic polynomial. Coefficient vector has length deg Phi_m.
class CyclotomicInt {
 public:
  CyclotomicInt() : m_(1), coeffs_(1, Int(0)) {}

  explicit CyclotomicInt(int conductor)
      : m_(conductor),
        coeffs_(cyclotomic_polynomial(conductor).size() - 1, Int(0)) {}

  static CyclotomicInt from_integer(int conductor, const Int& n) {
    CyclotomicInt c(conductor);
    if (!c.coeffs_.empty()) c.coeffs_[0] = n;
    else if (n != 0) throw std::logic_error("degree-0 cyclotomic ring");
    return c;
  }

  // zeta_m^e
  static CyclotomicInt root_power(int conductor, long long e) {
    CyclotomicInt c(conductor);
    long long r = e % conductor;
    if (r < 0) r += conductor;
    std::vector<Int> poly(static_cast<std::size_t>(r) + 1, Int(0));
    poly.back() = 1;
    c.coeffs_ = reduce(conductor, poly);
    return c;
  }

  int conductor() const { return m_; }
  std::size_t degree() const { return coeffs_.size(); }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  CyclotomicInt& operator+=(const CyclotomicInt& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  CyclotomicInt& operator-=(const CyclotomicInt& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }

  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
    a.check(b);
    CyclotomicInt out(a.m_);
    if (a.coeffs_.empty()) return out;
    std::vector<Int> prod(2 * a.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j] == 0) continue;
        prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    out.coeffs_ = reduce(a.m_, prod);
    return out;
  }

  CyclotomicInt operator*(const Int& c) const {
    CyclotomicInt out = *this;
    for (auto& x : out.coeffs_) x *= c;
    return out;
  }

  CyclotomicInt operator-() const {
    CyclotomicInt out = *this;
    for (auto& x : out.coeffs_) x = -x;
    return out;
  }

  bool operator==(const CyclotomicInt& o) const {
    return m_ == o.m_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }

  // Accumulate c * zeta^e without intermediate allocation churn.
  void add_root_multiple(const Int& c, long long e) {
    *this += root_power(m_, e) * c;
  }

  // Image under Z[zeta_d] -> Z[zeta_m] for d | m (zeta_d = zeta_m^{m/d}).
  CyclotomicInt embed(int m) const {
    if (m % m_ != 0) throw std::invalid_argument("embed: conductor does not divide target");
    CyclotomicInt out(m);
    const int step = m / m_;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0)
        out += root_power(m, static_cast<long long>(i) * step) * coeffs_[i];
    return out;
  }

  // Reduce a raw polynomial in zeta_m modulo Phi_m.
  static std::vector<Int> reduce(int m, std::vector<Int> poly) {
    const auto& phi = cyclotomic_polynomial(m);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
      if (poly[i] == 0) continue;
      Int c = poly[i];  // phi is monic
      for (std::size_t j = 0; j < phi.size(); ++j) poly[i - deg + j] -= c * phi[j];
    }
    poly.resize(deg);
    return poly;
  }

 private:
  void check(const CyclotomicInt& o) const {
    if (m_ != o.m_) throw std::invalid_argument("cyclotomic conductor mismatch");
  }

  int m_;
  std::vector<Int> coeffs_;
};

}  // namespace fitkit
