#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fitkit {

// Exact arbitrary-precision integers. All lattice arithmetic in this
// library is unconditional: no modular shortcuts, no word-size tricks.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

// Extended gcd: returns g = gcd(a,b) >= 0 with g = x*a + y*b.
inline Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_x = 1, cur_x = 0;
  Int old_y = 0, cur_y = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t;
    t = old_r - q * r; old_r = r; r = t;
    t = old_x - q * cur_x; old_x = cur_x; cur_x = t;
    t = old_y - q * cur_y; old_y = cur_y; cur_y = t;
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  x = old_x;
  y = old_y;
  return old_r;
}

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

// Largest e with p^e dividing n (n != 0).
inline int p_valuation(Int n, const Int& p) {
  if (n == 0) throw std::invalid_argument("p_valuation of zero");
  n = abs_int(n);
  int e = 0;
  while (n % p == 0) { n /= p; ++e; }
  return e;
}

inline std::string to_string(const Int& a) { return a.str(); }

inline Int int_from_string(const std::string& s) { return Int(s); }

}  // namespace fitkit
