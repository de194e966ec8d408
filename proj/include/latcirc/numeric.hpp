#pragma once

// Arbitrary-precision integer utilities shared by the whole library.
// Everything here is exact; there is no floating point anywhere below.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latcirc {

using Int = boost::multiprecision::cpp_int;

inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

// gcd of absolute values; igcd(0, 0) = 0
inline Int igcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(iabs(a), iabs(b));
}

inline Int ilcm(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(iabs(a), iabs(b));
}

// canonical residue in [0, m), m > 0
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Int div_exact(const Int& a, const Int& b) {
  if (b == 0 || a % b != 0) throw std::logic_error("div_exact: inexact division");
  return a / b;
}

inline Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

struct Egcd {
  Int g, x, y;  // a*x + b*y = g, g >= 0
};

inline Egcd extended_gcd(const Int& a, const Int& b) {
  Int old_r = iabs(a), r = iabs(b);
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (a < 0) old_s = -old_s;
  if (b < 0) old_t = -old_t;
  return {old_r, old_s, old_t};
}

inline Int inv_mod(const Int& a, const Int& m) {
  Egcd e = extended_gcd(mod_floor(a, m), m);
  if (e.g != 1) throw std::domain_error("inv_mod: arguments are not coprime");
  return mod_floor(e.x, m);
}

// Deterministic Miller-Rabin; the witness set is exact for everything far
// beyond the ranges this library touches.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = boost::multiprecision::powm(Int(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 0; i + 1 < r && witness; ++i) {
      x = x * x % n;
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

// all primes <= n, ascending
inline std::vector<long long> primes_upto(long long n) {
  std::vector<long long> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (long long i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (long long j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

// all primes in [lo, hi], ascending
inline std::vector<long long> primes_in_range(long long lo, long long hi) {
  std::vector<long long> out;
  if (hi < 2 || hi < lo) return out;
  std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
  for (long long i = 2; i <= hi; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    if (i >= lo) out.push_back(i);
    for (long long j = i * i; j <= hi; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

// prime factorization by trial division, exponents collected
inline std::vector<std::pair<Int, unsigned>> factorize(Int n) {
  if (n <= 0) throw std::invalid_argument("factorize requires a positive value");
  std::vector<std::pair<Int, unsigned>> out;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  for (Int p = 3; p * p <= n; p += 2) {
    if (n == 1 || is_prime(n)) break;
    strip(p);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// all positive divisors, ascending
inline std::vector<Int> divisors(const Int& n) {
  std::vector<Int> out{1};
  for (const auto& [p, e] : factorize(n)) {
    std::size_t base = out.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Congruence {
  Int r, m;  // x = r (mod m)
};

// Simultaneous solution for pairwise coprime moduli, in [0, prod m).
inline Int crt_solve(const std::vector<Congruence>& eqs, Int* modulus_out = nullptr) {
  Int x = 0, modulus = 1;
  for (const auto& eq : eqs) {
    if (eq.m < 1) throw std::invalid_argument("crt_solve: modulus must be positive");
    Int t = mod_floor((eq.r - x) * inv_mod(modulus, eq.m), eq.m);
    x += modulus * t;
    modulus *= eq.m;
  }
  if (modulus_out) *modulus_out = modulus;
  return x;
}

}  // namespace latcirc
