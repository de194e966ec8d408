#pragma once

// Checkable evidence for spectrum claims.  A positive claim ships the circle
// itself; a negative claim ships either a point pair whose distance the
// radius fails to divide, or a prime torus covered by the divided set
// together with one witness point per cell.  verify_certificate re-derives
// everything from scratch and never trusts the producer.

#include "latcirc/tori.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace latcirc {

// positive rational in lowest terms
struct ReducedFraction {
  Int num = 1, den = 1;

  ReducedFraction() = default;

  ReducedFraction(const Int& n, const Int& d) {
    if (n < 1 || d < 1)
      throw std::invalid_argument("ReducedFraction: numerator and denominator must be positive");
    Int g = igcd(n, d);
    num = n / g;
    den = d / g;
  }

  friend bool operator==(const ReducedFraction& a, const ReducedFraction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const ReducedFraction& a, const ReducedFraction& b) { return !(a == b); }
  friend bool operator<(const ReducedFraction& a, const ReducedFraction& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend std::ostream& operator<<(std::ostream& os, const ReducedFraction& f) {
    return os << f.num << "/" << f.den;
  }
};

// The set of rational circumscribed radii of a finite set is exactly
// { g / (c * tau) : c = 1, 2, 3, ... } for two integers computed from the
// set: g the shift divisor gcd and tau the product of the primes whose tori
// the primitive reduction covers.  This struct is that description.
struct RationalSpectrum {
  Int g = 1, tau = 1;

  bool contains(const ReducedFraction& f) const {
    Int c_times = f.den * g;  // equals c * (f.num * tau) when f is a member
    Int unit = f.num * tau;
    return c_times % unit == 0 && c_times >= unit;
  }

  ReducedFraction max() const { return {g, tau}; }

  friend bool operator==(const RationalSpectrum& a, const RationalSpectrum& b) {
    return a.g == b.g && a.tau == b.tau;
  }
  friend std::ostream& operator<<(std::ostream& os, const RationalSpectrum& s) {
    return os << "{ " << s.g << "/(" << s.tau << "c) : c = 1, 2, 3, ... }";
  }
};

// radius r is realized: every point of the set lies on the circle
struct CertYes {
  IntegerCircle circle;

  friend bool operator==(const CertYes& a, const CertYes& b) { return a.circle == b.circle; }
};

// radius r is refuted: r does not divide the distance from a to b
struct CertNoDivisibility {
  LatticePoint a, b;
  Int r;

  friend bool operator==(const CertNoDivisibility& x, const CertNoDivisibility& y) {
    return x.a == y.a && x.b == y.b && x.r == y.r;
  }
};

struct CoveringWitness {
  TorusResidue residue;
  LatticePoint point;  // element of divide(s, r) projecting onto residue

  friend bool operator==(const CoveringWitness& a, const CoveringWitness& b) {
    return a.residue == b.residue && a.point == b.point;
  }
};

// radius r is refuted: divide(s, r) covers the torus of this prime, one
// witness point per cell
struct CertNoCovering {
  Int prime;
  std::vector<CoveringWitness> witnesses;

  friend bool operator==(const CertNoCovering& a, const CertNoCovering& b) {
    return a.prime == b.prime && a.witnesses == b.witnesses;
  }
};

using Certificate = std::variant<CertYes, CertNoDivisibility, CertNoCovering>;

// Full independent re-check of a certificate against (s, r).  Malformed or
// inapplicable certificates yield false; this function never throws.
inline bool verify_certificate(const PointSet& s, const Int& r, const Certificate& cert) {
  try {
    if (r < 1 || s.empty()) return false;
    if (const auto* yes = std::get_if<CertYes>(&cert)) {
      if (yes->circle.radius != r) return false;
      for (const auto& p : s)
        if (!circle_contains(yes->circle, p)) return false;
      return true;
    }
    if (const auto* nd = std::get_if<CertNoDivisibility>(&cert)) {
      if (nd->r != r) return false;
      if (!s.contains(nd->a) || !s.contains(nd->b)) return false;
      return int_distance(nd->a, nd->b) % r != 0;
    }
    const auto& nc = std::get<CertNoCovering>(cert);
    if (nc.prime < 2 || !is_prime(nc.prime)) return false;
    if (!is_shift_divisible(s, r)) return false;
    PointSet quotient = divide(s, r);
    std::set<std::pair<Int, Int>> cells;
    for (const auto& w : nc.witnesses) {
      if (w.residue.m != nc.prime) return false;
      if (!quotient.contains(w.point)) return false;
      if (!(project(w.point, nc.prime) == w.residue)) return false;
      cells.emplace(w.residue.rx, w.residue.ry);
    }
    return Int(cells.size()) == nc.prime * nc.prime;
  } catch (...) {
    return false;
  }
}

// Refutation search for radius r: a non-divisible pair if one exists, else a
// covered prime torus of the quotient with witnesses, else nothing (r is then
// a circumscribed radius).  The returned certificate always verifies.
inline std::optional<Certificate> find_refutation(const PointSet& s, const Int& r) {
  if (r < 1) throw std::invalid_argument("find_refutation: radius must be positive");
  if (s.empty()) throw std::invalid_argument("find_refutation: empty set");
  const LatticePoint& a = s.anchor();
  for (const auto& p : s) {
    if ((p.x - a.x) % r != 0 || (p.y - a.y) % r != 0)
      return Certificate(CertNoDivisibility{a, p, r});
  }
  PointSet quotient = divide(s, r);
  std::vector<Int> primes = covering_primes(quotient);
  if (primes.empty()) return std::nullopt;
  const Int& t = primes.front();
  std::set<std::pair<Int, Int>> seen;
  std::vector<CoveringWitness> witnesses;
  for (const auto& p : quotient) {
    TorusResidue res = project(p, t);
    if (seen.emplace(res.rx, res.ry).second) witnesses.push_back({res, p});
  }
  std::sort(witnesses.begin(), witnesses.end(),
            [](const CoveringWitness& x, const CoveringWitness& y) {
              return x.residue < y.residue;
            });
  return Certificate(CertNoCovering{t, std::move(witnesses)});
}

}  // namespace latcirc
