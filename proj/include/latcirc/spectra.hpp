#pragma once

// Circumscribed radius spectra.  For a finite set with at least two points,
// write it as anchor + g * reduced with reduced primitive; let tau be the
// product of the primes whose tori the reduced set covers.  Then the
// rational radii are exactly g/(c*tau) for positive integers c, and the
// integer radii are the divisors of g/tau (none when tau does not divide g).
// Every membership answer is backed by a certificate: the circle itself or a
// refutation that verify_certificate accepts.

#include "latcirc/construct.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace latcirc {

inline RationalSpectrum rational_spectrum(const PointSet& s) {
  if (s.size() < 2)
    throw std::invalid_argument("rational_spectrum: need at least two points");
  PrimitiveDecomposition d = primitive_decomposition(s);
  Int tau = 1;
  for (const Int& t : covering_primes(d.reduced)) tau *= t;
  return {d.scale, tau};
}

// all integer circumscribed radii, ascending
inline std::vector<Int> integer_spectrum(const PointSet& s) {
  RationalSpectrum sp = rational_spectrum(s);
  if (sp.g % sp.tau != 0) return {};
  return divisors(sp.g / sp.tau);
}

inline ReducedFraction max_radius(const PointSet& s) { return rational_spectrum(s).max(); }

// decision plus evidence: (true, circle) or (false, refutation), with the
// certificate verified before it is handed out
inline std::pair<bool, Certificate> has_radius(const PointSet& s, const Int& r) {
  if (r < 1) throw std::invalid_argument("has_radius: radius must be positive");
  if (s.size() < 2) throw std::invalid_argument("has_radius: need at least two points");
  if (auto refutation = find_refutation(s, r)) {
    if (!verify_certificate(s, r, *refutation))
      throw std::logic_error("has_radius: refutation fails verification");
    return {false, std::move(*refutation)};
  }
  Certificate yes(CertYes{center_for_radius(s, r)});
  if (!verify_certificate(s, r, yes))
    throw std::logic_error("has_radius: circle certificate fails verification");
  return {true, std::move(yes)};
}

// p/q is a circumscribed radius iff q*s admits the integer radius p
inline bool has_rational_radius(const PointSet& s, const ReducedFraction& r) {
  if (s.size() < 2)
    throw std::invalid_argument("has_rational_radius: need at least two points");
  bool direct = has_radius(scaled(s, r.den), r.num).first;
  bool via_spectrum = rational_spectrum(s).contains(r);
  if (direct != via_spectrum)
    throw std::logic_error("has_rational_radius: decision disagrees with the spectrum formula");
  return direct;
}

// integer radii are closed under lcm; both arguments must already be members
inline bool lcm_closure_check(const PointSet& s, const Int& a, const Int& b) {
  std::vector<Int> spec = integer_spectrum(s);
  auto member = [&](const Int& v) {
    for (const Int& x : spec)
      if (x == v) return true;
    return false;
  };
  if (!member(a) || !member(b))
    throw std::invalid_argument("lcm_closure_check: arguments must be spectrum members");
  return has_radius(s, ilcm(a, b)).first;
}

// product of all primes <= d
inline Int primorial(const Int& d) {
  if (d < 1) throw std::invalid_argument("primorial: argument must be positive");
  Int out = 1;
  for (long long p : primes_upto(d.convert_to<long long>())) out *= p;
  return out;
}

// 1 over the primorial of floor(sqrt(|s|)) is always a circumscribed radius
inline bool primorial_member_check(const PointSet& s) {
  if (s.size() < 2)
    throw std::invalid_argument("primorial_member_check: need at least two points");
  Int d = isqrt(Int(s.size()));
  ReducedFraction r(Int(1), primorial(d < 1 ? Int(1) : d));
  return has_rational_radius(s, r);
}

}  // namespace latcirc
