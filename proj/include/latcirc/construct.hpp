#pragma once

// Center construction.  A tori-transparent set always admits a point at
// gcd-distance exactly 1 from all of its members; this file produces one,
// either by a bounded deterministic search near the set or by an explicit
// residue construction that works unconditionally:
//
//   1. translate the set into the strictly positive quadrant,
//   2. pick N at least 3, the largest coordinate and the set size,
//   3. choose (a, b) avoiding the set's residues modulo every m in [2, N],
//   4. put beta = b + lcm(1..N) and pick, for every prime in (N, beta], a
//      residue missed by all first coordinates,
//   5. solve the simultaneous congruences for alpha; (alpha, beta) then
//      differs from every set point by a pair of coprime coordinates.
//
// The trace of these choices is returned so callers can audit each range of
// moduli separately.

#include "latcirc/certificates.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace latcirc {

struct CoveringPrimeError : std::runtime_error {
  Int prime;

  explicit CoveringPrimeError(Int p)
      : std::runtime_error("set covers the torus of prime " + p.str()), prime(std::move(p)) {}
};

struct TraceTooLargeError : std::runtime_error {
  Int n;

  TraceTooLargeError(Int n_, const Int& cap)
      : std::runtime_error("lcm(1.." + n_.str() + ") exceeds the modulus cap " + cap.str()),
        n(std::move(n_)) {}
};

struct NoCircleError : std::runtime_error {
  Certificate refutation;

  explicit NoCircleError(Certificate c)
      : std::runtime_error("no integer circumscribed circle of the requested radius"),
        refutation(std::move(c)) {}
};

// Smallest point (lexicographically per prime) whose residue differs from
// every set residue modulo each given modulus.  Scanning per prime divisor
// suffices, and the per-coordinate congruences are then glued together.
// Throws CoveringPrimeError when some prime torus is fully covered.
inline LatticePoint avoid_residues(const PointSet& s, const std::vector<Int>& moduli) {
  if (s.empty()) throw std::invalid_argument("avoid_residues: empty set");
  std::set<Int> primes;
  for (const auto& m : moduli) {
    if (m < 2) throw std::invalid_argument("avoid_residues: moduli must be at least 2");
    for (const auto& [p, e] : factorize(m)) primes.insert(p);
  }
  std::vector<Congruence> xs, ys;
  for (const Int& p : primes) {
    std::map<Int, std::set<Int>> columns;  // residue x -> set of residues y
    for (const auto& q : s) columns[mod_floor(q.x, p)].insert(mod_floor(q.y, p));
    Int cx = -1, cy = -1;
    for (Int i = 0; i < p; ++i) {
      auto it = columns.find(i);
      if (it == columns.end()) {
        cx = i;
        cy = 0;
        break;
      }
      if (Int(it->second.size()) < p) {
        cx = i;
        for (Int j = 0;; ++j) {
          if (!it->second.count(j)) {
            cy = j;
            break;
          }
        }
        break;
      }
    }
    if (cx < 0) throw CoveringPrimeError(p);
    xs.push_back({cx, p});
    ys.push_back({cy, p});
  }
  return {crt_solve(xs), crt_solve(ys)};
}

struct CrtOptions {
  // refuse the construction once lcm(1..N) would exceed this; the sieve over
  // (N, beta] is bounded by roughly twice the cap, so keep it moderate
  Int modulus_cap = 1000000;
};

// audit record of one run of the residue construction
struct CrtTrace {
  Int n;                            // N
  Int lcm_modulus;                  // lcm(1..N)
  LatticePoint avoided;             // (a, b), clear of all residues mod 2..N
  Int beta;                         // b + lcm(1..N), the second coordinate
  std::vector<Int> primes;          // primes in (N, beta]
  std::vector<Int> prime_residues;  // chosen residue per prime, dodging first coordinates
  Int alpha;                        // the first coordinate
  LatticeVector shift;              // translation applied to reach the positive quadrant
};

// Unconditional unit-distance center for a tori-transparent set, with the
// full choice trace.  Throws CoveringPrimeError when the set is not
// transparent and TraceTooLargeError when the run would blow the modulus cap.
inline std::pair<LatticePoint, CrtTrace> unit_center_crt(const PointSet& s,
                                                         const CrtOptions& opts = {}) {
  if (s.empty()) throw std::invalid_argument("unit_center_crt: empty set");
  {
    std::vector<Int> cov = covering_primes(s);
    if (!cov.empty()) throw CoveringPrimeError(cov.front());
  }
  BoundingBox box = bounding_box(s);
  LatticeVector shift{1 - box.minx, 1 - box.miny};
  PointSet sp = translated(s, shift);
  Int maxc = 1;
  for (const auto& p : sp) {
    if (p.x > maxc) maxc = p.x;
    if (p.y > maxc) maxc = p.y;
  }
  Int n = maxc > Int(3) ? maxc : Int(3);
  if (Int(sp.size()) > n) n = Int(sp.size());
  Int lcm_modulus = 1;
  for (Int i = 2; i <= n; ++i) {
    lcm_modulus = ilcm(lcm_modulus, i);
    if (lcm_modulus > opts.modulus_cap) throw TraceTooLargeError(n, opts.modulus_cap);
  }
  std::vector<Int> moduli;
  for (Int m = 2; m <= n; ++m) moduli.push_back(m);
  LatticePoint avoided = avoid_residues(sp, moduli);
  Int beta = avoided.y + lcm_modulus;

  std::vector<Int> primes, prime_residues;
  std::vector<Congruence> eqs{{avoided.x, lcm_modulus}};
  long long lo = (n + 1).convert_to<long long>();
  long long hi = beta.convert_to<long long>();
  for (long long t : primes_in_range(lo, hi)) {
    Int p(t);
    std::set<Int> hit;
    for (const auto& q : sp) hit.insert(mod_floor(q.x, p));
    Int c = 0;  // set size < p in this range, so a free residue exists
    while (hit.count(c)) ++c;
    primes.push_back(p);
    prime_residues.push_back(c);
    eqs.push_back({c, p});
  }
  Int alpha = crt_solve(eqs);
  for (const auto& q : sp) {
    if (igcd(alpha - q.x, beta - q.y) != 1)
      throw std::logic_error("unit_center_crt: constructed center fails verification");
  }
  LatticePoint center{alpha - shift.dx, beta - shift.dy};
  CrtTrace trace{n,     lcm_modulus,
                 avoided, beta,
                 std::move(primes), std::move(prime_residues),
                 alpha, shift};
  return {center, std::move(trace)};
}

// Deterministic bounded search for a unit-distance center: expanding rings
// around the bounding box, lexicographic within a ring, first hit wins.
inline std::optional<LatticePoint> unit_center_search(const PointSet& s, const Int& bound) {
  if (s.empty()) throw std::invalid_argument("unit_center_search: empty set");
  if (bound < 0) throw std::invalid_argument("unit_center_search: bound must be nonnegative");
  BoundingBox box = bounding_box(s);
  auto at_unit_distance = [&](const LatticePoint& c) {
    for (const auto& p : s)
      if (igcd(c.x - p.x, c.y - p.y) != 1) return false;
    return true;
  };
  for (Int d = 0; d <= bound; ++d) {
    for (Int x = box.minx - d; x <= box.maxx + d; ++x) {
      Int ex = x < box.minx ? box.minx - x : (x > box.maxx ? x - box.maxx : Int(0));
      for (Int y = box.miny - d; y <= box.maxy + d; ++y) {
        Int ey = y < box.miny ? box.miny - y : (y > box.maxy ? y - box.maxy : Int(0));
        if ((ex < ey ? ey : ex) != d) continue;
        LatticePoint c{x, y};
        if (at_unit_distance(c)) return c;
      }
    }
  }
  return std::nullopt;
}

// Circumscribed circle of the given radius.  Divides out r, finds a unit
// center of the quotient (bounded search first, residue construction as the
// unconditional fallback) and scales back.  Throws NoCircleError carrying a
// verified refutation certificate when no such circle exists.
inline IntegerCircle center_for_radius(const PointSet& s, const Int& r) {
  if (r < 1) throw std::invalid_argument("center_for_radius: radius must be positive");
  if (s.empty()) throw std::invalid_argument("center_for_radius: empty set");
  if (auto refutation = find_refutation(s, r)) throw NoCircleError(std::move(*refutation));
  PointSet quotient = divide(s, r);
  Int span = bounding_box(quotient).span();
  Int bound = 2 * span + 4;
  if (bound < 16) bound = 16;
  std::optional<LatticePoint> hat = unit_center_search(quotient, bound);
  if (!hat) hat = unit_center_crt(quotient).first;
  LatticePoint center = s.anchor() + r * LatticeVector{hat->x, hat->y};
  IntegerCircle circle{std::move(center), r};
  for (const auto& p : s) {
    if (!circle_contains(circle, p))
      throw std::logic_error("center_for_radius: constructed circle fails verification");
  }
  return circle;
}

}  // namespace latcirc
