#pragma once

// Finite point sets, their projections to the discrete tori (Z/m)^2, and the
// shift-divisibility structure used by the spectrum computations.
//
// A set covers the torus T_m when its residues hit all m^2 cells.  Covering
// some T_t for a prime t is the sole obstruction to circumscribed circles, so
// "tori-transparent" (covers no torus) is the central predicate here.  Only
// primes t with t^2 <= |S| can possibly be covered, which keeps the scan
// finite and cheap.

#include "latcirc/core.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace latcirc {

// finite set of lattice points; duplicates are dropped, first-occurrence
// order is kept
class PointSet {
 public:
  PointSet() = default;

  explicit PointSet(std::vector<LatticePoint> pts) {
    std::set<LatticePoint> seen;
    for (auto& p : pts) {
      if (seen.insert(p).second) pts_.push_back(std::move(p));
    }
  }

  PointSet(std::initializer_list<LatticePoint> il)
      : PointSet(std::vector<LatticePoint>(il)) {}

  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }

  const std::vector<LatticePoint>& points() const { return pts_; }
  const LatticePoint& operator[](std::size_t i) const { return pts_[i]; }

  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  // first point, the translation reference for divisibility questions
  const LatticePoint& anchor() const {
    if (pts_.empty()) throw std::invalid_argument("PointSet: empty set has no anchor");
    return pts_.front();
  }

  bool contains(const LatticePoint& p) const {
    for (const auto& q : pts_)
      if (q == p) return true;
    return false;
  }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.pts_ == b.pts_; }
  friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const PointSet& s) {
    os << "{";
    for (std::size_t i = 0; i < s.pts_.size(); ++i) {
      if (i) os << ", ";
      os << s.pts_[i];
    }
    return os << "}";
  }

 private:
  std::vector<LatticePoint> pts_;
};

struct BoundingBox {
  Int minx, maxx, miny, maxy;

  Int span() const {
    Int w = maxx - minx, h = maxy - miny;
    return w < h ? h : w;
  }
};

inline BoundingBox bounding_box(const PointSet& s) {
  if (s.empty()) throw std::invalid_argument("bounding_box: empty set");
  BoundingBox b{s[0].x, s[0].x, s[0].y, s[0].y};
  for (const auto& p : s) {
    if (p.x < b.minx) b.minx = p.x;
    if (p.x > b.maxx) b.maxx = p.x;
    if (p.y < b.miny) b.miny = p.y;
    if (p.y > b.maxy) b.maxy = p.y;
  }
  return b;
}

inline PointSet translated(const PointSet& s, const LatticeVector& v) {
  std::vector<LatticePoint> out;
  out.reserve(s.size());
  for (const auto& p : s) out.push_back(p + v);
  return PointSet(std::move(out));
}

inline PointSet scaled(const PointSet& s, const Int& k) {
  if (k == 0) throw std::invalid_argument("scaled: factor must be nonzero");
  std::vector<LatticePoint> out;
  out.reserve(s.size());
  for (const auto& p : s) out.push_back({k * p.x, k * p.y});
  return PointSet(std::move(out));
}

struct TorusResidue {
  Int m, rx, ry;

  friend bool operator==(const TorusResidue& a, const TorusResidue& b) {
    return a.m == b.m && a.rx == b.rx && a.ry == b.ry;
  }
  friend bool operator<(const TorusResidue& a, const TorusResidue& b) {
    if (a.m != b.m) return a.m < b.m;
    if (a.rx != b.rx) return a.rx < b.rx;
    return a.ry < b.ry;
  }
  friend std::ostream& operator<<(std::ostream& os, const TorusResidue& r) {
    return os << "(" << r.rx << ", " << r.ry << ") mod " << r.m;
  }
};

inline TorusResidue project(const LatticePoint& p, const Int& m) {
  if (m < 2) throw std::invalid_argument("project: modulus must be at least 2");
  return {m, mod_floor(p.x, m), mod_floor(p.y, m)};
}

// true iff the residues of s fill all m^2 cells of T_m
inline bool is_covering(const PointSet& s, const Int& m) {
  if (m < 2) throw std::invalid_argument("is_covering: modulus must be at least 2");
  if (Int(s.size()) < m * m) return false;
  std::set<std::pair<Int, Int>> cells;
  for (const auto& p : s) cells.emplace(mod_floor(p.x, m), mod_floor(p.y, m));
  return Int(cells.size()) == m * m;
}

// Composite m can only be covered when some prime divisor of m is, so the
// primes tell the whole covering story; and t^2 > |S| rules a prime out on
// cardinality alone.
inline std::vector<Int> covering_primes(const PointSet& s) {
  std::vector<Int> out;
  Int limit = isqrt(Int(s.size()));
  for (long long t : primes_upto(limit.convert_to<long long>())) {
    if (is_covering(s, t)) out.push_back(t);
  }
  return out;
}

inline bool is_tori_transparent(const PointSet& s) { return covering_primes(s).empty(); }

// largest k such that all points agree modulo k, i.e. the gcd of all
// coordinate differences from the anchor
inline Int shift_divisor_gcd(const PointSet& s) {
  if (s.size() < 2)
    throw std::invalid_argument("shift_divisor_gcd: need at least two points");
  const LatticePoint& a = s.anchor();
  Int g = 0;
  for (const auto& p : s) g = igcd(g, igcd(p.x - a.x, p.y - a.y));
  return g;
}

inline bool is_shift_divisible(const PointSet& s, const Int& k) {
  if (k < 1) throw std::invalid_argument("is_shift_divisible: k must be positive");
  if (s.empty()) throw std::invalid_argument("is_shift_divisible: empty set");
  const LatticePoint& a = s.anchor();
  for (const auto& p : s) {
    if ((p.x - a.x) % k != 0 || (p.y - a.y) % k != 0) return false;
  }
  return true;
}

struct NotShiftDivisibleError : std::runtime_error {
  LatticePoint a, b;
  Int k;

  NotShiftDivisibleError(LatticePoint a_, LatticePoint b_, Int k_)
      : std::runtime_error("set is not shift-divisible by " + k_.str()),
        a(std::move(a_)),
        b(std::move(b_)),
        k(std::move(k_)) {}
};

// quotient (s - anchor) / k, anchored at the origin; throws with a witness
// pair when some difference is not divisible by k
inline PointSet divide(const PointSet& s, const Int& k) {
  if (k < 1) throw std::invalid_argument("divide: k must be positive");
  if (s.empty()) throw std::invalid_argument("divide: empty set");
  const LatticePoint& a = s.anchor();
  std::vector<LatticePoint> out;
  out.reserve(s.size());
  for (const auto& p : s) {
    if ((p.x - a.x) % k != 0 || (p.y - a.y) % k != 0) throw NotShiftDivisibleError(a, p, k);
    out.push_back({(p.x - a.x) / k, (p.y - a.y) / k});
  }
  return PointSet(std::move(out));
}

struct PrimitiveDecomposition {
  LatticePoint anchor;
  Int scale;       // gcd of all anchor differences
  PointSet reduced;  // (s - anchor) / scale, primitive and anchored at origin
};

inline PrimitiveDecomposition primitive_decomposition(const PointSet& s) {
  Int g = shift_divisor_gcd(s);
  PrimitiveDecomposition d{s.anchor(), g, divide(s, g)};
  if (shift_divisor_gcd(d.reduced) != 1)
    throw std::logic_error("primitive_decomposition: reduction is not primitive");
  return d;
}

}  // namespace latcirc
