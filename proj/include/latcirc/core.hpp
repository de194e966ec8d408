#pragma once

// Points, vectors and the gcd-based metric on the integer lattice.
//
// The "integer length" of a vector is the gcd of its coordinates: the number
// of lattice points the segment passes through, minus one.  It is invariant
// under every affine map that preserves the lattice, which is what makes the
// circumscribed-circle theory below work at all.

#include "latcirc/numeric.hpp"

#include <ostream>
#include <stdexcept>
#include <variant>
#include <vector>

namespace latcirc {

struct LatticeVector {
  Int dx, dy;

  bool is_zero() const { return dx == 0 && dy == 0; }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.dx == b.dx && a.dy == b.dy;
  }
  friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return !(a == b); }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    if (a.dx != b.dx) return a.dx < b.dx;
    return a.dy < b.dy;
  }

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return {a.dx + b.dx, a.dy + b.dy};
  }
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    return {a.dx - b.dx, a.dy - b.dy};
  }
  LatticeVector operator-() const { return {-dx, -dy}; }
  friend LatticeVector operator*(const Int& k, const LatticeVector& v) {
    return {k * v.dx, k * v.dy};
  }

  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    return os << "<" << v.dx << ", " << v.dy << ">";
  }
};

struct LatticePoint {
  Int x, y;

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }

  friend LatticeVector operator-(const LatticePoint& a, const LatticePoint& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend LatticePoint operator+(const LatticePoint& p, const LatticeVector& v) {
    return {p.x + v.dx, p.y + v.dy};
  }

  friend std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
    return os << "(" << p.x << ", " << p.y << ")";
  }
};

inline Int det(const LatticeVector& u, const LatticeVector& v) {
  return u.dx * v.dy - u.dy * v.dx;
}

// il(v) = gcd(|dx|, |dy|), defined for nonzero vectors
inline Int int_length(const LatticeVector& v) {
  if (v.is_zero()) throw std::invalid_argument("int_length: zero vector");
  return igcd(v.dx, v.dy);
}

// id(a, b) = il(b - a); id(a, a) = 0
inline Int int_distance(const LatticePoint& a, const LatticePoint& b) {
  if (a == b) return 0;
  return int_length(b - a);
}

// doubled euclidean area: |det(b - a, c - a)|, the index of the sublattice
// spanned by the two edge vectors (0 iff collinear)
inline Int int_area(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return iabs(det(b - a, c - a));
}

// angle given by two rays from a common vertex
struct RationalAngle {
  LatticePoint vertex, ray_a, ray_b;

  RationalAngle(LatticePoint v, LatticePoint a, LatticePoint b)
      : vertex(std::move(v)), ray_a(std::move(a)), ray_b(std::move(b)) {
    if (ray_a == vertex || ray_b == vertex)
      throw std::invalid_argument("RationalAngle: ray endpoint equals vertex");
  }
};

// isin = area / (product of ray lengths); always an exact integer, 0 iff the
// rays are collinear
inline Int int_sine(const RationalAngle& ang) {
  Int area = int_area(ang.vertex, ang.ray_a, ang.ray_b);
  Int la = int_length(ang.ray_a - ang.vertex);
  Int lb = int_length(ang.ray_b - ang.vertex);
  return div_exact(area, la * lb);
}

// canonical arctangent form of a non-degenerate angle: the pair (p, q) with
// q >= p >= 1 and gcd(p, q) = 1 such that the angle maps to the one between
// rays (1, 0) and (p, q) under a lattice-preserving affine map
struct CanonicalAngle {
  Int p, q;

  Int icos() const { return p; }
  Int isin() const { return q; }

  friend bool operator==(const CanonicalAngle& a, const CanonicalAngle& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator!=(const CanonicalAngle& a, const CanonicalAngle& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const CanonicalAngle& a) {
    return os << "arctan(" << a.q << "/" << a.p << ")";
  }
};

// Reduce the rays to primitive vectors u, v; send u to (1, 0) by a unimodular
// map; v lands on (a, b) with |b| = |det(u, v)| after reduction.  A reflection
// fixing (1, 0) flips b positive, a shear puts the first coordinate in [1, q],
// and finally p is identified with its inverse mod q (the two represent the
// same unordered pair of rays, mapped onto each other by a determinant -1
// map); the smaller of the two is returned.
inline CanonicalAngle canonical_angle(const RationalAngle& ang) {
  LatticeVector u = ang.ray_a - ang.vertex;
  LatticeVector v = ang.ray_b - ang.vertex;
  Int lu = int_length(u), lv = int_length(v);
  u = {u.dx / lu, u.dy / lu};
  v = {v.dx / lv, v.dy / lv};
  Int b = det(u, v);
  if (b == 0) throw std::invalid_argument("canonical_angle: collinear rays");
  Egcd e = extended_gcd(u.dx, u.dy);
  Int a = e.x * v.dx + e.y * v.dy;
  Int q = iabs(b);
  Int p = mod_floor(a - 1, q) + 1;
  Int p_alt = q == 1 ? Int(1) : inv_mod(p, q);
  return {p < p_alt ? p : p_alt, q};
}

struct IntegerCircle {
  LatticePoint center;
  Int radius;

  IntegerCircle(LatticePoint c, Int r) : center(std::move(c)), radius(std::move(r)) {
    if (radius < 1) throw std::invalid_argument("IntegerCircle: radius must be positive");
  }

  friend bool operator==(const IntegerCircle& a, const IntegerCircle& b) {
    return a.center == b.center && a.radius == b.radius;
  }
  friend std::ostream& operator<<(std::ostream& os, const IntegerCircle& c) {
    return os << "circle(center " << c.center << ", radius " << c.radius << ")";
  }
};

inline bool circle_contains(const IntegerCircle& c, const LatticePoint& p) {
  return int_distance(c.center, p) == c.radius;
}

// line base + t * dir, t ranging over all integers; dir must be primitive so
// that t enumerates exactly the lattice points of the line
struct LatticeLine {
  LatticePoint base;
  LatticeVector dir;

  LatticeLine(LatticePoint b, LatticeVector d) : base(std::move(b)), dir(std::move(d)) {
    if (igcd(dir.dx, dir.dy) != 1)
      throw std::invalid_argument("LatticeLine: direction must be primitive");
  }
};

struct LineCircleEmpty {};

struct LineCircleTwoPoints {
  LatticePoint first, second;
};

// the parameters t with point on the circle are exactly t = residue (mod
// period), one class per listed residue
struct LineCirclePeriodic {
  Int period;
  std::vector<Int> residues;
};

using LineCircleClassification =
    std::variant<LineCircleEmpty, LineCircleTwoPoints, LineCirclePeriodic>;

// Intersection pattern of a line with an integer circle.  Let w = base -
// center and D = det(w, dir).  D = 0 means the line passes through the
// center; it then meets the circle in exactly the two points at parameter
// offset radius on either side of the center.  Otherwise the gcd-distance
// from the center to base + t * dir divides D for every t, so the circle is
// missed entirely unless radius | D, and when radius | D the set of hit
// parameters is a nonempty union of residue classes mod |D|.
inline LineCircleClassification line_circle_classify(const LatticeLine& line,
                                                     const IntegerCircle& circle) {
  LatticeVector w = line.base - circle.center;
  Int d = det(w, line.dir);
  if (d == 0) {
    Int s = line.dir.dx != 0 ? div_exact(w.dx, line.dir.dx) : div_exact(w.dy, line.dir.dy);
    Int t1 = -s + circle.radius;
    Int t2 = -s - circle.radius;
    return LineCircleTwoPoints{line.base + t1 * line.dir, line.base + t2 * line.dir};
  }
  Int period = iabs(d);
  if (period % circle.radius != 0) return LineCircleEmpty{};
  std::vector<Int> residues;
  for (Int t = 0; t < period; ++t) {
    if (igcd(w.dx + t * line.dir.dx, w.dy + t * line.dir.dy) == circle.radius)
      residues.push_back(t);
  }
  return LineCirclePeriodic{period, std::move(residues)};
}

inline bool is_tangent(const LatticeLine& line, const IntegerCircle& circle) {
  return iabs(det(line.base - circle.center, line.dir)) == circle.radius;
}

}  // namespace latcirc
