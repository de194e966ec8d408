#pragma once

// Polygon-level views of the spectrum machinery, plus the Farey starburst
// enumeration of primitive directions.

#include "latcirc/spectra.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace latcirc {

// vertex list with duplicates dropped; at least two distinct vertices
class Polygon {
 public:
  explicit Polygon(std::vector<LatticePoint> vertices) : set_(std::move(vertices)) {
    if (set_.size() < 2)
      throw std::invalid_argument("Polygon: need at least two distinct vertices");
  }

  Polygon(std::initializer_list<LatticePoint> il)
      : Polygon(std::vector<LatticePoint>(il)) {}

  std::size_t arity() const { return set_.size(); }
  const PointSet& vertex_set() const { return set_; }
  const LatticePoint& operator[](std::size_t i) const { return set_[i]; }

 private:
  PointSet set_;
};

// Segments and triangles always admit circles: tau = 1, so the integer
// spectrum is the full divisor list of the shift gcd.
inline std::pair<std::vector<Int>, RationalSpectrum> segment_triangle_spectrum(const Polygon& poly) {
  if (poly.arity() > 3)
    throw std::invalid_argument("segment_triangle_spectrum: arity must be 2 or 3");
  RationalSpectrum sp = rational_spectrum(poly.vertex_set());
  if (sp.tau != 1)
    throw std::logic_error("segment_triangle_spectrum: small set covers a torus");
  return {divisors(sp.g), sp};
}

// A quadrangle admits a circle iff its vertices fail to cover T_2, and four
// points cover T_2 exactly when their mod 2 residues are pairwise distinct.
// Equivalently: the circle exists iff some vertex pair lies at even integer
// distance.  Both characterizations are computed and cross-checked.
inline bool quadrangle_has_circle(const Polygon& poly) {
  if (poly.arity() != 4)
    throw std::invalid_argument("quadrangle_has_circle: need four distinct vertices");
  const PointSet& s = poly.vertex_set();
  bool covers = is_covering(s, 2);
  bool even_pair = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (mod_floor(s[i].x - s[j].x, 2) == 0 && mod_floor(s[i].y - s[j].y, 2) == 0)
        even_pair = true;
    }
  }
  if (covers == even_pair)
    throw std::logic_error("quadrangle_has_circle: parity check disagrees with covering");
  return !covers;
}

inline bool ngon_has_circle(const Polygon& poly) {
  return is_tori_transparent(poly.vertex_set());
}

// For a triangle, side length over the sine at the opposite vertex is the
// same fraction three times.
inline std::array<ReducedFraction, 3> sine_rule_ratios(const Polygon& poly) {
  if (poly.arity() != 3)
    throw std::invalid_argument("sine_rule_ratios: need three distinct vertices");
  const LatticePoint& a = poly[0];
  const LatticePoint& b = poly[1];
  const LatticePoint& c = poly[2];
  if (int_area(a, b, c) == 0)
    throw std::invalid_argument("sine_rule_ratios: vertices are collinear");
  auto ratio = [](const LatticePoint& u, const LatticePoint& v, const LatticePoint& opposite) {
    return ReducedFraction(int_distance(u, v), int_sine(RationalAngle(opposite, u, v)));
  };
  std::array<ReducedFraction, 3> out{ratio(b, c, a), ratio(c, a, b), ratio(a, b, c)};
  if (!(out[0] == out[1] && out[1] == out[2]))
    throw std::logic_error("sine_rule_ratios: ratios disagree");
  return out;
}

// Primitive vectors with max-norm up to the bound, sorted by polar angle
// starting at the positive x axis and turning counterclockwise.  Ties cannot
// occur: two primitive vectors on one ray are equal.
inline std::vector<LatticePoint> farey_starburst(const Int& bound) {
  if (bound < 1) throw std::invalid_argument("farey_starburst: bound must be positive");
  std::vector<LatticePoint> out;
  for (Int x = -bound; x <= bound; ++x) {
    for (Int y = -bound; y <= bound; ++y) {
      if (igcd(x, y) == 1) out.push_back({x, y});
    }
  }
  auto half_rank = [](const LatticePoint& p) {
    if (p.y == 0) return p.x > 0 ? 0 : 2;
    return p.y > 0 ? 1 : 3;
  };
  std::sort(out.begin(), out.end(), [&](const LatticePoint& a, const LatticePoint& b) {
    int ra = half_rank(a), rb = half_rank(b);
    if (ra != rb) return ra < rb;
    return a.x * b.y - a.y * b.x > 0;
  });
  return out;
}

}  // namespace latcirc
