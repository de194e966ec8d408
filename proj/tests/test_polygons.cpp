#include "latcirc/polygons.hpp"

#include "oracle.hpp"
#include "testutil.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace latcirc;
using latcirc::testing::Rng;

TEST_CASE("Polygon deduplicates vertices and enforces arity") {
  Polygon p{{0, 0}, {1, 0}, {0, 0}, {2, 0}};
  CHECK(p.arity() == 3);
  CHECK_THROWS_AS((Polygon{{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS((Polygon{{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("segments and triangles always carry circles") {
  auto [radii, sp] = segment_triangle_spectrum(Polygon{{1, 1}, {7, 1}});
  CHECK(radii == std::vector<Int>{1, 2, 3, 6});
  CHECK(sp.g == 6);
  CHECK(sp.tau == 1);

  auto [radii3, sp3] = segment_triangle_spectrum(Polygon{{0, 0}, {2, 0}, {0, 2}});
  CHECK(radii3 == std::vector<Int>{1, 2});
  CHECK(sp3.g == 2);
  CHECK(sp3.tau == 1);

  CHECK_THROWS_AS(segment_triangle_spectrum(Polygon{{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
                  std::invalid_argument);

  Rng rng(161);
  for (int i = 0; i < 80; ++i) {
    PointSet s = testing::rand_set(rng, 3, -15, 15);
    Polygon poly(std::vector<LatticePoint>(s.begin(), s.end()));
    auto [r, spectrum] = segment_triangle_spectrum(poly);
    CHECK(spectrum.tau == 1);
    CHECK_FALSE(r.empty());
    CHECK(r.front() == 1);
    CHECK(r.back() == spectrum.g);
  }
}

TEST_CASE("quadrangle circle existence is a parity question") {
  CHECK_FALSE(quadrangle_has_circle(Polygon{{0, 0}, {0, 1}, {1, 1}, {1, 0}}));
  CHECK(quadrangle_has_circle(Polygon{{0, 0}, {1, 0}, {0, 1}, {2, 2}}));
  CHECK(quadrangle_has_circle(Polygon{{-1, 0}, {-1, 1}, {0, 1}, {1, 0}}));
  CHECK_THROWS_AS(quadrangle_has_circle(Polygon{{0, 0}, {1, 0}, {0, 1}}), std::invalid_argument);

  Rng rng(262);
  int done = 0;
  while (done < 150) {
    PointSet s = testing::rand_set(rng, 4, -7, 7);
    if (s.size() != 4) continue;
    ++done;
    Polygon poly(std::vector<LatticePoint>(s.begin(), s.end()));
    bool via_parity = quadrangle_has_circle(poly);
    bool via_radius = has_radius(s, 1).first;
    bool via_ngon = ngon_has_circle(poly);
    CHECK(via_parity == via_radius);
    CHECK(via_parity == via_ngon);
  }
}

TEST_CASE("ngon_has_circle is transparency of the vertex set") {
  CHECK(ngon_has_circle(Polygon{{0, 0}, {1, 0}, {0, 1}, {2, 2}, {4, 4}}));
  CHECK_FALSE(ngon_has_circle(
      Polygon{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}}));
}

TEST_CASE("sine rule gives one fraction three times") {
  auto r = sine_rule_ratios(Polygon{{0, 0}, {2, 0}, {0, 2}});
  CHECK(r[0] == ReducedFraction(2, 1));
  CHECK(r[1] == ReducedFraction(2, 1));
  CHECK(r[2] == ReducedFraction(2, 1));

  auto r1 = sine_rule_ratios(Polygon{{0, 0}, {1, 0}, {0, 1}});
  CHECK(r1[0] == ReducedFraction(1, 1));

  CHECK_THROWS_AS(sine_rule_ratios(Polygon{{0, 0}, {2, 2}, {5, 5}}), std::invalid_argument);

  Rng rng(363);
  int done = 0;
  while (done < 200) {
    PointSet s = testing::rand_set(rng, 3, -25, 25);
    if (s.size() != 3 || int_area(s[0], s[1], s[2]) == 0) continue;
    ++done;
    auto rr = sine_rule_ratios(Polygon(std::vector<LatticePoint>(s.begin(), s.end())));
    CHECK(rr[0] == rr[1]);
    CHECK(rr[1] == rr[2]);
  }
}

TEST_CASE("integer sines do not determine the spectrum and vice versa") {
  Polygon t1{{0, 0}, {1, 0}, {0, 1}};
  Polygon t2{{0, 0}, {2, 1}, {1, 2}};
  auto sines = [](const Polygon& t) {
    std::multiset<Int> out;
    out.insert(int_sine(RationalAngle(t[0], t[1], t[2])));
    out.insert(int_sine(RationalAngle(t[1], t[0], t[2])));
    out.insert(int_sine(RationalAngle(t[2], t[0], t[1])));
    return out;
  };
  CHECK(sines(t1) == std::multiset<Int>{1, 1, 1});
  CHECK(sines(t2) == std::multiset<Int>{3, 3, 3});
  CHECK(rational_spectrum(t1.vertex_set()) == rational_spectrum(t2.vertex_set()));
  CHECK(integer_spectrum(t1.vertex_set()) == integer_spectrum(t2.vertex_set()));
}

TEST_CASE("farey starburst at bound 1 walks the eight neighbours") {
  std::vector<LatticePoint> expected = {{1, 0},  {1, 1},   {0, 1},  {-1, 1},
                                        {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  CHECK(farey_starburst(1) == expected);
  CHECK(farey_starburst(2).size() == 16);
  CHECK_THROWS_AS(farey_starburst(0), std::invalid_argument);
}

TEST_CASE("farey starburst counts eight totients per ring") {
  for (long long bound : {1, 2, 3, 5, 8}) {
    long long expected = 0;
    for (long long k = 1; k <= bound; ++k) expected += 8 * oracle::brute_totient(k);
    CHECK(farey_starburst(Int(bound)).size() == static_cast<std::size_t>(expected));
  }
}

TEST_CASE("farey starburst is sorted by polar angle") {
  std::vector<LatticePoint> rays = farey_starburst(6);
  auto half_rank = [](const LatticePoint& p) {
    if (p.y == 0) return p.x > 0 ? 0 : 2;
    return p.y > 0 ? 1 : 3;
  };
  CHECK(rays.front() == LatticePoint{1, 0});
  for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
    const auto& a = rays[i];
    const auto& b = rays[i + 1];
    int ra = half_rank(a), rb = half_rank(b);
    CAPTURE(i);
    if (ra == rb) {
      CHECK(a.x * b.y - a.y * b.x > 0);
    } else {
      CHECK(ra < rb);
    }
  }
  for (const auto& p : rays) CHECK(igcd(p.x, p.y) == 1);
}
