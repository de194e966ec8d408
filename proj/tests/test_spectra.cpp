#include "latcirc/spectra.hpp"

#include "oracle.hpp"
#include "testutil.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace latcirc;
using latcirc::testing::Rng;

namespace {

Int max_pairwise_distance(const PointSet& s) {
  Int best = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Int d = int_distance(s[i], s[j]);
      if (d > best) best = d;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("spectrum of the doubled unit square") {
  PointSet s{{0, 0}, {2, 0}, {0, 2}, {2, 2}};
  RationalSpectrum sp = rational_spectrum(s);
  CHECK(sp.g == 2);
  CHECK(sp.tau == 2);
  CHECK(sp.max() == ReducedFraction(1, 1));
  CHECK(integer_spectrum(s) == std::vector<Int>{1});
  CHECK(sp.contains(ReducedFraction(1, 1)));
  CHECK(sp.contains(ReducedFraction(1, 2)));
  CHECK(sp.contains(ReducedFraction(1, 3)));
  CHECK_FALSE(sp.contains(ReducedFraction(2, 1)));
  CHECK_FALSE(sp.contains(ReducedFraction(2, 3)));
  auto [ok2, cert2] = has_radius(s, 2);
  CHECK_FALSE(ok2);
  CHECK(verify_certificate(s, 2, cert2));
}

TEST_CASE("spectrum of a long segment") {
  PointSet s{{0, 0}, {6, 0}};
  RationalSpectrum sp = rational_spectrum(s);
  CHECK(sp.g == 6);
  CHECK(sp.tau == 1);
  CHECK(integer_spectrum(s) == std::vector<Int>{1, 2, 3, 6});
  CHECK(max_radius(s) == ReducedFraction(6, 1));
  CHECK(sp.contains(ReducedFraction(6, 5)));
  CHECK(sp.contains(ReducedFraction(3, 2)));
  CHECK_FALSE(sp.contains(ReducedFraction(4, 1)));
  CHECK_FALSE(sp.contains(ReducedFraction(7, 1)));

  auto [ok4, cert4] = has_radius(s, 4);
  CHECK_FALSE(ok4);
  auto* nd = std::get_if<CertNoDivisibility>(&cert4);
  REQUIRE(nd != nullptr);
  CHECK(verify_certificate(s, 4, cert4));

  auto [ok6, cert6] = has_radius(s, 6);
  CHECK(ok6);
  auto* yes = std::get_if<CertYes>(&cert6);
  REQUIRE(yes != nullptr);
  CHECK(yes->circle.center == LatticePoint{-6, -6});
  CHECK(verify_certificate(s, 6, cert6));
}

TEST_CASE("covered grids have an empty integer spectrum") {
  PointSet grid22{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  RationalSpectrum sp = rational_spectrum(grid22);
  CHECK(sp.g == 1);
  CHECK(sp.tau == 2);
  CHECK(integer_spectrum(grid22).empty());
  CHECK(max_radius(grid22) == ReducedFraction(1, 2));

  auto [ok, cert] = has_radius(grid22, 1);
  CHECK_FALSE(ok);
  auto* nc = std::get_if<CertNoCovering>(&cert);
  REQUIRE(nc != nullptr);
  CHECK(nc->prime == 2);
  CHECK(nc->witnesses.size() == 4);
  CHECK(verify_certificate(grid22, 1, cert));

  std::vector<LatticePoint> pts;
  for (long long x = 1; x <= 3; ++x)
    for (long long y = 1; y <= 5; ++y) pts.push_back({Int(x), Int(y)});
  PointSet grid35(pts);
  RationalSpectrum sp35 = rational_spectrum(grid35);
  CHECK(sp35.g == 1);
  CHECK(sp35.tau == 6);
  CHECK(integer_spectrum(grid35).empty());
  CHECK(max_radius(grid35) == ReducedFraction(1, 6));
}

TEST_CASE("quadrangle with a unit circumscribed circle") {
  PointSet s{{0, 0}, {1, 0}, {0, 1}, {2, 2}};
  auto [ok, cert] = has_radius(s, 1);
  REQUIRE(ok);
  auto* yes = std::get_if<CertYes>(&cert);
  REQUIRE(yes != nullptr);
  CHECK(yes->circle.center == LatticePoint{1, 1});
  CHECK(verify_certificate(s, 1, cert));
  CHECK(integer_spectrum(s) == std::vector<Int>{1});
}

TEST_CASE("congruent angle data does not decide the circle question") {
  PointSet abcd{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  auto [ok_a, cert_a] = has_radius(abcd, 1);
  CHECK_FALSE(ok_a);
  CHECK(verify_certificate(abcd, 1, cert_a));

  PointSet pqrs{{-1, 0}, {-1, 1}, {0, 1}, {1, 0}};
  auto [ok_p, cert_p] = has_radius(pqrs, 1);
  REQUIRE(ok_p);
  auto* yes = std::get_if<CertYes>(&cert_p);
  REQUIRE(yes != nullptr);
  CHECK(yes->circle.center == LatticePoint{0, 0});
  CHECK(verify_certificate(pqrs, 1, cert_p));
}

TEST_CASE("max radius denominator matches the covering primes of the set") {
  Rng rng(444);
  for (int i = 0; i < 120; ++i) {
    PointSet s = testing::rand_set(rng, 9, 0, 12);
    ReducedFraction f = max_radius(s);
    Int den = 1;
    for (const Int& t : covering_primes(s)) den *= t;
    CAPTURE(i);
    CHECK(f.den == den);
    CHECK(rational_spectrum(s).g % f.num == 0);
    CHECK(has_rational_radius(s, f));
  }
}

TEST_CASE("has_radius matches integer_spectrum membership") {
  Rng rng(555);
  for (int i = 0; i < 60; ++i) {
    PointSet s = testing::rand_set(rng, 9, 0, 12);
    std::vector<Int> spec = integer_spectrum(s);
    Int rmax = max_pairwise_distance(s);
    for (Int r = 1; r <= rmax; ++r) {
      auto [ok, cert] = has_radius(s, r);
      bool member = false;
      for (const Int& v : spec) member = member || v == r;
      CAPTURE(i, r);
      CHECK(ok == member);
      CHECK(verify_certificate(s, r, cert));
    }
  }
}

TEST_CASE("integer radii divide every pairwise distance") {
  Rng rng(666);
  for (int i = 0; i < 80; ++i) {
    PointSet s = testing::rand_set(rng, 8, -10, 10);
    for (const Int& r : integer_spectrum(s)) {
      for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
          CHECK(int_distance(s[a], s[b]) % r == 0);
        }
      }
    }
  }
}

TEST_CASE("integer spectrum is closed under lcm") {
  PointSet segment{{0, 0}, {6, 0}};
  CHECK(lcm_closure_check(segment, 2, 3));
  CHECK(lcm_closure_check(segment, 1, 6));
  CHECK(lcm_closure_check(segment, 2, 2));
  CHECK_THROWS_AS(lcm_closure_check(segment, 4, 2), std::invalid_argument);

  Rng rng(777);
  for (int i = 0; i < 40; ++i) {
    PointSet s = testing::rand_set(rng, 8, 0, 12);
    std::vector<Int> spec = integer_spectrum(s);
    for (const Int& a : spec) {
      for (const Int& b : spec) {
        CAPTURE(i, a, b);
        CHECK(lcm_closure_check(s, a, b));
      }
    }
  }
}

TEST_CASE("rational members combine through lcm over gcd") {
  Rng rng(888);
  for (int i = 0; i < 40; ++i) {
    PointSet s = testing::rand_set(rng, 8, 0, 10);
    RationalSpectrum sp = rational_spectrum(s);
    for (long long c1 : {1, 2, 3}) {
      for (long long c2 : {2, 5}) {
        ReducedFraction f1(sp.g, c1 * sp.tau);
        ReducedFraction f2(sp.g, c2 * sp.tau);
        ReducedFraction combined(ilcm(f1.num, f2.num), igcd(f1.den, f2.den));
        CAPTURE(i, c1, c2);
        CHECK(has_rational_radius(s, combined));
      }
    }
  }
}

TEST_CASE("primorial reciprocal is always a rational radius") {
  CHECK(primorial(1) == 1);
  CHECK(primorial(2) == 2);
  CHECK(primorial(3) == 6);
  CHECK(primorial(5) == 30);
  CHECK(primorial(10) == 210);
  CHECK_THROWS_AS(primorial(0), std::invalid_argument);

  PointSet grid22{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  CHECK(primorial_member_check(grid22));

  Rng rng(999);
  for (int i = 0; i < 50; ++i) {
    PointSet s = testing::rand_set(rng, 9, 0, 12);
    CAPTURE(i);
    CHECK(primorial_member_check(s));
  }
}

TEST_CASE("spectrum functions validate their inputs") {
  PointSet single{{2, 2}};
  CHECK_THROWS_AS(rational_spectrum(single), std::invalid_argument);
  CHECK_THROWS_AS(has_radius(single, 1), std::invalid_argument);
  PointSet pair{{0, 0}, {1, 0}};
  CHECK_THROWS_AS(has_radius(pair, 0), std::invalid_argument);
  CHECK_THROWS_AS(has_radius(pair, -2), std::invalid_argument);
  CHECK_THROWS_AS(ReducedFraction(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(ReducedFraction(3, 0), std::invalid_argument);
}

TEST_CASE("spectrum computation is deterministic") {
  Rng rng(121);
  for (int i = 0; i < 30; ++i) {
    PointSet s = testing::rand_set(rng, 9, -9, 9);
    CHECK(integer_spectrum(s) == integer_spectrum(s));
    auto a = has_radius(s, 1);
    auto b = has_radius(s, 1);
    CHECK(a.first == b.first);
    CHECK(a.second == b.second);
  }
}
