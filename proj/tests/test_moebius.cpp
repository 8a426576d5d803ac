#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include <doctest.h>

#include "oracle/closed_forms.hpp"
#include "schottky/description.hpp"
#include "schottky/group.hpp"
#include "schottky/moebius.hpp"
#include "support/random.hpp"

using namespace schottky;

namespace {

MoebiusMap f_t(int t) { return MoebiusMap(Rational(-5 * t), Rational(25 * t * t - 1), Rational(1), Rational(-5 * t)); }

MoebiusMap g_11() { return MoebiusMap(Rational(-57), Rational(151), Rational(20), Rational(-53)); }

std::set<std::string> endpoint_set(const HalfCircle& c) { return {c.left().to_string(), c.right().to_string()}; }

}  // namespace

TEST_SUITE("moebius") {

TEST_CASE("constructor enforces unit determinant and canonical sign") {
  CHECK_THROWS_AS(MoebiusMap(Rational(2), Rational(0), Rational(0), Rational(1)), std::invalid_argument);
  const MoebiusMap neg(Rational(5), Rational(-24), Rational(-1), Rational(5));
  CHECK(neg == f_t(1));
  CHECK(f_t(1).c() > Rational(0));
  CHECK(f_t(1).to_string() == "[-5, 24, 1, -5]");
}

TEST_CASE("compose examples") {
  const MoebiusMap f1 = f_t(1);
  CHECK(compose(f1, MoebiusMap::identity()) == f1);
  CHECK(compose(MoebiusMap::identity(), f1) == f1);
  CHECK(compose(f1, invert(f1)).is_identity());
  // squaring by hand: (−5·−5 + 24·1, −5·24 + 24·−5; 1·−5 + −5·1, 24 + 25)
  CHECK(compose(f1, f1) == MoebiusMap(Rational(49), Rational(-240), Rational(-10), Rational(49)));
}

TEST_CASE("invert examples") {
  CHECK(invert(MoebiusMap::identity()).is_identity());
  CHECK(invert(f_t(1)) == MoebiusMap(Rational(5), Rational(24), Rational(1), Rational(5)));
  CHECK(invert(f_t(1)) == MoebiusMap(Rational(-5), Rational(-24), Rational(-1), Rational(-5)));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const MoebiusMap f = testing_support::random_map(rng);
    CHECK(invert(invert(f)) == f);
  }
}

TEST_CASE("apply examples") {
  const QPoint z(Rational(5), Rational(1, 2));
  CHECK(apply(MoebiusMap::identity(), z) == z);
  CHECK(apply(f_t(1), z) == QPoint(Rational(-5), Rational(2)));
  CHECK_THROWS_AS(QPoint(Rational(0), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(QPoint(Rational(0), Rational(-1)), std::invalid_argument);
}

TEST_CASE("apply_boundary examples") {
  const MoebiusMap f1 = f_t(1);
  CHECK(apply_boundary(f1, Rational(5)).is_infinite());
  CHECK(apply_boundary(f1, Rational(6)) == BoundaryPoint(Rational(-6)));
  CHECK(apply_boundary(f1, Rational(4)) == BoundaryPoint(Rational(-4)));
  CHECK(apply_boundary(f1, BoundaryPoint::infinity()) == BoundaryPoint(Rational(-5)));
  const MoebiusMap affine(Rational(2), Rational(1), Rational(0), Rational(1, 2));
  CHECK(apply_boundary(affine, BoundaryPoint::infinity()).is_infinite());
  CHECK(BoundaryPoint::infinity().to_string() == "inf");
}

TEST_CASE("classify examples") {
  CHECK(classify(MoebiusMap::identity()) == Classification::Identity);
  CHECK(classify(f_t(1)) == Classification::Hyperbolic);
  CHECK(classify(MoebiusMap(Rational(0), Rational(-1), Rational(1), Rational(0))) == Classification::Elliptic);
  CHECK(classify(MoebiusMap(Rational(1), Rational(1), Rational(0), Rational(1))) == Classification::Parabolic);
  CHECK(classify(MoebiusMap(Rational(-1), Rational(1), Rational(0), Rational(-1))) == Classification::Parabolic);
}

TEST_CASE("isometric_circle examples") {
  for (int t = 1; t <= 5; ++t) {
    const HalfCircle c = isometric_circle(f_t(t));
    CHECK(c.center() == Rational(5 * t));
    CHECK(c.radius() == Rational(1));
  }
  const HalfCircle g = isometric_circle(g_11());
  CHECK(g.center() == Rational(53, 20));
  CHECK(g.radius() == Rational(1, 20));
  CHECK(g.center() == oracle::alpha(1, 1));
  const MoebiusMap gi = invert(g_11());
  CHECK(isometric_circle(gi).center() == g_11().a() / g_11().c());
  try {
    (void)isometric_circle(MoebiusMap(Rational(1), Rational(3), Rational(0), Rational(1)));
    FAIL("expected domain_error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()) == "isometric circle undefined for affine maps");
  }
}

TEST_CASE("circle_relation examples") {
  const auto [c, ci] = circle_relation(f_t(1));
  CHECK(endpoint_set(c) == std::set<std::string>{"4", "6"});
  CHECK(endpoint_set(ci) == std::set<std::string>{"-4", "-6"});
  CHECK(apply_boundary(f_t(1), c.left()) == BoundaryPoint(ci.right()));

  const auto [g, gi] = circle_relation(g_11());
  CHECK(endpoint_set(g) == std::set<std::string>{"13/5", "27/10"});  // 52/20, 54/20
  CHECK(gi.center() == Rational(-57, 20));
  std::set<std::string> images;
  for (const Rational& x : {g.left(), g.right()}) images.insert(apply_boundary(g_11(), x).to_string());
  CHECK(images == endpoint_set(gi));

  CHECK_THROWS_AS(circle_relation(MoebiusMap::identity()), std::domain_error);
}

TEST_CASE("property: interior of C(f) is sent outside C(f^-1)") {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 100) {
    const MoebiusMap f = testing_support::random_map(rng);
    if (f.c().is_zero()) continue;
    const HalfCircle c = isometric_circle(f);
    // a point strictly inside: center + (r/3)(u + i) with |u| < 1
    const Rational u = Rational(static_cast<std::int64_t>(rng() % 5) - 2, 3);
    const QPoint z(c.center() + c.radius() * u / Rational(2), c.radius() / Rational(2));
    REQUIRE(denominator_norm(f, z) < Rational(1));
    const QPoint w = apply(f, z);
    // |−c·w + a|² > 1  ⇔  w lies outside C(f⁻¹)
    const Rational x = -f.c() * w.re() + f.a();
    const Rational y = -f.c() * w.im();
    CHECK(x * x + y * y > Rational(1));
    ++checked;
  }
}

TEST_CASE("strip_transfer examples") {
  const HalfCircle c1(Rational(0), Rational(1));
  const HalfCircle c2(Rational(10), Rational(2));
  CHECK(strip_transfer(c1, c1).is_projective_identity());
  CHECK(strip_transfer(c2, c2).is_projective_identity());
  const ProjectiveMap t = strip_transfer(c1, c2);
  CHECK(t.determinant() == Rational(2));
  CHECK(t.apply(BoundaryPoint(Rational(-2))) == BoundaryPoint(Rational(6)));
  CHECK(t.apply(BoundaryPoint(Rational(2))) == BoundaryPoint(Rational(14)));
  CHECK(t.apply(QPoint(Rational(1), Rational(1))) == QPoint(Rational(12), Rational(2)));
  CHECK((t * strip_transfer(c2, c1)).is_projective_identity());
  CHECK((strip_transfer(c2, c1) * t).is_projective_identity());
}

TEST_CASE("inversive_distance examples") {
  const HalfCircle a = isometric_circle(f_t(1));
  const HalfCircle b = isometric_circle(f_t(2));
  CHECK(inversive_distance(a, b) == Rational(23, 2));
  // arccosh via its logarithmic form
  CHECK(geodesic_distance(a, b) == doctest::Approx(std::log(11.5 + std::sqrt(11.5 * 11.5 - 1))).epsilon(1e-9));
  CHECK(std::fabs(geodesic_distance(a, b) - 3.1336) < 1e-4);
  CHECK(inversive_distance(HalfCircle(Rational(0), Rational(1)), HalfCircle(Rational(2), Rational(1))) == Rational(1));
  for (int n = 1; n <= 8; ++n) {
    const HalfCircle g(oracle::alpha(1, n), oracle::radius(n));
    const HalfCircle h(oracle::beta(1, n), oracle::radius(n));
    CHECK(inversive_distance(g, h) == Rational(7));
  }
  CHECK(geodesic_distance(a, a) == 0.0);
}

TEST_CASE("property: inversive distance symmetry and scale invariance") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const HalfCircle c1(testing_support::random_rational(rng), testing_support::random_positive(rng));
    const HalfCircle c2(testing_support::random_rational(rng), testing_support::random_positive(rng));
    const Rational lambda = testing_support::random_positive(rng);
    CHECK(inversive_distance(c1, c2) == inversive_distance(c2, c1));
    const HalfCircle s1(c1.center() * lambda, c1.radius() * lambda);
    const HalfCircle s2(c2.center() * lambda, c2.radius() * lambda);
    CHECK(inversive_distance(s1, s2) == inversive_distance(c1, c2));
  }
}

TEST_CASE("circle_inversion examples") {
  const HalfCircle unit(Rational(0), Rational(1));
  CHECK(circle_inversion(unit, QPoint(Rational(0), Rational(1))) == QPoint(Rational(0), Rational(1)));
  CHECK(circle_inversion(unit, QPoint(Rational(0), Rational(2))) == QPoint(Rational(0), Rational(1, 2)));
  // a point of C off the top: 3/5 + 4/5 i
  CHECK(circle_inversion(unit, QPoint(Rational(3, 5), Rational(4, 5))) == QPoint(Rational(3, 5), Rational(4, 5)));

  const HalfCircle c(Rational(7), Rational(2));
  const BoundaryPoint foot = circle_inversion(c, BoundaryPoint(c.center() - Rational(2) * c.radius()));
  CHECK(foot == BoundaryPoint(c.center() - c.radius() / Rational(2)));
  CHECK(circle_inversion(c, BoundaryPoint::infinity()) == BoundaryPoint(c.center()));
  CHECK(circle_inversion(c, BoundaryPoint(c.center())).is_infinite());
}

TEST_CASE("property: circle_inversion is an involution exchanging inside and outside") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const HalfCircle c(testing_support::random_rational(rng), testing_support::random_positive(rng));
    const QPoint z = testing_support::random_point(rng);
    const QPoint w = circle_inversion(c, z);
    CHECK(circle_inversion(c, w) == z);
    const auto dist2 = [&](const QPoint& p) {
      const Rational dx = p.re() - c.center();
      return dx * dx + p.im() * p.im();
    };
    const Rational r2 = c.radius() * c.radius();
    CHECK((dist2(z) < r2) == (dist2(w) > r2));
  }
}

TEST_CASE("property: isometric-circle pair law and endpoint mapping for every built generator") {
  const SchottkyDescription d = build_gamma_ms(2, 3, 3);
  for (const auto& [k, e] : d.entries()) {
    const HalfCircle c = isometric_circle(e.map);
    const HalfCircle ci = isometric_circle(invert(e.map));
    CHECK(c.radius() == ci.radius());
    std::set<std::string> images;
    for (const Rational& x : {c.left(), c.right()}) images.insert(apply_boundary(e.map, x).to_string());
    CHECK(images == endpoint_set(ci));
  }
}

TEST_CASE("property: action law Im(f z)·|cz+d|² = Im z over short words") {
  const SchottkyDescription d = build_gamma_ms(2, 2, 1);
  std::mt19937_64 rng(21);
  const auto words = enumerate_words(d, 3);
  for (int i = 0; i < 200; ++i) {
    const Word& w = words[rng() % words.size()];
    const MoebiusMap f = element_of(d, w).map;
    CHECK(f.determinant() == Rational(1));
    const QPoint z = testing_support::random_point(rng);
    CHECK(apply(f, z).im() * denominator_norm(f, z) == z.im());
  }
}

TEST_CASE("image of a geodesic") {
  const MoebiusMap f1 = f_t(1);
  const Geodesic g = image(f1, isometric_circle(f1));
  REQUIRE(std::holds_alternative<HalfCircle>(g));
  CHECK(std::get<HalfCircle>(g) == isometric_circle(invert(f1)));
  // the circle through the pole 5 goes to a vertical line
  const Geodesic v = image(f1, HalfCircle(Rational(7), Rational(2)));
  REQUIRE(std::holds_alternative<VerticalLine>(v));
  CHECK(std::get<VerticalLine>(v).abscissa == apply_boundary(f1, Rational(9)).value());
}

TEST_CASE("pairing_map") {
  const HalfCircle from(Rational(5), Rational(1));
  const HalfCircle to(Rational(-5), Rational(1));
  const MoebiusMap p = pairing_map(from, to);
  CHECK(isometric_circle(p) == from);
  CHECK(isometric_circle(invert(p)) == to);
  CHECK_THROWS_AS(pairing_map(from, HalfCircle(Rational(0), Rational(2))), std::invalid_argument);
}

}  // TEST_SUITE
