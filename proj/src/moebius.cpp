#include "schottky/moebius.hpp"

#include <cmath>
#include <stdexcept>

namespace schottky {

QPoint::QPoint(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  if (im_.sign() <= 0) throw std::invalid_argument("point must lie in the upper half-plane (im > 0)");
}

HalfCircle::HalfCircle(Rational center, Rational radius) : center_(std::move(center)), radius_(std::move(radius)) {
  if (radius_.sign() <= 0) throw std::invalid_argument("half-circle radius must be positive");
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Hyperbolic: return "hyperbolic";
    case Classification::Parabolic: return "parabolic";
    case Classification::Elliptic: return "elliptic";
    case Classification::Identity: return "identity";
  }
  return "?";
}

MoebiusMap::MoebiusMap(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (determinant() != Rational(1))
    throw std::invalid_argument("Moebius map must have determinant 1, got " + determinant().to_string());
  if (c_.sign() < 0 || (c_.is_zero() && d_.sign() < 0)) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

MoebiusMap MoebiusMap::identity() { return MoebiusMap(1, 0, 0, 1); }

bool MoebiusMap::is_identity() const { return b_.is_zero() && c_.is_zero() && a_ == d_; }

std::string MoebiusMap::to_string() const {
  return "[" + a_.to_string() + ", " + b_.to_string() + ", " + c_.to_string() + ", " + d_.to_string() + "]";
}

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) {
  return MoebiusMap(f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(),
                    f.c() * g.a() + f.d() * g.c(), f.c() * g.b() + f.d() * g.d());
}

MoebiusMap invert(const MoebiusMap& f) { return MoebiusMap(f.d(), -f.b(), -f.c(), f.a()); }

namespace {

// (az+b)/(cz+d) for a matrix of positive determinant det.
QPoint act(const Rational& a, const Rational& b, const Rational& c, const Rational& d, const Rational& det,
           const QPoint& z) {
  const Rational wr = c * z.re() + d;
  const Rational wi = c * z.im();
  const Rational norm = wr * wr + wi * wi;
  const Rational nr = a * z.re() + b;
  const Rational re = (nr * wr + a * z.im() * wi) / norm;
  const Rational im = det * z.im() / norm;
  return QPoint(re, im);
}

BoundaryPoint act_boundary(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                           const BoundaryPoint& x) {
  if (x.is_infinite()) {
    if (c.is_zero()) return BoundaryPoint::infinity();
    return BoundaryPoint(a / c);
  }
  const Rational den = c * x.value() + d;
  if (den.is_zero()) return BoundaryPoint::infinity();
  return BoundaryPoint((a * x.value() + b) / den);
}

}  // namespace

QPoint apply(const MoebiusMap& f, const QPoint& z) { return act(f.a(), f.b(), f.c(), f.d(), Rational(1), z); }

BoundaryPoint apply_boundary(const MoebiusMap& f, const BoundaryPoint& x) {
  return act_boundary(f.a(), f.b(), f.c(), f.d(), x);
}

Rational denominator_norm(const MoebiusMap& f, const QPoint& z) {
  const Rational wr = f.c() * z.re() + f.d();
  const Rational wi = f.c() * z.im();
  return wr * wr + wi * wi;
}

Classification classify(const MoebiusMap& f) {
  if (f.is_identity()) return Classification::Identity;
  const Rational t = f.trace().abs();
  if (t > Rational(2)) return Classification::Hyperbolic;
  if (t == Rational(2)) return Classification::Parabolic;
  return Classification::Elliptic;
}

HalfCircle isometric_circle(const MoebiusMap& f) {
  if (f.c().is_zero()) throw std::domain_error("isometric circle undefined for affine maps");
  return HalfCircle(-f.d() / f.c(), f.c().abs().reciprocal());
}

std::pair<HalfCircle, HalfCircle> circle_relation(const MoebiusMap& f) {
  HalfCircle source = isometric_circle(f);
  HalfCircle target = isometric_circle(invert(f));
  const BoundaryPoint l = apply_boundary(f, source.left());
  const BoundaryPoint r = apply_boundary(f, source.right());
  const BoundaryPoint tl(target.left()), tr(target.right());
  const bool ok = (l == tl && r == tr) || (l == tr && r == tl);
  if (!ok) throw std::logic_error("endpoints of C(f) do not map onto endpoints of C(f^-1)");
  return {std::move(source), std::move(target)};
}

QPoint ProjectiveMap::apply(const QPoint& z) const {
  const Rational det = determinant();
  if (det.sign() <= 0) throw std::domain_error("projective map must have positive determinant");
  return act(a, b, c, d, det, z);
}

BoundaryPoint ProjectiveMap::apply(const BoundaryPoint& x) const { return act_boundary(a, b, c, d, x); }

bool ProjectiveMap::is_projective_identity() const { return b.is_zero() && c.is_zero() && a == d && !a.is_zero(); }

ProjectiveMap operator*(const ProjectiveMap& f, const ProjectiveMap& g) {
  return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d, f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d};
}

ProjectiveMap strip_transfer(const HalfCircle& from, const HalfCircle& to) {
  const Rational& r1 = from.radius();
  const Rational& r2 = to.radius();
  return {r2, r1 * to.center() - r2 * from.center(), Rational(0), r1};
}

Rational inversive_distance(const HalfCircle& c1, const HalfCircle& c2) {
  const Rational gap = c1.center() - c2.center();
  const Rational& r1 = c1.radius();
  const Rational& r2 = c2.radius();
  return (gap * gap - r1 * r1 - r2 * r2) / (Rational(2) * r1 * r2);
}

double geodesic_distance(const HalfCircle& c1, const HalfCircle& c2) {
  const Rational delta = inversive_distance(c1, c2);
  if (delta <= Rational(1)) return 0.0;
  return std::acosh(delta.to_double());
}

QPoint circle_inversion(const HalfCircle& circle, const QPoint& z) {
  const Rational dx = z.re() - circle.center();
  const Rational norm = dx * dx + z.im() * z.im();
  const Rational r2 = circle.radius() * circle.radius();
  return QPoint(circle.center() + r2 * dx / norm, r2 * z.im() / norm);
}

BoundaryPoint circle_inversion(const HalfCircle& circle, const BoundaryPoint& x) {
  if (x.is_infinite()) return BoundaryPoint(circle.center());
  const Rational dx = x.value() - circle.center();
  if (dx.is_zero()) return BoundaryPoint::infinity();
  return BoundaryPoint(circle.center() + circle.radius() * circle.radius() / dx);
}

Geodesic image(const MoebiusMap& f, const HalfCircle& circle) {
  const BoundaryPoint l = apply_boundary(f, circle.left());
  const BoundaryPoint r = apply_boundary(f, circle.right());
  if (l.is_infinite()) return VerticalLine{r.value()};
  if (r.is_infinite()) return VerticalLine{l.value()};
  const Rational center = (l.value() + r.value()) / Rational(2);
  const Rational radius = (l.value() - r.value()).abs() / Rational(2);
  return HalfCircle(center, radius);
}

MoebiusMap pairing_map(const HalfCircle& from, const HalfCircle& to) {
  if (from.radius() != to.radius())
    throw std::invalid_argument("paired isometric circles must have equal radii");
  const Rational& r = from.radius();
  const Rational c = r.reciprocal();
  const Rational d = -from.center() / r;
  const Rational a = to.center() / r;
  const Rational b = -(from.center() * to.center()) / r - r;
  return MoebiusMap(a, b, c, d);
}

}  // namespace schottky
