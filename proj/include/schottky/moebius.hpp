#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "schottky/rational.hpp"

namespace schottky {

/// Point of the open upper half-plane.
class QPoint {
 public:
  /// Throws std::invalid_argument unless im > 0.
  QPoint(Rational re, Rational im);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  friend bool operator==(const QPoint&, const QPoint&) = default;

 private:
  Rational re_;
  Rational im_;
};

/// Point of R ∪ {∞}, the boundary of the half-plane.
class BoundaryPoint {
 public:
  BoundaryPoint(Rational x) : x_(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  static BoundaryPoint infinity() { return BoundaryPoint(); }

  bool is_infinite() const { return !x_.has_value(); }
  /// Precondition: !is_infinite().
  const Rational& value() const { return *x_; }

  std::string to_string() const { return x_ ? x_->to_string() : "inf"; }

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;

 private:
  BoundaryPoint() = default;
  std::optional<Rational> x_;
};

enum class Classification { Hyperbolic, Parabolic, Elliptic, Identity };

const char* to_string(Classification c);

/// Geodesic of H given as a Euclidean half-circle orthogonal to R.
class HalfCircle {
 public:
  /// Throws std::invalid_argument unless radius > 0.
  HalfCircle(Rational center, Rational radius);

  const Rational& center() const { return center_; }
  const Rational& radius() const { return radius_; }
  Rational left() const { return center_ - radius_; }
  Rational right() const { return center_ + radius_; }

  friend bool operator==(const HalfCircle&, const HalfCircle&) = default;

 private:
  Rational center_;
  Rational radius_;
};

/// The vertical geodesic Re(z) = abscissa.
struct VerticalLine {
  Rational abscissa;
  friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};

/// Image of a half-circle under a Möbius map: either another half-circle or,
/// when one endpoint is sent to ∞, a vertical line.
using Geodesic = std::variant<HalfCircle, VerticalLine>;

/// Element of PSL(2,Q) acting on H by z ↦ (az+b)/(cz+d).
///
/// The determinant is exactly 1 and the sign is canonical: c > 0, or c = 0
/// and d > 0. With that convention two maps are the same group element iff
/// their stored entries are equal.
class MoebiusMap {
 public:
  /// Throws std::invalid_argument if ad - bc != 1.
  MoebiusMap(Rational a, Rational b, Rational c, Rational d);

  static MoebiusMap identity();

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  Rational trace() const { return a_ + d_; }
  Rational determinant() const { return a_ * d_ - b_ * c_; }
  bool is_identity() const;

  /// "[a, b, c, d]"
  std::string to_string() const;

  friend bool operator==(const MoebiusMap&, const MoebiusMap&) = default;

 private:
  Rational a_, b_, c_, d_;
};

/// Rational 2x2 matrix with positive, not necessarily unit, determinant.
/// Acts on H like the unit-determinant map it is projectively equal to.
struct ProjectiveMap {
  Rational a, b, c, d;

  Rational determinant() const { return a * d - b * c; }
  QPoint apply(const QPoint& z) const;
  BoundaryPoint apply(const BoundaryPoint& x) const;
  /// True when the matrix is a nonzero scalar multiple of the identity.
  bool is_projective_identity() const;
  friend ProjectiveMap operator*(const ProjectiveMap& lhs, const ProjectiveMap& rhs);
};

/// Matrix product f·g, i.e. the map z ↦ f(g(z)).
MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g);
MoebiusMap invert(const MoebiusMap& f);

QPoint apply(const MoebiusMap& f, const QPoint& z);
BoundaryPoint apply_boundary(const MoebiusMap& f, const BoundaryPoint& x);

/// |c·z + d|², exact.
Rational denominator_norm(const MoebiusMap& f, const QPoint& z);

Classification classify(const MoebiusMap& f);

/// Center -d/c, radius 1/|c|. Throws std::domain_error when c = 0.
HalfCircle isometric_circle(const MoebiusMap& f);

/// (C(f), C(f⁻¹)), after checking that f maps the endpoints of the first onto
/// the endpoints of the second. Throws std::domain_error when c = 0 and
/// std::logic_error if the endpoint check fails.
std::pair<HalfCircle, HalfCircle> circle_relation(const MoebiusMap& f);

/// The affine similarity z ↦ (r2/r1)(z - α1) + α2 carrying the strip of
/// half-width 2·r1 about C1 onto the one about C2, stored as the rational
/// matrix (r2, r1·α2 - r2·α1; 0, r1) of determinant r1·r2.
ProjectiveMap strip_transfer(const HalfCircle& from, const HalfCircle& to);

/// δ = ((α1-α2)² - r1² - r2²) / (2·r1·r2). δ > 1 iff the half-circles are
/// disjoint and not nested; then arccosh(δ) is their hyperbolic distance.
Rational inversive_distance(const HalfCircle& c1, const HalfCircle& c2);

/// arccosh(δ) for δ > 1, otherwise 0. Reporting only.
double geodesic_distance(const HalfCircle& c1, const HalfCircle& c2);

/// Orientation-reversing reflection z ↦ α + r²/(conj(z) - α) in C.
QPoint circle_inversion(const HalfCircle& circle, const QPoint& z);
/// Boundary extension of circle_inversion; α ↔ ∞.
BoundaryPoint circle_inversion(const HalfCircle& circle, const BoundaryPoint& x);

/// Image of a geodesic under f, computed exactly from its endpoints.
Geodesic image(const MoebiusMap& f, const HalfCircle& circle);

/// Möbius map with isometric circle `from` and C(f⁻¹) = `to`. The radii must
/// agree (throws std::invalid_argument otherwise).
MoebiusMap pairing_map(const HalfCircle& from, const HalfCircle& to);

}  // namespace schottky
