#pragma once

#include <compare>
#include <optional>
#include <variant>

#include "tiltlab/chern.hpp"
#include "tiltlab/quad.hpp"
#include "tiltlab/rational.hpp"

namespace tiltlab {

struct VerticalLine {
  Rational beta;
  friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};

struct Semicircle {
  Rational center;
  Rational radius_sq;  // > 0

  QuadValue radius() const { return QuadValue::sqrt(radius_sq); }
  QuadValue left_end() const { return QuadValue(center) - radius(); }
  QuadValue right_end() const { return QuadValue(center) + radius(); }

  friend bool operator==(const Semicircle&, const Semicircle&) = default;
};

struct EmptyWall {
  friend bool operator==(const EmptyWall&, const EmptyWall&) = default;
};

using WallDescriptor = std::variant<VerticalLine, Semicircle, EmptyWall>;

enum class WallType { Type1 = 1, Type2 = 2, Type3 = 3 };

/// Locus of (beta, alpha^2) where the tilt slopes of w and v agree.
/// Radius squared <= 0 gives EmptyWall.
WallDescriptor numerical_wall(const ChernTriple& w, const ChernTriple& v, const GeometryContext& ctx);

/// Requires mu(v) > mu(w) and a non-empty semicircle.
WallType classify_type(const ChernTriple& w, const ChernTriple& v, const GeometryContext& ctx);

/// (u0, u1, u1^2 / 2u0): same rank and slope, zero discriminant.
ChernTriple discriminant_free(const ChernTriple& u);

/// Wall of (discriminant_free(w), v); requires a Type1 wall with mu(v) > mu(w).
Semicircle modified_wall_type1(const ChernTriple& w, const ChernTriple& v, const GeometryContext& ctx);
/// Wall of (w, discriminant_free(v)); requires a Type3 wall with mu(v) > mu(w).
Semicircle modified_wall_type3(const ChernTriple& w, const ChernTriple& v, const GeometryContext& ctx);

enum class Nesting { FirstInsideSecond, SecondInsideFirst, Equal };

/// Nesting of two walls of the same character v lying left of beta = mu(v).
/// Throws DomainError when either semicircle is not a wall of v on that side.
Nesting nesting_compare(const Semicircle& first, const Semicircle& second, const ChernTriple& v,
                        const GeometryContext& ctx);

enum class PointPosition { Inside, On, Outside };

/// Exact position of (beta, alpha^2) relative to the wall. A vertical line
/// has no inside; points off the line are Outside.
PointPosition point_position(const WallDescriptor& wall, const Rational& beta, const Rational& alpha_sq);

/// Compares nu(w) with nu(v) at (beta, alpha^2).
std::strong_ordering slope_order_at(const ChernTriple& w, const ChernTriple& v, const Rational& beta,
                                    const Rational& alpha_sq, const GeometryContext& ctx);

/// Wall with the inputs reordered so that `higher` has the larger slope.
struct OrientedWall {
  ChernTriple lower;
  ChernTriple higher;
  bool swapped = false;
  WallDescriptor wall;
  std::optional<WallType> type;  // set for semicircles
};

OrientedWall oriented_wall(const ChernTriple& w, const ChernTriple& v, const GeometryContext& ctx);

const char* to_string(PointPosition p);
const char* to_string(Nesting n);

}  // namespace tiltlab
