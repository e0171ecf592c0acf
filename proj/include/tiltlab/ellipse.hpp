#pragma once

#include <utility>

#include "tiltlab/chern.hpp"
#include "tiltlab/quad.hpp"
#include "tiltlab/walls.hpp"

namespace tiltlab {

/// v0 (beta - mu)^2 + (v0 + hn) alpha^2 = rhs.
struct ExtremalEllipse {
  Rational mu;
  Rational v0;
  Rational hn;
  Rational rhs;

  /// Left-hand side of the defining equation at (beta, alpha^2).
  Rational evaluate(const Rational& beta, const Rational& alpha_sq) const;
  /// Half-width along the beta-axis, sqrt(rhs / v0).
  QuadValue half_width() const { return QuadValue::sqrt(rhs / v0); }
  QuadValue left_intercept() const { return QuadValue(mu) - half_width(); }
  QuadValue right_intercept() const { return QuadValue(mu) + half_width(); }
  bool degenerate() const { return rhs.is_zero(); }
};

ExtremalEllipse extremal_ellipse(const ChernTriple& v, const GeometryContext& ctx);

/// True when (beta, alpha^2) lies on or outside the extremal ellipse of v,
/// where any tilt-destabilising subobject has rank at most rank(v).
bool rank_bound_holds(const ChernTriple& v, const Rational& beta, const Rational& alpha_sq,
                      const GeometryContext& ctx);

struct EllipseContact {
  bool intersects = false;  // common point with alpha > 0
  bool tangent = false;     // touches only on the beta-axis
};

/// Ellipse of v against the modified wall of (discriminant_free(w), v), where
/// mu(w) < mu(v).
EllipseContact intersects_modified_type1(const ChernTriple& w, const ChernTriple& v, const GeometryContext& ctx);

/// The two beta-roots of the wall/ellipse elimination, {minus, plus}.
std::pair<Rational, Rational> intersection_betas(const ChernTriple& w, const ChernTriple& v,
                                                 const GeometryContext& ctx);

/// Mirror case: ellipse of v against the modified wall of (v, discriminant_free(w)),
/// where mu(w) > mu(v).
EllipseContact intersects_modified_type3(const ChernTriple& v, const ChernTriple& w, const GeometryContext& ctx);

std::pair<Rational, Rational> intersection_betas_type3(const ChernTriple& v, const ChernTriple& w,
                                                       const GeometryContext& ctx);

/// Negates e1 (and e3), reflecting the (beta, alpha) plane in beta = 0.
ChernTriple reflect(const ChernTriple& t);

}  // namespace tiltlab
