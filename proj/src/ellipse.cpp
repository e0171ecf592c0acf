#include "tiltlab/ellipse.hpp"

#include "tiltlab/errors.hpp"

namespace tiltlab {

namespace {

void require_ellipse_input(const ChernTriple& v, const GeometryContext& ctx) {
  check_compatible(v, ctx);
  if (v.e0.sign() <= 0) throw DomainError("extremal ellipse needs positive rank");
  if (gen_discriminant(v).sign() < 0) throw DomainError("extremal ellipse needs a non-negative discriminant");
}

// Checks the hypotheses shared by the Type1 contact test and returns the
// modified wall.
Semicircle checked_modified_wall(const ChernTriple& w, const ChernTriple& v, const GeometryContext& ctx) {
  require_ellipse_input(v, ctx);
  if (gen_discriminant(v).sign() <= 0) throw DomainError("contact test needs a positive discriminant for v");
  if (finite_slope(w) >= finite_slope(v)) throw DomainError("expected mu(w) < mu(v)");
  const WallDescriptor original = numerical_wall(w, v, ctx);
  if (std::holds_alternative<Semicircle>(original) && classify_type(w, v, ctx) != WallType::Type1) {
    throw TypeMismatchError("the wall of w and v is not of Type1");
  }
  const ChernTriple free_w = discriminant_free(w);
  if (!std::holds_alternative<Semicircle>(numerical_wall(free_w, v, ctx))) {
    throw TypeMismatchError("the modified wall is empty");
  }
  return modified_wall_type1(free_w, v, ctx);
}

}  // namespace

Rational ExtremalEllipse::evaluate(const Rational& beta, const Rational& alpha_sq) const {
  return v0 * square(beta - mu) + (v0 + hn) * alpha_sq;
}

ExtremalEllipse extremal_ellipse(const ChernTriple& v, const GeometryContext& ctx) {
  require_ellipse_input(v, ctx);
  const Rational rhs = (v.e0 + ctx.hn) / (v.e0 * ctx.hn) * gen_discriminant(v);
  return {finite_slope(v), v.e0, ctx.hn, rhs};
}

bool rank_bound_holds(const ChernTriple& v, const Rational& beta, const Rational& alpha_sq,
                      const GeometryContext& ctx) {
  if (alpha_sq.sign() <= 0) throw DomainError("alpha^2 must be positive");
  const ExtremalEllipse e = extremal_ellipse(v, ctx);
  return e.evaluate(beta, alpha_sq) >= e.rhs;
}

EllipseContact intersects_modified_type1(const ChernTriple& w, const ChernTriple& v, const GeometryContext& ctx) {
  checked_modified_wall(w, v, ctx);
  const Rational rank = v.e0 / ctx.hn;
  const QuadValue reach = QuadValue::sqrt(gen_discriminant(v) / (rank + Rational(1))) / QuadValue(v.e0);
  const QuadValue threshold = QuadValue(finite_slope(v)) - reach;
  const auto c = compare(QuadValue(finite_slope(w)), threshold);
  return {c > 0, c == 0};
}

std::pair<Rational, Rational> intersection_betas(const ChernTriple& w, const ChernTriple& v,
                                                 const GeometryContext& ctx) {
  const Semicircle m = checked_modified_wall(w, v, ctx);
  // The modified wall's radius is rational: its right end is mu(w).
  const Rational radius = finite_slope(w) - m.center;
  const Rational scale = (v.e0 + ctx.hn) / ctx.hn;
  const Rational shift = v.e0 / ctx.hn * finite_slope(v);
  return {scale * (m.center - radius) - shift, scale * (m.center + radius) - shift};
}

ChernTriple reflect(const ChernTriple& t) {
  ChernTriple out{t.e0, -t.e1, t.e2};
  if (t.e3) out.e3 = -*t.e3;
  return out;
}

EllipseContact intersects_modified_type3(const ChernTriple& v, const ChernTriple& w, const GeometryContext& ctx) {
  if (finite_slope(w) <= finite_slope(v)) throw DomainError("expected mu(w) > mu(v)");
  return intersects_modified_type1(reflect(w).truncated(), reflect(v).truncated(), ctx);
}

std::pair<Rational, Rational> intersection_betas_type3(const ChernTriple& v, const ChernTriple& w,
                                                       const GeometryContext& ctx) {
  if (finite_slope(w) <= finite_slope(v)) throw DomainError("expected mu(w) > mu(v)");
  const auto [minus, plus] = intersection_betas(reflect(w).truncated(), reflect(v).truncated(), ctx);
  return {-plus, -minus};
}

}  // namespace tiltlab
