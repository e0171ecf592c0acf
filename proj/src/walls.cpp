#include "tiltlab/walls.hpp"

#include "tiltlab/errors.hpp"

namespace tiltlab {

namespace {

void require_wall_inputs(const ChernTriple& w, const ChernTriple& v, const GeometryContext& ctx) {
  check_compatible(w, ctx);
  check_compatible(v, ctx);
  if (w.e0.is_zero() || v.e0.is_zero()) {
    throw UnsupportedError("walls against rank-zero characters are not supported");
  }
  if (w.e0.sign() < 0 || v.e0.sign() < 0) throw DomainError("wall formulas need positive ranks");
  if (proportional(w, v)) {
    throw DegenerateWallError("characters " + w.to_string() + " and " + v.to_string() + " are proportional");
  }
  if (gen_discriminant(w).sign() < 0 || gen_discriminant(v).sign() < 0) {
    throw DomainError("wall formulas need non-negative discriminants");
  }
}

// Normalised discriminant, i.e. (sqrt(discriminant) / e0)^2.
Rational normalised_disc(const ChernTriple& t) { return gen_discriminant(t) / (t.e0 * t.e0); }

QuadValue normalised_root(const ChernTriple& t) { return QuadValue::sqrt(normalised_disc(t)); }

Semicircle require_semicircle(const WallDescriptor& d) {
  if (const auto* c = std::get_if<Semicircle>(&d)) return *c;
  throw DomainError(std::holds_alternative<EmptyWall>(d) ? "the wall is empty and has no type"
                                                         : "a vertical wall has no type");
}

void require_oriented(const ChernTriple& w, const ChernTriple& v) {
  if (finite_slope(v) <= finite_slope(w)) {
    throw DomainError("expected mu(v) > mu(w); reorder the characters");
  }
}

}  // namespace

WallDescriptor numerical_wall(const ChernTriple& w, const ChernTriple& v, const GeometryContext& ctx) {
  require_wall_inputs(w, v, ctx);
  const Rational mu_v = finite_slope(v);
  const Rational mu_w = finite_slope(w);
  if (mu_v == mu_w) return VerticalLine{mu_v};
  const Rational dv = normalised_disc(v);
  const Rational dw = normalised_disc(w);
  const Rational center = (mu_v + mu_w) / Rational(2) - (dv - dw) / (Rational(2) * (mu_v - mu_w));
  const Rational radius_sq = square(center - mu_v) - dv;
  if (radius_sq.sign() <= 0) return EmptyWall{};
  return Semicircle{center, radius_sq};
}

WallType classify_type(const ChernTriple& w, const ChernTriple& v, const GeometryContext& ctx) {
  const Semicircle c = require_semicircle(numerical_wall(w, v, ctx));
  require_oriented(w, v);
  const Rational gap = finite_slope(v) - finite_slope(w);
  const QuadValue a = normalised_root(v);
  const QuadValue b = normalised_root(w);
  // On a non-empty wall the inequalities below are strict and exactly one
  // applies on each side of mu(v), so the ordering of the tests is only a
  // tie-break for completeness.
  if (c.center <= finite_slope(v)) {
    if (QuadValue(gap) + b <= a) return WallType::Type1;
    if (QuadValue(gap) - b >= a) return WallType::Type2;
  } else if (QuadValue(gap) + a <= b) {
    return WallType::Type3;
  }
  throw DomainError("wall satisfies none of the type inequalities");
}

ChernTriple discriminant_free(const ChernTriple& u) {
  if (u.e0.is_zero()) throw DomainError("discriminant-free vector needs non-zero rank");
  return {u.e0, u.e1, u.e1 * u.e1 / (Rational(2) * u.e0)};
}

Semicircle modified_wall_type1(const ChernTriple& w, const ChernTriple& v, const GeometryContext& ctx) {
  if (classify_type(w, v, ctx) != WallType::Type1) throw TypeMismatchError("modification needs a Type1 wall");
  const Rational mu_v = finite_slope(v);
  const Rational mu_w = finite_slope(w);
  const Rational gap = mu_v - mu_w;
  const Rational k = normalised_disc(v) / (Rational(2) * gap);
  return {(mu_v + mu_w) / Rational(2) - k, square(k - gap / Rational(2))};
}

Semicircle modified_wall_type3(const ChernTriple& w, const ChernTriple& v, const GeometryContext& ctx) {
  if (classify_type(w, v, ctx) != WallType::Type3) throw TypeMismatchError("modification needs a Type3 wall");
  const Rational mu_v = finite_slope(v);
  const Rational mu_w = finite_slope(w);
  const Rational gap = mu_v - mu_w;
  const Rational k = normalised_disc(w) / (Rational(2) * gap);
  return {(mu_v + mu_w) / Rational(2) + k, square(k - gap / Rational(2))};
}

Nesting nesting_compare(const Semicircle& first, const Semicircle& second, const ChernTriple& v,
                        const GeometryContext& ctx) {
  check_compatible(v, ctx);
  const Rational mu_v = finite_slope(v);
  const Rational dv = normalised_disc(v);
  // Walls of a fixed v form a coaxal family: (s - mu_v)^2 - r^2 is constant.
  for (const Semicircle* c : {&first, &second}) {
    if (c->radius_sq.sign() <= 0) throw DomainError("semicircle has non-positive radius");
    if (c->center >= mu_v) throw DomainError("nesting is only defined for walls left of beta = mu(v)");
    if (square(c->center - mu_v) - c->radius_sq != dv) {
      throw DomainError("semicircle " + c->center.to_string() + ", " + c->radius_sq.to_string() +
                        " is not a wall of " + v.to_string());
    }
  }
  if (first.center == second.center) return Nesting::Equal;
  return first.center > second.center ? Nesting::FirstInsideSecond : Nesting::SecondInsideFirst;
}

PointPosition point_position(const WallDescriptor& wall, const Rational& beta, const Rational& alpha_sq) {
  if (const auto* c = std::get_if<Semicircle>(&wall)) {
    const int s = (square(beta - c->center) + alpha_sq - c->radius_sq).sign();
    return s < 0 ? PointPosition::Inside : s == 0 ? PointPosition::On : PointPosition::Outside;
  }
  if (const auto* line = std::get_if<VerticalLine>(&wall)) {
    return beta == line->beta ? PointPosition::On : PointPosition::Outside;
  }
  return PointPosition::Outside;
}

std::strong_ordering slope_order_at(const ChernTriple& w, const ChernTriple& v, const Rational& beta,
                                    const Rational& alpha_sq, const GeometryContext& ctx) {
  check_compatible(w, ctx);
  check_compatible(v, ctx);
  const ExtendedSlope nw = tilt_slope(w, beta, alpha_sq);
  const ExtendedSlope nv = tilt_slope(v, beta, alpha_sq);
  if (nw.is_infinite() && nv.is_infinite()) throw DomainError("both tilt slopes are infinite at this point");
  return nw <=> nv;
}

OrientedWall oriented_wall(const ChernTriple& w, const ChernTriple& v, const GeometryContext& ctx) {
  OrientedWall out;
  out.wall = numerical_wall(w, v, ctx);
  out.swapped = finite_slope(w) > finite_slope(v);
  out.lower = out.swapped ? v : w;
  out.higher = out.swapped ? w : v;
  if (std::holds_alternative<Semicircle>(out.wall)) out.type = classify_type(out.lower, out.higher, ctx);
  return out;
}

const char* to_string(PointPosition p) {
  switch (p) {
    case PointPosition::Inside: return "inside";
    case PointPosition::On: return "on";
    case PointPosition::Outside: return "outside";
  }
  return "?";
}

const char* to_string(Nesting n) {
  switch (n) {
    case Nesting::FirstInsideSecond: return "nested-1-in-2";
    case Nesting::SecondInsideFirst: return "nested-2-in-1";
    case Nesting::Equal: return "equal";
  }
  return "?";
}

}  // namespace tiltlab
