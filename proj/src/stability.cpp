#include "tiltlab/stability.hpp"

#include "tiltlab/errors.hpp"
#include "tiltlab/vanishing.hpp"

namespace tiltlab {

namespace {

void require_region_input(const ChernTriple& v, const GeometryContext& ctx) {
  check_compatible(v, ctx);
  if (v.e0.sign() <= 0) throw DomainError("stability regions need positive rank");
  if (gen_discriminant(v).sign() < 0) throw DomainError("stability regions need a non-negative discriminant");
}

QuadValue reach(const ChernTriple& v, const GeometryContext& ctx) {
  const Rational rank = v.e0 / ctx.hn;
  return QuadValue::sqrt(gen_discriminant(v) / (rank + Rational(1))) / QuadValue(v.e0);
}

QuadValue ray_offset(const ChernTriple& v, const GeometryContext& ctx) {
  const Rational rank = v.e0 / ctx.hn;
  return QuadValue::sqrt((rank + Rational(1)) * gen_discriminant(v)) / QuadValue(v.e0);
}

}  // namespace

Rational default_mu_max(const ChernTriple& v, const GeometryContext& ctx) {
  check_compatible(v, ctx);
  if (!v.has_integral_rank(ctx)) {
    throw DomainError("the default slope bound needs a positive integral rank, got " + v.rank(ctx).to_string());
  }
  const Integer rank = v.rank(ctx).num();
  return farey_floor(ctx.hn * finite_slope(v), rank.get_si()) / ctx.hn;
}

QuadValue sheaf_case_threshold(const ChernTriple& v, const GeometryContext& ctx) {
  require_region_input(v, ctx);
  return QuadValue(finite_slope(v)) - reach(v, ctx);
}

QuadValue shift_case_threshold(const ChernTriple& v, const GeometryContext& ctx) {
  require_region_input(v, ctx);
  return QuadValue(finite_slope(v)) + reach(v, ctx);
}

QuadValue sheaf_strip_edge(const ChernTriple& v, const QuadValue& mu) {
  const QuadValue mu_e(finite_slope(v));
  return mu_e - QuadValue(gen_discriminant(v) / (v.e0 * v.e0)) / (mu_e - mu);
}

QuadValue sheaf_ray_position(const ChernTriple& v, const GeometryContext& ctx) {
  require_region_input(v, ctx);
  return QuadValue(finite_slope(v)) - ray_offset(v, ctx);
}

QuadValue shift_strip_edge(const ChernTriple& v, const QuadValue& mu_bar) {
  const QuadValue mu_e(finite_slope(v));
  return mu_e + QuadValue(gen_discriminant(v) / (v.e0 * v.e0)) / (mu_bar - mu_e);
}

QuadValue shift_ray_position(const ChernTriple& v, const GeometryContext& ctx) {
  require_region_input(v, ctx);
  return QuadValue(finite_slope(v)) + ray_offset(v, ctx);
}

StabilityRegion stable_region_sheaf(const ChernTriple& v, const SlopeBound& mu, const GeometryContext& ctx) {
  require_region_input(v, ctx);
  const Rational mu_e = finite_slope(v);
  StabilityRegion out;
  if (gen_discriminant(v).is_zero()) {
    out.kind = StabilityRegion::Kind::OpenLeftHalfPlane;
    out.beta = mu_e;
    out.conditional_on = "v is the class of a slope-stable sheaf";
    return out;
  }
  const Rational bound = mu.is_default() ? default_mu_max(v, ctx) : *mu.value();
  if (bound >= mu_e) {
    throw HypothesisError("the slope bound " + bound.to_string() + " must be strictly below mu(v) = " +
                          mu_e.to_string());
  }
  out.slope_bound = bound;
  out.conditional_on = "mu-max <= " + bound.to_string();
  if (QuadValue(bound) > sheaf_case_threshold(v, ctx)) {
    out.kind = StabilityRegion::Kind::LeftHalfStrip;
    out.beta = sheaf_strip_edge(v, bound);
  } else {
    out.kind = StabilityRegion::Kind::VerticalRay;
    out.beta = sheaf_ray_position(v, ctx);
  }
  return out;
}

StabilityRegion stable_region_shift(const ChernTriple& v, const SlopeBound& mu_bar, const GeometryContext& ctx) {
  require_region_input(v, ctx);
  const Rational mu_e = finite_slope(v);
  StabilityRegion out;
  if (gen_discriminant(v).is_zero()) {
    out.kind = StabilityRegion::Kind::ClosedRightHalfPlane;
    out.beta = mu_e;
    out.conditional_on = "v is the class of a reflexive slope-stable sheaf";
    return out;
  }
  if (mu_bar.is_default()) {
    throw DomainError("the shift side needs an explicit lower slope bound for quotients (--mu)");
  }
  const Rational bound = *mu_bar.value();
  if (bound <= mu_e) {
    throw HypothesisError("the slope bound " + bound.to_string() + " must be strictly above mu(v) = " +
                          mu_e.to_string());
  }
  out.slope_bound = bound;
  out.conditional_on = "mu-min >= " + bound.to_string() + "; sheaf assumed reflexive";
  if (QuadValue(bound) < shift_case_threshold(v, ctx)) {
    out.kind = StabilityRegion::Kind::RightHalfStrip;
    out.beta = shift_strip_edge(v, bound);
  } else {
    out.kind = StabilityRegion::Kind::VerticalRay;
    out.beta = shift_ray_position(v, ctx);
  }
  return out;
}

bool region_contains(const StabilityRegion& r, const Rational& beta, const Rational& alpha_sq) {
  if (alpha_sq.sign() <= 0) throw DomainError("alpha^2 must be positive");
  const QuadValue b(beta);
  switch (r.kind) {
    case StabilityRegion::Kind::LeftHalfStrip: return b <= r.beta;
    case StabilityRegion::Kind::VerticalRay: return b == r.beta;
    case StabilityRegion::Kind::OpenLeftHalfPlane: return b < r.beta;
    case StabilityRegion::Kind::RightHalfStrip: return b >= r.beta;
    case StabilityRegion::Kind::ClosedRightHalfPlane: return b >= r.beta;
  }
  return false;
}

const char* to_string(StabilityRegion::Kind k) {
  switch (k) {
    case StabilityRegion::Kind::LeftHalfStrip: return "left-strip";
    case StabilityRegion::Kind::VerticalRay: return "vray";
    case StabilityRegion::Kind::OpenLeftHalfPlane: return "open-left";
    case StabilityRegion::Kind::RightHalfStrip: return "right-strip";
    case StabilityRegion::Kind::ClosedRightHalfPlane: return "closed-right";
  }
  return "?";
}

}  // namespace tiltlab
