#pragma once

#include <optional>
#include <string>

#include "tiltlab/chern.hpp"
#include "tiltlab/quad.hpp"

namespace tiltlab {

/// A slope bound supplied by the caller, or the default derived from the
/// rank (only available on the sheaf side).
class SlopeBound {
public:
  static SlopeBound user(Rational value) { return SlopeBound(std::move(value)); }
  static SlopeBound farey_default() { return SlopeBound(); }

  bool is_default() const { return !value_.has_value(); }
  const std::optional<Rational>& value() const { return value_; }

private:
  SlopeBound() = default;
  explicit SlopeBound(Rational v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

struct StabilityRegion {
  enum class Kind { LeftHalfStrip, VerticalRay, OpenLeftHalfPlane, RightHalfStrip, ClosedRightHalfPlane };

  Kind kind = Kind::LeftHalfStrip;
  /// Boundary beta: strip edge, ray position or half-plane edge.
  QuadValue beta;
  /// The slope bound actually used; absent when the discriminant vanishes.
  std::optional<Rational> slope_bound;
  /// Hypothesis the certificate depends on, in words.
  std::string conditional_on;
};

/// [H^n mu(v)]_rank / H^n. Requires integral rank.
Rational default_mu_max(const ChernTriple& v, const GeometryContext& ctx);

/// mu(v) - sqrt(disc / (rank + 1)) / v0: the case split for both sides
/// (mirrored with + on the shift side).
QuadValue sheaf_case_threshold(const ChernTriple& v, const GeometryContext& ctx);
QuadValue shift_case_threshold(const ChernTriple& v, const GeometryContext& ctx);

/// Left strip edge mu(v) - (disc / v0^2) / (mu(v) - mu) for an arbitrary,
/// possibly irrational, slope bound mu.
QuadValue sheaf_strip_edge(const ChernTriple& v, const QuadValue& mu);
/// Vertical ray position mu(v) - sqrt((rank + 1) disc) / v0.
QuadValue sheaf_ray_position(const ChernTriple& v, const GeometryContext& ctx);

QuadValue shift_strip_edge(const ChernTriple& v, const QuadValue& mu_bar);
QuadValue shift_ray_position(const ChernTriple& v, const GeometryContext& ctx);

/// Where v is certified tilt-stable, given that every subsheaf has slope at
/// most the supplied bound.
StabilityRegion stable_region_sheaf(const ChernTriple& v, const SlopeBound& mu, const GeometryContext& ctx);

/// Where the shift v[1] is certified tilt-stable, given a lower bound on the
/// slopes of the relevant quotients. The bound must be user-supplied unless
/// the discriminant vanishes.
StabilityRegion stable_region_shift(const ChernTriple& v, const SlopeBound& mu_bar, const GeometryContext& ctx);

bool region_contains(const StabilityRegion& r, const Rational& beta, const Rational& alpha_sq);

const char* to_string(StabilityRegion::Kind k);

}  // namespace tiltlab
