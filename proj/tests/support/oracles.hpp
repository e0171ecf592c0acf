#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include <utility>
#include <variant>

#include "tiltlab/chern.hpp"
#include "tiltlab/quad.hpp"
#include "tiltlab/walls.hpp"

namespace oracle {

using namespace tiltlab;

struct Verdict {
  bool intersects = false;
  bool tangent = false;
  Rational discriminant;
};

// Eliminates alpha^2 between the ellipse of v and the circle (s, r^2), written
// as the normalised quadratic in beta, and locates its roots on the circle's
// beta-span.
inline Verdict conic_oracle(const ChernTriple& v, const Rational& hn, const Rational& s, const Rational& r) {
  const Rational v0 = v.e0;
  const Rational mu = v.e1 / v.e0;
  const Rational dbar = v.e1 * v.e1 - Rational(2) * v.e0 * v.e2;
  const Rational a = hn / (v0 + hn);
  const Rational b = Rational(2) * (mu * v0 / (v0 + hn) - s);
  const Rational c = s * s - mu * mu * v0 / (v0 + hn) - r * r + dbar / (v0 * hn);
  Verdict out;
  out.discriminant = b * b - Rational(4) * a * c;
  if (out.discriminant.sign() < 0) return out;
  const QuadValue root = QuadValue::sqrt(out.discriminant);
  for (const QuadValue& beta : {(QuadValue(-b) - root) / QuadValue(Rational(2) * a),
                                (QuadValue(-b) + root) / QuadValue(Rational(2) * a)}) {
    const QuadValue lo(s - r), hi(s + r);
    if (beta > lo && beta < hi) out.intersects = true;
    if (beta == lo || beta == hi) out.tangent = true;
  }
  return out;
}

// Modified walls from the printed center/radius formulas. `low` has the
// smaller slope.
inline std::pair<Rational, Rational> modified_left(const ChernTriple& low, const ChernTriple& high) {
  const Rational gap = high.e1 / high.e0 - low.e1 / low.e0;
  const Rational k = gen_discriminant(high) / (Rational(2) * high.e0 * high.e0) / gap;
  return {(high.e1 / high.e0 + low.e1 / low.e0) / Rational(2) - k, k - gap / Rational(2)};
}

inline std::pair<Rational, Rational> modified_right(const ChernTriple& low, const ChernTriple& high) {
  const Rational gap = high.e1 / high.e0 - low.e1 / low.e0;
  const Rational k = gen_discriminant(low) / (Rational(2) * low.e0 * low.e0) / gap;
  return {(high.e1 / high.e0 + low.e1 / low.e0) / Rational(2) + k, k - gap / Rational(2)};
}

// Character of rank `rank` * hn with slope mu whose threshold offset
// sqrt(disc / (rank + 1)) / v0 equals t.
inline ChernTriple with_rational_threshold(const Rational& hn, long rank, const Rational& mu, const Rational& t) {
  const Rational v0 = Rational(rank) * hn;
  const Rational dbar = Rational(rank + 1) * square(t * v0);
  const Rational e1 = mu * v0;
  return {v0, e1, (e1 * e1 - dbar) / (Rational(2) * v0)};
}

inline bool left_preconditions(const ChernTriple& w, const ChernTriple& v, const GeometryContext& ctx) {
  const Rational gap = v.e1 / v.e0 - w.e1 / w.e0;
  if (gap.sign() <= 0 || gen_discriminant(v).sign() <= 0) return false;
  if (square(gap) >= gen_discriminant(v) / square(v.e0)) return false;  // modified wall not Type1
  const WallDescriptor d = numerical_wall(w, v, ctx);
  return !std::holds_alternative<Semicircle>(d) || classify_type(w, v, ctx) == WallType::Type1;
}

}  // namespace oracle
