#pragma once

// Deterministic random generators for property tests.

#include <cstdint>
#include <random>

#include "tiltlab/chern.hpp"
#include "tiltlab/rational.hpp"
#include "tiltlab/walls.hpp"

namespace gen {

using tiltlab::ChernTriple;
using tiltlab::Rational;

class Source {
public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return range(0, 1) == 1; }

  /// p/q with |p| <= num_bound and 1 <= q <= den_bound.
  Rational rational(long num_bound, long den_bound) {
    return Rational(range(-num_bound, num_bound), range(1, den_bound));
  }
  Rational positive_rational(long num_bound, long den_bound) {
    return Rational(range(1, num_bound), range(1, den_bound));
  }
  Rational nonneg_rational(long num_bound, long den_bound) {
    return Rational(range(0, num_bound), range(1, den_bound));
  }

  /// Positive rank, small slope, discriminant >= 0 (zero with probability ~1/4).
  ChernTriple character(const Rational& hn = Rational(1), long max_rank = 4) {
    const Rational e0 = Rational(range(1, max_rank)) * hn;
    const Rational e1 = rational(8, 4);
    Rational e2 = e1 * e1 / (Rational(2) * e0);
    if (range(0, 3) != 0) e2 -= nonneg_rational(12, 4);
    return {e0, e1, e2};
  }

  /// Character with strictly positive discriminant.
  ChernTriple positive_disc_character(const Rational& hn = Rational(1), long max_rank = 4) {
    for (;;) {
      ChernTriple t = character(hn, max_rank);
      if (tiltlab::gen_discriminant(t).sign() > 0) return t;
    }
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

/// Pair (w, v) with mu(w) < mu(v) whose wall is a non-empty semicircle.
struct WallPair {
  ChernTriple w;
  ChernTriple v;
  tiltlab::Semicircle wall;
};

inline WallPair semicircle_pair(Source& src, const tiltlab::GeometryContext& ctx) {
  for (;;) {
    ChernTriple w = src.character(ctx.hn);
    ChernTriple v = src.character(ctx.hn);
    if (tiltlab::proportional(w, v) || w.e1 / w.e0 == v.e1 / v.e0) continue;
    if (w.e1 / w.e0 > v.e1 / v.e0) std::swap(w, v);
    const auto d = tiltlab::numerical_wall(w, v, ctx);
    if (const auto* c = std::get_if<tiltlab::Semicircle>(&d)) return {w, v, *c};
  }
}

/// Semicircle pair of the requested type.
inline WallPair typed_pair(Source& src, const tiltlab::GeometryContext& ctx, tiltlab::WallType type) {
  for (;;) {
    WallPair p = semicircle_pair(src, ctx);
    if (tiltlab::classify_type(p.w, p.v, ctx) == type) return p;
  }
}

}  // namespace gen
