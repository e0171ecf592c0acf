#pragma once

#include <vector>

#include "tiltlab/chern.hpp"
#include "tiltlab/quad.hpp"
#include "tiltlab/stability.hpp"

namespace tiltlab {

/// Largest fraction a/b < r with 1 <= b <= m.
Rational farey_floor(const Rational& r, long m);

/// H^2, K.H and K^2 of a polarised surface.
struct SurfaceContext {
  Rational hh = Rational(1);
  Rational kh;
  Rational kk;
};

/// Slope and discriminant of a Harder-Narasimhan factor, both twisted by K.
struct HNFactor {
  long rank = 1;
  Rational mu_k;
  Rational delta_k;
};

/// Raw invariants of a surface sheaf: rank, H.c1, K.c1 and ch2.
struct SurfaceSheafData {
  long rank = 1;
  Rational c1h;
  Rational c1k;
  Rational ch2;
};

HNFactor twisted_invariants(const SurfaceSheafData& s, const SurfaceContext& ctx);

struct VanishingResult {
  QuadValue bound;
  Integer min_l;  // smallest integer strictly above bound
};

/// H^{n-1}(E(K + lH)) = 0 for every integer l >= min_l.
VanishingResult vanishing_top_minus_one(const ChernTriple& v, const SlopeBound& mu, const GeometryContext& ctx);

/// H^1(E(-lH)) = 0 for every integer l >= min_l (reflexive E).
VanishingResult vanishing_h1(const ChernTriple& v, const SlopeBound& mu_bar, const GeometryContext& ctx);

/// Threshold M(F): H^1(F(lH)) = 0 for all l > M(F).
QuadValue serre_bound(const std::vector<HNFactor>& factors, const SurfaceContext& ctx);
/// Simpler, coarser variant of serre_bound.
QuadValue serre_bound_weak(const std::vector<HNFactor>& factors, const SurfaceContext& ctx);

/// F is m-regular for every integer m strictly above the returned value.
/// Factors must be in order of strictly decreasing slope.
QuadValue cm_regularity_bound(const std::vector<HNFactor>& factors, const SurfaceContext& ctx);

}  // namespace tiltlab
