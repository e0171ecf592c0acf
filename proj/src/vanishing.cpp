#include "tiltlab/vanishing.hpp"

#include "tiltlab/errors.hpp"

namespace tiltlab {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

VanishingResult from_bound(QuadValue bound) {
  Integer l = bound.next_integer_above();
  return {std::move(bound), std::move(l)};
}

void require_factors(const std::vector<HNFactor>& factors, const SurfaceContext& ctx) {
  if (factors.empty()) throw DomainError("the factor list is empty");
  if (ctx.hh.sign() <= 0) throw DomainError("H^2 must be positive");
  for (const HNFactor& f : factors) {
    if (f.rank < 1) throw DomainError("factor ranks must be positive");
    if (f.delta_k.sign() < 0) throw DomainError("factor discriminants must be non-negative");
  }
}

QuadValue sqrt_term(const HNFactor& f, const SurfaceContext& ctx) {
  return QuadValue::sqrt(Rational(2) * f.delta_k / (ctx.hh * ctx.hh * Rational(f.rank))) - QuadValue(f.mu_k);
}

}  // namespace

Rational farey_floor(const Rational& r, long m) {
  if (m < 1) throw DomainError("denominator bound must be at least 1");
  const Integer& p = r.num();
  const Integer& q = r.den();
  const Integer mm(m);
  // Farey neighbours with ln/ld < r <= rn/rd.
  const Integer c = r.ceil();
  Integer ln = c - 1, ld = 1, rn = c, rd = 1;
  while (ld + rd <= mm) {
    const Integer gap_left = p * ld - q * ln;   // > 0
    const Integer gap_right = q * rn - p * rd;  // >= 0
    if (q * (ln + rn) < p * (ld + rd)) {
      // Mediant still below r: step the left end towards the right one.
      Integer k = (mm - ld) / rd;
      if (gap_right != 0) {
        const Integer k_max = ceil_div(gap_left, gap_right) - 1;
        if (k_max < k) k = k_max;
      }
      ln += k * rn;
      ld += k * rd;
    } else {
      Integer k = floor_div(gap_right, gap_left);
      const Integer k_den = (mm - rd) / ld;
      if (k_den < k) k = k_den;
      rn += k * ln;
      rd += k * ld;
    }
  }
  return Rational(ln, ld);
}

HNFactor twisted_invariants(const SurfaceSheafData& s, const SurfaceContext& ctx) {
  if (s.rank < 1) throw DomainError("rank must be positive");
  if (ctx.hh.sign() <= 0) throw DomainError("H^2 must be positive");
  const Rational r(s.rank);
  const Rational degree = s.c1h - r * ctx.kh;
  HNFactor out;
  out.rank = s.rank;
  out.mu_k = degree / (ctx.hh * r);
  out.delta_k = square(degree) - Rational(2) * ctx.hh * r * (s.ch2 - s.c1k + r * ctx.kk / Rational(2));
  return out;
}

VanishingResult vanishing_top_minus_one(const ChernTriple& v, const SlopeBound& mu, const GeometryContext& ctx) {
  const StabilityRegion region = stable_region_sheaf(v, mu, ctx);
  // The certified beta edge, read back through Serre duality.
  return from_bound(-region.beta);
}

VanishingResult vanishing_h1(const ChernTriple& v, const SlopeBound& mu_bar, const GeometryContext& ctx) {
  const StabilityRegion region = stable_region_shift(v, mu_bar, ctx);
  return from_bound(region.beta);
}

QuadValue serre_bound(const std::vector<HNFactor>& factors, const SurfaceContext& ctx) {
  require_factors(factors, ctx);
  std::optional<QuadValue> best;
  for (const HNFactor& f : factors) {
    const Rational degree = ctx.hh * f.mu_k;
    const Rational spacing = degree - farey_floor(degree, f.rank);
    const QuadValue first(f.delta_k / (ctx.hh * Rational(f.rank)) / spacing - f.mu_k);
    const QuadValue m = max(first, sqrt_term(f, ctx));
    if (!best || m > *best) best = m;
  }
  return *best;
}

QuadValue serre_bound_weak(const std::vector<HNFactor>& factors, const SurfaceContext& ctx) {
  require_factors(factors, ctx);
  std::optional<QuadValue> best;
  for (const HNFactor& f : factors) {
    const QuadValue first(f.delta_k / ctx.hh - f.mu_k);
    const QuadValue m = max(first, sqrt_term(f, ctx));
    if (!best || m > *best) best = m;
  }
  return *best;
}

QuadValue cm_regularity_bound(const std::vector<HNFactor>& factors, const SurfaceContext& ctx) {
  require_factors(factors, ctx);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i].mu_k >= factors[i - 1].mu_k) {
      throw DomainError("factors must be listed by strictly decreasing slope");
    }
  }
  return max(QuadValue(1) + serre_bound(factors, ctx), QuadValue(Rational(2) - factors.back().mu_k));
}

}  // namespace tiltlab
