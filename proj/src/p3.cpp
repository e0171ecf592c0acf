#include "tiltlab/p3.hpp"

#include "tiltlab/errors.hpp"
#include "tiltlab/vanishing.hpp"

namespace tiltlab {

namespace {

void require_rank2_c1(const Integer& c1) {
  if (c1 != 0 && c1 != -1) throw DomainError("rank-two bounds need c1 = 0 or c1 = -1");
}

void require_stable_input(const P3Character& p) {
  if (p.rank < 1) throw DomainError("rank must be positive");
  if (p.discriminant().sign() < 0) {
    throw DomainError("negative discriminant: no slope-stable sheaf has this character");
  }
}

QuadValue power_three_halves(const Rational& x) { return QuadValue(x) * QuadValue::sqrt(x); }

}  // namespace

Rational P3Character::ch2() const {
  const Rational a(c1);
  return (a * a - Rational(2) * c2) / Rational(2);
}

Rational P3Character::ch3() const {
  const Rational a(c1);
  return (a * a * a - Rational(3) * a * c2 + Rational(3) * c3) / Rational(6);
}

Rational P3Character::discriminant() const {
  const Rational a(c1);
  return a * a - Rational(2) * Rational(rank) * ch2();
}

Rational P3Character::line_term() const {
  const Rational a(c1);
  const Rational r(rank);
  return (a * a * a - Rational(3) * a * discriminant()) / (Rational(6) * r * r);
}

Rational P3Character::slope() const { return Rational(c1) / Rational(rank); }

ChernTriple P3Character::to_chern() const { return {Rational(rank), Rational(c1), ch2(), ch3()}; }

Rational bmt_expression(const ChernTriple& v, const Rational& beta, const Rational& alpha_sq) {
  if (!v.e3) throw DomainError("the cubic inequality needs ch3 (four components)");
  if (alpha_sq.sign() <= 0) throw DomainError("alpha^2 must be positive");
  const ChernTriple t = twist_along_h(v, beta);
  return alpha_sq * gen_discriminant(t) + Rational(4) * t.e2 * t.e2 - Rational(6) * t.e1 * *t.e3;
}

bool bmt_holds(const ChernTriple& v, const Rational& beta, const Rational& alpha_sq) {
  return bmt_expression(v, beta, alpha_sq).sign() >= 0;
}

int ch3_bound_case(const P3Character& p, const Rational& mu_max) {
  require_stable_input(p);
  const Rational r(p.rank);
  const QuadValue threshold = QuadValue(p.slope()) - QuadValue::sqrt(p.discriminant() / (r + Rational(1))) / QuadValue(r);
  return QuadValue(mu_max) > threshold ? 1 : 2;
}

QuadValue ch3_bound_strip(const P3Character& p, const Rational& mu_max) {
  require_stable_input(p);
  const Rational x = p.slope() - mu_max;
  if (x.sign() <= 0) throw HypothesisError("the slope bound must be strictly below mu = " + p.slope().to_string());
  const Rational r(p.rank);
  const Rational d = p.discriminant();
  return QuadValue(d / (Rational(6) * r) * (x + d / (r * r) / x) + p.line_term());
}

QuadValue ch3_bound_root(const P3Character& p) {
  require_stable_input(p);
  const Rational r(p.rank);
  const Rational d = p.discriminant();
  const QuadValue lead = QuadValue((r + Rational(2)) * d / (Rational(6) * r * r)) *
                         QuadValue::sqrt(d / (r + Rational(1)));
  return lead + QuadValue(p.line_term());
}

QuadValue ch3_upper_bound(const P3Character& p, const SlopeBound& mu_max) {
  require_stable_input(p);
  const Rational bound = mu_max.is_default() ? farey_floor(p.slope(), p.rank) : *mu_max.value();
  if (bound >= p.slope()) {
    throw HypothesisError("the slope bound " + bound.to_string() + " must be strictly below mu = " +
                          p.slope().to_string());
  }
  return ch3_bound_case(p, bound) == 1 ? ch3_bound_strip(p, bound) : ch3_bound_root(p);
}

QuadValue c3_from_ch3(const QuadValue& ch3, const Integer& c1, const Rational& c2) {
  const Rational a(c1);
  return QuadValue(2) * ch3 + QuadValue(a * c2 - a * a * a / Rational(3));
}

QuadValue rank2_c3_bound(const Integer& c1, const Rational& c2, bool mu_max_large) {
  require_rank2_c1(c1);
  const Rational third(1, 3);
  if (c1 == 0) {
    if (mu_max_large) return QuadValue(Rational(4) * third * c2 * c2 + third * c2);
    if (c2.sign() <= 0) throw DomainError("the 3/2-power bound needs c2 > 0 when c1 = 0");
    return power_three_halves(Rational(4) * third * c2);
  }
  if (mu_max_large) return QuadValue(Rational(4) * third * c2 * c2 - third * c2);
  const Rational base = (Rational(4) * c2 - Rational(1)) * third;
  if (base.sign() < 0) throw DomainError("the 3/2-power bound needs 4 c2 - 1 >= 0 when c1 = -1");
  return power_three_halves(base);
}

Rational hartshorne_bound(const Integer& c1, const Rational& c2) {
  require_rank2_c1(c1);
  if (c1 == 0) return c2 * c2 - c2 + Rational(2);
  return c2 * c2;
}

QuadValue best_c3_bound(const Integer& c1, const Rational& c2, bool mu_max_large, bool reflexive) {
  const QuadValue own = rank2_c3_bound(c1, c2, mu_max_large);
  if (!reflexive) return own;
  return min(own, QuadValue(hartshorne_bound(c1, c2)));
}

}  // namespace tiltlab
