#include <doctest.h>

#include "support/generators.hpp"
#include "tiltlab/errors.hpp"
#include "tiltlab/p3.hpp"
#include "tiltlab/vanishing.hpp"

using namespace tiltlab;

namespace {

P3Character sheaf(long rank, long c1, Rational c2, Rational c3 = Rational(0)) {
  P3Character p;
  p.rank = rank;
  p.c1 = Integer(c1);
  p.c2 = std::move(c2);
  p.c3 = std::move(c3);
  return p;
}

// Twist by e^{-beta H} written out term by term, then the quadratic form.
Rational bmt_oracle(const ChernTriple& v, const Rational& b, const Rational& a2) {
  const Rational e0 = v.e0;
  const Rational e1 = v.e1 - b * e0;
  const Rational e2 = v.e2 - b * v.e1 + b * b / Rational(2) * e0;
  const Rational e3 = *v.e3 - b * v.e2 + b * b / Rational(2) * v.e1 - b * b * b / Rational(6) * e0;
  const Rational disc = e1 * e1 - Rational(2) * e0 * e2;
  return a2 * disc + Rational(4) * e2 * e2 - Rational(6) * e1 * e3;
}

ChernTriple line_bundle(long k) {
  ChernTriple t(Rational(1), Rational(k), Rational(k * k, 2));
  t.e3 = Rational(k * k * k, 6);
  return t;
}

}  // namespace

TEST_CASE("sheaf invariants on P3") {
  const P3Character p = sheaf(2, 0, Rational(2), Rational(4));
  CHECK(p.ch2() == Rational(-2));
  CHECK(p.ch3() == Rational(2));
  CHECK(p.discriminant() == Rational(8));
  CHECK(p.slope() == Rational(0));
  const P3Character q = sheaf(2, -1, Rational(3), Rational(1));
  CHECK(q.ch2() == Rational(-5, 2));
  CHECK(q.ch3() == Rational(-1 + 9 + 3, 6));
  CHECK(q.discriminant() == Rational(11));
  CHECK(q.line_term() == Rational(-1 + 33, 24));
  const ChernTriple t = q.to_chern();
  CHECK(t.e0 == Rational(2));
  CHECK(t.e1 == Rational(-1));
  CHECK(t.e2 == q.ch2());
  REQUIRE(t.e3.has_value());
  CHECK(*t.e3 == q.ch3());
}

TEST_CASE("BMT expression: worked values") {
  ChernTriple o(1, 0, 0);
  o.e3 = Rational(0);
  CHECK(bmt_expression(o, Rational(-1), Rational(5)) == Rational(0));
  CHECK(bmt_holds(o, Rational(-1), Rational(5)));
  ChernTriple v(1, 0, -1);
  v.e3 = Rational(0);
  CHECK(bmt_expression(v, Rational(-2), Rational(1)) == Rational(14));
  CHECK(bmt_holds(v, Rational(-2), Rational(1)));
  CHECK_THROWS_AS(bmt_expression(ChernTriple(1, 0, -1), Rational(0), Rational(1)), DomainError);
  CHECK_THROWS_AS(bmt_holds(v, Rational(0), Rational(0)), DomainError);
}

TEST_CASE("BMT expression is saturated by line bundles") {
  gen::Source src(61);
  for (long k = -5; k <= 5; ++k) {
    for (int i = 0; i < 20; ++i) {
      const Rational b = src.rational(12, 5);
      const Rational a2 = src.positive_rational(12, 5);
      CHECK(bmt_expression(line_bundle(k), b, a2) == Rational(0));
    }
  }
}

TEST_CASE("BMT expression matches the expanded twist and is homogeneous") {
  gen::Source src(62);
  for (int i = 0; i < 400; ++i) {
    ChernTriple v = src.character(Rational(1), 4);
    v.e3 = src.rational(10, 6);
    const Rational b = src.rational(8, 3);
    const Rational a2 = src.positive_rational(8, 3);
    const Rational e = bmt_expression(v, b, a2);
    CHECK(e == bmt_oracle(v, b, a2));
    CHECK(bmt_holds(v, b, a2) == (e.sign() >= 0));
    const Rational k(src.range(2, 5));
    ChernTriple w = k * v;
    CHECK(bmt_expression(w, b, a2) == k * k * e);
  }
}

TEST_CASE("ch3 bound: worked values") {
  const P3Character p = sheaf(2, 0, Rational(2));
  CHECK(ch3_bound_case(p, Rational(-1, 2)) == 1);
  const QuadValue b1 = ch3_upper_bound(p, SlopeBound::farey_default());
  CHECK(b1 == QuadValue(3));
  CHECK(c3_from_ch3(b1, p.c1, p.c2) == QuadValue(6));
  const QuadValue b2 = ch3_bound_root(p);
  // c3 = 2 ch3 <= (8/3)^{3/2} = (16/9) sqrt(6).
  CHECK(c3_from_ch3(b2, p.c1, p.c2) == QuadValue(Rational(0), Rational(16, 9), Integer(6)));
  const P3Character ideal = sheaf(1, 0, Rational(1));
  CHECK(ch3_bound_case(ideal, Rational(-1)) == 2);
  CHECK(ch3_upper_bound(ideal, SlopeBound::farey_default()) == QuadValue(1));
  CHECK_THROWS_AS(ch3_upper_bound(p, SlopeBound::user(Rational(0))), HypothesisError);
  CHECK_THROWS_AS(ch3_upper_bound(sheaf(2, 0, Rational(-1)), SlopeBound::farey_default()), DomainError);
}

TEST_CASE("ch3 bound uses the strip form above the threshold and the root form at or below it") {
  gen::Source src(63);
  for (int i = 0; i < 300; ++i) {
    const long r = src.range(1, 4);
    const P3Character p = sheaf(r, src.range(-4, 4), src.nonneg_rational(10, 1) + Rational(1));
    if (p.discriminant().sign() <= 0) continue;
    const Rational mu = p.slope();
    const Rational mu_max = mu - src.positive_rational(8, 6);
    const QuadValue threshold =
        QuadValue(mu) - QuadValue::sqrt(p.discriminant() / Rational(r + 1)) / QuadValue(Rational(r));
    const int c = ch3_bound_case(p, mu_max);
    CHECK(c == (QuadValue(mu_max) > threshold ? 1 : 2));
    const QuadValue got = ch3_upper_bound(p, SlopeBound::user(mu_max));
    if (c == 1) {
      const Rational d = p.discriminant();
      const Rational gap = mu - mu_max;
      // Hand form of the strip bound.
      CHECK(got == QuadValue(d / Rational(6 * r) * (gap + d / Rational(r * r) / gap) + p.line_term()));
    } else {
      CHECK(got == ch3_bound_root(p));
    }
  }
}

TEST_CASE("rank-two bounds are the specialised ch3 bound") {
  for (long c1 : {0L, -1L}) {
    for (long c2 = 1; c2 <= 20; ++c2) {
      const P3Character p = sheaf(2, c1, Rational(c2));
      const Rational mu_sel = farey_floor(p.slope(), 2);
      CHECK(rank2_c3_bound(p.c1, p.c2, true) == c3_from_ch3(ch3_bound_strip(p, mu_sel), p.c1, p.c2));
      CHECK(rank2_c3_bound(p.c1, p.c2, false) == c3_from_ch3(ch3_bound_root(p), p.c1, p.c2));
    }
  }
}

TEST_CASE("rank-two and classical bounds: worked values") {
  CHECK(rank2_c3_bound(Integer(0), Rational(2), true) == QuadValue(6));
  CHECK(rank2_c3_bound(Integer(0), Rational(2), false) == QuadValue(Rational(0), Rational(16, 9), Integer(6)));
  CHECK(rank2_c3_bound(Integer(-1), Rational(1), true) == QuadValue(1));
  CHECK(hartshorne_bound(Integer(0), Rational(2)) == Rational(4));
  CHECK(hartshorne_bound(Integer(-1), Rational(3)) == Rational(9));
  CHECK(hartshorne_bound(Integer(0), Rational(1)) == Rational(2));
  CHECK(best_c3_bound(Integer(0), Rational(2), true, true) == QuadValue(4));
  CHECK(best_c3_bound(Integer(0), Rational(2), true, false) == QuadValue(6));
  CHECK(best_c3_bound(Integer(0), Rational(1), true, true) == QuadValue(Rational(5, 3)));
  CHECK_THROWS_AS(rank2_c3_bound(Integer(1), Rational(2), true), DomainError);
  CHECK_THROWS_AS(hartshorne_bound(Integer(2), Rational(2)), DomainError);
}

TEST_CASE("classical bound is sharper from c2 = 2 on") {
  for (long c2 = 2; c2 <= 100; ++c2) {
    const QuadValue diff = rank2_c3_bound(Integer(0), Rational(c2), true) - QuadValue(hartshorne_bound(Integer(0), Rational(c2)));
    CHECK(diff.sign() > 0);
    CHECK(diff == QuadValue(Rational(c2 * c2, 3) + Rational(4 * c2, 3) - Rational(2)));
  }
  const QuadValue at_one = rank2_c3_bound(Integer(0), Rational(1), true) - QuadValue(hartshorne_bound(Integer(0), Rational(1)));
  CHECK(at_one.sign() < 0);
}
