#include "tiltlab/chern.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "tiltlab/errors.hpp"

namespace tiltlab {

namespace {

void require_positive_alpha(const Rational& alpha_sq) {
  if (alpha_sq.sign() <= 0) throw DomainError("alpha^2 must be positive, got " + alpha_sq.to_string());
}

std::optional<Rational> add_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (a && b) return *a + *b;
  return std::nullopt;
}

}  // namespace

void GeometryContext::validate() const {
  if (n < 2) throw DomainError("dimension n must be at least 2, got " + std::to_string(n));
  if (hn.sign() <= 0) throw DomainError("H^n must be positive, got " + hn.to_string());
}

bool ChernTriple::has_integral_rank(const GeometryContext& ctx) const {
  const Rational r = rank(ctx);
  return r.sign() > 0 && r.is_integer();
}

ChernTriple ChernTriple::parse(const std::string& text) {
  std::vector<Rational> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(Rational::parse(item));
  if (!text.empty() && text.back() == ',') throw std::invalid_argument("trailing comma in '" + text + "'");
  if (parts.size() == 3) return {parts[0], parts[1], parts[2]};
  if (parts.size() == 4) return {parts[0], parts[1], parts[2], parts[3]};
  throw std::invalid_argument("expected 3 or 4 comma-separated rationals, got '" + text + "'");
}

std::string ChernTriple::to_string() const {
  std::string out = "(" + e0.to_string() + ", " + e1.to_string() + ", " + e2.to_string();
  if (e3) out += ", " + e3->to_string();
  return out + ")";
}

ChernTriple operator+(const ChernTriple& a, const ChernTriple& b) {
  ChernTriple out{a.e0 + b.e0, a.e1 + b.e1, a.e2 + b.e2};
  out.e3 = add_opt(a.e3, b.e3);
  return out;
}

ChernTriple operator-(const ChernTriple& a, const ChernTriple& b) { return a + Rational(-1) * b; }

ChernTriple operator*(const Rational& k, const ChernTriple& t) {
  ChernTriple out{k * t.e0, k * t.e1, k * t.e2};
  if (t.e3) out.e3 = k * *t.e3;
  return out;
}

bool proportional(const ChernTriple& a, const ChernTriple& b) {
  // All 2x2 minors of the 2x3 matrix vanish.
  return a.e0 * b.e1 == a.e1 * b.e0 && a.e0 * b.e2 == a.e2 * b.e0 && a.e1 * b.e2 == a.e2 * b.e1;
}

void check_compatible(const ChernTriple& t, const GeometryContext& ctx) {
  ctx.validate();
  if (t.e3 && ctx.n != 3) {
    throw DomainError("ch_3 component supplied on a variety of dimension " + std::to_string(ctx.n));
  }
}

const QuadValue& ExtendedSlope::value() const {
  if (!value_) throw DomainError("slope is +infinity");
  return *value_;
}

std::string ExtendedSlope::to_string() const { return value_ ? value_->to_string() : "+inf"; }

std::strong_ordering operator<=>(const ExtendedSlope& a, const ExtendedSlope& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  return compare(*a.value_, *b.value_);
}

ChernTriple twist_along_h(const ChernTriple& t, const Rational& delta) {
  const Rational half_sq = delta * delta / Rational(2);
  ChernTriple out{t.e0, t.e1 - delta * t.e0, t.e2 - delta * t.e1 + half_sq * t.e0};
  if (t.e3) {
    const Rational cube_sixth = delta * delta * delta / Rational(6);
    out.e3 = *t.e3 - delta * t.e2 + half_sq * t.e1 - cube_sixth * t.e0;
  }
  return out;
}

ChernTriple twist_along_h(const ChernTriple& t, const Rational& delta, const GeometryContext& ctx) {
  check_compatible(t, ctx);
  return twist_along_h(t, delta);
}

ExtendedSlope slope(const ChernTriple& t) {
  if (t.e0.is_zero()) return ExtendedSlope::infinity();
  return ExtendedSlope::finite(t.e1 / t.e0);
}

Rational finite_slope(const ChernTriple& t) {
  if (t.e0.is_zero()) throw UnsupportedError("rank-zero character " + t.to_string() + " has infinite slope");
  return t.e1 / t.e0;
}

Rational gen_discriminant(const ChernTriple& t) { return t.e1 * t.e1 - Rational(2) * t.e0 * t.e2; }

CentralCharge central_charge(const ChernTriple& t, const Rational& beta, const Rational& alpha_sq) {
  require_positive_alpha(alpha_sq);
  const Rational re = (alpha_sq - beta * beta) / Rational(2) * t.e0 + beta * t.e1 - t.e2;
  const Rational im = t.e1 - beta * t.e0;
  return {re, im};
}

ExtendedSlope tilt_slope(const ChernTriple& t, const Rational& beta, const Rational& alpha_sq) {
  require_positive_alpha(alpha_sq);
  const ChernTriple tw = twist_along_h(t.truncated(), beta);
  if (tw.e1.is_zero()) return ExtendedSlope::infinity();
  return ExtendedSlope::finite((tw.e2 - alpha_sq / Rational(2) * tw.e0) / tw.e1);
}

std::strong_ordering poly_slope_compare(const ChernTriple& a, const ChernTriple& b) {
  const bool a_inf = a.e0.is_zero();
  const bool b_inf = b.e0.is_zero();
  if (a_inf || b_inf) {
    if (a_inf && b_inf) return std::strong_ordering::equal;
    return a_inf ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (auto c = (a.e1 / a.e0) <=> (b.e1 / b.e0); c != 0) return c;
  return (a.e2 / a.e0) <=> (b.e2 / b.e0);
}

HeartSide heart_compatible(const ChernTriple& t, const Rational& beta) {
  const int s = (t.e1 - beta * t.e0).sign();
  if (s > 0) return HeartSide::SheafSide;
  if (s < 0) return HeartSide::ShiftSide;
  return HeartSide::Boundary;
}

const char* to_string(HeartSide side) {
  switch (side) {
    case HeartSide::SheafSide: return "sheaf-side";
    case HeartSide::ShiftSide: return "shift-side";
    case HeartSide::Boundary: return "boundary";
  }
  return "?";
}

}  // namespace tiltlab
