#include "tiltlab/quad.hpp"

#include <cmath>
#include <ostream>

#include "tiltlab/errors.hpp"

namespace tiltlab {

namespace {

std::strong_ordering to_ordering(int s) {
  return s < 0 ? std::strong_ordering::less
       : s > 0 ? std::strong_ordering::greater
               : std::strong_ordering::equal;
}

// Sign of x + y*sqrt(d1) + z*sqrt(d2) with d1 != d2 both square-free (>= 2).
int sign_two_radicals(const Rational& x, const Rational& y, const Integer& d1,
                      const Rational& z, const Integer& d2) {
  const QuadValue u(x, y, d1);
  const int su = u.sign();
  const int st = z.sign();
  if (su == 0) return st;
  if (st == 0 || su == st) return su;
  // Opposite signs: compare |u|^2 = x^2 + y^2 d1 + 2xy sqrt(d1) against z^2 d2.
  const QuadValue u_sq(x * x + y * y * Rational(d1) - z * z * Rational(d2), Rational(2) * x * y, d1);
  const int c = u_sq.sign();
  if (c > 0) return su;
  if (c < 0) return st;
  return 0;
}

}  // namespace

std::pair<Integer, Integer> split_square(const Integer& n) {
  if (n <= 0) throw DomainError("split_square requires a positive integer");
  Integer root = 1;
  Integer free_part = 1;
  Integer rest = n;

  auto finish = [&]() -> std::pair<Integer, Integer> {
    if (rest > 1) {
      if (mpz_perfect_square_p(rest.get_mpz_t())) {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
        root *= r;
      } else {
        free_part *= rest;
      }
    }
    return {root, free_part};
  };

  Integer p = 2;
  bool changed = true;
  while (p * p * p <= rest) {
    if (changed && mpz_probab_prime_p(rest.get_mpz_t(), 40) > 0) return finish();
    unsigned count = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++count;
    }
    for (unsigned i = 0; i < count / 2; ++i) root *= p;
    if (count % 2 == 1) free_part *= p;
    changed = count > 0;
    p += (p == 2) ? 1 : 2;
  }
  // Every prime factor of rest is >= p and rest < p^3, so rest is 1, q, q^2 or q*r.
  return finish();
}

QuadValue::QuadValue(const Rational& q, const Rational& s, const Integer& d) : q_(q), s_(s), d_(d) {
  if (d_ < 0) throw DomainError("negative radicand " + d_.get_str());
  if (s_.is_zero() || d_ == 0) {
    s_ = Rational(0);
    d_ = 0;
    return;
  }
  auto [root, free_part] = split_square(d_);
  s_ *= Rational(root);
  d_ = free_part;
  if (d_ == 1) {
    q_ += s_;
    s_ = Rational(0);
    d_ = 0;
  }
}

QuadValue QuadValue::sqrt(const Rational& x) {
  if (x.sign() < 0) throw DomainError("square root of negative rational " + x.to_string());
  if (x.is_zero()) return QuadValue();
  // sqrt(p/q) = sqrt(p*q)/q
  return QuadValue(Rational(0), Rational(Integer(1), x.den()), x.num() * x.den());
}

const Rational& QuadValue::as_rational() const {
  if (!is_rational()) throw DomainError("value " + to_string() + " is irrational");
  return q_;
}

int QuadValue::sign() const {
  const int sq = q_.sign();
  const int ss = s_.sign();
  if (ss == 0) return sq;
  if (sq == 0 || sq == ss) return ss;
  const int c = cmp((q_ * q_).raw(), (s_ * s_ * Rational(d_)).raw());
  if (c > 0) return sq;
  if (c < 0) return ss;
  return 0;
}

Integer QuadValue::floor() const {
  if (is_rational()) return q_.floor();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
  // root < sqrt(d) < root + 1 because d is not a perfect square.
  Rational a = q_ + s_ * Rational(root);
  Rational b = q_ + s_ * Rational(Integer(root + 1));
  if (b < a) std::swap(a, b);
  Integer lo = a.floor();  // floor(value) >= lo
  Integer hi = b.floor();  // floor(value) <= hi
  while (lo < hi) {
    Integer mid = lo + (hi - lo + 1) / 2;
    if (compare(QuadValue(Rational(mid)), *this) != std::strong_ordering::greater) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

double QuadValue::to_double() const {
  if (is_rational()) return q_.to_double();
  return q_.to_double() + s_.to_double() * std::sqrt(d_.get_d());
}

std::string QuadValue::to_string() const {
  if (is_rational()) return q_.to_string();
  const std::string radical = "sqrt(" + d_.get_str() + ")";
  auto coefficient = [&](const Rational& c) {
    if (c == Rational(1)) return radical;
    return c.to_string() + "*" + radical;
  };
  if (q_.is_zero()) {
    if (s_ == Rational(-1)) return "-" + radical;
    return coefficient(s_);
  }
  if (s_.sign() < 0) return q_.to_string() + " - " + coefficient(-s_);
  return q_.to_string() + " + " + coefficient(s_);
}

void QuadValue::require_compatible(const QuadValue& o, const char* op) const {
  if (!is_rational() && !o.is_rational() && d_ != o.d_) {
    throw DomainError(std::string("mixed radicals in ") + op + ": " + to_string() + " and " + o.to_string());
  }
}

QuadValue QuadValue::operator-() const {
  QuadValue out = *this;
  out.q_ = -q_;
  out.s_ = -s_;
  return out;
}

QuadValue& QuadValue::operator+=(const QuadValue& o) {
  require_compatible(o, "addition");
  const Integer d = is_rational() ? o.d_ : d_;
  *this = QuadValue(q_ + o.q_, s_ + o.s_, d);
  return *this;
}

QuadValue& QuadValue::operator-=(const QuadValue& o) { return *this += -o; }

QuadValue& QuadValue::operator*=(const QuadValue& o) {
  require_compatible(o, "multiplication");
  const Integer d = is_rational() ? o.d_ : d_;
  const Rational q = q_ * o.q_ + s_ * o.s_ * Rational(d);
  const Rational s = q_ * o.s_ + s_ * o.q_;
  *this = QuadValue(q, s, d);
  return *this;
}

QuadValue QuadValue::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  const Rational norm = q_ * q_ - s_ * s_ * Rational(d_);
  return QuadValue(q_ / norm, -s_ / norm, d_);
}

QuadValue& QuadValue::operator/=(const QuadValue& o) {
  require_compatible(o, "division");
  return *this *= o.inverse();
}

std::strong_ordering compare(const QuadValue& a, const QuadValue& b) {
  if (a.is_rational() || b.is_rational() || a.radicand() == b.radicand()) {
    return to_ordering((a - b).sign());
  }
  return to_ordering(sign_two_radicals(a.rational_part() - b.rational_part(), a.radical_coefficient(),
                                       a.radicand(), -b.radical_coefficient(), b.radicand()));
}

std::strong_ordering operator<=>(const QuadValue& a, const QuadValue& b) { return compare(a, b); }

QuadValue abs(const QuadValue& x) { return x.sign() < 0 ? -x : x; }

const QuadValue& max(const QuadValue& a, const QuadValue& b) { return (a < b) ? b : a; }

const QuadValue& min(const QuadValue& a, const QuadValue& b) { return (b < a) ? b : a; }

std::ostream& operator<<(std::ostream& os, const QuadValue& x) { return os << x.to_string(); }

}  // namespace tiltlab
