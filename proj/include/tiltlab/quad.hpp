#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "tiltlab/rational.hpp"

namespace tiltlab {

/// Exact real number q + s*sqrt(d) with d square-free.
///
/// Canonical form: d == 0 exactly when s == 0, otherwise d >= 2 and
/// square-free. Arithmetic is closed over a single radicand (or a pure
/// rational); combining two different radicands throws DomainError.
/// Ordering is total and exact across radicands.
class QuadValue {
public:
  QuadValue() = default;
  QuadValue(const Rational& q) : q_(q) {}  // NOLINT(google-explicit-constructor)
  QuadValue(int q) : q_(q) {}  // NOLINT(google-explicit-constructor)
  /// Builds q + s*sqrt(d) for any d >= 0, pulling square factors out of d.
  QuadValue(const Rational& q, const Rational& s, const Integer& d);

  /// sqrt(x) for rational x >= 0, canonicalised. Throws DomainError for x < 0.
  static QuadValue sqrt(const Rational& x);

  const Rational& rational_part() const { return q_; }
  const Rational& radical_coefficient() const { return s_; }
  const Integer& radicand() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  /// Throws DomainError when the value is irrational.
  const Rational& as_rational() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }

  /// Largest integer <= value, decided exactly.
  Integer floor() const;
  /// Smallest integer strictly greater than the value.
  Integer next_integer_above() const { return floor() + 1; }

  double to_double() const;
  /// Human readable: "3/2", "2*sqrt(2)", "-1 + 1/2*sqrt(3)".
  std::string to_string() const;

  QuadValue operator-() const;
  QuadValue& operator+=(const QuadValue& o);
  QuadValue& operator-=(const QuadValue& o);
  QuadValue& operator*=(const QuadValue& o);
  QuadValue& operator/=(const QuadValue& o);

  /// Multiplicative inverse; throws DomainError on zero.
  QuadValue inverse() const;

  friend QuadValue operator+(QuadValue a, const QuadValue& b) { return a += b; }
  friend QuadValue operator-(QuadValue a, const QuadValue& b) { return a -= b; }
  friend QuadValue operator*(QuadValue a, const QuadValue& b) { return a *= b; }
  friend QuadValue operator/(QuadValue a, const QuadValue& b) { return a /= b; }

  friend bool operator==(const QuadValue& a, const QuadValue& b) {
    return a.q_ == b.q_ && a.s_ == b.s_ && a.d_ == b.d_;
  }
  friend std::strong_ordering operator<=>(const QuadValue& a, const QuadValue& b);

private:
  void require_compatible(const QuadValue& o, const char* op) const;

  Rational q_;
  Rational s_;
  Integer d_ = 0;
};

/// Exact three-way comparison of the real embeddings.
std::strong_ordering compare(const QuadValue& a, const QuadValue& b);

QuadValue abs(const QuadValue& x);
const QuadValue& max(const QuadValue& a, const QuadValue& b);
const QuadValue& min(const QuadValue& a, const QuadValue& b);

/// Splits n > 0 as k^2 * m with m square-free; returns {k, m}.
std::pair<Integer, Integer> split_square(const Integer& n);

std::ostream& operator<<(std::ostream& os, const QuadValue& x);

}  // namespace tiltlab
