#pragma once

#include <compare>
#include <optional>
#include <string>

#include "tiltlab/quad.hpp"
#include "tiltlab/rational.hpp"

namespace tiltlab {

/// Dimension n of the variety and the top self-intersection H^n.
struct GeometryContext {
  int n = 3;
  Rational hn = Rational(1);

  /// Throws DomainError unless n >= 2 and hn > 0.
  void validate() const;
};

/// Projected twisted Chern character (H^n ch_0, H^{n-1} ch_1, H^{n-2} ch_2),
/// with ch_3 appended on threefolds.
struct ChernTriple {
  Rational e0;
  Rational e1;
  Rational e2;
  std::optional<Rational> e3;

  ChernTriple() = default;
  ChernTriple(Rational e0_, Rational e1_, Rational e2_) : e0(std::move(e0_)), e1(std::move(e1_)), e2(std::move(e2_)) {}
  ChernTriple(Rational e0_, Rational e1_, Rational e2_, Rational e3_)
      : e0(std::move(e0_)), e1(std::move(e1_)), e2(std::move(e2_)), e3(std::move(e3_)) {}

  /// Rank as e0 / H^n.
  Rational rank(const GeometryContext& ctx) const { return e0 / ctx.hn; }
  /// True when rank is a positive integer.
  bool has_integral_rank(const GeometryContext& ctx) const;

  /// Drops e3.
  ChernTriple truncated() const { return {e0, e1, e2}; }

  /// Parses "e0,e1,e2[,e3]" with rational entries.
  static ChernTriple parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const ChernTriple&, const ChernTriple&) = default;
};

ChernTriple operator+(const ChernTriple& a, const ChernTriple& b);
ChernTriple operator-(const ChernTriple& a, const ChernTriple& b);
ChernTriple operator*(const Rational& k, const ChernTriple& t);

/// True when the (e0, e1, e2) parts are linearly dependent.
bool proportional(const ChernTriple& a, const ChernTriple& b);

/// Throws DomainError if e3 is present on a context with n != 3.
void check_compatible(const ChernTriple& t, const GeometryContext& ctx);

/// A slope value in Q or Q(sqrt d), or +infinity.
class ExtendedSlope {
public:
  static ExtendedSlope infinity() { return ExtendedSlope(); }
  static ExtendedSlope finite(QuadValue v) { return ExtendedSlope(std::move(v)); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws DomainError when infinite.
  const QuadValue& value() const;
  std::string to_string() const;

  friend bool operator==(const ExtendedSlope&, const ExtendedSlope&) = default;
  friend std::strong_ordering operator<=>(const ExtendedSlope& a, const ExtendedSlope& b);

private:
  ExtendedSlope() = default;
  explicit ExtendedSlope(QuadValue v) : value_(std::move(v)) {}
  std::optional<QuadValue> value_;
};

/// Twist by delta*H, i.e. multiplication by e^{-delta H}.
ChernTriple twist_along_h(const ChernTriple& t, const Rational& delta, const GeometryContext& ctx);
ChernTriple twist_along_h(const ChernTriple& t, const Rational& delta);

/// mu = e1 / e0, or +infinity when e0 = 0.
ExtendedSlope slope(const ChernTriple& t);

/// Rational slope; throws UnsupportedError on rank zero.
Rational finite_slope(const ChernTriple& t);

/// Generalised discriminant e1^2 - 2 e0 e2. Invariant under twist_along_h.
Rational gen_discriminant(const ChernTriple& t);

struct CentralCharge {
  Rational re;
  Rational im;
  friend bool operator==(const CentralCharge&, const CentralCharge&) = default;
};

/// Central charge with the positive H^{n-2} prefactor dropped:
/// re = (alpha^2 - beta^2)/2 e0 + beta e1 - e2, im = e1 - beta e0.
CentralCharge central_charge(const ChernTriple& t, const Rational& beta, const Rational& alpha_sq);

/// Tilt slope nu_{alpha,beta}; +infinity when the twisted e1 vanishes.
ExtendedSlope tilt_slope(const ChernTriple& t, const Rational& beta, const Rational& alpha_sq);

/// Large-volume comparison of polynomial slopes: lexicographic on
/// (e1/e0, e2/e0) with rank-zero classes at (+inf, +inf).
std::strong_ordering poly_slope_compare(const ChernTriple& a, const ChernTriple& b);

enum class HeartSide { SheafSide, ShiftSide, Boundary };

/// Sign of Im Z at beta: positive means the class can sit in the heart as a
/// sheaf, negative as a shifted sheaf.
HeartSide heart_compatible(const ChernTriple& t, const Rational& beta);

const char* to_string(HeartSide side);

}  // namespace tiltlab
