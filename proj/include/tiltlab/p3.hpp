#pragma once

#include "tiltlab/chern.hpp"
#include "tiltlab/quad.hpp"
#include "tiltlab/stability.hpp"

namespace tiltlab {

/// Rank, Chern classes c1, c2, c3 of a sheaf on P^3 (H a plane, H^3 = 1).
struct P3Character {
  long rank = 1;
  Integer c1;
  Rational c2;
  Rational c3;

  Rational ch2() const;
  Rational ch3() const;
  Rational discriminant() const;
  /// The ch3 of a line-bundle-like correction term, (c1^3 - 3 c1 disc) / (6 rank^2).
  Rational line_term() const;
  Rational slope() const;
  ChernTriple to_chern() const;
};

/// alpha^2 disc + 4 e2'^2 - 6 e1' e3' for the character twisted by beta.
Rational bmt_expression(const ChernTriple& v, const Rational& beta, const Rational& alpha_sq);
bool bmt_holds(const ChernTriple& v, const Rational& beta, const Rational& alpha_sq);

/// Upper bound on ch3 for a slope-stable sheaf. The case is chosen by
/// comparing the slope bound with mu - sqrt(disc / (rank + 1)) / rank; ties
/// use the square-root form.
QuadValue ch3_upper_bound(const P3Character& p, const SlopeBound& mu_max);
/// 1 when the strip form applies for this slope bound, 2 otherwise.
int ch3_bound_case(const P3Character& p, const Rational& mu_max);
/// Strip form with slope bound mu_max < mu.
QuadValue ch3_bound_strip(const P3Character& p, const Rational& mu_max);
/// Square-root form.
QuadValue ch3_bound_root(const P3Character& p);

/// c3 = 2 ch3 + c1 c2 - c1^3 / 3.
QuadValue c3_from_ch3(const QuadValue& ch3, const Integer& c1, const Rational& c2);

/// Closed-form rank-two bounds on c3 for c1 in {0, -1}. `mu_max_large` selects
/// the polynomial bound, otherwise the 3/2-power bound.
QuadValue rank2_c3_bound(const Integer& c1, const Rational& c2, bool mu_max_large);
/// Classical bound for reflexive rank-two sheaves.
Rational hartshorne_bound(const Integer& c1, const Rational& c2);
/// Minimum of the applicable bounds; the classical one only when reflexive.
QuadValue best_c3_bound(const Integer& c1, const Rational& c2, bool mu_max_large, bool reflexive);

}  // namespace tiltlab
