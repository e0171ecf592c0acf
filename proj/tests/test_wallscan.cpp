#include <doctest.h>

#include <cstdlib>
#include <set>
#include <tuple>

#include "support/generators.hpp"
#include "tiltlab/errors.hpp"
#include "tiltlab/wallscan.hpp"

using namespace tiltlab;

namespace {

struct Found {
  Rational e0, e1, e2, center, radius_sq;
  bool operator<(const Found& o) const { return std::tie(e0, e1, e2) < std::tie(o.e0, o.e1, o.e2); }
  bool operator==(const Found& o) const {
    return e0 == o.e0 && e1 == o.e1 && e2 == o.e2 && center == o.center && radius_sq == o.radius_sq;
  }
};

Rational disc(const Rational& a, const Rational& b, const Rational& c) { return b * b - Rational(2) * a * c; }

// |x| <= r with r^2 given, decided without square roots.
bool within(const Rational& x, const Rational& r_sq) { return x.sign() <= 0 || x * x <= r_sq; }

// Triple loop over a box with the wall written in determinant form.
// A destabilising subobject has the smaller tilt slope for large alpha,
// hence mu(w) < mu(v); characters above mu(v) are the matching quotients.
std::set<Found> brute_force(const ChernTriple& v, long rank_max, long box1, long box2, const Rational& lo,
                            const Rational& hi, long* type2_survivors) {
  std::set<Found> out;
  for (long a = 1; a <= rank_max; ++a) {
    for (long b = -box1; b <= box1; ++b) {
      if (Rational(b, a) >= v.e1 / v.e0) continue;
      for (long c = -box2; c <= box2; ++c) {
        const Rational w0(a), w1(b), w2(c);
        if (disc(w0, w1, w2).sign() < 0) continue;
        if (disc(v.e0 - w0, v.e1 - w1, v.e2 - w2).sign() < 0) continue;
        const Rational den = v.e0 * w1 - w0 * v.e1;
        if (den.is_zero()) continue;
        const Rational s = (v.e0 * w2 - w0 * v.e2) / den;
        const Rational r_sq = s * s - Rational(2) * (v.e1 * w2 - w1 * v.e2) / den;
        if (r_sq.sign() <= 0) continue;
        // Closed span [s - r, s + r] meets [lo, hi].
        if (!within(s - hi, r_sq) || !within(lo - s, r_sq)) continue;
        const Rational sub = w1 - s * w0;
        if (!(sub.sign() > 0 && sub < v.e1 - s * v.e0)) continue;
        const Rational mu_w = w1 / w0;
        // Strictly right of mu(w) at the left foot means the wall sits between the slopes.
        if (s > mu_w && !within(s - mu_w, r_sq)) {
          ++*type2_survivors;
          continue;
        }
        out.insert({w0, w1, w2, s, r_sq});
      }
    }
  }
  return out;
}

ScanRequest request(const ChernTriple& v, long rank_max, const Rational& lo, const Rational& hi) {
  ScanRequest r;
  r.v = v;
  r.rank_max = rank_max;
  r.beta_lo = lo;
  r.beta_hi = hi;
  return r;
}

std::set<Found> as_set(const ScanResult& res) {
  std::set<Found> s;
  for (const CandidateWall& c : res.candidates) s.insert({c.w.e0, c.w.e1, c.w.e2, c.wall.center, c.wall.radius_sq});
  return s;
}

bool has_wall(const ScanResult& res, const Rational& center, const Rational& radius_sq) {
  for (const CandidateWall& c : res.candidates)
    if (c.wall.center == center && c.wall.radius_sq == radius_sq) return true;
  return false;
}

}  // namespace

TEST_CASE("scan finds the wall of the twisted structure sheaf") {
  const ChernTriple v(1, 0, -1);
  const ScanResult res = enumerate_candidate_walls(request(v, 2, Rational(-3), Rational(0)));
  CHECK(has_wall(res, Rational(-3, 2), Rational(1, 4)));
  bool via_rank_two = false;
  for (const CandidateWall& c : res.candidates)
    via_rank_two |= c.w == ChernTriple(2, -2, 1);
  CHECK(via_rank_two);

  ScanRequest half = request(v, 1, Rational(-3), Rational(0));
  half.e2_denominator = 2;
  const ScanResult res_half = enumerate_candidate_walls(half);
  bool via_line_bundle = false;
  for (const CandidateWall& c : res_half.candidates)
    via_line_bundle |= c.w == ChernTriple(1, -1, Rational(1, 2));
  CHECK(via_line_bundle);
}

TEST_CASE("touching the window edge keeps the wall") {
  const ScanResult res = enumerate_candidate_walls(request(ChernTriple(1, 0, -1), 2, Rational(-1), Rational(0)));
  CHECK(has_wall(res, Rational(-3, 2), Rational(1, 4)));
  const ScanResult gone = enumerate_candidate_walls(request(ChernTriple(1, 0, -1), 2, Rational(-9, 10), Rational(0)));
  CHECK_FALSE(has_wall(gone, Rational(-3, 2), Rational(1, 4)));
}

TEST_CASE("zero discriminant leaves nothing to scan") {
  for (long hi = -3; hi <= 0; ++hi) {
    const ScanResult res = enumerate_candidate_walls(request(ChernTriple(1, 0, 0), 3, Rational(-6), Rational(hi) - Rational(1, 2)));
    CHECK(res.candidates.empty());
  }
}

TEST_CASE("scan agrees with a brute-force search") {
  const ChernTriple v(1, 0, -1);
  long type2 = 0;
  const std::set<Found> oracle = brute_force(v, 3, 5, 5, Rational(-4), Rational(0), &type2);
  const ScanResult res = enumerate_candidate_walls(request(v, 3, Rational(-4), Rational(0)));
  CHECK(as_set(res) == oracle);
  CHECK(type2 == 0);
  CHECK_FALSE(oracle.empty());
  for (const CandidateWall& c : res.candidates) {
    CHECK(c.type != WallType::Type2);
    CHECK(abs(c.w.e1) <= Rational(5));
    CHECK(abs(c.w.e2) <= Rational(5));
  }
}

TEST_CASE("scan agrees with a brute-force search on random characters") {
  gen::Source src(71);
  for (int i = 0; i < 25; ++i) {
    ChernTriple v(Rational(src.range(1, 2)), Rational(src.range(-2, 2)), Rational(0));
    v.e2 = Rational(src.range(-6, 0)) + (v.e1 * v.e1 / (Rational(2) * v.e0)).floor();
    if (gen_discriminant(v).sign() < 0) continue;
    const Rational mu = v.e1 / v.e0;
    const Rational lo = mu - Rational(5);
    const Rational hi = mu + Rational(1);
    long type2 = 0;
    const std::set<Found> oracle = brute_force(v, 2, 14, 40, lo, hi, &type2);
    const ScanResult res = enumerate_candidate_walls(request(v, 2, lo, hi));
    CHECK(as_set(res) == oracle);
    CHECK(type2 == 0);
    CHECK(res.diagnostics.at("type2") == 0);
  }
}

TEST_CASE("scan output is sorted innermost first and the walls nest") {
  gen::Source src(72);
  for (int i = 0; i < 20; ++i) {
    const ChernTriple v = src.positive_disc_character(Rational(1), 2);
    const Rational mu = v.e1 / v.e0;
    const ScanResult res = enumerate_candidate_walls(request(v, 3, mu - Rational(6), mu));
    for (std::size_t a = 0; a < res.candidates.size(); ++a) {
      const CandidateWall& x = res.candidates[a];
      CHECK_NOTHROW(classify_type(x.w, v, GeometryContext{}));
      CHECK(gen_discriminant(x.w).sign() >= 0);
      CHECK(gen_discriminant(v - x.w).sign() >= 0);
      for (std::size_t b = a + 1; b < res.candidates.size(); ++b) {
        const CandidateWall& y = res.candidates[b];
        CHECK(x.wall.center >= y.wall.center);
        const Nesting n = nesting_compare(x.wall, y.wall, v, GeometryContext{});
        if (x.wall.center == y.wall.center) {
          CHECK(n == Nesting::Equal);
          CHECK(std::tie(x.w.e0, x.w.e1, x.w.e2) < std::tie(y.w.e0, y.w.e1, y.w.e2));
        } else {
          CHECK(n == Nesting::FirstInsideSecond);
        }
      }
    }
  }
}

TEST_CASE("diagnostics account for every examined lattice point") {
  const ScanResult res = enumerate_candidate_walls(request(ChernTriple(2, -1, -3), 3, Rational(-5), Rational(0)));
  std::uint64_t rejected = 0;
  for (const std::string& name : scan_filter_names()) rejected += res.diagnostics.at(name);
  CHECK(res.diagnostics.at("examined") == rejected + res.candidates.size());
  CHECK(res.diagnostics.at("examined") > 0);
}

TEST_CASE("threaded scan matches the serial one") {
  ScanRequest req = request(ChernTriple(2, -1, -3), 4, Rational(-5), Rational(0));
  const ScanResult serial = enumerate_candidate_walls(req);
  req.threads = 4;
  const ScanResult threaded = enumerate_candidate_walls(req);
  REQUIRE(serial.candidates.size() == threaded.candidates.size());
  for (std::size_t i = 0; i < serial.candidates.size(); ++i) CHECK(serial.candidates[i].w == threaded.candidates[i].w);
  CHECK(serial.diagnostics == threaded.diagnostics);
}

TEST_CASE("oversized scans are refused") {
  ScanRequest req = request(ChernTriple(1, 0, -1), 3, Rational(-4), Rational(0));
  ::setenv("TILTLAB_GUARD", "3", 1);
  CHECK(scan_guard() == 3);
  CHECK_THROWS_AS(enumerate_candidate_walls(req), RefusalError);
  ::unsetenv("TILTLAB_GUARD");
  CHECK(scan_guard() == kDefaultScanGuard);
  CHECK_NOTHROW(enumerate_candidate_walls(req));
  req.e1_denominator = 1'000'000;
  req.e2_denominator = 1'000'000;
  CHECK_THROWS_AS(enumerate_candidate_walls(req), RefusalError);
}

TEST_CASE("malformed scan requests") {
  CHECK_THROWS_AS(enumerate_candidate_walls(request(ChernTriple(1, 0, 1), 2, Rational(-1), Rational(0))), DomainError);
  CHECK_THROWS_AS(enumerate_candidate_walls(request(ChernTriple(1, 0, -1), 0, Rational(-1), Rational(0))), DomainError);
  CHECK_THROWS_AS(enumerate_candidate_walls(request(ChernTriple(1, 0, -1), 2, Rational(0), Rational(0))), DomainError);
}
