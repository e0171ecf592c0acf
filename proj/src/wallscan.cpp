#include "tiltlab/wallscan.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <tuple>

#include "tiltlab/errors.hpp"

namespace tiltlab {

namespace {

// Integers j with j > x (strict) and j < y (strict), or j <= y when closed.
Integer first_above(const QuadValue& x) { return x.next_integer_above(); }
Integer last_below(const Rational& y) { return y.ceil() - 1; }
Integer last_at_most(const Rational& y) { return y.floor(); }

struct Slice {
  Rational w0;
  std::vector<CandidateWall> found;
  std::map<std::string, std::uint64_t> counts;
};

struct Bounds {
  Rational mu_v;
  Rational disc_v;       // normalised: disc(v) / v0^2
  QuadValue left_slope;  // mu(v) - sqrt(disc(v)) / v0
};

Integer row_count(const Rational& w0, const ScanRequest& req, const Bounds& b) {
  const QuadValue lo = b.left_slope * QuadValue(w0 * Rational(req.e1_denominator));
  const Rational hi = b.mu_v * w0 * Rational(req.e1_denominator);
  const Integer n = last_below(hi) - first_above(lo) + 1;
  return n > 0 ? n : Integer(0);
}

// Closed-open range for e2 given (w0, w1), as integer multiples of 1/e2Den.
std::pair<Integer, Integer> e2_range(const Rational& w0, const Rational& w1, const ScanRequest& req,
                                     const Bounds& b) {
  const Rational mu_w = w1 / w0;
  const Rational gap = b.mu_v - mu_w;
  const Rational den(req.e2_denominator);
  // Lower: center left of mu(w), i.e. disc(w)/w0^2 < disc_v - gap^2.
  const Rational lower = w0 / Rational(2) * (mu_w * mu_w - b.disc_v + gap * gap);
  // Upper: disc(w) >= 0.
  const Rational upper = w1 * w1 / (Rational(2) * w0);
  return {(lower * den).floor() + 1, last_at_most(upper * den)};
}

void scan_rank(Slice& slice, const ScanRequest& req, const Bounds& b) {
  const Rational& w0 = slice.w0;
  const ChernTriple& v = req.v;
  const Rational e1_den(req.e1_denominator);
  const Rational e2_den(req.e2_denominator);
  const Integer j_lo = first_above(b.left_slope * QuadValue(w0 * e1_den));
  const Integer j_hi = last_below(b.mu_v * w0 * e1_den);
  for (Integer j = j_lo; j <= j_hi; ++j) {
    const Rational w1 = Rational(j) / e1_den;
    const auto [k_lo, k_hi] = e2_range(w0, w1, req, b);
    for (Integer k = k_lo; k <= k_hi; ++k) {
      ++slice.counts["examined"];
      const ChernTriple w{w0, w1, Rational(k) / e2_den};
      if (gen_discriminant(w).sign() < 0) {
        ++slice.counts["discriminant_w"];
        continue;
      }
      if (gen_discriminant(v - w).sign() < 0) {
        ++slice.counts["discriminant_quotient"];
        continue;
      }
      if (proportional(w, v) || finite_slope(w) == b.mu_v) {
        ++slice.counts["vertical_or_proportional"];
        continue;
      }
      const WallDescriptor d = numerical_wall(w, v, req.ctx);
      const auto* c = std::get_if<Semicircle>(&d);
      if (c == nullptr) {
        ++slice.counts["empty"];
        continue;
      }
      if (c->left_end() > QuadValue(req.beta_hi) || c->right_end() < QuadValue(req.beta_lo)) {
        ++slice.counts["outside_window"];
        continue;
      }
      const WallType type = classify_type(w, v, req.ctx);
      if (type == WallType::Type2) {
        ++slice.counts["type2"];
        continue;
      }
      const Rational sub = w.e1 - c->center * w.e0;
      const Rational whole = v.e1 - c->center * v.e0;
      if (!(sub.sign() > 0 && sub < whole)) {
        ++slice.counts["heart"];
        continue;
      }
      slice.found.push_back({w, *c, type});
    }
  }
}

}  // namespace

const std::vector<std::string>& scan_filter_names() {
  static const std::vector<std::string> names{"discriminant_w", "discriminant_quotient",
                                              "vertical_or_proportional", "empty", "outside_window",
                                              "type2", "heart"};
  return names;
}

std::uint64_t scan_guard() {
  if (const char* env = std::getenv("TILTLAB_GUARD")) {
    char* end = nullptr;
    const unsigned long long g = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return g;
  }
  return kDefaultScanGuard;
}

ScanResult enumerate_candidate_walls(const ScanRequest& req) {
  const ChernTriple& v = req.v;
  check_compatible(v, req.ctx);
  if (v.e0.sign() <= 0) throw DomainError("scan needs a character of positive rank");
  if (gen_discriminant(v).sign() < 0) throw DomainError("scan needs a non-negative discriminant");
  if (req.rank_max < 1) throw DomainError("rank bound must be at least 1");
  if (req.e1_denominator < 1 || req.e2_denominator < 1) throw DomainError("lattice denominators must be positive");
  if (req.beta_lo >= req.beta_hi) throw DomainError("the window needs beta_lo < beta_hi");

  Bounds b;
  b.mu_v = finite_slope(v);
  b.disc_v = gen_discriminant(v) / (v.e0 * v.e0);
  b.left_slope = QuadValue(b.mu_v) - QuadValue::sqrt(b.disc_v);

  // Count lattice points up front so that absurd requests are refused before
  // any work is done.
  const std::uint64_t guard = scan_guard();
  const Integer guard_z(std::to_string(guard));
  Integer total = 0;
  std::vector<Rational> ranks;
  for (long k = 1; k <= req.rank_max; ++k) {
    const Rational w0 = Rational(k) * req.ctx.hn;
    ranks.push_back(w0);
    total += row_count(w0, req, b);
    if (total > guard_z) break;
  }
  if (total <= guard_z) {
    for (const Rational& w0 : ranks) {
      const Integer j_lo = first_above(b.left_slope * QuadValue(w0 * Rational(req.e1_denominator)));
      const Integer j_hi = last_below(b.mu_v * w0 * Rational(req.e1_denominator));
      for (Integer j = j_lo; j <= j_hi && total <= guard_z; ++j) {
        const auto [k_lo, k_hi] = e2_range(w0, Rational(j) / Rational(req.e1_denominator), req, b);
        if (k_hi >= k_lo) total += k_hi - k_lo + 1;
      }
    }
  }
  if (total > guard_z) {
    throw RefusalError("scan would visit more than " + std::to_string(guard) +
                       " lattice points; lower the rank bound or denominators, or raise TILTLAB_GUARD");
  }

  std::vector<Slice> slices(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) slices[i].w0 = ranks[i];
  if (req.threads > 1 && slices.size() > 1) {
    std::vector<std::future<void>> jobs;
    for (Slice& s : slices) {
      jobs.push_back(std::async(std::launch::async, [&s, &req, &b] { scan_rank(s, req, b); }));
    }
    for (auto& j : jobs) j.get();
  } else {
    for (Slice& s : slices) scan_rank(s, req, b);
  }

  ScanResult out;
  out.diagnostics["examined"] = 0;
  for (const std::string& name : scan_filter_names()) out.diagnostics[name] = 0;
  for (Slice& s : slices) {
    for (const auto& [name, n] : s.counts) out.diagnostics[name] += n;
    out.candidates.insert(out.candidates.end(), s.found.begin(), s.found.end());
  }
  std::sort(out.candidates.begin(), out.candidates.end(), [](const CandidateWall& x, const CandidateWall& y) {
    if (x.wall.center != y.wall.center) return x.wall.center > y.wall.center;
    return std::tie(x.w.e0, x.w.e1, x.w.e2) < std::tie(y.w.e0, y.w.e1, y.w.e2);
  });
  return out;
}

}  // namespace tiltlab
