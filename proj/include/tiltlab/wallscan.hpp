#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tiltlab/chern.hpp"
#include "tiltlab/walls.hpp"

namespace tiltlab {

struct ScanRequest {
  ChernTriple v;
  GeometryContext ctx;
  long rank_max = 1;
  long e1_denominator = 1;
  long e2_denominator = 1;
  Rational beta_lo;
  Rational beta_hi;
  /// Worker count; 1 scans on the calling thread.
  unsigned threads = 1;
};

struct CandidateWall {
  ChernTriple w;
  Semicircle wall;
  WallType type = WallType::Type1;
};

struct ScanResult {
  std::vector<CandidateWall> candidates;
  /// Lattice points examined and rejections per filter.
  std::map<std::string, std::uint64_t> diagnostics;
};

/// Default cap on the number of lattice points a scan may visit; the
/// TILTLAB_GUARD environment variable overrides it.
constexpr std::uint64_t kDefaultScanGuard = 10'000'000;
std::uint64_t scan_guard();

/// Candidate sub-characters w of v whose wall meets the window [beta_lo,
/// beta_hi] and which satisfy the necessary conditions for a destabilising
/// subobject. Sorted by decreasing center, i.e. innermost wall first.
ScanResult enumerate_candidate_walls(const ScanRequest& req);

/// Filter names in application order, as used in ScanResult::diagnostics.
const std::vector<std::string>& scan_filter_names();

}  // namespace tiltlab
