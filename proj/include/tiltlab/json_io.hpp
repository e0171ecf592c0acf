#pragma once

#include <json.hpp>

#include "tiltlab/chern.hpp"
#include "tiltlab/ellipse.hpp"
#include "tiltlab/quad.hpp"
#include "tiltlab/rational.hpp"
#include "tiltlab/stability.hpp"
#include "tiltlab/vanishing.hpp"
#include "tiltlab/walls.hpp"
#include "tiltlab/wallscan.hpp"

namespace tiltlab {

using Json = nlohmann::ordered_json;

/// Rationals serialise as "p/q" strings; integers as decimal strings.
Json to_json(const Rational& r);
Json to_json(const Integer& z);
/// {"q":"p/q","s":"p/q","d":N}; d becomes a string when it exceeds 64 bits.
Json to_json(const QuadValue& x);
/// A rational when possible, otherwise the QuadValue object.
Json to_json_compact(const QuadValue& x);
Json to_json(const ChernTriple& t);
Json to_json(const WallDescriptor& w, std::optional<WallType> type = std::nullopt);
Json to_json(const StabilityRegion& r);
Json to_json(const ExtremalEllipse& e);
Json to_json(const HNFactor& f);
Json to_json(const CandidateWall& c);

Rational rational_from_json(const Json& j);
QuadValue quad_from_json(const Json& j);
ChernTriple chern_from_json(const Json& j);
WallDescriptor wall_from_json(const Json& j);
HNFactor factor_from_json(const Json& j);

}  // namespace tiltlab
