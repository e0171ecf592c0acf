#include "tiltlab/json_io.hpp"

#include <stdexcept>

namespace tiltlab {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Integer& z) { return z.get_str(); }

Json to_json(const QuadValue& x) {
  Json j;
  j["q"] = to_json(x.rational_part());
  j["s"] = to_json(x.radical_coefficient());
  if (x.radicand().fits_slong_p()) {
    j["d"] = x.radicand().get_si();
  } else {
    j["d"] = x.radicand().get_str();
  }
  return j;
}

Json to_json_compact(const QuadValue& x) {
  if (x.is_rational()) return to_json(x.rational_part());
  return to_json(x);
}

Json to_json(const ChernTriple& t) {
  Json j;
  j["e0"] = to_json(t.e0);
  j["e1"] = to_json(t.e1);
  j["e2"] = to_json(t.e2);
  if (t.e3) j["e3"] = to_json(*t.e3);
  return j;
}

Json to_json(const WallDescriptor& w, std::optional<WallType> type) {
  Json j;
  if (const auto* line = std::get_if<VerticalLine>(&w)) {
    j["kind"] = "vertical";
    j["beta"] = to_json(line->beta);
  } else if (const auto* c = std::get_if<Semicircle>(&w)) {
    j["kind"] = "circle";
    j["s"] = to_json(c->center);
    j["rsq"] = to_json(c->radius_sq);
    if (type) j["type"] = static_cast<int>(*type);
  } else {
    j["kind"] = "empty";
  }
  return j;
}

Json to_json(const StabilityRegion& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["beta"] = to_json(r.beta);
  if (r.slope_bound) j["slope_bound"] = to_json(*r.slope_bound);
  j["conditional_on"] = r.conditional_on;
  return j;
}

Json to_json(const ExtremalEllipse& e) {
  Json j;
  j["mu"] = to_json(e.mu);
  j["v0"] = to_json(e.v0);
  j["hn"] = to_json(e.hn);
  j["rhs"] = to_json(e.rhs);
  j["left"] = to_json(e.left_intercept());
  j["right"] = to_json(e.right_intercept());
  return j;
}

Json to_json(const HNFactor& f) {
  Json j;
  j["rank"] = f.rank;
  j["muK"] = to_json(f.mu_k);
  j["deltaK"] = to_json(f.delta_k);
  return j;
}

Json to_json(const CandidateWall& c) {
  Json j;
  j["w"] = to_json(c.w);
  j["wall"] = to_json(WallDescriptor(c.wall), c.type);
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

QuadValue quad_from_json(const Json& j) {
  if (!j.is_object()) return QuadValue(rational_from_json(j));
  const Json& d = j.at("d");
  const Integer radicand = d.is_string() ? Integer(d.get<std::string>()) : Integer(d.get<long>());
  return QuadValue(rational_from_json(j.at("q")), rational_from_json(j.at("s")), radicand);
}

ChernTriple chern_from_json(const Json& j) {
  ChernTriple t{rational_from_json(j.at("e0")), rational_from_json(j.at("e1")), rational_from_json(j.at("e2"))};
  if (j.contains("e3")) t.e3 = rational_from_json(j.at("e3"));
  return t;
}

WallDescriptor wall_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "vertical") return VerticalLine{rational_from_json(j.at("beta"))};
  if (kind == "circle") return Semicircle{rational_from_json(j.at("s")), rational_from_json(j.at("rsq"))};
  if (kind == "empty") return EmptyWall{};
  throw std::invalid_argument("unknown wall kind '" + kind + "'");
}

HNFactor factor_from_json(const Json& j) {
  HNFactor f;
  f.rank = j.at("rank").get<long>();
  f.mu_k = rational_from_json(j.at("muK"));
  f.delta_k = rational_from_json(j.at("deltaK"));
  return f;
}

}  // namespace tiltlab
