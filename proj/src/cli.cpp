#include "tiltlab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tiltlab/errors.hpp"
#include "tiltlab/json_io.hpp"
#include "tiltlab/p3.hpp"
#include "tiltlab/svg.hpp"

namespace tiltlab {

namespace {

struct CommandOutput {
  Json json;
  std::optional<PlotRequest> plot;
  std::optional<std::string> raw;  // printed verbatim instead of JSON
};

// Flags shared by the character-based subcommands.
struct Common {
  std::string v;
  std::vector<std::string> w;
  int n = 3;
  std::string hn = "1";
  bool text = false;
  std::string svg_out;
  int samples = 128;
};

struct Options {
  Common common;
  std::string mu;
  std::string side = "sheaf";
  std::string beta;
  std::string alpha_sq;
  std::vector<std::string> factors;
  std::vector<std::string> sheaves;
  std::string hh = "1";
  std::string kh = "0";
  std::string kk = "0";
  long c1 = 0;
  std::string c2;
  long rank = 2;
  int force_case = 0;
  bool mu_max_large = false;
  bool reflexive = false;
  long rank_max = 1;
  long e1_den = 1;
  long e2_den = 1;
  std::string beta_lo;
  std::string beta_hi;
  unsigned threads = 1;
  bool diagnostics = false;
  bool ellipse = false;
  bool modified = false;
  std::string region;
};

GeometryContext context(const Common& c) {
  GeometryContext ctx;
  ctx.n = c.n;
  ctx.hn = Rational::parse(c.hn);
  ctx.validate();
  return ctx;
}

ChernTriple character(const std::string& text, const GeometryContext& ctx) {
  ChernTriple t = ChernTriple::parse(text);
  check_compatible(t, ctx);
  return t;
}

ChernTriple single_w(const Common& c, const GeometryContext& ctx) {
  if (c.w.size() != 1) throw CLI::ValidationError("--w", "exactly one --w is required");
  return character(c.w.front(), ctx);
}

SlopeBound slope_bound(const std::string& mu) {
  return mu.empty() ? SlopeBound::farey_default() : SlopeBound::user(Rational::parse(mu));
}

std::string wall_caption(const ChernTriple& w, const WallDescriptor& d) {
  std::string out = "W(" + w.to_string() + ")";
  if (const auto* c = std::get_if<Semicircle>(&d)) {
    out += ": s = " + c->center.to_string() + ", r^2 = " + c->radius_sq.to_string();
  } else if (const auto* line = std::get_if<VerticalLine>(&d)) {
    out += ": beta = " + line->beta.to_string();
  }
  return out;
}

// Wall of the discriminant-free modification of whichever side the wall type
// calls for; empty for Type2 walls.
std::optional<WallDescriptor> modification(const OrientedWall& o, const GeometryContext& ctx) {
  if (!o.type || *o.type == WallType::Type2) return std::nullopt;
  if (*o.type == WallType::Type1) return modified_wall_type1(o.lower, o.higher, ctx);
  return modified_wall_type3(o.lower, o.higher, ctx);
}

std::vector<HNFactor> factor_list(const Options& o, const SurfaceContext& sctx) {
  std::vector<HNFactor> out;
  for (const std::string& f : o.factors) {
    const ChernTriple t = ChernTriple::parse(f);
    if (!t.e0.is_integer() || t.e3) throw std::invalid_argument("--factor expects rank,muK,deltaK");
    out.push_back({t.e0.num().get_si(), t.e1, t.e2});
  }
  for (const std::string& s : o.sheaves) {
    const ChernTriple t = ChernTriple::parse(s);
    if (!t.e0.is_integer() || !t.e3) throw std::invalid_argument("--sheaf expects rank,c1H,c1K,ch2");
    out.push_back(twisted_invariants({t.e0.num().get_si(), t.e1, t.e2, *t.e3}, sctx));
  }
  if (out.empty()) throw CLI::ValidationError("--factor", "at least one --factor or --sheaf is required");
  return out;
}

SurfaceContext surface(const Options& o) {
  return {Rational::parse(o.hh), Rational::parse(o.kh), Rational::parse(o.kk)};
}

Json factors_json(const std::vector<HNFactor>& fs) {
  Json arr = Json::array();
  for (const HNFactor& f : fs) arr.push_back(to_json(f));
  return arr;
}

CommandOutput cmd_wall(const Options& o) {
  const GeometryContext ctx = context(o.common);
  const ChernTriple v = character(o.common.v, ctx);
  const ChernTriple w = single_w(o.common, ctx);
  const OrientedWall ow = oriented_wall(w, v, ctx);
  CommandOutput out{to_json(ow.wall, ow.type), std::nullopt, std::nullopt};
  if (ow.swapped) out.json["swapped"] = true;
  out.plot = PlotRequest{{{ow.wall, wall_caption(w, ow.wall)}}, std::nullopt, std::nullopt, {}, o.common.samples};
  return out;
}

CommandOutput cmd_type(const Options& o) {
  const GeometryContext ctx = context(o.common);
  const ChernTriple v = character(o.common.v, ctx);
  const ChernTriple w = single_w(o.common, ctx);
  const OrientedWall ow = oriented_wall(w, v, ctx);
  if (!ow.type) throw DomainError("the wall is not a semicircle, so it has no type");
  Json j;
  j["type"] = static_cast<int>(*ow.type);
  if (ow.swapped) j["swapped"] = true;
  return {j, std::nullopt, std::nullopt};
}

CommandOutput cmd_modify(const Options& o) {
  const GeometryContext ctx = context(o.common);
  const ChernTriple v = character(o.common.v, ctx);
  const ChernTriple w = single_w(o.common, ctx);
  const OrientedWall ow = oriented_wall(w, v, ctx);
  if (!ow.type) throw DomainError("the wall is not a semicircle, so it has no modification");
  const auto m = modification(ow, ctx);
  if (!m) throw TypeMismatchError("Type2 walls have no discriminant-free modification");
  Json j;
  j["type"] = static_cast<int>(*ow.type);
  j["original"] = to_json(ow.wall);
  j["modified"] = to_json(*m);
  if (ow.swapped) j["swapped"] = true;
  PlotRequest plot{{{ow.wall, wall_caption(w, ow.wall)}, {*m, "modified " + wall_caption(w, *m)}},
                   std::nullopt, std::nullopt, {}, o.common.samples};
  return {j, plot, std::nullopt};
}

CommandOutput cmd_ellipse(const Options& o) {
  const GeometryContext ctx = context(o.common);
  const ChernTriple v = character(o.common.v, ctx);
  const ExtremalEllipse e = extremal_ellipse(v, ctx);
  Json j = to_json(e);
  PlotRequest plot{{}, e, std::nullopt, {}, o.common.samples};
  if (!o.beta.empty() || !o.alpha_sq.empty()) {
    if (o.beta.empty() || o.alpha_sq.empty()) {
      throw CLI::ValidationError("--beta", "--beta and --alpha-sq must be given together");
    }
    j["rank_bound_holds"] = rank_bound_holds(v, Rational::parse(o.beta), Rational::parse(o.alpha_sq), ctx);
  }
  if (!o.common.w.empty()) {
    const ChernTriple w = single_w(o.common, ctx);
    const bool left = finite_slope(w) < finite_slope(v);
    const EllipseContact c = left ? intersects_modified_type1(w, v, ctx) : intersects_modified_type3(v, w, ctx);
    const auto [minus, plus] = left ? intersection_betas(w, v, ctx) : intersection_betas_type3(v, w, ctx);
    Json contact;
    contact["side"] = left ? "left" : "right";
    contact["intersects"] = c.intersects;
    contact["tangent"] = c.tangent;
    contact["beta_minus"] = to_json(minus);
    contact["beta_plus"] = to_json(plus);
    j["contact"] = contact;
    const WallDescriptor mw = left ? numerical_wall(discriminant_free(w), v, ctx)
                                   : numerical_wall(v, discriminant_free(w), ctx);
    plot.walls.push_back({mw, "modified " + wall_caption(w, mw)});
    if (c.intersects || c.tangent) {
      const Rational beta = left ? plus : minus;
      const Rational alpha_sq = (e.rhs - e.v0 * square(beta - e.mu)) / (e.v0 + e.hn);
      plot.markers.push_back({beta, alpha_sq, "crossing at beta = " + beta.to_string() + ", alpha^2 = " +
                                                  alpha_sq.to_string()});
    }
  }
  return {j, plot, std::nullopt};
}

StabilityRegion region_for(const Options& o, const ChernTriple& v, const GeometryContext& ctx) {
  if (o.side == "sheaf") return stable_region_sheaf(v, slope_bound(o.mu), ctx);
  if (o.side == "shift") return stable_region_shift(v, slope_bound(o.mu), ctx);
  throw CLI::ValidationError("--side", "expected sheaf or shift");
}

CommandOutput cmd_region(const Options& o) {
  const GeometryContext ctx = context(o.common);
  const ChernTriple v = character(o.common.v, ctx);
  const StabilityRegion r = region_for(o, v, ctx);
  Json j = to_json(r);
  if (v.rank(ctx) == Rational(1)) j["note"] = "rank-one refinement not applied";
  return {j, PlotRequest{{}, extremal_ellipse(v, ctx), r, {}, o.common.samples}, std::nullopt};
}

CommandOutput cmd_vanishing(const Options& o, bool top) {
  const GeometryContext ctx = context(o.common);
  const ChernTriple v = character(o.common.v, ctx);
  const VanishingResult r =
      top ? vanishing_top_minus_one(v, slope_bound(o.mu), ctx) : vanishing_h1(v, slope_bound(o.mu), ctx);
  Json j;
  j["min_l"] = r.min_l.fits_slong_p() ? Json(r.min_l.get_si()) : Json(r.min_l.get_str());
  return {j, std::nullopt, std::nullopt};
}

Json integer_json(const Integer& z) { return z.fits_slong_p() ? Json(z.get_si()) : Json(z.get_str()); }

CommandOutput cmd_serre(const Options& o) {
  const SurfaceContext sctx = surface(o);
  const std::vector<HNFactor> fs = factor_list(o, sctx);
  const QuadValue m = serre_bound(fs, sctx);
  Json j;
  j["factors"] = factors_json(fs);
  j["M"] = to_json_compact(m);
  j["weak"] = to_json_compact(serre_bound_weak(fs, sctx));
  j["min_l"] = integer_json(m.next_integer_above());
  return {j, std::nullopt, std::nullopt};
}

CommandOutput cmd_regularity(const Options& o) {
  const SurfaceContext sctx = surface(o);
  const std::vector<HNFactor> fs = factor_list(o, sctx);
  const QuadValue b = cm_regularity_bound(fs, sctx);
  Json j;
  j["factors"] = factors_json(fs);
  j["bound"] = to_json_compact(b);
  j["m"] = integer_json(b.next_integer_above());
  return {j, std::nullopt, std::nullopt};
}

CommandOutput cmd_p3_rank2(const Options& o) {
  const Integer c1(o.c1);
  const Rational c2 = Rational::parse(o.c2);
  Json j;
  j["paper"] = to_json_compact(rank2_c3_bound(c1, c2, o.mu_max_large));
  j["hartshorne"] = to_json(hartshorne_bound(c1, c2));
  j["best"] = to_json_compact(best_c3_bound(c1, c2, o.mu_max_large, o.reflexive));
  return {j, std::nullopt, std::nullopt};
}

CommandOutput cmd_p3_ch3(const Options& o) {
  P3Character p;
  p.rank = o.rank;
  p.c1 = Integer(o.c1);
  p.c2 = Rational::parse(o.c2);
  const SlopeBound mu = slope_bound(o.mu);
  QuadValue bound;
  int chosen = 0;
  if (o.force_case == 0) {
    bound = ch3_upper_bound(p, mu);
    chosen = ch3_bound_case(p, mu.is_default() ? farey_floor(p.slope(), p.rank) : *mu.value());
  } else if (o.force_case == 1) {
    bound = ch3_bound_strip(p, mu.is_default() ? farey_floor(p.slope(), p.rank) : *mu.value());
    chosen = 1;
  } else {
    bound = ch3_bound_root(p);
    chosen = 2;
  }
  Json j;
  j["case"] = chosen;
  j["ch3_bound"] = to_json_compact(bound);
  j["c3_bound"] = to_json_compact(c3_from_ch3(bound, p.c1, p.c2));
  return {j, std::nullopt, std::nullopt};
}

CommandOutput cmd_p3_bmt(const Options& o) {
  GeometryContext ctx;
  const ChernTriple v = character(o.common.v, ctx);
  const Rational value = bmt_expression(v, Rational::parse(o.beta), Rational::parse(o.alpha_sq));
  Json j;
  j["value"] = to_json(value);
  j["holds"] = value.sign() >= 0;
  return {j, std::nullopt, std::nullopt};
}

CommandOutput cmd_scan(const Options& o) {
  ScanRequest req;
  req.ctx = context(o.common);
  req.v = character(o.common.v, req.ctx);
  req.rank_max = o.rank_max;
  req.e1_denominator = o.e1_den;
  req.e2_denominator = o.e2_den;
  req.beta_lo = Rational::parse(o.beta_lo);
  req.beta_hi = Rational::parse(o.beta_hi);
  req.threads = o.threads;
  const ScanResult r = enumerate_candidate_walls(req);
  Json arr = Json::array();
  PlotRequest plot{{}, std::nullopt, std::nullopt, {}, o.common.samples};
  for (const CandidateWall& c : r.candidates) {
    arr.push_back(to_json(c));
    plot.walls.push_back({c.wall, wall_caption(c.w, c.wall)});
  }
  Json j = arr;
  if (o.diagnostics) {
    j = Json::object();
    j["candidates"] = arr;
    Json d;
    for (const auto& [name, n] : r.diagnostics) d[name] = n;
    j["diagnostics"] = d;
  }
  return {j, plot, std::nullopt};
}

CommandOutput cmd_plot(const Options& o) {
  const GeometryContext ctx = context(o.common);
  const ChernTriple v = character(o.common.v, ctx);
  PlotRequest plot;
  plot.samples = o.common.samples;
  for (const std::string& ws : o.common.w) {
    const ChernTriple w = character(ws, ctx);
    const OrientedWall ow = oriented_wall(w, v, ctx);
    plot.walls.push_back({ow.wall, wall_caption(w, ow.wall)});
    if (o.modified) {
      if (const auto m = modification(ow, ctx)) plot.walls.push_back({*m, "modified " + wall_caption(w, *m)});
    }
  }
  if (o.ellipse) {
    const ExtremalEllipse e = extremal_ellipse(v, ctx);
    plot.ellipse = e;
    if (o.modified && o.common.w.size() == 1) {
      const ChernTriple w = character(o.common.w.front(), ctx);
      if (finite_slope(w) < finite_slope(v) && intersects_modified_type1(w, v, ctx).intersects) {
        const Rational beta = intersection_betas(w, v, ctx).second;
        const Rational alpha_sq = (e.rhs - e.v0 * square(beta - e.mu)) / (e.v0 + e.hn);
        plot.markers.push_back({beta, alpha_sq, "crossing at beta = " + beta.to_string() + ", alpha^2 = " +
                                                    alpha_sq.to_string()});
      }
    }
  }
  if (!o.region.empty()) {
    Options copy = o;
    copy.side = o.region;
    plot.region = region_for(copy, v, ctx);
  }
  CommandOutput out{Json::object(), plot, std::nullopt};
  const std::string svg = render_svg(plot);
  if (o.common.svg_out.empty()) out.raw = svg;
  return out;
}

void print_text(const Json& j, std::ostream& out, const std::string& prefix) {
  const bool is_quad = j.is_object() && j.size() == 3 && j.contains("q") && j.contains("s") && j.contains("d");
  if (is_quad) {
    out << prefix << ": " << quad_from_json(j).to_string() << "\n";
  } else if (j.is_object()) {
    for (const auto& [key, value] : j.items()) print_text(value, out, prefix.empty() ? key : prefix + "." + key);
  } else if (j.is_array()) {
    if (j.empty()) out << (prefix.empty() ? "(none)" : prefix + ": (none)") << "\n";
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], out, prefix + "[" + std::to_string(i) + "]");
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void add_common(CLI::App* sub, Common& c, bool needs_v, bool with_w, bool with_svg) {
  auto* v = sub->add_option("--v", c.v, "character e0,e1,e2[,e3] with rational entries");
  if (needs_v) v->required();
  if (with_w) sub->add_option("--w", c.w, "second character e0,e1,e2[,e3]");
  sub->add_option("--n", c.n, "dimension of the variety")->capture_default_str();
  sub->add_option("--hn", c.hn, "top self-intersection H^n")->capture_default_str();
  sub->add_flag("--text", c.text, "human-readable output instead of JSON");
  if (with_svg) {
    sub->add_option("--svg-out", c.svg_out, "also write an SVG picture to this path");
    sub->add_option("--samples", c.samples, "segments per curve in SVG output")->capture_default_str();
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tilt-stability computations: walls, stability regions and vanishing bounds", "tiltlab"};
  app.require_subcommand(1);
  Options o;
  Common& c = o.common;
  std::function<CommandOutput()> action;
  auto bind = [&action](CLI::App* sub, std::function<CommandOutput()> f) {
    sub->callback([&action, f] { action = f; });
  };

  auto* wall = app.add_subcommand("wall", "numerical wall of two characters");
  add_common(wall, c, true, true, true);
  wall->get_option("--w")->required();
  bind(wall, [&] { return cmd_wall(o); });

  auto* type = app.add_subcommand("type", "type of the wall of two characters");
  add_common(type, c, true, true, false);
  type->get_option("--w")->required();
  bind(type, [&] { return cmd_type(o); });

  auto* modify = app.add_subcommand("modify", "discriminant-free modification of a wall");
  add_common(modify, c, true, true, true);
  modify->get_option("--w")->required();
  bind(modify, [&] { return cmd_modify(o); });

  auto* ellipse = app.add_subcommand("ellipse", "extremal ellipse, rank-bound test and wall contact");
  add_common(ellipse, c, true, true, true);
  ellipse->add_option("--beta", o.beta, "beta of a test point");
  ellipse->add_option("--alpha-sq", o.alpha_sq, "alpha^2 of a test point");
  bind(ellipse, [&] { return cmd_ellipse(o); });

  auto* region = app.add_subcommand("region", "certified tilt-stability region");
  add_common(region, c, true, false, true);
  region->add_option("--side", o.side, "sheaf or shift")->check(CLI::IsMember({"sheaf", "shift"}))->capture_default_str();
  region->add_option("--mu", o.mu, "slope bound (max subsheaf slope, or min quotient slope on the shift side)");
  bind(region, [&] { return cmd_region(o); });

  auto* vanishing = app.add_subcommand("vanishing", "effective cohomology vanishing");
  vanishing->require_subcommand(1);
  auto* top = vanishing->add_subcommand("top", "H^{n-1}(E(K + lH)) = 0 for l >= min_l");
  add_common(top, c, true, false, false);
  top->add_option("--mu", o.mu, "upper bound on subsheaf slopes");
  bind(top, [&] { return cmd_vanishing(o, true); });
  auto* h1 = vanishing->add_subcommand("h1", "H^1(E(-lH)) = 0 for l >= min_l");
  add_common(h1, c, true, false, false);
  h1->add_option("--mu", o.mu, "lower bound on quotient slopes");
  bind(h1, [&] { return cmd_vanishing(o, false); });

  auto add_surface = [&](CLI::App* sub) {
    sub->add_option("--factor", o.factors, "HN factor rank,muK,deltaK (repeatable, decreasing slope)");
    sub->add_option("--sheaf", o.sheaves, "HN factor from raw data rank,c1H,c1K,ch2 (repeatable)");
    sub->add_option("--hh", o.hh, "H^2")->capture_default_str();
    sub->add_option("--kh", o.kh, "K.H")->capture_default_str();
    sub->add_option("--kk", o.kk, "K^2")->capture_default_str();
    sub->add_flag("--text", c.text, "human-readable output instead of JSON");
  };
  auto* serre = app.add_subcommand("serre", "effective Serre vanishing on a surface");
  add_surface(serre);
  bind(serre, [&] { return cmd_serre(o); });
  auto* regularity = app.add_subcommand("regularity", "Castelnuovo-Mumford regularity bound on a surface");
  add_surface(regularity);
  bind(regularity, [&] { return cmd_regularity(o); });

  auto* p3 = app.add_subcommand("p3", "bounds for sheaves on projective 3-space");
  p3->require_subcommand(1);
  auto* rank2 = p3->add_subcommand("rank2", "c3 bounds for rank-two sheaves");
  rank2->add_option("--c1", o.c1, "0 or -1")->required();
  rank2->add_option("--c2", o.c2, "second Chern class")->required();
  rank2->add_flag("--mu-max-large", o.mu_max_large, "max subsheaf slope exceeds the case threshold");
  rank2->add_flag("--reflexive", o.reflexive, "the sheaf is reflexive");
  rank2->add_flag("--text", c.text, "human-readable output instead of JSON");
  bind(rank2, [&] { return cmd_p3_rank2(o); });
  auto* ch3 = p3->add_subcommand("ch3", "upper bound on ch3 of a slope-stable sheaf");
  ch3->add_option("--rank", o.rank, "rank")->required();
  ch3->add_option("--c1", o.c1, "first Chern class")->required();
  ch3->add_option("--c2", o.c2, "second Chern class")->required();
  ch3->add_option("--mu-max", o.mu, "upper bound on subsheaf slopes");
  ch3->add_option("--case", o.force_case, "force the bound form (1 or 2)")->check(CLI::IsMember({1, 2}));
  ch3->add_flag("--text", c.text, "human-readable output instead of JSON");
  bind(ch3, [&] { return cmd_p3_ch3(o); });
  auto* bmt = p3->add_subcommand("bmt", "cubic Bogomolov-Gieseker-type expression");
  bmt->add_option("--v", c.v, "character e0,e1,e2,e3")->required();
  bmt->add_option("--beta", o.beta, "beta")->required();
  bmt->add_option("--alpha-sq", o.alpha_sq, "alpha^2")->required();
  bmt->add_flag("--text", c.text, "human-readable output instead of JSON");
  bind(bmt, [&] { return cmd_p3_bmt(o); });

  auto* scan = app.add_subcommand("scan", "enumerate candidate destabilising walls");
  add_common(scan, c, true, false, true);
  scan->add_option("--rank-max", o.rank_max, "largest rank of a candidate subobject")->required();
  scan->add_option("--e1-den", o.e1_den, "lattice denominator for e1")->capture_default_str();
  scan->add_option("--e2-den", o.e2_den, "lattice denominator for e2")->capture_default_str();
  scan->add_option("--beta-lo", o.beta_lo, "left end of the beta window")->required();
  scan->add_option("--beta-hi", o.beta_hi, "right end of the beta window")->required();
  scan->add_option("--threads", o.threads, "worker threads")->capture_default_str();
  scan->add_flag("--diagnostics", o.diagnostics, "report rejection counts per filter");
  bind(scan, [&] { return cmd_scan(o); });

  auto* plot = app.add_subcommand("plot", "SVG picture of walls, the extremal ellipse and a region");
  add_common(plot, c, true, true, true);
  plot->add_flag("--ellipse", o.ellipse, "draw the extremal ellipse of v");
  plot->add_flag("--modified", o.modified, "also draw discriminant-free modifications");
  plot->add_option("--region", o.region, "draw the stability region (sheaf or shift)")
      ->check(CLI::IsMember({"sheaf", "shift"}));
  plot->add_option("--mu", o.mu, "slope bound for --region");
  bind(plot, [&] { return cmd_plot(o); });

  try {
    app.parse(argc, argv);
    const CommandOutput result = action();
    if (!c.svg_out.empty()) {
      if (!result.plot) throw CLI::ValidationError("--svg-out", "this command has nothing to draw");
      const std::string svg = render_svg(*result.plot);
      std::ofstream file(c.svg_out, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot open " + c.svg_out + " for writing");
      file << svg;
    }
    if (result.raw) {
      out << *result.raw;
    } else if (c.text) {
      print_text(result.json, out, "");
    } else if (!(result.json.is_object() && result.json.empty() && result.plot)) {
      out << result.json.dump() << "\n";
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace tiltlab
