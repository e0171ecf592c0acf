#include "tiltlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tiltlab {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kMargin = 40;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double beta_min = -1, beta_max = 1, alpha_max = 1;

  double x(double beta) const { return kMargin + (beta - beta_min) / (beta_max - beta_min) * (kWidth - 2 * kMargin); }
  double y(double alpha) const { return kHeight - kMargin - alpha / alpha_max * (kHeight - 2 * kMargin); }
};

// Half-ellipse (or semicircle) centred at c on the beta-axis.
std::string arc_path(const Frame& f, double c, double half_width, double height, int samples) {
  std::string d = "M " + num(f.x(c + half_width)) + " " + num(f.y(0));
  for (int i = 1; i <= samples; ++i) {
    const double t = std::numbers::pi * i / samples;
    d += " L " + num(f.x(c + half_width * std::cos(t))) + " " + num(f.y(height * std::sin(t)));
  }
  return d;
}

std::string ellipse_caption(const ExtremalEllipse& e) {
  return e.v0.to_string() + "(beta - " + e.mu.to_string() + ")^2 + " + (e.v0 + e.hn).to_string() +
         " alpha^2 = " + e.rhs.to_string();
}

std::string region_caption(const StabilityRegion& r) {
  return std::string(to_string(r.kind)) + " at beta = " + r.beta.to_string() + " (" + r.conditional_on + ")";
}

}  // namespace

std::string render_svg(const PlotRequest& req) {
  if (req.samples < 1) throw std::invalid_argument("--samples must be at least 1");
  std::vector<double> betas;
  double alpha_max = 0;
  std::size_t drawable = 0;
  for (const PlotWall& w : req.walls) {
    if (const auto* c = std::get_if<Semicircle>(&w.wall)) {
      const double r = std::sqrt(c->radius_sq.to_double());
      betas.push_back(c->center.to_double() - r);
      betas.push_back(c->center.to_double() + r);
      alpha_max = std::max(alpha_max, r);
      ++drawable;
    } else if (const auto* line = std::get_if<VerticalLine>(&w.wall)) {
      betas.push_back(line->beta.to_double());
      ++drawable;
    }
  }
  if (req.ellipse && !req.ellipse->degenerate()) {
    const ExtremalEllipse& e = *req.ellipse;
    betas.push_back(e.left_intercept().to_double());
    betas.push_back(e.right_intercept().to_double());
    alpha_max = std::max(alpha_max, std::sqrt((e.rhs / (e.v0 + e.hn)).to_double()));
    ++drawable;
  }
  if (req.region) {
    betas.push_back(req.region->beta.to_double());
    ++drawable;
  }
  for (const PlotMarker& m : req.markers) {
    betas.push_back(m.beta.to_double());
    alpha_max = std::max(alpha_max, std::sqrt(m.alpha_sq.to_double()));
  }
  if (drawable == 0) throw std::invalid_argument("nothing to plot: supply a non-empty wall, an ellipse or a region");

  Frame f;
  const auto [lo, hi] = std::minmax_element(betas.begin(), betas.end());
  const double span = std::max(*hi - *lo, 1.0);
  f.beta_min = *lo - 0.1 * span;
  f.beta_max = *hi + 0.1 * span;
  f.alpha_max = (alpha_max > 0 ? alpha_max : 1.0) * 1.15;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<title>tilt plane: beta horizontal, alpha vertical</title>\n";

  if (req.region) {
    const StabilityRegion& r = *req.region;
    const double xb = f.x(r.beta.to_double());
    const std::string caption = "<title>" + escape(region_caption(r)) + "</title>";
    const double top = f.y(f.alpha_max);
    const double bottom = f.y(0);
    if (r.kind == StabilityRegion::Kind::VerticalRay) {
      out << "<line class=\"region\" x1=\"" << num(xb) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(xb)
          << "\" y2=\"" << num(top) << "\" stroke=\"green\" stroke-width=\"3\">" << caption << "</line>\n";
    } else {
      const bool left = r.kind == StabilityRegion::Kind::LeftHalfStrip ||
                        r.kind == StabilityRegion::Kind::OpenLeftHalfPlane;
      const double x0 = left ? kMargin : xb;
      const double x1 = left ? xb : kWidth - kMargin;
      out << "<rect class=\"region\" x=\"" << num(x0) << "\" y=\"" << num(top) << "\" width=\""
          << num(std::max(0.0, x1 - x0)) << "\" height=\"" << num(bottom - top)
          << "\" fill=\"green\" fill-opacity=\"0.15\">" << caption << "</rect>\n";
    }
  }

  const double axis_x = (f.beta_min <= 0 && 0 <= f.beta_max) ? f.x(0) : kMargin;
  out << "<line class=\"axis\" x1=\"" << num(kMargin) << "\" y1=\"" << num(f.y(0)) << "\" x2=\""
      << num(kWidth - kMargin) << "\" y2=\"" << num(f.y(0)) << "\" stroke=\"black\"><title>beta</title></line>\n";
  out << "<line class=\"axis\" x1=\"" << num(axis_x) << "\" y1=\"" << num(f.y(0)) << "\" x2=\"" << num(axis_x)
      << "\" y2=\"" << num(kMargin) << "\" stroke=\"black\"><title>alpha</title></line>\n";

  for (const PlotWall& w : req.walls) {
    const std::string caption = "<title>" + escape(w.caption) + "</title>";
    if (const auto* c = std::get_if<Semicircle>(&w.wall)) {
      const double r = std::sqrt(c->radius_sq.to_double());
      out << "<path class=\"wall\" d=\"" << arc_path(f, c->center.to_double(), r, r, req.samples)
          << "\" fill=\"none\" stroke=\"blue\">" << caption << "</path>\n";
    } else if (const auto* line = std::get_if<VerticalLine>(&w.wall)) {
      const double xb = f.x(line->beta.to_double());
      out << "<line class=\"wall\" x1=\"" << num(xb) << "\" y1=\"" << num(f.y(0)) << "\" x2=\"" << num(xb)
          << "\" y2=\"" << num(kMargin) << "\" stroke=\"blue\">" << caption << "</line>\n";
    }
  }

  if (req.ellipse && !req.ellipse->degenerate()) {
    const ExtremalEllipse& e = *req.ellipse;
    const double a = e.half_width().to_double();
    const double b = std::sqrt((e.rhs / (e.v0 + e.hn)).to_double());
    out << "<path class=\"ellipse\" d=\"" << arc_path(f, e.mu.to_double(), a, b, req.samples)
        << "\" fill=\"none\" stroke=\"red\"><title>" << escape(ellipse_caption(e)) << "</title></path>\n";
  }

  for (const PlotMarker& m : req.markers) {
    out << "<circle class=\"marker\" cx=\"" << num(f.x(m.beta.to_double())) << "\" cy=\""
        << num(f.y(std::sqrt(m.alpha_sq.to_double()))) << "\" r=\"3\" fill=\"black\"><title>"
        << escape(m.caption) << "</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tiltlab
