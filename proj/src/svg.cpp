#include "stabwalls/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace stabwalls {

namespace {

constexpr double kMargin = 40.0;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double b0, b1, amax, x0, x1, ytop, yaxis;
  double x(double beta) const { return x0 + (beta - b0) / (b1 - b0) * (x1 - x0); }
  double y(double alpha) const { return yaxis - alpha / amax * (yaxis - ytop); }
  double sx() const { return (x1 - x0) / (b1 - b0); }
  double sy() const { return (yaxis - ytop) / amax; }
};

// Squared distance from c to [lo, hi].
Rational dist_sq(const Rational& c, const Rational& lo, const Rational& hi) {
  if (c < lo) return (lo - c) * (lo - c);
  if (c > hi) return (c - hi) * (c - hi);
  return Rational(0);
}

bool visible(const WallCircle& w, const PlotWindow& win) {
  switch (w.kind) {
    case WallCircle::Kind::semicircle: return dist_sq(w.center, win.beta_min, win.beta_max) < w.radius_sq;
    case WallCircle::Kind::vertical: return win.beta_min < w.beta0 && w.beta0 < win.beta_max;
    default: return false;
  }
}

}  // namespace

void validate_window(const PlotWindow& w) {
  if (!(w.beta_min < w.beta_max)) throw std::invalid_argument("plot window needs beta_min < beta_max");
  if (sgn(w.alpha_max) <= 0) throw std::invalid_argument("plot window needs alpha_max > 0");
  if (w.width <= 2 * kMargin || w.height <= 2 * kMargin) throw std::invalid_argument("plot window is too small");
}

SvgDocument render_walls_svg(const std::vector<WallCircle>& walls, const PlotWindow& window,
                             const std::vector<Marker>& markers) {
  validate_window(window);
  const Frame f{window.beta_min.get_d(), window.beta_max.get_d(), window.alpha_max.get_d(),
                kMargin,                 window.width - kMargin,   kMargin,
                window.height - kMargin};

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << window.width << "\" height=\"" << window.height
    << "\" viewBox=\"0 0 " << window.width << " " << window.height << "\">\n";
  o << "<defs><clipPath id=\"plot\"><rect x=\"" << fmt(f.x0) << "\" y=\"" << fmt(f.ytop) << "\" width=\""
    << fmt(f.x1 - f.x0) << "\" height=\"" << fmt(f.yaxis - f.ytop) << "\"/></clipPath></defs>\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes and integer ticks.
  o << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"11\">\n";
  o << "<line x1=\"" << fmt(f.x0) << "\" y1=\"" << fmt(f.yaxis) << "\" x2=\"" << fmt(f.x1) << "\" y2=\""
    << fmt(f.yaxis) << "\"/>\n";
  o << "<line x1=\"" << fmt(f.x0) << "\" y1=\"" << fmt(f.yaxis) << "\" x2=\"" << fmt(f.x0) << "\" y2=\""
    << fmt(f.ytop) << "\"/>\n";
  for (long b = static_cast<long>(std::ceil(f.b0)); b <= static_cast<long>(std::floor(f.b1)); ++b) {
    o << "<line x1=\"" << fmt(f.x(b)) << "\" y1=\"" << fmt(f.yaxis) << "\" x2=\"" << fmt(f.x(b)) << "\" y2=\""
      << fmt(f.yaxis + 4) << "\"/>";
    o << "<text x=\"" << fmt(f.x(b)) << "\" y=\"" << fmt(f.yaxis + 16) << "\" text-anchor=\"middle\" stroke=\"none\">"
      << b << "</text>\n";
  }
  for (long a = 1; a <= static_cast<long>(std::floor(f.amax)); ++a) {
    o << "<line x1=\"" << fmt(f.x0 - 4) << "\" y1=\"" << fmt(f.y(a)) << "\" x2=\"" << fmt(f.x0) << "\" y2=\""
      << fmt(f.y(a)) << "\"/>";
    o << "<text x=\"" << fmt(f.x0 - 8) << "\" y=\"" << fmt(f.y(a) + 4) << "\" text-anchor=\"end\" stroke=\"none\">" << a
      << "</text>\n";
  }
  o << "<text x=\"" << fmt(f.x1) << "\" y=\"" << fmt(f.yaxis + 30) << "\" text-anchor=\"end\" stroke=\"none\">beta</text>\n";
  o << "<text x=\"" << fmt(f.x0) << "\" y=\"" << fmt(f.ytop - 10) << "\" text-anchor=\"middle\" stroke=\"none\">alpha</text>\n";
  o << "</g>\n";

  SvgDocument doc;
  std::size_t drawn = 0;
  o << "<g id=\"walls\" clip-path=\"url(#plot)\" fill=\"none\" stroke=\"#1f4e9a\" stroke-width=\"1.5\">\n";
  for (const auto& w : walls) {
    if (!visible(w, window)) continue;
    ++drawn;
    if (w.kind == WallCircle::Kind::semicircle) {
      const double c = w.center.get_d(), r = std::sqrt(w.radius_sq.get_d());
      o << "<path data-center=\"" << to_string(w.center) << "\" data-radius-sq=\"" << to_string(w.radius_sq)
        << "\" d=\"M " << fmt(f.x(c - r)) << " " << fmt(f.yaxis) << " A " << fmt(r * f.sx()) << " " << fmt(r * f.sy())
        << " 0 0 1 " << fmt(f.x(c + r)) << " " << fmt(f.yaxis) << "\"/>\n";
    } else {
      const double b = w.beta0.get_d();
      o << "<line data-beta0=\"" << to_string(w.beta0) << "\" x1=\"" << fmt(f.x(b)) << "\" y1=\"" << fmt(f.yaxis)
        << "\" x2=\"" << fmt(f.x(b)) << "\" y2=\"" << fmt(f.ytop) << "\"/>\n";
    }
  }
  o << "</g>\n";
  doc.empty_window = drawn == 0;

  o << "<g id=\"markers\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (const auto& m : markers) {
    if (sgn(m.alpha_sq) <= 0) throw std::invalid_argument("marker alpha^2 must be positive");
    const double x = f.x(m.beta.get_d()), y = f.y(std::sqrt(m.alpha_sq.get_d()));
    o << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3\" fill=\"#b22222\"/>";
    o << "<text x=\"" << fmt(x + 6) << "\" y=\"" << fmt(y - 6) << "\">" << escape(m.label) << "</text>\n";
  }
  o << "</g>\n</svg>\n";
  doc.text = o.str();
  return doc;
}

}  // namespace stabwalls
