#include "plcommute/render.hpp"

#include <algorithm>
#include <sstream>

namespace plc {

namespace {

// Exact decimal with six places, round half away from zero.
std::string fmt6(const Rational& r) {
  const mpz_class num = r.numerator(), den = r.denominator();
  const mpz_class scaled = num * 1000000;
  mpz_class q = (2 * scaled + (num >= 0 ? den : -den)) / (2 * den);
  std::string sign = q < 0 ? "-" : "";
  mpz_class a = abs(q);
  mpz_class whole = a / 1000000, frac = a % 1000000;
  std::string fs = frac.get_str();
  fs.insert(fs.begin(), 6 - fs.size(), '0');
  return sign + whole.get_str() + "." + fs;
}

class Svg {
 public:
  Svg(int w, int h) {
    os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  }

  void line(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2,
            const char* stroke, const char* width) {
    os_ << "  <line x1=\"" << fmt6(x1) << "\" y1=\"" << fmt6(y1) << "\" x2=\"" << fmt6(x2) << "\" y2=\""
        << fmt6(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"/>\n";
  }

  void polyline(const std::vector<std::pair<Rational, Rational>>& pts, const char* stroke,
                const char* width) {
    os_ << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width
        << "\" points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) os_ << " ";
      os_ << fmt6(pts[i].first) << "," << fmt6(pts[i].second);
    }
    os_ << "\"/>\n";
  }

  void dot(const Rational& x, const Rational& y, const char* fill) {
    os_ << "  <circle cx=\"" << fmt6(x) << "\" cy=\"" << fmt6(y) << "\" r=\"2.4\" fill=\"" << fill
        << "\"/>\n";
  }

  void text(const Rational& x, const Rational& y, const std::string& s, bool anchor_end = false) {
    os_ << "  <text x=\"" << fmt6(x) << "\" y=\"" << fmt6(y)
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\""
        << (anchor_end ? " text-anchor=\"end\"" : "") << ">" << s << "</text>\n";
  }

  std::string finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  std::ostringstream os_;
};

}  // namespace

std::string render_quadrant_svg(const QuadrantScene& scene) {
  const int margin = 48;
  const int side = std::min(scene.width, scene.height);
  const Rational S(side / 2 - margin);
  const Rational cx(scene.width / 2), cy(scene.height / 2);

  // Quadrant transforms; SVG's y grows downward.
  auto at_x_psi = [&](const Rational& x, const Rational& p) { return std::pair{cx - x * S, cy - p * S}; };
  auto at_x_g = [&](const Rational& x, const Rational& gval) { return std::pair{cx - x * S, cy + gval * S}; };
  auto at_psi_y = [&](const Rational& p, const Rational& yval) { return std::pair{cx + yval * S, cy - p * S}; };
  auto at_g_y = [&](const Rational& gval, const Rational& yval) { return std::pair{cx + yval * S, cy + gval * S}; };

  std::optional<AbcdPoints> abcd;
  if (scene.lattice) abcd = abcd_points(scene.g, scene.psi, *scene.lattice);

  Svg svg(scene.width, scene.height);
  const Rational one(1);

  // Axes with the unit marks x=1, psi=1, g=1, y=1.
  svg.line(cx - S - Rational(12), cy, cx + S + Rational(12), cy, "#000000", "1");
  svg.line(cx, cy - S - Rational(12), cx, cy + S + Rational(12), "#000000", "1");
  svg.line(cx - S, cy - S, cx - S, cy + S, "#cccccc", "0.6");
  svg.line(cx + S, cy - S, cx + S, cy + S, "#cccccc", "0.6");
  svg.line(cx - S, cy - S, cx + S, cy - S, "#cccccc", "0.6");
  svg.line(cx - S, cy + S, cx + S, cy + S, "#cccccc", "0.6");
  svg.text(cx - S - Rational(28), cy - Rational(6), "x");
  svg.text(cx + S + Rational(16), cy - Rational(6), "y");
  svg.text(cx + Rational(8), cy - S - Rational(16), "psi");
  svg.text(cx + Rational(8), cy + S + Rational(24), "g");

  if (scene.lattice) {
    const Lattice& lat = *scene.lattice;
    for (const Rational& x : lat.x_lines) svg.line(cx - x * S, cy - S, cx - x * S, cy + S, "#aaaaaa", "0.6");
    for (const Rational& p : lat.psi_lines) svg.line(cx - S, cy - p * S, cx + S, cy - p * S, "#aaaaaa", "0.6");
    for (const Rational& g0 : lat.g_lines) svg.line(cx - S, cy + g0 * S, cx + S, cy + g0 * S, "#aaaaaa", "0.6");
    for (const Rational& y0 : lat.y_lines) svg.line(cx + y0 * S, cy - S, cx + y0 * S, cy + S, "#aaaaaa", "0.6");
  }

  for (const SAT& s : scene.highlighted_sats) {
    for (const SingleTrajectory& t : s.trajectories) {
      svg.line(cx - t.x0 * S, cy - S, cx - t.x0 * S, cy + S, "#cc4444", "1.1");
      svg.line(cx - S, cy - t.xi_line * S, cx + S, cy - t.xi_line * S, "#cc4444", "1.1");
      svg.line(cx - S, cy + t.f_line * S, cx + S, cy + t.f_line * S, "#cc4444", "1.1");
    }
    svg.line(cx + s.y0 * S, cy - S, cx + s.y0 * S, cy + S, "#cc4444", "1.1");
  }

  auto graph = [&](const PLMap& m, auto&& place) {
    std::vector<std::pair<Rational, Rational>> pts;
    pts.reserve(m.breakpoints().size());
    for (const Point& p : m.breakpoints()) pts.push_back(place(p.x, p.y));
    return pts;
  };
  svg.polyline(graph(scene.psi, at_x_psi), "#000000", "1.6");
  svg.polyline(graph(scene.g, at_x_g), "#000000", "1.6");
  svg.polyline(graph(scene.g, at_psi_y), "#000000", "1.6");
  svg.polyline(graph(scene.psi, at_g_y), "#000000", "1.6");

  if (abcd) {
    auto mark = [&](const std::vector<Point>& seq, auto&& place, const char* tag, CornerTag corner) {
      const bool below = corner == CornerTag::lr || corner == CornerTag::ll;
      const bool left = corner == CornerTag::ll || corner == CornerTag::ul;
      for (size_t i = 1; i + 1 < seq.size(); ++i) {
        auto [px, py] = place(seq[i].x, seq[i].y);
        svg.dot(px, py, "#222222");
        if (scene.labels)
          svg.text(px + (left ? Rational(-4) : Rational(4)), py + (below ? Rational(13) : Rational(-5)),
                   std::string(tag) + std::to_string(i), left);
      }
    };
    // A and C read their input on the vertical axes.
    mark(abcd->A, [&](const Rational& u, const Rational& val) { return at_psi_y(u, val); }, "A",
         CornerTag::ll);
    mark(abcd->B, at_x_psi, "B", CornerTag::lr);
    mark(abcd->C, [&](const Rational& u, const Rational& val) { return at_g_y(u, val); }, "C",
         CornerTag::ul);
    mark(abcd->D, at_x_g, "D", CornerTag::ur);
  }

  return svg.finish();
}

}  // namespace plc
