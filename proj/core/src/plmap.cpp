#include "plcommute/plmap.hpp"

#include <algorithm>
#include <sstream>

namespace plc {

namespace {

bool collinear(const Point& a, const Point& b, const Point& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

}  // namespace

PLMap make_plmap(std::vector<Point> points) {
  if (points.empty()) throw Error(Err::EmptyInput, "no points given");

  for (const Point& p : points) {
    if (!in_unit_interval(p.x) || !in_unit_interval(p.y))
      throw Error(Err::OutOfRange, "point (" + p.x.str() + "," + p.y.str() + ") outside the unit square");
  }

  std::vector<Point> merged;
  merged.reserve(points.size());
  for (const Point& p : points) {
    if (!merged.empty()) {
      const Point& prev = merged.back();
      if (p.x == prev.x) {
        if (p.y != prev.y)
          throw Error(Err::NonMonotoneX, "duplicate abscissa " + p.x.str() + " with different ordinates");
        continue;  // exact duplicate
      }
      if (p.x < prev.x) throw Error(Err::NonMonotoneX, "abscissas must not decrease");
    }
    merged.push_back(p);
  }

  if (merged.front().x != Rational(0) || merged.back().x != Rational(1))
    throw Error(Err::DomainNotUnit, "domain must span [0,1], got [" + merged.front().x.str() + "," +
                                        merged.back().x.str() + "]");

  std::vector<Point> canon;
  canon.reserve(merged.size());
  for (const Point& p : merged) {
    while (canon.size() >= 2 && collinear(canon[canon.size() - 2], canon.back(), p)) canon.pop_back();
    canon.push_back(p);
  }
  return PLMap(std::move(canon));
}

PLMap PLMap::identity() { return make_plmap({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}}); }

std::vector<Point> PLMap::kinks() const {
  return pts_.size() <= 2 ? std::vector<Point>{} : std::vector<Point>(pts_.begin() + 1, pts_.end() - 1);
}

std::vector<Rational> PLMap::kink_xs() const {
  std::vector<Rational> xs;
  for (size_t i = 1; i + 1 < pts_.size(); ++i) xs.push_back(pts_[i].x);
  return xs;
}

Rational PLMap::slope(int piece) const {
  const Point& a = pts_.at(piece);
  const Point& b = pts_.at(piece + 1);
  return (b.y - a.y) / (b.x - a.x);
}

Rational PLMap::slope_at(const Rational& x) const {
  if (!in_unit_interval(x)) throw Error(Err::OutOfDomain, "slope_at(" + x.str() + ")");
  // Piece whose half-open interval [x_i, x_{i+1}) contains x; last piece at x = 1.
  size_t lo = 0;
  for (size_t i = 0; i + 1 < pts_.size(); ++i) {
    if (pts_[i].x <= x) lo = i;
  }
  return slope(static_cast<int>(lo));
}

Rational PLMap::operator()(const Rational& x) const {
  if (!in_unit_interval(x)) throw Error(Err::OutOfDomain, "eval at " + x.str());
  size_t lo = 0, hi = pts_.size() - 1;
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (pts_[mid].x <= x)
      lo = mid;
    else
      hi = mid;
  }
  const Point& a = pts_[lo];
  if (x == a.x) return a.y;
  const Point& b = pts_[lo + 1];
  return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

std::vector<Rational> PLMap::preimages(const Rational& y) const {
  if (!in_unit_interval(y)) throw Error(Err::OutOfDomain, "preimages of " + y.str());
  std::vector<Rational> sols;
  for (size_t i = 0; i + 1 < pts_.size(); ++i) {
    const Point& a = pts_[i];
    const Point& b = pts_[i + 1];
    if (a.y == b.y) {
      if (a.y == y)
        throw Error(Err::InfinitePreimage,
                    "constant piece [" + a.x.str() + "," + b.x.str() + "] at level " + y.str());
      continue;
    }
    const Rational lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
    if (y < lo || y > hi) continue;
    sols.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
  }
  std::sort(sols.begin(), sols.end());
  sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
  return sols;
}

PLMap compose(const PLMap& outer, const PLMap& inner) {
  std::vector<Rational> cut;
  for (const Point& p : inner.breakpoints()) cut.push_back(p.x);
  // Inner-preimages of the outer kinks refine the partition.
  for (const Rational& k : outer.kink_xs()) {
    const auto& bp = inner.breakpoints();
    for (size_t i = 0; i + 1 < bp.size(); ++i) {
      const Point& a = bp[i];
      const Point& b = bp[i + 1];
      if (a.y == b.y) continue;  // constant piece: composite stays linear there
      const Rational lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
      if (k < lo || k > hi) continue;
      cut.push_back(a.x + (k - a.y) * (b.x - a.x) / (b.y - a.y));
    }
  }
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());

  std::vector<Point> pts;
  pts.reserve(cut.size());
  for (const Rational& x : cut) pts.push_back({x, outer(inner(x))});
  return make_plmap(std::move(pts));
}

namespace {

// Maximal runs of constant slope sign; a zero-slope piece forms its own run.
std::vector<std::pair<int, int>> monotone_runs(const std::vector<Rational>& slopes) {
  std::vector<std::pair<int, int>> runs;
  for (int i = 0; i < static_cast<int>(slopes.size()); ++i) {
    int s = slopes[i].sign();
    if (!runs.empty() && s != 0) {
      int prev = slopes[runs.back().second].sign();
      if (prev == s) {
        runs.back().second = i;
        continue;
      }
    }
    runs.push_back({i, i});
  }
  return runs;
}

}  // namespace

MapProfile classify(const PLMap& m) {
  MapProfile prof;
  const auto& pts = m.breakpoints();
  prof.kinks = m.kinks();
  for (int i = 0; i < m.piece_count(); ++i) prof.slopes.push_back(m.slope(i));
  prof.derivative_at_zero = prof.slopes.front();
  prof.zero_at_endpoints = pts.front().y == Rational(0) && pts.back().y == Rational(0);

  auto runs = monotone_runs(prof.slopes);
  prof.monotone_piece_count = static_cast<int>(runs.size());

  prof.is_surjective_each_piece = true;
  for (auto [b, e] : runs) {
    const Rational y0 = pts[b].y, y1 = pts[e + 1].y;
    if (std::min(y0, y1) != Rational(0) || std::max(y0, y1) != Rational(1)) {
      prof.is_surjective_each_piece = false;
      break;
    }
  }

  if (runs.size() == 2 && prof.slopes[runs[0].second].sign() > 0 && prof.slopes[runs[1].first].sign() < 0) {
    const Point& top = pts[runs[1].first];
    prof.is_unimodal = pts.front().y == Rational(0) && pts.back().y == Rational(0) && top.y == Rational(1);
    if (prof.is_unimodal) prof.turning_point = top.x;
  }

  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point& a = pts[i];
    const Point& b = pts[i + 1];
    const Rational s = (b.y - a.y) / (b.x - a.x);
    if (s == Rational(1)) {
      if (a.y == a.x) {  // the piece lies on the diagonal; record its ends
        prof.fixed_points.push_back(a.x);
        prof.fixed_points.push_back(b.x);
      }
      continue;
    }
    const Rational x = (a.y - s * a.x) / (Rational(1) - s);
    if (x >= a.x && x <= b.x) prof.fixed_points.push_back(x);
  }
  std::sort(prof.fixed_points.begin(), prof.fixed_points.end());
  prof.fixed_points.erase(std::unique(prof.fixed_points.begin(), prof.fixed_points.end()),
                          prof.fixed_points.end());
  return prof;
}

bool is_unimodal_surjective_anchored(const PLMap& m) {
  MapProfile p = classify(m);
  return p.is_unimodal && p.is_surjective_each_piece && p.zero_at_endpoints;
}

std::string points_to_text(const std::vector<Point>& pts) {
  std::ostringstream os;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) os << "; ";
    os << pts[i].x << "," << pts[i].y;
  }
  return os.str();
}

std::string to_text(const PLMap& m) { return points_to_text(m.breakpoints()); }

std::vector<Point> parse_points(std::string_view text) {
  std::vector<Point> pts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t semi = text.find(';', pos);
    std::string_view item = text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
    size_t comma = item.find(',');
    if (comma == std::string_view::npos)
      throw Error(Err::ParseError, "expected `x,y` pair at offset " + std::to_string(pos));
    Point p;
    try {
      p.x = Rational::parse(item.substr(0, comma));
      p.y = Rational::parse(item.substr(comma + 1));
    } catch (const Error& e) {
      throw Error(Err::ParseError, std::string(e.what()) + " (pair starting at offset " + std::to_string(pos) + ")");
    }
    pts.push_back(p);
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  if (pts.empty()) throw Error(Err::EmptyInput, "no points in input");
  return pts;
}

PLMap parse_plmap(std::string_view text) { return make_plmap(parse_points(text)); }

}  // namespace plc
