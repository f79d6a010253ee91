#include "plcommute/families.hpp"

#include <algorithm>

#include "plcommute/commutators.hpp"
#include "plcommute/conjugacy.hpp"

namespace plc {

namespace {

FamilyInstance finish_instance(std::string id, PLMap g, PLMap h,
                               std::vector<std::pair<std::string, Rational>> params, long t = 3) {
  PLMap psi = conjugate(xi(t), h);
  if (conjugate(tent(), h) != g)
    throw Error(Err::Internal, id + ": generated g is not the h-conjugate of the tent map");
  if (compose(g, psi) != compose(psi, g))
    throw Error(Err::Internal, id + ": generated pair does not commute");
  return FamilyInstance{std::move(id), std::move(g), std::move(psi), std::move(h), std::move(params)};
}

}  // namespace

FamilyInstance family_fig9(const Rational& a) {
  if (!(a > Rational(0) && a < Rational(1)))
    throw Error(Err::ParamOutOfRange, "fig9 needs 0 < a < 1, got a = " + a.str());
  const Rational half(1, 2), one(1);
  PLMap g = make_plmap({{Rational(0), Rational(0)},
                        {a * half, a},
                        {a, one},
                        {(a + one) * half, a},
                        {one, Rational(0)}});
  PLMap h = make_plmap({{Rational(0), Rational(0)}, {half, a}, {one, one}});
  return finish_instance("fig9", std::move(g), std::move(h), {{"a", a}});
}

FamilyInstance family_fig11(const Rational& a, const Rational& b) {
  if (!(a > Rational(0) && a < b && b < Rational(1)))
    throw Error(Err::ParamOutOfRange, "fig11 needs 0 < a < b < 1, got a = " + a.str() + ", b = " + b.str());
  const Rational one(1);
  std::vector<Point> gp{{Rational(0), Rational(0)},
                        {a / Rational(2), a},
                        {a, b},
                        {(Rational(3) * a + b) / Rational(4), one},
                        {(a + b) / Rational(2), b},
                        {b, a},
                        {one, Rational(0)}};
  for (size_t i = 0; i + 1 < gp.size(); ++i)
    if (!(gp[i].x < gp[i + 1].x))
      throw Error(Err::DegenerateShape, "fig11 abscissas collide at index " + std::to_string(i));
  PLMap g = make_plmap(std::move(gp));
  PLMap h = make_plmap(
      {{Rational(0), Rational(0)}, {Rational(2, 5), a}, {Rational(4, 5), b}, {one, one}});
  return finish_instance("fig11", std::move(g), std::move(h), {{"a", a}, {"b", b}});
}

FamilyInstance family_fig18(const Rational& a, const Rational& b) {
  const Rational two(2), one(1);
  if (!(a > Rational(0) && a < Rational(1, 2) && a < b && two * b < Rational(3) * a))
    throw Error(Err::ParamOutOfRange,
                "fig18 needs 0 < a < 1/2 and a < b < 3a/2, got a = " + a.str() + ", b = " + b.str());
  std::vector<Point> gp{{Rational(0), Rational(0)},
                        {a, two * a},
                        {b, one},
                        {two * b - a, two * a},
                        {two * a, Rational(4) * (b - a)},
                        {one, Rational(0)}};
  for (size_t i = 0; i + 1 < gp.size(); ++i)
    if (!(gp[i].x < gp[i + 1].x))
      throw Error(Err::DegenerateShape, "fig18 abscissas collide at index " + std::to_string(i));
  PLMap g = make_plmap(std::move(gp));
  PLMap h = make_plmap({{Rational(0), Rational(0)}, {a / b, two * a}, {one, one}});
  return finish_instance("fig18", std::move(g), std::move(h), {{"a", a}, {"b", b}});
}

namespace {

Rational poly_eval(const std::vector<Point>& pts, const Rational& x) {
  size_t lo = 0;
  while (lo + 2 < pts.size() && pts[lo + 1].x <= x) ++lo;
  const Point& p = pts[lo];
  const Point& q = pts[lo + 1];
  if (x == p.x) return p.y;
  return p.y + (x - p.x) * (q.y - p.y) / (q.x - p.x);
}

// Unique preimage on a strictly increasing polyline.
Rational poly_inverse(const std::vector<Point>& pts, const Rational& y) {
  size_t lo = 0;
  while (lo + 2 < pts.size() && pts[lo + 1].y <= y) ++lo;
  const Point& p = pts[lo];
  const Point& q = pts[lo + 1];
  if (y == p.y) return p.x;
  return p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y);
}

std::vector<Point> canonical_leg(std::vector<Point> leg) {
  if (leg.empty()) throw Error(Err::EmptyInput, "no leg points");
  for (const Point& p : leg)
    if (!in_unit_interval(p.x) || !in_unit_interval(p.y))
      throw Error(Err::OutOfRange, "leg point outside the unit square");
  std::vector<Point> out;
  for (const Point& p : leg) {
    if (!out.empty()) {
      if (p.x == out.back().x && p.y == out.back().y) continue;
      if (!(p.x > out.back().x) || !(p.y > out.back().y))
        throw Error(Err::NotIncreasingLeg, "leg must be strictly increasing");
    }
    out.push_back(p);
  }
  if (out.front().x != Rational(0) || out.front().y != Rational(0) || out.back().y != Rational(1))
    throw Error(Err::NotIncreasingLeg, "leg must run from (0,0) to (v,1)");
  if (!(out.back().x < Rational(1)))
    throw Error(Err::NotIncreasingLeg, "the turning point v must lie in (0,1)");
  // Drop collinear interior points.
  std::vector<Point> canon;
  for (const Point& p : out) {
    while (canon.size() >= 2) {
      const Point& a = canon[canon.size() - 2];
      const Point& b = canon.back();
      if ((b.y - a.y) * (p.x - b.x) == (p.y - b.y) * (b.x - a.x))
        canon.pop_back();
      else
        break;
    }
    canon.push_back(p);
  }
  return canon;
}

}  // namespace

PLMap complete_from_left(const std::vector<Point>& increasing_leg) {
  const std::vector<Point> leg = canonical_leg(increasing_leg);
  const Rational v = leg.back().x;

  if ((leg[1].y - leg[0].y) / (leg[1].x - leg[0].x) != Rational(2))
    throw Error(Err::SlopeAtZeroNotTwo, "leg slope at the origin is not 2");
  for (size_t i = 1; i < leg.size(); ++i)
    if (leg[i].y <= leg[i].x)
      throw Error(Err::PositiveFixedPoint, "leg touches the diagonal at x = " + leg[i].x.str());

  const Rational eps = leg.size() > 2 ? leg[1].x : v;  // end of the slope-2 initial piece
  const Rational half(1, 2);

  // h(2^-(k+1)) = w_k; the chain w_{k+1} = leg^{-1}(w_k) descends strictly
  // until it enters [0, eps], where the recursion halves forever.
  std::vector<Rational> chain{v};
  while (chain.back() > eps) {
    chain.push_back(poly_inverse(leg, chain.back()));
    if (chain.size() > 10000)
      throw Error(Err::NoCycleWithinCap, "preimage chain of v did not reach the initial piece");
  }

  Rational top_x(1);
  for (size_t i = 0; i < chain.size(); ++i) top_x = top_x * half;  // 2^-(K+1)
  std::vector<Point> h_pts{{Rational(0), Rational(0)}, {top_x, chain.back()}};

  while (h_pts.back().x < Rational(1)) {
    const Rational band_lo = h_pts.back().x;
    const Rational band_hi = band_lo * Rational(2);
    const Rational img_lo = poly_eval(h_pts, band_lo * half);
    const Rational img_hi = h_pts.back().y;

    std::vector<Rational> xs;
    for (const Point& p : h_pts)
      if (p.x > band_lo * half && p.x < band_lo) xs.push_back(p.x * Rational(2));
    for (size_t i = 1; i + 1 < leg.size(); ++i) {
      const Rational& kappa = leg[i].x;
      if (kappa > img_lo && kappa < img_hi) xs.push_back(poly_inverse(h_pts, kappa) * Rational(2));
    }
    xs.push_back(band_hi);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    for (const Rational& x : xs) h_pts.push_back({x, poly_eval(leg, poly_eval(h_pts, x * half))});
  }

  PLMap h = make_plmap(std::move(h_pts));
  PLMap g = conjugate(tent(), h);

  if (!verify_conjugacy(tent(), g, h).is_conjugacy)
    throw Error(Err::Internal, "left completion produced a non-conjugacy");
  for (const Point& p : leg)
    if (g(p.x) != p.y) throw Error(Err::Internal, "completed map disagrees with the leg");
  return g;
}

PLMap commutator_of(const PLMap& g, long t) {
  auto h = find_tent_conjugacy(g);
  if (!h) throw Error(Err::NotTentConjugate, "no piecewise-linear conjugacy from the tent map");
  return conjugate(xi(t), *h);
}

}  // namespace plc
