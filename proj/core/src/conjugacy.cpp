#include "plcommute/conjugacy.hpp"

#include <algorithm>
#include <map>

#include "plcommute/commutators.hpp"

namespace plc {

std::string Itinerary::str() const {
  std::string s;
  for (Sym c : preperiod) s.push_back(static_cast<char>(c));
  s.push_back('(');
  for (Sym c : period) s.push_back(static_cast<char>(c));
  s.push_back(')');
  return s;
}

PLMap inverse_homeomorphism(const PLMap& h) {
  const auto& pts = h.breakpoints();
  if (pts.front().y != Rational(0) || pts.back().y != Rational(1))
    throw Error(Err::NotHomeomorphism, "h must fix 0 and 1");
  std::vector<Point> swapped;
  swapped.reserve(pts.size());
  for (const Point& p : pts) swapped.push_back({p.y, p.x});
  for (size_t i = 0; i + 1 < swapped.size(); ++i)
    if (!(swapped[i].x < swapped[i + 1].x))
      throw Error(Err::NotHomeomorphism, "h must be strictly increasing");
  return make_plmap(std::move(swapped));
}

PLMap conjugate(const PLMap& g, const PLMap& h) {
  const PLMap hinv = inverse_homeomorphism(h);
  return compose(h, compose(g, hinv));
}

namespace {

// Fixed point of the decreasing leg and the product of the one-sided slopes
// there; the two coincide (slope squared) away from kinks.
bool right_leg_square_slope_is_four(const PLMap& g, const MapProfile& prof) {
  if (!prof.is_unimodal) return false;
  const Rational v = *prof.turning_point;
  for (const Rational& x0 : prof.fixed_points) {
    if (x0 <= v) continue;
    const auto& pts = g.breakpoints();
    Rational left_slope, right_slope;
    bool at_kink = false;
    for (size_t i = 1; i + 1 < pts.size(); ++i) at_kink = at_kink || pts[i].x == x0;
    if (at_kink) {
      size_t i = 0;
      while (pts[i].x != x0) ++i;
      left_slope = g.slope(static_cast<int>(i) - 1);
      right_slope = g.slope(static_cast<int>(i));
    } else {
      left_slope = right_slope = g.slope_at(x0);
    }
    return left_slope * right_slope == Rational(4);
  }
  return false;
}

}  // namespace

ConjugacyReport tent_necessary_conditions(const PLMap& g) {
  ConjugacyReport rep;
  const MapProfile prof = classify(g);
  rep.derivative_at_zero_check = prof.derivative_at_zero == Rational(2);
  rep.right_leg_check = right_leg_square_slope_is_four(g, prof);
  return rep;
}

ConjugacyReport verify_conjugacy(const PLMap& f0, const PLMap& g, const PLMap& h) {
  ConjugacyReport rep = tent_necessary_conditions(g);

  const PLMap lhs = compose(h, f0);
  const PLMap rhs = compose(g, h);
  if (lhs != rhs) {
    std::vector<Rational> grid;
    for (const Point& p : lhs.breakpoints()) grid.push_back(p.x);
    for (const Point& p : rhs.breakpoints()) grid.push_back(p.x);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (const Rational& x : grid) {
      const Rational a = lhs(x), b = rhs(x);
      if (a != b) rep.violations.push_back({x, a, b});
    }
  }

  bool homeo = h.breakpoints().front().y == Rational(0) && h.breakpoints().back().y == Rational(1);
  for (int i = 0; homeo && i < h.piece_count(); ++i) homeo = h.slope(i) > Rational(0);
  rep.is_conjugacy = rep.violations.empty() && homeo;
  return rep;
}

Itinerary itinerary(const PLMap& g, const Rational& x, int cap) {
  if (!is_unimodal_surjective_anchored(g))
    throw Error(Err::PreconditionViolated, "itinerary needs a unimodal surjective anchored map");
  const Rational v = *classify(g).turning_point;

  Itinerary it;
  std::vector<Sym> symbols;
  std::map<Rational, int> seen;
  Rational cur = x;
  for (int step = 0; step <= cap; ++step) {
    if (cur == v) {
      symbols.push_back(Sym::C);
      it.preperiod = std::move(symbols);
      return it;  // absorbing continuation, period stays empty
    }
    auto [pos, fresh] = seen.emplace(cur, step);
    if (!fresh) {
      const int start = pos->second;
      it.preperiod.assign(symbols.begin(), symbols.begin() + start);
      it.period.assign(symbols.begin() + start, symbols.end());
      // Reduce the cycle to its primitive root.
      for (size_t len = 1; len <= it.period.size() / 2; ++len) {
        if (it.period.size() % len) continue;
        bool repeats = true;
        for (size_t i = len; repeats && i < it.period.size(); ++i)
          repeats = it.period[i] == it.period[i % len];
        if (repeats) {
          it.period.resize(len);
          break;
        }
      }
      // Slide the cycle left over a matching preperiod tail.
      while (!it.preperiod.empty() && it.preperiod.back() == it.period.back()) {
        it.preperiod.pop_back();
        std::rotate(it.period.begin(), it.period.end() - 1, it.period.end());
      }
      return it;
    }
    symbols.push_back(cur < v ? Sym::L : Sym::R);
    cur = g(cur);
  }
  throw Error(Err::NoCycleWithinCap, "orbit did not close within " + std::to_string(cap) + " steps");
}

Rational tent_point(const Itinerary& it) {
  for (size_t i = 0; i < it.preperiod.size(); ++i)
    if (it.preperiod[i] == Sym::C && i + 1 != it.preperiod.size())
      throw Error(Err::InvalidItinerary, "C may only end the preperiod");
  for (Sym s : it.period)
    if (s == Sym::C) throw Error(Err::InvalidItinerary, "C inside period");

  const bool absorbed = !it.preperiod.empty() && it.preperiod.back() == Sym::C;
  if (it.period.empty() && !absorbed) throw Error(Err::InvalidItinerary, "empty period");

  Rational x;
  size_t pull_from = it.preperiod.size();
  if (absorbed) {
    x = Rational(1, 2);
    pull_from = it.preperiod.size() - 1;
  } else {
    // Loop equation x = s1^-1(s2^-1(...sp^-1(x)...)) for the cycle.
    Rational a(1), b(0);  // accumulated affine map x -> a*x + b
    for (auto s = it.period.rbegin(); s != it.period.rend(); ++s) {
      if (*s == Sym::L) {
        a = a / Rational(2);
        b = b / Rational(2);
      } else {
        a = -a / Rational(2);
        b = Rational(1) - b / Rational(2);
      }
    }
    x = b / (Rational(1) - a);
  }
  for (size_t i = pull_from; i-- > 0;) {
    if (it.preperiod[i] == Sym::L)
      x = x / Rational(2);
    else
      x = Rational(1) - x / Rational(2);
  }
  return x;
}

std::optional<PLMap> find_tent_conjugacy(const PLMap& g, int cap) {
  if (!is_unimodal_surjective_anchored(g)) return std::nullopt;
  if (classify(g).derivative_at_zero != Rational(2)) return std::nullopt;

  const PLMap f = tent();
  std::map<Rational, Rational> h_points;  // alpha -> h(alpha)
  auto add = [&](const Rational& alpha, const Rational& value) {
    auto [pos, fresh] = h_points.emplace(alpha, value);
    return fresh || pos->second == value;
  };
  add(Rational(0), Rational(0));
  add(Rational(1), Rational(1));

  for (const Rational& a : g.kink_xs()) {
    const Rational alpha = tent_point(itinerary(g, a, cap));
    if (!add(alpha, a)) return std::nullopt;
    if (!add(f(alpha), g(a))) return std::nullopt;
  }

  std::vector<Point> pts;
  pts.reserve(h_points.size());
  Rational prev_y(-1);
  for (const auto& [x, y] : h_points) {
    if (!(y > prev_y)) return std::nullopt;  // not strictly increasing
    pts.push_back({x, y});
    prev_y = y;
  }

  PLMap h = make_plmap(std::move(pts));
  if (!verify_conjugacy(f, g, h).is_conjugacy) return std::nullopt;
  return h;
}

}  // namespace plc
