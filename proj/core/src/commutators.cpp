#include "plcommute/commutators.hpp"

#include <algorithm>

#include "plcommute/lattice.hpp"

namespace plc {

PLMap tent() {
  return make_plmap({{Rational(0), Rational(0)}, {Rational(1, 2), Rational(1)}, {Rational(1), Rational(0)}});
}

PLMap xi(long t) {
  if (t < 1) throw Error(Err::InvalidT, "xi needs t >= 1, got " + std::to_string(t));
  std::vector<Point> pts;
  pts.reserve(t + 1);
  for (long k = 0; k <= t; ++k) pts.push_back({Rational(k, t), Rational(k % 2)});
  return make_plmap(std::move(pts));
}

namespace {

std::vector<Rational> breakpoint_grid(const PLMap& a, const PLMap& b) {
  std::vector<Rational> xs;
  for (const Point& p : a.breakpoints()) xs.push_back(p.x);
  for (const Point& p : b.breakpoints()) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

CommuteReport commutes(const PLMap& g, const PLMap& psi) {
  CommuteReport report;
  const PLMap gp = compose(g, psi);
  const PLMap pg = compose(psi, g);
  report.commutes = gp == pg;

  if (!report.commutes) {
    for (const Rational& x : breakpoint_grid(gp, pg)) {
      const Rational lhs = gp(x), rhs = pg(x);
      if (lhs != rhs) {
        report.witness = CommuteWitness{x, lhs, rhs};
        break;
      }
    }
  }

  // The trajectory method assumes every monotone piece of psi is onto [0,1].
  if (is_unimodal_surjective_anchored(g) && classify(psi).is_surjective_each_piece) {
    report.sat_verdict = sat_commutes(g, psi, &report.checked_points);
    report.sat_checked = true;
  }
  if (!report.sat_checked) report.checked_points = breakpoint_grid(gp, pg);
  return report;
}

std::vector<SlopeRelation> chain_rule_check(const PLMap& g, const PLMap& psi) {
  const PLMap gp = compose(g, psi);
  const PLMap pg = compose(psi, g);
  std::vector<Rational> cuts = breakpoint_grid(gp, pg);
  for (const Rational& x : breakpoint_grid(g, psi)) cuts.push_back(x);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<SlopeRelation> relations;
  relations.reserve(cuts.size());
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational m = (cuts[i] + cuts[i + 1]) / Rational(2);
    SlopeRelation rel;
    rel.point = m;
    rel.lhs = psi.slope_at(m) * g.slope_at(psi(m));
    rel.rhs = g.slope_at(m) * psi.slope_at(g(m));
    rel.holds = rel.lhs == rel.rhs;
    relations.push_back(std::move(rel));
  }
  return relations;
}

std::optional<int> is_iterate(const PLMap& psi, const PLMap& g) {
  PLMap cur = g;
  for (int n = 1; n <= 64; ++n) {
    if (cur.piece_count() > psi.piece_count()) return std::nullopt;
    if (cur == psi) return n;
    PLMap next = compose(g, cur);
    if (next == cur) return std::nullopt;  // composition stabilized, no new iterates
    cur = std::move(next);
  }
  return std::nullopt;
}

}  // namespace plc
