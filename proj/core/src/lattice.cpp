#include "plcommute/lattice.hpp"

#include <algorithm>
#include <map>

#include "plcommute/commutators.hpp"

namespace plc {

namespace {

bool interior(const Rational& v) { return v > Rational(0) && v < Rational(1); }

void insert_interior(std::vector<Rational>& lines, const Rational& v) {
  if (interior(v)) lines.push_back(v);
}

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Kink abscissas with the interval endpoints, which count as kinks too.
std::vector<Rational> kinks_with_endpoints(const PLMap& m) {
  std::vector<Rational> ks{Rational(0)};
  for (const Rational& k : m.kink_xs()) ks.push_back(k);
  ks.push_back(Rational(1));
  return ks;
}

bool is_constant_map(const PLMap& m) { return m.piece_count() == 1 && m.slope(0) == Rational(0); }

}  // namespace

SingleTrajectory single_trajectory(const PLMap& g, const PLMap& psi, const Rational& x0) {
  SingleTrajectory t;
  t.x0 = x0;
  t.xi_line = psi(x0);
  t.f_line = g(x0);
  t.y_line = g(t.xi_line);
  t.consistent = t.y_line == psi(t.f_line);
  return t;
}

SAT sat(const PLMap& g, const PLMap& psi, const Rational& x) {
  if (!is_unimodal_surjective_anchored(g))
    throw Error(Err::PreconditionViolated, "sat() needs a unimodal surjective g with g(0)=g(1)=0");
  SAT s;
  s.seed = x;
  s.y0 = g(psi(x));
  for (const Rational& u : g.preimages(s.y0))
    for (const Rational& v : psi.preimages(u)) s.generators.push_back(v);
  sort_unique(s.generators);
  for (const Rational& gen : s.generators) s.trajectories.push_back(single_trajectory(g, psi, gen));
  s.is_boundary = !interior(s.y0);
  return s;
}

namespace {

// One seed per distinct (g∘psi)-value over the given points; smallest
// representative wins.  Extra target values (needed to cover the second
// graph copies) get the smallest solution of (g∘psi)(x) = value.
std::vector<Rational> seed_set(const PLMap& g, const PLMap& psi, const std::vector<Rational>& kink_like,
                               const std::vector<Rational>& extra_values) {
  std::map<Rational, Rational> rep_by_value;
  for (const Rational& k : kink_like) {
    const Rational val = g(psi(k));
    auto it = rep_by_value.find(val);
    if (it == rep_by_value.end())
      rep_by_value.emplace(val, k);
    else if (k < it->second)
      it->second = k;
  }
  if (!extra_values.empty()) {
    const PLMap gp = compose(g, psi);
    for (const Rational& val : extra_values) {
      if (rep_by_value.count(val)) continue;
      auto sols = gp.preimages(val);
      if (sols.empty()) throw Error(Err::Internal, "composite misses value " + val.str());
      rep_by_value.emplace(val, sols.front());
    }
  }
  std::vector<Rational> seeds;
  seeds.reserve(rep_by_value.size());
  for (const auto& [val, rep] : rep_by_value) seeds.push_back(rep);
  std::sort(seeds.begin(), seeds.end());
  return seeds;
}

}  // namespace

bool sat_commutes(const PLMap& g, const PLMap& psi, std::vector<Rational>* checked_points) {
  const auto seeds =
      seed_set(g, psi, [&] {
        auto ks = kinks_with_endpoints(g);
        for (const Rational& k : kinks_with_endpoints(psi)) ks.push_back(k);
        sort_unique(ks);
        return ks;
      }(), {});

  bool ok = true;
  std::vector<Rational> touched;
  for (const Rational& seed : seeds) {
    const SAT s = sat(g, psi, seed);
    for (const SingleTrajectory& t : s.trajectories) ok = ok && t.consistent;
    touched.insert(touched.end(), s.generators.begin(), s.generators.end());
  }
  if (checked_points) {
    sort_unique(touched);
    *checked_points = std::move(touched);
  }
  return ok;
}

bool Lattice::line_counts_hold() const {
  const long N = n, S = s;
  return static_cast<long>(x_lines.size()) == 2 * N * S + 2 * N - 1 &&
         static_cast<long>(psi_lines.size()) == 2 * S + 1 &&
         static_cast<long>(g_lines.size()) == N * S + N - 1 && static_cast<long>(y_lines.size()) == S;
}

Lattice determinating_lattice(const PLMap& g, const PLMap& psi) {
  if (compose(g, psi) != compose(psi, g)) throw Error(Err::NotCommuting, "maps do not commute");
  if (is_constant_map(psi)) throw Error(Err::TrivialPsi, "psi is constant");

  auto g_kinks = kinks_with_endpoints(g);
  auto psi_kinks = kinks_with_endpoints(psi);
  std::vector<Rational> kink_like = g_kinks;
  kink_like.insert(kink_like.end(), psi_kinks.begin(), psi_kinks.end());
  sort_unique(kink_like);

  // Covering a kink in its second graph copy (the A and C sequences) needs
  // the SAT whose shared y-value equals the kink's own value.
  std::vector<Rational> value_classes;
  for (const Rational& k : psi_kinks) value_classes.push_back(psi(k));
  for (const Rational& k : g_kinks) value_classes.push_back(g(k));
  sort_unique(value_classes);

  Lattice lat;
  lat.seeds = seed_set(g, psi, kink_like, value_classes);
  for (const Rational& seed : lat.seeds) {
    const SAT s = sat(g, psi, seed);
    for (const SingleTrajectory& t : s.trajectories) {
      insert_interior(lat.x_lines, t.x0);
      insert_interior(lat.psi_lines, t.xi_line);
      insert_interior(lat.g_lines, t.f_line);
    }
    insert_interior(lat.y_lines, s.y0);
    if (!s.is_boundary) ++lat.s;
  }
  sort_unique(lat.x_lines);
  sort_unique(lat.psi_lines);
  sort_unique(lat.g_lines);
  sort_unique(lat.y_lines);
  lat.n = classify(psi).monotone_piece_count;
  return lat;
}

namespace {

std::vector<Rational> with_bounds(const std::vector<Rational>& interior_lines) {
  std::vector<Rational> v{Rational(0)};
  v.insert(v.end(), interior_lines.begin(), interior_lines.end());
  v.push_back(Rational(1));
  return v;
}

std::vector<Point> graph_over(const PLMap& m, const std::vector<Rational>& inputs) {
  std::vector<Point> pts;
  pts.reserve(inputs.size());
  for (const Rational& u : inputs) pts.push_back({u, m(u)});
  return pts;
}

void require_same_lattice(const PLMap& g, const PLMap& psi, const Lattice& lat) {
  const Lattice fresh = determinating_lattice(g, psi);
  if (fresh.x_lines != lat.x_lines || fresh.psi_lines != lat.psi_lines || fresh.g_lines != lat.g_lines ||
      fresh.y_lines != lat.y_lines)
    throw Error(Err::LatticeMismatch, "lattice does not belong to this pair");
}

}  // namespace

AbcdPoints abcd_points(const PLMap& g, const PLMap& psi, const Lattice& lat) {
  require_same_lattice(g, psi, lat);
  AbcdPoints out;
  out.A = graph_over(g, with_bounds(lat.psi_lines));
  out.B = graph_over(psi, with_bounds(lat.x_lines));
  out.C = graph_over(psi, with_bounds(lat.g_lines));
  out.D = graph_over(g, with_bounds(lat.x_lines));
  return out;
}

namespace {

std::vector<std::pair<int, int>> pair_kinks(const std::vector<Point>& kink_side,
                                            const std::vector<Point>& partner_side,
                                            const std::vector<Rational>& kink_abscissas, const char* what) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(kink_side.size()); ++i) {
    const Point& p = kink_side[i];
    const bool endpoint = i == 0 || i + 1 == static_cast<int>(kink_side.size());
    const bool is_kink =
        endpoint || std::binary_search(kink_abscissas.begin(), kink_abscissas.end(), p.x);
    if (!is_kink) continue;
    int match = -1;
    for (int j = 0; j < static_cast<int>(partner_side.size()); ++j) {
      if (partner_side[j] == p) {
        match = j;
        break;
      }
    }
    if (match < 0)
      throw Error(Err::UnmatchedKink, std::string(what) + " kink at (" + p.x.str() + "," + p.y.str() +
                                          ") has no coordinate partner");
    pairs.push_back({i, match});
  }
  return pairs;
}

}  // namespace

KinkPairSets kink_pairs(const PLMap& g, const PLMap& psi, const Lattice& lat) {
  const AbcdPoints pts = abcd_points(g, psi, lat);
  auto g_kinks = g.kink_xs();
  auto psi_kinks = psi.kink_xs();
  std::sort(g_kinks.begin(), g_kinks.end());
  std::sort(psi_kinks.begin(), psi_kinks.end());

  KinkPairSets sets;
  sets.P = pair_kinks(pts.A, pts.D, g_kinks, "g");
  sets.Q = pair_kinks(pts.B, pts.C, psi_kinks, "psi");
  return sets;
}

std::pair<PLMap, PLMap> reconstruct_from_lattice(const Lattice& lat) {
  const auto cols = with_bounds(lat.x_lines);

  auto walk = [&cols](const std::vector<Rational>& rows) {
    std::vector<Point> pts;
    pts.reserve(cols.size());
    int idx = 0, dir = 1;
    pts.push_back({cols[0], rows[0]});
    for (size_t c = 1; c < cols.size(); ++c) {
      idx += dir;
      if (idx < 0 || idx >= static_cast<int>(rows.size()))
        throw Error(Err::LatticeMismatch, "lattice walk leaves the grid");
      pts.push_back({cols[c], rows[idx]});
      if (idx == static_cast<int>(rows.size()) - 1)
        dir = -1;
      else if (idx == 0)
        dir = 1;
    }
    return make_plmap(std::move(pts));
  };

  PLMap g_rec = walk(with_bounds(lat.g_lines));
  PLMap psi_rec = walk(with_bounds(lat.psi_lines));
  return {std::move(g_rec), std::move(psi_rec)};
}

}  // namespace plc
