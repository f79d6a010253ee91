#pragma once

#include <utility>
#include <vector>

#include "plcommute/plmap.hpp"

namespace plc {

/// The quadruple of lines x = x0, xi = psi(x0), f = g(x0), y = (g∘psi)(x0)
/// in the four-quadrant diagram; consistent when (g∘psi)(x0) = (psi∘g)(x0).
struct SingleTrajectory {
  Rational x0;
  Rational xi_line;
  Rational f_line;
  Rational y_line;
  bool consistent = false;
};

SingleTrajectory single_trajectory(const PLMap& g, const PLMap& psi, const Rational& x0);

/// The set of all single trajectories related to x: one per generator in
/// psi^{-1}(g^{-1}((g∘psi)(x))).  Every trajectory shares the same y-line.
/// Boundary SATs are the ones whose shared y-value is 0 or 1 (these are the
/// SATs that meet the extrema of g).
struct SAT {
  Rational seed;
  Rational y0;
  std::vector<Rational> generators;
  std::vector<SingleTrajectory> trajectories;
  bool is_boundary = false;
};

/// Requires g unimodal surjective with g(0)=g(1)=0 and psi without constant
/// pieces at the needed levels (InfinitePreimage propagates otherwise).
SAT sat(const PLMap& g, const PLMap& psi, const Rational& x);

/// Commutativity verdict of the trajectory method: every trajectory of every
/// SAT seeded at a kink class is consistent.  Complete for deciding
/// g∘psi = psi∘g under the sat() preconditions.
bool sat_commutes(const PLMap& g, const PLMap& psi, std::vector<Rational>* checked_points = nullptr);

/// The determinating lattice: interior line coordinates per axis, the seed
/// set that generated them, the monotone piece count n of psi and the number
/// s of non-boundary SATs.  Line counts obey |X| = 2ns+2n-1, |Psi| = 2s+1,
/// |G| = ns+n-1, |Y| = s for non-trivial commutator pairs.
struct Lattice {
  std::vector<Rational> x_lines;
  std::vector<Rational> psi_lines;
  std::vector<Rational> g_lines;
  std::vector<Rational> y_lines;
  std::vector<Rational> seeds;
  int n = 0;
  int s = 0;

  bool line_counts_hold() const;
};

/// Minimal SAT cover of all kinks of g and psi (both graph copies each).
/// Preconditions: the pair commutes (NotCommuting) and psi is not constant
/// (TrivialPsi).
Lattice determinating_lattice(const PLMap& g, const PLMap& psi);

/// The ordered intersection sequences of the lattice with the four graph
/// copies: A = graph(g) over the Psi-lines (quadrant psi x y), B = graph(psi)
/// over the X-lines (x x psi), C = graph(psi) over the G-lines (g x y),
/// D = graph(g) over the X-lines (x x g).  Index 0 is the origin-anchored
/// endpoint and the last index the x = 1 endpoint.
struct AbcdPoints {
  std::vector<Point> A;
  std::vector<Point> B;
  std::vector<Point> C;
  std::vector<Point> D;
};

AbcdPoints abcd_points(const PLMap& g, const PLMap& psi, const Lattice& lat);

/// Index pairs of coincident kinks: (i,j) in P means A_i is a kink of g with
/// the same coordinates as D_j; (i,j) in Q likewise for B-kinks of psi and C
/// points.  Endpoints count as kinks.  A kink with no coordinate partner
/// raises UnmatchedKink (a malformed lattice).
struct KinkPairSets {
  std::vector<std::pair<int, int>> P;
  std::vector<std::pair<int, int>> Q;
};

KinkPairSets kink_pairs(const PLMap& g, const PLMap& psi, const Lattice& lat);

/// Rebuilds (g, psi) from the lattice lines alone: start at the origin,
/// follow cell diagonals, map every maximal monotone piece onto [0,1].
/// For a determinating lattice of a commuting pair this reproduces the maps.
std::pair<PLMap, PLMap> reconstruct_from_lattice(const Lattice& lat);

}  // namespace plc
