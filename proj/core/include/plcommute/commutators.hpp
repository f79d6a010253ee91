#pragma once

#include <optional>
#include <vector>

#include "plcommute/plmap.hpp"

namespace plc {

/// The tent map (0,0) -> (1/2,1) -> (1,0).
PLMap tent();

/// The t-piece sawtooth commutator of the tent map: breakpoints at k/t,
/// ordinates alternating 0,1,0,..., slopes +-t.  xi(1) is the identity and
/// xi(2) is the tent map itself.  Throws InvalidT for t < 1.
PLMap xi(long t);

struct CommuteWitness {
  Rational x;
  Rational lhs;  // (g∘psi)(x)
  Rational rhs;  // (psi∘g)(x)
};

struct CommuteReport {
  bool commutes = false;
  std::optional<CommuteWitness> witness;
  /// Kink-derived test set: the union of the generators of the seed SATs
  /// when the trajectory method ran, otherwise the breakpoint grid used.
  std::vector<Rational> checked_points;
  /// Whether the trajectory-based method was applicable and executed.
  bool sat_checked = false;
  /// Verdict of the trajectory method (meaningful when sat_checked).
  bool sat_verdict = false;
};

/// Decides g∘psi = psi∘g by exact equality of the canonical composites and,
/// when g is unimodal surjective anchored at the endpoints, cross-checks the
/// verdict with the single-trajectory method.
CommuteReport commutes(const PLMap& g, const PLMap& psi);

/// One slope relation per common linearity cell, evaluated at the midpoint:
/// sigma(x)*gamma(psi(x)) against gamma(x)*sigma(g(x)).  For a commuting
/// pair every relation holds; a failing relation is a fast refutation.
struct SlopeRelation {
  Rational point;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

std::vector<SlopeRelation> chain_rule_check(const PLMap& g, const PLMap& psi);

/// Least n >= 1 with psi = g^n, searched while the piece count of g^n does
/// not exceed the piece count of psi; std::nullopt when there is none.
std::optional<int> is_iterate(const PLMap& psi, const PLMap& g);

}  // namespace plc
