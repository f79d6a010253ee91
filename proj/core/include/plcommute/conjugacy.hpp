#pragma once

#include <optional>
#include <vector>

#include "plcommute/plmap.hpp"

namespace plc {

/// Symbols of an orbit relative to the turning point v: L below, C at, R above.
enum class Sym : char { L = 'L', C = 'C', R = 'R' };

/// Eventually periodic symbol sequence of an orbit.
///
/// Convention for the critical point: symbol production stops when the orbit
/// hits v, so C can only be the final symbol of the preperiod and the period
/// is then empty (the continuation 1 -> 0 -> 0 -> ... is forced).  Otherwise
/// the period is the non-empty primitive cycle over {L,R}.
struct Itinerary {
  std::vector<Sym> preperiod;
  std::vector<Sym> period;

  friend bool operator==(const Itinerary& a, const Itinerary& b) {
    return a.preperiod == b.preperiod && a.period == b.period;
  }
  std::string str() const;
};

/// h^{-1} for a strictly increasing PL map with h(0)=0, h(1)=1; computed by
/// swapping breakpoint coordinates.  Throws NotHomeomorphism otherwise.
PLMap inverse_homeomorphism(const PLMap& h);

/// h∘g∘h^{-1} in canonical form.
PLMap conjugate(const PLMap& g, const PLMap& h);

struct ConjugacyViolation {
  Rational x;
  Rational lhs;  // (h∘f)(x)
  Rational rhs;  // (g∘h)(x)
};

struct ConjugacyReport {
  bool is_conjugacy = false;
  std::vector<ConjugacyViolation> violations;
  /// g'(0) = 2, necessary for a PL conjugacy from the tent map.
  bool derivative_at_zero_check = false;
  /// (g_r^2)'(x0) = 4 at the fixed point x0 of the decreasing leg; at a kink
  /// the product of the two one-sided slopes must equal 4.
  bool right_leg_check = false;
};

/// Exact check of h∘f0 = g∘h plus the necessary-condition flags for g.
ConjugacyReport verify_conjugacy(const PLMap& f0, const PLMap& g, const PLMap& h);

/// Necessary conditions alone (flags only; violations left empty).
ConjugacyReport tent_necessary_conditions(const PLMap& g);

/// Symbol sequence of the g-orbit of x until the exact orbit revisits a
/// value or hits the turning point.  Throws NoCycleWithinCap when the orbit
/// does not close within `cap` steps.
Itinerary itinerary(const PLMap& g, const Rational& x, int cap = 10000);

/// The unique point of [0,1] whose tent itinerary is `it`, via the affine
/// fixed-point equation of the composed inverse branches (L^-1: y -> y/2,
/// R^-1: y -> 1 - y/2) pulled back through the preperiod.
Rational tent_point(const Itinerary& it);

/// Constructs the PL conjugacy h with h∘tent = g∘h from the itineraries of
/// the kinks of g, or std::nullopt when g is not PL-conjugate to the tent
/// map.  NoCycleWithinCap propagates (undetermined, not a refutation).
std::optional<PLMap> find_tent_conjugacy(const PLMap& g, int cap = 10000);

}  // namespace plc
