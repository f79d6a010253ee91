#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plcommute/plmap.hpp"

namespace plc {

/// A generated commuting pair (g, psi) with the conjugacy h from the tent
/// map that produced it.  Instances are verified on construction: g and psi
/// commute exactly, g = h∘tent∘h^{-1} and psi = h∘xi_3∘h^{-1}.
struct FamilyInstance {
  std::string family_id;
  PLMap g;
  PLMap psi;
  std::optional<PLMap> h;
  std::vector<std::pair<std::string, Rational>> params;
};

/// g: (0,0) -> (a/2, a) -> (a, 1) -> ((a+1)/2, a) -> (1,0),
/// h: (0,0) -> (1/2, a) -> (1,1).  Valid for 0 < a < 1.
FamilyInstance family_fig9(const Rational& a);

/// g: (0,0) -> (a/2, a) -> (a, b) -> ((3a+b)/4, 1) -> ((a+b)/2, b) -> (b, a) -> (1,0),
/// h: (0,0) -> (2/5, a) -> (4/5, b) -> (1,1).  Valid for 0 < a < b < 1.
FamilyInstance family_fig11(const Rational& a, const Rational& b);

/// g: (0,0) -> (a, 2a) -> (b, 1) -> (2b-a, 2a) -> (2a, 4(b-a)) -> (1,0),
/// h: (0,0) -> (a/b, 2a) -> (1,1).  Valid for 0 < a < 1/2 and a < b < 3a/2
/// (the region where the listed points are the graph of a unimodal map).
FamilyInstance family_fig18(const Rational& a, const Rational& b);

/// Completes an increasing leg (0,0) -> ... -> (v,1) with slope 2 at the
/// origin and no positive fixed point into the unique unimodal map that is
/// PL-conjugate to the tent map and agrees with the leg on [0, v].
///
/// The conjugacy h is built by the dyadic recursion h(x) = leg(h(x/2)) with
/// h(1) = 1; the preimage chain of v descends into the slope-2 initial piece
/// after finitely many steps, after which h is linear.
PLMap complete_from_left(const std::vector<Point>& increasing_leg);

/// The t-piece commutator of g: h∘xi_t∘h^{-1} for the conjugacy h found by
/// find_tent_conjugacy.  Throws NotTentConjugate when no PL conjugacy exists.
PLMap commutator_of(const PLMap& g, long t);

}  // namespace plc
