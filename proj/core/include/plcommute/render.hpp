#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plcommute/lattice.hpp"
#include "plcommute/plmap.hpp"

namespace plc {

/// Corner at which a point label is placed; each quadrant uses exactly one:
/// lower-right in x-by-psi, lower-left in psi-by-y, upper-right in x-by-g,
/// upper-left in g-by-y.
enum class CornerTag { lr, ll, ur, ul };

/// A four-quadrant diagram: the x axis points left, psi up, g down, y right.
/// The graph of psi is drawn in the x-by-psi and g-by-y quadrants, the graph
/// of g in the x-by-g and psi-by-y quadrants, so both composite paths read
/// from the left ray to the right ray.
struct QuadrantScene {
  PLMap g;
  PLMap psi;
  std::optional<Lattice> lattice;
  std::vector<SAT> highlighted_sats;
  bool labels = false;
  int width = 720;
  int height = 720;
};

/// Deterministic SVG 1.1 rendering: identical scenes produce byte-identical
/// output.  Coordinates are printed with exactly six decimal places.
/// When a lattice is present it must belong to the pair (LatticeMismatch).
std::string render_quadrant_svg(const QuadrantScene& scene);

}  // namespace plc
