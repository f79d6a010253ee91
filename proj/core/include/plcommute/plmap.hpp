#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plcommute/rational.hpp"

namespace plc {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

/// Continuous piecewise-linear self-map of [0,1] in canonical form.
///
/// A map is stored as its ordered breakpoint list.  Canonical means: the
/// first breakpoint has x = 0, the last has x = 1, abscissas are strictly
/// increasing, every coordinate lies in [0,1], and no interior breakpoint is
/// collinear with its neighbours (every stored interior point is a genuine
/// kink).  Canonical form is unique, so breakpoint equality decides
/// extensional equality of the functions.
///
/// Values are immutable after construction and every operation is pure.
class PLMap {
 public:
  const std::vector<Point>& breakpoints() const { return pts_; }

  /// Interior breakpoints (the kinks proper; domain endpoints excluded).
  std::vector<Point> kinks() const;
  std::vector<Rational> kink_xs() const;

  int piece_count() const { return static_cast<int>(pts_.size()) - 1; }
  /// Slope of the i-th linear piece, 0-based.
  Rational slope(int piece) const;
  /// Slope at a point; at a kink the right-hand piece wins (left-hand at x = 1).
  Rational slope_at(const Rational& x) const;

  /// Exact evaluation; throws OutOfDomain outside [0,1].
  Rational operator()(const Rational& x) const;

  /// All solutions of m(x) = y.  Throws InfinitePreimage when a whole piece
  /// is constant at y, and OutOfDomain for y outside [0,1].
  std::vector<Rational> preimages(const Rational& y) const;

  friend bool operator==(const PLMap& a, const PLMap& b) { return a.pts_ == b.pts_; }
  friend bool operator!=(const PLMap& a, const PLMap& b) { return !(a == b); }

  static PLMap identity();

 private:
  friend PLMap make_plmap(std::vector<Point> points);
  explicit PLMap(std::vector<Point> pts) : pts_(std::move(pts)) {}

  std::vector<Point> pts_;
};

/// Builds the canonical map through the given polyline vertices.
///
/// Exact duplicates are merged; interior collinear points are dropped.
/// Errors: EmptyInput, DomainNotUnit (first x != 0 or last x != 1),
/// NonMonotoneX (decreasing x or a duplicate x with different y),
/// OutOfRange (coordinate outside [0,1]).
PLMap make_plmap(std::vector<Point> points);

/// Exact composite outer∘inner in canonical form. Its breakpoints are the
/// kinks of inner together with the inner-preimages of the kinks of outer.
PLMap compose(const PLMap& outer, const PLMap& inner);

/// Shape summary of a map: kinks, slopes, monotonicity structure, the tests
/// used throughout for the unimodal/surjective preconditions, fixed points.
struct MapProfile {
  std::vector<Point> kinks;
  std::vector<Rational> slopes;
  int monotone_piece_count = 0;
  bool is_unimodal = false;
  bool is_surjective_each_piece = false;
  Rational derivative_at_zero;
  std::vector<Rational> fixed_points;
  bool zero_at_endpoints = false;
  /// Abscissa of the maximum when the map is unimodal.
  std::optional<Rational> turning_point;
};

MapProfile classify(const PLMap& m);

/// True when m is unimodal, each leg is onto [0,1] and m(0) = m(1) = 0.
bool is_unimodal_surjective_anchored(const PLMap& m);

/// Text form: `x,y` pairs separated by semicolons, e.g. `0,0; 1/2,1; 1,0`.
std::string to_text(const PLMap& m);

/// Parses the text form (whitespace insignificant). Construction errors
/// propagate; malformed syntax raises ParseError with an offset.
PLMap parse_plmap(std::string_view text);

/// Raw polyline parser used by inputs that are not maps of [0,1]
/// (e.g. an increasing leg); performs no domain normalization.
std::vector<Point> parse_points(std::string_view text);
std::string points_to_text(const std::vector<Point>& pts);

}  // namespace plc
