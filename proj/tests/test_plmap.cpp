#include <doctest.h>

#include "plcommute/plmap.hpp"
#include "testutil.hpp"

using namespace plc;
using plc::testutil::Rng;

namespace {

PLMap tent_map() { return parse_plmap("0,0; 1/2,1; 1,0"); }
PLMap xi3_map() { return parse_plmap("0,0; 1/3,1; 2/3,0; 1,1"); }
// The five-breakpoint conjugate of the tent map used throughout.
PLMap g5_map() { return parse_plmap("0,0; 3/8,3/4; 3/4,1; 7/8,3/4; 1,0"); }

}  // namespace

TEST_CASE("construction canonicalizes") {
  CHECK(tent_map().breakpoints().size() == 3);
  const PLMap with_redundant = parse_plmap("0,0; 1/4,1/2; 1/2,1; 1,0");
  CHECK(with_redundant == tent_map());
  CHECK(g5_map().breakpoints().size() == 5);

  // exact duplicates merge
  CHECK(parse_plmap("0,0; 1/2,1; 1/2,1; 1,0") == tent_map());
}

TEST_CASE("construction errors") {
  CHECK_THROWS_WITH_AS(make_plmap({}), doctest::Contains("EmptyInput"), Error);
  CHECK_THROWS_WITH_AS(parse_plmap("0,0; 1/2,1"), doctest::Contains("DomainNotUnit"), Error);
  CHECK_THROWS_WITH_AS(parse_plmap("1/4,0; 1,1"), doctest::Contains("DomainNotUnit"), Error);
  CHECK_THROWS_WITH_AS(parse_plmap("0,0; 1,0; 1,1"), doctest::Contains("NonMonotoneX"), Error);
  CHECK_THROWS_WITH_AS(parse_plmap("0,0; 1/2,1; 1/4,0; 1,0"), doctest::Contains("NonMonotoneX"), Error);
  CHECK_THROWS_WITH_AS(parse_plmap("0,0; 1/2,3/2; 1,0"), doctest::Contains("OutOfRange"), Error);
}

TEST_CASE("evaluation is exact interpolation") {
  const PLMap f = tent_map();
  CHECK(f(Rational(1, 2)) == Rational(1));
  CHECK(f(Rational(0)) == Rational(0));
  CHECK(f(Rational(1, 3)) == Rational(2, 3));
  CHECK(g5_map()(Rational(1, 2)) == Rational(5, 6));
  CHECK_THROWS_WITH_AS(f(Rational(3, 2)), doctest::Contains("OutOfDomain"), Error);
  CHECK_THROWS_WITH_AS(f(Rational(-1, 10)), doctest::Contains("OutOfDomain"), Error);
}

TEST_CASE("composition reproduces the known composite polylines") {
  const PLMap f = tent_map(), x3 = xi3_map();
  CHECK(compose(f, x3) == parse_plmap("0,0; 1/6,1; 1/3,0; 1/2,1; 2/3,0; 5/6,1; 1,0"));
  CHECK(compose(x3, f) == compose(f, x3));
  CHECK(compose(PLMap::identity(), g5_map()) == g5_map());
  CHECK(compose(g5_map(), PLMap::identity()) == g5_map());
  CHECK(compose(f, f) == parse_plmap("0,0; 1/4,1; 1/2,0; 3/4,1; 1,0"));
}

TEST_CASE("composition agrees with pointwise evaluation") {
  Rng rng(0x5eed0101);
  for (int i = 0; i < 40; ++i) {
    const PLMap a = testutil::random_map(rng);
    const PLMap b = testutil::random_map(rng);
    const PLMap ab = compose(a, b);
    for (const Rational& x : testutil::eval_grid(ab, b)) CHECK(ab(x) == a(b(x)));
  }
}

TEST_CASE("composition piece counts") {
  Rng rng(0x5eed0102);
  for (int i = 0; i < 40; ++i) {
    const PLMap a = testutil::random_map(rng);
    const PLMap b = testutil::random_map(rng);
    CHECK(compose(a, b).piece_count() <= a.piece_count() * b.piece_count());
  }
}

TEST_CASE("composition is associative") {
  Rng rng(0x5eed0103);
  for (int i = 0; i < 25; ++i) {
    const PLMap a = testutil::random_map(rng);
    const PLMap b = testutil::random_map(rng);
    const PLMap c = testutil::random_map(rng);
    CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
  }
}

TEST_CASE("preimages") {
  const PLMap x3 = xi3_map();
  CHECK(x3.preimages(Rational(0)) == std::vector<Rational>{Rational(0), Rational(2, 3)});
  CHECK(x3.preimages(Rational(1)) == std::vector<Rational>{Rational(1, 3), Rational(1)});
  CHECK(tent_map().preimages(Rational(1)) == std::vector<Rational>{Rational(1, 2)});
  CHECK(g5_map().preimages(Rational(3, 4)) == std::vector<Rational>{Rational(3, 8), Rational(7, 8)});

  const PLMap flat = parse_plmap("0,0; 1/4,1/2; 3/4,1/2; 1,0");
  CHECK_THROWS_WITH_AS(flat.preimages(Rational(1, 2)), doctest::Contains("InfinitePreimage"), Error);
  CHECK(flat.preimages(Rational(1, 4)) == std::vector<Rational>{Rational(1, 8), Rational(7, 8)});
}

TEST_CASE("classification") {
  const MapProfile tent_prof = classify(tent_map());
  CHECK(tent_prof.is_unimodal);
  CHECK(tent_prof.is_surjective_each_piece);
  CHECK(tent_prof.monotone_piece_count == 2);
  CHECK(tent_prof.slopes == std::vector<Rational>{Rational(2), Rational(-2)});
  CHECK(tent_prof.derivative_at_zero == Rational(2));
  CHECK(tent_prof.fixed_points == std::vector<Rational>{Rational(0), Rational(2, 3)});
  CHECK(tent_prof.turning_point == Rational(1, 2));
  CHECK(tent_prof.zero_at_endpoints);

  const MapProfile x3_prof = classify(xi3_map());
  CHECK_FALSE(x3_prof.is_unimodal);
  CHECK(x3_prof.monotone_piece_count == 3);
  CHECK(x3_prof.slopes == std::vector<Rational>{Rational(3), Rational(-3), Rational(3)});
  CHECK(x3_prof.is_surjective_each_piece);

  // peak of height 1/2 only: not unimodal in the anchored sense
  const MapProfile low = classify(parse_plmap("0,0; 1/2,1/2; 1,0"));
  CHECK_FALSE(low.is_unimodal);
  CHECK(low.fixed_points == std::vector<Rational>{Rational(0), Rational(1, 2)});
}

TEST_CASE("canonical form is unique") {
  Rng rng(0x5eed0104);
  for (int i = 0; i < 60; ++i) {
    const PLMap m = testutil::random_map(rng);
    CHECK(make_plmap(m.breakpoints()) == m);
    CHECK(parse_plmap(to_text(m)) == m);
  }
}

TEST_CASE("equality is extensional") {
  CHECK(tent_map() != xi3_map());
  Rng rng(0x5eed0105);
  for (int i = 0; i < 25; ++i) {
    const PLMap a = testutil::random_map(rng);
    const PLMap b = testutil::random_map(rng);
    bool same_everywhere = true;
    for (const Rational& x : testutil::eval_grid(a, b)) same_everywhere &= a(x) == b(x);
    CHECK(same_everywhere == (a == b));
  }
}
