#include "doctest.h"
#include "realsurf/error.hpp"
#include "realsurf/moebius.hpp"
#include "test_support.hpp"

using namespace realsurf;
using realsurf::testing::distinct_rationals;
using realsurf::testing::random_rational;
using realsurf::testing::uniform_int;

namespace {

ProjPoint pt(long x) { return ProjPoint::finite(Rational(x)); }
const ProjPoint inf = ProjPoint::infinity();

MoebiusMap random_map() {
  while (true) {
    Rational a(uniform_int(-6, 6)), b(uniform_int(-6, 6)), c(uniform_int(-6, 6)), d(uniform_int(-6, 6));
    if (a * d - b * c != 0) return MoebiusMap(a, b, c, d);
  }
}

// Direct formula for four finite points: (z1-z3)(z2-z4) / ((z1-z4)(z2-z3)).
Rational cross_ratio_formula(const Rational& z1, const Rational& z2, const Rational& z3, const Rational& z4) {
  return (z1 - z3) * (z2 - z4) / ((z1 - z4) * (z2 - z3));
}

}  // namespace

TEST_CASE("apply examples") {
  CHECK(MoebiusMap::identity()(pt(5)) == pt(5));
  MoebiusMap invert(0, 1, 1, 0);
  CHECK(invert(pt(0)) == inf);
  CHECK(invert(inf) == pt(0));
  MoebiusMap cayley(1, 1, 1, -1);
  CHECK(cayley(pt(3)) == pt(2));
  CHECK(cayley(pt(1)) == inf);
  CHECK(cayley(inf) == pt(1));
  CHECK(MoebiusMap::translation(Rational(5))(inf) == inf);
}

TEST_CASE("canonical representative") {
  CHECK(MoebiusMap(2, 4, 0, 2) == MoebiusMap(1, 2, 0, 1));
  CHECK(MoebiusMap(-1, 0, 0, -1) == MoebiusMap::identity());
  CHECK(MoebiusMap(ratio(1, 2), ratio(1, 3), 0, 1) == MoebiusMap(3, 2, 0, 6));
  MoebiusMap m(0, -3, 6, 9);
  CHECK(m.beta() == 1);
  CHECK(m.gamma() == -2);
  CHECK_THROWS_AS(MoebiusMap(1, 2, 2, 4), Error);
}

TEST_CASE("from_three_points examples") {
  CHECK(MoebiusMap::from_three_points({pt(0), pt(1), inf}, {pt(0), pt(1), inf}) == MoebiusMap::identity());
  MoebiusMap m = MoebiusMap::from_three_points({pt(0), pt(1), inf}, {pt(1), inf, pt(0)});
  CHECK(m == MoebiusMap(0, 1, -1, 1));  // z -> 1/(1-z)
  CHECK(m(pt(0)) == pt(1));
  CHECK(m(pt(1)) == inf);
  CHECK(m(inf) == pt(0));
  MoebiusMap t = MoebiusMap::from_three_points({pt(0), pt(1), inf}, {pt(5), pt(6), inf});
  CHECK(t == MoebiusMap::translation(Rational(5)));
  CHECK(t(pt(2)) == pt(7));
  CHECK_THROWS_AS(MoebiusMap::from_three_points({pt(0), pt(0), inf}, {pt(1), pt(2), pt(3)}), Error);
  CHECK_THROWS_AS(MoebiusMap::from_three_points({pt(0), pt(1), inf}, {pt(1), pt(2), pt(1)}), Error);
}

TEST_CASE("from_three_points reproduces random triples") {
  for (int trial = 0; trial < 200; ++trial) {
    std::array<ProjPoint, 3> p{inf, inf, inf}, q{inf, inf, inf};
    auto ps = distinct_rationals(3, 10, 7);
    auto qs = distinct_rationals(3, 10, 7);
    for (std::size_t i = 0; i < 3; ++i) {
      p[i] = ProjPoint::finite(ps[i]);
      q[i] = ProjPoint::finite(qs[i]);
    }
    if (trial % 5 == 0) p[static_cast<std::size_t>(trial % 3)] = inf;
    if (trial % 7 == 0) q[static_cast<std::size_t>(trial % 3)] = inf;
    MoebiusMap m = MoebiusMap::from_three_points(p, q);
    CHECK(sgn(m.determinant()) != 0);
    for (std::size_t i = 0; i < 3; ++i) CHECK(m(p[i]) == q[i]);
  }
}

TEST_CASE("composition and inverse") {
  for (int trial = 0; trial < 100; ++trial) {
    MoebiusMap f = random_map();
    MoebiusMap g = random_map();
    CHECK(f.compose(f.inverse()) == MoebiusMap::identity());
    ProjPoint x = ProjPoint::finite(random_rational(5, 5));
    CHECK(f.compose(g)(x) == f(g(x)));
    CHECK(f.compose(g)(inf) == f(g(inf)));
  }
}

TEST_CASE("cross ratio is invariant") {
  auto z = distinct_rationals(4, 5, 4);
  CHECK(cross_ratio(ProjPoint::finite(z[0]), ProjPoint::finite(z[1]), ProjPoint::finite(z[2]),
                    ProjPoint::finite(z[3])) == cross_ratio_formula(z[0], z[1], z[2], z[3]));
  for (int trial = 0; trial < 200; ++trial) {
    auto v = distinct_rationals(4, 8, 6);
    std::array<ProjPoint, 4> p{ProjPoint::finite(v[0]), ProjPoint::finite(v[1]), ProjPoint::finite(v[2]),
                               ProjPoint::finite(v[3])};
    Rational expected = cross_ratio_formula(v[0], v[1], v[2], v[3]);
    CHECK(cross_ratio(p[0], p[1], p[2], p[3]) == expected);
    MoebiusMap m = random_map();
    CHECK(cross_ratio(m(p[0]), m(p[1]), m(p[2]), m(p[3])) == expected);
  }
}

TEST_CASE("interval sets") {
  auto unit = IntervalSet::from_arcs({{pt(0), pt(1)}});
  CHECK(unit.contains(ProjPoint::finite(ratio(1, 2))));
  CHECK_FALSE(unit.contains(inf));
  auto wrap = IntervalSet::from_arcs({{pt(1), pt(0)}});
  CHECK(wrap.contains(inf));
  CHECK(wrap.contains(pt(-7)));
  CHECK_FALSE(wrap.contains(ProjPoint::finite(ratio(1, 2))));
  auto to_inf = IntervalSet::from_arcs({{pt(3), inf}});
  CHECK(to_inf.contains(pt(4)));
  CHECK_FALSE(to_inf.contains(pt(-4)));
  CHECK(IntervalSet::from_arcs({{pt(2), pt(3)}, {pt(0), pt(1)}}) ==
        IntervalSet::from_arcs({{pt(0), pt(1)}, {pt(2), pt(3)}}));
  CHECK_THROWS_AS(IntervalSet::from_arcs({{pt(0), pt(2)}, {pt(1), pt(3)}}), Error);
  CHECK_THROWS_AS(IntervalSet::from_arcs({{pt(0), pt(1)}, {pt(1), pt(3)}}), Error);
  CHECK_THROWS_AS(IntervalSet::from_arcs({{pt(3), pt(1)}, {pt(0), pt(2)}}), Error);
  CHECK(IntervalSet::from_arcs({}) == IntervalSet::empty());
}

TEST_CASE("transport_interval_set examples") {
  auto unit = IntervalSet::from_arcs({{pt(0), pt(1)}});
  CHECK(transport_interval_set(MoebiusMap::identity(), unit) == unit);
  CHECK(transport_interval_set(MoebiusMap::translation(Rational(5)), unit) ==
        IntervalSet::from_arcs({{pt(5), pt(6)}}));
  auto through_inf = IntervalSet::from_arcs({{pt(1), pt(-1)}});
  auto image = transport_interval_set(MoebiusMap(0, 1, 1, 0), through_inf);
  CHECK(image == IntervalSet::from_arcs({{pt(-1), pt(1)}}));
  // pointwise oracle: endpoints and an interior sample
  CHECK(image.contains(MoebiusMap(0, 1, 1, 0)(pt(5))));
  CHECK(transport_interval_set(random_map(), IntervalSet::full()) == IntervalSet::full());
  CHECK(transport_interval_set(random_map(), IntervalSet::empty()) == IntervalSet::empty());
}

TEST_CASE("transport preserves components and membership") {
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t m = static_cast<std::size_t>(uniform_int(1, 5));
    auto pts = distinct_rationals(2 * m, 10, 5);
    std::sort(pts.begin(), pts.end());
    bool wrap = uniform_int(0, 1);
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t a = wrap ? 2 * i + 1 : 2 * i;
      std::size_t b = (a + 1) % (2 * m);
      arcs.push_back({ProjPoint::finite(pts[a]), ProjPoint::finite(pts[b])});
    }
    auto set = IntervalSet::from_arcs(arcs);
    MoebiusMap f = random_map();
    auto image = transport_interval_set(f, set);
    CHECK(image.component_count() == m);
    for (int s = 0; s < 20; ++s) {
      ProjPoint x = ProjPoint::finite(random_rational(12, 9));
      CHECK(set.contains(x) == image.contains(f(x)));
    }
    CHECK(set.contains(inf) == image.contains(f(inf)));
  }
}
