#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "realsurf/del_pezzo.hpp"
#include "realsurf/error.hpp"
#include "realsurf/surface_class.hpp"

using namespace realsurf;

namespace {

// Classes with square -1 and anticanonical degree 1, found by trying every
// tuple in a wide box.
std::set<PicClass> brute_force_classes(int r, int max_d, int max_abs_m) {
  std::set<PicClass> out;
  std::vector<int> m(static_cast<std::size_t>(r), -max_abs_m);
  while (true) {
    for (int d = 0; d <= max_d; ++d) {
      PicClass c{d, m};
      if (c.self_intersection() == -1 && c.anticanonical_degree() == 1) out.insert(c);
    }
    std::size_t i = 0;
    while (i < m.size() && m[i] == max_abs_m) m[i++] = -max_abs_m;
    if (i == m.size()) break;
    ++m[i];
  }
  return out;
}

Manifold2 mf(const char* text) { return parse_manifold(text); }

std::vector<Manifold2> topologies(const std::vector<DelPezzoType>& types) {
  std::vector<Manifold2> out;
  for (const auto& t : types) out.push_back(t.topology);
  return out;
}

SurfaceDescription plane_blown_up(int real_points, int pairs) {
  SurfaceDescription d{MinimalModelKind::p2(), {}};
  for (int i = 0; i < real_points; ++i) d.blowups.push_back(BlowUp::real_point());
  for (int i = 0; i < pairs; ++i) d.blowups.push_back(BlowUp::conjugate_pair());
  return d;
}

}  // namespace

TEST_CASE("minus_one_classes counts") {
  const int expected[] = {1, 3, 6, 10, 16, 27, 56, 240};
  for (int r = 1; r <= 8; ++r) {
    auto classes = minus_one_classes(r);
    CHECK(classes.size() == static_cast<std::size_t>(expected[r - 1]));
    CHECK(std::is_sorted(classes.begin(), classes.end()));
    CHECK(std::adjacent_find(classes.begin(), classes.end()) == classes.end());
    for (const auto& c : classes) {
      CHECK(c.self_intersection() == -1);
      CHECK(c.anticanonical_degree() == 1);
    }
  }
}

TEST_CASE("minus_one_classes agrees with a wider brute-force search") {
  for (int r = 1; r <= 5; ++r) {
    auto classes = minus_one_classes(r);
    std::set<PicClass> oracle = brute_force_classes(r, 10, 5);
    CHECK(std::set<PicClass>(classes.begin(), classes.end()) == oracle);
  }
}

TEST_CASE("minus_one_classes known members") {
  auto classes = minus_one_classes(6);
  auto has = [&](PicClass c) { return std::find(classes.begin(), classes.end(), c) != classes.end(); };
  CHECK(has({0, {-1, 0, 0, 0, 0, 0}}));
  CHECK(has({1, {1, 1, 0, 0, 0, 0}}));
  CHECK(has({2, {0, 1, 1, 1, 1, 1}}));
  CHECK_FALSE(has({1, {1, 0, 0, 0, 0, 0}}));
  auto eight = minus_one_classes(8);
  CHECK(std::find(eight.begin(), eight.end(), PicClass{6, {3, 2, 2, 2, 2, 2, 2, 2}}) != eight.end());
}

TEST_CASE("minus_one_classes rejects bad rank") {
  for (int r : {0, 9, -1}) {
    try {
      minus_one_classes(r);
      FAIL("expected BadRank");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadRank);
    }
  }
}

TEST_CASE("real_line_count examples") {
  CHECK(real_line_count(6, 6, 0) == 27);
  CHECK(real_line_count(6, 4, 1) == 15);
  CHECK(real_line_count(6, 2, 2) == 7);
  CHECK(real_line_count(6, 0, 3) == 3);
  CHECK(real_line_count(7, 7, 0) == 56);
  CHECK(real_line_count(8, 8, 0) == 240);
  CHECK_THROWS_AS(real_line_count(9, 9, 0), Error);
  CHECK_THROWS_AS(real_line_count(6, 3, 1), Error);
  CHECK_THROWS_AS(GaloisAction(4, {{0, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(GaloisAction(4, {{0, 4}}), Error);
}

TEST_CASE("real_line_count properties") {
  for (int r = 1; r <= 8; ++r) {
    int full = static_cast<int>(minus_one_classes(r).size());
    CHECK(real_line_count(r, r, 0) == full);
    int previous = full;
    for (int b = 1; 2 * b <= r; ++b) {
      int count = real_line_count(r, r - 2 * b, b);
      CHECK(count <= previous);
      previous = count;
    }
  }
  // Which indices are paired does not matter.
  CHECK(real_line_count(GaloisAction(6, {{0, 5}, {2, 3}})) == 7);
}

TEST_CASE("bitangent_count") {
  CHECK(bitangent_count(4) == 28);
  CHECK(bitangent_count(1) == 4);
  CHECK(bitangent_count(2) == 8);
  CHECK(bitangent_count(0) == 4);
  CHECK(bitangent_count(3) == 16);
  for (int d : {-1, 5}) {
    try {
      bitangent_count(d);
      FAIL("expected OutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OutOfRange);
    }
  }
}

TEST_CASE("degree two table") {
  CHECK(dp2_table(QuarticConfig::with_ovals(4)) == DoubleCoverPair{mf("4 S2"), mf("#8RP2")});
  CHECK(dp2_table(QuarticConfig::with_ovals(3)) == DoubleCoverPair{mf("3 S2"), mf("#6RP2")});
  CHECK(dp2_table(QuarticConfig::with_ovals(2)) == DoubleCoverPair{mf("2 S2"), mf("#4RP2")});
  CHECK(dp2_table(QuarticConfig::with_ovals(1)) == DoubleCoverPair{mf("S2"), mf("#2RP2")});
  CHECK(dp2_table(QuarticConfig::with_ovals(0)) == DoubleCoverPair{mf("empty"), mf("2 RP2")});
  CHECK(dp2_table(QuarticConfig::nested()) == DoubleCoverPair{mf("T2"), mf("S2 + #2RP2")});
  CHECK_THROWS_AS(QuarticConfig::with_ovals(5), Error);
}

TEST_CASE("degree one table") {
  CHECK(dp1_table(SexticConfig::one_circle(4)) == DoubleCoverPair{mf("RP2 + 4 S2"), mf("#9RP2")});
  CHECK(dp1_table(SexticConfig::one_circle(3)) == DoubleCoverPair{mf("RP2 + 3 S2"), mf("#7RP2")});
  CHECK(dp1_table(SexticConfig::one_circle(2)) == DoubleCoverPair{mf("RP2 + 2 S2"), mf("#5RP2")});
  CHECK(dp1_table(SexticConfig::one_circle(1)) == DoubleCoverPair{mf("RP2 + S2"), mf("#3RP2")});
  CHECK(dp1_table(SexticConfig::one_circle(0)) == DoubleCoverPair{mf("RP2"), mf("RP2")});
  CHECK(dp1_table(SexticConfig::split_one_one()) == DoubleCoverPair{mf("#3RP2 + S2"), mf("#3RP2 + S2")});
  CHECK(dp1_table(SexticConfig::three_circles()) == DoubleCoverPair{mf("RP2 + #2RP2"), mf("RP2 + #2RP2")});
}

TEST_CASE("configuration names round trip") {
  for (const auto& c : all_quartic_configs()) CHECK(parse_quartic_config(c.to_string()) == c);
  for (const auto& c : all_sextic_configs()) CHECK(parse_sextic_config(c.to_string()) == c);
  CHECK_THROWS_AS(parse_quartic_config("ovals:7"), Error);
  CHECK_THROWS_AS(parse_sextic_config("two-circles"), Error);
}

TEST_CASE("dp_types by degree") {
  const std::size_t counts[] = {11, 12, 5, 6, 3, 5, 2, 4, 1};
  for (int degree = 1; degree <= 9; ++degree) {
    auto types = dp_types(degree);
    CHECK(types.size() == counts[degree - 1]);
    auto tops = topologies(types);
    std::sort(tops.begin(), tops.end());
    CHECK(std::adjacent_find(tops.begin(), tops.end()) == tops.end());
    for (const auto& t : types) {
      CHECK(comessatti_check(t.topology));
      CHECK(t.family_count == ((degree == 8 && t.topology.is_empty()) ? 2 : 1));
    }
  }
  auto six = topologies(dp_types(6));
  CHECK(six == std::vector<Manifold2>{mf("S2"), mf("T2"), mf("#2RP2"), mf("#4RP2"), mf("empty")});
  auto three = topologies(dp_types(3));
  CHECK(three == std::vector<Manifold2>{mf("RP2"), mf("#3RP2"), mf("#5RP2"), mf("#7RP2"), mf("S2 + RP2")});
  auto four = dp_types(4);
  auto pair = std::find_if(four.begin(), four.end(), [](const DelPezzoType& t) { return t.topology == mf("2 S2"); });
  REQUIRE(pair != four.end());
  CHECK(pair->notes.find("monodromy") != std::string::npos);
  CHECK_THROWS_AS(dp_types(0), Error);
  CHECK_THROWS_AS(dp_types(10), Error);
}

TEST_CASE("odd degree types come from one real blow-up") {
  std::vector<std::pair<int, Manifold2>> unexplained;
  for (int degree = 1; degree <= 9; degree += 2) {
    std::vector<Manifold2> parents = degree < 9 ? topologies(dp_types(degree + 1)) : std::vector<Manifold2>{};
    for (const auto& t : dp_types(degree)) {
      CHECK_FALSE(t.topology.is_orientable());
      bool found = false;
      for (const auto& p : parents) {
        for (std::size_t i = 0; i < p.component_count(); ++i) found = found || blow_up_real_point(p, i) == t.topology;
      }
      if (!found) unexplained.emplace_back(degree, t.topology);
    }
  }
  // The plane, the minimal degree one surface, and #7RP2 in degree three,
  // whose parent #6RP2 is missing from the degree four list.
  std::vector<std::pair<int, Manifold2>> expected{{1, mf("RP2 + 4 S2")}, {3, mf("#7RP2")}, {9, mf("RP2")}};
  CHECK(unexplained == expected);
}

TEST_CASE("tables agree with line counts and blow-ups") {
  // All lines real: the plane blown up in 7 (resp. 8) real points.
  CHECK(real_line_count(7, 7, 0) == 2 * bitangent_count(4));
  CHECK(topology(plane_blown_up(7, 0)) == dp2_table(QuarticConfig::with_ovals(4)).f_minus);
  CHECK(topology(plane_blown_up(8, 0)) == dp1_table(SexticConfig::one_circle(4)).f_minus);
  CHECK(real_line_count(8, 8, 0) == 240);
  // The plus sides with the most components are the minimal models.
  CHECK(dp2_table(QuarticConfig::with_ovals(4)).f_plus == base_topology(MinimalModelKind::dp2()));
  CHECK(dp1_table(SexticConfig::one_circle(4)).f_plus == base_topology(MinimalModelKind::dp1()));
  // Degree 9 - a - 2b surfaces from the plane are listed.
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; a + 2 * b <= 8; ++b) {
      int degree = 9 - a - 2 * b;
      if (degree == 4 && a == 5) continue;  // #6RP2, absent from the degree four list
      auto tops = topologies(dp_types(degree));
      CHECK(std::find(tops.begin(), tops.end(), topology(plane_blown_up(a, b))) != tops.end());
    }
  }
}
