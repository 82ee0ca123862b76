#pragma once

// Independent checks shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <array>
#include <vector>

#include "realsurf/conic_bundle.hpp"
#include "realsurf/moebius.hpp"
#include "realsurf/surface_class.hpp"
#include "test_support.hpp"

namespace realsurf::testing {

// Product of random generators of GL2(Z): translations, the inversion
// z -> -1/z and the reflection z -> -z.
inline MoebiusMap random_unimodular_map(int steps = 4) {
  MoebiusMap m = MoebiusMap::identity();
  for (int i = 0; i < steps; ++i) {
    switch (uniform_int(0, 2)) {
      case 0: m = MoebiusMap::translation(Rational(uniform_int(-3, 3))).compose(m); break;
      case 1: m = MoebiusMap(0, -1, 1, 0).compose(m); break;
      default: m = MoebiusMap(-1, 0, 0, 1).compose(m); break;
    }
  }
  return m;
}

// Random integer map with small entries and nonzero determinant.
inline MoebiusMap random_integer_map(long bound = 5) {
  while (true) {
    long a = uniform_int(-bound, bound), b = uniform_int(-bound, bound);
    long c = uniform_int(-bound, bound), d = uniform_int(-bound, bound);
    if (a * d - b * c != 0) return MoebiusMap(a, b, c, d);
  }
}

inline bool has_pole_at(const MoebiusMap& m, const std::vector<Rational>& points) {
  return std::any_of(points.begin(), points.end(), [&](const Rational& x) { return sgn(m.denominator_at(x)) == 0; });
}

inline ConicBundleNF random_normal_form(int m, long span = 6, long max_den = 4) {
  int sign = uniform_int(0, 1) ? 1 : -1;
  return ConicBundleNF::from_rational_roots(sign, distinct_rationals(static_cast<std::size_t>(2 * m), span, max_den));
}

// (z1 - z3)(z2 - z4) / ((z1 - z4)(z2 - z3)) for finite distinct points.
inline Rational finite_cross_ratio(const Rational& z1, const Rational& z2, const Rational& z3, const Rational& z4) {
  return (z1 - z3) * (z2 - z4) / ((z1 - z4) * (z2 - z3));
}

namespace detail {

inline bool extend_ordering(const std::vector<Rational>& a, const std::vector<Rational>& b,
                            std::vector<std::size_t>& order, std::vector<bool>& used) {
  std::size_t k = order.size();
  if (k == a.size()) return true;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (used[j]) continue;
    if (k >= 3 && finite_cross_ratio(a[0], a[1], a[2], a[k]) !=
                      finite_cross_ratio(b[order[0]], b[order[1]], b[order[2]], b[j])) {
      continue;
    }
    order.push_back(j);
    used[j] = true;
    if (extend_ordering(a, b, order, used)) return true;
    order.pop_back();
    used[j] = false;
  }
  return false;
}

}  // namespace detail

// Decides fibration equivalence by searching orderings of the second root set
// whose cross-ratios against the first three points match the first root
// set, then comparing I(f) transported by the resulting map. Orderings are
// pruned as soon as a cross-ratio disagrees.
inline bool brute_force_equivalent(const ConicBundleNF& first, const ConicBundleNF& second) {
  if (first.m() != second.m()) return false;
  if (first.m() == 0) return first.sign() == second.sign();
  auto a = first.rational_roots();
  auto b = second.rational_roots();
  IntervalSet source = interval_set(first);
  IntervalSet target = interval_set(second);
  auto pt = [](const Rational& x) { return ProjPoint::finite(x); };

  if (a.size() == 2) {
    // A map is fixed by the two roots and the image of infinity; try
    // infinity and a point between the target roots.
    for (const auto& order : {std::array<std::size_t, 2>{0, 1}, std::array<std::size_t, 2>{1, 0}}) {
      for (const auto& third : {ProjPoint::infinity(), pt((b[0] + b[1]) / 2)}) {
        MoebiusMap map = MoebiusMap::from_three_points({pt(a[0]), pt(a[1]), ProjPoint::infinity()},
                                                       {pt(b[order[0]]), pt(b[order[1]]), third});
        if (transport_interval_set(map, source) == target) return true;
      }
    }
    return false;
  }

  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        std::vector<std::size_t> order{i, j, k};
        std::vector<bool> used(b.size(), false);
        used[i] = used[j] = used[k] = true;
        if (!detail::extend_ordering(a, b, order, used)) continue;
        MoebiusMap map = MoebiusMap::from_three_points({pt(a[0]), pt(a[1]), pt(a[2])}, {pt(b[i]), pt(b[j]), pt(b[k])});
        if (transport_interval_set(map, source) == target) return true;
      }
    }
  }
  return false;
}

inline MinimalModelKind random_minimal_model() {
  switch (uniform_int(0, 7)) {
    case 0: return MinimalModelKind::p2();
    case 1: return MinimalModelKind::q22();
    case 2: return MinimalModelKind::q31();
    case 3: return MinimalModelKind::q40();
    case 4: return MinimalModelKind::q30xp1();
    case 5: return MinimalModelKind::conic_bundle(static_cast<int>(uniform_int(2, 6)));
    case 6: return MinimalModelKind::dp2();
    default: return MinimalModelKind::dp1();
  }
}

// Blow-ups at real points only where the real locus is nonempty, at a
// random component.
inline SurfaceDescription random_description(int max_blowups = 8) {
  SurfaceDescription desc{random_minimal_model(), {}};
  std::size_t components = base_topology(desc.minimal).component_count();
  long count = uniform_int(0, max_blowups);
  for (long i = 0; i < count; ++i) {
    if (components > 0 && uniform_int(0, 1)) {
      desc.blowups.push_back(BlowUp::real_point(static_cast<std::size_t>(uniform_int(0, static_cast<long>(components) - 1))));
    } else {
      desc.blowups.push_back(BlowUp::conjugate_pair());
    }
  }
  return desc;
}

}  // namespace realsurf::testing
