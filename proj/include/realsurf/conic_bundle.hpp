#pragma once

// Real conic bundles x^2 + y^2 = g(z) over the projective line: normal form
// x^2 + y^2 = +-prod (z - a_i) with 2m distinct real a_i, the image interval
// set I(f), and birational equivalence decisions.

#include <optional>
#include <string>
#include <vector>

#include "realsurf/manifold2.hpp"
#include "realsurf/moebius.hpp"
#include "realsurf/poly.hpp"

namespace realsurf {

// g = numerator / denominator
struct ConicBundleInput {
  Polynomial numerator;
  Polynomial denominator = Polynomial::constant(1);
};

class ConicBundleNF {
 public:
  // Roots must be strictly increasing with disjoint representations,
  // multiplicity 1, even in number.
  ConicBundleNF(int sign, std::vector<IsolatedRoot> roots);
  // Sorts the roots; they must be pairwise distinct.
  static ConicBundleNF from_rational_roots(int sign, std::vector<Rational> roots);

  int sign() const { return sign_; }
  const std::vector<IsolatedRoot>& roots() const { return roots_; }
  int m() const { return static_cast<int>(roots_.size() / 2); }

  bool has_rational_roots() const;
  // Throws NonRationalRoot unless every root is exact.
  std::vector<Rational> rational_roots() const;

  // Sign of sign * prod (z - a_i); works for isolated irrational roots.
  int sign_at(const ProjPoint& z) const;
  // Membership in I(f).
  bool contains(const ProjPoint& z) const { return sign_at(z) >= 0; }
  // sign * prod (z - a_i); rational roots only.
  Polynomial expanded() const;

  std::string to_string() const;

  friend bool operator==(const ConicBundleNF& a, const ConicBundleNF& b);

 private:
  int sign_;
  std::vector<IsolatedRoot> roots_;
};

ConicBundleNF normalize(const ConicBundleInput& input);

// The normal form together with the change of base coordinate used to reach
// it: a point z of the original base corresponds to base_change(z).
struct Normalization {
  ConicBundleNF form;
  MoebiusMap base_change;
};

Normalization normalize_with_base_change(const ConicBundleInput& input);

IntervalSet interval_set(const ConicBundleNF& nf);
// K^2 of a relatively minimal conic bundle with 2m singular fibers over a
// base curve of genus base_genus.
int k_squared(int m, int base_genus = 0);
Manifold2 topology(const ConicBundleNF& nf);

// a'_{permutation[i]} = map(a_i), with the leading-sign condition.
struct FibrationWitness {
  MoebiusMap map;
  std::vector<std::size_t> permutation;
};

std::optional<FibrationWitness> fibration_equivalent(const ConicBundleNF& first,
                                                     const ConicBundleNF& second);
bool verify_witness(const ConicBundleNF& first, const ConicBundleNF& second,
                    const FibrationWitness& witness);
FibrationWitness compose(const FibrationWitness& second_to_third,
                         const FibrationWitness& first_to_second);
bool surface_equivalent(const ConicBundleNF& first, const ConicBundleNF& second);

// The normal form whose roots are map(a_i) and whose sign satisfies the
// equivalence condition; no root may map to infinity.
ConicBundleNF transport(const ConicBundleNF& nf, const MoebiusMap& map);

}  // namespace realsurf
