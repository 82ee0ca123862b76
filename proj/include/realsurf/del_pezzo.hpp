#pragma once

// Del Pezzo surfaces: (-1)-classes on the plane blown up in r points, lines
// fixed by complex conjugation, bitangents of real plane quartics, and the
// topological types of real Del Pezzo surfaces by degree.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "realsurf/manifold2.hpp"

namespace realsurf {

// d H - sum m_i e_i
struct PicClass {
  int d = 0;
  std::vector<int> m;

  int self_intersection() const;
  // Intersection with the anticanonical class 3H - sum e_i.
  int anticanonical_degree() const;
  std::string to_string() const;

  friend auto operator<=>(const PicClass&, const PicClass&) = default;
};

// All classes with square -1 and anticanonical degree 1 on the blow-up of
// the plane in r points, 1 <= r <= 8, sorted. Throws BadRank otherwise.
std::vector<PicClass> minus_one_classes(int r);

// Conjugation on the blow-up of the plane in r points: fixes H and the real
// exceptional classes, swaps e_i and e_j for each pair.
class GaloisAction {
 public:
  GaloisAction(int r, std::vector<std::pair<int, int>> swapped_pairs);
  // a real points followed by b conjugate pairs, r = a + 2b.
  static GaloisAction standard(int r, int a, int b);

  int r() const { return r_; }
  int fixed_count() const { return r_ - 2 * static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& swapped_pairs() const { return pairs_; }

  PicClass apply(const PicClass& c) const;

 private:
  int r_;
  std::vector<std::pair<int, int>> pairs_;
};

int real_line_count(const GaloisAction& action);
int real_line_count(int r, int a, int b);

// Real bitangents of a smooth real plane quartic with d outermost ovals,
// 0 <= d <= 4. Throws OutOfRange otherwise.
int bitangent_count(int d);

// Real locus of a smooth plane quartic: n ovals, none inside another, or
// one oval nested in another.
struct QuarticConfig {
  enum class Kind { Ovals, Nested };
  Kind kind = Kind::Ovals;
  int ovals = 0;  // Ovals only, 0..4

  static QuarticConfig with_ovals(int n);
  static QuarticConfig nested() { return {Kind::Nested, 0}; }
  std::string to_string() const;
  friend bool operator==(const QuarticConfig&, const QuarticConfig&) = default;
};

// Real locus of the branch sextic on the quadric cone: one big circle with
// all ovals on one side, one big circle with one oval on each side, or three
// big circles.
struct SexticConfig {
  enum class Kind { OneCircle, OneCircleSplit11, ThreeCircles };
  Kind kind = Kind::OneCircle;
  int ovals_same_side = 0;  // OneCircle only, 0..4

  static SexticConfig one_circle(int ovals);
  static SexticConfig split_one_one() { return {Kind::OneCircleSplit11, 0}; }
  static SexticConfig three_circles() { return {Kind::ThreeCircles, 0}; }
  std::string to_string() const;
  friend bool operator==(const SexticConfig&, const SexticConfig&) = default;
};

// Accepts "ovals:<n>" and "nested".
QuarticConfig parse_quartic_config(std::string_view text);
// Accepts "one-circle:<n>", "split-1-1" and "three-circles".
SexticConfig parse_sextic_config(std::string_view text);

std::vector<QuarticConfig> all_quartic_configs();
std::vector<SexticConfig> all_sextic_configs();

// Real loci of the two double covers u^2 = f and u^2 = -f.
struct DoubleCoverPair {
  Manifold2 f_plus;
  Manifold2 f_minus;
  friend bool operator==(const DoubleCoverPair&, const DoubleCoverPair&) = default;
};

DoubleCoverPair dp2_table(const QuarticConfig& config);
DoubleCoverPair dp1_table(const SexticConfig& config);

struct DelPezzoType {
  Manifold2 topology;
  int family_count = 1;
  std::string notes;
  friend bool operator==(const DelPezzoType&, const DelPezzoType&) = default;
};

// Topological types of real Del Pezzo surfaces of the given degree, 1..9.
// Throws OutOfRange otherwise.
std::vector<DelPezzoType> dp_types(int degree);

}  // namespace realsurf
