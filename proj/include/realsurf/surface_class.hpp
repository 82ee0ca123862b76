#pragma once

// Geometrically rational real surfaces given as a minimal model followed by
// a list of blow-ups.

#include <string>
#include <string_view>
#include <vector>

#include "realsurf/manifold2.hpp"

namespace realsurf {

// Minimal models: the plane, the quadrics Q^{2,2} (torus), Q^{3,1} (sphere),
// Q^{4,0} (empty), the pointless product Q^{3,0} x P^1, minimal conic
// bundles with 2m singular fibers, and minimal Del Pezzo surfaces of degree
// 2 and 1.
class MinimalModelKind {
 public:
  enum class Tag { P2, Q22, Q31, Q40, Q30xP1, MinimalConicBundle, DP2min, DP1min };

  static MinimalModelKind p2() { return MinimalModelKind(Tag::P2); }
  static MinimalModelKind q22() { return MinimalModelKind(Tag::Q22); }
  static MinimalModelKind q31() { return MinimalModelKind(Tag::Q31); }
  static MinimalModelKind q40() { return MinimalModelKind(Tag::Q40); }
  static MinimalModelKind q30xp1() { return MinimalModelKind(Tag::Q30xP1); }
  static MinimalModelKind conic_bundle(int m);  // m >= 2
  static MinimalModelKind dp2() { return MinimalModelKind(Tag::DP2min); }
  static MinimalModelKind dp1() { return MinimalModelKind(Tag::DP1min); }

  Tag tag() const { return tag_; }
  int m() const { return m_; }  // conic bundles only, 0 otherwise

  std::string to_string() const;

  friend bool operator==(const MinimalModelKind&, const MinimalModelKind&) = default;

 private:
  explicit MinimalModelKind(Tag tag, int m = 0) : tag_(tag), m_(m) {}
  Tag tag_;
  int m_;
};

// Accepts "P2", "Q22", "Q31", "Q40", "Q30xP1", "CB<m>", "DP2", "DP1".
MinimalModelKind parse_minimal_model(std::string_view text);

struct BlowUp {
  enum class Kind { RealPoint, ConjugatePair };
  Kind kind;
  std::size_t component_index = 0;  // RealPoint only

  static BlowUp real_point(std::size_t index = 0) { return {Kind::RealPoint, index}; }
  static BlowUp conjugate_pair() { return {Kind::ConjugatePair, 0}; }

  friend bool operator==(const BlowUp&, const BlowUp&) = default;
};

struct SurfaceDescription {
  MinimalModelKind minimal;
  std::vector<BlowUp> blowups;
};

Manifold2 base_topology(const MinimalModelKind& kind);
Manifold2 topology(const SurfaceDescription& desc);
int k_squared(const SurfaceDescription& desc);
int picard_number(const SurfaceDescription& desc);

struct BirationalClass {
  enum class Kind { Empty, Rational, ConicBundle, DP2, DP1 };
  Kind kind;
  int m = 0;  // ConicBundle only

  std::string to_string() const;
  friend bool operator==(const BirationalClass&, const BirationalClass&) = default;
};

BirationalClass birational_class(const SurfaceDescription& desc);

// True iff M is empty, a single torus, or a disjoint union of components
// that are each a sphere or nonorientable.
bool comessatti_check(const Manifold2& m);

}  // namespace realsurf
