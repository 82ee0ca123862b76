#pragma once

// The real projective line over Q, fractional linear maps acting on it, and
// finite unions of closed arcs.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "realsurf/poly.hpp"

namespace realsurf {

class ProjPoint {
 public:
  static ProjPoint finite(Rational x) { return ProjPoint(std::move(x)); }
  static ProjPoint infinity() { return ProjPoint(); }

  bool is_infinity() const { return !value_.has_value(); }
  const Rational& value() const;

  // Linear order used for canonical sorting: finite values ascending, then
  // infinity.
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.value_ == b.value_; }

  std::string to_string() const;

 private:
  ProjPoint() = default;
  explicit ProjPoint(Rational x) : value_(std::move(x)) {}
  std::optional<Rational> value_;
};

ProjPoint parse_proj_point(std::string_view text);

// Closed arc of RP^1 traversed in the increasing direction from start to end,
// passing through infinity when end < start.
struct Arc {
  ProjPoint start;
  ProjPoint end;
  friend bool operator==(const Arc&, const Arc&) = default;
};

class IntervalSet {
 public:
  enum class Kind { Empty, Full, Arcs };

  static IntervalSet empty() { return IntervalSet(Kind::Empty, {}); }
  static IntervalSet full() { return IntervalSet(Kind::Full, {}); }
  // Arcs must be nondegenerate with pairwise disjoint closures; an empty list
  // gives the empty set.
  static IntervalSet from_arcs(std::vector<Arc> arcs);

  Kind kind() const { return kind_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t component_count() const;
  bool contains(const ProjPoint& x) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

  std::string to_string() const;

 private:
  IntervalSet(Kind kind, std::vector<Arc> arcs) : kind_(kind), arcs_(std::move(arcs)) {}
  Kind kind_;
  std::vector<Arc> arcs_;  // sorted by start
};

bool arc_contains(const Arc& arc, const ProjPoint& x);

// z -> (alpha z + beta) / (gamma z + delta), stored as a primitive integer
// matrix whose first nonzero entry is positive.
class MoebiusMap {
 public:
  MoebiusMap(const Rational& alpha, const Rational& beta, const Rational& gamma,
             const Rational& delta);

  static MoebiusMap identity() { return {1, 0, 0, 1}; }
  static MoebiusMap translation(const Rational& t) { return {1, t, 0, 1}; }

  // Unique map with p[i] -> q[i].
  static MoebiusMap from_three_points(const std::array<ProjPoint, 3>& p,
                                      const std::array<ProjPoint, 3>& q);

  const Integer& alpha() const { return m_[0]; }
  const Integer& beta() const { return m_[1]; }
  const Integer& gamma() const { return m_[2]; }
  const Integer& delta() const { return m_[3]; }
  Integer determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  bool preserves_orientation() const { return sgn(determinant()) > 0; }

  ProjPoint apply(const ProjPoint& p) const;
  ProjPoint operator()(const ProjPoint& p) const { return apply(p); }
  // gamma x + delta for the stored representative.
  Rational denominator_at(const Rational& x) const;

  // (this o other)(z) = this(other(z))
  MoebiusMap compose(const MoebiusMap& other) const;
  MoebiusMap inverse() const;

  friend bool operator==(const MoebiusMap&, const MoebiusMap&) = default;

  std::string to_string() const;

 private:
  std::array<Integer, 4> m_;
};

// Value at z1 of the map sending z2, z3, z4 to 1, 0, infinity. Points must be
// pairwise distinct.
Rational cross_ratio(const ProjPoint& z1, const ProjPoint& z2, const ProjPoint& z3,
                     const ProjPoint& z4);

IntervalSet transport_interval_set(const MoebiusMap& m, const IntervalSet& set);

}  // namespace realsurf
