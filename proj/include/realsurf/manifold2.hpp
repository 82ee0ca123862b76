#pragma once

// Closed 2-manifolds, possibly disconnected or empty, kept in normal form.
//
// A connected component is S^2 with g handles (Orientable(g)) or S^2 with k
// crosscaps (NonOrientable(k), k >= 1). Rendering: "S2", "T2", "#gT2",
// "RP2", "#kRP2"; components joined with " + ", repeats folded as "4 S2";
// the empty manifold renders as "empty".

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace realsurf {

class Component2 {
 public:
  static Component2 orientable(int genus);
  static Component2 nonorientable(int crosscaps);
  static Component2 sphere() { return orientable(0); }
  static Component2 torus() { return orientable(1); }
  static Component2 projective_plane() { return nonorientable(1); }
  static Component2 klein_bottle() { return nonorientable(2); }

  bool is_orientable() const { return orientable_; }
  int genus() const;      // orientable only
  int crosscaps() const;  // nonorientable only
  int euler_characteristic() const { return orientable_ ? 2 - 2 * count_ : 2 - count_; }

  std::string to_string() const;

  // Nonorientable components sort first.
  friend auto operator<=>(const Component2&, const Component2&) = default;

 private:
  Component2(bool orientable, int count) : orientable_(orientable), count_(count) {}
  bool orientable_;
  int count_;
};

Component2 connected_sum(const Component2& a, const Component2& b);

class Manifold2 {
 public:
  Manifold2() = default;
  explicit Manifold2(std::vector<Component2> components);

  static Manifold2 empty() { return {}; }
  static Manifold2 single(const Component2& c) { return Manifold2({c}); }
  static Manifold2 copies(const Component2& c, int n);

  const std::vector<Component2>& components() const { return components_; }
  std::size_t component_count() const { return components_.size(); }
  bool is_empty() const { return components_.empty(); }
  bool is_orientable() const;
  bool is_connected() const { return components_.size() == 1; }

  std::string to_string() const;

  friend bool operator==(const Manifold2&, const Manifold2&) = default;
  friend auto operator<=>(const Manifold2&, const Manifold2&) = default;

 private:
  std::vector<Component2> components_;  // sorted
};

Manifold2 disjoint_union(const Manifold2& a, const Manifold2& b);
int euler_char(const Manifold2& m);
// Connected sum of the indexed component with RP^2.
Manifold2 blow_up_real_point(const Manifold2& m, std::size_t component_index);

Manifold2 parse_manifold(std::string_view text);

}  // namespace realsurf
