#include "realsurf/surface_class.hpp"

#include <algorithm>
#include <cctype>

#include "realsurf/error.hpp"

namespace realsurf {

MinimalModelKind MinimalModelKind::conic_bundle(int m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "a minimal conic bundle needs m >= 2");
  return MinimalModelKind(Tag::MinimalConicBundle, m);
}

std::string MinimalModelKind::to_string() const {
  switch (tag_) {
    case Tag::P2: return "P2";
    case Tag::Q22: return "Q22";
    case Tag::Q31: return "Q31";
    case Tag::Q40: return "Q40";
    case Tag::Q30xP1: return "Q30xP1";
    case Tag::MinimalConicBundle: return "CB" + std::to_string(m_);
    case Tag::DP2min: return "DP2";
    case Tag::DP1min: return "DP1";
  }
  return "?";
}

MinimalModelKind parse_minimal_model(std::string_view text) {
  if (text == "P2") return MinimalModelKind::p2();
  if (text == "Q22") return MinimalModelKind::q22();
  if (text == "Q31") return MinimalModelKind::q31();
  if (text == "Q40") return MinimalModelKind::q40();
  if (text == "Q30xP1") return MinimalModelKind::q30xp1();
  if (text == "DP2") return MinimalModelKind::dp2();
  if (text == "DP1") return MinimalModelKind::dp1();
  if (text.size() > 2 && text.substr(0, 2) == "CB" && text.size() <= 8 &&
      std::all_of(text.begin() + 2, text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return MinimalModelKind::conic_bundle(std::stoi(std::string(text.substr(2))));
  }
  throw Error(ErrorCode::ParseError, "unknown minimal model '" + std::string(text) + "'");
}

Manifold2 base_topology(const MinimalModelKind& kind) {
  using Tag = MinimalModelKind::Tag;
  const Component2 s2 = Component2::sphere();
  switch (kind.tag()) {
    case Tag::P2: return Manifold2::single(Component2::projective_plane());
    case Tag::Q22: return Manifold2::single(Component2::torus());
    case Tag::Q31: return Manifold2::single(s2);
    case Tag::Q40:
    case Tag::Q30xP1: return Manifold2::empty();
    case Tag::MinimalConicBundle: return Manifold2::copies(s2, kind.m());
    case Tag::DP2min: return Manifold2::copies(s2, 4);
    case Tag::DP1min: return disjoint_union(Manifold2::single(Component2::projective_plane()), Manifold2::copies(s2, 4));
  }
  return Manifold2::empty();
}

Manifold2 topology(const SurfaceDescription& desc) {
  Manifold2 out = base_topology(desc.minimal);
  for (std::size_t i = 0; i < desc.blowups.size(); ++i) {
    const BlowUp& b = desc.blowups[i];
    if (b.kind == BlowUp::Kind::ConjugatePair) continue;
    if (out.is_empty()) {
      throw Error(ErrorCode::RealBlowupOnEmptyLocus,
                  "blow-up " + std::to_string(i) + " is at a real point but the real locus is empty");
    }
    out = blow_up_real_point(out, b.component_index);
  }
  return out;
}

int k_squared(const SurfaceDescription& desc) {
  using Tag = MinimalModelKind::Tag;
  int k2 = 0;
  switch (desc.minimal.tag()) {
    case Tag::P2: k2 = 9; break;
    case Tag::Q22:
    case Tag::Q31:
    case Tag::Q40:
    case Tag::Q30xP1: k2 = 8; break;
    case Tag::MinimalConicBundle: k2 = 8 - 2 * desc.minimal.m(); break;
    case Tag::DP2min: k2 = 2; break;
    case Tag::DP1min: k2 = 1; break;
  }
  for (const auto& b : desc.blowups) k2 -= b.kind == BlowUp::Kind::RealPoint ? 1 : 2;
  return k2;
}

int picard_number(const SurfaceDescription& desc) {
  using Tag = MinimalModelKind::Tag;
  int rho = 0;
  switch (desc.minimal.tag()) {
    case Tag::P2:
    case Tag::Q31:
    case Tag::DP2min:
    case Tag::DP1min: rho = 1; break;
    case Tag::Q22:
    case Tag::Q40:
    case Tag::Q30xP1:
    case Tag::MinimalConicBundle: rho = 2; break;
  }
  return rho + static_cast<int>(desc.blowups.size());
}

std::string BirationalClass::to_string() const {
  switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::Rational: return "rational";
    case Kind::ConicBundle: return "conic-bundle(" + std::to_string(m) + ")";
    case Kind::DP2: return "dp2";
    case Kind::DP1: return "dp1";
  }
  return "?";
}

BirationalClass birational_class(const SurfaceDescription& desc) {
  using Tag = MinimalModelKind::Tag;
  using Kind = BirationalClass::Kind;
  switch (desc.minimal.tag()) {
    case Tag::Q40:
    case Tag::Q30xP1: return {Kind::Empty};
    case Tag::P2:
    case Tag::Q22:
    case Tag::Q31: return {Kind::Rational};
    case Tag::MinimalConicBundle: return {Kind::ConicBundle, desc.minimal.m()};
    case Tag::DP2min: return {Kind::DP2};
    case Tag::DP1min: return {Kind::DP1};
  }
  return {Kind::Empty};
}

bool comessatti_check(const Manifold2& m) {
  if (m.is_empty()) return true;
  if (m == Manifold2::single(Component2::torus())) return true;
  return std::all_of(m.components().begin(), m.components().end(), [](const Component2& c) {
    return !c.is_orientable() || c.genus() == 0;
  });
}

}  // namespace realsurf
