#include "realsurf/manifold2.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "realsurf/error.hpp"

namespace realsurf {

Component2 Component2::orientable(int genus) {
  if (genus < 0) throw Error(ErrorCode::InvalidArgument, "genus must be nonnegative");
  return Component2(true, genus);
}

Component2 Component2::nonorientable(int crosscaps) {
  if (crosscaps < 1) throw Error(ErrorCode::InvalidArgument, "crosscap count must be positive");
  return Component2(false, crosscaps);
}

int Component2::genus() const {
  if (!orientable_) throw Error(ErrorCode::InvalidArgument, "nonorientable component has no genus");
  return count_;
}

int Component2::crosscaps() const {
  if (orientable_) throw Error(ErrorCode::InvalidArgument, "orientable component has no crosscaps");
  return count_;
}

std::string Component2::to_string() const {
  if (orientable_) {
    if (count_ == 0) return "S2";
    if (count_ == 1) return "T2";
    return "#" + std::to_string(count_) + "T2";
  }
  if (count_ == 1) return "RP2";
  return "#" + std::to_string(count_) + "RP2";
}

Component2 connected_sum(const Component2& a, const Component2& b) {
  if (a.is_orientable() && b.is_orientable()) return Component2::orientable(a.genus() + b.genus());
  // A handle next to a crosscap is two crosscaps.
  int k = (a.is_orientable() ? 2 * a.genus() : a.crosscaps()) +
          (b.is_orientable() ? 2 * b.genus() : b.crosscaps());
  return Component2::nonorientable(k);
}

Manifold2::Manifold2(std::vector<Component2> components) : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end());
}

Manifold2 Manifold2::copies(const Component2& c, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative copy count");
  return Manifold2(std::vector<Component2>(static_cast<std::size_t>(n), c));
}

bool Manifold2::is_orientable() const {
  return std::all_of(components_.begin(), components_.end(), [](const Component2& c) { return c.is_orientable(); });
}

std::string Manifold2::to_string() const {
  if (components_.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < components_.size();) {
    std::size_t j = i;
    while (j < components_.size() && components_[j] == components_[i]) ++j;
    if (!out.empty()) out += " + ";
    if (j - i > 1) out += std::to_string(j - i) + " ";
    out += components_[i].to_string();
    i = j;
  }
  return out;
}

Manifold2 disjoint_union(const Manifold2& a, const Manifold2& b) {
  std::vector<Component2> all = a.components();
  all.insert(all.end(), b.components().begin(), b.components().end());
  return Manifold2(std::move(all));
}

int euler_char(const Manifold2& m) {
  return std::accumulate(m.components().begin(), m.components().end(), 0,
                         [](int acc, const Component2& c) { return acc + c.euler_characteristic(); });
}

Manifold2 blow_up_real_point(const Manifold2& m, std::size_t component_index) {
  if (m.is_empty()) throw Error(ErrorCode::EmptyManifold, "no real point to blow up on an empty locus");
  if (component_index >= m.component_count()) {
    throw Error(ErrorCode::BadIndex, "component index " + std::to_string(component_index) + " out of range");
  }
  std::vector<Component2> out = m.components();
  out[component_index] = connected_sum(out[component_index], Component2::projective_plane());
  return Manifold2(std::move(out));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_count(std::string_view digits, std::string_view whole) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(ErrorCode::ParseError, "bad manifold term '" + std::string(whole) + "'");
  }
  if (digits.size() > 6) throw Error(ErrorCode::ParseError, "count too large in '" + std::string(whole) + "'");
  return std::stoi(std::string(digits));
}

Component2 parse_component(std::string_view term) {
  std::string_view body = term;
  int count = 1;
  bool hashed = false;
  if (!body.empty() && body.front() == '#') {
    hashed = true;
    body.remove_prefix(1);
    std::size_t n = 0;
    while (n < body.size() && std::isdigit(static_cast<unsigned char>(body[n]))) ++n;
    count = parse_count(body.substr(0, n), term);
    body.remove_prefix(n);
  }
  if (body == "S2" && !hashed) return Component2::sphere();
  if (body == "T2") return Component2::orientable(count);
  if (body == "RP2") return count == 0 ? Component2::sphere() : Component2::nonorientable(count);
  if (body == "K2" && !hashed) return Component2::klein_bottle();
  throw Error(ErrorCode::ParseError, "bad manifold term '" + std::string(term) + "'");
}

}  // namespace

Manifold2 parse_manifold(std::string_view text) {
  text = trim(text);
  if (text == "empty") return Manifold2::empty();
  std::vector<Component2> out;
  while (true) {
    auto plus = text.find('+');
    std::string_view term = trim(text.substr(0, plus));
    int repeat = 1;
    auto space = term.find(' ');
    if (space != std::string_view::npos) {
      repeat = parse_count(term.substr(0, space), term);
      term = trim(term.substr(space + 1));
    }
    Component2 c = parse_component(term);
    for (int i = 0; i < repeat; ++i) out.push_back(c);
    if (plus == std::string_view::npos) break;
    text = text.substr(plus + 1);
  }
  return Manifold2(std::move(out));
}

}  // namespace realsurf
