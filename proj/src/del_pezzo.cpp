#include "realsurf/del_pezzo.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "realsurf/error.hpp"

namespace realsurf {

int PicClass::self_intersection() const {
  int s = d * d;
  for (int x : m) s -= x * x;
  return s;
}

int PicClass::anticanonical_degree() const {
  return 3 * d - std::accumulate(m.begin(), m.end(), 0);
}

std::string PicClass::to_string() const {
  std::string out = "(" + std::to_string(d) + ";";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
  return out + ")";
}

namespace {

constexpr int kMaxDegree = 6;
constexpr int kMinMult = -1;
constexpr int kMaxMult = 3;

// Fill m[i..] so that the remaining multiplicities sum to `sum` with squares
// summing to `squares`.
void fill(PicClass& c, std::size_t i, int sum, int squares, std::vector<PicClass>& out) {
  if (squares < 0) return;
  if (i == c.m.size()) {
    if (sum == 0 && squares == 0) out.push_back(c);
    return;
  }
  for (int x = kMinMult; x <= kMaxMult; ++x) {
    c.m[i] = x;
    fill(c, i + 1, sum - x, squares - x * x, out);
  }
  c.m[i] = 0;
}

}  // namespace

std::vector<PicClass> minus_one_classes(int r) {
  if (r < 1 || r > 8) throw Error(ErrorCode::BadRank, "rank must be between 1 and 8, got " + std::to_string(r));
  std::vector<PicClass> out;
  for (int d = 0; d <= kMaxDegree; ++d) {
    // d^2 - sum m^2 = -1 and 3d - sum m = 1
    PicClass c{d, std::vector<int>(static_cast<std::size_t>(r), 0)};
    fill(c, 0, 3 * d - 1, d * d + 1, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GaloisAction::GaloisAction(int r, std::vector<std::pair<int, int>> swapped_pairs)
    : r_(r), pairs_(std::move(swapped_pairs)) {
  if (r_ < 1 || r_ > 8) throw Error(ErrorCode::BadRank, "rank must be between 1 and 8, got " + std::to_string(r_));
  std::vector<bool> used(static_cast<std::size_t>(r_), false);
  for (const auto& [i, j] : pairs_) {
    if (i < 0 || j < 0 || i >= r_ || j >= r_ || i == j) {
      throw Error(ErrorCode::InvalidArgument, "bad swapped pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
    if (used[static_cast<std::size_t>(i)] || used[static_cast<std::size_t>(j)]) {
      throw Error(ErrorCode::InvalidArgument, "swapped pairs must be disjoint");
    }
    used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
  }
}

GaloisAction GaloisAction::standard(int r, int a, int b) {
  if (a < 0 || b < 0 || a + 2 * b != r) {
    throw Error(ErrorCode::InvalidArgument, "need a + 2b = r with a, b >= 0");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < b; ++k) pairs.emplace_back(a + 2 * k, a + 2 * k + 1);
  return GaloisAction(r, std::move(pairs));
}

PicClass GaloisAction::apply(const PicClass& c) const {
  PicClass out = c;
  for (const auto& [i, j] : pairs_) std::swap(out.m.at(static_cast<std::size_t>(i)), out.m.at(static_cast<std::size_t>(j)));
  return out;
}

int real_line_count(const GaloisAction& action) {
  auto classes = minus_one_classes(action.r());
  return static_cast<int>(std::count_if(classes.begin(), classes.end(),
                                        [&](const PicClass& c) { return action.apply(c) == c; }));
}

int real_line_count(int r, int a, int b) {
  if (r < 1 || r > 8) throw Error(ErrorCode::BadRank, "rank must be between 1 and 8, got " + std::to_string(r));
  return real_line_count(GaloisAction::standard(r, a, b));
}

int bitangent_count(int d) {
  if (d < 0 || d > 4) throw Error(ErrorCode::OutOfRange, "a plane quartic has 0 to 4 outer ovals, got " + std::to_string(d));
  return 4 + 2 * d * (d - 1);
}

// ---------------------------------------------------------------------------

QuarticConfig QuarticConfig::with_ovals(int n) {
  if (n < 0 || n > 4) throw Error(ErrorCode::OutOfRange, "a plane quartic has at most 4 ovals");
  return {Kind::Ovals, n};
}

std::string QuarticConfig::to_string() const {
  return kind == Kind::Nested ? "nested" : "ovals:" + std::to_string(ovals);
}

SexticConfig SexticConfig::one_circle(int ovals) {
  if (ovals < 0 || ovals > 4) throw Error(ErrorCode::OutOfRange, "at most 4 ovals beside the big circle");
  return {Kind::OneCircle, ovals};
}

std::string SexticConfig::to_string() const {
  switch (kind) {
    case Kind::OneCircle: return "one-circle:" + std::to_string(ovals_same_side);
    case Kind::OneCircleSplit11: return "split-1-1";
    case Kind::ThreeCircles: return "three-circles";
  }
  return "?";
}

namespace {

int parse_small_count(std::string_view digits, std::string_view whole) {
  if (digits.size() != 1 || !std::isdigit(static_cast<unsigned char>(digits[0]))) {
    throw Error(ErrorCode::ParseError, "bad configuration '" + std::string(whole) + "'");
  }
  return digits[0] - '0';
}

}  // namespace

QuarticConfig parse_quartic_config(std::string_view text) {
  if (text == "nested") return QuarticConfig::nested();
  if (text.substr(0, 6) == "ovals:") return QuarticConfig::with_ovals(parse_small_count(text.substr(6), text));
  throw Error(ErrorCode::ParseError, "bad quartic configuration '" + std::string(text) + "'");
}

SexticConfig parse_sextic_config(std::string_view text) {
  if (text == "split-1-1") return SexticConfig::split_one_one();
  if (text == "three-circles") return SexticConfig::three_circles();
  if (text.substr(0, 11) == "one-circle:") return SexticConfig::one_circle(parse_small_count(text.substr(11), text));
  throw Error(ErrorCode::ParseError, "bad sextic configuration '" + std::string(text) + "'");
}

std::vector<QuarticConfig> all_quartic_configs() {
  std::vector<QuarticConfig> out;
  for (int n = 4; n >= 0; --n) out.push_back(QuarticConfig::with_ovals(n));
  out.push_back(QuarticConfig::nested());
  return out;
}

std::vector<SexticConfig> all_sextic_configs() {
  std::vector<SexticConfig> out;
  for (int n = 4; n >= 0; --n) out.push_back(SexticConfig::one_circle(n));
  out.push_back(SexticConfig::split_one_one());
  out.push_back(SexticConfig::three_circles());
  return out;
}

namespace {

const Component2 kS2 = Component2::sphere();
const Component2 kRP2 = Component2::projective_plane();

Manifold2 spheres(int n) { return Manifold2::copies(kS2, n); }
Manifold2 crosscaps(int k) { return Manifold2::single(Component2::nonorientable(k)); }
Manifold2 with_rp2(const Manifold2& m) { return disjoint_union(Manifold2::single(kRP2), m); }

}  // namespace

DoubleCoverPair dp2_table(const QuarticConfig& config) {
  if (config.kind == QuarticConfig::Kind::Nested) {
    return {Manifold2::single(Component2::torus()), disjoint_union(spheres(1), crosscaps(2))};
  }
  switch (config.ovals) {
    case 4: return {spheres(4), crosscaps(8)};
    case 3: return {spheres(3), crosscaps(6)};
    case 2: return {spheres(2), crosscaps(4)};
    case 1: return {spheres(1), crosscaps(2)};
    case 0: return {Manifold2::empty(), Manifold2::copies(kRP2, 2)};
    default: break;
  }
  throw Error(ErrorCode::OutOfRange, "a plane quartic has at most 4 ovals");
}

DoubleCoverPair dp1_table(const SexticConfig& config) {
  switch (config.kind) {
    case SexticConfig::Kind::OneCircleSplit11: {
      // Symmetric case: f has no preferred sign.
      Manifold2 m = disjoint_union(crosscaps(3), spheres(1));
      return {m, m};
    }
    case SexticConfig::Kind::ThreeCircles: {
      Manifold2 m = with_rp2(crosscaps(2));
      return {m, m};
    }
    case SexticConfig::Kind::OneCircle: break;
  }
  switch (config.ovals_same_side) {
    case 4: return {with_rp2(spheres(4)), crosscaps(9)};
    case 3: return {with_rp2(spheres(3)), crosscaps(7)};
    case 2: return {with_rp2(spheres(2)), crosscaps(5)};
    case 1: return {with_rp2(spheres(1)), crosscaps(3)};
    case 0: return {Manifold2::single(kRP2), Manifold2::single(kRP2)};
    default: break;
  }
  throw Error(ErrorCode::OutOfRange, "at most 4 ovals beside the big circle");
}

namespace {

// Distinct real loci over all rows, plus-side first, in row order.
template <typename Config>
std::vector<DelPezzoType> distinct_outputs(const std::vector<Config>& configs, DoubleCoverPair (*table)(const Config&)) {
  std::vector<Manifold2> seen;
  for (const auto& c : configs) {
    DoubleCoverPair row = table(c);
    for (const Manifold2& m : {row.f_plus, row.f_minus}) {
      if (std::find(seen.begin(), seen.end(), m) == seen.end()) seen.push_back(m);
    }
  }
  std::vector<DelPezzoType> out;
  for (auto& m : seen) out.push_back({std::move(m), 1, ""});
  return out;
}

std::vector<DelPezzoType> plain(std::vector<Manifold2> types) {
  std::vector<DelPezzoType> out;
  for (auto& m : types) out.push_back({std::move(m), 1, ""});
  return out;
}

}  // namespace

std::vector<DelPezzoType> dp_types(int degree) {
  const Manifold2 torus = Manifold2::single(Component2::torus());
  switch (degree) {
    case 9: return plain({Manifold2::single(kRP2)});
    case 8: {
      auto out = plain({spheres(1), torus, crosscaps(2), Manifold2::empty()});
      out[3].family_count = 2;
      out[3].notes = "two families: Q40 and Q30xP1";
      return out;
    }
    case 7: return plain({Manifold2::single(kRP2), crosscaps(3)});
    case 6: return plain({spheres(1), torus, crosscaps(2), crosscaps(4), Manifold2::empty()});
    case 5: return plain({Manifold2::single(kRP2), crosscaps(3), crosscaps(5)});
    case 4: {
      auto out = plain({spheres(1), torus, crosscaps(2), crosscaps(4), Manifold2::empty(), spheres(2)});
      out[5].notes = "monodromy interchanges the two components";
      return out;
    }
    case 3: return plain({Manifold2::single(kRP2), crosscaps(3), crosscaps(5), crosscaps(7), with_rp2(spheres(1))});
    case 2: return distinct_outputs(all_quartic_configs(), &dp2_table);
    case 1: return distinct_outputs(all_sextic_configs(), &dp1_table);
    default: break;
  }
  throw Error(ErrorCode::OutOfRange, "Del Pezzo degree must be between 1 and 9, got " + std::to_string(degree));
}

}  // namespace realsurf
