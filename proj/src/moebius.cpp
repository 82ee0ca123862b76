#include "realsurf/moebius.hpp"

#include <algorithm>

#include "realsurf/error.hpp"

namespace realsurf {

const Rational& ProjPoint::value() const {
  if (!value_) throw Error(ErrorCode::InvalidArgument, "point at infinity has no affine value");
  return *value_;
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  if (a.is_infinity()) return false;
  if (b.is_infinity()) return true;
  return a.value() < b.value();
}

std::string ProjPoint::to_string() const { return is_infinity() ? "inf" : realsurf::to_string(*value_); }

ProjPoint parse_proj_point(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return ProjPoint::infinity();
  return ProjPoint::finite(parse_rational(text));
}

// ---------------------------------------------------------------------------

bool arc_contains(const Arc& arc, const ProjPoint& x) {
  const auto& s = arc.start;
  const auto& e = arc.end;
  if (x == s || x == e) return true;
  if (x.is_infinity()) return e < s;  // wraps through infinity
  if (s < e) return s < x && x < e;
  return s < x || x < e;
}

IntervalSet IntervalSet::from_arcs(std::vector<Arc> arcs) {
  if (arcs.empty()) return empty();
  for (const auto& a : arcs) {
    if (a.start == a.end) throw Error(ErrorCode::InvalidArgument, "degenerate arc");
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.start < b.start; });
  // Boundary points listed in arc order must wind once around the circle:
  // strictly increasing except for a single wrap.
  std::vector<ProjPoint> boundary;
  for (const auto& a : arcs) {
    boundary.push_back(a.start);
    boundary.push_back(a.end);
  }
  int descents = 0;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    const auto& cur = boundary[i];
    const auto& next = boundary[(i + 1) % boundary.size()];
    if (cur == next) throw Error(ErrorCode::InvalidArgument, "arcs are not disjoint");
    if (next < cur) ++descents;
  }
  if (descents != 1) throw Error(ErrorCode::InvalidArgument, "arcs are not disjoint");
  return IntervalSet(Kind::Arcs, std::move(arcs));
}

std::size_t IntervalSet::component_count() const {
  switch (kind_) {
    case Kind::Empty: return 0;
    case Kind::Full: return 1;
    case Kind::Arcs: return arcs_.size();
  }
  return 0;
}

bool IntervalSet::contains(const ProjPoint& x) const {
  switch (kind_) {
    case Kind::Empty: return false;
    case Kind::Full: return true;
    case Kind::Arcs:
      return std::any_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) { return arc_contains(a, x); });
  }
  return false;
}

std::string IntervalSet::to_string() const {
  if (kind_ == Kind::Empty) return "empty";
  if (kind_ == Kind::Full) return "RP1";
  std::string out;
  for (const auto& a : arcs_) {
    if (!out.empty()) out += " u ";
    out += "[" + a.start.to_string() + ", " + a.end.to_string() + "]";
  }
  return out;
}

// ---------------------------------------------------------------------------

MoebiusMap::MoebiusMap(const Rational& alpha, const Rational& beta, const Rational& gamma,
                       const Rational& delta) {
  std::array<Rational, 4> r{alpha, beta, gamma, delta};
  Integer den_lcm = 1;
  for (auto& x : r) {
    x.canonicalize();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  Integer content = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    m_[i] = r[i].get_num() * (den_lcm / r[i].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), m_[i].get_mpz_t());
  }
  if (sgn(determinant()) == 0) throw Error(ErrorCode::InvalidArgument, "singular Moebius matrix");
  auto first = std::find_if(m_.begin(), m_.end(), [](const Integer& x) { return sgn(x) != 0; });
  if (sgn(*first) < 0) content = -content;
  for (auto& x : m_) x /= content;
}

ProjPoint MoebiusMap::apply(const ProjPoint& p) const {
  if (p.is_infinity()) {
    if (sgn(gamma()) == 0) return ProjPoint::infinity();
    return ProjPoint::finite(ratio(alpha(), gamma()));
  }
  const Rational& x = p.value();
  Rational den = denominator_at(x);
  if (sgn(den) == 0) return ProjPoint::infinity();
  return ProjPoint::finite((Rational(alpha()) * x + Rational(beta())) / den);
}

Rational MoebiusMap::denominator_at(const Rational& x) const {
  return Rational(gamma()) * x + Rational(delta());
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& o) const {
  return MoebiusMap(alpha() * o.alpha() + beta() * o.gamma(), alpha() * o.beta() + beta() * o.delta(),
                    gamma() * o.alpha() + delta() * o.gamma(), gamma() * o.beta() + delta() * o.delta());
}

MoebiusMap MoebiusMap::inverse() const { return MoebiusMap(delta(), -beta(), -gamma(), alpha()); }

std::string MoebiusMap::to_string() const {
  return "[[" + alpha().get_str() + ", " + beta().get_str() + "], [" + gamma().get_str() + ", " +
         delta().get_str() + "]]";
}

namespace {

// Map sending p0, p1, p2 to 0, 1, infinity.
MoebiusMap to_standard_frame(const std::array<ProjPoint, 3>& p) {
  if (p[0] == p[1] || p[1] == p[2] || p[0] == p[2]) {
    throw Error(ErrorCode::DegenerateTriple, "three points must be pairwise distinct");
  }
  if (p[0].is_infinity()) {
    // z -> (p1 - p2) / (z - p2)
    return MoebiusMap(0, p[1].value() - p[2].value(), 1, -p[2].value());
  }
  if (p[1].is_infinity()) {
    // z -> (z - p0) / (z - p2)
    return MoebiusMap(1, -p[0].value(), 1, -p[2].value());
  }
  if (p[2].is_infinity()) {
    // z -> (z - p0) / (p1 - p0)
    return MoebiusMap(1, -p[0].value(), 0, p[1].value() - p[0].value());
  }
  const Rational& a = p[0].value();
  const Rational& b = p[1].value();
  const Rational& c = p[2].value();
  return MoebiusMap(b - c, -a * (b - c), b - a, -c * (b - a));
}

}  // namespace

MoebiusMap MoebiusMap::from_three_points(const std::array<ProjPoint, 3>& p,
                                         const std::array<ProjPoint, 3>& q) {
  return to_standard_frame(q).inverse().compose(to_standard_frame(p));
}

Rational cross_ratio(const ProjPoint& z1, const ProjPoint& z2, const ProjPoint& z3, const ProjPoint& z4) {
  if (z1 == z2 || z1 == z3 || z1 == z4) {
    throw Error(ErrorCode::DegenerateTriple, "cross ratio needs four distinct points");
  }
  // to_standard_frame sends (z3, z2, z4) to (0, 1, inf).
  MoebiusMap frame = MoebiusMap::from_three_points(
      {z3, z2, z4}, {ProjPoint::finite(0), ProjPoint::finite(1), ProjPoint::infinity()});
  return frame.apply(z1).value();
}

IntervalSet transport_interval_set(const MoebiusMap& m, const IntervalSet& set) {
  if (set.kind() != IntervalSet::Kind::Arcs) return set;
  std::vector<Arc> out;
  out.reserve(set.arcs().size());
  bool keep = m.preserves_orientation();
  for (const auto& a : set.arcs()) {
    ProjPoint s = m.apply(a.start);
    ProjPoint e = m.apply(a.end);
    out.push_back(keep ? Arc{s, e} : Arc{e, s});
  }
  return IntervalSet::from_arcs(std::move(out));
}

}  // namespace realsurf
