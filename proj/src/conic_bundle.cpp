#include "realsurf/conic_bundle.hpp"

#include <algorithm>
#include <map>

#include "realsurf/error.hpp"

namespace realsurf {

namespace {

bool strictly_before(const IsolatedRoot& a, const IsolatedRoot& b) {
  if (a.is_exact() && b.is_exact()) return a.value() < b.value();
  return a.upper() <= b.lower();
}

}  // namespace

ConicBundleNF::ConicBundleNF(int sign, std::vector<IsolatedRoot> roots)
    : sign_(sign), roots_(std::move(roots)) {
  if (sign_ != 1 && sign_ != -1) throw Error(ErrorCode::InvalidArgument, "normal form sign must be +1 or -1");
  if (roots_.size() % 2 != 0) throw Error(ErrorCode::InvalidArgument, "normal form needs an even number of roots");
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i].multiplicity() != 1) throw Error(ErrorCode::InvalidArgument, "normal form roots must be simple");
    if (i > 0 && !strictly_before(roots_[i - 1], roots_[i])) {
      throw Error(ErrorCode::InvalidArgument, "normal form roots must be distinct and increasing");
    }
  }
}

ConicBundleNF ConicBundleNF::from_rational_roots(int sign, std::vector<Rational> roots) {
  std::sort(roots.begin(), roots.end());
  std::vector<IsolatedRoot> out;
  out.reserve(roots.size());
  for (auto& r : roots) out.push_back(IsolatedRoot::exact(std::move(r)));
  return ConicBundleNF(sign, std::move(out));
}

bool ConicBundleNF::has_rational_roots() const {
  return std::all_of(roots_.begin(), roots_.end(), [](const IsolatedRoot& r) { return r.is_exact(); });
}

std::vector<Rational> ConicBundleNF::rational_roots() const {
  std::vector<Rational> out;
  out.reserve(roots_.size());
  for (const auto& r : roots_) out.push_back(r.value());
  return out;
}

int ConicBundleNF::sign_at(const ProjPoint& z) const {
  if (z.is_infinity()) return sign_;
  int s = sign_;
  for (const auto& r : roots_) s *= -r.compare(z.value());
  return s;
}

Polynomial ConicBundleNF::expanded() const {
  auto roots = rational_roots();
  return Polynomial::from_roots(roots) * Rational(sign_);
}

std::string ConicBundleNF::to_string() const {
  std::string out = sign_ > 0 ? "+" : "-";
  out += " prod(z - a) over {";
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (i > 0) out += ", ";
    out += roots_[i].to_string();
  }
  return out + "}";
}

bool operator==(const ConicBundleNF& a, const ConicBundleNF& b) {
  return a.sign_ == b.sign_ && a.roots_ == b.roots_;
}

// ---------------------------------------------------------------------------

namespace {

// Root a - t, then 1 / (a - t). Requires a != t.
IsolatedRoot invert_about(const IsolatedRoot& root, const Rational& t) {
  if (root.is_exact()) return IsolatedRoot::exact(1 / (root.value() - t));
  IsolatedRoot away = root.excluding(t);
  const auto& iv = away.interval();
  Polynomial shifted = iv.poly.shifted(t);
  return IsolatedRoot::isolated(1 / (iv.hi - t), 1 / (iv.lo - t), shifted.reversed().primitive());
}

Integer smallest_integer_above(const IsolatedRoot& root) {
  if (root.is_exact()) return floor(root.value()) + 1;
  Integer n = floor(root.lower()) + 1;
  while (root.compare(Rational(n)) > 0) n += 1;
  return n;
}

// Smallest integer strictly greater than every root in the (nonempty) list
// and than lower_limit, if given.
Rational integer_above(const std::vector<IsolatedRoot>& roots, const std::optional<Integer>& lower_limit) {
  Integer best = lower_limit ? *lower_limit + 1 : smallest_integer_above(roots.front());
  for (const auto& r : roots) {
    Integer candidate = smallest_integer_above(r);
    if (candidate > best) best = candidate;
  }
  return Rational(best);
}

int sign_of_quotient_at(const ConicBundleInput& g, const Rational& x) {
  return g.numerator.sign_at(x) * g.denominator.sign_at(x);
}

}  // namespace

ConicBundleNF normalize(const ConicBundleInput& input) { return normalize_with_base_change(input).form; }

Normalization normalize_with_base_change(const ConicBundleInput& input) {
  if (input.numerator.is_zero() || input.denominator.is_zero()) {
    throw Error(ErrorCode::ZeroFunction, "g must be a nonzero rational function");
  }
  // Multiplying by the square of the denominator leaves the same sign chart.
  Polynomial g = input.numerator * input.denominator;

  // Even-multiplicity factors are squares and are divided out of the
  // equation; the odd part is squarefree.
  Polynomial odd = Polynomial::constant(1);
  for (const auto& [factor, multiplicity] : squarefree_decomposition(g)) {
    if (multiplicity % 2 == 1) odd *= factor;
  }

  // Factors of the odd part without real roots are positive definite,
  // (z - u)^2 + v^2, and are absorbed by the two-squares identity. What
  // remains is the real-root part, plus a leading constant whose absolute
  // value is scaled into x and y.
  std::vector<IsolatedRoot> roots = odd.is_constant() ? std::vector<IsolatedRoot>{} : isolate_real_roots(odd);
  std::vector<IsolatedRoot> all_roots = isolate_real_roots(g);

  if (roots.size() % 2 == 0) {
    Rational z0 = all_roots.empty() ? Rational(0) : integer_above(all_roots, std::nullopt);
    // prod (z0 - a_i) > 0 since z0 exceeds every root.
    return {ConicBundleNF(sign_of_quotient_at(input, z0), std::move(roots)), MoebiusMap::identity()};
  }

  // Odd number of real roots: move a non-root to 0, then z -> 1/(z - t)
  // sends the point at infinity to a new root at 0.
  Integer t = 0;
  auto is_root = [&](const Integer& x) {
    return std::any_of(roots.begin(), roots.end(), [&](const IsolatedRoot& r) { return r.compare(Rational(x)) == 0; });
  };
  while (is_root(t)) t += 1;
  Rational shift(t);

  std::vector<IsolatedRoot> inverted;
  inverted.reserve(roots.size() + 1);
  for (const auto& r : roots) inverted.push_back(invert_about(r, shift));
  inverted.push_back(IsolatedRoot::exact(Rational(0)));
  std::sort(inverted.begin(), inverted.end(), ordered_before);

  Rational z0 = integer_above(all_roots, Integer(t));
  Rational z0_image = 1 / (z0 - shift);
  ConicBundleNF unsigned_form(1, std::move(inverted));
  int sign = sign_of_quotient_at(input, z0) * unsigned_form.sign_at(ProjPoint::finite(z0_image));
  return {ConicBundleNF(sign, unsigned_form.roots()), MoebiusMap(0, 1, 1, -shift)};
}

IntervalSet interval_set(const ConicBundleNF& nf) {
  if (nf.m() == 0) return nf.sign() > 0 ? IntervalSet::full() : IntervalSet::empty();
  auto a = nf.rational_roots();
  std::size_t n = a.size();
  std::vector<Arc> arcs;
  // The product is positive beyond the last root, so with sign + the arcs
  // are [a_2k, a_2k+1] cyclically, and with sign - they are [a_2k-1, a_2k].
  std::size_t offset = nf.sign() > 0 ? n - 1 : 0;
  for (std::size_t k = 0; k < n / 2; ++k) {
    std::size_t s = (offset + 2 * k) % n;
    arcs.push_back({ProjPoint::finite(a[s]), ProjPoint::finite(a[(s + 1) % n])});
  }
  return IntervalSet::from_arcs(std::move(arcs));
}

int k_squared(int m, int base_genus) {
  if (m < 0 || base_genus < 0) throw Error(ErrorCode::InvalidArgument, "m and genus must be nonnegative");
  return 8 * (1 - base_genus) - 2 * m;
}

Manifold2 topology(const ConicBundleNF& nf) {
  if (nf.m() >= 1) return Manifold2::copies(Component2::sphere(), nf.m());
  // No singular fibers: an S^1-bundle over the circle, represented by the
  // torus; the Klein bottle has the same invariant.
  if (nf.sign() > 0) return Manifold2::single(Component2::torus());
  return Manifold2::empty();
}

// ---------------------------------------------------------------------------

namespace {

ProjPoint interior_point(const Arc& arc) {
  const Rational& s = arc.start.value();
  const Rational& e = arc.end.value();
  return ProjPoint::finite(s < e ? Rational((s + e) / 2) : Rational(s + 1));
}

std::optional<FibrationWitness> try_map(const MoebiusMap& map, const std::vector<Rational>& source,
                                        const std::map<Rational, std::size_t>& target_index,
                                        int source_sign, int target_sign) {
  FibrationWitness w{map, std::vector<std::size_t>(source.size())};
  int product_sign = 1;
  for (std::size_t i = 0; i < source.size(); ++i) {
    Rational den = map.denominator_at(source[i]);
    if (sgn(den) == 0) return std::nullopt;
    product_sign *= sgn(den);
    auto it = target_index.find(map.apply(ProjPoint::finite(source[i])).value());
    if (it == target_index.end()) return std::nullopt;
    w.permutation[i] = it->second;
  }
  if (target_sign != source_sign * product_sign) return std::nullopt;
  return w;
}

}  // namespace

std::optional<FibrationWitness> fibration_equivalent(const ConicBundleNF& first, const ConicBundleNF& second) {
  if (first.m() != second.m()) return std::nullopt;
  if (first.m() == 0) {
    if (first.sign() != second.sign()) return std::nullopt;
    return FibrationWitness{MoebiusMap::identity(), {}};
  }
  auto a = first.rational_roots();
  auto b = second.rational_roots();
  std::map<Rational, std::size_t> index;
  for (std::size_t j = 0; j < b.size(); ++j) index.emplace(b[j], j);

  if (first.m() == 1) {
    // Any arc maps onto any other arc: match endpoints and one interior point.
    Arc from = interval_set(first).arcs().front();
    Arc to = interval_set(second).arcs().front();
    MoebiusMap map = MoebiusMap::from_three_points({from.start, from.end, interior_point(from)},
                                                   {to.start, to.end, interior_point(to)});
    return try_map(map, a, index, first.sign(), second.sign());
  }

  const std::array<ProjPoint, 3> sources{ProjPoint::finite(a[0]), ProjPoint::finite(a[1]), ProjPoint::finite(a[2])};
  for (std::size_t j1 = 0; j1 < b.size(); ++j1) {
    for (std::size_t j2 = 0; j2 < b.size(); ++j2) {
      if (j2 == j1) continue;
      for (std::size_t j3 = 0; j3 < b.size(); ++j3) {
        if (j3 == j1 || j3 == j2) continue;
        MoebiusMap map = MoebiusMap::from_three_points(
            sources, {ProjPoint::finite(b[j1]), ProjPoint::finite(b[j2]), ProjPoint::finite(b[j3])});
        if (auto w = try_map(map, a, index, first.sign(), second.sign())) return w;
      }
    }
  }
  return std::nullopt;
}

bool verify_witness(const ConicBundleNF& first, const ConicBundleNF& second, const FibrationWitness& witness) {
  if (first.m() != second.m()) return false;
  if (witness.permutation.size() != first.roots().size()) return false;
  auto a = first.rational_roots();
  auto b = second.rational_roots();
  std::vector<bool> hit(b.size(), false);
  int product_sign = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t j = witness.permutation[i];
    if (j >= b.size() || hit[j]) return false;
    hit[j] = true;
    ProjPoint image = witness.map.apply(ProjPoint::finite(a[i]));
    if (image != ProjPoint::finite(b[j])) return false;
    product_sign *= sgn(witness.map.denominator_at(a[i]));
  }
  return second.sign() == first.sign() * product_sign;
}

FibrationWitness compose(const FibrationWitness& second_to_third, const FibrationWitness& first_to_second) {
  FibrationWitness out{second_to_third.map.compose(first_to_second.map),
                       std::vector<std::size_t>(first_to_second.permutation.size())};
  for (std::size_t i = 0; i < out.permutation.size(); ++i) {
    out.permutation[i] = second_to_third.permutation.at(first_to_second.permutation[i]);
  }
  return out;
}

bool surface_equivalent(const ConicBundleNF& first, const ConicBundleNF& second) {
  // The number of real components is a birational invariant.
  if (first.m() != second.m()) return false;
  if (first.m() == 0) return first.sign() == second.sign();
  // One class each for 2 and 4 singular fibers.
  if (first.m() <= 2) return true;
  // K^2 <= 2: birational surfaces carry birational fibrations.
  return fibration_equivalent(first, second).has_value();
}

ConicBundleNF transport(const ConicBundleNF& nf, const MoebiusMap& map) {
  auto a = nf.rational_roots();
  std::vector<Rational> images;
  images.reserve(a.size());
  int product_sign = 1;
  for (const auto& x : a) {
    Rational den = map.denominator_at(x);
    if (sgn(den) == 0) throw Error(ErrorCode::InvalidArgument, "a root maps to infinity");
    product_sign *= sgn(den);
    images.push_back(map.apply(ProjPoint::finite(x)).value());
  }
  return ConicBundleNF::from_rational_roots(nf.sign() * product_sign, std::move(images));
}

}  // namespace realsurf
