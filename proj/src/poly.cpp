#include "realsurf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "realsurf/error.hpp"

namespace realsurf {

Rational ratio(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto begin = text.find_first_not_of(" \t\n");
  auto end = text.find_last_not_of(" \t\n");
  if (begin == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "empty rational literal");
  }
  std::string s(text.substr(begin, end - begin + 1));
  std::size_t slash_count = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '/') {
      ++slash_count;
    } else if ((ch == '-' || ch == '+') && (i == 0 || s[i - 1] == '/')) {
      // sign allowed at the start of numerator or denominator
    } else if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
    }
  }
  if (slash_count > 1) {
    throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
  }
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    std::string digits = part;
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    Integer value;
    if (digits.empty() || digits == "-" || value.set_str(digits, 10) != 0) {
      throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
    }
    return value;
  };
  Integer num = parse_int(s.substr(0, slash));
  Integer den = slash == std::string::npos ? Integer(1) : parse_int(s.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

int sign(const Rational& value) { return sgn(value); }

Integer floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
  Polynomial out = constant(1);
  for (const auto& r : roots) out *= linear(r);
  return out;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int Polynomial::sign_at(const Rational& x) const { return sgn((*this)(x)); }

int Polynomial::sign_at_infinity(bool positive) const {
  if (is_zero()) return 0;
  int s = sgn(coeffs_.back());
  if (!positive && degree() % 2 == 1) s = -s;
  return s;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial out = *this;
  Rational lc = coeffs_.back();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

Polynomial Polynomial::primitive_same_sign() const {
  if (is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
  }
  Polynomial out = *this;
  Rational scale(den_lcm, content);
  scale.canonicalize();
  for (auto& c : out.coeffs_) c *= scale;
  return out;
}

Polynomial Polynomial::primitive() const {
  Polynomial out = primitive_same_sign();
  if (!out.is_zero() && sgn(out.coeffs_.back()) < 0) out = -out;
  return out;
}

Polynomial Polynomial::shifted(const Rational& t) const {
  Polynomial out;
  Polynomial step = Polynomial({t, Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    out *= step;
    out += constant(*it);
  }
  return out;
}

Polynomial Polynomial::reversed() const {
  std::vector<Rational> out(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1 && i > 0;
    if (!unit) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  std::vector<Rational> rem = a.coefficients();
  int db = b.degree();
  const Rational& lb = b.leading();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] / lb;
    if (q == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.primitive();
  Polynomial y = b.primitive();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial pow(const Polynomial& p, unsigned n) {
  Polynomial out = Polynomial::constant(1);
  for (unsigned i = 0; i < n; ++i) out *= p;
  return out;
}

SquarefreePart squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of zero polynomial");
  Polynomial g = gcd(p, p.derivative());
  if (g.is_zero()) g = Polynomial::constant(1);
  return {exact_div(p, g).monic(), g};
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.is_constant()) return out;
  Polynomial dp = p.derivative();
  Polynomial a0 = gcd(p, dp);
  Polynomial b = exact_div(p, a0);
  Polynomial c = exact_div(dp, a0);
  Polynomial d = c - b.derivative();
  for (int i = 1; !b.is_constant(); ++i) {
    Polynomial a = gcd(b, d);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
    if (!a.is_constant()) out.push_back({a.monic(), i});
  }
  return out;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p.primitive_same_sign());
  Polynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d.primitive_same_sign());
  while (true) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back((-r).primitive_same_sign());
  }
  return seq;
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int sign_variations(std::span<const Polynomial> sequence, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(sequence.size());
  for (const auto& q : sequence) signs.push_back(q.sign_at(x));
  return count_variations(signs);
}

int sign_variations_at_infinity(std::span<const Polynomial> sequence, bool positive) {
  std::vector<int> signs;
  signs.reserve(sequence.size());
  for (const auto& q : sequence) signs.push_back(q.sign_at_infinity(positive));
  return count_variations(signs);
}

int count_roots_between(std::span<const Polynomial> sturm, const Rational& lo, const Rational& hi) {
  return sign_variations(sturm, lo) - sign_variations(sturm, hi);
}

int count_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root count of zero polynomial");
  auto seq = sturm_sequence(p);
  return sign_variations_at_infinity(seq, false) - sign_variations_at_infinity(seq, true);
}

Rational root_bound(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root bound of zero polynomial");
  Rational best = 0;
  const Rational lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational ratio = abs(p.coefficients()[static_cast<std::size_t>(i)]) / lc;
    if (ratio > best) best = ratio;
  }
  // Round up to an integer to keep bisection midpoints small.
  return Rational(ceil(best) + 1);
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "empty interval");
  if (sgn(hi) <= 0) return -simplest_rational_between(-hi, -lo);
  if (sgn(lo) < 0) return Rational(0);
  Integer n = floor(lo);
  if (Rational(n + 1) < hi) return Rational(n + 1);
  Rational base(n);
  if (lo == base) {
    Rational y(floor(1 / (hi - base)) + 1);
    return base + 1 / y;
  }
  return base + 1 / simplest_rational_between(1 / (hi - base), 1 / (lo - base));
}

// ---------------------------------------------------------------------------
// IsolatedRoot

IsolatedRoot IsolatedRoot::exact(Rational value, int multiplicity) {
  value.canonicalize();
  return IsolatedRoot(std::move(value), multiplicity);
}

IsolatedRoot IsolatedRoot::isolated(Rational lo, Rational hi, Polynomial poly, int multiplicity) {
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "isolating interval is empty");
  return IsolatedRoot(Interval{std::move(lo), std::move(hi), std::move(poly)}, multiplicity);
}

const Rational& IsolatedRoot::value() const {
  if (!is_exact()) throw Error(ErrorCode::NonRationalRoot, "root is not rational: " + to_string());
  return std::get<Rational>(repr_);
}

const IsolatedRoot::Interval& IsolatedRoot::interval() const {
  if (is_exact()) throw Error(ErrorCode::InvalidArgument, "root is exact");
  return std::get<Interval>(repr_);
}

const Rational& IsolatedRoot::lower() const {
  return is_exact() ? std::get<Rational>(repr_) : std::get<Interval>(repr_).lo;
}

const Rational& IsolatedRoot::upper() const {
  return is_exact() ? std::get<Rational>(repr_) : std::get<Interval>(repr_).hi;
}

IsolatedRoot IsolatedRoot::with_multiplicity(int multiplicity) const {
  IsolatedRoot out = *this;
  out.multiplicity_ = multiplicity;
  return out;
}

int IsolatedRoot::compare(const Rational& x) const {
  if (is_exact()) return sgn(std::get<Rational>(repr_) - x);
  const auto& iv = std::get<Interval>(repr_);
  if (x <= iv.lo) return 1;
  if (x >= iv.hi) return -1;
  int sx = iv.poly.sign_at(x);
  if (sx == 0) return 0;
  return sx == iv.poly.sign_at(iv.lo) ? 1 : -1;
}

bool IsolatedRoot::contains_in_closure(const Rational& x) const {
  return lower() <= x && x <= upper();
}

IsolatedRoot IsolatedRoot::bisected() const {
  if (is_exact()) return *this;
  const auto& iv = std::get<Interval>(repr_);
  Rational mid = (iv.lo + iv.hi) / 2;
  int smid = iv.poly.sign_at(mid);
  if (smid == 0) return exact(mid, multiplicity_);
  if (smid == iv.poly.sign_at(iv.lo)) return isolated(mid, iv.hi, iv.poly, multiplicity_);
  return isolated(iv.lo, mid, iv.poly, multiplicity_);
}

IsolatedRoot IsolatedRoot::refined(const Rational& width) const {
  IsolatedRoot out = *this;
  while (!out.is_exact() && out.upper() - out.lower() >= width) out = out.bisected();
  return out;
}

IsolatedRoot IsolatedRoot::excluding(const Rational& x) const {
  if (!contains_in_closure(x)) return *this;
  int side = compare(x);
  if (side == 0) throw Error(ErrorCode::InvalidArgument, "cannot exclude the root itself");
  const auto& iv = interval();
  IsolatedRoot out = side > 0 ? isolated(x, iv.hi, iv.poly, multiplicity_)
                              : isolated(iv.lo, x, iv.poly, multiplicity_);
  while (out.contains_in_closure(x)) out = out.bisected();
  return out;
}

bool operator==(const IsolatedRoot& a, const IsolatedRoot& b) {
  if (a.is_exact() && b.is_exact()) return a.value() == b.value();
  if (a.is_exact()) return b.compare(a.value()) == 0;
  if (b.is_exact()) return a.compare(b.value()) == 0;
  const auto& ia = a.interval();
  const auto& ib = b.interval();
  Rational lo = std::max<Rational>(ia.lo, ib.lo);
  Rational hi = std::min<Rational>(ia.hi, ib.hi);
  if (!(lo < hi)) return false;
  Polynomial common = gcd(ia.poly, ib.poly);
  if (common.is_constant()) return false;
  // lo and hi are endpoints of one of the intervals, hence not roots of the
  // common factor.
  auto seq = sturm_sequence(common);
  return count_roots_between(seq, lo, hi) > 0;
}

std::string IsolatedRoot::to_string() const {
  if (is_exact()) return realsurf::to_string(value());
  const auto& iv = interval();
  return "root of " + iv.poly.to_string() + " in (" + realsurf::to_string(iv.lo) + ", " +
         realsurf::to_string(iv.hi) + ")";
}

bool ordered_before(const IsolatedRoot& a, const IsolatedRoot& b) {
  if (a.lower() != b.lower()) return a.lower() < b.lower();
  return a.is_exact() && !b.is_exact();
}

namespace {

void isolate_range(const Polynomial& f, const std::vector<Polynomial>& sturm, const Rational& lo,
                   const Rational& hi, int multiplicity, std::vector<IsolatedRoot>& out) {
  int n = count_roots_between(sturm, lo, hi);
  if (n == 0) return;
  if (n == 1) {
    out.push_back(IsolatedRoot::isolated(lo, hi, f, multiplicity));
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (f.sign_at(mid) == 0) {
    out.push_back(IsolatedRoot::exact(mid, multiplicity));
    Polynomial deflated = exact_div(f, Polynomial::linear(mid));
    auto deflated_sturm = sturm_sequence(deflated);
    isolate_range(deflated, deflated_sturm, lo, mid, multiplicity, out);
    isolate_range(deflated, deflated_sturm, mid, hi, multiplicity, out);
    return;
  }
  isolate_range(f, sturm, lo, mid, multiplicity, out);
  isolate_range(f, sturm, mid, hi, multiplicity, out);
}

// A rational root p/q of a primitive integer polynomial has q | lc. Two
// distinct rationals with denominators at most lc differ by at least 1/lc^2,
// so once the interval is narrower than that, the simplest rational inside is
// the only candidate.
IsolatedRoot detect_rational(const IsolatedRoot& root) {
  if (root.is_exact()) return root;
  Integer lc = abs(root.interval().poly.primitive().leading().get_num());
  Rational width(Integer(1), lc * lc);
  IsolatedRoot narrow = root.refined(width);
  if (narrow.is_exact()) return narrow;
  const auto& iv = narrow.interval();
  Rational candidate = simplest_rational_between(iv.lo, iv.hi);
  if (iv.poly.sign_at(candidate) == 0) return IsolatedRoot::exact(candidate, root.multiplicity());
  return narrow;
}

bool overlaps(const IsolatedRoot& a, const IsolatedRoot& b) {
  if (a.is_exact() && b.is_exact()) return false;
  if (a.is_exact()) return b.lower() < a.value() && a.value() < b.upper();
  if (b.is_exact()) return a.lower() < b.value() && b.value() < a.upper();
  return a.lower() < b.upper() && b.lower() < a.upper();
}

void separate(std::vector<IsolatedRoot>& roots) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        if (!overlaps(roots[i], roots[j])) continue;
        changed = true;
        if (roots[i].is_exact()) {
          roots[j] = roots[j].excluding(roots[i].value());
        } else if (roots[j].is_exact()) {
          roots[i] = roots[i].excluding(roots[j].value());
        } else {
          roots[i] = roots[i].bisected();
          roots[j] = roots[j].bisected();
        }
      }
    }
  }
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root isolation of zero polynomial");
  std::vector<IsolatedRoot> roots;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
    Polynomial f = factor.primitive();
    Rational bound = root_bound(f);
    std::vector<IsolatedRoot> found;
    isolate_range(f, sturm_sequence(f), -bound, bound, multiplicity, found);
    for (auto& r : found) roots.push_back(detect_rational(r));
  }
  separate(roots);
  std::sort(roots.begin(), roots.end(), ordered_before);
  return roots;
}

}  // namespace realsurf
