#pragma once

// Exact univariate polynomials over the rationals, squarefree splitting and
// Sturm-sequence real root isolation.

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace realsurf {

// GMP keeps mpq_class canonical (reduced, positive denominator) as long as
// values are built through arithmetic or parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view text);
// num / den in lowest terms; den must be nonzero.
Rational ratio(const Integer& num, const Integer& den);
std::string to_string(const Rational& value);
int sign(const Rational& value);
Integer floor(const Rational& value);
Integer ceil(const Rational& value);

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  static Polynomial constant(const Rational& c);
  // z - a
  static Polynomial linear(const Rational& root);
  static Polynomial from_roots(std::span<const Rational> roots);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const;
  // Sign of p(x) as x -> +inf (positive = true) or -inf.
  int sign_at_infinity(bool positive) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  // Integer coefficients with content 1 and positive leading coefficient.
  Polynomial primitive() const;
  // Integer coefficients with content 1, obtained by a positive scaling, so
  // signs of values are preserved.
  Polynomial primitive_same_sign() const;
  // p(z + t)
  Polynomial shifted(const Rational& t) const;
  // z^deg * p(1/z)
  Polynomial reversed() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
// Exact division; throws if b does not divide a.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& p, unsigned n);

struct SquarefreePart {
  Polynomial squarefree;     // monic radical p / gcd(p, p')
  Polynomial square_factor;  // monic gcd(p, p')
};

SquarefreePart squarefree_part(const Polynomial& p);

struct SquarefreeFactor {
  Polynomial factor;  // monic, squarefree, pairwise coprime across the list
  int multiplicity;
};

// Yun decomposition p = lc(p) * prod factor^multiplicity, nonconstant factors
// only, ascending multiplicity.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p);

std::vector<Polynomial> sturm_sequence(const Polynomial& p);
int sign_variations(std::span<const Polynomial> sequence, const Rational& x);
int sign_variations_at_infinity(std::span<const Polynomial> sequence, bool positive);
// Distinct real roots of p in the open interval (lo, hi); lo, hi must not be
// roots of p.
int count_roots_between(std::span<const Polynomial> sturm, const Rational& lo,
                        const Rational& hi);
// Distinct real roots of p.
int count_real_roots(const Polynomial& p);

// Strictly positive bound exceeding the absolute value of every root.
Rational root_bound(const Polynomial& p);

// The rational with least denominator in the open interval (lo, hi), lo < hi.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

class IsolatedRoot {
 public:
  struct Interval {
    Rational lo;
    Rational hi;
    Polynomial poly;  // squarefree, exactly one root in (lo, hi)
  };

  static IsolatedRoot exact(Rational value, int multiplicity = 1);
  static IsolatedRoot isolated(Rational lo, Rational hi, Polynomial poly,
                               int multiplicity = 1);

  bool is_exact() const { return std::holds_alternative<Rational>(repr_); }
  const Rational& value() const;        // exact roots only
  const Interval& interval() const;     // isolated roots only
  const Rational& lower() const;
  const Rational& upper() const;
  int multiplicity() const { return multiplicity_; }
  IsolatedRoot with_multiplicity(int multiplicity) const;

  // sign(root - x), exact.
  int compare(const Rational& x) const;
  bool contains_in_closure(const Rational& x) const;
  IsolatedRoot bisected() const;
  // Shrinks an isolating interval until hi - lo < width.
  IsolatedRoot refined(const Rational& width) const;
  // Shrinks an isolating interval so that x is not inside its closure.
  // Requires x not equal to the root.
  IsolatedRoot excluding(const Rational& x) const;

  // Root value equality (not representation equality).
  friend bool operator==(const IsolatedRoot& a, const IsolatedRoot& b);

  std::string to_string() const;

 private:
  IsolatedRoot(std::variant<Rational, Interval> repr, int multiplicity)
      : repr_(std::move(repr)), multiplicity_(multiplicity) {}

  std::variant<Rational, Interval> repr_;
  int multiplicity_ = 1;
};

// Every real root exactly once, ascending; rational roots reported exactly;
// multiplicities from the squarefree decomposition; intervals pairwise
// disjoint and disjoint from the exact roots.
std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& p);

// Strict ordering for root lists whose representations are already disjoint.
bool ordered_before(const IsolatedRoot& a, const IsolatedRoot& b);

}  // namespace realsurf
