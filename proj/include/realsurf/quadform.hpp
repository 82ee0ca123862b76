#pragma once

// Diagonal quadratic forms over Q and the splitting of a form that becomes
// isotropic over Q(sqrt a) as b(y0^2 - a y1^2) + Q'(y2, ..., yn).

#include <optional>
#include <string>
#include <vector>

#include "realsurf/poly.hpp"

namespace realsurf {

// p + q sqrt(a), a squarefree, not 0 or 1.
class QuadExtElem {
 public:
  // Any nonsquare a is accepted; square factors move into q.
  QuadExtElem(Rational p, Rational q, const Integer& a);
  static QuadExtElem rational(Rational p, const Integer& a) { return {std::move(p), 0, a}; }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Integer& a() const { return a_; }
  bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
  QuadExtElem conjugate() const { return {p_, -q_, a_}; }

  QuadExtElem operator+(const QuadExtElem& o) const;
  QuadExtElem operator-(const QuadExtElem& o) const;
  QuadExtElem operator*(const QuadExtElem& o) const;
  friend bool operator==(const QuadExtElem&, const QuadExtElem&) = default;

  std::string to_string() const;

 private:
  Rational p_;
  Rational q_;
  Integer a_;
};

struct SquarefreeSplit {
  Integer kernel;  // squarefree
  Integer root;    // a = kernel * root^2, root > 0
};
SquarefreeSplit squarefree_split(const Integer& a);

class DiagForm {
 public:
  DiagForm() = default;
  explicit DiagForm(std::vector<Rational> coefficients);  // all nonzero

  const std::vector<Rational>& coefficients() const { return c_; }
  std::size_t dimension() const { return c_.size(); }
  Rational determinant() const;
  Rational operator()(const std::vector<Rational>& x) const;
  Rational bilinear(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

  friend bool operator==(const DiagForm&, const DiagForm&) = default;
  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

QuadExtElem eval(const DiagForm& form, const std::vector<QuadExtElem>& v);

// Row-major; column j of a basis change is the j-th new basis vector.
using RationalMatrix = std::vector<std::vector<Rational>>;

struct Split {
  Rational b;
  DiagForm q_prime;
  // Columns s, r, then a diagonalizing basis of the orthogonal complement of
  // span{r, s}; T^t diag(Q) T = diag(b, -ab, Q').
  RationalMatrix basis_change;
};

// v = r + s sqrt(a) with Q(v) = 0. Throws NotAWitness, DegenerateWitness,
// SingularRestriction.
Split split_witness(const DiagForm& form, const Integer& a, const std::vector<QuadExtElem>& v);

RationalMatrix transpose_times_diag_times(const RationalMatrix& t, const DiagForm& form);

// Nonzero vector on which the form vanishes, with the first n - 1
// coordinates integers in [-bound, bound], if one exists.
std::optional<std::vector<Rational>> small_isotropic_vector(const DiagForm& form, long bound = 50);

}  // namespace realsurf
