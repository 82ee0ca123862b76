#include "realsurf/quadform.hpp"

#include <algorithm>
#include <stdexcept>

#include "realsurf/error.hpp"

namespace realsurf {

SquarefreeSplit squarefree_split(const Integer& a) {
  if (sgn(a) == 0) throw Error(ErrorCode::InvalidArgument, "0 has no squarefree kernel");
  Integer rest = abs(a);
  Integer root = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      root *= p;
    }
  }
  return {sgn(a) < 0 ? Integer(-rest) : rest, root};
}

QuadExtElem::QuadExtElem(Rational p, Rational q, const Integer& a) : p_(std::move(p)), q_(std::move(q)) {
  SquarefreeSplit split = squarefree_split(a);
  if (split.kernel == 1) throw Error(ErrorCode::InvalidArgument, "a must not be a perfect square");
  a_ = split.kernel;
  p_.canonicalize();
  q_ *= split.root;
  q_.canonicalize();
}

namespace {

void require_same_field(const QuadExtElem& x, const QuadExtElem& y) {
  if (x.a() != y.a()) throw Error(ErrorCode::InvalidArgument, "elements of different quadratic fields");
}

}  // namespace

QuadExtElem QuadExtElem::operator+(const QuadExtElem& o) const {
  require_same_field(*this, o);
  return {p_ + o.p_, q_ + o.q_, a_};
}

QuadExtElem QuadExtElem::operator-(const QuadExtElem& o) const {
  require_same_field(*this, o);
  return {p_ - o.p_, q_ - o.q_, a_};
}

QuadExtElem QuadExtElem::operator*(const QuadExtElem& o) const {
  require_same_field(*this, o);
  return {p_ * o.p_ + a_ * q_ * o.q_, p_ * o.q_ + q_ * o.p_, a_};
}

std::string QuadExtElem::to_string() const {
  return realsurf::to_string(p_) + " + " + realsurf::to_string(q_) + "*sqrt(" + a_.get_str() + ")";
}

DiagForm::DiagForm(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  for (auto& c : c_) {
    if (sgn(c) == 0) throw Error(ErrorCode::InvalidArgument, "diagonal form coefficients must be nonzero");
    c.canonicalize();
  }
}

Rational DiagForm::determinant() const {
  Rational d = 1;
  for (const auto& c : c_) d *= c;
  return d;
}

Rational DiagForm::bilinear(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  if (x.size() != c_.size() || y.size() != c_.size()) {
    throw Error(ErrorCode::LengthMismatch, "vector length does not match the form");
  }
  Rational out = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) out += c_[i] * x[i] * y[i];
  return out;
}

Rational DiagForm::operator()(const std::vector<Rational>& x) const { return bilinear(x, x); }

std::string DiagForm::to_string() const {
  std::string out = "diag(";
  for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? ", " : "") + realsurf::to_string(c_[i]);
  return out + ")";
}

QuadExtElem eval(const DiagForm& form, const std::vector<QuadExtElem>& v) {
  if (v.size() != form.dimension()) {
    throw Error(ErrorCode::LengthMismatch, "vector has " + std::to_string(v.size()) + " entries, form has dimension " +
                                               std::to_string(form.dimension()));
  }
  if (v.empty()) throw Error(ErrorCode::InvalidArgument, "cannot evaluate on an empty vector");
  QuadExtElem out = QuadExtElem::rational(0, v.front().a());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out = out + QuadExtElem::rational(form.coefficients()[i], v[i].a()) * v[i] * v[i];
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool is_zero(const std::vector<Rational>& x) {
  for (const auto& c : x) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

// x and y span a plane.
bool independent(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] * y[j] != x[j] * y[i]) return true;
    }
  }
  return false;
}

// Basis of {x : rows * x = 0}, one vector per free column with that
// coordinate 1.
std::vector<std::vector<Rational>> null_space(RationalMatrix rows, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && sgn(rows[p][col]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    Rational inv = 1 / rows[rank][col];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || sgn(rows[i][col]) == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] -= f * rows[rank][k];
    }
    pivots.push_back(col);
    ++rank;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> x(n, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

void axpy(std::vector<Rational>& y, const Rational& a, const std::vector<Rational>& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

// Orthogonal basis of span(w) for the form, which must be nondegenerate on
// that span. The pivot is the first vector of nonzero norm; if all norms
// vanish, the first vector is replaced by its sum with the first vector it
// pairs with nontrivially.
std::vector<std::vector<Rational>> orthogonalize(const DiagForm& form, std::vector<std::vector<Rational>> w) {
  std::vector<std::vector<Rational>> out;
  while (!w.empty()) {
    std::size_t pivot = 0;
    while (pivot < w.size() && sgn(form(w[pivot])) == 0) ++pivot;
    if (pivot == w.size()) {
      std::size_t partner = 1;
      while (partner < w.size() && sgn(form.bilinear(w[0], w[partner])) == 0) ++partner;
      if (partner == w.size()) throw Error(ErrorCode::SingularRestriction, "form is degenerate on the complement");
      axpy(w[0], 1, w[partner]);
      pivot = 0;
    }
    std::vector<Rational> p = w[pivot];
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(pivot));
    Rational norm = form(p);
    for (auto& x : w) axpy(x, -form.bilinear(x, p) / norm, p);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

RationalMatrix transpose_times_diag_times(const RationalMatrix& t, const DiagForm& form) {
  std::size_t n = form.dimension();
  std::size_t cols = t.empty() ? 0 : t.front().size();
  RationalMatrix out(cols, std::vector<Rational>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t k = 0; k < n; ++k) out[i][j] += t[k][i] * form.coefficients()[k] * t[k][j];
    }
  }
  return out;
}

Split split_witness(const DiagForm& form, const Integer& a, const std::vector<QuadExtElem>& v) {
  std::size_t n = form.dimension();
  if (v.size() != n) throw Error(ErrorCode::LengthMismatch, "witness length does not match the form");
  Integer field = squarefree_split(a).kernel;
  if (field == 1) throw Error(ErrorCode::InvalidArgument, "a must not be a perfect square");
  for (const auto& x : v) {
    if (x.a() != field) throw Error(ErrorCode::InvalidArgument, "witness lies in a different quadratic field");
  }
  if (!eval(form, v).is_zero()) throw Error(ErrorCode::NotAWitness, "Q(v) is not zero");

  std::vector<Rational> r(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = v[i].p();
    s[i] = v[i].q();
  }
  if (is_zero(s) || !independent(r, s)) {
    throw Error(ErrorCode::DegenerateWitness, "v and its conjugate are linearly dependent");
  }
  Rational b = form(s);
  if (sgn(b) == 0) throw Error(ErrorCode::SingularRestriction, "Q vanishes on span{r, s}, so Q is isotropic over Q");

  RationalMatrix constraints(2, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    constraints[0][i] = form.coefficients()[i] * s[i];
    constraints[1][i] = form.coefficients()[i] * r[i];
  }
  auto complement = orthogonalize(form, null_space(constraints, n));

  std::vector<std::vector<Rational>> columns{s, r};
  std::vector<Rational> q_prime;
  for (auto& w : complement) {
    q_prime.push_back(form(w));
    columns.push_back(std::move(w));
  }
  RationalMatrix t(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) t[i][j] = columns[j][i];
  }

  Split out{b, DiagForm(q_prime), std::move(t)};
  std::vector<Rational> expected{b, -field * b};
  expected.insert(expected.end(), q_prime.begin(), q_prime.end());
  RationalMatrix gram = transpose_times_diag_times(out.basis_change, form);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (gram[i][j] != (i == j ? expected[i] : Rational(0))) throw std::logic_error("split congruence check failed");
    }
  }
  return out;
}

std::optional<std::vector<Rational>> small_isotropic_vector(const DiagForm& form, long bound) {
  std::size_t n = form.dimension();
  if (n == 0) return std::nullopt;
  const auto& c = form.coefficients();
  std::vector<long> x(n - 1, -bound);
  while (true) {
    Rational partial = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) partial += c[i] * x[i] * x[i];
    // c_last y^2 = -partial
    Rational y2 = -partial / c[n - 1];
    bool nonzero_prefix = false;
    for (long xi : x) nonzero_prefix = nonzero_prefix || xi != 0;
    if (sgn(y2) > 0 || (sgn(y2) == 0 && nonzero_prefix)) {
      if (mpz_perfect_square_p(y2.get_num_mpz_t()) && mpz_perfect_square_p(y2.get_den_mpz_t())) {
        Rational y(sqrt(y2.get_num()), sqrt(y2.get_den()));
        y.canonicalize();
        std::vector<Rational> out;
        for (long xi : x) out.emplace_back(xi);
        out.push_back(y);
        return out;
      }
    }
    std::size_t i = 0;
    while (i < x.size() && x[i] == bound) x[i++] = -bound;
    if (i == x.size()) break;
    ++x[i];
  }
  return std::nullopt;
}

}  // namespace realsurf
