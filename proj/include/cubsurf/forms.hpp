#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cubsurf/matrix.hpp"
#include "cubsurf/rational.hpp"
#include "cubsurf/unipoly.hpp"

namespace cubsurf {


// Linear form sum c_i x_i.
struct LinForm {
  Vec c;

  LinForm() = default;
  explicit LinForm(Vec coeffs) : c(std::move(coeffs)) {}
  static LinForm coordinate(std::size_t n, std::size_t i);

  std::size_t n() const { return c.size(); }
  bool is_zero() const;
  Rational operator()(const Vec& x) const;
  // Integer, coprime coefficients, first nonzero positive.
  LinForm primitive() const;
  friend bool operator==(const LinForm&, const LinForm&) = default;
};

// Quadratic form x^T G x with G symmetric (cross coefficients split in half).
class QuadForm {
 public:
  QuadForm() = default;
  explicit QuadForm(Matrix gram);
  static QuadForm zero(std::size_t n) { return QuadForm(Matrix(n, n)); }
  // Coefficients of x_i x_j for i <= j, row by row.
  static QuadForm from_upper(std::size_t n, const Vec& upper);
  // l * m
  static QuadForm product(const LinForm& l, const LinForm& m);

  std::size_t n() const { return g_.rows(); }
  const Matrix& gram() const { return g_; }
  Vec upper() const;
  // coefficient of x_i x_j in the expanded polynomial
  Rational coeff(std::size_t i, std::size_t j) const;
  bool is_zero() const { return g_.is_zero(); }

  QuadForm operator+(const QuadForm& o) const { return QuadForm(g_ + o.g_); }
  QuadForm operator-(const QuadForm& o) const { return QuadForm(g_ - o.g_); }
  friend QuadForm operator*(const Rational& s, const QuadForm& q) { return QuadForm(s * q.g_); }
  friend bool operator==(const QuadForm&, const QuadForm&) = default;

  std::string to_string() const;

 private:
  Matrix g_;
};

using Exponent4 = std::array<int, 4>;

// Cubic form in x0..x3; zero coefficients are never stored.
class CubicForm4 {
 public:
  CubicForm4() = default;
  void add(const Exponent4& e, const Rational& c);
  void set(const Exponent4& e, const Rational& c);
  Rational coeff(const Exponent4& e) const;
  const std::map<Exponent4, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  CubicForm4 operator+(const CubicForm4& o) const;
  CubicForm4 operator-(const CubicForm4& o) const;
  friend CubicForm4 operator*(const Rational& s, const CubicForm4& f);
  friend bool operator==(const CubicForm4&, const CubicForm4&) = default;

  Rational max_abs_coeff() const;
  // Integer coefficients with gcd 1, leading term (map order) positive.
  CubicForm4 primitive() const;
  std::string to_string() const;

  static std::vector<Exponent4> monomials();  // all 20, map order

 private:
  std::map<Exponent4, Rational> t_;
};

// l * q with l, q in four variables.
CubicForm4 multiply(const LinForm& l, const QuadForm& q);

// Primitive integral projective point, first nonzero coordinate positive.
class ProjPoint {
 public:
  ProjPoint() = default;
  explicit ProjPoint(const std::vector<Integer>& coords);
  explicit ProjPoint(const Vec& coords);
  ProjPoint(std::initializer_list<long> coords);

  std::size_t n() const { return x_.size(); }
  const std::vector<Integer>& coords() const { return x_; }
  Vec as_vec() const;
  Integer height() const;  // max |x_i|
  std::string to_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint& a, const ProjPoint& b) { return cmp(a, b); }

 private:
  static std::strong_ordering cmp(const ProjPoint& a, const ProjPoint& b);
  std::vector<Integer> x_;
};

// Line in P^3, stored both as the span of two points and as the zero set of
// two linear forms.
class ProjLine {
 public:
  static ProjLine from_points(const ProjPoint& p, const ProjPoint& q);
  static ProjLine from_forms(const LinForm& l0, const LinForm& l1);
  // Both descriptions at once; throws invalid_argument unless they agree.
  static ProjLine from_parts(const ProjPoint& p, const ProjPoint& q, const LinForm& l0, const LinForm& l1);

  const ProjPoint& p() const { return p_; }
  const ProjPoint& q() const { return q_; }
  const LinForm& l0() const { return l0_; }
  const LinForm& l1() const { return l1_; }
  // same line as a point set
  bool same_as(const ProjLine& o) const;
  // same stored representation
  friend bool operator==(const ProjLine&, const ProjLine&) = default;

 private:
  ProjPoint p_, q_;
  LinForm l0_, l1_;
};

// det(lambda*A0 + mu*A1) = sum_i c[i] lambda^i mu^(5-i)
struct BinaryQuintic {
  std::array<Rational, 6> c{};

  Rational operator()(const Rational& lambda, const Rational& mu) const;
  // dehomogenized at mu = 1
  UniPoly in_lambda() const;
  bool is_zero() const;
  friend bool operator==(const BinaryQuintic&, const BinaryQuintic&) = default;
};

Rational evaluate(const QuadForm& q, const Vec& x);
Rational evaluate(const CubicForm4& f, const Vec& x);
Vec gradient(const QuadForm& q, const Vec& x);
Vec gradient(const CubicForm4& f, const Vec& x);
bool contains_point(const QuadForm& q, const ProjPoint& p);
bool contains_point(const CubicForm4& f, const ProjPoint& p);

// q(M y), resp. f(M y). M must be square and invertible.
QuadForm substitute(const QuadForm& q, const Matrix& change);
CubicForm4 substitute(const CubicForm4& f, const Matrix& change);

struct Restriction {
  QuadForm form;  // n-1 variables
  Matrix basis;   // n x (n-1), x = basis * y parametrizes l = 0
  std::size_t eliminated = 0;
};

// Solve l = 0 for the variable with the largest |coefficient| (lowest index
// on ties) and substitute.
Restriction restrict_to_hyperplane(const QuadForm& q, const LinForm& l);

BinaryQuintic pencil_determinant(const QuadForm& q0, const QuadForm& q1);

bool contains_line(const CubicForm4& f, const ProjLine& line);

struct Inertia {
  std::size_t positive = 0, negative = 0, zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

Inertia signature(const QuadForm& q);

}  // namespace cubsurf
