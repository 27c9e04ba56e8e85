#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cubsurf/forms.hpp"
#include "cubsurf/rational.hpp"

namespace cubsurf {

constexpr std::size_t kMaxVars = 5;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  static Monomial variable(std::size_t i, unsigned power = 1);
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& m) const;
  // requires divides(m)
  Monomial quotient_of(const Monomial& m) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
// Graded reverse lexicographic with x0 < x1 < ...: higher degree first, then
// the smaller exponent of x0 (then x1, ...) is the larger monomial.
int grevlex_compare(const Monomial& a, const Monomial& b);

// Polynomial over Q in a fixed number of variables, terms stored in strictly
// decreasing grevlex order with nonzero coefficients.
class MPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit MPoly(std::size_t nvars = 1);
  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t i);
  static MPoly from_terms(std::size_t nvars, std::vector<Term> terms);
  static MPoly from(const CubicForm4& f);
  static MPoly from(const QuadForm& q);

  std::size_t nvars() const { return n_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  // requires nonzero
  const Monomial& leading_monomial() const { return t_.front().first; }
  const Rational& leading_coeff() const { return t_.front().second; }
  int total_degree() const;
  Rational coeff(const Monomial& m) const;

  MPoly monic() const;
  // integer coefficients, content 1, positive leading coefficient
  MPoly primitive() const;
  MPoly derivative(std::size_t i) const;
  // set x_i = 1 and drop the variable
  MPoly dehomogenize(std::size_t i) const;
  Rational evaluate(const Vec& x) const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& s, const MPoly& a);
  friend bool operator==(const MPoly&, const MPoly&) = default;

  std::string to_string() const;

 private:
  std::size_t n_;
  std::vector<Term> t_;
};

}  // namespace cubsurf
