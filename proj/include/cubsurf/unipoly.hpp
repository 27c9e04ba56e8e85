#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubsurf/rational.hpp"

namespace cubsurf {

// Univariate polynomial over Q, coefficients lowest degree first. The zero
// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t degree);
  // x - r
  static UniPoly linear_root(const Rational& r);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  UniPoly monic() const;
  UniPoly derivative() const;
  Rational eval(const Rational& x) const;
  // Integer polynomial with coprime coefficients and positive leading coefficient.
  UniPoly primitive() const;
  // content c with *this = c * primitive()
  Rational content() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  std::string to_string(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);  // exact quotient part
// Monic gcd (zero if both zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
// s*a + t*b = g (g monic gcd)
void xgcd(const UniPoly& a, const UniPoly& b, UniPoly& g, UniPoly& s, UniPoly& t);
UniPoly pow(const UniPoly& a, unsigned e);
// g(f(x))
UniPoly compose(const UniPoly& g, const UniPoly& f);
bool is_squarefree(const UniPoly& f);
// Unique polynomial of degree < xs.size() through (xs[i], ys[i]); xs distinct.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
Rational resultant(const UniPoly& a, const UniPoly& b);
Rational discriminant(const UniPoly& f);

}  // namespace cubsurf
