#pragma once

#include <cstdint>
#include <vector>

#include "cubsurf/rational.hpp"

namespace cubsurf {

class UniPoly;

namespace modp {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}
inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  std::uint64_t s = a + b;
  return s >= q ? s - q : s;
}
inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return a >= b ? a - b : a + q - b;
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q);
std::uint64_t invmod(std::uint64_t a, std::uint64_t q);
bool is_prime(std::uint64_t n);
// Reduction of a rational; throws bad_prime when q divides the denominator.
std::uint64_t reduce(const Rational& x, std::uint64_t q);
std::uint64_t reduce(const Integer& x, std::uint64_t q);
// Legendre symbol via Euler's criterion: 1, q-1 (i.e. -1) or 0.
int legendre(std::uint64_t a, std::uint64_t q);

// Polynomial over F_q (q odd prime), coefficients lowest degree first.
struct Poly {
  std::uint64_t q = 0;
  std::vector<std::uint64_t> c;

  Poly() = default;
  Poly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);
  static Poly from_rational(const UniPoly& f, std::uint64_t modulus);
  static Poly x(std::uint64_t modulus);
  static Poly constant(std::uint64_t v, std::uint64_t modulus);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_one() const { return c.size() == 1 && c[0] == 1; }
  std::uint64_t leading() const { return c.empty() ? 0 : c.back(); }
  void trim();
  Poly monic() const;
  Poly derivative() const;
  std::uint64_t eval(std::uint64_t x) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.q == b.q && a.c == b.c; }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, std::uint64_t s);
void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);
// s*a + t*b = gcd (monic)
Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t);
// base^e mod f
Poly powmod(const Poly& base, const Integer& e, const Poly& f);

bool is_squarefree(const Poly& f);
bool is_irreducible(const Poly& f);
// Distinct-degree factorization of a monic squarefree f: (product, degree).
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f);
// Equal-degree splitting (Cantor-Zassenhaus, deterministic seed).
std::vector<Poly> equal_degree(const Poly& f, int d);
// Monic irreducible factors of a squarefree f, sorted by (degree, coefficients).
std::vector<Poly> factor_squarefree(const Poly& f);

}  // namespace modp
}  // namespace cubsurf
