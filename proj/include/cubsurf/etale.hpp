#pragma once

#include <memory>

#include "cubsurf/matrix.hpp"
#include "cubsurf/unipoly.hpp"

namespace cubsurf {

inline constexpr int kAlgebraDegree = 5;

class AlgElement;

// A = Q[T]/(p) for a monic squarefree p of degree kAlgebraDegree. Cheap to
// copy; copies share the modulus.
class EtaleAlgebra {
 public:
  explicit EtaleAlgebra(UniPoly p);

  const UniPoly& modulus() const { return *p_; }
  int degree() const { return kAlgebraDegree; }

  AlgElement element(const UniPoly& rep) const;
  AlgElement element(const Vec& coords) const;
  AlgElement constant(const Rational& c) const;
  // r = T mod p
  AlgElement r() const;

  friend bool operator==(const EtaleAlgebra& a, const EtaleAlgebra& b) { return *a.p_ == *b.p_; }

 private:
  std::shared_ptr<const UniPoly> p_;
};

class AlgElement {
 public:
  const EtaleAlgebra& algebra() const { return alg_; }
  // reduced representative, degree < 5
  const UniPoly& rep() const { return rep_; }
  // coordinates in the power basis 1, r, ..., r^4
  Vec coords() const;
  bool is_zero() const { return rep_.is_zero(); }
  bool is_unit() const;

  AlgElement operator-() const;
  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  AlgElement& operator*=(const AlgElement& o);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(AlgElement a, const AlgElement& b) { return a *= b; }
  friend AlgElement operator*(const Rational& s, const AlgElement& a);
  friend bool operator==(const AlgElement& a, const AlgElement& b);

  // throws non_unit when gcd(rep, p) != 1
  AlgElement inverse() const;
  AlgElement pow(unsigned e) const;

 private:
  friend class EtaleAlgebra;
  AlgElement(EtaleAlgebra alg, UniPoly rep);
  void same_algebra(const AlgElement& o) const;
  EtaleAlgebra alg_;
  UniPoly rep_;
};

// Column j holds the coordinates of e * r^j.
Matrix mul_matrix(const AlgElement& e);
Rational trace(const AlgElement& e);
Rational norm(const AlgElement& e);
UniPoly charpoly_of(const AlgElement& e);
// Roots of the returned polynomial are the conjugates of e.
UniPoly conjugate_data(const AlgElement& e);
bool is_generator(const AlgElement& x);
// chi_x'(x); throws not_generator when chi_x is not squarefree
AlgElement different_of(const AlgElement& x);
// g(e) for a polynomial g over Q
AlgElement evaluate(const UniPoly& g, const AlgElement& e);

}  // namespace cubsurf
