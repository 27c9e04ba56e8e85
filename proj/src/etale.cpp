#include "cubsurf/etale.hpp"

#include "cubsurf/error.hpp"

namespace cubsurf {

EtaleAlgebra::EtaleAlgebra(UniPoly p) {
  require(p.degree() == kAlgebraDegree, ErrorCode::degree_unsupported, "algebra modulus must have degree 5");
  require(p.is_monic(), ErrorCode::invalid_argument, "algebra modulus must be monic");
  require(is_squarefree(p), ErrorCode::not_squarefree, "algebra modulus is not squarefree");
  p_ = std::make_shared<const UniPoly>(std::move(p));
}

AlgElement EtaleAlgebra::element(const UniPoly& rep) const { return AlgElement(*this, rep % *p_); }

AlgElement EtaleAlgebra::element(const Vec& coords) const {
  require(coords.size() <= static_cast<std::size_t>(kAlgebraDegree), ErrorCode::invalid_argument,
          "too many coordinates for an algebra element");
  return element(UniPoly(coords));
}

AlgElement EtaleAlgebra::constant(const Rational& c) const { return AlgElement(*this, UniPoly::constant(c)); }

AlgElement EtaleAlgebra::r() const { return element(UniPoly{0, 1}); }

AlgElement::AlgElement(EtaleAlgebra alg, UniPoly rep) : alg_(std::move(alg)), rep_(std::move(rep)) {}

void AlgElement::same_algebra(const AlgElement& o) const {
  require(alg_ == o.alg_, ErrorCode::invalid_argument, "elements of different algebras");
}

Vec AlgElement::coords() const {
  Vec v(kAlgebraDegree);
  for (int i = 0; i < kAlgebraDegree; ++i) v[i] = rep_.coeff(i);
  return v;
}

bool AlgElement::is_unit() const { return !rep_.is_zero() && gcd(rep_, alg_.modulus()).degree() == 0; }

AlgElement AlgElement::operator-() const { return AlgElement(alg_, -rep_); }

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  same_algebra(o);
  rep_ += o.rep_;
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  same_algebra(o);
  rep_ -= o.rep_;
  return *this;
}

AlgElement& AlgElement::operator*=(const AlgElement& o) {
  same_algebra(o);
  rep_ = (rep_ * o.rep_) % alg_.modulus();
  return *this;
}

AlgElement operator*(const Rational& s, const AlgElement& a) { return AlgElement(a.alg_, s * a.rep_); }

bool operator==(const AlgElement& a, const AlgElement& b) { return a.alg_ == b.alg_ && a.rep_ == b.rep_; }

AlgElement AlgElement::inverse() const {
  UniPoly g, s, t;
  xgcd(rep_, alg_.modulus(), g, s, t);
  require(!rep_.is_zero() && g.degree() == 0, ErrorCode::non_unit, "element is a zero divisor");
  return AlgElement(alg_, s % alg_.modulus());
}

AlgElement AlgElement::pow(unsigned e) const {
  AlgElement result = alg_.constant(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Matrix mul_matrix(const AlgElement& e) {
  Matrix m(kAlgebraDegree, kAlgebraDegree);
  AlgElement col = e;
  const AlgElement r = e.algebra().r();
  for (int j = 0; j < kAlgebraDegree; ++j) {
    for (int i = 0; i < kAlgebraDegree; ++i) m(i, j) = col.rep().coeff(i);
    col *= r;
  }
  return m;
}

Rational trace(const AlgElement& e) {
  Matrix m = mul_matrix(e);
  Rational s = 0;
  for (int i = 0; i < kAlgebraDegree; ++i) s += m(i, i);
  return s;
}

Rational norm(const AlgElement& e) { return det(mul_matrix(e)); }

UniPoly charpoly_of(const AlgElement& e) { return charpoly(mul_matrix(e)); }

UniPoly conjugate_data(const AlgElement& e) { return charpoly_of(e); }

bool is_generator(const AlgElement& x) { return is_squarefree(charpoly_of(x)); }

AlgElement evaluate(const UniPoly& g, const AlgElement& e) {
  AlgElement acc = e.algebra().constant(0);
  for (int i = g.degree(); i >= 0; --i) acc = acc * e + e.algebra().constant(g.coeff(i));
  return acc;
}

AlgElement different_of(const AlgElement& x) {
  UniPoly chi = charpoly_of(x);
  require(is_squarefree(chi), ErrorCode::not_generator, "element does not generate the algebra");
  return evaluate(chi.derivative(), x);
}

}  // namespace cubsurf
