#pragma once

#include <vector>

#include "cubsurf/rational.hpp"
#include "cubsurf/unipoly.hpp"

namespace cubsurf {

struct Factor {
  UniPoly poly;  // monic, irreducible over Q
  unsigned multiplicity = 1;
};

struct Factorization {
  Rational constant;
  std::vector<Factor> factors;  // sorted by (degree, coefficients)

  UniPoly expand() const;
  std::vector<int> degrees() const;  // with multiplicity, sorted
};

// Rational roots of f, each listed once, ascending.
std::vector<Rational> rational_roots(const UniPoly& f);

// Factorization over Q: rational-root stripping, squarefree decomposition,
// then modular factorization, Hensel lifting and subset recombination.
// Squarefree parts above degree 8 are rejected (degree_unsupported).
Factorization factor_unipoly(const UniPoly& f);

bool is_irreducible(const UniPoly& f);

}  // namespace cubsurf
