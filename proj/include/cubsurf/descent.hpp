#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cubsurf/surfaces.hpp"

namespace cubsurf {

// 1, r, ..., r^4
std::vector<AlgElement> power_basis(const EtaleAlgebra& alg);

// det(trace(c_j c_k))
Rational basis_discriminant(const std::vector<AlgElement>& l);

// Gram entries trace(a c_j c_k) and trace(b c_j c_k).
DP4Surface build_quadrics(const DescentInput& input);

// a = d*r, b = -x*a with d the different of x.
std::pair<AlgElement, AlgElement> strategy_ab(const EtaleAlgebra& alg, const AlgElement& x);

// resultant_T(p, lambda*a + mu*b) as a binary quintic
BinaryQuintic norm_form(const AlgElement& a, const AlgElement& b);

struct RadicandEntry {
  UniPoly factor;          // irreducible factor of the tritangent polynomial
  UniPoly algebra_factor;  // the matching factor of p
  std::optional<Rational> root;  // tritangent point (root : 1) for linear factors
  Rational radicand;       // rho at the root, or its norm over the factor
  Integer square_class;
  Rational split_radicand;  // same for split_rho
  Integer split_class;
  friend bool operator==(const RadicandEntry&, const RadicandEntry&) = default;
};

struct RadicandReport {
  AlgElement rho;        // N(a) a^3 delta(-b/a)
  AlgElement split_rho;  // disc(p) * rho, the class governing the splitting of the residual conics
  UniPoly conj_poly;       // charpoly of rho
  UniPoly tritangent_poly; // charpoly of -b/a
  std::vector<RadicandEntry> entries;
  bool norm_rho_square = false;
  bool norm_split_rho_square = false;
  bool norm_a_square = false;
  friend bool operator==(const RadicandReport&, const RadicandReport&) = default;
};

RadicandReport radicand_report(const DescentInput& input);

struct DescentResult {
  DP4Surface surface;
  RadicandReport radicands;
};

// l defaults to the power basis.
DescentResult run_strategy(const UniPoly& p, const UniPoly& x_rep,
                           const std::optional<std::vector<UniPoly>>& l = std::nullopt);

}  // namespace cubsurf
