#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubsurf/etale.hpp"
#include "cubsurf/forms.hpp"

namespace cubsurf {

// Descent data (A, a, b, l); l = sum_j c_j x_j with c_j in A.
struct DescentInput {
  EtaleAlgebra algebra;
  AlgElement a, b;
  std::vector<AlgElement> l;
  friend bool operator==(const DescentInput&, const DescentInput&) = default;
};

// How a DP4 surface arose from a cubic: F = l0*q0 + l1*q1, Q0 = q0 + l1*x4,
// Q1 = q1 - l0*x4, all in the cubic's coordinates.
struct BlowDownData {
  CubicForm4 cubic;
  LinForm l0, l1;
  QuadForm q0, q1;
  friend bool operator==(const BlowDownData&, const BlowDownData&) = default;
};

// Intersection of two quadrics in P^4.
struct DP4Surface {
  QuadForm q0, q1;
  std::optional<DescentInput> descent;
  std::optional<BlowDownData> blowdown;
  friend bool operator==(const DP4Surface&, const DP4Surface&) = default;
};

struct CubicSurface {
  CubicForm4 f;
  std::optional<ProjLine> known_line;
  std::string provenance;
  friend bool operator==(const CubicSurface&, const CubicSurface&) = default;
};

// Throws degenerate_pencil unless q0, q1 are 5-variable forms spanning a
// 2-dimensional pencil.
void validate(const DP4Surface& v);
// Throws line_not_on_surface when the known line is not on f, degenerate_cubic for f = 0.
void validate(const CubicSurface& s);


}  // namespace cubsurf
