#pragma once

#include <optional>
#include <vector>

#include "cubsurf/surfaces.hpp"

namespace cubsurf {

struct DP4FromCubic {
  DP4Surface surface;  // Q0 = q0 + l1*x4, Q1 = q1 - l0*x4
  QuadForm q0, q1;
};

// Canonical solution of F = l0*q0 + l1*q1 (q0's ten coefficients first, free
// unknowns zero). Throws line_not_on_surface when no solution exists.
DP4FromCubic cubic_to_dp4(const CubicSurface& s, const LinForm& l0, const LinForm& l1);

struct CubicFromDP4 {
  CubicSurface surface;  // q0*l1 - q1*l0 = 0 with known line l0 = l1 = 0
  Matrix change;         // unimodular M with x = M y and M e4 = P
  QuadForm q0, q1;
  LinForm l0, l1;
};

// Blow up the rational point p of v. Throws point_not_on_surface when p is
// not on v and degenerate_cubic when the construction collapses.
CubicFromDP4 dp4_to_cubic(const DP4Surface& v, const ProjPoint& p);

// dp4_to_cubic followed by cubic_to_dp4; true iff the recovered pencil spans
// the same space of quadrics as v (after undoing the x4 shear ambiguity and
// the coordinate move).
bool roundtrip_check(const DP4Surface& v, const ProjPoint& p);

// True iff q0, q1 and r0, r1 span the same space of quadrics.
bool same_pencil(const QuadForm& q0, const QuadForm& q1, const QuadForm& r0, const QuadForm& r1);

struct TritangentEntry {
  // Degenerate member lambda*Q0 + mu*Q1. For rational roots point holds
  // (lambda, mu) as coprime integers; otherwise factor is the irreducible
  // factor of det(lambda*A0 + A1) in lambda.
  std::optional<std::pair<Integer, Integer>> point;
  UniPoly factor;
  unsigned multiplicity = 1;
  std::size_t rank_at_root = 0;       // rational roots only
  std::optional<LinForm> plane;       // in the cubic's coordinates, when known
  std::optional<ProjPoint> vertex;    // kernel of the degenerate member
  Integer split_disc = 0;             // squarefree class; norm class for irrational factors
  friend bool operator==(const TritangentEntry&, const TritangentEntry&) = default;
};

std::vector<TritangentEntry> tritangent_analysis(const DP4Surface& v);

struct ReduceResult {
  CubicSurface surface;
  Matrix change;  // reduced.f = substitute(original.f, change)
  int moves = 0;
  friend bool operator==(const ReduceResult&, const ReduceResult&) = default;
};

// Hill climbing over transpositions, sign flips and shears x_i <- x_i +- x_j,
// accepting a move iff (max |c|, sum c^2) strictly decreases.
ReduceResult greedy_reduce(const CubicSurface& s);

}  // namespace cubsurf
