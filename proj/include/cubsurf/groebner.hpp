#pragma once

#include <cstddef>
#include <vector>

#include "cubsurf/mpoly.hpp"
#include "cubsurf/surfaces.hpp"

namespace cubsurf {

// Reduced Groebner basis for grevlex: monic, inter-reduced, sorted by
// increasing leading monomial.
struct GroebnerBasis {
  std::size_t nvars = 1;
  std::vector<MPoly> generators;
  bool is_unit() const { return generators.size() == 1 && generators[0].is_constant(); }
};

struct GroebnerStats {
  std::size_t pairs_total = 0;
  std::size_t skipped_coprime = 0;
  std::size_t skipped_chain = 0;
  std::size_t zero_reductions = 0;
};

// Buchberger with the coprime and chain criteria; intermediate polynomials are
// kept integral and primitive. With stop_at_unit the run ends as soon as a
// nonzero constant appears (the result is then {1}).
GroebnerBasis buchberger(const std::vector<MPoly>& gens, GroebnerStats* stats = nullptr, bool stop_at_unit = false);

// Remainder of f after full reduction by the generators, scaled monic (or 0).
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis);
MPoly s_polynomial(const MPoly& f, const MPoly& g);

bool is_unit_ideal(const std::vector<MPoly>& gens);

// Chart-wise unit ideal tests of the singular locus, charts run in parallel.
struct SmoothnessReport {
  bool smooth = false;
  std::vector<bool> chart_unit;  // chart i: x_i = 1
};

SmoothnessReport smoothness(const CubicSurface& s);
SmoothnessReport smoothness(const DP4Surface& v);
inline bool smooth_cubic(const CubicSurface& s) { return smoothness(s).smooth; }
inline bool smooth_dp4(const DP4Surface& v) { return smoothness(v).smooth; }

// Homogeneous generators of the singular locus before dehomogenization.
std::vector<MPoly> singular_locus(const CubicSurface& s);
std::vector<MPoly> singular_locus(const DP4Surface& v);

}  // namespace cubsurf
