#include "cubsurf/surfaces.hpp"

#include "cubsurf/error.hpp"

namespace cubsurf {

void validate(const DP4Surface& v) {
  require(v.q0.n() == 5 && v.q1.n() == 5, ErrorCode::invalid_argument, "DP4 quadrics must have 5 variables");
  Vec rows = v.q0.gram().entries();
  const Vec& r1 = v.q1.gram().entries();
  rows.insert(rows.end(), r1.begin(), r1.end());
  require(rank(Matrix(2, 25, rows)) == 2, ErrorCode::degenerate_pencil, "quadrics are proportional or zero");
}

void validate(const CubicSurface& s) {
  require(!s.f.is_zero(), ErrorCode::degenerate_cubic, "cubic form is identically zero");
  if (s.known_line)
    require(contains_line(s.f, *s.known_line), ErrorCode::line_not_on_surface, "known line is not on the cubic");
}

}  // namespace cubsurf
