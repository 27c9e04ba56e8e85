#pragma once

#include <array>
#include <vector>

#include "cubsurf/forms.hpp"
#include "cubsurf/unipoly.hpp"

namespace fixtures {

// p(T) of the worked degree-(1,2,2) example, lowest coefficient first.
inline cubsurf::UniPoly example_p() { return cubsurf::UniPoly{-900, 1134, -288, -51, 10, 1}; }

inline cubsurf::QuadForm upper_form(const std::vector<long>& u) {
  cubsurf::Vec v(u.begin(), u.end());
  return cubsurf::QuadForm::from_upper(5, v);
}

inline cubsurf::QuadForm example_q0() {
  return upper_form({4, 10, 20, -112, -134, 7, -26, -134, -148, -2, 140, -2, 10, -38, -323});
}

inline cubsurf::QuadForm example_q1() {
  return upper_form({47, -18, 10, -188, -178, 63, -22, 376, -86, 71, -580, 146, -364, -296, -21});
}

inline cubsurf::CubicForm4 cubic_from(const std::vector<std::array<long, 5>>& terms) {
  cubsurf::CubicForm4 f;
  for (const auto& t : terms)
    f.add({static_cast<int>(t[0]), static_cast<int>(t[1]), static_cast<int>(t[2]), static_cast<int>(t[3])}, t[4]);
  return f;
}

// variables (x, y, z, w) = (x0, x1, x2, x3)
inline cubsurf::CubicForm4 example_cubic() {
  return cubic_from({{2, 1, 0, 0, 2},   {2, 0, 1, 0, 6},  {1, 2, 0, 0, -4}, {1, 1, 1, 0, 6},
                     {1, 1, 0, 1, 4},   {1, 0, 2, 0, -10}, {1, 0, 1, 1, -4}, {1, 0, 0, 2, -7},
                     {0, 3, 0, 0, 2},   {0, 2, 1, 0, -9}, {0, 2, 0, 1, -4}, {0, 1, 2, 0, 4},
                     {0, 1, 1, 1, -26}, {0, 1, 0, 2, 6},  {0, 0, 3, 0, 1},  {0, 0, 2, 1, 10},
                     {0, 0, 1, 2, -7},  {0, 0, 0, 3, -5}});
}

inline cubsurf::CubicForm4 fermat() {
  return cubic_from({{3, 0, 0, 0, 1}, {0, 3, 0, 0, 1}, {0, 0, 3, 0, 1}, {0, 0, 0, 3, 1}});
}

inline cubsurf::ProjPoint example_point() { return cubsurf::ProjPoint{8, -13, 4, 2, -3}; }

// Coefficients of l (power-basis coordinates of c_0..c_4) for which the
// strategy with x = r reproduces the pencil of example_q0, example_q1.
inline std::vector<cubsurf::UniPoly> example_l() {
  const char* c[5][5] = {{"183875/185564", "2877/185564", "-1925/46391", "-5/2017", "5/92782"},
                         {"-718307/185564", "15713/185564", "14265/92782", "459/92782", "-85/185564"},
                         {"477197/185564", "-41307/92782", "-20603/185564", "2275/185564", "273/185564"},
                         {"197005/92782", "89254/46391", "-6507/185564", "-14713/185564", "-255/46391"},
                         {"125221/185564", "-21972/46391", "-6303/185564", "1577/92782", "259/185564"}};
  std::vector<cubsurf::UniPoly> l;
  for (auto& row : c) {
    cubsurf::Vec v;
    for (auto* x : row) v.push_back(cubsurf::parse_rational(x));
    l.emplace_back(v);
  }
  return l;
}

// Lagrange idempotents of the split algebra with the given distinct roots.
inline std::vector<cubsurf::UniPoly> idempotents(const std::vector<long>& roots) {
  std::vector<cubsurf::UniPoly> e;
  for (long i : roots) {
    cubsurf::UniPoly f = cubsurf::UniPoly::constant(1);
    for (long j : roots)
      if (j != i) f = f * cubsurf::UniPoly::linear_root(j) * cubsurf::make_rational(1, i - j);
    e.push_back(f);
  }
  return e;
}

inline cubsurf::ProjLine example_line() {
  return cubsurf::ProjLine::from_points(cubsurf::ProjPoint{5, 0, 0, -7}, cubsurf::ProjPoint{0, 5, 10, 2});
}

}  // namespace fixtures
