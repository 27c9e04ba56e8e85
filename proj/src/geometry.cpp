#include "cubsurf/geometry.hpp"

#include <utility>

#include "cubsurf/error.hpp"
#include "cubsurf/factor.hpp"

namespace cubsurf {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> quad_monomials() {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) out.emplace_back(i, j);
  return out;
}

// Q = q + h*x4 in five variables.
QuadForm extend(const QuadForm& q, const LinForm& h) {
  Matrix g(5, 5);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = q.gram()(i, j);
    g(i, 4) = h.c[i] / 2;
    g(4, i) = g(i, 4);
  }
  return QuadForm(std::move(g));
}

QuadForm top_left(const QuadForm& q) {
  Matrix g(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = q.gram()(i, j);
  return QuadForm(std::move(g));
}

LinForm x4_coefficient(const QuadForm& q) {
  Vec c(4);
  for (std::size_t i = 0; i < 4; ++i) c[i] = 2 * q.gram()(i, 4);
  return LinForm(std::move(c));
}

bool independent(const LinForm& a, const LinForm& b) {
  Vec rows = a.c;
  rows.insert(rows.end(), b.c.begin(), b.c.end());
  return rank(Matrix(2, a.n(), rows)) == 2;
}

Integer class_of(const Rational& v) { return v == 0 ? Integer(0) : squarefree_part(v).square_class; }

Matrix minor_matrix(const Matrix& a, std::size_t k) {
  Matrix m(4, 4);
  for (std::size_t i = 0, r = 0; i < 5; ++i) {
    if (i == k) continue;
    for (std::size_t j = 0, c = 0; j < 5; ++j) {
      if (j == k) continue;
      m(r, c++) = a(i, j);
    }
    ++r;
  }
  return m;
}

void fill_rational_entry(TritangentEntry& e, const Matrix& member, const DP4Surface& v, const Integer& lam,
                         const Integer& mu) {
  e.point = std::make_pair(lam, mu);
  e.rank_at_root = rank(member);
  auto ker = kernel(member);
  if (ker.size() == 1) e.vertex = ProjPoint(ker[0]);
  for (std::size_t k = 0; k < 5; ++k) {
    Rational m = det(minor_matrix(member, k));
    if (m != 0) {
      e.split_disc = class_of(m);
      break;
    }
  }
  if (v.blowdown) {
    const auto& bd = *v.blowdown;
    Vec c(4);
    for (std::size_t i = 0; i < 4; ++i) c[i] = Rational(lam) * bd.l1.c[i] - Rational(mu) * bd.l0.c[i];
    LinForm plane(std::move(c));
    if (!plane.is_zero()) e.plane = plane.primitive();
  }
}

using Score = std::pair<Rational, Rational>;

Score score(const CubicForm4& f) {
  Rational sq = 0;
  for (const auto& [e, c] : f.terms()) sq += c * c;
  return {f.max_abs_coeff(), sq};
}

std::vector<Matrix> reduction_moves() {
  std::vector<Matrix> moves;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      for (int s : {1, -1}) {
        Matrix m = Matrix::identity(4);
        m(i, j) = s;
        moves.push_back(m);
      }
    }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      Matrix m(4, 4);
      for (std::size_t k = 0; k < 4; ++k) m(k, k) = 1;
      m(i, i) = m(j, j) = 0;
      m(i, j) = m(j, i) = 1;
      moves.push_back(m);
    }
  for (std::size_t i = 0; i < 4; ++i) {
    Matrix m = Matrix::identity(4);
    m(i, i) = -1;
    moves.push_back(m);
  }
  return moves;
}

}  // namespace

DP4FromCubic cubic_to_dp4(const CubicSurface& s, const LinForm& l0, const LinForm& l1) {
  require(l0.n() == 4 && l1.n() == 4, ErrorCode::invalid_argument, "line forms must have 4 variables");
  require(independent(l0, l1), ErrorCode::invalid_argument, "line forms are dependent");
  const auto monos = CubicForm4::monomials();
  const auto quads = quad_monomials();
  Matrix sys(20, 20);
  for (std::size_t t = 0; t < 2; ++t) {
    const LinForm& l = t == 0 ? l0 : l1;
    for (std::size_t k = 0; k < quads.size(); ++k) {
      Vec u(10);
      u[k] = 1;
      CubicForm4 col = multiply(l, QuadForm::from_upper(4, u));
      for (std::size_t r = 0; r < monos.size(); ++r) sys(r, t * 10 + k) = col.coeff(monos[r]);
    }
  }
  Vec rhs;
  for (const auto& m : monos) rhs.push_back(s.f.coeff(m));
  auto sol = solve_linear(sys, rhs);
  require(sol.has_value(), ErrorCode::line_not_on_surface, "the line l0 = l1 = 0 is not on the cubic");
  DP4FromCubic out;
  out.q0 = QuadForm::from_upper(4, Vec(sol->begin(), sol->begin() + 10));
  out.q1 = QuadForm::from_upper(4, Vec(sol->begin() + 10, sol->end()));
  LinForm neg_l0 = l0;
  for (auto& c : neg_l0.c) c = -c;
  out.surface.q0 = extend(out.q0, l1);
  out.surface.q1 = extend(out.q1, neg_l0);
  out.surface.blowdown = BlowDownData{s.f, l0, l1, out.q0, out.q1};
  validate(out.surface);
  return out;
}

CubicFromDP4 dp4_to_cubic(const DP4Surface& v, const ProjPoint& p) {
  validate(v);
  require(p.n() == 5, ErrorCode::invalid_argument, "point must have 5 coordinates");
  require(contains_point(v.q0, p) && contains_point(v.q1, p), ErrorCode::point_not_on_surface,
          "point is not on the surface");
  // Euclid on the coordinates: U p = +-e_k with U unimodular
  std::vector<Integer> x = p.coords();
  Matrix u = Matrix::identity(5);
  while (true) {
    std::size_t s = 5, nonzero = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      if (x[i] == 0) continue;
      ++nonzero;
      if (s == 5 || cubsurf::abs(x[i]) < cubsurf::abs(x[s])) s = i;
    }
    if (nonzero <= 1) break;
    for (std::size_t j = 0; j < 5; ++j) {
      if (j == s || x[j] == 0) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), x[j].get_mpz_t(), x[s].get_mpz_t());
      x[j] -= q * x[s];
      for (std::size_t c = 0; c < 5; ++c) u(j, c) -= Rational(q) * u(s, c);
    }
  }
  std::size_t k = 0;
  while (x[k] == 0) ++k;
  if (k != 4)
    for (std::size_t c = 0; c < 5; ++c) std::swap(u(k, c), u(4, c));
  if (x[k] < 0)
    for (std::size_t c = 0; c < 5; ++c) u(4, c) = -u(4, c);

  CubicFromDP4 out;
  out.change = inverse(u);
  QuadForm m0 = substitute(v.q0, out.change), m1 = substitute(v.q1, out.change);
  require(m0.gram()(4, 4) == 0 && m1.gram()(4, 4) == 0, ErrorCode::internal, "moved point is not at e4");
  out.q0 = top_left(m0);
  out.q1 = top_left(m1);
  out.l0 = x4_coefficient(m0);
  out.l1 = x4_coefficient(m1);
  require(independent(out.l0, out.l1), ErrorCode::degenerate_cubic,
          "tangent hyperplanes at the point are dependent (singular point)");
  out.surface.f = multiply(out.l1, out.q0) - multiply(out.l0, out.q1);
  require(!out.surface.f.is_zero(), ErrorCode::degenerate_cubic, "blow-up produced the zero cubic");
  out.surface.known_line = ProjLine::from_forms(out.l0, out.l1);
  out.surface.provenance = "blow-up of " + p.to_string();
  validate(out.surface);
  return out;
}

bool same_pencil(const QuadForm& q0, const QuadForm& q1, const QuadForm& r0, const QuadForm& r1) {
  auto stack = [&](std::initializer_list<const QuadForm*> qs) {
    Vec rows;
    for (const auto* q : qs) rows.insert(rows.end(), q->gram().entries().begin(), q->gram().entries().end());
    return rank(Matrix(qs.size(), q0.n() * q0.n(), rows));
  };
  return stack({&q0, &q1}) == 2 && stack({&r0, &r1}) == 2 && stack({&q0, &q1, &r0, &r1}) == 2;
}

bool roundtrip_check(const DP4Surface& v, const ProjPoint& p) {
  CubicFromDP4 up = dp4_to_cubic(v, p);
  // construction (ii) writes F = l1*q0 + l0*(-q1)
  DP4FromCubic down = cubic_to_dp4(up.surface, up.l1, up.l0);
  // q0 - q0c = l0 * m for a linear form m
  Matrix sys(10, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    Vec col = QuadForm::product(up.l0, LinForm::coordinate(4, k)).upper();
    for (std::size_t r = 0; r < 10; ++r) sys(r, k) = col[r];
  }
  auto m = solve_linear(sys, (up.q0 - down.q0).upper());
  if (!m) return false;
  Matrix shear = Matrix::identity(5);
  for (std::size_t k = 0; k < 4; ++k) shear(4, k) = (*m)[k];
  Matrix back = shear * inverse(up.change);
  QuadForm r0 = substitute(down.surface.q0, back), r1 = substitute(down.surface.q1, back);
  return same_pencil(v.q0, v.q1, r0, r1);
}

std::vector<TritangentEntry> tritangent_analysis(const DP4Surface& v) {
  validate(v);
  BinaryQuintic pd = pencil_determinant(v.q0, v.q1);
  require(!pd.is_zero(), ErrorCode::degenerate_pencil, "pencil determinant vanishes identically");
  const Matrix& a0 = v.q0.gram();
  const Matrix& a1 = v.q1.gram();
  std::vector<TritangentEntry> out;
  UniPoly f = pd.in_lambda();
  if (f.degree() < 5) {
    TritangentEntry e;
    e.factor = UniPoly();
    e.multiplicity = 5 - f.degree();
    fill_rational_entry(e, a0, v, 1, 0);
    out.push_back(std::move(e));
  }
  if (f.degree() < 1) return out;

  // principal 4x4 minors of u*A0 + A1 as polynomials in u
  std::vector<UniPoly> minors;
  Vec nodes{0, 1, 2, 3, 4};
  for (std::size_t k = 0; k < 5; ++k) {
    Vec vals;
    for (const auto& u : nodes) vals.push_back(det(minor_matrix(u * a0 + a1, k)));
    minors.push_back(interpolate(nodes, vals));
  }

  for (const auto& fc : factor_unipoly(f).factors) {
    TritangentEntry e;
    e.factor = fc.poly;
    e.multiplicity = fc.multiplicity;
    if (fc.poly.degree() == 1) {
      Rational u = -fc.poly.coeff(0);
      Integer lam = u.get_num(), mu = u.get_den();
      fill_rational_entry(e, Rational(lam) * a0 + Rational(mu) * a1, v, lam, mu);
    } else {
      for (const auto& mk : minors) {
        UniPoly g = mk % fc.poly;
        if (g.is_zero()) continue;
        e.split_disc = class_of(resultant(fc.poly, g));
        break;
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

ReduceResult greedy_reduce(const CubicSurface& s) {
  static const std::vector<Matrix> moves = reduction_moves();
  ReduceResult res{s, Matrix::identity(4), 0};
  Score best = score(s.f);
  constexpr int kMaxMoves = 100000;
  bool improved = true;
  while (improved && res.moves < kMaxMoves) {
    improved = false;
    for (const auto& m : moves) {
      CubicForm4 cand = substitute(res.surface.f, m);
      Score sc = score(cand);
      if (sc < best) {
        best = sc;
        res.surface.f = std::move(cand);
        res.change = res.change * m;
        ++res.moves;
        improved = true;
      }
    }
  }
  if (s.known_line) {
    Matrix inv = inverse(res.change);
    res.surface.known_line =
        ProjLine::from_points(ProjPoint(inv * s.known_line->p().as_vec()), ProjPoint(inv * s.known_line->q().as_vec()));
  }
  validate(res.surface);
  return res;
}

}  // namespace cubsurf
