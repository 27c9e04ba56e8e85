#include "cubsurf/descent.hpp"

#include "cubsurf/error.hpp"
#include "cubsurf/factor.hpp"

namespace cubsurf {

std::vector<AlgElement> power_basis(const EtaleAlgebra& alg) {
  std::vector<AlgElement> l;
  for (int j = 0; j < kAlgebraDegree; ++j) l.push_back(alg.r().pow(j));
  return l;
}

namespace {

Matrix trace_gram(const AlgElement& w, const std::vector<AlgElement>& l) {
  const std::size_t n = l.size();
  Matrix g(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) {
      g(j, k) = trace(w * l[j] * l[k]);
      g(k, j) = g(j, k);
    }
  return g;
}

void check_input(const DescentInput& in) {
  require(in.l.size() == static_cast<std::size_t>(kAlgebraDegree), ErrorCode::invalid_argument,
          "linear form needs five coefficients");
  require(in.a.algebra() == in.algebra && in.b.algebra() == in.algebra, ErrorCode::invalid_argument,
          "a and b must lie in the given algebra");
  for (const auto& c : in.l)
    require(c.algebra() == in.algebra, ErrorCode::invalid_argument, "coefficient of l outside the algebra");
}

Integer class_of(const Rational& v) {
  if (v == 0) return 0;
  return squarefree_part(v).square_class;
}

}  // namespace

Rational basis_discriminant(const std::vector<AlgElement>& l) {
  require(!l.empty(), ErrorCode::invalid_argument, "empty basis");
  return det(trace_gram(l[0].algebra().constant(1), l));
}

DP4Surface build_quadrics(const DescentInput& input) {
  check_input(input);
  require(basis_discriminant(input.l) != 0, ErrorCode::dependent_forms,
          "conjugates of l are linearly dependent");
  DP4Surface v;
  v.q0 = QuadForm(trace_gram(input.a, input.l));
  v.q1 = QuadForm(trace_gram(input.b, input.l));
  v.descent = input;
  validate(v);
  return v;
}

std::pair<AlgElement, AlgElement> strategy_ab(const EtaleAlgebra& alg, const AlgElement& x) {
  require(x.algebra() == alg, ErrorCode::invalid_argument, "x outside the algebra");
  AlgElement d = different_of(x);
  AlgElement a = d * alg.r();
  AlgElement b = -(x * a);
  return {a, b};
}

BinaryQuintic norm_form(const AlgElement& a, const AlgElement& b) {
  const UniPoly& p = a.algebra().modulus();
  Vec xs, vals;
  for (int i = 0; i < 6; ++i) {
    xs.emplace_back(i);
    vals.push_back(resultant(p, Rational(i) * a.rep() + b.rep()));
  }
  UniPoly g = interpolate(xs, vals);
  BinaryQuintic f;
  for (int i = 0; i < 6; ++i) f.c[i] = g.coeff(i);
  return f;
}

RadicandReport radicand_report(const DescentInput& input) {
  check_input(input);
  require(input.a.is_unit(), ErrorCode::non_unit, "a is not a unit of the algebra");
  const EtaleAlgebra& alg = input.algebra;
  const UniPoly& p = alg.modulus();
  AlgElement y = -(input.b * input.a.inverse());
  require(is_generator(y), ErrorCode::not_generator, "-b/a does not generate the algebra");

  Rational na = norm(input.a);
  RadicandReport rep{na * input.a.pow(3) * different_of(y), alg.constant(0), {}, {}, {}};
  rep.split_rho = discriminant(p) * rep.rho;
  rep.conj_poly = charpoly_of(rep.rho);
  rep.tritangent_poly = charpoly_of(y);
  rep.norm_a_square = is_perfect_square(na);
  rep.norm_rho_square = is_perfect_square(norm(rep.rho));
  rep.norm_split_rho_square = is_perfect_square(norm(rep.split_rho));

  for (const auto& fc : factor_unipoly(rep.tritangent_poly).factors) {
    RadicandEntry e;
    e.factor = fc.poly;
    // the embeddings sending y to a root of f are the roots of gcd(p, f(y))
    e.algebra_factor = gcd(p, compose(fc.poly, y.rep()) % p);
    require(e.algebra_factor.degree() == fc.poly.degree(), ErrorCode::internal,
            "tritangent factor does not match a factor of p");
    if (fc.poly.degree() == 1) e.root = -fc.poly.coeff(0);
    // for monic g, res(g, h) is the product of h over the roots of g
    e.radicand = resultant(e.algebra_factor, rep.rho.rep());
    e.split_radicand = resultant(e.algebra_factor, rep.split_rho.rep());
    e.square_class = class_of(e.radicand);
    e.split_class = class_of(e.split_radicand);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

DescentResult run_strategy(const UniPoly& p, const UniPoly& x_rep, const std::optional<std::vector<UniPoly>>& l) {
  EtaleAlgebra alg(p);
  AlgElement x = alg.element(x_rep);
  auto [a, b] = strategy_ab(alg, x);
  DescentInput in{alg, a, b, {}};
  if (l) {
    for (const auto& c : *l) in.l.push_back(alg.element(c));
  } else {
    in.l = power_basis(alg);
  }
  DP4Surface v = build_quadrics(in);
  return DescentResult{std::move(v), radicand_report(in)};
}

}  // namespace cubsurf
