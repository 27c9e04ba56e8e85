#include <doctest.h>

#include <random>

#include "cubsurf/descent.hpp"
#include "cubsurf/error.hpp"
#include "cubsurf/factor.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace cubsurf;

namespace {

UniPoly from_roots(const std::vector<long>& roots) {
  UniPoly f{1};
  for (long r : roots) f *= UniPoly{-r, 1};
  return f;
}

// Lagrange idempotents of a split algebra.
std::vector<AlgElement> idempotents(const EtaleAlgebra& alg, const std::vector<long>& roots) {
  std::vector<AlgElement> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    UniPoly e{1};
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (j != i) e *= UniPoly{-roots[j], 1} * Rational(1, 1) * (Rational(1) / Rational(roots[i] - roots[j]));
    out.push_back(alg.element(e));
  }
  return out;
}

// element with prescribed values at the roots
AlgElement from_values(const EtaleAlgebra& alg, const std::vector<long>& roots, const std::vector<long>& vals) {
  auto e = idempotents(alg, roots);
  AlgElement s = alg.constant(0);
  for (std::size_t i = 0; i < vals.size(); ++i) s += Rational(vals[i]) * e[i];
  return s;
}

UniPoly random_squarefree_quintic(std::mt19937_64& rng) {
  while (true) {
    Vec c;
    for (int i = 0; i < 5; ++i) c.emplace_back(testutil::rand_in(rng, -9, 9));
    c.emplace_back(1);
    UniPoly p(c);
    if (is_squarefree(p)) return p;
  }
}

}  // namespace

TEST_CASE("diagonal case over the split algebra") {
  std::vector<long> roots{0, 1, 2, 3, 4};
  EtaleAlgebra alg(from_roots(roots));
  DescentInput in{alg, alg.constant(1), alg.r(), idempotents(alg, roots)};
  auto v = build_quadrics(in);
  CHECK(v.q0 == QuadForm(Matrix::identity(5)));
  CHECK(v.q1 == QuadForm(Matrix::diagonal({0, 1, 2, 3, 4})));
  CHECK(basis_discriminant(in.l) == 1);

  auto rep = radicand_report(in);
  REQUIRE(rep.entries.size() == 5);
  // entries come sorted by factor T + 4, T + 3, ..., T
  const long expect[] = {24, -6, 4, -6, 24};
  for (const auto& e : rep.entries) {
    REQUIRE(e.root);
    long i = -to_long(e.root->get_num());
    CHECK(e.radicand == expect[i]);
    CHECK(e.split_radicand == expect[i] * discriminant(alg.modulus()));
  }
  CHECK(rep.entries[0].square_class == 6);
  CHECK(rep.entries[1].square_class == -6);
  CHECK(rep.entries[2].square_class == 1);
  CHECK(is_perfect_square(Rational(24 * -6 * 4 * -6 * 24)));
  CHECK(rep.norm_rho_square);
  CHECK(norm(rep.rho) == 82944);
}

TEST_CASE("build_quadrics rejects bad input") {
  EtaleAlgebra alg(fixtures::example_p());
  auto l = power_basis(alg);
  DescentInput same{alg, alg.r(), alg.r(), l};
  CHECK_THROWS_AS(build_quadrics(same), Error);
  auto dep = l;
  dep[4] = dep[3];
  DescentInput bad{alg, alg.constant(1), alg.r(), dep};
  try {
    build_quadrics(bad);
    FAIL("expected dependent_forms");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::dependent_forms);
  }
}

TEST_CASE("strategy on the worked example") {
  EtaleAlgebra alg(fixtures::example_p());
  auto r = alg.r();
  auto [a, b] = strategy_ab(alg, r);
  CHECK(-(b * a.inverse()) == r);
  CHECK_THROWS_AS(strategy_ab(alg, alg.constant(1)), Error);

  auto res = run_strategy(fixtures::example_p(), UniPoly{0, 1});
  const auto& v = res.surface;
  // frozen: power-basis l, x = r
  CHECK(v.q0.upper() == Vec{-123004, 3314192, -38261600, 454140848, -5238384512, -19130800, 454140848,
                            -5238384512, 60545986640, -2619192256, 60545986640, -695453485088,
                            -347726742544, 7984294268432, -45762385735840});
  Rational biggest = 0;
  for (const auto& q : {v.q0, v.q1})
    for (const auto& c : q.upper()) biggest = std::max(biggest, Rational(::abs(c)));
  CHECK(biggest == Rational(Integer("524391211895464")));

  // pencil determinant factors like p: degrees (1, 2, 2)
  auto pd = pencil_determinant(v.q0, v.q1);
  CHECK(factor_unipoly(pd.in_lambda()).degrees() == std::vector<int>{1, 2, 2});
  CHECK(pd.in_lambda() == Rational(basis_discriminant(power_basis(alg))) * norm_form(a, b).in_lambda());

  const auto& rr = res.radicands;
  CHECK(rr.tritangent_poly == fixtures::example_p());
  REQUIRE(rr.entries.size() == 3);
  CHECK(rr.entries[0].square_class == 1);
  CHECK(rr.entries[1].square_class == 6);
  CHECK(rr.entries[2].square_class == 3);
  CHECK(rr.entries[0].split_class == 2);
  CHECK(rr.entries[1].split_class == 6);
  CHECK(rr.entries[2].split_class == 3);
  CHECK(rr.norm_split_rho_square);
  CHECK_FALSE(rr.norm_rho_square);
  // N(a) = disc(p) N(r) = 2 * square
  CHECK_FALSE(rr.norm_a_square);
  CHECK(squarefree_part(norm(a)).square_class == 2);
}

TEST_CASE("radicand_report errors") {
  EtaleAlgebra alg(fixtures::example_p());
  DescentInput in{alg, alg.r() - alg.constant(2), alg.r(), power_basis(alg)};
  try {
    radicand_report(in);
    FAIL("expected non_unit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_unit);
  }
  CHECK_THROWS_AS(run_strategy(from_roots({0, 1, 1, 3, 4}), UniPoly{0, 1}), Error);
  // root 0 makes a = d r a zero divisor
  try {
    run_strategy(from_roots({0, 1, 2, 3, 4}), UniPoly{0, 1});
    FAIL("expected non_unit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_unit);
  }
}

TEST_CASE("split strategy matches the coordinatewise oracle") {
  std::vector<long> roots{1, 2, 3, 4, 5};
  auto res = run_strategy(from_roots(roots), UniPoly{0, 1});
  const auto& rr = res.radicands;
  REQUIRE(rr.entries.size() == 5);
  for (const auto& e : rr.entries) {
    long i = to_long(e.root->get_num());
    // a_j = r_j * prod_{k != j}(r_j - r_k), b_j = -r_j a_j
    auto a_at = [&](long j) -> Rational {
      Rational d = 1;
      for (long k : roots)
        if (k != j) d *= Rational(j - k);
      return Rational(j) * d;
    };
    Rational expect = 1;
    const Rational ai = a_at(i), bi = -Rational(i) * ai;
    for (long j : roots) {
      if (j == i) continue;
      const Rational aj = a_at(j), bj = -Rational(j) * aj;
      expect *= ai * bj - aj * bi;
    }
    CHECK(e.radicand == expect);
  }
  auto pd = pencil_determinant(res.surface.q0, res.surface.q1).in_lambda();
  for (long i : roots) CHECK(pd.eval(Rational(i)) == 0);
}

TEST_CASE("strategy identities on random quintics") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    EtaleAlgebra alg(random_squarefree_quintic(rng));
    auto r = alg.r();
    if (!r.is_unit()) continue;
    auto [a, b] = strategy_ab(alg, r);
    auto d = different_of(r);
    DescentInput in{alg, a, b, power_basis(alg)};
    auto rep = radicand_report(in);
    CHECK(rep.rho == norm(a) * (d * d * r).pow(2) * r);
    CHECK(rep.norm_split_rho_square);
    CHECK(norm(a) == discriminant(alg.modulus()) * norm(r));
    auto v = build_quadrics(in);
    CHECK(pencil_determinant(v.q0, v.q1) == [&] {
      BinaryQuintic nf = norm_form(a, b);
      Rational disc = basis_discriminant(in.l);
      for (auto& c : nf.c) c *= disc;
      return nf;
    }());
  }
}

TEST_CASE("diagonal radicands for random a, b") {
  std::mt19937_64 rng(37);
  std::vector<long> roots{-2, 0, 1, 3, 7};
  EtaleAlgebra alg(from_roots(roots));
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<long> av, bv;
    for (int i = 0; i < 5; ++i) {
      long x = 0;
      while (x == 0) x = testutil::rand_in(rng, -6, 6);
      av.push_back(x);
      bv.push_back(testutil::rand_in(rng, -6, 6));
    }
    DescentInput in{alg, from_values(alg, roots, av), from_values(alg, roots, bv), idempotents(alg, roots)};
    if (!is_generator(-(in.b * in.a.inverse()))) continue;
    auto v = build_quadrics(in);
    CHECK(v.q0 == QuadForm(Matrix::diagonal(Vec(av.begin(), av.end()))));
    auto rep = radicand_report(in);
    Rational product = 1;
    for (const auto& e : rep.entries) {
      REQUIRE(e.root);
      int i = -1;
      for (int k = 0; k < 5; ++k)
        if (make_rational(-bv[k], av[k]) == *e.root) i = k;
      REQUIRE(i >= 0);
      Rational expect = 1;
      for (int j = 0; j < 5; ++j)
        if (j != i) expect *= Rational(-bv[i] * av[j] + av[i] * bv[j]);
      CHECK(e.radicand == expect);
      product *= e.radicand;
    }
    CHECK(is_perfect_square(product));
  }
}
