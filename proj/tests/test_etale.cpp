#include <doctest.h>

#include <random>

#include "cubsurf/error.hpp"
#include "cubsurf/etale.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace cubsurf;

namespace {

UniPoly from_roots(const std::vector<long>& roots) {
  UniPoly f{1};
  for (long r : roots) f *= UniPoly{-r, 1};
  return f;
}

AlgElement random_element(std::mt19937_64& rng, const EtaleAlgebra& a, long lo, long hi) {
  Vec c;
  for (int i = 0; i < 5; ++i) c.emplace_back(testutil::rand_in(rng, lo, hi));
  return a.element(c);
}

UniPoly random_squarefree_quintic(std::mt19937_64& rng) {
  while (true) {
    std::vector<Rational> c;
    for (int i = 0; i < 5; ++i) c.emplace_back(testutil::rand_in(rng, -9, 9));
    c.emplace_back(1);
    UniPoly p(c);
    if (is_squarefree(p)) return p;
  }
}

}  // namespace

TEST_CASE("construction") {
  CHECK_NOTHROW(EtaleAlgebra(fixtures::example_p()));
  CHECK_THROWS_AS(EtaleAlgebra(UniPoly{-1, 0, 1}), Error);
  CHECK_THROWS_AS(EtaleAlgebra(from_roots({1, 1, 2, 3, 4})), Error);
  CHECK_THROWS_AS(EtaleAlgebra(UniPoly{1, 0, 0, 0, 0, 2}), Error);
}

TEST_CASE("arithmetic and inverses") {
  EtaleAlgebra a(fixtures::example_p());
  auto r = a.r();
  CHECK(fixtures::example_p().eval(0) == -900);
  CHECK(r * r.inverse() == a.constant(1));
  auto z = r - a.constant(2);
  CHECK_FALSE(z.is_unit());
  CHECK_THROWS_AS(z.inverse(), Error);
  try {
    z.inverse();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_unit);
  }
  CHECK(r.pow(5) == a.element(UniPoly{900, -1134, 288, 51, -10}));
  CHECK_THROWS_AS(r + EtaleAlgebra(UniPoly{-2, 0, 0, 0, 0, 1}).r(), Error);
}

TEST_CASE("trace, norm, charpoly") {
  EtaleAlgebra a(fixtures::example_p());
  auto r = a.r();
  CHECK(charpoly_of(r) == fixtures::example_p());
  CHECK(trace(r) == -10);
  CHECK(norm(r) == 900);
  CHECK(is_perfect_square(norm(r)));
  CHECK(conjugate_data(r) == fixtures::example_p());
}

TEST_CASE("trace and norm agree with the characteristic polynomial") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    EtaleAlgebra a(random_squarefree_quintic(rng));
    auto e = random_element(rng, a, -6, 6);
    auto f = random_element(rng, a, -6, 6);
    UniPoly chi = charpoly_of(e);
    CHECK(chi.is_monic());
    CHECK(chi.degree() == 5);
    CHECK(trace(e) == -chi.coeff(4));
    CHECK(norm(e) == -chi.coeff(0));
    CHECK(norm(e * f) == norm(e) * norm(f));
    CHECK(trace(e + f) == trace(e) + trace(f));
    CHECK(trace(Rational(3, 7) * e) == Rational(3, 7) * trace(e));
    // Cayley-Hamilton
    CHECK(evaluate(chi, e).is_zero());
    if (e.is_unit()) CHECK(e * e.inverse() == a.constant(1));
  }
}

TEST_CASE("split algebra agrees with coordinatewise arithmetic") {
  std::mt19937_64 rng(29);
  std::vector<long> roots{-3, -1, 0, 2, 5};
  EtaleAlgebra a(from_roots(roots));
  for (int trial = 0; trial < 20; ++trial) {
    auto e = random_element(rng, a, -5, 5);
    auto f = random_element(rng, a, -5, 5);
    Rational tr = 0, nm = 1;
    for (long t : roots) {
      Rational at(t);
      CHECK((e * f).rep().eval(at) == e.rep().eval(at) * f.rep().eval(at));
      CHECK((e + f).rep().eval(at) == e.rep().eval(at) + f.rep().eval(at));
      tr += e.rep().eval(at);
      nm *= e.rep().eval(at);
    }
    CHECK(trace(e) == tr);
    CHECK(norm(e) == nm);
    if (e.is_unit())
      for (long t : roots) CHECK(e.inverse().rep().eval(Rational(t)) == 1 / e.rep().eval(Rational(t)));
  }
}

TEST_CASE("different_of") {
  EtaleAlgebra a(fixtures::example_p());
  auto r = a.r();
  CHECK(different_of(r) == evaluate(fixtures::example_p().derivative(), r));
  CHECK(is_generator(r));
  CHECK_FALSE(is_generator(a.constant(1)));

  EtaleAlgebra s(from_roots({0, 1, 2, 3, 4}));
  auto d = different_of(s.r());
  CHECK(d.rep().eval(0) == 24);
  for (long i = 0; i < 5; ++i) {
    Rational expect = 1;
    for (long j = 0; j < 5; ++j)
      if (j != i) expect *= Rational(i - j);
    CHECK(d.rep().eval(Rational(i)) == expect);
  }

  // r^2 has conjugates 0, 1, 1, 4, 9
  EtaleAlgebra b(from_roots({0, 1, -1, 2, 3}));
  auto x = b.r() * b.r();
  CHECK_FALSE(is_generator(x));
  try {
    different_of(x);
    FAIL("expected not_generator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_generator);
  }
}
