#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>
#include <tuple>

#include "cubsurf/descent.hpp"
#include "cubsurf/error.hpp"
#include "cubsurf/frobenius.hpp"
#include "cubsurf/groebner.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace cubsurf;

namespace {

FieldPtr field(std::uint64_t p, unsigned k = 1) { return std::make_shared<const FiniteField>(p, k); }

const FrobeniusData& example_data() {
  static const FrobeniusData d = [] {
    DescentResult r = run_strategy(fixtures::example_p(), UniPoly{0, 1});
    return frobenius_data(*r.surface.descent);
  }();
  return d;
}

CubicSurface example_cubic_surface() { return CubicSurface{fixtures::example_cubic(), fixtures::example_line(), ""}; }
DP4Surface example_dp4() { return DP4Surface{fixtures::example_q0(), fixtures::example_q1(), {}, {}}; }

}  // namespace

TEST_CASE("finite field arithmetic") {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{7, 1}, {3, 2}, {5, 2}, {2, 3}, {3, 3}}) {
    FiniteField f(p, k);
    std::uint64_t q = f.q();
    CHECK(f.modulus().degree() == static_cast<int>(k));
    CHECK((k == 1 || modp::is_irreducible(f.modulus())));
    std::mt19937_64 rng(p * 100 + k);
    for (int trial = 0; trial < 200; ++trial) {
      auto a = static_cast<FiniteField::Elt>(testutil::rand_in(rng, 0, static_cast<long>(q - 1)));
      auto b = static_cast<FiniteField::Elt>(testutil::rand_in(rng, 0, static_cast<long>(q - 1)));
      auto c = static_cast<FiniteField::Elt>(testutil::rand_in(rng, 0, static_cast<long>(q - 1)));
      CHECK(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.pow(a, q) == a);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
    }
    // coefficient vectors add componentwise
    for (FiniteField::Elt a = 0; a < q; ++a) {
      auto ca = f.coeffs(a);
      CHECK(f.from_coeffs(ca) == a);
      auto cb = f.coeffs(f.add(a, f.one()));
      ca[0] = (ca[0] + 1) % p;
      CHECK(ca == cb);
    }
    std::size_t squares = 0;
    for (FiniteField::Elt a = 0; a < q; ++a) squares += f.is_square(a);
    if (p != 2) CHECK(squares == (q - 1) / 2 + 1);
  }
  // first irreducible in lexicographic order
  CHECK(FiniteField(3, 2).modulus().c == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(FiniteField(5, 2).modulus().c == std::vector<std::uint64_t>{2, 0, 1});
  CHECK(FiniteField(7).from_rational(Rational(1, 3)) == FiniteField(7).from_int(5));
  CHECK_THROWS_AS(FiniteField(7).from_rational(Rational(1, 7)), Error);
}

TEST_CASE("T x| S5 and the 27 lines model") {
  const Lines27& m = Lines27::instance();
  std::vector<GroupElt> g = enumerate_group();
  CHECK(g.size() == 1920);
  CHECK(closure({g[1], g[100], g[777]}).size() <= 1920);
  std::size_t meets = 0;
  for (std::size_t a = 1; a < kLines; ++a) meets += m.intersect(0, a) == 1;
  CHECK(meets == 10);
  for (const auto& x : g) {
    CHECK(x.valid());
    auto perm = m.permutation(x);
    CHECK(std::set<std::size_t>(perm.begin(), perm.end()).size() == kLines);
    CHECK(perm[0] == 0);
    for (std::size_t a = 0; a < kLines; ++a)
      for (std::size_t b = a; b < kLines; ++b) REQUIRE(m.intersect(a, b) == m.intersect(perm[a], perm[b]));
    // the trace is a class function
    CHECK(m.pic_trace(x) == m.pic_trace(representative(class_of(x))));
    CHECK(total_sign(class_of(x)) == 1);
  }
  // the action is a homomorphism
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const GroupElt& a = g[testutil::rand_in(rng, 0, 1919)];
    const GroupElt& b = g[testutil::rand_in(rng, 0, 1919)];
    for (std::size_t l = 0; l < kLines; ++l) CHECK(m.act(compose(a, b), l) == m.act(a, m.act(b, l)));
    CHECK(compose(a, inverse(a)) == GroupElt::identity());
  }
  CHECK(closure(g).size() == 1920);
  CHECK(m.pic_trace(GroupElt::identity()) == 7);
  CHECK(orbit_lengths({GroupElt::identity()}) == std::vector<std::size_t>(27, 1));
  CHECK(orbit_lengths(g) == std::vector<std::size_t>{1, 10, 16});
  CHECK(block_stabilizer({{0}, {1, 2}, {3, 4}}).size() == 64);
}

TEST_CASE("point counts and line census") {
  CubicSurface fermat{fixtures::fermat(), {}, ""};
  CHECK(count_points(reduce_mod_p(fermat, field(7))) == 99);
  CHECK(census_lines(reduce_mod_p(fermat, field(7))) == 27);
  // cubing is a bijection of F_5: points correspond to the plane y0+..+y3 = 0
  CHECK(count_points(reduce_mod_p(fermat, field(5))) == 31);
  // only zeta = 1 survives: three lines x_i = -x_j, x_k = -x_l
  CHECK(census_lines(reduce_mod_p(fermat, field(5))) == 3);
  // two planes meeting in a line with q + 1 points
  CubicSurface planes{fixtures::cubic_from({{2, 1, 0, 0, 1}}), {}, ""};
  for (std::uint64_t q : {5ull, 7ull, 11ull})
    CHECK(count_points(reduce_mod_p(planes, field(q))) == 2 * (q * q + q + 1) - (q + 1));
  CHECK_THROWS_AS(reduce_mod_p(CubicSurface{fixtures::cubic_from({{3, 0, 0, 0, 7}}), {}, ""}, field(7)), Error);
  CHECK_THROWS_AS(count_points(reduce_mod_p(fermat, field(7)), EnumerationBudget{10}), Error);
  // smooth cubics over F_q: q^2 + t q + 1 with |t| <= 7
  std::mt19937_64 rng(31);
  int seen = 0;
  for (int trial = 0; trial < 10 && seen < 4; ++trial) {
    CubicSurface s{testutil::random_cubic(rng, -4, 4), {}, ""};
    auto r = reduce_mod_p(s, field(11));
    if (has_singular_point(r) || has_singular_point(reduce_mod_p(s, field(11, 2)))) continue;
    if (!smooth_cubic(s)) continue;
    ++seen;
    long long n = static_cast<long long>(count_points(r));
    long long rest = n - 121 - 1;
    CHECK(rest % 11 == 0);
    CHECK(std::llabs(rest / 11) <= 7);
    CHECK(census_lines(r) <= 27);
  }
  CHECK(seen > 0);
}

TEST_CASE("singular points over F_p and F_p^2") {
  // cone x0^3 + x1^3 + x2^3 is singular at (0:0:0:1) over every field
  CubicSurface cone{fixtures::cubic_from({{3, 0, 0, 0, 1}, {0, 3, 0, 0, 1}, {0, 0, 3, 0, 1}}), {}, ""};
  CHECK(has_singular_point(reduce_mod_p(cone, field(7))));
  CHECK_FALSE(has_singular_point(reduce_mod_p(CubicSurface{fixtures::fermat(), {}, ""}, field(7))));
  // diagonal DP4 singular at (1 : +-i : 0 : 0 : 0): invisible over F_7, visible over F_49
  auto diag = [](std::vector<long> a, std::vector<long> b) {
    Vec ua, ub;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i; j < 5; ++j) {
        ua.emplace_back(i == j ? a[i] : 0);
        ub.emplace_back(i == j ? b[i] : 0);
      }
    return DP4Surface{QuadForm::from_upper(5, ua), QuadForm::from_upper(5, ub), {}, {}};
  };
  DP4Surface w = diag({1, 1, 1, 1, 1}, {1, 1, 2, 3, 4});
  CHECK_FALSE(smooth_dp4(w));
  CHECK_FALSE(has_singular_point(reduce_mod_p(w, field(7))));
  CHECK(has_singular_point(reduce_mod_p(w, field(7, 2))));
  CHECK_FALSE(has_singular_point(reduce_mod_p(diag({1, 1, 1, 1, 1}, {0, 1, 2, 3, 4}), field(7, 2))));
}

TEST_CASE("frobenius classes of the worked example") {
  const FrobeniusData& d = example_data();
  REQUIRE(d.blocks.size() == 3);
  CHECK(d.blocks[0] == std::vector<int>{0});
  FrobSample s11 = frobenius_class(d, 11);
  std::vector<int> lengths;
  for (auto [len, sign] : s11.flat) lengths.push_back(len);
  CHECK(lengths == std::vector<int>{1, 1, 1, 2});
  CHECK(s11.per_block[1].size() == 2);  // T^2 - 6T + 6 splits mod 11
  CHECK(s11.per_block[2].size() == 1);  // T^2 + 18T + 75 stays irreducible
  CHECK_THROWS_AS(frobenius_class(d, 2), Error);
  CHECK_THROWS_AS(frobenius_class(d, 23), Error);  // 23 | disc(p)
  auto samples = sample_classes(d, 3, 500, 1000, 2);
  CHECK(samples.size() > 40);
  for (const auto& s : samples) CHECK(total_sign(s.flat) == 1);
  // independent of the representative of split_rho
  FrobeniusData d2 = d;
  d2.split_rho = d.split_rho + UniPoly{0, 7} * d.p;
  for (const auto& s : samples) {
    FrobSample t = frobenius_class(d2, s.q);
    CHECK(t.per_block == s.per_block);
  }
  // sampling with more threads gives the same records
  auto again = sample_classes(d, 3, 500, 40, 1);
  REQUIRE(again.size() == 40);
  for (std::size_t k = 0; k < 40; ++k) CHECK(again[k].per_block == samples[k].per_block);
}

TEST_CASE("split algebra with square radicands has trivial signs") {
  FrobeniusData d;
  d.p = UniPoly{-120, 274, -225, 85, -15, 1};  // (T-1)...(T-5)
  for (int i = 1; i <= 5; ++i) {
    d.factors.push_back(UniPoly::linear_root(i));
    d.blocks.push_back({i - 1});
  }
  d.split_rho = interpolate({1, 2, 3, 4, 5}, {1, 4, 9, 16, 25});
  for (std::uint64_t q : {7ull, 11ull, 13ull, 101ull}) {
    FrobSample s = frobenius_class(d, q);
    CHECK(s.flat == FrobClass(5, {1, 1}));
  }
}

TEST_CASE("subgroup identification for the worked example") {
  auto samples = sample_classes(example_data(), 3, 500, 40);
  REQUIRE(samples.size() == 40);
  SubgroupReport r = identify_subgroup(samples, example_data().blocks);
  CHECK(r.ambient_order == 64);
  CHECK(r.exact_class_match);
  CHECK(r.candidates == 1);
  CHECK(r.order == 16);
  CHECK(r.orbit_lengths == std::vector<std::size_t>{1, 2, 4, 4, 16});
  CHECK(r.method == "sampling-based");
}

TEST_CASE("Lefschetz consistency") {
  FrobSample identity{7, {}, FrobClass(5, {1, 1})};
  LefschetzResult f7 = lefschetz_check(CubicSurface{fixtures::fermat(), {}, ""}, identity);
  CHECK(f7.trace == 7);
  CHECK(f7.count == 99);
  CHECK(f7.ok);
  // traces and counts frozen against an independent enumeration
  std::vector<std::tuple<std::uint64_t, int, std::uint64_t>> expect{
      {13, 1, 183}, {17, 3, 341}, {19, 1, 381}, {29, 1, 871}, {31, 3, 1055}};
  for (auto [q, t, n] : expect) {
    LefschetzResult r = lefschetz_check(example_cubic_surface(), frobenius_class(example_data(), q));
    CHECK(r.trace == t);
    CHECK(r.count == n);
    CHECK(r.ok);
    // blow-up of one rational point: #S = #V + q
    CHECK(count_points(reduce_mod_p(example_dp4(), field(q))) + q == n);
  }
  // a wrong class is caught
  LefschetzResult bad = lefschetz_check(example_cubic_surface(), FrobSample{13, {}, FrobClass(5, {1, 1})});
  CHECK_FALSE(bad.ok);
}
