#include <doctest.h>

#include <random>
#include <set>

#include "cubsurf/descent.hpp"
#include "cubsurf/geometry.hpp"
#include "cubsurf/serialize.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace cubsurf;
using json_io::Json;

namespace {

// parse(emit(x)) == x, also after a trip through text
template <class T, class Parse>
void round_trip(const T& x, Parse&& parse) {
  Json j = json_io::emit(x);
  CHECK(parse(j) == x);
  CHECK(parse(json_io::parse_text(j.dump())) == x);
}

Rational random_rational(std::mt19937_64& rng) {
  Integer num = testutil::rand_in(rng, -1000, 1000), den = testutil::rand_in(rng, 1, 50);
  if (testutil::rand_in(rng, 0, 3) == 0) num *= Integer("123456789012345678901234567890");
  return make_rational(num, den);
}

UniPoly random_monic_squarefree(std::mt19937_64& rng) {
  for (;;) {
    std::vector<Rational> c;
    for (int i = 0; i < 5; ++i) c.emplace_back(testutil::rand_in(rng, -9, 9));
    c.emplace_back(1);
    UniPoly p(c);
    if (is_squarefree(p)) return p;
  }
}

UniPoly random_rep(std::mt19937_64& rng) {
  std::vector<Rational> c;
  for (int i = 0; i < 5; ++i) c.emplace_back(testutil::rand_in(rng, -5, 5));
  return UniPoly(c);
}

DescentInput random_descent(std::mt19937_64& rng) {
  for (;;) {
    EtaleAlgebra alg(random_monic_squarefree(rng));
    AlgElement a = alg.element(random_rep(rng)), b = alg.element(random_rep(rng));
    if (!a.is_unit() || !b.is_unit()) continue;
    std::vector<AlgElement> l = power_basis(alg);
    return DescentInput{alg, a, b, l};
  }
}

std::vector<int> error_codes() {
  std::vector<int> v;
  for (int c = 0; c <= static_cast<int>(ErrorCode::internal); ++c) v.push_back(c);
  return v;
}

}  // namespace

TEST_CASE("scalars and polynomials round-trip") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    Rational q = random_rational(rng);
    round_trip(q, [](const Json& j) { return json_io::parse_rational(j); });
    Integer n = q.get_num();
    round_trip(n, [](const Json& j) { return json_io::parse_integer(j); });
  }
  CHECK(json_io::emit(Rational(3)) == "3/1");
  CHECK(json_io::emit(Integer("123456789012345678901234567890")).is_string());
  CHECK(json_io::emit(Integer(-7)) == -7);
  CHECK(json_io::parse_rational(Json(5)) == 5);
  CHECK(json_io::parse_rational(Json("-6/4")) == make_rational(-3, 2));
  for (int it = 0; it < 50; ++it) {
    std::vector<Rational> c;
    for (int k = 0; k < testutil::rand_in(rng, 0, 7); ++k) c.push_back(random_rational(rng));
    round_trip(UniPoly(c), [](const Json& j) { return json_io::parse_unipoly(j); });
    round_trip(testutil::random_matrix(rng, 3, 4, -9, 9), [](const Json& j) { return json_io::parse_matrix(j); });
  }
  CHECK(json_io::emit(UniPoly{1, 2, 3}) == Json::parse(R"(["1/1","2/1","3/1"])"));
}

TEST_CASE("forms, points and lines round-trip") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 50; ++it) {
    round_trip(testutil::random_lin(rng, 4, -9, 9), [](const Json& j) { return json_io::parse_linform(j); });
    round_trip(testutil::random_quad(rng, 5, -50, 50), [](const Json& j) { return json_io::parse_quadform(j); });
    round_trip(testutil::random_cubic(rng, -50, 50), [](const Json& j) { return json_io::parse_cubic_form(j); });
    ProjPoint p{testutil::rand_in(rng, -9, 9), testutil::rand_in(rng, -9, 9), testutil::rand_in(rng, -9, 9), 1};
    round_trip(p, [](const Json& j) { return json_io::parse_point(j); });
    ProjPoint q{1, testutil::rand_in(rng, -9, 9), 0, testutil::rand_in(rng, 2, 9)};
    round_trip(ProjLine::from_points(p, q), [](const Json& j) { return json_io::parse_line(j); });
  }
  // a cubic term is {exponents, coeff}
  Json f = json_io::emit(fixtures::fermat());
  CHECK(f.size() == 4);
  CHECK(f[0]["exponents"] == Json::parse("[0,0,0,3]"));
  CHECK(f[0]["coeff"] == "1/1");
  // a line from forms alone keeps those forms
  LinForm l0(Vec{1, 1, 0, 0}), l1(Vec{0, 0, 1, 1});
  ProjLine line = ProjLine::from_forms(l0, l1);
  round_trip(line, [](const Json& j) { return json_io::parse_line(j); });
  Json forms_only{{"forms", Json::array({json_io::emit(l0), json_io::emit(l1)})}};
  CHECK(json_io::parse_line(forms_only).same_as(line));
}

TEST_CASE("descent artifacts round-trip") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 10; ++it) {
    DescentInput d = random_descent(rng);
    round_trip(d, [](const Json& j) { return json_io::parse_descent_input(j); });
    auto [a, b] = strategy_ab(d.algebra, d.algebra.r());
    DescentInput s{d.algebra, a, b, d.l};
    DP4Surface v = build_quadrics(s);
    round_trip(v, [](const Json& j) { return json_io::parse_dp4(j); });
    round_trip(radicand_report(s), [](const Json& j) { return json_io::parse_radicand_report(j); });
    round_trip(tritangent_analysis(v), [](const Json& j) { return json_io::parse_tritangents(j); });
  }
  DescentResult ex = run_strategy(fixtures::example_p(), UniPoly{0, 1}, fixtures::example_l());
  round_trip(ex.radicands, [](const Json& j) { return json_io::parse_radicand_report(j); });
  round_trip(tritangent_analysis(ex.surface), [](const Json& j) { return json_io::parse_tritangents(j); });
}

TEST_CASE("surfaces and reductions round-trip") {
  std::mt19937_64 rng(14);
  CubicSurface worked{fixtures::example_cubic(), fixtures::example_line(), "worked example"};
  round_trip(worked, [](const Json& j) { return json_io::parse_cubic_surface(j); });
  round_trip(greedy_reduce(worked), [](const Json& j) { return json_io::parse_reduce_result(j); });
  DP4Surface v{fixtures::example_q0(), fixtures::example_q1(), {}, {}};
  CubicFromDP4 c = dp4_to_cubic(v, fixtures::example_point());
  round_trip(c.surface, [](const Json& j) { return json_io::parse_cubic_surface(j); });
  DP4FromCubic back = cubic_to_dp4(c.surface, c.l0, c.l1);
  REQUIRE(back.surface.blowdown.has_value());
  round_trip(back.surface, [](const Json& j) { return json_io::parse_dp4(j); });
  for (int it = 0; it < 10; ++it) {
    CubicSurface s{testutil::random_cubic(rng, -9, 9), {}, "random"};
    if (s.f.is_zero()) continue;
    round_trip(s, [](const Json& j) { return json_io::parse_cubic_surface(j); });
    round_trip(greedy_reduce(s), [](const Json& j) { return json_io::parse_reduce_result(j); });
  }
}

TEST_CASE("search, frobenius and pipeline records round-trip") {
  std::mt19937_64 rng(15);
  SearchResult sr;
  sr.points = {ProjPoint{8, -13, 4, 2, -3}, ProjPoint{2, -15, -14, -6, 3}};
  sr.height_bound = 13;
  sr.milliseconds = 0.1 + 1.0 / 3.0;
  sr.threads_used = 3;
  round_trip(sr, [](const Json& j) { return json_io::parse_search_result(j); });
  for (int it = 0; it < 30; ++it) {
    GroupElt g;
    std::array<int, 5> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    g.sigma = perm;
    int neg = 0;
    for (int i = 0; i < 4; ++i)
      if (testutil::rand_in(rng, 0, 1)) g.t[i] = -1, ++neg;
    if (neg % 2) g.t[4] = -1;
    round_trip(g, [](const Json& j) { return json_io::parse_group_elt(j); });
    FrobSample s{static_cast<std::uint64_t>(testutil::rand_in(rng, 3, 500)), {}, class_of(g)};
    round_trip(s, [](const Json& j) { return json_io::parse_frob_sample(j); });
    LefschetzResult lr{s.q, static_cast<int>(testutil::rand_in(rng, -2, 7)), 100, 101, false};
    round_trip(lr, [](const Json& j) { return json_io::parse_lefschetz(j); });
  }
  SubgroupReport sub;
  sub.ambient_order = 64;
  sub.order = 16;
  sub.exact_class_match = true;
  sub.generators = {GroupElt::identity()};
  sub.orbit_lengths = {1, 2, 4, 4, 16};
  round_trip(sub, [](const Json& j) { return json_io::parse_subgroup_report(j); });

  PipelineConfig cfg;
  cfg.p = fixtures::example_p();
  round_trip(cfg, [](const Json& j) { return json_io::parse_pipeline_config(j); });
  cfg.l = fixtures::example_l();
  cfg.height = 13;
  cfg.primes = {5, 200, 12};
  cfg.report_path = "report.json";
  round_trip(cfg, [](const Json& j) { return json_io::parse_pipeline_config(j); });
  // everything but p defaults
  PipelineConfig minimal = json_io::parse_pipeline_config(Json{{"p", json_io::emit(fixtures::example_p())}});
  CHECK(minimal.x == UniPoly{0, 1});
  CHECK_FALSE(minimal.l.has_value());
  CHECK(minimal.height == 100);
}

TEST_CASE("documents are versioned and typed") {
  Json data = json_io::emit(fixtures::example_q0());
  Json doc = json_io::document("quadric", data);
  CHECK(doc["schema_version"] == json_io::kSchemaVersion);
  CHECK(json_io::open_document(doc, "quadric") == data);
  CHECK(json_io::unwrap(doc, "quadric") == data);
  CHECK(json_io::unwrap(data, "quadric") == data);
  auto schema_error = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code() == ErrorCode::json_schema;
    }
    return false;
  };
  CHECK(schema_error([&] { json_io::open_document(doc, "cubic_surface"); }));
  Json wrong = doc;
  wrong["schema_version"] = json_io::kSchemaVersion + 1;
  CHECK(schema_error([&] { json_io::open_document(wrong, "quadric"); }));
  Json extra = doc;
  extra["comment"] = "x";
  CHECK(schema_error([&] { json_io::open_document(extra, "quadric"); }));
}

TEST_CASE("malformed input is rejected with json_schema") {
  auto schema_error = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code() == ErrorCode::json_schema;
    }
    return false;
  };
  CHECK(schema_error([] { json_io::parse_text("{\"p\": [1, 2"); }));
  CHECK(schema_error([] { json_io::parse_rational(Json("1/0")); }));
  CHECK(schema_error([] { json_io::parse_rational(Json("one")); }));
  CHECK(schema_error([] { json_io::parse_rational(Json(0.5)); }));
  CHECK(schema_error([] { json_io::parse_integer(Json("3/2")); }));
  CHECK(schema_error([] { json_io::parse_quadform(Json::parse(R"(["1","2"])")); }));
  CHECK(schema_error([] { json_io::parse_cubic_form(Json::parse(R"([{"exponents":[2,0,0,0],"coeff":"1"}])")); }));
  CHECK(schema_error([] {
    json_io::parse_cubic_form(Json::parse(R"([{"exponents":[3,0,0,0],"coeff":"1"},{"exponents":[3,0,0,0],"coeff":"2"}])"));
  }));
  CHECK(schema_error([] { json_io::parse_cubic_form(Json::parse(R"([{"exponents":[3,0,0,0],"coeff":"1","note":1}])")); }));
  Json cfg{{"p", json_io::emit(fixtures::example_p())}, {"hieght", 5}};
  CHECK(schema_error([&] { json_io::parse_pipeline_config(cfg); }));
  Json cfg_l{{"p", json_io::emit(fixtures::example_p())}, {"l", "lattice"}};
  CHECK(schema_error([&] { json_io::parse_pipeline_config(cfg_l); }));
  Json g{{"t", Json::parse("[-1,1,1,1,1]")}, {"sigma", Json::parse("[0,1,2,3,4]")}};
  CHECK(schema_error([&] { json_io::parse_group_elt(g); }));
  // semantic invariants still apply after parsing
  Json dp4{{"q0", json_io::emit(fixtures::example_q0())}, {"q1", json_io::emit(fixtures::example_q0())}};
  CHECK_THROWS_AS(json_io::parse_dp4(dp4), Error);
  CubicSurface off{fixtures::fermat(), fixtures::example_line(), ""};
  Json cubic = json_io::emit(off);
  try {
    json_io::parse_cubic_surface(cubic);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::line_not_on_surface);
  }
}

TEST_CASE("error records and the exit-code table") {
  std::set<int> statuses;
  std::set<std::string> names;
  for (int c : error_codes()) {
    auto code = static_cast<ErrorCode>(c);
    int s = exit_status(code);
    CHECK(s != 0);
    CHECK(statuses.insert(s).second);
    CHECK(names.insert(std::string(to_string(code))).second);
    Json rec = json_io::emit(Error(code, "m"));
    CHECK(rec["exit_status"] == s);
    CHECK(rec["error"] == std::string(to_string(code)));
  }
  CHECK(statuses.size() == 20);
}
