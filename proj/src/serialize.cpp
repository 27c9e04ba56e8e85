#include "cubsurf/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

namespace cubsurf::json_io {

namespace {

[[noreturn]] void schema_error(const std::string& what) { fail(ErrorCode::json_schema, what); }

const Json& field(const Json& j, std::string_view key) {
  auto it = j.find(std::string(key));
  if (it == j.end()) schema_error("missing field '" + std::string(key) + "'");
  return *it;
}

bool has(const Json& j, std::string_view key) { return j.contains(std::string(key)); }

const Json& array_of(const Json& j, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be an array");
  return j;
}

const Json& array_of(const Json& j, std::size_t size, const char* what) {
  array_of(j, what);
  if (j.size() != size) schema_error(std::string(what) + " must have " + std::to_string(size) + " entries");
  return j;
}

bool get_bool(const Json& j, const char* what) {
  if (!j.is_boolean()) schema_error(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

std::uint64_t get_unsigned(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) schema_error(std::string(what) + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

long get_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) schema_error(std::string(what) + " must be an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    schema_error(std::string(what) + " out of range");
  return j.get<long>();
}

int get_int(const Json& j, const char* what) {
  long v = get_long(j, what);
  if (v < INT32_MIN || v > INT32_MAX) schema_error(std::string(what) + " out of range");
  return static_cast<int>(v);
}

double get_double(const Json& j, const char* what) {
  if (!j.is_number()) schema_error(std::string(what) + " must be a number");
  return j.get<double>();
}

std::string get_string(const Json& j, const char* what) {
  if (!j.is_string()) schema_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Json emit_sizes(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

std::vector<std::size_t> parse_sizes(const Json& j, const char* what) {
  array_of(j, what);
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(get_unsigned(x, what));
  return out;
}

template <class T, class F>
std::vector<T> parse_list(const Json& j, const char* what, F&& parse_one) {
  array_of(j, what);
  std::vector<T> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(parse_one(x));
  return out;
}

template <class T>
Json emit_list(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(emit(x));
  return a;
}

Json emit_blocks(const std::vector<FrobClass>& per_block) {
  Json a = Json::array();
  for (const auto& c : per_block) a.push_back(emit(c));
  return a;
}

Json emit_element_list(const std::vector<AlgElement>& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(emit(e));
  return a;
}

Json emit_polys(const std::vector<UniPoly>& v) {
  Json a = Json::array();
  for (const auto& f : v) a.push_back(emit(f));
  return a;
}

}  // namespace

void check_keys(const Json& j, std::initializer_list<std::string_view> required,
                std::initializer_list<std::string_view> optional) {
  if (!j.is_object()) schema_error("expected a JSON object");
  for (auto k : required)
    if (!has(j, k)) schema_error("missing field '" + std::string(k) + "'");
  for (const auto& [k, v] : j.items()) {
    bool known = std::find(required.begin(), required.end(), k) != required.end() ||
                 std::find(optional.begin(), optional.end(), k) != optional.end();
    if (!known) schema_error("unknown field '" + k + "'");
  }
}

// scalars and polynomials

Json emit(const Rational& q) { return format_rational(q); }

Json emit(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Rational parse_rational(const Json& j) {
  if (j.is_string()) return cubsurf::parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(parse_integer(j));
  schema_error("rational must be a \"num/den\" string or an integer");
}

Integer parse_integer(const Json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Rational q = cubsurf::parse_rational(j.get<std::string>());
    if (q.get_den() != 1) schema_error("expected an integer, got " + j.get<std::string>());
    return q.get_num();
  }
  schema_error("integer must be a number or a decimal string");
}

Json emit(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(emit(x));
  return a;
}

Vec parse_vec(const Json& j) { return parse_list<Rational>(j, "rational vector", [](const Json& x) { return parse_rational(x); }); }

Json emit(const UniPoly& f) { return emit(f.coeffs()); }

UniPoly parse_unipoly(const Json& j) { return UniPoly(parse_vec(j)); }

Json emit(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(emit(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Matrix parse_matrix(const Json& j) {
  array_of(j, "matrix");
  std::size_t rows = j.size(), cols = rows ? array_of(j[0], "matrix row").size() : 0;
  Vec entries;
  for (const auto& row : j) {
    array_of(row, cols, "matrix row");
    for (const auto& x : row) entries.push_back(parse_rational(x));
  }
  return Matrix(rows, cols, entries);
}

// forms

Json emit(const LinForm& l) { return emit(l.c); }

LinForm parse_linform(const Json& j) { return LinForm(parse_vec(j)); }

Json emit(const QuadForm& q) { return emit(q.upper()); }

QuadForm parse_quadform(const Json& j) {
  Vec upper = parse_vec(j);
  std::size_t n = 0;
  while (n * (n + 1) / 2 < upper.size()) ++n;
  if (n == 0 || n * (n + 1) / 2 != upper.size()) schema_error("quadric upper list must have n(n+1)/2 entries");
  return QuadForm::from_upper(n, upper);
}

Json emit(const CubicForm4& f) {
  Json a = Json::array();
  for (const auto& [e, c] : f.terms()) a.push_back(Json{{"exponents", e}, {"coeff", emit(c)}});
  return a;
}

CubicForm4 parse_cubic_form(const Json& j) {
  array_of(j, "cubic form");
  CubicForm4 f;
  std::set<Exponent4> seen;
  for (const auto& t : j) {
    check_keys(t, {"exponents", "coeff"});
    const Json& ej = array_of(field(t, "exponents"), 4, "exponents");
    Exponent4 e{};
    int total = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      e[i] = get_int(ej[i], "exponent");
      if (e[i] < 0) schema_error("negative exponent");
      total += e[i];
    }
    if (total != 3) schema_error("cubic monomial must have degree 3");
    if (!seen.insert(e).second) schema_error("repeated cubic monomial");
    f.add(e, parse_rational(field(t, "coeff")));
  }
  return f;
}

Json emit(const ProjPoint& p) {
  Json a = Json::array();
  for (const auto& x : p.coords()) a.push_back(emit(x));
  return a;
}

ProjPoint parse_point(const Json& j) {
  return ProjPoint(parse_list<Integer>(j, "point", [](const Json& x) { return parse_integer(x); }));
}

Json emit(const ProjLine& line) {
  return Json{{"points", Json::array({emit(line.p()), emit(line.q())})},
              {"forms", Json::array({emit(line.l0()), emit(line.l1())})}};
}

ProjLine parse_line(const Json& j) {
  check_keys(j, {}, {"points", "forms"});
  bool pts = has(j, "points"), fms = has(j, "forms");
  if (!pts && !fms) schema_error("line needs points or forms");
  if (pts) array_of(j["points"], 2, "line points");
  if (fms) array_of(j["forms"], 2, "line forms");
  if (pts && fms)
    return ProjLine::from_parts(parse_point(j["points"][0]), parse_point(j["points"][1]),
                                parse_linform(j["forms"][0]), parse_linform(j["forms"][1]));
  if (pts) return ProjLine::from_points(parse_point(j["points"][0]), parse_point(j["points"][1]));
  return ProjLine::from_forms(parse_linform(j["forms"][0]), parse_linform(j["forms"][1]));
}

// algebra and descent

Json emit(const AlgElement& e) { return emit(e.rep()); }

AlgElement parse_element(const Json& j, const EtaleAlgebra& alg) { return alg.element(parse_unipoly(j)); }

Json emit(const DescentInput& d) {
  return Json{{"p", emit(d.algebra.modulus())}, {"a", emit(d.a)}, {"b", emit(d.b)}, {"l", emit_element_list(d.l)}};
}

DescentInput parse_descent_input(const Json& j) {
  check_keys(j, {"p", "a", "b", "l"});
  EtaleAlgebra alg(parse_unipoly(field(j, "p")));
  auto l = parse_list<AlgElement>(array_of(field(j, "l"), kAlgebraDegree, "l"), "l",
                                  [&](const Json& x) { return parse_element(x, alg); });
  return DescentInput{alg, parse_element(field(j, "a"), alg), parse_element(field(j, "b"), alg), std::move(l)};
}

Json emit(const BlowDownData& b) {
  return Json{{"cubic", emit(b.cubic)}, {"l0", emit(b.l0)}, {"l1", emit(b.l1)}, {"q0", emit(b.q0)}, {"q1", emit(b.q1)}};
}

BlowDownData parse_blowdown(const Json& j) {
  check_keys(j, {"cubic", "l0", "l1", "q0", "q1"});
  return BlowDownData{parse_cubic_form(field(j, "cubic")), parse_linform(field(j, "l0")), parse_linform(field(j, "l1")),
                      parse_quadform(field(j, "q0")), parse_quadform(field(j, "q1"))};
}

Json emit(const DP4Surface& v) {
  Json j{{"q0", emit(v.q0)}, {"q1", emit(v.q1)}};
  if (v.descent) j["descent"] = emit(*v.descent);
  if (v.blowdown) j["blowdown"] = emit(*v.blowdown);
  return j;
}

DP4Surface parse_dp4(const Json& j) {
  check_keys(j, {"q0", "q1"}, {"descent", "blowdown"});
  DP4Surface v{parse_quadform(field(j, "q0")), parse_quadform(field(j, "q1")), {}, {}};
  if (has(j, "descent")) v.descent = parse_descent_input(j["descent"]);
  if (has(j, "blowdown")) v.blowdown = parse_blowdown(j["blowdown"]);
  validate(v);
  return v;
}

Json emit(const CubicSurface& s) {
  Json j{{"f", emit(s.f)}};
  if (s.known_line) j["known_line"] = emit(*s.known_line);
  j["provenance"] = s.provenance;
  return j;
}

CubicSurface parse_cubic_surface(const Json& j) {
  check_keys(j, {"f"}, {"known_line", "provenance"});
  CubicSurface s{parse_cubic_form(field(j, "f")), {}, ""};
  if (has(j, "known_line")) s.known_line = parse_line(j["known_line"]);
  if (has(j, "provenance")) s.provenance = get_string(j["provenance"], "provenance");
  validate(s);
  return s;
}

Json emit(const RadicandReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x{{"factor", emit(e.factor)}, {"algebra_factor", emit(e.algebra_factor)}};
    if (e.root) x["root"] = emit(*e.root);
    x["radicand"] = emit(e.radicand);
    x["square_class"] = emit(e.square_class);
    x["split_radicand"] = emit(e.split_radicand);
    x["split_class"] = emit(e.split_class);
    entries.push_back(x);
  }
  return Json{{"p", emit(r.rho.algebra().modulus())},
              {"rho", emit(r.rho)},
              {"split_rho", emit(r.split_rho)},
              {"conj_poly", emit(r.conj_poly)},
              {"tritangent_poly", emit(r.tritangent_poly)},
              {"entries", entries},
              {"norm_rho_square", r.norm_rho_square},
              {"norm_split_rho_square", r.norm_split_rho_square},
              {"norm_a_square", r.norm_a_square}};
}

RadicandReport parse_radicand_report(const Json& j) {
  check_keys(j, {"p", "rho", "split_rho", "conj_poly", "tritangent_poly", "entries", "norm_rho_square",
                 "norm_split_rho_square", "norm_a_square"});
  EtaleAlgebra alg(parse_unipoly(field(j, "p")));
  RadicandReport r{parse_element(field(j, "rho"), alg),
                   parse_element(field(j, "split_rho"), alg),
                   parse_unipoly(field(j, "conj_poly")),
                   parse_unipoly(field(j, "tritangent_poly")),
                   {},
                   get_bool(field(j, "norm_rho_square"), "norm_rho_square"),
                   get_bool(field(j, "norm_split_rho_square"), "norm_split_rho_square"),
                   get_bool(field(j, "norm_a_square"), "norm_a_square")};
  r.entries = parse_list<RadicandEntry>(field(j, "entries"), "entries", [](const Json& x) {
    check_keys(x, {"factor", "algebra_factor", "radicand", "square_class", "split_radicand", "split_class"}, {"root"});
    RadicandEntry e;
    e.factor = parse_unipoly(field(x, "factor"));
    e.algebra_factor = parse_unipoly(field(x, "algebra_factor"));
    if (has(x, "root")) e.root = parse_rational(x["root"]);
    e.radicand = parse_rational(field(x, "radicand"));
    e.square_class = parse_integer(field(x, "square_class"));
    e.split_radicand = parse_rational(field(x, "split_radicand"));
    e.split_class = parse_integer(field(x, "split_class"));
    return e;
  });
  return r;
}

// search and geometry

Json emit(const SearchResult& r) {
  return Json{{"points", emit_list(r.points)},
              {"height_bound", r.height_bound},
              {"convention", r.convention},
              {"milliseconds", r.milliseconds},
              {"threads_used", r.threads_used}};
}

SearchResult parse_search_result(const Json& j) {
  check_keys(j, {"points", "height_bound", "convention", "milliseconds", "threads_used"});
  SearchResult r;
  r.points = parse_list<ProjPoint>(field(j, "points"), "points", [](const Json& x) { return parse_point(x); });
  r.height_bound = get_long(field(j, "height_bound"), "height_bound");
  r.convention = get_string(field(j, "convention"), "convention");
  r.milliseconds = get_double(field(j, "milliseconds"), "milliseconds");
  r.threads_used = static_cast<unsigned>(get_unsigned(field(j, "threads_used"), "threads_used"));
  return r;
}

Json emit(const TritangentEntry& t) {
  Json j = Json::object();
  if (t.point) j["point"] = Json::array({emit(t.point->first), emit(t.point->second)});
  j["factor"] = emit(t.factor);
  j["multiplicity"] = t.multiplicity;
  j["rank_at_root"] = t.rank_at_root;
  if (t.plane) j["plane"] = emit(*t.plane);
  if (t.vertex) j["vertex"] = emit(*t.vertex);
  j["split_disc"] = emit(t.split_disc);
  return j;
}

TritangentEntry parse_tritangent(const Json& j) {
  check_keys(j, {"factor", "multiplicity", "rank_at_root", "split_disc"}, {"point", "plane", "vertex"});
  TritangentEntry t;
  if (has(j, "point")) {
    const Json& pt = array_of(j["point"], 2, "tritangent point");
    t.point = std::make_pair(parse_integer(pt[0]), parse_integer(pt[1]));
  }
  t.factor = parse_unipoly(field(j, "factor"));
  t.multiplicity = static_cast<unsigned>(get_unsigned(field(j, "multiplicity"), "multiplicity"));
  t.rank_at_root = get_unsigned(field(j, "rank_at_root"), "rank_at_root");
  if (has(j, "plane")) t.plane = parse_linform(j["plane"]);
  if (has(j, "vertex")) t.vertex = parse_point(j["vertex"]);
  t.split_disc = parse_integer(field(j, "split_disc"));
  return t;
}

Json emit(const std::vector<TritangentEntry>& ts) { return emit_list(ts); }

std::vector<TritangentEntry> parse_tritangents(const Json& j) {
  return parse_list<TritangentEntry>(j, "tritangents", [](const Json& x) { return parse_tritangent(x); });
}

Json emit(const ReduceResult& r) {
  return Json{{"surface", emit(r.surface)}, {"change", emit(r.change)}, {"moves", r.moves}};
}

ReduceResult parse_reduce_result(const Json& j) {
  check_keys(j, {"surface", "change", "moves"});
  return ReduceResult{parse_cubic_surface(field(j, "surface")), parse_matrix(field(j, "change")),
                      get_int(field(j, "moves"), "moves")};
}

// frobenius

Json emit(const FrobClass& c) {
  Json a = Json::array();
  for (auto [len, s] : c) a.push_back(Json::array({len, s}));
  return a;
}

FrobClass parse_frob_class(const Json& j) {
  return parse_list<std::pair<int, int>>(j, "class", [](const Json& x) {
    array_of(x, 2, "cycle");
    int len = get_int(x[0], "cycle length"), s = get_int(x[1], "cycle sign");
    if (len < 1 || (s != 1 && s != -1)) schema_error("cycle must be [length >= 1, sign +-1]");
    return std::make_pair(len, s);
  });
}

Json emit(const FrobSample& s) {
  return Json{{"q", s.q}, {"per_block", emit_blocks(s.per_block)}, {"flat", emit(s.flat)}};
}

FrobSample parse_frob_sample(const Json& j) {
  check_keys(j, {"q", "per_block", "flat"});
  FrobSample s;
  s.q = get_unsigned(field(j, "q"), "q");
  s.per_block = parse_list<FrobClass>(field(j, "per_block"), "per_block", [](const Json& x) { return parse_frob_class(x); });
  s.flat = parse_frob_class(field(j, "flat"));
  return s;
}

Json emit(const GroupElt& g) { return Json{{"t", g.t}, {"sigma", g.sigma}}; }

GroupElt parse_group_elt(const Json& j) {
  check_keys(j, {"t", "sigma"});
  GroupElt g;
  const Json& t = array_of(field(j, "t"), kLetters, "t");
  const Json& s = array_of(field(j, "sigma"), kLetters, "sigma");
  for (std::size_t i = 0; i < kLetters; ++i) {
    g.t[i] = get_int(t[i], "t");
    g.sigma[i] = get_int(s[i], "sigma");
  }
  if (!g.valid()) schema_error("not an element of the signed permutation group");
  return g;
}

Json emit(const SubgroupReport& r) {
  return Json{{"ambient_order", r.ambient_order},   {"order", r.order},
              {"exact_class_match", r.exact_class_match}, {"samples", r.samples},
              {"distinct_classes", r.distinct_classes}, {"candidates", r.candidates},
              {"generators", emit_list(r.generators)},  {"orbit_lengths", emit_sizes(r.orbit_lengths)},
              {"method", r.method}};
}

SubgroupReport parse_subgroup_report(const Json& j) {
  check_keys(j, {"ambient_order", "order", "exact_class_match", "samples", "distinct_classes", "candidates",
                 "generators", "orbit_lengths", "method"});
  SubgroupReport r;
  r.ambient_order = get_unsigned(field(j, "ambient_order"), "ambient_order");
  r.order = get_unsigned(field(j, "order"), "order");
  r.exact_class_match = get_bool(field(j, "exact_class_match"), "exact_class_match");
  r.samples = get_unsigned(field(j, "samples"), "samples");
  r.distinct_classes = get_unsigned(field(j, "distinct_classes"), "distinct_classes");
  r.candidates = get_unsigned(field(j, "candidates"), "candidates");
  r.generators = parse_list<GroupElt>(field(j, "generators"), "generators", [](const Json& x) { return parse_group_elt(x); });
  r.orbit_lengths = parse_sizes(field(j, "orbit_lengths"), "orbit_lengths");
  r.method = get_string(field(j, "method"), "method");
  return r;
}

Json emit(const LefschetzResult& r) {
  return Json{{"q", r.q}, {"trace", r.trace}, {"count", r.count}, {"expected", r.expected}, {"ok", r.ok}};
}

LefschetzResult parse_lefschetz(const Json& j) {
  check_keys(j, {"q", "trace", "count", "expected", "ok"});
  return LefschetzResult{get_unsigned(field(j, "q"), "q"), get_int(field(j, "trace"), "trace"),
                         get_unsigned(field(j, "count"), "count"), get_unsigned(field(j, "expected"), "expected"),
                         get_bool(field(j, "ok"), "ok")};
}

// pipeline

Json emit(const PipelineConfig& c) {
  Json j{{"p", emit(c.p)}, {"x", emit(c.x)}};
  j["l"] = c.l ? emit_polys(*c.l) : Json("power");
  j["height"] = c.height;
  j["primes"] = Json{{"from", c.primes.from}, {"to", c.primes.to}, {"count", c.primes.count}};
  j["lefschetz_primes"] = c.lefschetz_primes;
  j["threads"] = c.threads;
  if (c.report_path) j["report_path"] = *c.report_path;
  if (c.cubic_path) j["cubic_path"] = *c.cubic_path;
  return j;
}

// Everything except p has a default.
PipelineConfig parse_pipeline_config(const Json& j) {
  check_keys(j, {"p"}, {"x", "l", "height", "primes", "lefschetz_primes", "threads", "report_path", "cubic_path"});
  PipelineConfig c;
  c.p = parse_unipoly(field(j, "p"));
  if (has(j, "x")) c.x = parse_unipoly(j["x"]);
  if (has(j, "l")) {
    const Json& l = j["l"];
    if (l.is_string()) {
      if (l.get<std::string>() != "power") schema_error("l must be \"power\" or a list of five polynomials");
    } else {
      c.l = parse_list<UniPoly>(array_of(l, kAlgebraDegree, "l"), "l", [](const Json& x) { return parse_unipoly(x); });
    }
  }
  if (has(j, "height")) c.height = get_long(j["height"], "height");
  if (has(j, "primes")) {
    const Json& pr = j["primes"];
    check_keys(pr, {}, {"from", "to", "count"});
    if (has(pr, "from")) c.primes.from = get_unsigned(pr["from"], "primes.from");
    if (has(pr, "to")) c.primes.to = get_unsigned(pr["to"], "primes.to");
    if (has(pr, "count")) c.primes.count = get_unsigned(pr["count"], "primes.count");
  }
  if (has(j, "lefschetz_primes")) c.lefschetz_primes = get_unsigned(j["lefschetz_primes"], "lefschetz_primes");
  if (has(j, "threads")) c.threads = static_cast<unsigned>(get_unsigned(j["threads"], "threads"));
  if (has(j, "report_path")) c.report_path = get_string(j["report_path"], "report_path");
  if (has(j, "cubic_path")) c.cubic_path = get_string(j["cubic_path"], "cubic_path");
  return c;
}

Json emit(const RunReport& r) {
  Json timings = Json::array();
  for (const auto& t : r.timings) timings.push_back(Json{{"stage", t.stage}, {"milliseconds", t.milliseconds}});
  return Json{{"config", emit(r.config)},
              {"dp4", emit(r.dp4)},
              {"radicands", emit(r.radicands)},
              {"points", emit(r.points)},
              {"chosen", emit(r.chosen)},
              {"raw_cubic", emit(r.raw_cubic)},
              {"reduced", emit(r.reduced)},
              {"smooth", Json{{"dp4", r.smooth.dp4}, {"raw_cubic", r.smooth.raw_cubic}, {"reduced_cubic", r.smooth.reduced_cubic}}},
              {"tritangents", emit(r.tritangents)},
              {"frobenius", emit_list(r.frobenius)},
              {"subgroup", emit(r.subgroup)},
              {"lefschetz", emit_list(r.lefschetz)},
              {"timings", timings}};
}

RunReport parse_run_report(const Json& j) {
  check_keys(j, {"config", "dp4", "radicands", "points", "chosen", "raw_cubic", "reduced", "smooth", "tritangents",
                 "frobenius", "subgroup", "lefschetz", "timings"});
  RunReport r{parse_pipeline_config(field(j, "config")),
              parse_dp4(field(j, "dp4")),
              parse_radicand_report(field(j, "radicands")),
              parse_search_result(field(j, "points")),
              parse_point(field(j, "chosen")),
              parse_cubic_surface(field(j, "raw_cubic")),
              parse_reduce_result(field(j, "reduced")),
              {},
              parse_tritangents(field(j, "tritangents")),
              parse_list<FrobSample>(field(j, "frobenius"), "frobenius", [](const Json& x) { return parse_frob_sample(x); }),
              parse_subgroup_report(field(j, "subgroup")),
              parse_list<LefschetzResult>(field(j, "lefschetz"), "lefschetz", [](const Json& x) { return parse_lefschetz(x); }),
              {}};
  const Json& s = field(j, "smooth");
  check_keys(s, {"dp4", "raw_cubic", "reduced_cubic"});
  r.smooth = SmoothnessVerdicts{get_bool(s["dp4"], "smooth.dp4"), get_bool(s["raw_cubic"], "smooth.raw_cubic"),
                                get_bool(s["reduced_cubic"], "smooth.reduced_cubic")};
  r.timings = parse_list<StageTiming>(field(j, "timings"), "timings", [](const Json& x) {
    check_keys(x, {"stage", "milliseconds"});
    return StageTiming{get_string(x["stage"], "stage"), get_double(x["milliseconds"], "milliseconds")};
  });
  return r;
}

Json emit(const Error& e) {
  return Json{{"error", std::string(to_string(e.code()))}, {"exit_status", exit_status(e.code())}, {"message", e.what()}};
}

// documents and files

Json document(std::string_view kind, Json data) {
  return Json{{"schema_version", kSchemaVersion}, {"kind", std::string(kind)}, {"data", std::move(data)}};
}

const Json& open_document(const Json& doc, std::string_view kind) {
  check_keys(doc, {"schema_version", "kind", "data"});
  if (get_long(doc["schema_version"], "schema_version") != kSchemaVersion)
    schema_error("unsupported schema_version " + doc["schema_version"].dump());
  std::string k = get_string(doc["kind"], "kind");
  if (k != kind) schema_error("expected a '" + std::string(kind) + "' document, got '" + k + "'");
  return doc["data"];
}

const Json& unwrap(const Json& doc, std::string_view kind) {
  if (doc.is_object() && has(doc, "schema_version")) return open_document(doc, kind);
  return doc;
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    schema_error(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    require(bool(in), ErrorCode::io_failure, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_text(text);
}

void write_file(const std::string& path, const Json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  require(bool(out), ErrorCode::io_failure, "cannot write " + path);
  out << j.dump(2) << "\n";
  require(bool(out), ErrorCode::io_failure, "write failed for " + path);
}

}  // namespace cubsurf::json_io
