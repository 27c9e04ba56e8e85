#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "cubsurf/descent.hpp"
#include "cubsurf/error.hpp"
#include "cubsurf/frobenius.hpp"
#include "cubsurf/geometry.hpp"
#include "cubsurf/groebner.hpp"
#include "cubsurf/pipeline.hpp"
#include "cubsurf/pointsearch.hpp"
#include "cubsurf/serialize.hpp"

using namespace cubsurf;
using json_io::Json;

namespace {

const char* kCountNote =
    "count uses the max-abs-coordinate height of the primitive integral representative; "
    "other height conventions count a different set";

// DP4 from a dp4_surface document, a descent document, or their bare data.
DP4Surface load_dp4(const Json& j) {
  if (j.is_object() && j.contains("schema_version")) {
    if (j.contains("kind") && j["kind"] == "descent") return load_dp4(json_io::open_document(j, "descent"));
    return json_io::parse_dp4(json_io::open_document(j, "dp4_surface"));
  }
  if (j.is_object() && j.contains("dp4")) {
    json_io::check_keys(j, {"dp4"}, {"radicands"});
    return json_io::parse_dp4(j["dp4"]);
  }
  return json_io::parse_dp4(j);
}

CubicSurface load_cubic(const Json& j) { return json_io::parse_cubic_surface(json_io::unwrap(j, "cubic_surface")); }

bool is_cubic(const Json& j) {
  const Json& d = j.is_object() && j.contains("schema_version") && j.contains("data") ? j["data"] : j;
  return d.is_object() && d.contains("f");
}

void emit_line(const Json& j) { std::cout << j.dump() << "\n" << std::flush; }

ProjPoint parse_point_arg(const std::string& text) {
  std::vector<Integer> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(json_io::parse_integer(Json(item)));
  return ProjPoint(c);
}

// "a..b"
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  require(dots != std::string::npos, ErrorCode::invalid_argument, "prime range must look like 3..500");
  try {
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
  } catch (const std::exception&) {
    fail(ErrorCode::invalid_argument, "bad prime range '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubic surfaces with a rational line via descent on degree-4 del Pezzo surfaces"};
  app.require_subcommand(1);
  std::string in = "-", out = "-";

  auto input = [&](CLI::App* cmd) { cmd->add_option("--json", in, "input JSON artifact, - for stdin"); };
  auto output = [&](CLI::App* cmd) { cmd->add_option("-o,--out", out, "output JSON path, - for stdout"); };

  auto* descend = app.add_subcommand("descend", "descent input {p, x, l} to a DP4 surface and radicand report");
  input(descend);
  output(descend);

  auto* convert = app.add_subcommand("convert", "convert between cubic and DP4 models");
  bool to_dp4 = false, to_cubic = false;
  std::string point_text;
  long convert_height = 10;
  auto* to_dp4_flag = convert->add_flag("--to-dp4", to_dp4, "cubic with known line to DP4");
  convert->add_flag("--to-cubic", to_cubic, "DP4 to cubic by blowing up a rational point")->excludes(to_dp4_flag);
  convert->add_option("--point", point_text, "point to blow up, comma separated; default: smallest found point");
  convert->add_option("--height", convert_height, "search height when no point is given")->check(CLI::PositiveNumber);
  input(convert);
  output(convert);

  auto* search_cmd = app.add_subcommand("search-points", "rational points up to a height, as JSON lines");
  long height = 10;
  search_cmd->add_option("--height", height, "max |x_i| of primitive representatives")->check(CLI::PositiveNumber);
  input(search_cmd);

  auto* tri = app.add_subcommand("tritangents", "degenerate pencil members and their splitting data");
  input(tri);
  output(tri);

  auto* verify = app.add_subcommand("verify", "check a cubic or DP4 surface");
  bool check_smooth = false;
  verify->add_flag("--smooth", check_smooth, "Groebner smoothness check")->required();
  input(verify);
  output(verify);

  auto* frob = app.add_subcommand("frobenius", "Frobenius classes on the 27 lines at good primes");
  std::string primes = "3..500";
  std::size_t samples = 40, lef_count = 5;
  std::string lef_cubic;
  frob->add_option("--primes", primes, "prime range a..b");
  frob->add_option("--samples", samples, "number of good primes to use");
  frob->add_option("--lefschetz", lef_cubic, "cubic surface JSON to check point counts against");
  frob->add_option("--lefschetz-primes", lef_count, "primes for the point count check");
  input(frob);

  auto* reduce = app.add_subcommand("reduce", "greedy coefficient reduction of a cubic");
  input(reduce);
  output(reduce);

  auto* pipe = app.add_subcommand("pipeline", "descend, search, blow up, reduce and verify");
  input(pipe);
  output(pipe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_status(ErrorCode::invalid_argument);
  }

  try {
    if (descend->parsed()) {
      Json doc = json_io::read_file(in);
      const Json& req = json_io::unwrap(doc, "descend_request");
      json_io::check_keys(req, {"p"}, {"x", "l"});
      PipelineConfig cfg = json_io::parse_pipeline_config(req);
      DescentResult d = run_strategy(cfg.p, cfg.x, cfg.l);
      json_io::write_file(out, json_io::document("descent", Json{{"dp4", json_io::emit(d.surface)},
                                                                 {"radicands", json_io::emit(d.radicands)}}));
    } else if (convert->parsed()) {
      require(to_dp4 || to_cubic, ErrorCode::invalid_argument, "convert needs --to-dp4 or --to-cubic");
      Json j = json_io::read_file(in);
      if (to_dp4) {
        CubicSurface s = load_cubic(j);
        require(s.known_line.has_value(), ErrorCode::line_not_on_surface, "cubic carries no known line");
        DP4FromCubic r = cubic_to_dp4(s, s.known_line->l0(), s.known_line->l1());
        json_io::write_file(out, json_io::document("dp4_surface", json_io::emit(r.surface)));
      } else {
        DP4Surface v = load_dp4(j);
        ProjPoint p = point_text.empty() ? choose_point(search(v, convert_height).points) : parse_point_arg(point_text);
        CubicFromDP4 r = dp4_to_cubic(v, p);
        json_io::write_file(out, json_io::document("cubic_surface", json_io::emit(r.surface)));
      }
    } else if (search_cmd->parsed()) {
      DP4Surface v = load_dp4(json_io::read_file(in));
      SearchResult r = search(v, height);
      for (const auto& p : r.points) emit_line(Json{{"point", json_io::emit(p)}});
      emit_line(Json{{"summary", Json{{"count", r.points.size()},
                                      {"height_bound", r.height_bound},
                                      {"convention", r.convention},
                                      {"note", kCountNote},
                                      {"milliseconds", r.milliseconds},
                                      {"threads_used", r.threads_used}}}});
    } else if (tri->parsed()) {
      DP4Surface v = load_dp4(json_io::read_file(in));
      json_io::write_file(out, json_io::document("tritangents", json_io::emit(tritangent_analysis(v))));
    } else if (verify->parsed()) {
      Json j = json_io::read_file(in);
      Json rec;
      SmoothnessReport rep;
      if (is_cubic(j)) {
        CubicSurface s = load_cubic(j);
        rep = smoothness(s);
        rec["surface"] = "cubic";
        if (s.known_line) rec["contains_known_line"] = contains_line(s.f, *s.known_line);
      } else {
        rep = smoothness(load_dp4(j));
        rec["surface"] = "dp4";
      }
      rec["smooth"] = rep.smooth;
      rec["chart_unit"] = rep.chart_unit;
      json_io::write_file(out, json_io::document("verification", rec));
      if (!rep.smooth) return exit_status(ErrorCode::singular_surface);
    } else if (frob->parsed()) {
      DP4Surface v = load_dp4(json_io::read_file(in));
      require(v.descent.has_value(), ErrorCode::invalid_argument, "frobenius needs a DP4 carrying its descent data");
      auto [from, to] = parse_range(primes);
      FrobeniusData data = frobenius_data(*v.descent);
      auto ss = sample_classes(data, from, to, samples);
      require(!ss.empty(), ErrorCode::bad_prime, "no good prime in " + primes);
      for (const auto& s : ss) {
        Json rec = json_io::emit(s);
        rec["total_sign"] = total_sign(s.flat);
        rec["pic_trace"] = Lines27::instance().pic_trace(representative(s.flat));
        emit_line(Json{{"prime", rec}});
      }
      Json agg{{"subgroup", json_io::emit(identify_subgroup(ss, data.blocks))}};
      if (!lef_cubic.empty()) {
        CubicSurface s = load_cubic(json_io::read_file(lef_cubic));
        Json checks = Json::array();
        for (const auto& sample : ss) {
          if (checks.size() >= lef_count) break;
          try {
            auto field = std::make_shared<const FiniteField>(sample.q);
            if (has_singular_point(reduce_mod_p(s, field))) continue;
          } catch (const Error& e) {
            if (e.code() != ErrorCode::bad_prime) throw;
            continue;
          }
          checks.push_back(json_io::emit(lefschetz_check(s, sample)));
        }
        agg["lefschetz"] = checks;
      }
      emit_line(Json{{"aggregate", agg}});
    } else if (reduce->parsed()) {
      CubicSurface s = load_cubic(json_io::read_file(in));
      json_io::write_file(out, json_io::document("reduce_result", json_io::emit(greedy_reduce(s))));
    } else if (pipe->parsed()) {
      PipelineConfig cfg = json_io::parse_pipeline_config(json_io::unwrap(json_io::read_file(in), "pipeline_config"));
      RunReport rep = run_pipeline(cfg, [](const std::string& stage) { std::cerr << "stage " << stage << "\n"; });
      Json doc = json_io::document("run_report", json_io::emit(rep));
      if (cfg.report_path) json_io::write_file(*cfg.report_path, doc);
      if (cfg.cubic_path)
        json_io::write_file(*cfg.cubic_path, json_io::document("cubic_surface", json_io::emit(rep.reduced.surface)));
      json_io::write_file(out, doc);
    }
  } catch (const Error& e) {
    std::cerr << json_io::emit(e).dump() << "\n";
    return exit_status(e.code());
  } catch (const std::exception& e) {
    std::cerr << json_io::emit(Error(ErrorCode::internal, e.what())).dump() << "\n";
    return exit_status(ErrorCode::internal);
  }
  return 0;
}
