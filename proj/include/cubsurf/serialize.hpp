#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cubsurf/error.hpp"
#include "cubsurf/pipeline.hpp"

// JSON schema, version kSchemaVersion. Rationals are "num/den" strings (plain
// integers and JSON integers are accepted on input). Integers are JSON numbers
// when they fit in 64 bits, decimal strings otherwise. Polynomials and
// algebra elements are coefficient arrays, lowest degree first; quadrics are
// the upper-triangular coefficient lists of x_i x_j (i <= j, row by row);
// cubics are lists of {exponents:[e0..e3], coeff}. Every object rejects
// unknown fields with json_schema.
namespace cubsurf::json_io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json emit(const Rational& q);
Json emit(const Integer& n);
Json emit(const Vec& v);
Json emit(const UniPoly& f);
Json emit(const Matrix& m);
Json emit(const LinForm& l);
Json emit(const QuadForm& q);
Json emit(const CubicForm4& f);
Json emit(const ProjPoint& p);
Json emit(const ProjLine& line);
Json emit(const AlgElement& e);
Json emit(const DescentInput& d);
Json emit(const BlowDownData& b);
Json emit(const DP4Surface& v);
Json emit(const CubicSurface& s);
Json emit(const RadicandReport& r);
Json emit(const SearchResult& r);
Json emit(const TritangentEntry& t);
Json emit(const std::vector<TritangentEntry>& ts);
Json emit(const ReduceResult& r);
Json emit(const FrobClass& c);
Json emit(const FrobSample& s);
Json emit(const GroupElt& g);
Json emit(const SubgroupReport& r);
Json emit(const LefschetzResult& r);
Json emit(const PipelineConfig& c);
Json emit(const RunReport& r);
Json emit(const Error& e);

Rational parse_rational(const Json& j);
Integer parse_integer(const Json& j);
Vec parse_vec(const Json& j);
UniPoly parse_unipoly(const Json& j);
Matrix parse_matrix(const Json& j);
LinForm parse_linform(const Json& j);
QuadForm parse_quadform(const Json& j);
CubicForm4 parse_cubic_form(const Json& j);
ProjPoint parse_point(const Json& j);
ProjLine parse_line(const Json& j);
AlgElement parse_element(const Json& j, const EtaleAlgebra& alg);
DescentInput parse_descent_input(const Json& j);
BlowDownData parse_blowdown(const Json& j);
DP4Surface parse_dp4(const Json& j);
CubicSurface parse_cubic_surface(const Json& j);
RadicandReport parse_radicand_report(const Json& j);
SearchResult parse_search_result(const Json& j);
TritangentEntry parse_tritangent(const Json& j);
std::vector<TritangentEntry> parse_tritangents(const Json& j);
ReduceResult parse_reduce_result(const Json& j);
FrobClass parse_frob_class(const Json& j);
FrobSample parse_frob_sample(const Json& j);
GroupElt parse_group_elt(const Json& j);
SubgroupReport parse_subgroup_report(const Json& j);
LefschetzResult parse_lefschetz(const Json& j);
PipelineConfig parse_pipeline_config(const Json& j);
RunReport parse_run_report(const Json& j);

// Throws json_schema unless j is an object holding every required key and
// nothing outside required + optional.
void check_keys(const Json& j, std::initializer_list<std::string_view> required,
                std::initializer_list<std::string_view> optional = {});

// {schema_version, kind, data}
Json document(std::string_view kind, Json data);
// The data of a document of the given kind; throws json_schema on a version
// or kind mismatch.
const Json& open_document(const Json& doc, std::string_view kind);
// A document's data when doc is one, otherwise doc itself.
const Json& unwrap(const Json& doc, std::string_view kind);

Json parse_text(std::string_view text);
Json read_file(const std::string& path);  // "-" reads stdin
void write_file(const std::string& path, const Json& j);

}  // namespace cubsurf::json_io
