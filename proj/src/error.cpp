#include "cubsurf/error.hpp"

namespace cubsurf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::non_square_matrix: return "non_square_matrix";
    case ErrorCode::zero_polynomial: return "zero_polynomial";
    case ErrorCode::zero_integer: return "zero_integer";
    case ErrorCode::degree_unsupported: return "degree_unsupported";
    case ErrorCode::not_squarefree: return "not_squarefree";
    case ErrorCode::non_unit: return "non_unit";
    case ErrorCode::not_generator: return "not_generator";
    case ErrorCode::dependent_forms: return "dependent_forms";
    case ErrorCode::degenerate_pencil: return "degenerate_pencil";
    case ErrorCode::line_not_on_surface: return "line_not_on_surface";
    case ErrorCode::point_not_on_surface: return "point_not_on_surface";
    case ErrorCode::degenerate_cubic: return "degenerate_cubic";
    case ErrorCode::no_points_found: return "no_points_found";
    case ErrorCode::singular_surface: return "singular_surface";
    case ErrorCode::bad_prime: return "bad_prime";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::json_schema: return "json_schema";
    case ErrorCode::io_failure: return "io_failure";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return 2;
    case ErrorCode::non_square_matrix: return 3;
    case ErrorCode::zero_polynomial: return 4;
    case ErrorCode::zero_integer: return 5;
    case ErrorCode::degree_unsupported: return 6;
    case ErrorCode::not_squarefree: return 7;
    case ErrorCode::non_unit: return 8;
    case ErrorCode::not_generator: return 9;
    case ErrorCode::dependent_forms: return 10;
    case ErrorCode::degenerate_pencil: return 11;
    case ErrorCode::line_not_on_surface: return 12;
    case ErrorCode::point_not_on_surface: return 13;
    case ErrorCode::degenerate_cubic: return 14;
    case ErrorCode::no_points_found: return 15;
    case ErrorCode::singular_surface: return 16;
    case ErrorCode::bad_prime: return 17;
    case ErrorCode::budget_exceeded: return 18;
    case ErrorCode::json_schema: return 19;
    case ErrorCode::io_failure: return 20;
    case ErrorCode::internal: return 70;
  }
  return 70;
}

}  // namespace cubsurf
