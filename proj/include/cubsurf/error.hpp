#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubsurf {

// Every failure the library can signal. The CLI maps each code to exactly one
// process exit status (see exit_status()).
enum class ErrorCode {
  invalid_argument,     // malformed input, dimension mismatch, precondition
  non_square_matrix,
  zero_polynomial,
  zero_integer,
  degree_unsupported,
  not_squarefree,       // algebra modulus or pencil not etale
  non_unit,             // inversion of a zero divisor
  not_generator,        // charpoly of element not squarefree
  dependent_forms,      // conjugate linear forms not independent
  degenerate_pencil,    // Q0, Q1 proportional or det identically zero
  line_not_on_surface,
  point_not_on_surface,
  degenerate_cubic,     // blow-up produced the zero form
  no_points_found,
  singular_surface,
  bad_prime,
  budget_exceeded,
  json_schema,
  io_failure,
  internal,
};

std::string_view to_string(ErrorCode code);
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace cubsurf
