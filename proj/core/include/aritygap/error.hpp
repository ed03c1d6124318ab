#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace aritygap {

enum class ErrorCode {
  index_out_of_range,
  arity_mismatch,
  carrier_mismatch,
  constant_function,
  arity_gap_undefined,
  inessential_variable,
  wrong_arity,
  non_boolean_domain,
  not_pseudo_directed,
  not_bidirected,
  not_order_preserving,
  not_distributive,
  not_a_chain,
  not_a_lattice,
  not_a_poset,
  boundary_violation,
  budget_exceeded,
  parse_error,
  invalid_argument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Input file diagnostics carry a 1-based line number (0 = whole file).
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::parse_error,
              line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace aritygap
