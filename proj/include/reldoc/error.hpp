#pragma once

#include <stdexcept>
#include <string>

namespace reldoc {

enum class ErrorCode {
  malformed_table,
  empty_base,
  unknown_object,
  shape_mismatch,
  cap_exceeded,
  non_functorial,
  size_limit,
  non_monotone_lifting,
  not_descent_datum,
  not_an_arrow,
  not_equivalence,
  not_coarser,
  no_quotient_constructor,
  ill_defined,
  not_parallel,
  no_products,
  precondition_failed,
  not_congruence,
  bad_input,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace reldoc
