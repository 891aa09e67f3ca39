#ifndef RICLAB_ERRORS_HPP
#define RICLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace riclab {

// Failure taxonomy shared by all modules. The CLI maps these onto exit codes.
enum class Errc {
  not_square,
  not_symmetric,
  numerical_failure,
  not_positive_definite,
  rank_deficient,
  index_out_of_range,
  dimension_mismatch,
  budget_exceeded,
  overlapping_supports,
  zero_vector,
  support_violation,
  delta_too_large,
  t_out_of_range,
  k_too_small,
  verification_failed,
  parse_error,
  invalid_argument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace riclab

#endif
