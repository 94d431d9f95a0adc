#pragma once

#include <stdexcept>
#include <string>

namespace wordlab {

enum class errc {
  invalid_parameter,
  non_prolongable_morphism,
  boundary_ambiguity,
  index_out_of_range,
  length_out_of_range,
  mixed_lengths,
  not_low_complexity,
  inconsistent_set,
  empty_word,
  non_primitive_substitution,
  block_too_long,
  dimension_mismatch,
  singular_matrix,
  not_ternary,
  no_deviation_two,
  not_three_classes,
  letter_not_in_alphabet,
  not_binary,
  length_mismatch,
  degenerate_box,
  io_error,
  internal_error,
};

const char* to_string(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace wordlab
