#pragma once

#include <stdexcept>
#include <string>

namespace harmlab {

enum class Errc {
  order_mismatch,
  division_near_zero,
  radius_exceeded,
  parse_error,
  unknown_catalog_entry,
  pole_hit,
  degenerate_mobius,
  invalid_parameter,
  degenerate_at_point,
  negative_inner_value,
  fit_mismatch,
  not_disk_automorphism,
  sense_reversed,
  non_finite,
  io_error,
  config_error,
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

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace harmlab
