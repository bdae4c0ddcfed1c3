#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nbl {

enum class Errc {
  invalid_config,
  length_mismatch,
  family_mismatch,
  invalid_level,
  invalid_logic_value,
  orthogonality_violation,
  not_divisible,
  generation_failed,
  parse_error,
  missing_input,
  invalid_argument,
  ambiguous_window,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Netlist syntax or semantic error, tagged with the 1-based source line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace nbl
