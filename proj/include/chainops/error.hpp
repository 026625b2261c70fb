#pragma once

#include <stdexcept>
#include <string>

namespace chainops {

// Error categories surfaced by the library. The CLI maps these onto exit
// codes; library code always throws Error (or a std::exception from deeper
// down, which callers treat like internal_contradiction).
enum class errc {
  out_of_range,            // value or coordinate outside [1, k]
  shape_mismatch,          // table/array has the wrong dimensions
  bound_exceeded,          // request above a documented hard bound
  precondition_failed,     // operation called on a table lacking a required property
  internal_contradiction,  // "cannot happen" state reached; defensive
  invalid_path,            // path leaves the upper triangle or projection inconsistent
  syntax_error,            // unparsable text input
  mismatch,                // closed form disagrees with exact value
  bijection_failure,       // path-census bijection check failed
  unrepresentable_value,   // chain too large for single-glyph ASCII rendering
  io_error,                // file or stream failure
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::out_of_range: return "out_of_range";
    case errc::shape_mismatch: return "shape_mismatch";
    case errc::bound_exceeded: return "bound_exceeded";
    case errc::precondition_failed: return "precondition_failed";
    case errc::internal_contradiction: return "internal_contradiction";
    case errc::invalid_path: return "invalid_path";
    case errc::syntax_error: return "syntax_error";
    case errc::mismatch: return "mismatch";
    case errc::bijection_failure: return "bijection_failure";
    case errc::unrepresentable_value: return "unrepresentable_value";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace chainops
