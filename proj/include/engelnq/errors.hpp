#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace engelnq {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic between scalars of different ring modes, or an operation given
// a ring it does not support.
struct ring_mode_error : error {
  using error::error;
};

struct unsupported_ring_error : error {
  using error::error;
};

// Precondition violation on operation arguments (empty factor list, unknown
// generator, degree 0, ...).
struct domain_error : error {
  using error::error;
};

// A LieElement was passed to an algebra it does not belong to.
struct ownership_error : error {
  using error::error;
};

// A structure constant or relation coefficient expected to be an integer
// turned out not to be.
struct integrality_error : error {
  using error::error;
};

struct parse_error : error {
  std::size_t line;
  std::size_t column;
  parse_error(std::size_t line_, std::size_t column_, const std::string &what_)
      : error("parse error at line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + what_),
        line(line_), column(column_) {}
};

} // namespace engelnq
