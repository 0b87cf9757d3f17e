#pragma once

#include <stdexcept>
#include <string>

namespace cforge {

// parse failure in one of the text formats; line is 1-based
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  int line;
};

}  // namespace cforge
