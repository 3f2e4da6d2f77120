#pragma once

#include <stdexcept>
#include <string>

namespace gl11 {

// Raised when a request falls outside the cases the known structure results
// determine (e.g. fusion with a reducible Verma module). Distinct from plain
// precondition failures so callers can tell scope limits from misuse.
class Undetermined : public std::domain_error {
  public:
    explicit Undetermined(const std::string &what) : std::domain_error(what) {}
};

// Malformed textual input (labels, rationals, extension names).
class ParseError : public std::invalid_argument {
  public:
    explicit ParseError(const std::string &what)
        : std::invalid_argument(what) {}
};

} // namespace gl11
