#pragma once

#include "gl11/extensions.hpp"
#include "gl11/oracle.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gl11::cli {

/// "v(n;e)", "a(n;0)" or "a(n)", "p(n;0)" or "p(n)". Throws ParseError.
FinLabel parse_fin_label(std::string_view text);

/// "sl21-neg-half", "sl21-level1" or "custom:<a>,<b>". Throws ParseError.
ExtensionSpec parse_extension(std::string_view text);

/// Runs one command line (without the program name), writing a JSON
/// document to `out` and diagnostics to `err`. Returns the exit code:
/// 0 success, 1 undetermined or outside the mathematical domain, 2 usage
/// error, 3 internal failure.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace gl11::cli
