#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "fig8/special_functions.hpp"

namespace fig8::cli {

// "a+bi" literals, plus "kappa" / "κ". Returns nullopt on malformed input.
std::optional<cplx> parse_complex(const std::string& text);

// key=value lines; '#' starts a comment. Throws std::runtime_error on I/O or syntax errors.
std::map<std::string, std::string> read_config(const std::string& path);

// Exit codes: 0 ok, 1 usage or I/O, 2 domain error, 3 numerical failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fig8::cli
