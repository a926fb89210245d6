#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wtslab::cli
{

enum exit_status : int
{
    success = 0,
    negative = 1, // the verdict is false; the output carries a witness
    bad_input = 2,
    out_of_budget = 3
};

/// Runs one command line (without the program name). The canonical result
/// document goes to `out`, diagnostics to `err`.
int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

/// Every verb, in the order of the help text.
std::vector<std::string> verbs();

} // namespace wtslab::cli
