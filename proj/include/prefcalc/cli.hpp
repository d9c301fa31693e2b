#ifndef PREFCALC_CLI_HPP
#define PREFCALC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace prefcalc {

// Command-line front end.  `args` excludes the program name.  Returns the
// exit code: 0 on success, 1 when a check fails or an evaluation error
// occurs, 2 on usage, file or schema errors.  All diagnostics go to `err`;
// results go to `out`.  The environment variable PREFCALC_SEED (a decimal
// integer) fixes every random trial sequence.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prefcalc

#endif  // PREFCALC_CLI_HPP
