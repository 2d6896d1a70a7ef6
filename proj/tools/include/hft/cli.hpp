#ifndef HFT_CLI_HPP
#define HFT_CLI_HPP

#include <iosfwd>

namespace hft::cli
{

enum ExitCode { ok = 0, computation_error = 1, usage_error = 2 };

// Runs one batch command. Results go to `out` (or --out), diagnostics to
// `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace hft::cli

#endif
