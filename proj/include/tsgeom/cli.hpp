#ifndef TSGEOM_CLI_HPP
#define TSGEOM_CLI_HPP

#include <string>
#include <vector>

namespace tsgeom::cli {

/// Runs one command line. Subcommands: generate, symbolize, transitions,
/// measure, ratio, simulate. Returns 0 on success, 1 on data errors,
/// 2 on usage errors.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

} // namespace tsgeom::cli

#endif // TSGEOM_CLI_HPP
