#ifndef DAGGER_CLI_HPP
#define DAGGER_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dagger::cli {

enum ExitCode : int {
	kOk = 0,         // success, equivalent, law passed
	kNegative = 1,   // inequivalent, law failed
	kUsage = 2,      // bad flags, unreadable or invalid input
};

/// Runs one command. `args[0]` is the program name. Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace dagger::cli

#endif // DAGGER_CLI_HPP
