#ifndef SEMICURVE_CLI_HPP
#define SEMICURVE_CLI_HPP

#include <string>
#include <vector>

namespace semicurve {

/// Outcome of one CLI invocation: the rendered text, the JSON payload
/// (filled when --json or always for scan verbs), and the exit status.
/// Status 0 means no error and, for verification verbs, all checks passed.
struct CommandResult {
    std::string text;
    std::string json;
    int status = 0;
};

/// Dispatches one command line (without the program name).
CommandResult run(const std::vector<std::string>& args);

}  // namespace semicurve

#endif
