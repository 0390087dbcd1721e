#ifndef RIGIDKIT_TOOLS_CLI_H_
#define RIGIDKIT_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace rigidkit::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;  // randomized fault or unexpected failure
inline constexpr int kExitParse = 2;     // unreadable or malformed edge list
inline constexpr int kExitArgs = 3;      // bad flags, unknown family, out-of-range values
inline constexpr int kExitNotGloballyRigid = 4;
inline constexpr int kExitHypothesis = 5;

inline constexpr int kSchemaVersion = 1;

// Runs one command. `args` excludes the program name. "--in -" reads `in`.
// JSON goes to `out`, the human-readable summary and diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace rigidkit::cli

#endif  // RIGIDKIT_TOOLS_CLI_H_
