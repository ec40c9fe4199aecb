#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnet {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int runtime_error = 1;
inline constexpr int usage = 2;
}  // namespace exit_code

/// Entry point of the `bnet` tool; args excludes the program name.
///
///   run --scenario <name> --out <csv> [--json <path>] [--seed N]
///       [--trials N] [--threads N] [--set key=value ...]
///   encode <bits> [--policy canonical|complement|alternating|seeded:<n>]
///   decode <bases>
///   list-scenarios
///   list-params
int cli_main(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace bnet
