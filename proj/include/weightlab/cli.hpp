#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "weightlab/graph.hpp"
#include "weightlab/weighting.hpp"

namespace weightlab {

namespace exit_code {
inline constexpr int kOk = 0;        // Found / valid / success
inline constexpr int kNegative = 1;  // Unsat / invalid
inline constexpr int kInput = 2;     // malformed input
inline constexpr int kUnknown = 3;   // budget exhausted
}  // namespace exit_code

// Lists for a --mode value: edge123, edgeK:<k>, total:<a>,<b>, or
// lists-from-file (uses `file_lists`, which must cover `g`).
ListAssignment lists_for_mode(std::string_view mode, const FiniteGraph& g,
                              const ListAssignment& file_lists = {});

// `weightlab <command> ...`; args excludes the program name. JSON goes to
// `out` (or --output), single-line diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weightlab
