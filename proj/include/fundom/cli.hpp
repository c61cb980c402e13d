#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fundom {

/// Runs the command line tool. Exit codes: 0 success, 1 verification or
/// I/O failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Inclusive "a..b" (or a single integer). nullopt on malformed input.
std::optional<std::pair<std::int64_t, std::int64_t>> parse_sweep(const std::string& text);

}  // namespace fundom
