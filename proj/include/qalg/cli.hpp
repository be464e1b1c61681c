#pragma once

#include "qalg/complexes.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qalg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification failure or non-membership
inline constexpr int kExitUsage = 2;    // usage or input error

/// `{"n": <int>, "facets": [[<int>,...], ...]}` with an optional `"schema": 1`.
/// Throws InputError naming the offending element.
Complex parse_complex_json(const std::string& text);
Complex parse_complex_file(const std::string& path);

/// Parses a node set written as "", "1,3" or "{1,3}".
NodeSet parse_node_set(const std::string& text, int n);

/// Runs one command line; output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qalg::cli
