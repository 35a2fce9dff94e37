#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mfi/transactional.hpp"

namespace mfi {

/// Parses the line-oriented strategy list format:
///   eigen n=<int>
///   super p=<float> alpha=<float> k=<int>,<int>
///   gibbs d=<float>
/// Blank lines and lines starting with '#' are skipped.  Malformed lines
/// raise config_error with the 1-based line number.
std::vector<StrategyDescriptor> parse_strategy_lines(std::istream& in);

std::vector<StrategyDescriptor> parse_strategy_file(const std::string& path);

}  // namespace mfi
