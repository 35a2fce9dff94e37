#include "mfi/strategy_file.hpp"

#include <fstream>
#include <sstream>

namespace mfi {

namespace {

[[noreturn]] void fail(int line_number, const std::string& detail) {
  throw config_error("strategy file line " + std::to_string(line_number) + ": " +
                     detail);
}

// Value of "key=<rest>" or failure.
std::string expect_key(const std::string& token, const std::string& key,
                       int line_number) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0)
    fail(line_number, "expected '" + key + "=<value>', got '" + token + "'");
  return token.substr(prefix.size());
}

double parse_double(const std::string& text, int line_number) {
  try {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    fail(line_number, "cannot parse number '" + text + "'");
  }
}

int parse_int(const std::string& text, int line_number) {
  try {
    size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    fail(line_number, "cannot parse integer '" + text + "'");
  }
}

}  // namespace

std::vector<StrategyDescriptor> parse_strategy_lines(std::istream& in) {
  std::vector<StrategyDescriptor> out;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::string head;
    if (!(tokens >> head) || head[0] == '#') continue;

    std::vector<std::string> rest;
    for (std::string token; tokens >> token;) rest.push_back(token);

    if (head == "eigen") {
      if (rest.size() != 1) fail(line_number, "eigen takes exactly n=<int>");
      const int n = parse_int(expect_key(rest[0], "n", line_number), line_number);
      if (n < 0) fail(line_number, "eigen index must be >= 0");
      out.push_back({EigenstateStrategy{n}});
    } else if (head == "super") {
      if (rest.size() != 3)
        fail(line_number, "super takes p=<f> alpha=<f> k=<int>,<int>");
      SuperpositionStrategy s;
      s.p = parse_double(expect_key(rest[0], "p", line_number), line_number);
      s.alpha = parse_double(expect_key(rest[1], "alpha", line_number), line_number);
      const std::string pair = expect_key(rest[2], "k", line_number);
      const size_t comma = pair.find(',');
      if (comma == std::string::npos) fail(line_number, "k needs two indices");
      s.k_low = parse_int(pair.substr(0, comma), line_number);
      s.k_high = parse_int(pair.substr(comma + 1), line_number);
      if (!(s.p >= 0.0 && s.p <= 1.0)) fail(line_number, "p must lie in [0,1]");
      if (s.k_low < 0 || s.k_high <= s.k_low)
        fail(line_number, "need 0 <= k_low < k_high");
      out.push_back({s});
    } else if (head == "gibbs") {
      if (rest.size() != 1) fail(line_number, "gibbs takes exactly d=<float>");
      const double d = parse_double(expect_key(rest[0], "d", line_number), line_number);
      if (!(d > 0.0)) fail(line_number, "d must be positive");
      out.push_back({GibbsStrategy{d}});
    } else {
      fail(line_number, "unknown strategy kind '" + head + "'");
    }
  }
  return out;
}

std::vector<StrategyDescriptor> parse_strategy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open strategy file: " + path);
  return parse_strategy_lines(in);
}

}  // namespace mfi
