#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace histo {

// Shortest round-trip decimal representation.
std::string format_double(double v);

// Whole-token parses; throw ConfigError on trailing garbage.
double parse_double(std::string_view s);
int parse_int(std::string_view s);

std::string_view trim(std::string_view s);
// Splits on `sep`, trims each field and drops empty ones.
std::vector<std::string> split_list(std::string_view s, char sep = ',');

}  // namespace histo
