#pragma once

#include <string>
#include <string_view>

namespace asymclust {

// Shortest decimal string that parses back to exactly v ("3", "0.25", "1e-300").
std::string format_number(double v);

// Strict decimal parse of the whole field (surrounding blanks allowed).
// Returns false on any trailing garbage.
bool parse_number(std::string_view field, double& out);

}  // namespace asymclust
