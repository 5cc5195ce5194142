#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsp {

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// Shortest representation that parses back to the same double.
std::string format_double(double v);
std::optional<double> parse_double(std::string_view s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace rsp
