#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace influence::tsv {

std::vector<std::string_view> split_fields(std::string_view line);
std::string join_fields(const std::vector<std::string>& fields);

// Reads all lines, stripping a trailing '\r'. Throws DataError on I/O failure.
std::vector<std::string> read_lines(const std::string& path);

std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_int(std::string_view s);

// Shortest decimal form that round-trips an IEEE double.
std::string format_double(double v);

}  // namespace influence::tsv
