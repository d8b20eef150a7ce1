#include "influence/tsv.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "influence/error.hpp"

namespace influence::tsv {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return out;
}

std::string join_fields(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back('\t');
        out += fields[i];
    }
    return out;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    if (in.bad()) throw DataError("read error: " + path);
    return lines;
}

std::optional<double> parse_double(std::string_view s) {
    // strtod would skip leading whitespace and accept inf/nan; a data cell
    // gets none of that slack.
    if (s.empty() || std::isspace(static_cast<unsigned char>(s[0]))) {
        return std::nullopt;
    }
    std::string buf(s);
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || errno == ERANGE) return std::nullopt;
    if (!std::isfinite(v)) return std::nullopt;
    return v;
}

std::optional<long long> parse_int(std::string_view s) {
    if (s.empty() || std::isspace(static_cast<unsigned char>(s[0]))) {
        return std::nullopt;
    }
    std::string buf(s);
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(buf.c_str(), &end, 10);
    if (end != buf.c_str() + buf.size() || errno == ERANGE) return std::nullopt;
    return v;
}

std::string format_double(double v) {
    // Try increasing precision until the value round-trips.
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return std::string(buf);
}

}  // namespace influence::tsv
