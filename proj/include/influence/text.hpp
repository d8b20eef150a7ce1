#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace influence::text {

// Decodes UTF-8 leniently: invalid byte sequences become U+FFFD.
std::vector<char32_t> decode_utf8(std::string_view s);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(const std::vector<char32_t>& cps);

std::size_t codepoint_count(std::string_view s);

// Unicode general categories P* and S*.
bool is_punct_or_symbol(char32_t cp);
// Z* plus the usual control whitespace (tab, LF, VT, FF, CR, NEL).
bool is_space(char32_t cp);
char32_t to_lower(char32_t cp);

std::string to_lower(std::string_view s);

}  // namespace influence::text
