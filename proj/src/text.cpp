#include "influence/text.hpp"

#include <algorithm>

namespace influence::text {
namespace {

struct CodepointRange {
    char32_t first;
    char32_t last;
};

struct LowercasePair {
    char32_t upper;
    char32_t lower;
};

#include "unicode_tables.inc"

template <std::size_t N>
bool in_ranges(const CodepointRange (&table)[N], char32_t cp) {
    auto it = std::upper_bound(std::begin(table), std::end(table), cp,
                               [](char32_t v, const CodepointRange& r) { return v < r.first; });
    if (it == std::begin(table)) return false;
    --it;
    return cp >= it->first && cp <= it->last;
}

}  // namespace

std::vector<char32_t> decode_utf8(std::string_view s) {
    std::vector<char32_t> out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        const auto b0 = static_cast<unsigned char>(s[i]);
        std::size_t len = 0;
        char32_t cp = 0;
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            out.push_back(0xFFFD);
            ++i;
            continue;
        }
        std::size_t k = 1;
        while (k < len && i + k < s.size()) {
            const auto b = static_cast<unsigned char>(s[i + k]);
            if ((b & 0xC0) != 0x80) break;
            cp = (cp << 6) | (b & 0x3F);
            ++k;
        }
        if (k < len) {
            // Maximal subpart: the lead byte and its valid continuations
            // collapse into a single replacement.
            out.push_back(0xFFFD);
            i += k;
            continue;
        }
        constexpr char32_t kMinByLen[] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < kMinByLen[len] || cp > 0x10FFFF ||
            (cp >= 0xD800 && cp <= 0xDFFF)) {
            out.push_back(0xFFFD);
            i += len;
            continue;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) append_utf8(out, cp);
    return out;
}

std::size_t codepoint_count(std::string_view s) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < s.size();) {
        const auto b = static_cast<unsigned char>(s[i]);
        if (b < 0x80)
            i += 1;
        else if ((b & 0xE0) == 0xC0)
            i += 2;
        else if ((b & 0xF0) == 0xE0)
            i += 3;
        else if ((b & 0xF8) == 0xF0)
            i += 4;
        else
            i += 1;
        ++n;
    }
    return n;
}

bool is_punct_or_symbol(char32_t cp) { return in_ranges(kPunctSymbolRanges, cp); }

bool is_space(char32_t cp) { return in_ranges(kSpaceRanges, cp); }

char32_t to_lower(char32_t cp) {
    auto it = std::lower_bound(std::begin(kLowercasePairs), std::end(kLowercasePairs), cp,
                               [](const LowercasePair& p, char32_t v) { return p.upper < v; });
    if (it != std::end(kLowercasePairs) && it->upper == cp) return it->lower;
    return cp;
}

std::string to_lower(std::string_view s) {
    auto cps = decode_utf8(s);
    for (auto& cp : cps) cp = to_lower(cp);
    return encode_utf8(cps);
}

}  // namespace influence::text
