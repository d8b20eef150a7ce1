#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "influence/corpus.hpp"

namespace influence {

using StopList = std::unordered_set<std::string>;

struct Entities {
    std::vector<std::string> mentions;   // lowercased, without the @ marker
    std::vector<std::string> hashtags;   // lowercased, without the # marker
    std::vector<std::string> urls;       // lowercased, kept verbatim
};

// Term-occurrence tokens: lowercase, drop URLs, strip punctuation and
// symbols, keep @mention and #hashtag markers, drop plain tokens shorter
// than three codepoints.
std::vector<std::string> tokenize_occurrence(std::string_view text);

// Co-occurrence tokens: as above, but markers are stripped before the
// length check and stop words are removed.
std::vector<std::string> tokenize_cooccurrence(std::string_view text,
                                               const StopList& stops);

Entities extract_entities(std::string_view text);

// One word per line, blank lines and '#' comments ignored.
StopList load_stoplist(const std::string& path);
// Built-in lists for en and es; empty for other.
StopList builtin_stoplist(Language language);
StopList merge_stoplists(const StopList& a, const StopList& b);

}  // namespace influence
