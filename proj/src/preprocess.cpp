#include "influence/preprocess.hpp"

#include <fstream>

#include "influence/error.hpp"
#include "influence/text.hpp"

namespace influence {

namespace {

constexpr std::string_view kEnglishStops[] = {
    "about",   "above",   "after",   "again",   "all",     "and",     "any",
    "are",     "because", "been",    "before",  "being",   "below",   "between",
    "both",    "but",     "can",     "did",     "does",    "doing",   "down",
    "during",  "each",    "few",     "for",     "from",    "further", "had",
    "has",     "have",    "having",  "her",     "here",    "hers",    "him",
    "his",     "how",     "into",    "its",     "itself",  "just",    "more",
    "most",    "not",     "now",     "off",     "once",    "only",    "other",
    "our",     "ours",    "out",     "over",    "own",     "same",    "she",
    "should",  "some",    "such",    "than",    "that",    "the",     "their",
    "theirs",  "them",    "then",    "there",   "these",   "they",    "this",
    "those",   "through", "too",     "under",   "until",   "very",    "was",
    "were",    "what",    "when",    "where",   "which",   "while",   "who",
    "whom",    "why",     "will",    "with",    "you",     "your",    "yours",
};

constexpr std::string_view kSpanishStops[] = {
    "algo",     "algunas",  "algunos",  "ante",    "antes",    "como",
    "con",      "contra",   "cual",     "cuando",  "de",       "del",
    "desde",    "donde",    "durante",  "el",      "ella",     "ellas",
    "ellos",    "en",       "entre",    "era",     "eran",     "eres",
    "esa",      "esas",     "ese",      "eso",     "esos",     "esta",
    "estas",    "este",     "esto",     "estos",   "fue",      "fueron",
    "hay",      "la",       "las",      "les",     "los",      "mas",
    "menos",    "mucho",    "muy",      "nada",    "nos",      "nosotros",
    "nuestra",  "nuestro",  "otra",     "otro",    "para",     "pero",
    "poco",     "por",      "porque",   "que",     "quien",    "ser",
    "sin",      "sobre",    "son",      "soy",     "sus",      "tal",
    "tambien",  "tan",      "tanto",    "tiene",   "todo",     "todos",
    "una",      "uno",      "unos",     "usted",   "vosotros",
};

bool starts_with_url(const std::vector<char32_t>& chunk) {
    auto prefix = [&](std::u32string_view p) {
        if (chunk.size() < p.size()) return false;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (chunk[i] != p[i]) return false;
        }
        return true;
    };
    return prefix(U"http://") || prefix(U"https://") || prefix(U"www.");
}

struct Chunk {
    std::vector<char32_t> raw;       // lowercased, whitespace free
    char32_t marker = 0;             // '@', '#' or 0
    std::vector<char32_t> stripped;  // raw minus marker and punctuation
    bool is_url = false;
};

std::vector<Chunk> split_chunks(std::string_view text) {
    auto codepoints = text::decode_utf8(text);
    for (auto& c : codepoints) c = text::to_lower(c);

    std::vector<Chunk> chunks;
    std::size_t i = 0;
    while (i < codepoints.size()) {
        while (i < codepoints.size() && text::is_space(codepoints[i])) ++i;
        std::size_t start = i;
        while (i < codepoints.size() && !text::is_space(codepoints[i])) ++i;
        if (i == start) continue;

        Chunk chunk;
        chunk.raw.assign(codepoints.begin() + start, codepoints.begin() + i);
        if (starts_with_url(chunk.raw)) {
            chunk.is_url = true;
            chunks.push_back(std::move(chunk));
            continue;
        }
        std::size_t from = 0;
        if (chunk.raw[0] == U'@' || chunk.raw[0] == U'#') {
            chunk.marker = chunk.raw[0];
            from = 1;
        }
        for (std::size_t k = from; k < chunk.raw.size(); ++k) {
            if (!text::is_punct_or_symbol(chunk.raw[k])) chunk.stripped.push_back(chunk.raw[k]);
        }
        chunks.push_back(std::move(chunk));
    }
    return chunks;
}

}  // namespace

std::vector<std::string> tokenize_occurrence(std::string_view text) {
    std::vector<std::string> tokens;
    for (const auto& chunk : split_chunks(text)) {
        if (chunk.is_url || chunk.stripped.empty()) continue;
        if (chunk.marker == 0 && chunk.stripped.size() < 3) continue;
        std::string token;
        if (chunk.marker != 0) text::append_utf8(token, chunk.marker);
        for (char32_t c : chunk.stripped) text::append_utf8(token, c);
        tokens.push_back(std::move(token));
    }
    return tokens;
}

std::vector<std::string> tokenize_cooccurrence(std::string_view text,
                                               const StopList& stops) {
    std::vector<std::string> tokens;
    for (const auto& chunk : split_chunks(text)) {
        if (chunk.is_url || chunk.stripped.size() < 3) continue;
        std::string token;
        for (char32_t c : chunk.stripped) text::append_utf8(token, c);
        if (stops.count(token)) continue;
        tokens.push_back(std::move(token));
    }
    return tokens;
}

Entities extract_entities(std::string_view text) {
    Entities out;
    for (const auto& chunk : split_chunks(text)) {
        if (chunk.is_url) {
            std::string url;
            for (char32_t c : chunk.raw) text::append_utf8(url, c);
            out.urls.push_back(std::move(url));
            continue;
        }
        if (chunk.marker == 0 || chunk.stripped.empty()) continue;
        std::string name;
        for (char32_t c : chunk.stripped) text::append_utf8(name, c);
        if (chunk.marker == U'@') out.mentions.push_back(std::move(name));
        else out.hashtags.push_back(std::move(name));
    }
    return out;
}

StopList load_stoplist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    StopList stops;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        stops.insert(text::to_lower(line));
    }
    return stops;
}

StopList builtin_stoplist(Language language) {
    StopList stops;
    if (language == Language::en) {
        for (auto w : kEnglishStops) stops.emplace(w);
    } else if (language == Language::es) {
        for (auto w : kSpanishStops) stops.emplace(w);
    }
    return stops;
}

StopList merge_stoplists(const StopList& a, const StopList& b) {
    StopList merged = a;
    merged.insert(b.begin(), b.end());
    return merged;
}

}  // namespace influence
