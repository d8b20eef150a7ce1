#pragma once

#include <map>
#include <string>
#include <vector>

#include "influence/corpus.hpp"

namespace influence {

struct LanguageScore {
    double score = 0.0;            // influencer score within this bucket
    double proportion = 0.0;       // share of the user's scored tweets
    bool joint_fallback = false;   // bucket had no own model
};

struct Prediction {
    std::string user_id;
    Label predicted_class = Label::non_influencer;
    double rank_score = 0.0;
    // Keyed "joint" or by language; empty for users with no scored tweets.
    std::map<std::string, LanguageScore> per_language;
};

struct RankedEntry {
    std::string user_id;
    double score = 0.0;
    Label predicted_class = Label::unknown;
};

struct RankedList {
    Domain domain = Domain::automotive;
    std::vector<RankedEntry> entries;   // descending score
};

// Orders by descending score, ties broken by ascending user id.
RankedList make_ranked_list(Domain domain, const std::vector<Prediction>& predictions);

}  // namespace influence
