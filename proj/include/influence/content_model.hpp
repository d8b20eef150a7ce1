#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "influence/corpus.hpp"
#include "influence/prediction.hpp"
#include "influence/weighting.hpp"

namespace influence {

enum class Representation { user_as_document, bag_of_tweets };
enum class LanguageMode { joint, separated };
enum class Selection { all, artex };
enum class Vote { count, sum };

std::string_view to_string(Representation r);
std::string_view to_string(LanguageMode m);
std::string_view to_string(Selection s);
std::string_view to_string(Vote v);
std::optional<Representation> parse_representation(std::string_view s);
std::optional<LanguageMode> parse_language_mode(std::string_view s);
std::optional<Selection> parse_selection(std::string_view s);
std::optional<Vote> parse_vote(std::string_view s);

struct StrategyConfig {
    Representation representation = Representation::user_as_document;
    LanguageMode languages = LanguageMode::joint;
    Selection selection = Selection::all;
    Vote vote = Vote::count;               // bag_of_tweets only
    double artex_fraction = 0.10;          // artex selection only
    WeightingOptions weighting;

    bool operator==(const StrategyConfig&) const = default;
};

// Canonical parameter string; fields that do not affect the strategy
// (vote under user_as_document, fraction under all-tweets selection) are
// left out so equivalent runs share a digest.
std::string canonical_config(Domain domain, const StrategyConfig& config);
std::uint64_t config_digest(Domain domain, const StrategyConfig& config);

// Per-tweet relevance scores within one user: with a the mean tweet vector
// and v the per-term summed weight, s(t) = dot(t, a) * dot(t, v) over
// TF-IDF vectors computed against the user's own tweets.
std::vector<double> artex_scores(const std::vector<std::vector<std::string>>& tweet_tokens);

// Keeps the ceil(fraction * n) highest scoring tweets. Ties prefer the
// earlier timestamp, then the smaller tweet id; the result is sorted by
// tweet id.
std::vector<const Tweet*> select_artex(const std::vector<const Tweet*>& tweets,
                                       double fraction);

struct LanguageModel {
    TermStats stats;
    std::array<WeightedVector, kClassCount> profiles;
};

// Class profiles per language bucket plus everything needed to score unseen
// users. The joint bucket is always present; under separated languages it
// doubles as the fallback for buckets without their own model.
class ContentModel {
  public:
    // Trains from a labelled slice; every user there must carry a
    // classification label.
    static ContentModel train(const CorpusView& view, const StrategyConfig& config);

    const StrategyConfig& config() const { return config_; }
    Domain domain() const { return domain_; }
    std::uint64_t corpus_digest() const { return corpus_digest_; }
    std::uint64_t config_digest() const;
    const std::map<std::string, LanguageModel>& models() const { return models_; }

    Prediction classify(const std::string& user_id,
                        const std::vector<const Tweet*>& tweets) const;
    // One prediction per view user, in user id order.
    std::vector<Prediction> classify_all(const CorpusView& view,
                                         unsigned jobs = 1) const;
    RankedList rank(const CorpusView& view, unsigned jobs = 1) const;

    void save(const std::string& path) const;
    static ContentModel load(const std::string& path);

  private:
    StrategyConfig config_;
    Domain domain_ = Domain::automotive;
    std::uint64_t corpus_digest_ = 0;
    std::map<std::string, LanguageModel> models_;
};

}  // namespace influence
