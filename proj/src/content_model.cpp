#include "influence/content_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <unordered_map>

#include "influence/digest.hpp"
#include "influence/error.hpp"
#include "influence/parallel.hpp"
#include "influence/preprocess.hpp"
#include "influence/tsv.hpp"
#include "influence/version.hpp"

namespace influence {

namespace {

std::string format_hexfloat(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

struct Bucket {
    std::string key;
    const LanguageModel* model = nullptr;
    bool fallback = false;
    std::vector<const Tweet*> tweets;
};

std::array<double, kClassCount> score_document(const std::vector<std::string>& tokens,
                                               const LanguageModel& model,
                                               const WeightingOptions& options) {
    WeightedVector doc = weight_document(tokens, model.stats, options);
    std::array<double, kClassCount> scores{};
    for (std::size_t c = 0; c < kClassCount; ++c) {
        scores[c] = cosine(doc, model.profiles[c]);
    }
    return scores;
}

Label argmax_label(const std::array<double, kClassCount>& scores) {
    // Ties resolve to the majority class.
    return scores[class_index(Label::influencer)] >
                   scores[class_index(Label::non_influencer)]
               ? Label::influencer
               : Label::non_influencer;
}

}  // namespace

std::string_view to_string(Representation r) {
    return r == Representation::user_as_document ? "user_as_document" : "bag_of_tweets";
}

std::string_view to_string(LanguageMode m) {
    return m == LanguageMode::joint ? "joint" : "separated";
}

std::string_view to_string(Selection s) {
    return s == Selection::all ? "all" : "artex";
}

std::string_view to_string(Vote v) { return v == Vote::count ? "count" : "sum"; }

std::optional<Representation> parse_representation(std::string_view s) {
    if (s == "user_as_document" || s == "uad") return Representation::user_as_document;
    if (s == "bag_of_tweets" || s == "bot") return Representation::bag_of_tweets;
    return std::nullopt;
}

std::optional<LanguageMode> parse_language_mode(std::string_view s) {
    if (s == "joint") return LanguageMode::joint;
    if (s == "separated") return LanguageMode::separated;
    return std::nullopt;
}

std::optional<Selection> parse_selection(std::string_view s) {
    if (s == "all") return Selection::all;
    if (s == "artex") return Selection::artex;
    return std::nullopt;
}

std::optional<Vote> parse_vote(std::string_view s) {
    if (s == "count") return Vote::count;
    if (s == "sum") return Vote::sum;
    return std::nullopt;
}

std::string canonical_config(Domain domain, const StrategyConfig& config) {
    std::string s = "domain=";
    s += to_string(domain);
    s += ";representation=";
    s += to_string(config.representation);
    s += ";languages=";
    s += to_string(config.languages);
    s += ";selection=";
    s += to_string(config.selection);
    if (config.representation == Representation::bag_of_tweets) {
        s += ";vote=";
        s += to_string(config.vote);
    }
    if (config.selection == Selection::artex) {
        s += ";artex_fraction=" + format_hexfloat(config.artex_fraction);
    }
    s += ";log_base=";
    s += to_string(config.weighting.log_base);
    s += ";unseen=";
    s += to_string(config.weighting.unseen);
    return s;
}

std::uint64_t config_digest(Domain domain, const StrategyConfig& config) {
    return fnv1a(canonical_config(domain, config));
}

std::vector<double> artex_scores(
    const std::vector<std::vector<std::string>>& tweet_tokens) {
    std::size_t n = tweet_tokens.size();
    std::vector<double> scores(n, 0.0);
    if (n == 0) return scores;

    std::map<std::string, std::uint32_t> df;
    std::vector<std::string> distinct;
    for (const auto& tokens : tweet_tokens) {
        distinct.assign(tokens.begin(), tokens.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (const auto& term : distinct) ++df[term];
    }

    // Per-term summed weight across the user's tweets; the mean vector is
    // this divided by n.
    std::map<std::string, double> summed;
    std::vector<std::map<std::string, double>> vectors(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::map<std::string, std::uint32_t> tf;
        for (const auto& token : tweet_tokens[i]) ++tf[token];
        for (const auto& [term, count] : tf) {
            double idf = std::log(static_cast<double>(n) / df.at(term));
            double weight = count * idf;
            vectors[i].emplace(term, weight);
            summed[term] += weight;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        double dot_sum = 0.0;
        for (const auto& [term, weight] : vectors[i]) dot_sum += weight * summed.at(term);
        scores[i] = (dot_sum / n) * dot_sum;
    }
    return scores;
}

std::vector<const Tweet*> select_artex(const std::vector<const Tweet*>& tweets,
                                       double fraction) {
    if (tweets.empty()) return {};
    std::size_t n = tweets.size();
    auto keep = static_cast<std::size_t>(std::ceil(fraction * n));
    if (keep > n) keep = n;

    std::vector<std::vector<std::string>> tokens;
    tokens.reserve(n);
    for (const Tweet* t : tweets) tokens.push_back(tokenize_occurrence(t->text));
    auto scores = artex_scores(tokens);

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        const Tweet* ta = tweets[a];
        const Tweet* tb = tweets[b];
        if (ta->timestamp.has_value() != tb->timestamp.has_value()) {
            return ta->timestamp.has_value();
        }
        if (ta->timestamp && *ta->timestamp != *tb->timestamp) {
            return *ta->timestamp < *tb->timestamp;
        }
        return ta->tweet_id < tb->tweet_id;
    });

    std::vector<const Tweet*> selected;
    selected.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) selected.push_back(tweets[order[i]]);
    std::sort(selected.begin(), selected.end(),
              [](const Tweet* a, const Tweet* b) { return a->tweet_id < b->tweet_id; });
    return selected;
}

ContentModel ContentModel::train(const CorpusView& view, const StrategyConfig& config) {
    ContentModel model;
    model.config_ = config;
    model.domain_ = view.domain();
    model.corpus_digest_ = view.corpus().digest();

    struct UserTweets {
        const UserRecord* user;
        std::vector<const Tweet*> tweets;
    };
    std::vector<UserTweets> users;
    std::unordered_map<const Tweet*, std::vector<std::string>> token_cache;
    for (const auto& uid : view.user_ids()) {
        const UserRecord& u = view.corpus().user(uid);
        if (u.label == Label::unknown) {
            throw DataError("user '" + uid + "' in the training slice has no class label");
        }
        auto tweets = view.tweets_of(uid);
        if (config.selection == Selection::artex) {
            tweets = select_artex(tweets, config.artex_fraction);
        }
        for (const Tweet* t : tweets) {
            token_cache.emplace(t, tokenize_occurrence(t->text));
        }
        users.push_back({&u, std::move(tweets)});
    }

    auto train_bucket = [&](std::optional<Language> lang) -> std::optional<LanguageModel> {
        std::vector<TrainingDoc> docs;
        for (const auto& ut : users) {
            if (config.representation == Representation::user_as_document) {
                std::vector<std::string> tokens;
                bool any = false;
                for (const Tweet* t : ut.tweets) {
                    if (lang && t->language != *lang) continue;
                    any = true;
                    const auto& tk = token_cache.at(t);
                    tokens.insert(tokens.end(), tk.begin(), tk.end());
                }
                if (any) docs.push_back({std::move(tokens), ut.user->label});
            } else {
                for (const Tweet* t : ut.tweets) {
                    if (lang && t->language != *lang) continue;
                    docs.push_back({token_cache.at(t), ut.user->label});
                }
            }
        }
        if (docs.empty()) return std::nullopt;
        LanguageModel lm;
        lm.stats = TermStats::from_documents(docs);
        for (std::size_t c = 0; c < kClassCount; ++c) {
            lm.profiles[c] = weight_class(kClasses[c], lm.stats, config.weighting);
        }
        return lm;
    };

    auto joint = train_bucket(std::nullopt);
    if (!joint) {
        throw DataError("no training documents in the " +
                        std::string(to_string(view.domain())) + " " +
                        std::string(to_string(view.split())) + " slice");
    }
    model.models_.emplace("joint", std::move(*joint));
    if (config.languages == LanguageMode::separated) {
        if (auto en = train_bucket(Language::en)) model.models_.emplace("en", std::move(*en));
        if (auto es = train_bucket(Language::es)) model.models_.emplace("es", std::move(*es));
    }
    return model;
}

std::uint64_t ContentModel::config_digest() const {
    return influence::config_digest(domain_, config_);
}

Prediction ContentModel::classify(const std::string& user_id,
                                  const std::vector<const Tweet*>& tweets_in) const {
    Prediction p;
    p.user_id = user_id;

    std::vector<const Tweet*> tweets = tweets_in;
    if (config_.selection == Selection::artex) {
        tweets = select_artex(tweets, config_.artex_fraction);
    }
    const std::size_t n = tweets.size();
    if (n == 0) return p;

    const LanguageModel& joint = models_.at("joint");
    std::vector<Bucket> buckets;
    if (config_.languages == LanguageMode::joint) {
        buckets.push_back({"joint", &joint, false, tweets});
    } else {
        for (Language lang : {Language::en, Language::es, Language::other}) {
            Bucket b;
            b.key = std::string(to_string(lang));
            for (const Tweet* t : tweets) {
                if (t->language == lang) b.tweets.push_back(t);
            }
            if (b.tweets.empty()) continue;
            auto it = models_.find(b.key);
            if (it == models_.end()) {
                b.model = &joint;
                b.fallback = true;
            } else {
                b.model = &it->second;
            }
            buckets.push_back(std::move(b));
        }
    }

    if (config_.representation == Representation::user_as_document) {
        std::array<double, kClassCount> combined{};
        for (const auto& b : buckets) {
            std::vector<std::string> tokens;
            for (const Tweet* t : b.tweets) {
                auto tk = tokenize_occurrence(t->text);
                tokens.insert(tokens.end(), tk.begin(), tk.end());
            }
            auto scores = score_document(tokens, *b.model, config_.weighting);
            double proportion = static_cast<double>(b.tweets.size()) / n;
            for (std::size_t c = 0; c < kClassCount; ++c) {
                combined[c] += proportion * scores[c];
            }
            p.per_language[b.key] = {scores[class_index(Label::influencer)], proportion,
                                     b.fallback};
        }
        p.predicted_class = argmax_label(combined);
        p.rank_score = combined[class_index(Label::influencer)];
        return p;
    }

    // Bag of tweets: each tweet is scored on its bucket's model, then the
    // per-tweet outcomes are pooled across buckets.
    double influencer_total = 0.0;   // votes under count, summed cosine under sum
    double other_total = 0.0;
    for (const auto& b : buckets) {
        double influencer_bucket = 0.0;
        double other_bucket = 0.0;
        for (const Tweet* t : b.tweets) {
            auto scores = score_document(tokenize_occurrence(t->text), *b.model,
                                         config_.weighting);
            if (config_.vote == Vote::count) {
                if (argmax_label(scores) == Label::influencer) influencer_bucket += 1.0;
                else other_bucket += 1.0;
            } else {
                influencer_bucket += scores[class_index(Label::influencer)];
                other_bucket += scores[class_index(Label::non_influencer)];
            }
        }
        influencer_total += influencer_bucket;
        other_total += other_bucket;
        p.per_language[b.key] = {influencer_bucket / b.tweets.size(),
                                 static_cast<double>(b.tweets.size()) / n, b.fallback};
    }
    p.predicted_class =
        influencer_total > other_total ? Label::influencer : Label::non_influencer;
    p.rank_score = influencer_total / n;
    return p;
}

std::vector<Prediction> ContentModel::classify_all(const CorpusView& view,
                                                   unsigned jobs) const {
    const auto& ids = view.user_ids();
    std::vector<Prediction> predictions(ids.size());
    parallel_for(ids.size(), jobs, [&](std::size_t i) {
        predictions[i] = classify(ids[i], view.tweets_of(ids[i]));
    });
    return predictions;
}

RankedList ContentModel::rank(const CorpusView& view, unsigned jobs) const {
    return make_ranked_list(view.domain(), classify_all(view, jobs));
}

void ContentModel::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    out << "# " << kToolName << ' ' << kToolVersion << " config="
        << to_hex(config_digest()) << " corpus=" << to_hex(corpus_digest_) << '\n';
    out << "format\tinfmodel\t1\n";
    out << "domain\t" << to_string(domain_) << '\n';
    out << "representation\t" << to_string(config_.representation) << '\n';
    out << "languages\t" << to_string(config_.languages) << '\n';
    out << "selection\t" << to_string(config_.selection) << '\n';
    out << "vote\t" << to_string(config_.vote) << '\n';
    out << "artex_fraction\t" << format_hexfloat(config_.artex_fraction) << '\n';
    out << "log_base\t" << to_string(config_.weighting.log_base) << '\n';
    out << "unseen\t" << to_string(config_.weighting.unseen) << '\n';
    for (const auto& [key, lm] : models_) {
        out << "model\t" << key << '\n';
        out << "documents\t" << lm.stats.doc_count() << '\n';
        auto entries = lm.stats.entries();
        out << "terms\t" << entries.size() << '\n';
        for (const auto& e : entries) {
            out << "term\t" << e.term;
            for (auto count : e.df_by_class) out << '\t' << count;
            out << '\n';
        }
    }
    out << "end\n";
    if (!out.flush()) throw DataError("cannot write " + path);
}

ContentModel ContentModel::load(const std::string& path) {
    auto lines = tsv::read_lines(path);
    if (lines.empty() || lines[0].rfind("# ", 0) != 0) {
        throw DataError(path + ": missing header line");
    }

    ContentModel model;
    auto corpus_pos = lines[0].find("corpus=");
    if (corpus_pos == std::string::npos) {
        throw DataError(path + ": header lacks corpus digest");
    }
    model.corpus_digest_ =
        std::stoull(lines[0].substr(corpus_pos + 7, 16), nullptr, 16);

    std::size_t i = 1;
    auto next = [&]() -> std::vector<std::string_view> {
        if (i >= lines.size()) throw DataError(path + ": truncated model file");
        return tsv::split_fields(lines[i++]);
    };
    auto expect = [&](std::string_view key) {
        auto fields = next();
        if (fields.size() < 2 || fields[0] != key) {
            throw DataError(path + ": expected '" + std::string(key) + "' at line " +
                            std::to_string(i));
        }
        return fields;
    };

    auto format = expect("format");
    if (format[1] != "infmodel" || format.size() < 3 || format[2] != "1") {
        throw DataError(path + ": unsupported model format");
    }
    auto domain = parse_domain(expect("domain")[1]);
    auto representation = parse_representation(expect("representation")[1]);
    auto languages = parse_language_mode(expect("languages")[1]);
    auto selection = parse_selection(expect("selection")[1]);
    auto vote = parse_vote(expect("vote")[1]);
    auto fraction = tsv::parse_double(expect("artex_fraction")[1]);
    auto log_base = parse_log_base(expect("log_base")[1]);
    auto unseen = parse_unseen_policy(expect("unseen")[1]);
    if (!domain || !representation || !languages || !selection || !vote || !fraction ||
        !log_base || !unseen) {
        throw DataError(path + ": bad strategy field");
    }
    model.domain_ = *domain;
    model.config_.representation = *representation;
    model.config_.languages = *languages;
    model.config_.selection = *selection;
    model.config_.vote = *vote;
    model.config_.artex_fraction = *fraction;
    model.config_.weighting.log_base = *log_base;
    model.config_.weighting.unseen = *unseen;

    while (true) {
        auto fields = next();
        if (fields.size() == 1 && fields[0] == "end") break;
        if (fields.size() != 2 || fields[0] != "model") {
            throw DataError(path + ": expected 'model' or 'end' at line " +
                            std::to_string(i));
        }
        std::string key(fields[1]);
        auto documents = tsv::parse_int(expect("documents")[1]);
        auto term_count = tsv::parse_int(expect("terms")[1]);
        if (!documents || *documents < 1 || !term_count || *term_count < 0) {
            throw DataError(path + ": bad model header for '" + key + "'");
        }
        std::vector<TermEntry> entries;
        entries.reserve(static_cast<std::size_t>(*term_count));
        for (std::int64_t t = 0; t < *term_count; ++t) {
            auto row = next();
            if (row.size() != 2 + kClassCount || row[0] != "term") {
                throw DataError(path + ": bad term row at line " + std::to_string(i));
            }
            TermEntry e;
            e.term = std::string(row[1]);
            for (std::size_t c = 0; c < kClassCount; ++c) {
                auto count = tsv::parse_int(row[2 + c]);
                if (!count || *count < 0) {
                    throw DataError(path + ": bad term count at line " +
                                    std::to_string(i));
                }
                e.df_by_class[c] = static_cast<std::uint32_t>(*count);
            }
            entries.push_back(std::move(e));
        }
        LanguageModel lm;
        lm.stats = TermStats(static_cast<std::size_t>(*documents), std::move(entries));
        for (std::size_t c = 0; c < kClassCount; ++c) {
            lm.profiles[c] = weight_class(kClasses[c], lm.stats, model.config_.weighting);
        }
        if (!model.models_.emplace(key, std::move(lm)).second) {
            throw DataError(path + ": duplicate model '" + key + "'");
        }
    }
    if (!model.models_.count("joint")) {
        throw DataError(path + ": model file lacks the joint bucket");
    }
    return model;
}

}  // namespace influence
