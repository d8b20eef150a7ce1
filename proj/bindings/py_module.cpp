#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "influence/centrality.hpp"
#include "influence/content_model.hpp"
#include "influence/cooccurrence.hpp"
#include "influence/corpus.hpp"
#include "influence/eval.hpp"
#include "influence/features.hpp"
#include "influence/preprocess.hpp"
#include "influence/version.hpp"
#include "influence/weighting.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace influence;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Influencer detection over twitter-style corpora: purity-weighted "
              "term profiles, co-occurrence graphs and ranking metrics.";
    m.attr("__version__") = std::string(kToolVersion);

    py::enum_<Domain>(m, "Domain")
        .value("automotive", Domain::automotive)
        .value("banking", Domain::banking);
    py::enum_<Split>(m, "Split")
        .value("train", Split::train)
        .value("test", Split::test);
    py::enum_<Language>(m, "Language")
        .value("en", Language::en)
        .value("es", Language::es)
        .value("other", Language::other);
    py::enum_<Label>(m, "Label")
        .value("influencer", Label::influencer)
        .value("non_influencer", Label::non_influencer)
        .value("unknown", Label::unknown);
    py::enum_<LogBase>(m, "LogBase")
        .value("natural", LogBase::natural)
        .value("base10", LogBase::base10)
        .value("base2", LogBase::base2);
    py::enum_<UnseenPolicy>(m, "UnseenPolicy")
        .value("skip", UnseenPolicy::skip)
        .value("smoothed", UnseenPolicy::smoothed);
    py::enum_<Representation>(m, "Representation")
        .value("user_as_document", Representation::user_as_document)
        .value("bag_of_tweets", Representation::bag_of_tweets);
    py::enum_<LanguageMode>(m, "LanguageMode")
        .value("joint", LanguageMode::joint)
        .value("separated", LanguageMode::separated);
    py::enum_<Selection>(m, "Selection")
        .value("all", Selection::all)
        .value("artex", Selection::artex);
    py::enum_<Vote>(m, "Vote")
        .value("count", Vote::count)
        .value("sum", Vote::sum);
    py::enum_<Measure>(m, "Measure")
        .value("degree", Measure::degree)
        .value("betweenness", Measure::betweenness)
        .value("closeness", Measure::closeness)
        .value("eigenvector", Measure::eigenvector)
        .value("subgraph", Measure::subgraph)
        .value("eccentricity", Measure::eccentricity)
        .value("transitivity", Measure::transitivity)
        .value("embeddedness", Measure::embeddedness)
        .value("within_module_degree", Measure::within_module_degree)
        .value("participation", Measure::participation);
    py::enum_<BaselineKind>(m, "BaselineKind")
        .value("followers", BaselineKind::followers)
        .value("tweet_count", BaselineKind::tweet_count);

    py::class_<Geolocation>(m, "Geolocation")
        .def(py::init<>())
        .def(py::init([](double lat, double lon) {
                 return Geolocation{lat, lon};
             }),
             "lat"_a, "lon"_a)
        .def_readwrite("lat", &Geolocation::lat)
        .def_readwrite("lon", &Geolocation::lon);

    py::class_<Tweet>(m, "Tweet")
        .def(py::init<>())
        .def_readwrite("tweet_id", &Tweet::tweet_id)
        .def_readwrite("user_id", &Tweet::user_id)
        .def_readwrite("text", &Tweet::text)
        .def_readwrite("language", &Tweet::language)
        .def_readwrite("timestamp", &Tweet::timestamp)
        .def_readwrite("geolocation", &Tweet::geolocation)
        .def_readwrite("is_retweet", &Tweet::is_retweet)
        .def_readwrite("mentions", &Tweet::mentions)
        .def_readwrite("hashtags", &Tweet::hashtags)
        .def_readwrite("urls", &Tweet::urls)
        .def_readwrite("entities_present", &Tweet::entities_present);

    py::class_<UserRecord>(m, "UserRecord")
        .def(py::init<>())
        .def_readwrite("user_id", &UserRecord::user_id)
        .def_readwrite("domain", &UserRecord::domain)
        .def_readwrite("label", &UserRecord::label)
        .def_readwrite("split", &UserRecord::split)
        .def_readwrite("tweet_ids", &UserRecord::tweet_ids);

    py::class_<MalformedRow>(m, "MalformedRow")
        .def_readonly("file", &MalformedRow::file)
        .def_readonly("line", &MalformedRow::line)
        .def_readonly("reason", &MalformedRow::reason);

    py::class_<LoadReport>(m, "LoadReport")
        .def_readonly("tweets_loaded", &LoadReport::tweets_loaded)
        .def_readonly("users_loaded", &LoadReport::users_loaded)
        .def_readonly("malformed", &LoadReport::malformed)
        .def_readonly("warnings", &LoadReport::warnings);

    py::class_<LoadOptions>(m, "LoadOptions")
        .def(py::init<>())
        .def_readwrite("manifest_path", &LoadOptions::manifest_path)
        .def_readwrite("strict", &LoadOptions::strict);

    py::class_<Corpus>(m, "Corpus")
        .def(py::init<std::vector<Tweet>, std::vector<UserRecord>>(), "tweets"_a,
             "users"_a)
        .def_property_readonly("tweet_ids", &Corpus::tweet_ids)
        .def_property_readonly("user_ids", &Corpus::user_ids)
        .def_property_readonly("tweet_count", &Corpus::tweet_count)
        .def_property_readonly("user_count", &Corpus::user_count)
        .def_property_readonly("digest", &Corpus::digest)
        .def("tweet", &Corpus::tweet, "tweet_id"_a,
             py::return_value_policy::reference_internal)
        .def("user", &Corpus::user, "user_id"_a,
             py::return_value_policy::reference_internal)
        .def("has_user", &Corpus::has_user, "user_id"_a);

    py::class_<CorpusView>(m, "CorpusView")
        .def_property_readonly("domain", &CorpusView::domain)
        .def_property_readonly("split", &CorpusView::split)
        .def_property_readonly("language", &CorpusView::language)
        .def_property_readonly("user_ids", &CorpusView::user_ids)
        .def_property_readonly("tweet_count", &CorpusView::tweet_count)
        .def("tweets_of",
             [](const CorpusView& view, const std::string& user_id) {
                 std::vector<Tweet> tweets;
                 for (const Tweet* tweet : view.tweets_of(user_id)) {
                     tweets.push_back(*tweet);
                 }
                 return tweets;
             },
             "user_id"_a);

    m.def("load_corpus",
          [](const std::string& tweets_path, const std::string& labels_path,
             const LoadOptions& options) {
              LoadReport report;
              Corpus corpus = load_corpus(tweets_path, labels_path, options, &report);
              return py::make_tuple(std::move(corpus), std::move(report));
          },
          "tweets_path"_a, "labels_path"_a, "options"_a = LoadOptions());
    m.def("save_corpus", &save_corpus, "corpus"_a, "tweets_path"_a, "labels_path"_a);
    m.def("load_profiles", &load_profiles, "path"_a);
    m.def("partition",
          [](const Corpus& corpus, Domain domain, Split split,
             std::optional<Language> language) {
              return partition(corpus, domain, split, language);
          },
          "corpus"_a, "domain"_a, "split"_a, "language"_a = py::none(),
          py::keep_alive<0, 1>());
    m.def("partition",
          [](const CorpusView& view, Domain domain, Split split,
             std::optional<Language> language) {
              return partition(view, domain, split, language);
          },
          "view"_a, "domain"_a, "split"_a, "language"_a = py::none(),
          py::keep_alive<0, 1>());

    m.def("tokenize_occurrence",
          [](const std::string& text) { return tokenize_occurrence(text); }, "text"_a);
    m.def("tokenize_cooccurrence",
          [](const std::string& text, const StopList& stops) {
              return tokenize_cooccurrence(text, stops);
          },
          "text"_a, "stops"_a);
    py::class_<Entities>(m, "Entities")
        .def_readonly("mentions", &Entities::mentions)
        .def_readonly("hashtags", &Entities::hashtags)
        .def_readonly("urls", &Entities::urls);
    m.def("extract_entities",
          [](const std::string& text) { return extract_entities(text); }, "text"_a);
    m.def("load_stoplist", &load_stoplist, "path"_a);
    m.def("builtin_stoplist", &builtin_stoplist, "language"_a);
    m.def("merge_stoplists", &merge_stoplists, "a"_a, "b"_a);

    py::class_<WeightingOptions>(m, "WeightingOptions")
        .def(py::init<>())
        .def_readwrite("log_base", &WeightingOptions::log_base)
        .def_readwrite("unseen", &WeightingOptions::unseen);

    py::class_<TrainingDoc>(m, "TrainingDoc")
        .def(py::init<>())
        .def(py::init([](std::vector<std::string> tokens, Label label) {
                 return TrainingDoc{std::move(tokens), label};
             }),
             "tokens"_a, "label"_a)
        .def_readwrite("tokens", &TrainingDoc::tokens)
        .def_readwrite("label", &TrainingDoc::label);

    py::class_<TermEntry>(m, "TermEntry")
        .def(py::init<>())
        .def_readwrite("term", &TermEntry::term)
        .def_readwrite("df_by_class", &TermEntry::df_by_class);

    py::class_<TermStats>(m, "TermStats")
        .def(py::init<std::size_t, std::vector<TermEntry>>(), "doc_count"_a,
             "entries"_a)
        .def_static("from_documents", &TermStats::from_documents, "docs"_a)
        .def_property_readonly("doc_count", &TermStats::doc_count)
        .def_property_readonly("vocabulary_size", &TermStats::vocabulary_size)
        .def("contains", &TermStats::contains, "term"_a)
        .def("df", &TermStats::df, "term"_a)
        .def("df_class", &TermStats::df_class, "term"_a, "label"_a)
        .def("idf", &TermStats::idf, "term"_a, "base"_a = LogBase::natural)
        .def("gini", &TermStats::gini, "term"_a)
        .def("vocabulary", &TermStats::vocabulary)
        .def("entries", &TermStats::entries);

    py::class_<WeightedVector>(m, "WeightedVector")
        .def(py::init<>())
        .def(py::init<std::vector<std::pair<std::string, double>>>(), "entries"_a)
        .def_property_readonly("entries", &WeightedVector::entries)
        .def_property_readonly("norm", &WeightedVector::norm)
        .def("__len__", &WeightedVector::size);

    m.def("weight_document", &weight_document, "tokens"_a, "stats"_a,
          "options"_a = WeightingOptions());
    m.def("weight_class", &weight_class, "label"_a, "stats"_a,
          "options"_a = WeightingOptions());
    m.def("cosine", &cosine, "a"_a, "b"_a);
    m.def("apply_log", &apply_log, "x"_a, "base"_a);

    py::class_<StrategyConfig>(m, "StrategyConfig")
        .def(py::init<>())
        .def_readwrite("representation", &StrategyConfig::representation)
        .def_readwrite("languages", &StrategyConfig::languages)
        .def_readwrite("selection", &StrategyConfig::selection)
        .def_readwrite("vote", &StrategyConfig::vote)
        .def_readwrite("artex_fraction", &StrategyConfig::artex_fraction)
        .def_readwrite("weighting", &StrategyConfig::weighting);

    m.def("canonical_config", &canonical_config, "domain"_a, "config"_a);
    m.def("config_digest", &config_digest, "domain"_a, "config"_a);
    m.def("artex_scores", &artex_scores, "tweet_tokens"_a);

    py::class_<LanguageScore>(m, "LanguageScore")
        .def_readonly("score", &LanguageScore::score)
        .def_readonly("proportion", &LanguageScore::proportion)
        .def_readonly("joint_fallback", &LanguageScore::joint_fallback);

    py::class_<Prediction>(m, "Prediction")
        .def(py::init([](std::string user_id, Label predicted_class,
                         double rank_score) {
                 Prediction prediction;
                 prediction.user_id = std::move(user_id);
                 prediction.predicted_class = predicted_class;
                 prediction.rank_score = rank_score;
                 return prediction;
             }),
             "user_id"_a, "predicted_class"_a, "rank_score"_a = 0.0)
        .def_readonly("user_id", &Prediction::user_id)
        .def_readonly("predicted_class", &Prediction::predicted_class)
        .def_readonly("rank_score", &Prediction::rank_score)
        .def_readonly("per_language", &Prediction::per_language);

    py::class_<RankedEntry>(m, "RankedEntry")
        .def(py::init([](std::string user_id, double score, Label predicted_class) {
                 return RankedEntry{std::move(user_id), score, predicted_class};
             }),
             "user_id"_a, "score"_a, "predicted_class"_a = Label::unknown)
        .def_readonly("user_id", &RankedEntry::user_id)
        .def_readonly("score", &RankedEntry::score)
        .def_readonly("predicted_class", &RankedEntry::predicted_class);

    py::class_<RankedList>(m, "RankedList")
        .def(py::init([](Domain domain, std::vector<RankedEntry> entries) {
                 return RankedList{domain, std::move(entries)};
             }),
             "domain"_a, "entries"_a)
        .def_readonly("domain", &RankedList::domain)
        .def_readonly("entries", &RankedList::entries);

    m.def("make_ranked_list", &make_ranked_list, "domain"_a, "predictions"_a);

    py::class_<ContentModel>(m, "ContentModel")
        .def_static("train", &ContentModel::train, "view"_a, "config"_a)
        .def_static("load", &ContentModel::load, "path"_a)
        .def_property_readonly("config", &ContentModel::config)
        .def_property_readonly("domain", &ContentModel::domain)
        .def_property_readonly("corpus_digest", &ContentModel::corpus_digest)
        .def_property_readonly("config_digest", &ContentModel::config_digest)
        .def("classify", &ContentModel::classify, "user_id"_a, "tweets"_a)
        .def("classify_all", &ContentModel::classify_all, "view"_a, "jobs"_a = 1)
        .def("rank", &ContentModel::rank, "view"_a, "jobs"_a = 1)
        .def("save", &ContentModel::save, "path"_a);

    py::class_<CooccurrenceOptions>(m, "CooccurrenceOptions")
        .def(py::init<>())
        .def_readwrite("ordered_pairs", &CooccurrenceOptions::ordered_pairs)
        .def_readwrite("cross_tweet_boundaries",
                       &CooccurrenceOptions::cross_tweet_boundaries);

    py::class_<CooccurrenceGraph>(m, "CooccurrenceGraph")
        .def(py::init<std::vector<std::string>,
                      std::map<CooccurrenceGraph::EdgeKey, std::uint32_t>, bool>(),
             "nodes"_a, "edges"_a, "ordered"_a)
        .def_property_readonly("nodes", &CooccurrenceGraph::nodes)
        .def_property_readonly("node_count", &CooccurrenceGraph::node_count)
        .def_property_readonly("edge_count", &CooccurrenceGraph::edge_count)
        .def_property_readonly("ordered", &CooccurrenceGraph::ordered)
        .def_property_readonly("edges", &CooccurrenceGraph::edges)
        .def("node_index", &CooccurrenceGraph::node_index, "term"_a);

    m.def("build_cooccurrence", &build_cooccurrence, "token_streams"_a,
          "options"_a = CooccurrenceOptions());
    m.def("euclidean_distance", &euclidean_distance, "a"_a, "b"_a);

    py::class_<UserGraph>(m, "UserGraph")
        .def_readonly("user_id", &UserGraph::user_id)
        .def_readonly("label", &UserGraph::label)
        .def_readonly("graph", &UserGraph::graph);

    m.def("build_user_graphs", &build_user_graphs, "view"_a, "stops"_a,
          "options"_a = CooccurrenceOptions(), "jobs"_a = 1);
    m.def("knn_predict", &knn_predict, "user_id"_a, "graph"_a, "training"_a, "k"_a);
    m.def("knn_classify_all", &knn_classify_all, "test"_a, "training"_a, "k"_a,
          "jobs"_a = 1);

    py::class_<CommunityPartition>(m, "CommunityPartition")
        .def(py::init<>())
        .def(py::init([](std::vector<std::uint32_t> assignment,
                         std::uint32_t community_count) {
                 return CommunityPartition{std::move(assignment), community_count};
             }),
             "assignment"_a, "community_count"_a)
        .def_readwrite("assignment", &CommunityPartition::assignment)
        .def_readwrite("community_count", &CommunityPartition::community_count);

    m.def("all_measures", &all_measures);
    m.def("needs_partition", &needs_partition, "measure"_a);
    m.def("centrality", &centrality, "graph"_a, "measure"_a,
          "partition"_a = static_cast<const CommunityPartition*>(nullptr));
    m.def("summarize_mean", &summarize_mean, "values"_a);
    m.def("partition_communities", &partition_communities, "graph"_a, "seed"_a = 0);

    py::class_<ProfileMetadata>(m, "ProfileMetadata")
        .def(py::init<>())
        .def_readwrite("has_picture", &ProfileMetadata::has_picture)
        .def_readwrite("is_verified", &ProfileMetadata::is_verified)
        .def_readwrite("allows_contributions", &ProfileMetadata::allows_contributions)
        .def_readwrite("has_webpage", &ProfileMetadata::has_webpage)
        .def_readwrite("description_length", &ProfileMetadata::description_length)
        .def_readwrite("follower_count", &ProfileMetadata::follower_count)
        .def_readwrite("followee_count", &ProfileMetadata::followee_count)
        .def_readwrite("mutual_count", &ProfileMetadata::mutual_count)
        .def_readwrite("recent_follower_ids", &ProfileMetadata::recent_follower_ids)
        .def_readwrite("recent_followee_ids", &ProfileMetadata::recent_followee_ids)
        .def_readwrite("favorites_given", &ProfileMetadata::favorites_given)
        .def_readwrite("favorites_received", &ProfileMetadata::favorites_received)
        .def_readwrite("web_search_results", &ProfileMetadata::web_search_results)
        .def_readwrite("klout_score", &ProfileMetadata::klout_score);

    py::class_<FeatureOptions>(m, "FeatureOptions")
        .def(py::init<>())
        .def_readwrite("retweet_text_heuristic",
                       &FeatureOptions::retweet_text_heuristic);

    py::class_<UserFeatures>(m, "UserFeatures")
        .def_readonly("user_id", &UserFeatures::user_id)
        .def_readonly("tweet_count", &UserFeatures::tweet_count)
        .def_readonly("delay_avg", &UserFeatures::delay_avg)
        .def_readonly("delay_sd", &UserFeatures::delay_sd)
        .def_readonly("delay_min", &UserFeatures::delay_min)
        .def_readonly("delay_max", &UserFeatures::delay_max)
        .def_readonly("distinct_geolocations", &UserFeatures::distinct_geolocations)
        .def_readonly("geolocated_proportion", &UserFeatures::geolocated_proportion)
        .def_readonly("retweet_count", &UserFeatures::retweet_count)
        .def_readonly("retweet_proportion", &UserFeatures::retweet_proportion)
        .def_readonly("mentions_per_tweet", &UserFeatures::mentions_per_tweet)
        .def_readonly("unique_mentions_per_tweet",
                      &UserFeatures::unique_mentions_per_tweet)
        .def_readonly("mention_tweet_proportion",
                      &UserFeatures::mention_tweet_proportion)
        .def_readonly("distinct_mentioned_users",
                      &UserFeatures::distinct_mentioned_users)
        .def_readonly("avg_tweet_length_chars", &UserFeatures::avg_tweet_length_chars)
        .def_readonly("avg_tweet_length_words", &UserFeatures::avg_tweet_length_words)
        .def_readonly("unique_hashtags", &UserFeatures::unique_hashtags)
        .def_readonly("hashtags_per_tweet", &UserFeatures::hashtags_per_tweet)
        .def_readonly("unique_hashtags_per_tweet",
                      &UserFeatures::unique_hashtags_per_tweet)
        .def_readonly("hashtag_tweet_proportion",
                      &UserFeatures::hashtag_tweet_proportion)
        .def_readonly("urls_per_tweet", &UserFeatures::urls_per_tweet)
        .def_readonly("unique_urls_per_tweet", &UserFeatures::unique_urls_per_tweet)
        .def_readonly("url_tweet_proportion", &UserFeatures::url_tweet_proportion)
        .def_readonly("follower_id_sd", &UserFeatures::follower_id_sd)
        .def_readonly("followee_id_sd", &UserFeatures::followee_id_sd)
        .def_readonly("has_picture", &UserFeatures::has_picture)
        .def_readonly("is_verified", &UserFeatures::is_verified)
        .def_readonly("allows_contributions", &UserFeatures::allows_contributions)
        .def_readonly("has_webpage", &UserFeatures::has_webpage)
        .def_readonly("description_length", &UserFeatures::description_length)
        .def_readonly("follower_count", &UserFeatures::follower_count)
        .def_readonly("followee_count", &UserFeatures::followee_count)
        .def_readonly("mutual_count", &UserFeatures::mutual_count)
        .def_readonly("favorites_given", &UserFeatures::favorites_given)
        .def_readonly("favorites_received", &UserFeatures::favorites_received)
        .def_readonly("web_search_results", &UserFeatures::web_search_results)
        .def_readonly("klout_score", &UserFeatures::klout_score);

    m.def("extract_features", &extract_features, "view"_a, "profiles"_a = ProfileTable(),
          "options"_a = FeatureOptions(), "jobs"_a = 1);
    m.def("feature_columns", &feature_columns);
    m.def("feature_row", &feature_row, "features"_a);

    py::class_<BaselineResult>(m, "BaselineResult")
        .def_readonly("list", &BaselineResult::list)
        .def_readonly("missing", &BaselineResult::missing);

    m.def("baseline_rank", &baseline_rank, "view"_a, "kind"_a,
          "profiles"_a = ProfileTable());

    py::class_<ClassMetrics>(m, "ClassMetrics")
        .def_readonly("precision", &ClassMetrics::precision)
        .def_readonly("recall", &ClassMetrics::recall)
        .def_readonly("f", &ClassMetrics::f);

    m.def("mean_average_precision", &mean_average_precision, "list"_a, "reference"_a);
    m.def("classification_metrics", &classification_metrics, "predictions"_a,
          "reference"_a);
    m.def("macro_f", &macro_f, "predictions"_a, "reference"_a);
    m.def("majority_baseline", &majority_baseline, "reference"_a);
    m.def("reference_labels", &reference_labels, "view"_a);
}
