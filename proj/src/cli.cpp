#include "influence/cli.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "influence/centrality.hpp"
#include "influence/content_model.hpp"
#include "influence/cooccurrence.hpp"
#include "influence/corpus.hpp"
#include "influence/digest.hpp"
#include "influence/error.hpp"
#include "influence/eval.hpp"
#include "influence/features.hpp"
#include "influence/parallel.hpp"
#include "influence/preprocess.hpp"
#include "influence/tsv.hpp"
#include "influence/version.hpp"

namespace influence {

namespace {

namespace fs = std::filesystem;

std::string header_line(const std::string& canonical, std::uint64_t corpus_digest) {
    std::string line = "# ";
    line += kToolName;
    line += ' ';
    line += kToolVersion;
    line += " config=" + to_hex(fnv1a(canonical));
    line += " corpus=" + to_hex(corpus_digest);
    return line;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    return out;
}

void finish_output(std::ofstream& out, const fs::path& path) {
    if (!out.flush()) throw DataError("cannot write " + path.string());
}

Domain need_domain(const std::string& s) {
    auto domain = parse_domain(s);
    if (!domain) throw DataError("unknown domain '" + s + "'");
    return *domain;
}

Split need_split(const std::string& s) {
    auto split = parse_split(s);
    if (!split) throw DataError("unknown split '" + s + "'");
    return *split;
}

StopList resolve_stops(const std::vector<std::string>& paths) {
    if (paths.empty()) {
        return merge_stoplists(builtin_stoplist(Language::en),
                               builtin_stoplist(Language::es));
    }
    StopList stops;
    for (const auto& path : paths) {
        stops = merge_stoplists(stops, load_stoplist(path));
    }
    return stops;
}

std::string stops_token(const StopList& stops) {
    std::vector<std::string> words(stops.begin(), stops.end());
    std::sort(words.begin(), words.end());
    Fnv1a h;
    for (const auto& w : words) {
        h.update(w);
        h.update("\n");
    }
    return to_hex(h.value());
}

std::pair<unsigned, unsigned> parse_k_spec(const std::string& spec) {
    auto parse_one = [&](std::string_view s) {
        auto v = tsv::parse_int(s);
        if (!v || *v < 1 || *v > 100000) {
            throw DataError("bad neighbour count '" + spec + "'");
        }
        return static_cast<unsigned>(*v);
    };
    auto dots = spec.find("..");
    if (dots == std::string::npos) {
        unsigned k = parse_one(spec);
        return {k, k};
    }
    unsigned lo = parse_one(std::string_view(spec).substr(0, dots));
    unsigned hi = parse_one(std::string_view(spec).substr(dots + 2));
    if (lo > hi) throw DataError("bad neighbour range '" + spec + "'");
    return {lo, hi};
}

// Shared input/output options.
struct IoArgs {
    std::string tweets;
    std::string labels;
    std::string manifest;
    std::string out;
    bool strict = false;
    unsigned jobs = 1;
};

void add_io(CLI::App* cmd, IoArgs& io, bool with_out = true) {
    cmd->add_option("--tweets", io.tweets, "Tweet records (TSV or JSONL)")->required();
    cmd->add_option("--labels", io.labels, "User labels table")->required();
    cmd->add_option("--manifest", io.manifest, "Expected per-slice user counts");
    if (with_out) {
        cmd->add_option("--out", io.out, "Output directory")->required();
    }
    cmd->add_flag("--strict", io.strict, "Abort on any malformed input row");
    cmd->add_option("--jobs", io.jobs, "Worker threads")->check(CLI::Range(1u, 512u));
}

Corpus load(const IoArgs& io, LoadReport* report) {
    LoadOptions options;
    if (!io.manifest.empty()) options.manifest_path = io.manifest;
    options.strict = io.strict;
    Corpus corpus = load_corpus(io.tweets, io.labels, options, report);
    if (report) {
        for (const auto& warning : report->warnings) {
            std::cerr << "warning: " << warning << '\n';
        }
    }
    return corpus;
}

void write_ranking_file(const fs::path& path, const std::string& header,
                        const RankedList& list) {
    auto out = open_output(path);
    out << header << '\n';
    out << "rank\tuser_id\tscore\tpredicted_class\n";
    std::size_t position = 1;
    for (const auto& entry : list.entries) {
        out << position++ << '\t' << entry.user_id << '\t'
            << tsv::format_double(entry.score) << '\t' << to_string(entry.predicted_class)
            << '\n';
    }
    finish_output(out, path);
}

std::string bucket_column(const Prediction& p) {
    std::string cell;
    for (const auto& [key, ls] : p.per_language) {
        if (!cell.empty()) cell += ';';
        cell += key;
        if (ls.joint_fallback) cell += '*';
        cell += '=' + tsv::format_double(ls.score) + '@' +
                tsv::format_double(ls.proportion);
    }
    return cell;
}

void write_predictions_file(const fs::path& path, const std::string& header,
                            const std::vector<Prediction>& predictions) {
    auto out = open_output(path);
    out << header << '\n';
    out << "user_id\tpredicted_class\trank_score\tbuckets\n";
    for (const auto& p : predictions) {
        out << p.user_id << '\t' << to_string(p.predicted_class) << '\t'
            << tsv::format_double(p.rank_score) << '\t' << bucket_column(p) << '\n';
    }
    finish_output(out, path);
}

RankedList read_ranking_file(const std::string& path, Domain domain) {
    RankedList list;
    list.domain = domain;
    bool saw_header = false;
    auto lines = tsv::read_lines(path);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            if (line != "rank\tuser_id\tscore\tpredicted_class") {
                throw DataError(path + ": unexpected ranking header");
            }
            saw_header = true;
            continue;
        }
        auto fields = tsv::split_fields(line);
        if (fields.size() != 4) {
            throw DataError(path + ":" + std::to_string(i + 1) + ": expected 4 fields");
        }
        auto score = tsv::parse_double(fields[2]);
        auto label = parse_label(fields[3]);
        if (!score || !label) {
            throw DataError(path + ":" + std::to_string(i + 1) + ": bad ranking row");
        }
        list.entries.push_back({std::string(fields[1]), *score, *label});
    }
    if (!saw_header) throw DataError(path + ": missing ranking header");
    return list;
}

std::vector<Prediction> read_predictions_file(const std::string& path) {
    std::vector<Prediction> predictions;
    bool saw_header = false;
    auto lines = tsv::read_lines(path);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            if (line != "user_id\tpredicted_class\trank_score\tbuckets") {
                throw DataError(path + ": unexpected predictions header");
            }
            saw_header = true;
            continue;
        }
        auto fields = tsv::split_fields(line);
        if (fields.size() != 4) {
            throw DataError(path + ":" + std::to_string(i + 1) + ": expected 4 fields");
        }
        auto label = parse_label(fields[1]);
        auto score = tsv::parse_double(fields[2]);
        if (!label || !score) {
            throw DataError(path + ":" + std::to_string(i + 1) + ": bad prediction row");
        }
        Prediction p;
        p.user_id = std::string(fields[0]);
        p.predicted_class = *label;
        p.rank_score = *score;
        predictions.push_back(std::move(p));
    }
    if (!saw_header) throw DataError(path + ": missing predictions header");
    return predictions;
}

ProfileTable maybe_profiles(const std::string& path) {
    if (path.empty()) return {};
    return load_profiles(path);
}

// ingest: validate the dataset and write per-slice counts.
struct IngestArgs {
    IoArgs io;
};

void run_ingest(const IngestArgs& args) {
    LoadReport report;
    Corpus corpus = load(args.io, &report);
    fs::create_directories(args.io.out);

    std::string header = header_line("ingest", corpus.digest());
    fs::path summary_path = fs::path(args.io.out) / "corpus_summary.tsv";
    auto out = open_output(summary_path);
    out << header << '\n';
    out << "domain\tsplit\tusers\tinfluencers\tnon_influencers\ttweets\ttweets_en"
           "\ttweets_es\ttweets_other\n";
    for (Domain domain : {Domain::automotive, Domain::banking}) {
        for (Split split : {Split::train, Split::test}) {
            CorpusView view = partition(corpus, domain, split);
            std::size_t influencers = 0, non_influencers = 0;
            std::array<std::size_t, 3> by_language{};
            for (const auto& uid : view.user_ids()) {
                Label label = corpus.user(uid).label;
                if (label == Label::influencer) ++influencers;
                if (label == Label::non_influencer) ++non_influencers;
                for (const Tweet* t : view.tweets_of(uid)) {
                    ++by_language[static_cast<std::size_t>(t->language)];
                }
            }
            out << to_string(domain) << '\t' << to_string(split) << '\t'
                << view.user_ids().size() << '\t' << influencers << '\t'
                << non_influencers << '\t' << view.tweet_count() << '\t'
                << by_language[static_cast<std::size_t>(Language::en)] << '\t'
                << by_language[static_cast<std::size_t>(Language::es)] << '\t'
                << by_language[static_cast<std::size_t>(Language::other)] << '\n';
        }
    }
    finish_output(out, summary_path);

    if (!report.malformed.empty()) {
        fs::path malformed_path = fs::path(args.io.out) / "malformed.tsv";
        auto bad = open_output(malformed_path);
        bad << header << '\n';
        bad << "file\tline\treason\n";
        for (const auto& row : report.malformed) {
            bad << row.file << '\t' << row.line << '\t' << row.reason << '\n';
        }
        finish_output(bad, malformed_path);
    }
    std::cout << "loaded " << report.tweets_loaded << " tweets for "
              << report.users_loaded << " users (" << report.malformed.size()
              << " malformed rows skipped)\n";
}

struct FeaturesArgs {
    IoArgs io;
    std::string profiles;
    std::string domain;
    std::string split = "test";
};

void run_features(const FeaturesArgs& args) {
    Corpus corpus = load(args.io, nullptr);
    CorpusView view = partition(corpus, need_domain(args.domain), need_split(args.split));
    auto profiles = maybe_profiles(args.profiles);
    auto rows = extract_features(view, profiles, {}, args.io.jobs);

    fs::create_directories(args.io.out);
    std::string canonical =
        "features;domain=" + args.domain + ";split=" + args.split;
    fs::path path = fs::path(args.io.out) / "features.tsv";
    auto out = open_output(path);
    out << header_line(canonical, corpus.digest()) << '\n';
    out << tsv::join_fields(feature_columns()) << '\n';
    for (const auto& row : rows) {
        out << tsv::join_fields(feature_row(row)) << '\n';
    }
    finish_output(out, path);
    std::cout << "wrote features for " << rows.size() << " users\n";
}

struct StrategyArgs {
    std::string representation = "uad";
    std::string languages = "joint";
    std::string selection = "all";
    std::string vote = "count";
    double artex_fraction = 0.10;
    std::string log_base = "natural";
    std::string unseen = "skip";
};

void add_strategy(CLI::App* cmd, StrategyArgs& args, bool with_baselines) {
    std::vector<std::string> strategies = {"uad", "bot"};
    if (with_baselines) {
        strategies.push_back("followers");
        strategies.push_back("tweet_count");
    }
    cmd->add_option("--strategy", args.representation, "Content representation")
        ->check(CLI::IsMember(strategies));
    cmd->add_option("--languages", args.languages, "Language handling")
        ->check(CLI::IsMember({"joint", "separated"}));
    cmd->add_option("--selection", args.selection, "Tweet selection")
        ->check(CLI::IsMember({"all", "artex"}));
    cmd->add_option("--vote", args.vote, "Bag-of-tweets aggregation")
        ->check(CLI::IsMember({"count", "sum"}));
    cmd->add_option("--artex-fraction", args.artex_fraction,
                    "Fraction of tweets the artex selection keeps")
        ->check(CLI::Range(1e-9, 1.0));
    cmd->add_option("--log-base", args.log_base, "IDF logarithm base")
        ->check(CLI::IsMember({"natural", "base10", "base2"}));
    cmd->add_option("--unseen", args.unseen, "Unseen term policy")
        ->check(CLI::IsMember({"skip", "smoothed"}));
}

StrategyConfig make_strategy(const StrategyArgs& args) {
    StrategyConfig config;
    config.representation = *parse_representation(args.representation);
    config.languages = *parse_language_mode(args.languages);
    config.selection = *parse_selection(args.selection);
    config.vote = *parse_vote(args.vote);
    config.artex_fraction = args.artex_fraction;
    config.weighting.log_base = *parse_log_base(args.log_base);
    config.weighting.unseen = *parse_unseen_policy(args.unseen);
    return config;
}

struct TrainArgs {
    IoArgs io;
    StrategyArgs strategy;
    std::string domain;
};

void run_train(const TrainArgs& args) {
    Corpus corpus = load(args.io, nullptr);
    Domain domain = need_domain(args.domain);
    StrategyConfig config = make_strategy(args.strategy);
    ContentModel model = ContentModel::train(partition(corpus, domain, Split::train),
                                             config);
    fs::create_directories(args.io.out);
    fs::path path = fs::path(args.io.out) / "model.infmodel";
    model.save(path.string());
    std::cout << "trained " << model.models().size() << " bucket(s):";
    for (const auto& [key, lm] : model.models()) {
        std::cout << ' ' << key << '=' << lm.stats.vocabulary_size() << " terms";
    }
    std::cout << '\n';
}

void write_run_outputs(const fs::path& out_dir, const std::string& canonical,
                       std::uint64_t corpus_digest, const RankedList& ranking,
                       const std::vector<Prediction>& predictions) {
    std::string header = header_line(canonical, corpus_digest);
    write_ranking_file(out_dir / "ranking.tsv", header, ranking);
    write_predictions_file(out_dir / "predictions.tsv", header, predictions);
}

struct PredictArgs {
    IoArgs io;
    std::string model;
    std::string split = "test";
};

void run_predict(const PredictArgs& args) {
    Corpus corpus = load(args.io, nullptr);
    ContentModel model = ContentModel::load(args.model);
    CorpusView view = partition(corpus, model.domain(), need_split(args.split));
    auto predictions = model.classify_all(view, args.io.jobs);
    RankedList ranking = make_ranked_list(model.domain(), predictions);

    fs::create_directories(args.io.out);
    std::string canonical = canonical_config(model.domain(), model.config()) +
                            ";split=" + args.split;
    write_run_outputs(args.io.out, canonical, corpus.digest(), ranking, predictions);
    std::cout << "ranked " << ranking.entries.size() << " users\n";
}

struct RankArgs {
    IoArgs io;
    StrategyArgs strategy;
    std::string domain;
    std::string split = "test";
    std::string profiles;
};

void run_rank(const RankArgs& args) {
    Corpus corpus = load(args.io, nullptr);
    Domain domain = need_domain(args.domain);
    Split split = need_split(args.split);
    fs::create_directories(args.io.out);

    if (auto baseline = parse_baseline(args.strategy.representation)) {
        auto profiles = maybe_profiles(args.profiles);
        if (*baseline == BaselineKind::followers && args.profiles.empty()) {
            throw DataError("the followers baseline needs --profiles");
        }
        auto result = baseline_rank(partition(corpus, domain, split), *baseline,
                                    profiles);
        if (!result.missing.empty()) {
            std::cerr << "warning: " << result.missing.size()
                      << " user(s) lack the baseline metric and scored 0\n";
        }
        std::string canonical = "baseline=" + args.strategy.representation +
                                ";domain=" + args.domain + ";split=" + args.split;
        write_ranking_file(fs::path(args.io.out) / "ranking.tsv",
                           header_line(canonical, corpus.digest()), result.list);
        std::cout << "ranked " << result.list.entries.size() << " users\n";
        return;
    }

    StrategyConfig config = make_strategy(args.strategy);
    ContentModel model = ContentModel::train(partition(corpus, domain, Split::train),
                                             config);
    CorpusView view = partition(corpus, domain, split);
    auto predictions = model.classify_all(view, args.io.jobs);
    RankedList ranking = make_ranked_list(domain, predictions);
    std::string canonical = canonical_config(domain, config) + ";split=" + args.split;
    write_run_outputs(args.io.out, canonical, corpus.digest(), ranking, predictions);
    std::cout << "ranked " << ranking.entries.size() << " users\n";
}

struct CooccurArgs {
    IoArgs io;
    std::string domain;
    std::string split = "test";
    std::vector<std::string> stoplists;
    bool ordered = false;
    bool cross_boundaries = false;
};

void run_cooccur(const CooccurArgs& args) {
    Corpus corpus = load(args.io, nullptr);
    CorpusView view = partition(corpus, need_domain(args.domain), need_split(args.split));
    StopList stops = resolve_stops(args.stoplists);
    CooccurrenceOptions options;
    options.ordered_pairs = args.ordered;
    options.cross_tweet_boundaries = args.cross_boundaries;
    auto graphs = build_user_graphs(view, stops, options, args.io.jobs);

    fs::create_directories(args.io.out);
    std::string canonical = "cooccur;domain=" + args.domain + ";split=" + args.split +
                            ";ordered=" + (args.ordered ? "1" : "0") +
                            ";cross=" + (args.cross_boundaries ? "1" : "0") +
                            ";stops=" + stops_token(stops);
    fs::path path = fs::path(args.io.out) / "graphs.tsv";
    auto out = open_output(path);
    out << header_line(canonical, corpus.digest()) << '\n';
    out << "user_id\tterm_a\tterm_b\tweight\n";
    std::size_t edges = 0;
    for (const auto& ug : graphs) {
        for (const auto& [key, weight] : ug.graph.edges()) {
            out << ug.user_id << '\t' << ug.graph.nodes()[key.first] << '\t'
                << ug.graph.nodes()[key.second] << '\t' << weight << '\n';
            ++edges;
        }
    }
    finish_output(out, path);
    std::cout << "wrote " << edges << " edges over " << graphs.size() << " users\n";
}

struct KnnArgs {
    IoArgs io;
    std::string domain;
    std::string k_spec = "5";
    std::vector<std::string> stoplists;
};

void run_knn(const KnnArgs& args) {
    auto [k_lo, k_hi] = parse_k_spec(args.k_spec);
    if (k_lo != k_hi) {
        throw DataError("knn takes a single neighbour count; use sweep for ranges");
    }
    Corpus corpus = load(args.io, nullptr);
    Domain domain = need_domain(args.domain);
    StopList stops = resolve_stops(args.stoplists);
    auto training = build_user_graphs(partition(corpus, domain, Split::train), stops,
                                      {}, args.io.jobs);
    auto test = build_user_graphs(partition(corpus, domain, Split::test), stops, {},
                                  args.io.jobs);
    auto predictions = knn_classify_all(test, training, k_lo, args.io.jobs);
    RankedList ranking = make_ranked_list(domain, predictions);

    fs::create_directories(args.io.out);
    std::string canonical = "knn;domain=" + args.domain +
                            ";k=" + std::to_string(k_lo) +
                            ";stops=" + stops_token(stops);
    std::string header = header_line(canonical, corpus.digest());
    write_ranking_file(fs::path(args.io.out) / "knn_ranking.tsv", header, ranking);
    write_predictions_file(fs::path(args.io.out) / "knn_predictions.tsv", header,
                           predictions);
    std::cout << "ranked " << ranking.entries.size() << " users with k=" << k_lo
              << '\n';
}

struct CentralityArgs {
    IoArgs io;
    std::string domain;
    std::string split = "test";
    std::string measures = "all";
    std::string aggregation = "mean";
    std::string partitions;
    std::uint64_t seed = 0;
    std::vector<std::string> stoplists;
};

std::vector<Measure> parse_measures(const std::string& spec) {
    if (spec == "all") return all_measures();
    std::vector<Measure> measures;
    std::size_t start = 0;
    while (start <= spec.size()) {
        auto end = spec.find(',', start);
        if (end == std::string::npos) end = spec.size();
        auto name = spec.substr(start, end - start);
        auto measure = parse_measure(name);
        if (!measure) throw DataError("unknown measure '" + name + "'");
        if (std::find(measures.begin(), measures.end(), *measure) != measures.end()) {
            throw DataError("measure '" + name + "' given twice");
        }
        measures.push_back(*measure);
        start = end + 1;
    }
    return measures;
}

void run_centrality(const CentralityArgs& args) {
    Corpus corpus = load(args.io, nullptr);
    CorpusView view = partition(corpus, need_domain(args.domain), need_split(args.split));
    StopList stops = resolve_stops(args.stoplists);
    auto measures = parse_measures(args.measures);
    bool want_partition = false;
    for (Measure m : measures) want_partition = want_partition || needs_partition(m);
    auto graphs = build_user_graphs(view, stops, {}, args.io.jobs);

    // values[user][measure] aligned with each graph's nodes.
    std::vector<std::vector<std::vector<double>>> values(graphs.size());
    parallel_for(graphs.size(), args.io.jobs, [&](std::size_t i) {
        const auto& graph = graphs[i].graph;
        std::optional<CommunityPartition> communities;
        if (want_partition) {
            communities = args.partitions.empty()
                              ? partition_communities(graph, args.seed)
                              : load_partition(args.partitions, graph);
        }
        values[i].reserve(measures.size());
        for (Measure m : measures) {
            values[i].push_back(
                centrality(graph, m, communities ? &*communities : nullptr));
        }
    });

    std::string partition_token = "none";
    if (want_partition) {
        partition_token = args.partitions.empty()
                              ? "seed:" + std::to_string(args.seed)
                              : "file:" + to_hex(digest_file(args.partitions));
    }
    std::string canonical = "centrality;domain=" + args.domain + ";split=" +
                            args.split + ";measures=";
    for (std::size_t i = 0; i < measures.size(); ++i) {
        if (i) canonical += ',';
        canonical += to_string(measures[i]);
    }
    canonical += ";aggregation=" + args.aggregation +
                 ";partition=" + partition_token + ";stops=" + stops_token(stops);

    fs::create_directories(args.io.out);
    fs::path path = fs::path(args.io.out) / "centrality.tsv";
    auto out = open_output(path);
    out << header_line(canonical, corpus.digest()) << '\n';

    if (args.aggregation == "mean") {
        out << "user_id";
        for (Measure m : measures) out << '\t' << to_string(m);
        out << '\n';
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            out << graphs[i].user_id;
            for (std::size_t m = 0; m < measures.size(); ++m) {
                out << '\t' << tsv::format_double(summarize_mean(values[i][m]));
            }
            out << '\n';
        }
    } else {
        std::vector<std::string> vocabulary;
        for (const auto& ug : graphs) {
            vocabulary.insert(vocabulary.end(), ug.graph.nodes().begin(),
                              ug.graph.nodes().end());
        }
        std::sort(vocabulary.begin(), vocabulary.end());
        vocabulary.erase(std::unique(vocabulary.begin(), vocabulary.end()),
                         vocabulary.end());
        out << "user_id";
        for (Measure m : measures) {
            for (const auto& term : vocabulary) {
                out << '\t' << to_string(m) << ':' << term;
            }
        }
        out << '\n';
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            out << graphs[i].user_id;
            for (std::size_t m = 0; m < measures.size(); ++m) {
                for (const auto& term : vocabulary) {
                    auto index = graphs[i].graph.node_index(term);
                    out << '\t'
                        << tsv::format_double(index ? values[i][m][*index] : 0.0);
                }
            }
            out << '\n';
        }
    }
    finish_output(out, path);
    std::cout << "wrote " << measures.size() << " measure(s) for " << graphs.size()
              << " users\n";
}

struct EvaluateArgs {
    IoArgs io;
    std::string domain;
    std::string split = "test";
    std::string ranking;
    std::string predictions;
    std::string profiles;
};

void run_evaluate(const EvaluateArgs& args) {
    Corpus corpus = load(args.io, nullptr);
    Domain domain = need_domain(args.domain);
    CorpusView view = partition(corpus, domain, need_split(args.split));
    auto reference = reference_labels(view);
    RankedList ranking = read_ranking_file(args.ranking, domain);

    DomainEval eval;
    if (!args.predictions.empty()) {
        auto predictions = read_predictions_file(args.predictions);
        std::optional<RankedList> followers;
        if (!args.profiles.empty()) {
            followers = baseline_rank(view, BaselineKind::followers,
                                      load_profiles(args.profiles))
                            .list;
        }
        eval = evaluate_run(ranking, predictions, reference, followers);
    } else {
        eval.map = mean_average_precision(ranking, reference);
        std::tie(eval.majority_macro_f, eval.majority_mean_recall) =
            majority_baseline(reference);
        if (!args.profiles.empty()) {
            auto followers = baseline_rank(view, BaselineKind::followers,
                                           load_profiles(args.profiles));
            eval.followers_baseline_map =
                mean_average_precision(followers.list, reference);
        }
    }
    EvalReport report = make_report({{domain, eval}});

    fs::create_directories(args.io.out);
    std::string canonical = "evaluate;domain=" + args.domain + ";split=" + args.split;
    std::string header = header_line(canonical, corpus.digest());
    write_report((fs::path(args.io.out) / "report.txt").string(), report, header);

    fs::path summary_path = fs::path(args.io.out) / "summary.tsv";
    auto out = open_output(summary_path);
    out << header << '\n';
    out << "domain\tmap\tmacro_f\tmajority_macro_f\tmajority_mean_recall"
           "\tfollowers_baseline_map\n";
    for (const auto& [d, e] : report.domains) {
        out << to_string(d) << '\t' << tsv::format_double(e.map) << '\t'
            << tsv::format_double(e.macro_f) << '\t'
            << tsv::format_double(e.majority_macro_f) << '\t'
            << tsv::format_double(e.majority_mean_recall) << '\t'
            << (e.followers_baseline_map
                    ? tsv::format_double(*e.followers_baseline_map)
                    : std::string())
            << '\n';
    }
    finish_output(out, summary_path);
    std::cout << "map " << tsv::format_double(eval.map) << ", macro_f "
              << tsv::format_double(eval.macro_f) << '\n';
}

struct SweepArgs {
    IoArgs io;
    std::string domain;
    std::string k_spec = "1..20";
    std::vector<std::string> stoplists;
};

void run_sweep(const SweepArgs& args) {
    auto [k_lo, k_hi] = parse_k_spec(args.k_spec);
    Corpus corpus = load(args.io, nullptr);
    Domain domain = need_domain(args.domain);
    StopList stops = resolve_stops(args.stoplists);
    auto training = build_user_graphs(partition(corpus, domain, Split::train), stops,
                                      {}, args.io.jobs);
    CorpusView test_view = partition(corpus, domain, Split::test);
    auto test = build_user_graphs(test_view, stops, {}, args.io.jobs);
    auto reference = reference_labels(test_view);

    fs::create_directories(args.io.out);
    std::string canonical = "sweep;domain=" + args.domain + ";k=" +
                            std::to_string(k_lo) + ".." + std::to_string(k_hi) +
                            ";stops=" + stops_token(stops);
    fs::path path = fs::path(args.io.out) / "sweep.tsv";
    auto out = open_output(path);
    out << header_line(canonical, corpus.digest()) << '\n';
    out << "k\tmap\tmacro_f\n";
    for (unsigned k = k_lo; k <= k_hi; ++k) {
        auto predictions = knn_classify_all(test, training, k, args.io.jobs);
        RankedList ranking = make_ranked_list(domain, predictions);
        out << k << '\t' << tsv::format_double(mean_average_precision(ranking, reference))
            << '\t' << tsv::format_double(macro_f(predictions, reference)) << '\n';
    }
    finish_output(out, path);
    std::cout << "swept k=" << k_lo << ".." << k_hi << '\n';
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv) {
    CLI::App app{"Influencer classification and ranking over tweet corpora"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    IngestArgs ingest;
    auto* ingest_cmd = app.add_subcommand("ingest", "Validate and summarize a dataset");
    add_io(ingest_cmd, ingest.io);

    FeaturesArgs features;
    auto* features_cmd =
        app.add_subcommand("features", "Extract per-user scalar features");
    add_io(features_cmd, features.io);
    features_cmd->add_option("--profiles", features.profiles, "User metadata table");
    features_cmd->add_option("--domain", features.domain, "Domain")->required();
    features_cmd->add_option("--split", features.split, "Split")
        ->check(CLI::IsMember({"train", "test"}));

    TrainArgs train;
    auto* train_cmd = app.add_subcommand("train", "Train a content model");
    add_io(train_cmd, train.io);
    add_strategy(train_cmd, train.strategy, false);
    train_cmd->add_option("--domain", train.domain, "Domain")->required();

    PredictArgs predict;
    auto* predict_cmd =
        app.add_subcommand("predict", "Classify and rank users with a saved model");
    add_io(predict_cmd, predict.io);
    predict_cmd->add_option("--model", predict.model, "Model file")->required();
    predict_cmd->add_option("--split", predict.split, "Split")
        ->check(CLI::IsMember({"train", "test"}));

    RankArgs rank;
    auto* rank_cmd =
        app.add_subcommand("rank", "Train on the train split and rank another slice");
    add_io(rank_cmd, rank.io);
    add_strategy(rank_cmd, rank.strategy, true);
    rank_cmd->add_option("--domain", rank.domain, "Domain")->required();
    rank_cmd->add_option("--split", rank.split, "Split")
        ->check(CLI::IsMember({"train", "test"}));
    rank_cmd->add_option("--profiles", rank.profiles, "User metadata table");

    CooccurArgs cooccur;
    auto* cooccur_cmd =
        app.add_subcommand("cooccur", "Export per-user co-occurrence graphs");
    add_io(cooccur_cmd, cooccur.io);
    cooccur_cmd->add_option("--domain", cooccur.domain, "Domain")->required();
    cooccur_cmd->add_option("--split", cooccur.split, "Split")
        ->check(CLI::IsMember({"train", "test"}));
    cooccur_cmd->add_option("--stoplists", cooccur.stoplists, "Stop word files");
    cooccur_cmd->add_flag("--ordered", cooccur.ordered, "Keep pair orientation");
    cooccur_cmd->add_flag("--cross-boundaries", cooccur.cross_boundaries,
                          "Let adjacency span tweets");

    KnnArgs knn;
    auto* knn_cmd =
        app.add_subcommand("knn", "Rank test users by graph nearest neighbours");
    add_io(knn_cmd, knn.io);
    knn_cmd->add_option("--domain", knn.domain, "Domain")->required();
    knn_cmd->add_option("--knn-k", knn.k_spec, "Neighbour count");
    knn_cmd->add_option("--stoplists", knn.stoplists, "Stop word files");

    CentralityArgs centrality;
    auto* centrality_cmd =
        app.add_subcommand("centrality", "Graph centrality features per user");
    add_io(centrality_cmd, centrality.io);
    centrality_cmd->add_option("--domain", centrality.domain, "Domain")->required();
    centrality_cmd->add_option("--split", centrality.split, "Split")
        ->check(CLI::IsMember({"train", "test"}));
    centrality_cmd->add_option("--measures", centrality.measures,
                               "Comma separated measures or 'all'");
    centrality_cmd->add_option("--aggregation", centrality.aggregation,
                               "Row aggregation")
        ->check(CLI::IsMember({"mean", "full"}));
    centrality_cmd->add_option("--partitions", centrality.partitions,
                               "Community partition file");
    centrality_cmd->add_option("--seed", centrality.seed,
                               "Seed for community detection");
    centrality_cmd->add_option("--stoplists", centrality.stoplists, "Stop word files");

    EvaluateArgs evaluate;
    auto* evaluate_cmd =
        app.add_subcommand("evaluate", "Score a ranking (and predictions) against labels");
    add_io(evaluate_cmd, evaluate.io);
    evaluate_cmd->add_option("--domain", evaluate.domain, "Domain")->required();
    evaluate_cmd->add_option("--split", evaluate.split, "Split")
        ->check(CLI::IsMember({"train", "test"}));
    evaluate_cmd->add_option("--ranking", evaluate.ranking, "Ranking file")->required();
    evaluate_cmd->add_option("--predictions", evaluate.predictions, "Predictions file");
    evaluate_cmd->add_option("--profiles", evaluate.profiles,
                             "User metadata table for the followers baseline");

    SweepArgs sweep;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Evaluate nearest-neighbour ranking over a k range");
    add_io(sweep_cmd, sweep.io);
    sweep_cmd->add_option("--domain", sweep.domain, "Domain")->required();
    sweep_cmd->add_option("--knn-k", sweep.k_spec, "Neighbour count or range a..b");
    sweep_cmd->add_option("--stoplists", sweep.stoplists, "Stop word files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (ingest_cmd->parsed()) run_ingest(ingest);
        else if (features_cmd->parsed()) run_features(features);
        else if (train_cmd->parsed()) run_train(train);
        else if (predict_cmd->parsed()) run_predict(predict);
        else if (rank_cmd->parsed()) run_rank(rank);
        else if (cooccur_cmd->parsed()) run_cooccur(cooccur);
        else if (knn_cmd->parsed()) run_knn(knn);
        else if (centrality_cmd->parsed()) run_centrality(centrality);
        else if (evaluate_cmd->parsed()) run_evaluate(evaluate);
        else if (sweep_cmd->parsed()) run_sweep(sweep);
        return 0;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace influence
