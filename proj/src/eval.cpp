#include "influence/eval.hpp"

#include <fstream>
#include <tuple>

#include "influence/error.hpp"
#include "influence/tsv.hpp"

namespace influence {

namespace {

Label reference_label(const std::unordered_map<std::string, Label>& reference,
                      const std::string& user_id) {
    auto it = reference.find(user_id);
    if (it == reference.end()) {
        throw DataError("user '" + user_id + "' is missing from the reference");
    }
    if (it->second != Label::influencer && it->second != Label::non_influencer) {
        throw DataError("reference label for user '" + user_id + "' is unknown");
    }
    return it->second;
}

void check_cover(std::size_t got, const std::unordered_map<std::string, Label>& reference) {
    if (got != reference.size()) {
        throw DataError("ranking covers " + std::to_string(got) + " users, reference " +
                        std::to_string(reference.size()));
    }
}

double f_measure(double precision, double recall) {
    double denom = precision + recall;
    return denom > 0.0 ? 2.0 * precision * recall / denom : 0.0;
}

}  // namespace

double mean_average_precision(const RankedList& list,
                              const std::unordered_map<std::string, Label>& reference) {
    check_cover(list.entries.size(), reference);
    std::size_t influencers = 0;
    for (const auto& [user_id, label] : reference) {
        if (label == Label::influencer) ++influencers;
    }
    if (influencers == 0) return 0.0;

    double sum = 0.0;
    std::size_t hits = 0;
    std::size_t position = 0;
    for (const auto& entry : list.entries) {
        ++position;
        if (reference_label(reference, entry.user_id) == Label::influencer) {
            ++hits;
            sum += static_cast<double>(hits) / position;
        }
    }
    return sum / influencers;
}

std::array<ClassMetrics, kClassCount> classification_metrics(
    const std::vector<Prediction>& predictions,
    const std::unordered_map<std::string, Label>& reference) {
    check_cover(predictions.size(), reference);
    std::array<std::array<std::uint64_t, kClassCount>, kClassCount> confusion{};
    std::unordered_map<std::string, bool> seen;
    for (const auto& p : predictions) {
        if (!seen.emplace(p.user_id, true).second) {
            throw DataError("duplicate prediction for user '" + p.user_id + "'");
        }
        std::size_t actual = class_index(reference_label(reference, p.user_id));
        std::size_t predicted = class_index(p.predicted_class);
        ++confusion[actual][predicted];
    }

    std::array<ClassMetrics, kClassCount> metrics{};
    for (std::size_t c = 0; c < kClassCount; ++c) {
        std::uint64_t tp = confusion[c][c];
        std::uint64_t predicted = 0, actual = 0;
        for (std::size_t o = 0; o < kClassCount; ++o) {
            predicted += confusion[o][c];
            actual += confusion[c][o];
        }
        metrics[c].precision = predicted > 0 ? static_cast<double>(tp) / predicted : 0.0;
        metrics[c].recall = actual > 0 ? static_cast<double>(tp) / actual : 0.0;
        metrics[c].f = f_measure(metrics[c].precision, metrics[c].recall);
    }
    return metrics;
}

double macro_f(const std::vector<Prediction>& predictions,
               const std::unordered_map<std::string, Label>& reference) {
    auto metrics = classification_metrics(predictions, reference);
    double sum = 0.0;
    for (const auto& m : metrics) sum += m.f;
    return sum / kClassCount;
}

std::pair<double, double> majority_baseline(
    const std::unordered_map<std::string, Label>& reference) {
    if (reference.empty()) return {0.0, 0.0};
    std::array<std::uint64_t, kClassCount> counts{};
    for (const auto& [user_id, label] : reference) ++counts[class_index(label)];
    std::size_t majority = class_index(Label::non_influencer);
    if (counts[class_index(Label::influencer)] >
        counts[class_index(Label::non_influencer)]) {
        majority = class_index(Label::influencer);
    }
    double share = counts[majority] / static_cast<double>(reference.size());
    // The majority class scores precision = its share and recall 1, every
    // other class 0; averaging F or recall over classes gives these two.
    return {f_measure(share, 1.0) / kClassCount, 1.0 / kClassCount};
}

DomainEval evaluate_run(const RankedList& ranking,
                        const std::vector<Prediction>& predictions,
                        const std::unordered_map<std::string, Label>& reference,
                        const std::optional<RankedList>& followers_baseline) {
    DomainEval eval;
    eval.map = mean_average_precision(ranking, reference);
    eval.per_class = classification_metrics(predictions, reference);
    for (const auto& m : eval.per_class) eval.macro_f += m.f;
    eval.macro_f /= kClassCount;
    std::tie(eval.majority_macro_f, eval.majority_mean_recall) =
        majority_baseline(reference);
    if (followers_baseline) {
        eval.followers_baseline_map = mean_average_precision(*followers_baseline,
                                                             reference);
    }
    return eval;
}

std::unordered_map<std::string, Label> reference_labels(const CorpusView& view) {
    std::unordered_map<std::string, Label> reference;
    for (const auto& uid : view.user_ids()) {
        Label label = view.corpus().user(uid).label;
        if (label == Label::unknown) {
            throw DataError("user '" + uid + "' has no reference label");
        }
        reference.emplace(uid, label);
    }
    return reference;
}

EvalReport make_report(const std::map<Domain, DomainEval>& domains) {
    EvalReport report;
    report.domains = domains;
    if (!domains.empty()) {
        for (const auto& [domain, eval] : domains) {
            report.average_map += eval.map;
            report.average_macro_f += eval.macro_f;
        }
        report.average_map /= domains.size();
        report.average_macro_f /= domains.size();
    }
    return report;
}

void write_report(const std::string& path, const EvalReport& report,
                  const std::string& header_line) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    if (!header_line.empty()) out << header_line << '\n';
    out << "average_map\t" << tsv::format_double(report.average_map) << '\n';
    out << "average_macro_f\t" << tsv::format_double(report.average_macro_f) << '\n';
    for (const auto& [domain, eval] : report.domains) {
        out << "domain\t" << to_string(domain) << '\n';
        out << "map\t" << tsv::format_double(eval.map) << '\n';
        out << "macro_f\t" << tsv::format_double(eval.macro_f) << '\n';
        for (std::size_t c = 0; c < kClassCount; ++c) {
            auto name = to_string(kClasses[c]);
            out << "precision_" << name << '\t'
                << tsv::format_double(eval.per_class[c].precision) << '\n';
            out << "recall_" << name << '\t'
                << tsv::format_double(eval.per_class[c].recall) << '\n';
            out << "f_" << name << '\t' << tsv::format_double(eval.per_class[c].f)
                << '\n';
        }
        out << "majority_macro_f\t" << tsv::format_double(eval.majority_macro_f) << '\n';
        out << "majority_mean_recall\t" << tsv::format_double(eval.majority_mean_recall)
            << '\n';
        if (eval.followers_baseline_map) {
            out << "followers_baseline_map\t"
                << tsv::format_double(*eval.followers_baseline_map) << '\n';
        }
    }
    if (!out.flush()) throw DataError("cannot write " + path);
}

EvalReport read_report(const std::string& path) {
    EvalReport report;
    DomainEval* current = nullptr;
    for (const auto& line : tsv::read_lines(path)) {
        if (line.empty() || line[0] == '#') continue;
        auto fields = tsv::split_fields(line);
        if (fields.size() != 2) throw DataError(path + ": bad report line '" + line + "'");
        std::string key(fields[0]);
        std::string value(fields[1]);
        if (key == "domain") {
            auto domain = parse_domain(value);
            if (!domain) throw DataError(path + ": unknown domain '" + value + "'");
            current = &report.domains[*domain];
            continue;
        }
        auto number = tsv::parse_double(value);
        if (!number) throw DataError(path + ": bad number in '" + line + "'");
        if (key == "average_map") {
            report.average_map = *number;
        } else if (key == "average_macro_f") {
            report.average_macro_f = *number;
        } else {
            if (!current) throw DataError(path + ": '" + key + "' before any domain");
            if (key == "map") current->map = *number;
            else if (key == "macro_f") current->macro_f = *number;
            else if (key == "majority_macro_f") current->majority_macro_f = *number;
            else if (key == "majority_mean_recall") current->majority_mean_recall = *number;
            else if (key == "followers_baseline_map") current->followers_baseline_map = *number;
            else {
                bool matched = false;
                for (std::size_t c = 0; c < kClassCount; ++c) {
                    std::string name(to_string(kClasses[c]));
                    if (key == "precision_" + name) {
                        current->per_class[c].precision = *number;
                        matched = true;
                    } else if (key == "recall_" + name) {
                        current->per_class[c].recall = *number;
                        matched = true;
                    } else if (key == "f_" + name) {
                        current->per_class[c].f = *number;
                        matched = true;
                    }
                }
                if (!matched) throw DataError(path + ": unknown report key '" + key + "'");
            }
        }
    }
    return report;
}

}  // namespace influence
