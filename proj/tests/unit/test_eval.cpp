#include <doctest.h>

#include "influence/error.hpp"
#include "influence/eval.hpp"
#include "test_util.hpp"

using namespace influence;

namespace {

RankedList list_of(Domain domain, std::vector<std::pair<std::string, double>> rows) {
    RankedList list;
    list.domain = domain;
    for (auto& [id, score] : rows) {
        list.entries.push_back({id, score, Label::unknown});
    }
    return list;
}

std::vector<Prediction> predictions_of(
    std::vector<std::pair<std::string, Label>> rows) {
    std::vector<Prediction> predictions;
    for (auto& [id, label] : rows) {
        Prediction p;
        p.user_id = id;
        p.predicted_class = label;
        predictions.push_back(p);
    }
    return predictions;
}

}  // namespace

TEST_CASE("average precision over influencer positions") {
    std::unordered_map<std::string, Label> reference = {
        {"a", Label::influencer},
        {"b", Label::non_influencer},
        {"c", Label::influencer},
        {"d", Label::non_influencer},
    };
    auto list = list_of(Domain::automotive,
                        {{"a", 4.0}, {"b", 3.0}, {"c", 2.0}, {"d", 1.0}});
    // Influencers at ranks 1 and 3: (1/1 + 2/3) / 2.
    CHECK(mean_average_precision(list, reference) ==
          doctest::Approx(5.0 / 6.0).epsilon(1e-15));

    auto reversed = list_of(Domain::automotive,
                            {{"b", 4.0}, {"d", 3.0}, {"a", 2.0}, {"c", 1.0}});
    // Influencers at ranks 3 and 4: (1/3 + 2/4) / 2.
    CHECK(mean_average_precision(reversed, reference) ==
          doctest::Approx(5.0 / 12.0).epsilon(1e-15));

    auto perfect = list_of(Domain::automotive,
                           {{"a", 4.0}, {"c", 3.0}, {"b", 2.0}, {"d", 1.0}});
    CHECK(mean_average_precision(perfect, reference) == 1.0);
}

TEST_CASE("average precision degenerate cases") {
    std::unordered_map<std::string, Label> no_influencers = {
        {"a", Label::non_influencer},
        {"b", Label::non_influencer},
    };
    auto list = list_of(Domain::automotive, {{"a", 2.0}, {"b", 1.0}});
    CHECK(mean_average_precision(list, no_influencers) == 0.0);

    std::unordered_map<std::string, Label> mismatched = {{"a", Label::influencer}};
    CHECK_THROWS_AS(mean_average_precision(list, mismatched), DataError);

    std::unordered_map<std::string, Label> unknown_label = {
        {"a", Label::influencer},
        {"b", Label::unknown},
    };
    CHECK_THROWS_AS(mean_average_precision(list, unknown_label), DataError);
}

TEST_CASE("classification metrics per class") {
    std::unordered_map<std::string, Label> reference = {
        {"u1", Label::influencer},
        {"u2", Label::influencer},
        {"u3", Label::non_influencer},
        {"u4", Label::non_influencer},
    };
    auto predictions = predictions_of({{"u1", Label::influencer},
                                       {"u2", Label::non_influencer},
                                       {"u3", Label::non_influencer},
                                       {"u4", Label::non_influencer}});

    auto metrics = classification_metrics(predictions, reference);
    const auto& inf = metrics[class_index(Label::influencer)];
    CHECK(inf.precision == 1.0);
    CHECK(inf.recall == 0.5);
    CHECK(inf.f == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    const auto& non = metrics[class_index(Label::non_influencer)];
    CHECK(non.precision == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(non.recall == 1.0);
    CHECK(non.f == doctest::Approx(0.8).epsilon(1e-15));

    CHECK(macro_f(predictions, reference) ==
          doctest::Approx((2.0 / 3.0 + 0.8) / 2.0).epsilon(1e-15));
}

TEST_CASE("zero denominators yield zero metrics") {
    std::unordered_map<std::string, Label> reference = {
        {"u1", Label::non_influencer},
        {"u2", Label::non_influencer},
    };
    auto predictions = predictions_of(
        {{"u1", Label::non_influencer}, {"u2", Label::non_influencer}});

    auto metrics = classification_metrics(predictions, reference);
    const auto& inf = metrics[class_index(Label::influencer)];
    CHECK(inf.precision == 0.0);
    CHECK(inf.recall == 0.0);
    CHECK(inf.f == 0.0);
    CHECK(macro_f(predictions, reference) == 0.5);
}

TEST_CASE("metrics validate their inputs") {
    std::unordered_map<std::string, Label> reference = {{"u1", Label::influencer}};
    auto duplicate = predictions_of(
        {{"u1", Label::influencer}, {"u1", Label::influencer}});
    CHECK_THROWS_AS(classification_metrics(duplicate, reference), DataError);

    auto stranger = predictions_of({{"u9", Label::influencer}});
    CHECK_THROWS_AS(classification_metrics(stranger, reference), DataError);

    auto partial = predictions_of({{"u1", Label::influencer}});
    std::unordered_map<std::string, Label> wider = {
        {"u1", Label::influencer},
        {"u2", Label::non_influencer},
    };
    CHECK_THROWS_AS(classification_metrics(partial, wider), DataError);
}

TEST_CASE("majority baseline under both conventions") {
    std::unordered_map<std::string, Label> reference = {
        {"u1", Label::influencer},
        {"u2", Label::non_influencer},
        {"u3", Label::non_influencer},
    };
    auto [strict_f, mean_recall] = majority_baseline(reference);
    // All-majority answers: F over the majority class is f(2/3, 1), the
    // minority class contributes 0.
    double share = 2.0 / 3.0;
    double majority_f = 2.0 * share * 1.0 / (share + 1.0);
    CHECK(strict_f == doctest::Approx(majority_f / 2.0).epsilon(1e-15));
    CHECK(strict_f == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(mean_recall == 0.5);

    auto [empty_f, empty_recall] = majority_baseline({});
    CHECK(empty_f == 0.0);
    CHECK(empty_recall == 0.0);
}

TEST_CASE("domain evaluation bundles ranking and classification") {
    std::unordered_map<std::string, Label> reference = {
        {"a", Label::influencer},
        {"b", Label::non_influencer},
        {"c", Label::influencer},
        {"d", Label::non_influencer},
    };
    auto list = list_of(Domain::banking,
                        {{"a", 4.0}, {"b", 3.0}, {"c", 2.0}, {"d", 1.0}});
    auto predictions = predictions_of({{"a", Label::influencer},
                                       {"b", Label::non_influencer},
                                       {"c", Label::influencer},
                                       {"d", Label::non_influencer}});

    auto eval = evaluate_run(list, predictions, reference);
    CHECK(eval.map == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
    CHECK(eval.macro_f == 1.0);
    CHECK(eval.majority_mean_recall == 0.5);
    CHECK_FALSE(eval.followers_baseline_map.has_value());

    auto baseline = list_of(Domain::banking,
                            {{"b", 4.0}, {"d", 3.0}, {"a", 2.0}, {"c", 1.0}});
    auto with_baseline = evaluate_run(list, predictions, reference, baseline);
    REQUIRE(with_baseline.followers_baseline_map.has_value());
    CHECK(*with_baseline.followers_baseline_map ==
          doctest::Approx(5.0 / 12.0).epsilon(1e-15));
}

TEST_CASE("reference labels come from the corpus slice") {
    std::vector<Tweet> tweets;
    Tweet t;
    t.tweet_id = "t1";
    t.user_id = "u1";
    t.text = "anything";
    tweets.push_back(t);

    UserRecord u1;
    u1.user_id = "u1";
    u1.label = Label::influencer;
    UserRecord u2;
    u2.user_id = "u2";
    u2.label = Label::non_influencer;
    Corpus corpus(std::move(tweets), {u1, u2});
    auto view = partition(corpus, Domain::automotive, Split::train);

    auto reference = reference_labels(view);
    CHECK(reference.size() == 2);
    CHECK(reference.at("u1") == Label::influencer);
    CHECK(reference.at("u2") == Label::non_influencer);

    UserRecord u3;
    u3.user_id = "u3";
    u3.label = Label::unknown;
    Corpus unknown({}, {u3});
    auto bad = partition(unknown, Domain::automotive, Split::train);
    CHECK_THROWS_AS(reference_labels(bad), DataError);
}

TEST_CASE("reports average over domains and round trip through files") {
    DomainEval autos;
    autos.map = 0.8;
    autos.macro_f = 0.75;
    autos.per_class[0] = {0.9, 0.6, 0.72};
    autos.per_class[1] = {0.7, 0.95, 0.805};
    autos.majority_macro_f = 0.4;
    autos.majority_mean_recall = 0.5;
    autos.followers_baseline_map = 0.37;

    DomainEval banks;
    banks.map = 0.6;
    banks.macro_f = 0.65;
    banks.majority_macro_f = 0.42;
    banks.majority_mean_recall = 0.5;

    auto report = make_report(
        {{Domain::automotive, autos}, {Domain::banking, banks}});
    CHECK(report.average_map == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(report.average_macro_f == doctest::Approx(0.7).epsilon(1e-15));

    testutil::TempDir dir;
    auto path = dir.file("report.txt");
    write_report(path, report, "# test header");
    auto loaded = read_report(path);

    CHECK(loaded.average_map == report.average_map);
    CHECK(loaded.average_macro_f == report.average_macro_f);
    REQUIRE(loaded.domains.size() == 2);
    const auto& a = loaded.domains.at(Domain::automotive);
    CHECK(a.map == autos.map);
    CHECK(a.macro_f == autos.macro_f);
    CHECK(a.per_class[0].precision == 0.9);
    CHECK(a.per_class[1].f == 0.805);
    CHECK(a.majority_macro_f == 0.4);
    REQUIRE(a.followers_baseline_map.has_value());
    CHECK(*a.followers_baseline_map == 0.37);
    CHECK_FALSE(loaded.domains.at(Domain::banking).followers_baseline_map.has_value());

    auto first_line = testutil::read_file(path);
    CHECK(first_line.substr(0, first_line.find('\n')) == "# test header");
}
