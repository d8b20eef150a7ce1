import math
import os

import influence


def data_path(name):
    return os.path.join(os.environ["INFLUENCE_DATA_DIR"], name)


def load_sample():
    corpus, report = influence.load_corpus(
        data_path("sample/tweets.jsonl"), data_path("sample/labels.tsv")
    )
    assert not report.malformed
    return corpus


def test_version():
    assert influence.__version__ == "0.1.0"


def test_corpus_and_partition():
    corpus = load_sample()
    assert corpus.user_count == 12
    assert corpus.tweet_count == 28

    train = influence.partition(
        corpus, influence.Domain.automotive, influence.Split.train
    )
    assert len(train.user_ids) == 4
    assert train.tweet_count == 10
    assert train.user_ids == sorted(train.user_ids)

    tweets = train.tweets_of(train.user_ids[0])
    assert tweets and all(t.user_id == train.user_ids[0] for t in tweets)


def test_view_outlives_corpus():
    view = influence.partition(
        load_sample(), influence.Domain.banking, influence.Split.train
    )
    assert len(view.user_ids) == 4


def test_tokenizers():
    tokens = influence.tokenize_occurrence("Nueva review del coche: https://x.example")
    assert "nueva" in tokens
    assert all("http" not in token for token in tokens)

    stops = influence.merge_stoplists(
        influence.builtin_stoplist(influence.Language.en),
        influence.builtin_stoplist(influence.Language.es),
    )
    assert "the" in stops and "los" in stops


def test_weighting():
    docs = [
        influence.TrainingDoc(["alpha", "alpha"], influence.Label.influencer),
        influence.TrainingDoc(["beta"], influence.Label.non_influencer),
    ]
    stats = influence.TermStats.from_documents(docs)
    assert stats.doc_count == 2
    assert stats.df("alpha") == 1
    assert stats.gini("alpha") == 1.0

    vector = influence.weight_document(["alpha", "alpha"], stats)
    assert vector.entries == [("alpha", 2.0 * math.log(2.0))]
    assert math.isclose(vector.norm, 2.0 * math.log(2.0))
    assert math.isclose(influence.cosine(vector, vector), 1.0, rel_tol=1e-12)


def test_model_end_to_end():
    corpus = load_sample()
    train = influence.partition(
        corpus, influence.Domain.automotive, influence.Split.train
    )
    test = influence.partition(
        corpus, influence.Domain.automotive, influence.Split.test
    )

    model = influence.ContentModel.train(train, influence.StrategyConfig())
    predictions = model.classify_all(test)
    by_user = {p.user_id: p.predicted_class for p in predictions}
    assert by_user["auto_new_elena"] == influence.Label.influencer
    assert by_user["auto_new_felix"] == influence.Label.non_influencer

    reference = influence.reference_labels(test)
    ranking = influence.make_ranked_list(influence.Domain.automotive, predictions)
    assert influence.mean_average_precision(ranking, reference) == 1.0
    assert influence.macro_f(predictions, reference) == 1.0


def test_graphs_and_centrality():
    graph = influence.build_cooccurrence([["alpha", "beta", "gamma"]])
    assert graph.nodes == ["alpha", "beta", "gamma"]
    assert graph.edges == {(0, 1): 1, (1, 2): 1}
    assert influence.centrality(graph, influence.Measure.degree) == [1.0, 2.0, 1.0]

    communities = influence.partition_communities(graph)
    assert communities.community_count >= 1
    participation = influence.centrality(
        graph, influence.Measure.participation, communities
    )
    assert len(participation) == 3


def test_knn():
    corpus = load_sample()
    train = influence.partition(
        corpus, influence.Domain.automotive, influence.Split.train
    )
    test = influence.partition(
        corpus, influence.Domain.automotive, influence.Split.test
    )
    stops = influence.merge_stoplists(
        influence.builtin_stoplist(influence.Language.en),
        influence.builtin_stoplist(influence.Language.es),
    )
    train_graphs = influence.build_user_graphs(train, stops)
    test_graphs = influence.build_user_graphs(test, stops)
    predictions = influence.knn_classify_all(test_graphs, train_graphs, 1)
    assert {p.user_id for p in predictions} == set(test.user_ids)


def test_features_and_baseline():
    corpus = load_sample()
    test = influence.partition(
        corpus, influence.Domain.automotive, influence.Split.test
    )
    profiles = influence.load_profiles(data_path("sample/profiles.tsv"))

    features = influence.extract_features(test, profiles)
    assert {f.user_id for f in features} == set(test.user_ids)
    assert len(influence.feature_row(features[0])) == len(influence.feature_columns())

    baseline = influence.baseline_rank(
        test, influence.BaselineKind.followers, profiles
    )
    assert baseline.list.entries[0].user_id == "auto_new_elena"
    assert not baseline.missing
