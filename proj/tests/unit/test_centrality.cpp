#include <doctest.h>

#include <cmath>

#include "influence/centrality.hpp"
#include "influence/error.hpp"
#include "test_util.hpp"

using namespace influence;

namespace {

CooccurrenceGraph graph_of(std::vector<std::vector<std::string>> streams,
                           CooccurrenceOptions options = {}) {
    return build_cooccurrence(streams, options);
}

// Star with centre a and leaves b, c, d.
CooccurrenceGraph star() { return graph_of({{"a", "b"}, {"a", "c"}, {"a", "d"}}); }

// Path a - b - c.
CooccurrenceGraph path3() { return graph_of({{"a", "b", "c"}}); }

CooccurrenceGraph triangle() { return graph_of({{"a", "b", "c", "a"}}); }

}  // namespace

TEST_CASE("measure names round trip") {
    CHECK(all_measures().size() == 10);
    for (Measure m : all_measures()) {
        CHECK(parse_measure(to_string(m)).value() == m);
    }
    CHECK_FALSE(parse_measure("pagerank").has_value());
    CHECK(needs_partition(Measure::participation));
    CHECK(needs_partition(Measure::embeddedness));
    CHECK(needs_partition(Measure::within_module_degree));
    CHECK_FALSE(needs_partition(Measure::degree));
}

TEST_CASE("degree and its mean") {
    auto values = centrality(star(), Measure::degree);
    CHECK(values == std::vector<double>{3.0, 1.0, 1.0, 1.0});
    CHECK(summarize_mean(values) == 1.5);
    CHECK(summarize_mean({}) == 0.0);
}

TEST_CASE("betweenness counts pair paths through a node") {
    auto star_values = centrality(star(), Measure::betweenness);
    CHECK(star_values[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(star_values[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

    auto path_values = centrality(path3(), Measure::betweenness);
    CHECK(path_values[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(path_values[0] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

    auto triangle_values = centrality(triangle(), Measure::betweenness);
    for (double v : triangle_values) {
        CHECK(v == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    }
}

TEST_CASE("closeness inverts the distance sum per component") {
    auto star_values = centrality(star(), Measure::closeness);
    CHECK(star_values[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(star_values[1] == doctest::Approx(0.2).epsilon(1e-15));

    auto path_values = centrality(path3(), Measure::closeness);
    CHECK(path_values[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(path_values[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    // Isolated nodes score zero, other components are unaffected.
    auto mixed = graph_of({{"a", "b", "c", "a"}, {"z"}});
    auto mixed_values = centrality(mixed, Measure::closeness);
    CHECK(mixed_values[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mixed_values[3] == 0.0);
}

TEST_CASE("eccentricity is the longest reachable distance") {
    auto star_values = centrality(star(), Measure::eccentricity);
    CHECK(star_values == std::vector<double>{1.0, 2.0, 2.0, 2.0});

    auto path_values = centrality(path3(), Measure::eccentricity);
    CHECK(path_values == std::vector<double>{2.0, 1.0, 2.0});

    auto mixed = graph_of({{"a", "b", "c", "a"}, {"z"}});
    auto mixed_values = centrality(mixed, Measure::eccentricity);
    CHECK(mixed_values == std::vector<double>{1.0, 1.0, 1.0, 0.0});
}

TEST_CASE("eigenvector centrality peaks at the hub") {
    auto star_values = centrality(star(), Measure::eigenvector);
    CHECK(star_values[0] == doctest::Approx(1.0).epsilon(1e-9));
    for (int i = 1; i < 4; ++i) {
        CHECK(star_values[i] ==
              doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));
    }

    auto triangle_values = centrality(triangle(), Measure::eigenvector);
    for (double v : triangle_values) CHECK(v == 1.0);

    // A dominant component starves disconnected nodes.
    auto mixed = graph_of({{"a", "b", "c", "a"}, {"z"}});
    auto mixed_values = centrality(mixed, Measure::eigenvector);
    CHECK(mixed_values[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(mixed_values[3] < 1e-8);
}

TEST_CASE("subgraph centrality sums closed walks") {
    auto pair_values = centrality(graph_of({{"a", "b"}}), Measure::subgraph);
    CHECK(pair_values[0] == doctest::Approx(std::cosh(1.0)).epsilon(1e-9));
    CHECK(pair_values[0] == doctest::Approx(1.5430806348152437).epsilon(1e-9));

    auto triangle_values = centrality(triangle(), Measure::subgraph);
    double expected = (std::exp(2.0) + 2.0 * std::exp(-1.0)) / 3.0;
    for (double v : triangle_values) {
        CHECK(v == doctest::Approx(expected).epsilon(1e-9));
    }

    double root3 = std::sqrt(3.0);
    auto star_values = centrality(star(), Measure::subgraph);
    CHECK(star_values[0] == doctest::Approx(std::cosh(root3)).epsilon(1e-9));
    CHECK(star_values[1] ==
          doctest::Approx(std::cosh(root3) / 3.0 + 2.0 / 3.0).epsilon(1e-9));

    auto lonely = centrality(graph_of({{"z"}}), Measure::subgraph);
    CHECK(lonely[0] == 1.0);
}

TEST_CASE("transitivity measures neighbourhood closure") {
    auto triangle_values = centrality(triangle(), Measure::transitivity);
    CHECK(triangle_values == std::vector<double>{1.0, 1.0, 1.0});

    auto star_values = centrality(star(), Measure::transitivity);
    CHECK(star_values == std::vector<double>{0.0, 0.0, 0.0, 0.0});

    // Triangle with a pendant: the attachment point has 3 neighbours and
    // one closed pair out of three.
    auto tailed = graph_of({{"a", "b", "c", "a"}, {"a", "d"}});
    auto tailed_values = centrality(tailed, Measure::transitivity);
    CHECK(tailed_values[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(tailed_values[1] == 1.0);
    CHECK(tailed_values[3] == 0.0);
}

TEST_CASE("community measures need a fitting partition") {
    auto g = path3();
    CHECK_THROWS_WITH_AS(centrality(g, Measure::participation),
                         doctest::Contains("partition"), DataError);

    CommunityPartition short_partition{{0, 0}, 1};
    CHECK_THROWS_AS(centrality(g, Measure::participation, &short_partition), DataError);

    CooccurrenceOptions ordered;
    ordered.ordered_pairs = true;
    auto og = build_cooccurrence({{"a", "b"}}, ordered);
    CHECK_THROWS_WITH_AS(centrality(og, Measure::degree),
                         doctest::Contains("unordered"), DataError);
}

TEST_CASE("embeddedness and participation split by community") {
    // Path b - a - c with b sharing a's community and c outside it.
    auto g = graph_of({{"b", "a", "c"}});
    REQUIRE(g.nodes() == std::vector<std::string>{"a", "b", "c"});
    CommunityPartition partition{{0, 0, 1}, 2};

    auto embeddedness = centrality(g, Measure::embeddedness, &partition);
    CHECK(embeddedness[0] == 0.5);
    CHECK(embeddedness[1] == 1.0);
    CHECK(embeddedness[2] == 0.0);

    auto participation = centrality(g, Measure::participation, &partition);
    CHECK(participation[0] == 0.5);
    CHECK(participation[1] == 0.0);
    CHECK(participation[2] == 0.0);
}

TEST_CASE("within module degree standardizes internal degrees") {
    auto g = path3();
    CommunityPartition one{{0, 0, 0}, 1};
    auto values = centrality(g, Measure::within_module_degree, &one);
    double root2 = std::sqrt(2.0);
    CHECK(values[0] == doctest::Approx(-root2 / 2.0).epsilon(1e-12));
    CHECK(values[1] == doctest::Approx(root2).epsilon(1e-12));
    CHECK(values[2] == doctest::Approx(-root2 / 2.0).epsilon(1e-12));

    // Zero deviation within a community maps to zero.
    auto t = triangle();
    CommunityPartition whole{{0, 0, 0}, 1};
    auto flat = centrality(t, Measure::within_module_degree, &whole);
    CHECK(flat == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("label propagation finds the obvious communities") {
    auto g = graph_of({{"a", "b", "c", "a"}, {"d", "e", "f", "d"}});
    auto partition = partition_communities(g, 7);
    REQUIRE(partition.assignment.size() == 6);
    CHECK(partition.community_count == 2);
    CHECK(partition.assignment[0] == partition.assignment[1]);
    CHECK(partition.assignment[1] == partition.assignment[2]);
    CHECK(partition.assignment[3] == partition.assignment[4]);
    CHECK(partition.assignment[4] == partition.assignment[5]);
    CHECK(partition.assignment[0] != partition.assignment[3]);

    auto again = partition_communities(g, 7);
    CHECK(again.assignment == partition.assignment);

    // Isolated nodes keep their own community.
    auto lonely = graph_of({{"a", "b"}, {"z"}});
    auto lp = partition_communities(lonely, 1);
    CHECK(lp.community_count == 2);
    CHECK(lp.assignment[0] == lp.assignment[1]);
    CHECK(lp.assignment[2] != lp.assignment[0]);
}

TEST_CASE("partitions save and load through files") {
    testutil::TempDir dir;
    auto g = graph_of({{"a", "b", "c", "a"}, {"d", "e", "f", "d"}});
    auto partition = partition_communities(g, 3);

    auto path = dir.file("partition.tsv");
    save_partition(path, g, partition);
    auto loaded = load_partition(path, g);
    CHECK(loaded.assignment == partition.assignment);
    CHECK(loaded.community_count == partition.community_count);

    // Sparse indices renumber densely; unknown terms are ignored.
    auto hand = dir.file("hand.tsv");
    testutil::write_file(hand,
                         "a\t9\nb\t9\nc\t9\nd\t4\ne\t4\nf\t4\nunused\t2\n");
    auto dense = load_partition(hand, g);
    CHECK(dense.community_count == 2);
    CHECK(dense.assignment == std::vector<std::uint32_t>{0, 0, 0, 1, 1, 1});

    auto missing = dir.file("missing.tsv");
    testutil::write_file(missing, "a\t0\nb\t0\n");
    CHECK_THROWS_WITH_AS(load_partition(missing, g), doctest::Contains("lacks term"),
                         DataError);

    auto broken = dir.file("broken.tsv");
    testutil::write_file(broken, "a\tnot_a_number\n");
    CHECK_THROWS_AS(load_partition(broken, g), DataError);
}
