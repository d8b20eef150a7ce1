#include "influence/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <random>
#include <unordered_map>

#include "influence/error.hpp"
#include "influence/tsv.hpp"

namespace influence {

namespace {

constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

std::vector<std::vector<std::uint32_t>> neighbour_lists(const CooccurrenceGraph& g) {
    std::vector<std::vector<std::uint32_t>> adj(g.node_count());
    for (std::size_t i = 0; i < adj.size(); ++i) {
        adj[i].reserve(g.adjacency()[i].size());
        for (const auto& [neighbour, weight] : g.adjacency()[i]) {
            adj[i].push_back(neighbour);
        }
    }
    return adj;
}

std::vector<std::uint32_t> bfs_distances(
    const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t source) {
    std::vector<std::uint32_t> dist(adj.size(), kUnreachable);
    std::queue<std::uint32_t> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        std::uint32_t v = queue.front();
        queue.pop();
        for (std::uint32_t w : adj[v]) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

std::vector<double> degree_values(const std::vector<std::vector<std::uint32_t>>& adj) {
    std::vector<double> values(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) {
        values[i] = static_cast<double>(adj[i].size());
    }
    return values;
}

// Brandes' accumulation; undirected, so every pair is halved at the end.
std::vector<double> betweenness_values(
    const std::vector<std::vector<std::uint32_t>>& adj) {
    std::size_t n = adj.size();
    std::vector<double> cb(n, 0.0);
    std::vector<std::uint32_t> order;
    std::vector<std::vector<std::uint32_t>> preds(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<std::uint32_t> dist(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        order.clear();
        for (auto& p : preds) p.clear();
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(dist.begin(), dist.end(), kUnreachable);
        sigma[s] = 1.0;
        dist[s] = 0;
        std::queue<std::uint32_t> queue;
        queue.push(s);
        while (!queue.empty()) {
            std::uint32_t v = queue.front();
            queue.pop();
            order.push_back(v);
            for (std::uint32_t w : adj[v]) {
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[v] + 1;
                    queue.push(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            std::uint32_t w = *it;
            for (std::uint32_t v : preds[w]) {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if (w != s) cb[w] += delta[w];
        }
    }
    for (auto& v : cb) v /= 2.0;
    return cb;
}

std::vector<double> closeness_values(
    const std::vector<std::vector<std::uint32_t>>& adj) {
    std::vector<double> values(adj.size(), 0.0);
    for (std::uint32_t v = 0; v < adj.size(); ++v) {
        auto dist = bfs_distances(adj, v);
        std::uint64_t sum = 0;
        for (std::uint32_t d : dist) {
            if (d != kUnreachable) sum += d;
        }
        if (sum > 0) values[v] = 1.0 / static_cast<double>(sum);
    }
    return values;
}

std::vector<double> eccentricity_values(
    const std::vector<std::vector<std::uint32_t>>& adj) {
    std::vector<double> values(adj.size(), 0.0);
    for (std::uint32_t v = 0; v < adj.size(); ++v) {
        auto dist = bfs_distances(adj, v);
        std::uint32_t ecc = 0;
        for (std::uint32_t d : dist) {
            if (d != kUnreachable && d > ecc) ecc = d;
        }
        values[v] = ecc;
    }
    return values;
}

// Power iteration on A + I so bipartite spectra cannot oscillate; stops on
// the residual of A itself. The result is scaled to a maximum entry of 1.
std::vector<double> eigenvector_values(
    const std::vector<std::vector<std::uint32_t>>& adj) {
    std::size_t n = adj.size();
    std::vector<double> x(n, 1.0), ax(n);
    auto multiply = [&](const std::vector<double>& in, std::vector<double>& out) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (std::uint32_t j : adj[i]) sum += in[j];
            out[i] = sum;
        }
    };
    for (int iteration = 0; iteration < 10000; ++iteration) {
        multiply(x, ax);
        double dot_xa = 0.0, dot_xx = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            dot_xa += x[i] * ax[i];
            dot_xx += x[i] * x[i];
        }
        double lambda = dot_xa / dot_xx;
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            residual = std::max(residual, std::abs(ax[i] - lambda * x[i]));
        }
        if (residual <= 1e-10 * std::max(1.0, lambda)) break;
        double peak = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += ax[i];
            peak = std::max(peak, x[i]);
        }
        for (auto& v : x) v /= peak;
    }
    return x;
}

// Truncated series sum over A^l diagonal / l!; the max degree bounds every
// diagonal entry, so terms stop once that bound drops below 1e-12 (with a
// hard cap of 64 terms).
std::vector<double> subgraph_values(const std::vector<std::vector<std::uint32_t>>& adj) {
    std::size_t n = adj.size();
    double rho = 0.0;
    for (const auto& list : adj) rho = std::max(rho, static_cast<double>(list.size()));
    int terms = 0;
    double bound = 1.0;
    while (terms < 64) {
        bound *= rho / (terms + 1);
        if (bound < 1e-12) break;
        ++terms;
    }
    std::vector<double> values(n, 1.0);
    std::vector<double> x(n), next(n);
    for (std::uint32_t u = 0; u < n; ++u) {
        std::fill(x.begin(), x.end(), 0.0);
        x[u] = 1.0;
        double factorial = 1.0;
        for (int l = 1; l <= terms; ++l) {
            for (std::size_t i = 0; i < n; ++i) {
                double sum = 0.0;
                for (std::uint32_t j : adj[i]) sum += x[j];
                next[i] = sum;
            }
            std::swap(x, next);
            factorial *= l;
            values[u] += x[u] / factorial;
        }
    }
    return values;
}

std::vector<double> transitivity_values(
    const std::vector<std::vector<std::uint32_t>>& adj) {
    std::vector<double> values(adj.size(), 0.0);
    for (std::uint32_t v = 0; v < adj.size(); ++v) {
        std::size_t d = adj[v].size();
        if (d < 2) continue;
        std::uint64_t links = 0;
        for (std::uint32_t u : adj[v]) {
            // Count each neighbour pair once via the higher index side.
            auto iu = adj[u].begin();
            auto iv = adj[v].begin();
            while (iu != adj[u].end() && iv != adj[v].end()) {
                if (*iu < *iv) ++iu;
                else if (*iv < *iu) ++iv;
                else {
                    if (*iu > u) ++links;
                    ++iu;
                    ++iv;
                }
            }
        }
        values[v] = 2.0 * static_cast<double>(links) /
                    (static_cast<double>(d) * static_cast<double>(d - 1));
    }
    return values;
}

std::vector<std::uint32_t> internal_degrees(
    const std::vector<std::vector<std::uint32_t>>& adj,
    const CommunityPartition& partition) {
    std::vector<std::uint32_t> internal(adj.size(), 0);
    for (std::uint32_t v = 0; v < adj.size(); ++v) {
        for (std::uint32_t u : adj[v]) {
            if (partition.assignment[u] == partition.assignment[v]) ++internal[v];
        }
    }
    return internal;
}

std::vector<double> embeddedness_values(
    const std::vector<std::vector<std::uint32_t>>& adj,
    const CommunityPartition& partition) {
    auto internal = internal_degrees(adj, partition);
    std::vector<double> values(adj.size(), 0.0);
    for (std::uint32_t v = 0; v < adj.size(); ++v) {
        if (!adj[v].empty()) {
            values[v] = static_cast<double>(internal[v]) / adj[v].size();
        }
    }
    return values;
}

std::vector<double> within_module_degree_values(
    const std::vector<std::vector<std::uint32_t>>& adj,
    const CommunityPartition& partition) {
    auto internal = internal_degrees(adj, partition);
    std::vector<double> sum(partition.community_count, 0.0);
    std::vector<double> sum_sq(partition.community_count, 0.0);
    std::vector<std::uint32_t> members(partition.community_count, 0);
    for (std::uint32_t v = 0; v < adj.size(); ++v) {
        std::uint32_t c = partition.assignment[v];
        sum[c] += internal[v];
        sum_sq[c] += static_cast<double>(internal[v]) * internal[v];
        ++members[c];
    }
    std::vector<double> values(adj.size(), 0.0);
    for (std::uint32_t v = 0; v < adj.size(); ++v) {
        std::uint32_t c = partition.assignment[v];
        double mean = sum[c] / members[c];
        double variance = sum_sq[c] / members[c] - mean * mean;
        if (variance > 0.0) {
            values[v] = (internal[v] - mean) / std::sqrt(variance);
        }
    }
    return values;
}

std::vector<double> participation_values(
    const std::vector<std::vector<std::uint32_t>>& adj,
    const CommunityPartition& partition) {
    std::vector<double> values(adj.size(), 0.0);
    std::unordered_map<std::uint32_t, std::uint32_t> counts;
    for (std::uint32_t v = 0; v < adj.size(); ++v) {
        std::size_t d = adj[v].size();
        if (d == 0) continue;
        counts.clear();
        for (std::uint32_t u : adj[v]) ++counts[partition.assignment[u]];
        double sum = 0.0;
        for (const auto& [community, count] : counts) {
            double share = static_cast<double>(count) / d;
            sum += share * share;
        }
        values[v] = 1.0 - sum;
    }
    return values;
}

CommunityPartition renumber(std::vector<std::uint32_t> raw) {
    CommunityPartition partition;
    std::unordered_map<std::uint32_t, std::uint32_t> dense;
    partition.assignment.reserve(raw.size());
    for (std::uint32_t label : raw) {
        auto [it, inserted] = dense.emplace(label, dense.size());
        partition.assignment.push_back(it->second);
    }
    partition.community_count = static_cast<std::uint32_t>(dense.size());
    return partition;
}

}  // namespace

const std::vector<Measure>& all_measures() {
    static const std::vector<Measure> measures = {
        Measure::degree,        Measure::betweenness,
        Measure::closeness,     Measure::eigenvector,
        Measure::subgraph,      Measure::eccentricity,
        Measure::transitivity,  Measure::embeddedness,
        Measure::within_module_degree, Measure::participation,
    };
    return measures;
}

std::string_view to_string(Measure m) {
    switch (m) {
        case Measure::degree: return "degree";
        case Measure::betweenness: return "betweenness";
        case Measure::closeness: return "closeness";
        case Measure::eigenvector: return "eigenvector";
        case Measure::subgraph: return "subgraph";
        case Measure::eccentricity: return "eccentricity";
        case Measure::transitivity: return "transitivity";
        case Measure::embeddedness: return "embeddedness";
        case Measure::within_module_degree: return "within_module_degree";
        case Measure::participation: return "participation";
    }
    return "degree";
}

std::optional<Measure> parse_measure(std::string_view s) {
    for (Measure m : all_measures()) {
        if (to_string(m) == s) return m;
    }
    return std::nullopt;
}

bool needs_partition(Measure m) {
    return m == Measure::embeddedness || m == Measure::within_module_degree ||
           m == Measure::participation;
}

std::vector<double> centrality(const CooccurrenceGraph& graph, Measure measure,
                               const CommunityPartition* partition) {
    if (graph.ordered()) {
        throw DataError("centrality requires an unordered graph");
    }
    if (needs_partition(measure)) {
        if (!partition) {
            throw DataError(std::string(to_string(measure)) +
                            " requires a community partition");
        }
        if (partition->assignment.size() != graph.node_count()) {
            throw DataError("partition does not cover the graph");
        }
    }
    auto adj = neighbour_lists(graph);
    switch (measure) {
        case Measure::degree: return degree_values(adj);
        case Measure::betweenness: return betweenness_values(adj);
        case Measure::closeness: return closeness_values(adj);
        case Measure::eigenvector: return eigenvector_values(adj);
        case Measure::subgraph: return subgraph_values(adj);
        case Measure::eccentricity: return eccentricity_values(adj);
        case Measure::transitivity: return transitivity_values(adj);
        case Measure::embeddedness: return embeddedness_values(adj, *partition);
        case Measure::within_module_degree:
            return within_module_degree_values(adj, *partition);
        case Measure::participation: return participation_values(adj, *partition);
    }
    throw DataError("unknown measure");
}

double summarize_mean(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / values.size();
}

CommunityPartition partition_communities(const CooccurrenceGraph& graph,
                                         std::uint64_t seed) {
    auto adj = neighbour_lists(graph);
    std::size_t n = adj.size();
    std::vector<std::uint32_t> labels(n);
    for (std::uint32_t i = 0; i < n; ++i) labels[i] = i;

    std::vector<std::uint32_t> order(n);
    for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> around;
    for (int iteration = 0; iteration < 100; ++iteration) {
        std::shuffle(order.begin(), order.end(), rng);
        bool changed = false;
        for (std::uint32_t v : order) {
            if (adj[v].empty()) continue;
            around.clear();
            for (std::uint32_t u : adj[v]) around.push_back(labels[u]);
            std::sort(around.begin(), around.end());
            std::uint32_t best = labels[v];
            std::size_t best_count = 0;
            for (std::size_t i = 0; i < around.size();) {
                std::size_t j = i;
                while (j < around.size() && around[j] == around[i]) ++j;
                if (j - i > best_count) {
                    best_count = j - i;
                    best = around[i];
                }
                i = j;
            }
            if (best != labels[v]) {
                labels[v] = best;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return renumber(std::move(labels));
}

CommunityPartition load_partition(const std::string& path,
                                  const CooccurrenceGraph& graph) {
    auto lines = tsv::read_lines(path);
    std::unordered_map<std::string, std::uint32_t> by_term;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.empty() || line[0] == '#') continue;
        auto fields = tsv::split_fields(line);
        auto community = fields.size() == 2 ? tsv::parse_int(fields[1]) : std::nullopt;
        if (!community || *community < 0) {
            throw DataError(path + ":" + std::to_string(i + 1) + ": bad partition row");
        }
        if (!by_term.emplace(std::string(fields[0]),
                             static_cast<std::uint32_t>(*community))
                 .second) {
            throw DataError(path + ": duplicate term '" + std::string(fields[0]) + "'");
        }
    }
    std::vector<std::uint32_t> raw;
    raw.reserve(graph.node_count());
    for (const auto& term : graph.nodes()) {
        auto it = by_term.find(term);
        if (it == by_term.end()) {
            throw DataError(path + ": partition lacks term '" + term + "'");
        }
        raw.push_back(it->second);
    }
    return renumber(std::move(raw));
}

void save_partition(const std::string& path, const CooccurrenceGraph& graph,
                    const CommunityPartition& partition) {
    if (partition.assignment.size() != graph.node_count()) {
        throw DataError("partition does not cover the graph");
    }
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    for (std::size_t i = 0; i < graph.node_count(); ++i) {
        out << graph.nodes()[i] << '\t' << partition.assignment[i] << '\n';
    }
    if (!out.flush()) throw DataError("cannot write " + path);
}

}  // namespace influence
