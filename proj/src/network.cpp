#include "dcm/network.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dcm {

EpsilonGraph::EpsilonGraph(std::size_t n,
                           std::vector<std::pair<std::size_t, std::size_t>> edges,
                           std::vector<double> weights, double epsilon)
    : n_(n), epsilon_(epsilon), edges_(std::move(edges)), weights_(std::move(weights)) {
    if (weights_.empty()) weights_.assign(edges_.size(), 0.0);
    if (weights_.size() != edges_.size())
        throw std::invalid_argument("edge/weight count mismatch");
    adjacency_.resize(n_);
    for (auto& e : edges_) {
        if (e.first == e.second) throw std::invalid_argument("self-loop in graph");
        if (e.first >= n_ || e.second >= n_) throw std::invalid_argument("edge out of range");
        if (e.first > e.second) std::swap(e.first, e.second);
        adjacency_[e.first].push_back(e.second);
        adjacency_[e.second].push_back(e.first);
    }
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
            throw std::invalid_argument("duplicate edge in graph");
    }
}

bool EpsilonGraph::connected(std::size_t a, std::size_t b) const {
    const auto& adj = adjacency_[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

EpsilonGraph build_graph(const DatasetView& view, const DistanceMatrix& D, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("epsilon must be in (0,1]");
    const std::size_t n = view.size();
    const auto labels = view.labels();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<double> weights;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (D(i, j) < epsilon && labels[i] == labels[j]) {
                edges.emplace_back(i, j);
                weights.push_back(D(i, j));
            }
        }
    }
    return EpsilonGraph(n, std::move(edges), std::move(weights), epsilon);
}

EpsilonGraph build_graph(const Dataset& d, double epsilon) {
    return build_graph(d.full_view(), distance_matrix(d), epsilon);
}

double density(const EpsilonGraph& g) {
    const double n = static_cast<double>(g.n());
    if (g.n() < 2) throw measure_error("graph density requires at least 2 vertices");
    return 1.0 - 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

double clustering_coefficient(const EpsilonGraph& g) {
    const std::size_t n = g.n();
    double sum = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        const auto& adj = g.neighbors(v);
        const std::size_t k = adj.size();
        if (k < 2) continue;
        std::size_t links = 0;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b) links += g.connected(adj[a], adj[b]);
        sum += 2.0 * static_cast<double>(links) /
               (static_cast<double>(k) * static_cast<double>(k - 1));
    }
    return 1.0 - sum / static_cast<double>(n);
}

std::vector<double> hub_values(const EpsilonGraph& g) {
    const std::size_t n = g.n();
    std::vector<double> h(n, 0.0);
    if (g.edge_count() == 0) return h;

    // Power iteration on the shifted adjacency A + I. The shift keeps the
    // dominant eigenvalue strictly largest in magnitude (bipartite pieces
    // otherwise oscillate between +/-lambda), and the limit is the
    // non-negative principal eigenvector shared with A^t A.
    std::vector<double> v(n, 1.0), next(n, 0.0);
    const int max_iters = 10000;
    const double tol = 1e-10;
    for (int it = 0; it < max_iters; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = v[i];
            for (std::size_t j : g.neighbors(i)) acc += v[j];
            next[i] = acc;
        }
        double mx = 0.0;
        for (double x : next) mx = std::max(mx, x);
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] /= mx;
            delta = std::max(delta, std::abs(next[i] - v[i]));
        }
        v.swap(next);
        if (delta < tol) break;
    }
    return v;
}

double hub_score(const EpsilonGraph& g) {
    const auto h = hub_values(g);
    double sum = 0.0;
    for (double x : h) sum += x;
    return 1.0 - sum / static_cast<double>(g.n());
}

void write_edge_list(const EpsilonGraph& g, std::ostream& out) {
    std::ostringstream line;
    line.precision(17);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        line.str("");
        line << g.edges()[e].first << ' ' << g.edges()[e].second << ' ' << g.weights()[e]
             << '\n';
        out << line.str();
    }
}

}  // namespace dcm
