#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "dcm/dataset.hpp"
#include "dcm/distance.hpp"

namespace dcm {

/// Epsilon-NN graph after supervised pruning: an undirected edge (i,j)
/// exists iff dist(i,j) < epsilon and the two examples share a class.
class EpsilonGraph {
public:
    EpsilonGraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges,
                 std::vector<double> weights, double epsilon);

    std::size_t n() const { return n_; }
    double epsilon() const { return epsilon_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
    std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
    bool connected(std::size_t a, std::size_t b) const;

private:
    std::size_t n_;
    double epsilon_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<double> weights_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

EpsilonGraph build_graph(const DatasetView& view, const DistanceMatrix& D,
                         double epsilon = 0.15);
EpsilonGraph build_graph(const Dataset& d, double epsilon = 0.15);

/// 1 - 2|E| / (n(n-1)).
double density(const EpsilonGraph& g);

/// 1 - mean local clustering coefficient (degree <= 1 vertices count 0).
double clustering_coefficient(const EpsilonGraph& g);

/// Per-vertex hub scores: the principal eigenvector of the squared
/// adjacency, computed by power iteration and scaled to max component 1.
/// An edgeless graph yields all zeros.
std::vector<double> hub_values(const EpsilonGraph& g);

/// 1 - mean hub score.
double hub_score(const EpsilonGraph& g);

/// One "i j weight" line per edge, for debugging.
void write_edge_list(const EpsilonGraph& g, std::ostream& out);

}  // namespace dcm
