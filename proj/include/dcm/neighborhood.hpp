#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dcm/dataset.hpp"
#include "dcm/distance.hpp"

namespace dcm {

struct MstEdge {
    std::size_t a = 0, b = 0;
    double weight = 0.0;
};

/// Prim's algorithm from vertex 0; equal-weight frontier edges are
/// resolved toward the lowest (vertex, neighbor) index so the tree is
/// deterministic.
std::vector<MstEdge> minimum_spanning_tree(const DistanceMatrix& D);

/// Nearest opposite-class example; ties broken by lowest index.
std::pair<std::size_t, double> nearest_enemy(const DistanceMatrix& D,
                                             const std::vector<int>& labels, std::size_t i);

/// Per-example hypersphere radii (grown until opposite-class spheres
/// touch) and the absorption flags for spheres contained in larger ones.
struct HypersphereCover {
    std::vector<double> radius;
    std::vector<bool> absorbed;
};
HypersphereCover t1_cover(const DistanceMatrix& D, const std::vector<int>& labels);

/// Local set cardinality per example: points strictly closer than the
/// nearest enemy; the example itself is always a member.
std::vector<std::size_t> local_set_cardinality(const DistanceMatrix& D,
                                               const std::vector<int>& labels);

// Neighborhood measures; all are multiclass-native and read only the
// shared distance matrix (N4 additionally reads the raw view).
double n1(const DatasetView& view, const DistanceMatrix& D);
double n2(const DatasetView& view, const DistanceMatrix& D);
double n3(const DatasetView& view, const DistanceMatrix& D);
double n4(const DatasetView& view, std::uint64_t seed);
double t1(const DatasetView& view, const DistanceMatrix& D);
double lsc(const DatasetView& view, const DistanceMatrix& D);

double n1(const Dataset& d);
double n2(const Dataset& d);
double n3(const Dataset& d);
double n4(const Dataset& d, std::uint64_t seed);
double t1(const Dataset& d);
double lsc(const Dataset& d);

}  // namespace dcm
