#pragma once

#include <cstdint>
#include <vector>

#include "dcm/dataset.hpp"

namespace dcm {

/// Gaussian blobs, one per class, centers spaced `separation` apart along
/// the first axis, per-class standard deviation `spread`.
Dataset make_clusters(std::size_t n_per_class, std::size_t n_classes, double separation,
                      double spread, std::uint64_t seed, std::size_t dims = 2);

/// Points on concentric circles (one radius per class) at uniformly
/// random angles. Radii must be pairwise distinct.
Dataset make_rings(std::size_t n_per_class, const std::vector<double>& radii,
                   std::uint64_t seed);

/// 1-D integer grid 0..n-1 with alternating class labels.
Dataset make_alternating_line(std::size_t n_points);

/// Reassign a uniformly chosen `fraction` of the examples to a different,
/// uniformly chosen class.
Dataset flip_labels(const Dataset& d, double fraction, std::uint64_t seed);

}  // namespace dcm
