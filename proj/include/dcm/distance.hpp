#pragma once

#include <cstddef>
#include <vector>

#include "dcm/dataset.hpp"

namespace dcm {

/// Symmetric n x n Gower distance store. Entries are in [0,1] (the metric
/// is range-normalized per feature), the diagonal is zero.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v) {
        d_[i * n_ + j] = v;
        d_[j * n_ + i] = v;
    }

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

/// Gower distance between two rows of a view: the mean over features of
/// |x_if - x_jf| / range(f) for numeric features (0 when the range is 0)
/// and an equality test for symbolic ones. Ranges are taken over the
/// view's rows.
double gower(const DatasetView& view, std::size_t i, std::size_t j);
double gower(const Dataset& d, std::size_t i, std::size_t j);

/// Full pairwise Gower matrix for the view; computed once and shared by
/// the neighborhood and network measures.
DistanceMatrix distance_matrix(const DatasetView& view);
DistanceMatrix distance_matrix(const Dataset& d);

}  // namespace dcm
