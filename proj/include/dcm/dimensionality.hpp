#pragma once

#include "dcm/dataset.hpp"

namespace dcm {

/// Spectrum of the standardized-feature covariance and the component
/// count covering 95% of the variance.
struct PcaSummary {
    std::vector<double> eigenvalues;  // descending, clamped at 0
    std::size_t m_prime = 0;
};

/// Principal component analysis over the encoded dataset: columns are
/// centered and scaled to unit variance (constant columns are dropped
/// from the variance accounting). Fails when every column is constant.
PcaSummary pca_summary(const Dataset& d);

double t2(const Dataset& d);                         // m / n
double t3(const Dataset& d);                         // m' / n
double t4(const Dataset& d);                         // m' / m
double t3(const Dataset& d, const PcaSummary& pca);  // shared-PCA variants
double t4(const Dataset& d, const PcaSummary& pca);

}  // namespace dcm
