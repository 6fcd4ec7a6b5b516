#include "dcm/distance.hpp"

#include <cmath>

namespace dcm {

namespace {

// Per-feature ranges over the view's rows (0 for symbolic placeholders).
std::vector<double> view_ranges(const DatasetView& view) {
    const std::size_t m = view.m();
    std::vector<double> ranges(m, 0.0);
    for (std::size_t f = 0; f < m; ++f) {
        if (!view.base().column(f).is_numeric()) continue;
        double lo = view.value(0, f), hi = lo;
        for (std::size_t k = 1; k < view.size(); ++k) {
            double v = view.value(k, f);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        ranges[f] = hi - lo;
    }
    return ranges;
}

double gower_with_ranges(const DatasetView& view, const std::vector<double>& ranges,
                         std::size_t i, std::size_t j) {
    const std::size_t m = view.m();
    double sum = 0.0;
    for (std::size_t f = 0; f < m; ++f) {
        const auto& col = view.base().column(f);
        const double a = view.value(i, f), b = view.value(j, f);
        if (col.is_numeric()) {
            if (ranges[f] > 0.0) sum += std::abs(a - b) / ranges[f];
        } else {
            sum += a == b ? 0.0 : 1.0;
        }
    }
    return sum / static_cast<double>(m);
}

}  // namespace

double gower(const DatasetView& view, std::size_t i, std::size_t j) {
    return gower_with_ranges(view, view_ranges(view), i, j);
}

double gower(const Dataset& d, std::size_t i, std::size_t j) {
    return gower(d.full_view(), i, j);
}

DistanceMatrix distance_matrix(const DatasetView& view) {
    const std::size_t n = view.size();
    DistanceMatrix D(n);
    const auto ranges = view_ranges(view);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            D.set(i, j, gower_with_ranges(view, ranges, i, j));
    return D;
}

DistanceMatrix distance_matrix(const Dataset& d) { return distance_matrix(d.full_view()); }

}  // namespace dcm
