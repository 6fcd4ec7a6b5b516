#include "dcm/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace dcm {

namespace {

std::vector<FeatureColumn> numeric_columns(std::size_t dims, std::size_t n) {
    std::vector<FeatureColumn> cols(dims);
    for (std::size_t f = 0; f < dims; ++f) {
        cols[f].name = "x" + std::to_string(f);
        cols[f].kind = ColumnKind::numeric;
        cols[f].values.assign(n, 0.0);
    }
    return cols;
}

std::vector<std::string> class_names(std::size_t nc) {
    std::vector<std::string> names(nc);
    for (std::size_t c = 0; c < nc; ++c) names[c] = "c" + std::to_string(c);
    return names;
}

}  // namespace

Dataset make_clusters(std::size_t n_per_class, std::size_t n_classes, double separation,
                      double spread, std::uint64_t seed, std::size_t dims) {
    if (separation <= 0.0) throw std::invalid_argument("separation must be positive");
    if (n_per_class == 0 || n_classes == 0 || dims == 0)
        throw std::invalid_argument("cluster sizes must be positive");

    const std::size_t n = n_per_class * n_classes;
    auto cols = numeric_columns(dims, n);
    std::vector<int> labels(n);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::size_t row = 0;
    for (std::size_t c = 0; c < n_classes; ++c) {
        for (std::size_t k = 0; k < n_per_class; ++k, ++row) {
            labels[row] = static_cast<int>(c);
            for (std::size_t f = 0; f < dims; ++f) {
                const double center = f == 0 ? static_cast<double>(c) * separation : 0.0;
                cols[f].values[row] = center + spread * noise(rng);
            }
        }
    }
    return Dataset(std::move(cols), std::move(labels), class_names(n_classes), "clusters");
}

Dataset make_rings(std::size_t n_per_class, const std::vector<double>& radii,
                   std::uint64_t seed) {
    if (radii.size() < 2) throw std::invalid_argument("need at least 2 ring radii");
    if (n_per_class == 0) throw std::invalid_argument("ring size must be positive");
    for (std::size_t a = 0; a < radii.size(); ++a)
        for (std::size_t b = a + 1; b < radii.size(); ++b)
            if (radii[a] == radii[b]) throw std::invalid_argument("ring radii must be distinct");

    const std::size_t n = n_per_class * radii.size();
    auto cols = numeric_columns(2, n);
    std::vector<int> labels(n);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::size_t row = 0;
    for (std::size_t c = 0; c < radii.size(); ++c) {
        for (std::size_t k = 0; k < n_per_class; ++k, ++row) {
            labels[row] = static_cast<int>(c);
            const double a = angle(rng);
            cols[0].values[row] = radii[c] * std::cos(a);
            cols[1].values[row] = radii[c] * std::sin(a);
        }
    }
    return Dataset(std::move(cols), std::move(labels), class_names(radii.size()), "rings");
}

Dataset make_alternating_line(std::size_t n_points) {
    if (n_points < 2) throw std::invalid_argument("need at least 2 points");
    auto cols = numeric_columns(1, n_points);
    std::vector<int> labels(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        cols[0].values[i] = static_cast<double>(i);
        labels[i] = static_cast<int>(i % 2);
    }
    return Dataset(std::move(cols), std::move(labels), class_names(2), "alternating-line");
}

Dataset flip_labels(const Dataset& d, double fraction, std::uint64_t seed) {
    if (fraction < 0.0 || fraction > 1.0)
        throw std::invalid_argument("flip fraction must be in [0,1]");
    std::vector<int> labels = d.labels();
    const auto flips = static_cast<std::size_t>(
        std::llround(fraction * static_cast<double>(d.n())));

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(d.n());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);

    const int nc = static_cast<int>(d.n_classes());
    std::uniform_int_distribution<int> offset(1, std::max(1, nc - 1));
    for (std::size_t k = 0; k < flips && k < order.size(); ++k) {
        const std::size_t i = order[k];
        labels[i] = (labels[i] + offset(rng)) % nc;
    }
    return Dataset(d.columns(), std::move(labels), d.class_names(), d.id() + "-noisy");
}

}  // namespace dcm
