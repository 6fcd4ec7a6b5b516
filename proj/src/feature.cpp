#include "dcm/feature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dcm/linalg.hpp"

namespace dcm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

OverlapInterval overlap_interval(const NumericMatrix& X, const std::vector<int>& y,
                                 const std::vector<std::size_t>& subset, std::size_t f) {
    double min1 = kInf, max1 = -kInf, min2 = kInf, max2 = -kInf;
    for (std::size_t k : subset) {
        const double v = X.at(k, f);
        if (y[k] < 0) {
            min1 = std::min(min1, v);
            max1 = std::max(max1, v);
        } else {
            min2 = std::min(min2, v);
            max2 = std::max(max2, v);
        }
    }
    OverlapInterval o{};
    if (min1 > max1 || min2 > max2) {
        o.defined = false;
        return o;
    }
    o.maxmin = std::max(min1, min2);
    o.minmax = std::min(max1, max2);
    o.maxmax = std::max(max1, max2);
    o.minmin = std::min(min1, min2);
    return o;
}

// Strict count of examples inside the ambiguous region.
std::size_t overlap_count(const NumericMatrix& X, const std::vector<std::size_t>& subset,
                          std::size_t f, const OverlapInterval& o) {
    if (!o.defined) return 0;
    std::size_t count = 0;
    for (std::size_t k : subset)
        if (X.at(k, f) > o.maxmin && X.at(k, f) < o.minmax) ++count;
    return count;
}

std::vector<std::size_t> all_rows(std::size_t n) {
    std::vector<std::size_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = i;
    return rows;
}

double ovo_mean(const Dataset& d, double (*measure)(const DatasetView&)) {
    std::vector<double> vals;
    for (const auto& view : ovo_views(d)) vals.push_back(measure(view));
    return ovo_aggregate(vals);
}

}  // namespace

double f1(const DatasetView& view) {
    const std::size_t n = view.size(), m = view.m();
    const std::size_t nc = view.classes_present().size();
    if (nc < 2) throw measure_error("F1 requires at least 2 classes");

    const NumericMatrix X = to_numeric(view);
    const auto labels = view.labels();
    const std::size_t n_classes = view.base().n_classes();

    std::vector<std::size_t> counts(n_classes, 0);
    for (int y : labels) ++counts[static_cast<std::size_t>(y)];

    double r_max = 0.0;
    for (std::size_t f = 0; f < m; ++f) {
        std::vector<double> class_mean(n_classes, 0.0);
        double mean = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            class_mean[static_cast<std::size_t>(labels[k])] += X.at(k, f);
            mean += X.at(k, f);
        }
        mean /= static_cast<double>(n);
        for (std::size_t c = 0; c < n_classes; ++c)
            if (counts[c] > 0) class_mean[c] /= static_cast<double>(counts[c]);

        double between = 0.0, within = 0.0;
        for (std::size_t c = 0; c < n_classes; ++c) {
            if (counts[c] == 0) continue;
            const double dm = class_mean[c] - mean;
            between += static_cast<double>(counts[c]) * dm * dm;
        }
        for (std::size_t k = 0; k < n; ++k) {
            const double dv = X.at(k, f) - class_mean[static_cast<std::size_t>(labels[k])];
            within += dv * dv;
        }

        double r;
        if (within > 0.0)
            r = between / within;
        else
            r = between > 0.0 ? kInf : 0.0;  // constant-per-class feature
        r_max = std::max(r_max, r);
    }
    return std::isinf(r_max) ? 0.0 : 1.0 / (1.0 + r_max);
}

double f1(const Dataset& d) {
    if (d.n_classes() < 2) throw measure_error("F1 requires at least 2 classes");
    return f1(d.full_view());
}

double f1v(const DatasetView& view) {
    const auto present = view.classes_present();
    if (present.size() != 2) throw measure_error("F1v requires exactly 2 classes in the view");

    const NumericMatrix X = to_numeric(view);
    const auto labels = view.labels();
    const std::size_t n = view.size(), m = view.m();

    std::size_t n1 = 0, n2 = 0;
    for (int y : labels) (y == present[0] ? n1 : n2) += 1;
    if (n1 < 2 || n2 < 2) throw measure_error("F1v requires at least 2 examples per class");

    std::vector<double> mu1(m, 0.0), mu2(m, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        auto& mu = labels[k] == present[0] ? mu1 : mu2;
        for (std::size_t f = 0; f < m; ++f) mu[f] += X.at(k, f);
    }
    for (std::size_t f = 0; f < m; ++f) {
        mu1[f] /= static_cast<double>(n1);
        mu2[f] /= static_cast<double>(n2);
    }

    // W = p1*Sigma1 + p2*Sigma2 with population-convention class scatter.
    SymmetricMatrix W(m);
    for (std::size_t k = 0; k < n; ++k) {
        const bool first = labels[k] == present[0];
        const auto& mu = first ? mu1 : mu2;
        const double w = 1.0 / static_cast<double>(n) /* = p_c / n_c */;
        for (std::size_t i = 0; i < m; ++i) {
            const double di = X.at(k, i) - mu[i];
            for (std::size_t j = i; j < m; ++j) {
                const double dj = X.at(k, j) - mu[j];
                W.at(i, j) += w * di * dj;
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j) W.at(i, j) = W.at(j, i);

    std::vector<double> diff(m);
    double diff_scale = 0.0;
    for (std::size_t f = 0; f < m; ++f) {
        diff[f] = mu1[f] - mu2[f];
        diff_scale = std::max(diff_scale, std::abs(diff[f]));
    }

    const auto dir = pseudo_solve(W, diff);

    // A mean shift outside the range of W is a direction with class
    // separation but no within-class spread: separable in the limit.
    double residual = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double wd = 0.0;
        for (std::size_t j = 0; j < m; ++j) wd += W.at(i, j) * dir[j];
        residual = std::max(residual, std::abs(wd - diff[i]));
    }
    if (residual > 1e-8 * std::max(diff_scale, 1.0)) return 0.0;

    double dBd = 0.0, dWd = 0.0, dot = 0.0;
    for (std::size_t f = 0; f < m; ++f) dot += dir[f] * diff[f];
    dBd = dot * dot;  // B = diff diff^t
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) dWd += dir[i] * W.at(i, j) * dir[j];

    double dF;
    if (dWd > 0.0)
        dF = dBd / dWd;
    else
        dF = dBd > 0.0 ? kInf : 0.0;
    return std::isinf(dF) ? 0.0 : 1.0 / (1.0 + dF);
}

double f1v(const Dataset& d) { return ovo_mean(d, &f1v); }

double f2(const DatasetView& view) {
    const auto present = view.classes_present();
    if (present.size() != 2) throw measure_error("F2 requires exactly 2 classes in the view");

    const NumericMatrix X = to_numeric(view);
    std::vector<int> y(view.size());
    const auto labels = view.labels();
    for (std::size_t k = 0; k < view.size(); ++k) y[k] = labels[k] == present[0] ? -1 : +1;
    const auto rows = all_rows(view.size());

    double product = 1.0;
    for (std::size_t f = 0; f < view.m(); ++f) {
        const auto o = overlap_interval(X, y, rows, f);
        const double range = o.maxmax - o.minmin;
        if (range <= 0.0) continue;  // constant feature: non-discriminative, factor 1
        product *= std::max(0.0, o.minmax - o.maxmin) / range;
    }
    return product;
}

double f2(const Dataset& d) { return ovo_mean(d, &f2); }

double f3(const DatasetView& view) {
    const auto present = view.classes_present();
    if (present.size() != 2) throw measure_error("F3 requires exactly 2 classes in the view");

    const NumericMatrix X = to_numeric(view);
    std::vector<int> y(view.size());
    const auto labels = view.labels();
    for (std::size_t k = 0; k < view.size(); ++k) y[k] = labels[k] == present[0] ? -1 : +1;
    const auto rows = all_rows(view.size());

    std::size_t best = view.size();
    for (std::size_t f = 0; f < view.m(); ++f) {
        const auto o = overlap_interval(X, y, rows, f);
        best = std::min(best, overlap_count(X, rows, f, o));
    }
    return static_cast<double>(best) / static_cast<double>(view.size());
}

double f3(const Dataset& d) { return ovo_mean(d, &f3); }

double f4(const DatasetView& view) {
    const auto present = view.classes_present();
    if (present.size() != 2) throw measure_error("F4 requires exactly 2 classes in the view");

    const NumericMatrix X = to_numeric(view);
    std::vector<int> y(view.size());
    const auto labels = view.labels();
    for (std::size_t k = 0; k < view.size(); ++k) y[k] = labels[k] == present[0] ? -1 : +1;

    std::vector<std::size_t> subset = all_rows(view.size());
    std::vector<bool> used(view.m(), false);

    for (std::size_t round = 0; round < view.m() && !subset.empty(); ++round) {
        std::size_t best_f = view.m();
        std::size_t best_count = subset.size() + 1;
        OverlapInterval best_o{};
        for (std::size_t f = 0; f < view.m(); ++f) {
            if (used[f]) continue;
            const auto o = overlap_interval(X, y, subset, f);
            const std::size_t c = overlap_count(X, subset, f, o);
            if (c < best_count) {  // ties resolved by lowest feature index
                best_count = c;
                best_f = f;
                best_o = o;
            }
        }
        used[best_f] = true;

        // Keep exactly the still-ambiguous examples (strict interior).
        std::vector<std::size_t> next;
        if (best_o.defined) {
            for (std::size_t k : subset)
                if (X.at(k, best_f) > best_o.maxmin && X.at(k, best_f) < best_o.minmax)
                    next.push_back(k);
        }
        subset = std::move(next);
    }
    return static_cast<double>(subset.size()) / static_cast<double>(view.size());
}

double f4(const Dataset& d) { return ovo_mean(d, &f4); }

}  // namespace dcm
