#include "dcm/linearity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace dcm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTau = 1e-12;  // floor for the pair curvature

// Lazily materialized rows of the linear-kernel Gram matrix.
class KernelCache {
public:
    KernelCache(const NumericMatrix& X) : X_(X), rows_(X.rows) {}

    const std::vector<double>& row(std::size_t i) {
        auto& r = rows_[i];
        if (r.empty()) {
            r.resize(X_.rows);
            const double* xi = X_.row_ptr(i);
            for (std::size_t k = 0; k < X_.rows; ++k) {
                const double* xk = X_.row_ptr(k);
                double dot = 0.0;
                for (std::size_t f = 0; f < X_.cols; ++f) dot += xi[f] * xk[f];
                r[k] = dot;
            }
        }
        return r;
    }

private:
    const NumericMatrix& X_;
    std::vector<std::vector<double>> rows_;
};

// Bias that satisfies the KKT conditions: mean of y_k - w.x_k over free
// support vectors; midpoint of the feasible interval when none are free.
double kkt_bias(const std::vector<double>& alpha, const std::vector<double>& s,
                const std::vector<int>& y, double C) {
    double sum = 0.0;
    std::size_t free_count = 0;
    double lower = -kInf, upper = kInf;
    const double bound_eps = 1e-9 * C;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        const double e = static_cast<double>(y[k]) - s[k];
        if (alpha[k] > bound_eps && alpha[k] < C - bound_eps) {
            sum += e;
            ++free_count;
        } else if ((y[k] > 0) == (alpha[k] <= bound_eps)) {
            lower = std::max(lower, e);  // margin must hold: b >= e
        } else {
            upper = std::min(upper, e);
        }
    }
    if (free_count > 0) return sum / static_cast<double>(free_count);
    if (std::isfinite(lower) && std::isfinite(upper)) return 0.5 * (lower + upper);
    if (std::isfinite(lower)) return lower;
    if (std::isfinite(upper)) return upper;
    return 0.0;
}

// Exact minimizer over b of sum of hinge losses given fixed scores; the
// optimum sits on a breakpoint b = y_k - s_k.
double optimal_primal_bias(const std::vector<double>& s, const std::vector<int>& y) {
    std::vector<double> breaks(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) breaks[k] = static_cast<double>(y[k]) - s[k];
    std::sort(breaks.begin(), breaks.end());
    double best_b = 0.0, best_val = kInf;
    for (double b : breaks) {
        double v = 0.0;
        for (std::size_t k = 0; k < s.size(); ++k)
            v += std::max(0.0, 1.0 - static_cast<double>(y[k]) * (s[k] + b));
        if (v < best_val) {
            best_val = v;
            best_b = b;
        }
    }
    return best_b;
}

}  // namespace

LinearModel train_linear(const NumericMatrix& X, const std::vector<int>& y,
                         const TrainOptions& options) {
    const std::size_t n = X.rows, m = X.cols;
    if (y.size() != n) throw std::invalid_argument("train_linear: label length mismatch");
    bool has_pos = false, has_neg = false;
    for (int v : y) {
        if (v == +1) has_pos = true;
        else if (v == -1) has_neg = true;
        else throw std::invalid_argument("train_linear: labels must be +1/-1");
    }
    if (!has_pos || !has_neg) throw measure_error("linear training requires both classes");

    const double C = options.C;
    KernelCache cache(X);

    std::vector<double> alpha(n, 0.0);
    std::vector<double> w(m, 0.0);
    std::vector<double> s(n, 0.0);  // s_k = w . x_k

    LinearModel model;
    model.C = C;
    model.converged = false;

    auto dual_objective = [&]() {
        double asum = 0.0, wnorm = 0.0;
        for (double a : alpha) asum += a;
        for (double wf : w) wnorm += wf * wf;
        return asum - 0.5 * wnorm;
    };
    auto primal_objective = [&](double b) {
        double wnorm = 0.0, hinge = 0.0;
        for (double wf : w) wnorm += wf * wf;
        for (std::size_t k = 0; k < n; ++k)
            hinge += std::max(0.0, 1.0 - static_cast<double>(y[k]) * (s[k] + b));
        return 0.5 * wnorm + C * hinge;
    };

    // The violating-pair loop runs down to near-exact KKT conditions; the
    // coarser duality-gap tolerance only defines the converged flag.
    constexpr double kKktTol = 1e-6;

    int epoch = 0;
    bool kkt_optimal = false;
    for (; epoch < options.max_epochs && !kkt_optimal; ++epoch) {
        for (std::size_t step = 0; step < n; ++step) {
            // Maximal violating pair; ties resolved by lowest index.
            std::size_t i = n, j = n;
            double up_val = -kInf, low_val = kInf;
            for (std::size_t k = 0; k < n; ++k) {
                const double g = static_cast<double>(y[k]) * s[k] - 1.0;  // grad of min-form
                const double v = -static_cast<double>(y[k]) * g;
                const bool in_up = (y[k] > 0 && alpha[k] < C) || (y[k] < 0 && alpha[k] > 0);
                const bool in_low = (y[k] < 0 && alpha[k] < C) || (y[k] > 0 && alpha[k] > 0);
                if (in_up && v > up_val) {
                    up_val = v;
                    i = k;
                }
                if (in_low && v < low_val) {
                    low_val = v;
                    j = k;
                }
            }
            if (i == n || j == n || up_val - low_val < kKktTol) {
                kkt_optimal = true;
                break;
            }

            const auto& Ki = cache.row(i);
            const auto& Kj = cache.row(j);
            const double gi = static_cast<double>(y[i]) * s[i] - 1.0;
            const double gj = static_cast<double>(y[j]) * s[j] - 1.0;
            double eta = Ki[i] + Kj[j] - 2.0 * Ki[j];
            if (eta < kTau) eta = kTau;

            const double old_i = alpha[i], old_j = alpha[j];
            if (y[i] != y[j]) {
                const double delta = (-gi - gj) / eta;
                const double diff = alpha[i] - alpha[j];
                alpha[i] += delta;
                alpha[j] += delta;
                if (diff > 0) {
                    if (alpha[j] < 0) { alpha[j] = 0; alpha[i] = diff; }
                } else {
                    if (alpha[i] < 0) { alpha[i] = 0; alpha[j] = -diff; }
                }
                if (diff > 0) {
                    if (alpha[i] > C) { alpha[i] = C; alpha[j] = C - diff; }
                } else {
                    if (alpha[j] > C) { alpha[j] = C; alpha[i] = C + diff; }
                }
            } else {
                const double delta = (gi - gj) / eta;
                const double sum = alpha[i] + alpha[j];
                alpha[i] -= delta;
                alpha[j] += delta;
                if (sum > C) {
                    if (alpha[i] > C) { alpha[i] = C; alpha[j] = sum - C; }
                } else {
                    if (alpha[j] < 0) { alpha[j] = 0; alpha[i] = sum; }
                }
                if (sum > C) {
                    if (alpha[j] > C) { alpha[j] = C; alpha[i] = sum - C; }
                } else {
                    if (alpha[i] < 0) { alpha[i] = 0; alpha[j] = sum; }
                }
            }

            const double di = (alpha[i] - old_i) * static_cast<double>(y[i]);
            const double dj = (alpha[j] - old_j) * static_cast<double>(y[j]);
            if (di == 0.0 && dj == 0.0) continue;
            const double* xi = X.row_ptr(i);
            const double* xj = X.row_ptr(j);
            for (std::size_t f = 0; f < m; ++f) w[f] += di * xi[f] + dj * xj[f];
            for (std::size_t k = 0; k < n; ++k) s[k] += di * Ki[k] + dj * Kj[k];
        }
    }
    model.duality_gap = primal_objective(optimal_primal_bias(s, y)) - dual_objective();
    model.converged = model.duality_gap <= options.gap_tolerance;
    model.epochs = epoch;

    model.weights = std::move(w);
    model.bias = kkt_bias(alpha, s, y, C);
    model.alpha = std::move(alpha);
    model.slacks.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        model.slacks[k] =
            std::max(0.0, 1.0 - static_cast<double>(y[k]) * (s[k] + model.bias));
    return model;
}

LinearModel train_linear(const DatasetView& view, double C) {
    TrainOptions opt;
    opt.C = C;
    return train_linear(to_numeric(view), view.binary_labels(), opt);
}

std::vector<InterpolationDraw> interpolation_plan(const std::vector<int>& labels,
                                                  std::uint64_t seed) {
    std::vector<int> classes;
    for (int y : labels)
        if (std::find(classes.begin(), classes.end(), y) == classes.end()) classes.push_back(y);
    std::sort(classes.begin(), classes.end());

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(0.0, 1.0);
    std::vector<InterpolationDraw> plan;
    plan.reserve(labels.size());
    for (int cls : classes) {
        std::vector<std::size_t> members;
        for (std::size_t k = 0; k < labels.size(); ++k)
            if (labels[k] == cls) members.push_back(k);
        std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
        for (std::size_t t = 0; t < members.size(); ++t) {
            InterpolationDraw d;
            d.parent_i = members[pick(rng)];
            d.parent_j = members[pick(rng)];
            d.coefficient = coeff(rng);
            d.label = cls;
            plan.push_back(d);
        }
    }
    return plan;
}

std::vector<InterpolatedSample> interpolate(const NumericMatrix& X,
                                            const std::vector<int>& labels,
                                            std::uint64_t seed) {
    const auto plan = interpolation_plan(labels, seed);
    std::vector<InterpolatedSample> out;
    out.reserve(plan.size());
    for (const auto& d : plan) {
        InterpolatedSample smp;
        smp.parent_i = d.parent_i;
        smp.parent_j = d.parent_j;
        smp.coefficient = d.coefficient;
        smp.label = d.label;
        smp.point.resize(X.cols);
        const double a = d.coefficient;
        for (std::size_t f = 0; f < X.cols; ++f)
            smp.point[f] = a * X.at(d.parent_i, f) + (1.0 - a) * X.at(d.parent_j, f);
        out.push_back(std::move(smp));
    }
    return out;
}

double l1_from_model(const LinearModel& model) {
    double sum = 0.0;
    for (double e : model.slacks) sum += e;
    const double dist = sum / static_cast<double>(model.slacks.size());
    return dist / (1.0 + dist);
}

double l2_from_model(const LinearModel& model, const NumericMatrix& X,
                     const std::vector<int>& y) {
    std::size_t errors = 0;
    for (std::size_t k = 0; k < X.rows; ++k) {
        const double sc = model.score(X.row_ptr(k));
        if (sc == 0.0 || (sc > 0.0) != (y[k] > 0)) ++errors;  // ties count as errors
    }
    return static_cast<double>(errors) / static_cast<double>(X.rows);
}

double l3_from_model(const LinearModel& model, const NumericMatrix& X,
                     const std::vector<int>& y, std::uint64_t seed) {
    const auto samples = interpolate(X, y, seed);
    std::size_t errors = 0;
    for (const auto& smp : samples) {
        const double sc = model.score(smp.point.data());
        if (sc == 0.0 || (sc > 0.0) != (smp.label > 0)) ++errors;
    }
    return static_cast<double>(errors) / static_cast<double>(samples.size());
}

namespace {

template <typename Fn>
double ovo_linear(const Dataset& d, Fn&& per_view) {
    std::vector<double> vals;
    for (const auto& view : ovo_views(d)) vals.push_back(per_view(view));
    return ovo_aggregate(vals);
}

}  // namespace

double l1(const DatasetView& view, double C) { return l1_from_model(train_linear(view, C)); }

double l2(const DatasetView& view, double C) {
    const auto X = to_numeric(view);
    const auto y = view.binary_labels();
    TrainOptions opt;
    opt.C = C;
    return l2_from_model(train_linear(X, y, opt), X, y);
}

double l3(const DatasetView& view, std::uint64_t seed, double C) {
    const auto X = to_numeric(view);
    const auto y = view.binary_labels();
    TrainOptions opt;
    opt.C = C;
    return l3_from_model(train_linear(X, y, opt), X, y, seed);
}

double l1(const Dataset& d, double C) {
    return ovo_linear(d, [&](const DatasetView& v) { return l1(v, C); });
}
double l2(const Dataset& d, double C) {
    return ovo_linear(d, [&](const DatasetView& v) { return l2(v, C); });
}
double l3(const Dataset& d, std::uint64_t seed, double C) {
    return ovo_linear(d, [&](const DatasetView& v) { return l3(v, seed, C); });
}

}  // namespace dcm
