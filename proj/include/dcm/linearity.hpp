#pragma once

#include <cstdint>
#include <vector>

#include "dcm/dataset.hpp"

namespace dcm {

/// Soft-margin linear classifier trained on a two-class view.
/// slacks[i] always equals max(0, 1 - y_i*(w.x_i + b)) for the stored
/// weights and bias.
struct LinearModel {
    std::vector<double> weights;
    double bias = 0.0;
    std::vector<double> slacks;
    std::vector<double> alpha;  // dual multipliers, 0 <= alpha_i <= C
    double C = 1.0;
    bool converged = true;
    double duality_gap = 0.0;
    int epochs = 0;

    double score(const double* x) const {
        double s = bias;
        for (std::size_t f = 0; f < weights.size(); ++f) s += weights[f] * x[f];
        return s;
    }
};

struct TrainOptions {
    double C = 1.0;
    double gap_tolerance = 1e-3;
    int max_epochs = 10000;
};

/// Solve the soft-margin problem by dual ascent on maximal-violating
/// pairs of box-constrained multipliers; the bias is recovered by
/// averaging the KKT conditions over free support vectors. Deterministic
/// for a fixed example order. On hitting the epoch cap the model is
/// returned with converged=false.
LinearModel train_linear(const NumericMatrix& X, const std::vector<int>& y,
                         const TrainOptions& options = {});
LinearModel train_linear(const DatasetView& view, double C = 1.0);

/// One synthetic point drawn between two same-class parents.
struct InterpolatedSample {
    std::size_t parent_i = 0, parent_j = 0;
    double coefficient = 0.0;  // alpha: point = a*x_i + (1-a)*x_j
    int label = 0;
    std::vector<double> point;
};

/// Parent pairs and coefficients only (no materialized point); shared by
/// the linear and nearest-neighbor non-linearity measures.
struct InterpolationDraw {
    std::size_t parent_i = 0, parent_j = 0;
    double coefficient = 0.0;
    int label = 0;
};

/// Draw n interpolation pairs keeping the per-class proportions of
/// `labels`; parents are picked uniformly within each class (a singleton
/// class interpolates its point with itself).
std::vector<InterpolationDraw> interpolation_plan(const std::vector<int>& labels,
                                                  std::uint64_t seed);

/// Materialized convex combinations of encoded rows.
std::vector<InterpolatedSample> interpolate(const NumericMatrix& X,
                                            const std::vector<int>& labels,
                                            std::uint64_t seed);

// Measure kernels over an already-trained model (shared by the report
// orchestrator so one model serves L1, L2 and L3).
double l1_from_model(const LinearModel& model);
double l2_from_model(const LinearModel& model, const NumericMatrix& X,
                     const std::vector<int>& y);
double l3_from_model(const LinearModel& model, const NumericMatrix& X,
                     const std::vector<int>& y, std::uint64_t seed);

// View-level measures (train + evaluate) and one-versus-one wrappers.
double l1(const DatasetView& view, double C = 1.0);
double l2(const DatasetView& view, double C = 1.0);
double l3(const DatasetView& view, std::uint64_t seed, double C = 1.0);
double l1(const Dataset& d, double C = 1.0);
double l2(const Dataset& d, double C = 1.0);
double l3(const Dataset& d, std::uint64_t seed, double C = 1.0);

}  // namespace dcm
