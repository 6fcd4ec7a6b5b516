#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dcm/dataset.hpp"

namespace dcm {

/// Parameters shared by every measure of one report run. A single seed
/// drives all stochastic measures so a run is exactly reproducible.
struct RunParams {
    std::uint64_t seed = 1;
    double epsilon = 0.15;
    double svm_c = 1.0;
    bool impute = false;
    std::string encoding = "ordinal";
};

struct MeasureResult {
    bool ok = false;
    double value = 0.0;
    std::string error;
    std::vector<double> per_pair;  // one-versus-one breakdown when applicable
    double elapsed_seconds = 0.0;  // informational; never serialized
};

struct ComplexityReport {
    std::string dataset_id;
    std::size_t n = 0, m = 0, n_c = 0;
    RunParams params;
    std::vector<std::pair<std::string, MeasureResult>> measures;  // catalog order
    std::vector<std::string> warnings;

    const MeasureResult* find(const std::string& id) const;
    bool all_ok() const;
};

/// The full measure catalog, in report order.
const std::vector<std::string>& measure_catalog();

/// Group name -> member ids ("feature", "linearity", "neighborhood",
/// "network", "dimensionality", "balance"); "all" expands to the catalog.
std::vector<std::string> expand_selection(const std::vector<std::string>& selection);

/// Documented value bounds for one measure on a dataset of n examples and
/// m features (closed intervals; limit values are legal).
std::pair<double, double> measure_bounds(const std::string& id, std::size_t n, std::size_t m);

/// Compute the selected measures, reusing shared intermediates (numeric
/// encoding, distance matrix, PCA, per-pair linear models). Individual
/// measure failures are recorded without aborting the rest; values
/// outside their documented bounds are reported as failures.
ComplexityReport compute_all(const Dataset& d, const std::vector<std::string>& selection,
                             const RunParams& params = {});

/// Stable serializations: identical reports produce identical bytes.
std::string to_json(const ComplexityReport& report);
std::string to_csv(const ComplexityReport& report, bool with_header = true);
std::string to_table(const ComplexityReport& report);

}  // namespace dcm
