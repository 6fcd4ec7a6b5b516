#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcm {

/// Raised when delimited-text ingestion fails; carries the offending location.
class ingest_error : public std::runtime_error {
public:
    ingest_error(std::string msg, std::size_t row = 0, std::size_t col = 0)
        : std::runtime_error(std::move(msg)), row_(row), col_(col) {}
    std::size_t row() const { return row_; }
    std::size_t col() const { return col_; }

private:
    std::size_t row_, col_;
};

/// Raised when a measure's preconditions are not met (e.g. single-class data).
class measure_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ColumnKind { numeric, symbolic };

/// One typed feature column. Numeric columns store raw values; symbolic
/// columns store category codes (index into `categories`).
struct FeatureColumn {
    std::string name;
    ColumnKind kind = ColumnKind::numeric;
    std::vector<double> values;           // length n; codes for symbolic
    double min = 0.0, max = 0.0;          // observed range (numeric only)
    std::vector<std::string> categories;  // symbolic only, first-appearance order

    bool is_numeric() const { return kind == ColumnKind::numeric; }
};

class DatasetView;

/// Immutable labeled table. Construction validates every invariant
/// (column lengths, finite numerics, label counts); afterwards the
/// object is safe to share across threads.
class Dataset {
public:
    Dataset(std::vector<FeatureColumn> columns,
            std::vector<int> labels,
            std::vector<std::string> class_names,
            std::string id = "dataset");

    std::size_t n() const { return labels_.size(); }
    std::size_t m() const { return columns_.size(); }
    std::size_t n_classes() const { return class_names_.size(); }

    const std::vector<FeatureColumn>& columns() const { return columns_; }
    const FeatureColumn& column(std::size_t f) const { return columns_.at(f); }
    const std::vector<int>& labels() const { return labels_; }
    int label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& class_names() const { return class_names_; }
    const std::vector<std::size_t>& class_counts() const { return class_counts_; }
    const std::string& id() const { return id_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    DatasetView full_view() const;

private:
    std::vector<FeatureColumn> columns_;
    std::vector<int> labels_;
    std::vector<std::string> class_names_;
    std::vector<std::size_t> class_counts_;
    std::string id_;
    std::vector<std::string> warnings_;
};

/// Read-only row subset of a Dataset, optionally restricted to one class
/// pair (used by the one-versus-one decomposition).
class DatasetView {
public:
    DatasetView(const Dataset& base,
                std::vector<std::size_t> rows,
                std::optional<std::pair<int, int>> class_pair = std::nullopt);

    const Dataset& base() const { return *base_; }
    std::size_t size() const { return rows_.size(); }
    std::size_t m() const { return base_->m(); }
    std::size_t row(std::size_t k) const { return rows_[k]; }
    const std::vector<std::size_t>& rows() const { return rows_; }
    int label(std::size_t k) const { return base_->label(rows_[k]); }
    double value(std::size_t k, std::size_t f) const {
        return base_->column(f).values[rows_[k]];
    }
    const std::optional<std::pair<int, int>>& class_pair() const { return class_pair_; }

    /// Labels of the view rows. For class-pair views `binary_labels`
    /// maps the lower class of the pair to -1 and the higher to +1.
    std::vector<int> labels() const;
    std::vector<int> binary_labels() const;

    /// Distinct class ids present in the view, ascending.
    std::vector<int> classes_present() const;

private:
    const Dataset* base_;
    std::vector<std::size_t> rows_;
    std::optional<std::pair<int, int>> class_pair_;
};

/// Dense numeric encoding of a (view of a) dataset, per-column min-max
/// scaled to [0,1]. Constant columns map to all-zeros.
struct NumericMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<double> data;  // row-major

    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const double* row_ptr(std::size_t r) const { return data.data() + r * cols; }
};

struct IngestionOptions {
    bool impute = false;       // median (numeric) / mode (symbolic) for missing cells
    char delimiter = '\0';     // '\0' = auto-detect from the header line
};

/// Parse header-bearing delimited text (comma or tab). The label column is
/// selected by name or by zero-based index. Column kinds are inferred:
/// numeric iff every non-missing cell parses as a finite real.
Dataset load_dataset(std::istream& in, const std::string& label_column,
                     const IngestionOptions& options = {},
                     const std::string& dataset_id = "dataset");
Dataset load_dataset(std::istream& in, std::size_t label_index,
                     const IngestionOptions& options = {},
                     const std::string& dataset_id = "dataset");
Dataset load_dataset_file(const std::string& path, const std::string& label_column,
                          const IngestionOptions& options = {});

/// Serialize back to delimited text (label appended as last column).
/// Reloading the output yields identical columns, labels and counts.
void save_dataset(const Dataset& d, std::ostream& out, char delimiter = ',');

/// Min-max encode a view: numeric columns scaled over the view's rows,
/// symbolic columns ordinal-coded by first appearance then scaled the
/// same way. Output entries are always in [0,1].
NumericMatrix to_numeric(const DatasetView& view);
NumericMatrix to_numeric(const Dataset& d);

/// All n_c(n_c-1)/2 unordered class-pair views. Requires n_c >= 2.
std::vector<DatasetView> ovo_views(const Dataset& d);

/// Arithmetic mean of per-subproblem values. Requires a non-empty input.
double ovo_aggregate(const std::vector<double>& values);

}  // namespace dcm
