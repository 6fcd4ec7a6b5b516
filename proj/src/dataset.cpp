#include "dcm/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace dcm {

namespace {

bool parse_finite_real(const std::string& s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    while (first != last && std::isspace(static_cast<unsigned char>(*first))) ++first;
    while (last != first && std::isspace(static_cast<unsigned char>(*(last - 1)))) --last;
    if (first == last) return false;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last) return false;
    return std::isfinite(out);
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Split one delimited line, honoring double-quoted fields.
std::vector<std::string> split_line(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == delim) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

struct RawTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> cells;  // [row][col]
};

RawTable read_table(std::istream& in, char delim_opt) {
    std::string line;
    if (!std::getline(in, line)) throw ingest_error("empty input: no header line");
    char delim = delim_opt;
    if (delim == '\0') delim = line.find('\t') != std::string::npos ? '\t' : ',';

    RawTable t;
    t.header = split_line(line, delim);
    for (auto& h : t.header) h = trim(h);
    if (t.header.empty()) throw ingest_error("empty header line");

    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto cells = split_line(line, delim);
        if (cells.size() != t.header.size())
            throw ingest_error("row " + std::to_string(lineno) + " has " +
                                   std::to_string(cells.size()) + " cells, expected " +
                                   std::to_string(t.header.size()),
                               lineno);
        t.cells.push_back(std::move(cells));
    }
    if (t.cells.empty()) throw ingest_error("no data rows");
    return t;
}

bool is_missing(const std::string& cell) {
    auto s = trim(cell);
    return s.empty() || s == "?" || s == "NA";
}

Dataset build_dataset(RawTable& t, std::size_t label_idx, const IngestionOptions& options,
                      const std::string& dataset_id) {
    const std::size_t n = t.cells.size();
    if (t.header.size() < 2)
        throw ingest_error("need at least one feature column besides the label");

    // Label column: categories in first-appearance order.
    std::vector<int> labels(n);
    std::vector<std::string> class_names;
    std::unordered_map<std::string, int> class_index;
    for (std::size_t i = 0; i < n; ++i) {
        const auto cell = trim(t.cells[i][label_idx]);
        if (cell.empty())
            throw ingest_error("missing label at row " + std::to_string(i + 2), i + 2, label_idx);
        auto it = class_index.find(cell);
        if (it == class_index.end()) {
            it = class_index.emplace(cell, static_cast<int>(class_names.size())).first;
            class_names.push_back(cell);
        }
        labels[i] = it->second;
    }

    std::vector<FeatureColumn> columns;
    for (std::size_t f = 0; f < t.header.size(); ++f) {
        if (f == label_idx) continue;
        FeatureColumn col;
        col.name = t.header[f];

        std::vector<bool> missing(n, false);
        bool numeric = true;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& cell = t.cells[i][f];
            if (is_missing(cell)) {
                missing[i] = true;
                if (!options.impute)
                    throw ingest_error("missing value at row " + std::to_string(i + 2) +
                                           ", column '" + col.name + "'",
                                       i + 2, f);
                continue;
            }
            double v;
            if (!parse_finite_real(cell, v)) numeric = false;
        }

        col.kind = numeric ? ColumnKind::numeric : ColumnKind::symbolic;
        col.values.resize(n);
        if (numeric) {
            std::vector<double> present;
            for (std::size_t i = 0; i < n; ++i) {
                if (missing[i]) continue;
                parse_finite_real(t.cells[i][f], col.values[i]);
                present.push_back(col.values[i]);
            }
            if (present.empty())
                throw ingest_error("column '" + col.name + "' has no usable values");
            std::sort(present.begin(), present.end());
            const double median = present.size() % 2 == 1
                                      ? present[present.size() / 2]
                                      : 0.5 * (present[present.size() / 2 - 1] +
                                               present[present.size() / 2]);
            for (std::size_t i = 0; i < n; ++i)
                if (missing[i]) col.values[i] = median;
        } else {
            // Ordinal codes in first-appearance order; mode imputation for gaps.
            std::unordered_map<std::string, int> code;
            std::vector<std::size_t> counts;
            for (std::size_t i = 0; i < n; ++i) {
                if (missing[i]) continue;
                const auto cell = trim(t.cells[i][f]);
                auto it = code.find(cell);
                if (it == code.end()) {
                    it = code.emplace(cell, static_cast<int>(col.categories.size())).first;
                    col.categories.push_back(cell);
                    counts.push_back(0);
                }
                col.values[i] = it->second;
                ++counts[it->second];
            }
            if (col.categories.empty())
                throw ingest_error("column '" + col.name + "' has no usable values");
            int mode = 0;
            for (std::size_t c = 1; c < counts.size(); ++c)
                if (counts[c] > counts[static_cast<std::size_t>(mode)]) mode = static_cast<int>(c);
            for (std::size_t i = 0; i < n; ++i)
                if (missing[i]) col.values[i] = mode;
        }
        columns.push_back(std::move(col));
    }

    return Dataset(std::move(columns), std::move(labels), std::move(class_names), dataset_id);
}

}  // namespace

Dataset::Dataset(std::vector<FeatureColumn> columns, std::vector<int> labels,
                 std::vector<std::string> class_names, std::string id)
    : columns_(std::move(columns)),
      labels_(std::move(labels)),
      class_names_(std::move(class_names)),
      id_(std::move(id)) {
    const std::size_t n = labels_.size();
    if (n < 2) throw std::invalid_argument("dataset needs at least 2 examples");
    if (columns_.empty()) throw std::invalid_argument("dataset needs at least 1 feature");
    if (class_names_.empty()) throw std::invalid_argument("dataset needs at least 1 class");

    class_counts_.assign(class_names_.size(), 0);
    for (int y : labels_) {
        if (y < 0 || static_cast<std::size_t>(y) >= class_names_.size())
            throw std::invalid_argument("label index out of range");
        ++class_counts_[static_cast<std::size_t>(y)];
    }
    for (std::size_t c = 0; c < class_counts_.size(); ++c)
        if (class_counts_[c] == 0)
            throw std::invalid_argument("class '" + class_names_[c] + "' has no examples");

    for (auto& col : columns_) {
        if (col.values.size() != n)
            throw std::invalid_argument("column '" + col.name + "' length mismatch");
        if (col.is_numeric()) {
            col.min = std::numeric_limits<double>::infinity();
            col.max = -std::numeric_limits<double>::infinity();
            for (double v : col.values) {
                if (!std::isfinite(v))
                    throw std::invalid_argument("non-finite value in numeric column '" +
                                                col.name + "'");
                col.min = std::min(col.min, v);
                col.max = std::max(col.max, v);
            }
        } else {
            for (double v : col.values) {
                auto c = static_cast<long long>(v);
                if (v != static_cast<double>(c) || c < 0 ||
                    static_cast<std::size_t>(c) >= col.categories.size())
                    throw std::invalid_argument("bad category code in column '" + col.name + "'");
            }
        }
    }

    if (class_names_.size() == 1)
        warnings_.push_back("label column has a single distinct class");
}

DatasetView Dataset::full_view() const {
    std::vector<std::size_t> rows(n());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return DatasetView(*this, std::move(rows));
}

DatasetView::DatasetView(const Dataset& base, std::vector<std::size_t> rows,
                         std::optional<std::pair<int, int>> class_pair)
    : base_(&base), rows_(std::move(rows)), class_pair_(class_pair) {
    std::vector<bool> seen(base.n(), false);
    for (std::size_t r : rows_) {
        if (r >= base.n()) throw std::invalid_argument("view row out of range");
        if (seen[r]) throw std::invalid_argument("duplicate row in view");
        seen[r] = true;
        if (class_pair_) {
            int y = base.label(r);
            if (y != class_pair_->first && y != class_pair_->second)
                throw std::invalid_argument("view row label outside its class pair");
        }
    }
}

std::vector<int> DatasetView::labels() const {
    std::vector<int> out(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) out[k] = label(k);
    return out;
}

std::vector<int> DatasetView::binary_labels() const {
    if (!class_pair_) throw measure_error("binary labels require a class-pair view");
    std::vector<int> out(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k)
        out[k] = label(k) == class_pair_->first ? -1 : +1;
    return out;
}

std::vector<int> DatasetView::classes_present() const {
    std::vector<bool> seen(base_->n_classes(), false);
    for (std::size_t k = 0; k < rows_.size(); ++k) seen[static_cast<std::size_t>(label(k))] = true;
    std::vector<int> out;
    for (std::size_t c = 0; c < seen.size(); ++c)
        if (seen[c]) out.push_back(static_cast<int>(c));
    return out;
}

Dataset load_dataset(std::istream& in, const std::string& label_column,
                     const IngestionOptions& options, const std::string& dataset_id) {
    RawTable t = read_table(in, options.delimiter);
    auto it = std::find(t.header.begin(), t.header.end(), label_column);
    if (it == t.header.end())
        throw ingest_error("label column '" + label_column + "' not found in header");
    return build_dataset(t, static_cast<std::size_t>(it - t.header.begin()), options, dataset_id);
}

Dataset load_dataset(std::istream& in, std::size_t label_index,
                     const IngestionOptions& options, const std::string& dataset_id) {
    RawTable t = read_table(in, options.delimiter);
    if (label_index >= t.header.size())
        throw ingest_error("label column index " + std::to_string(label_index) +
                           " out of range (" + std::to_string(t.header.size()) + " columns)");
    return build_dataset(t, label_index, options, dataset_id);
}

Dataset load_dataset_file(const std::string& path, const std::string& label_column,
                          const IngestionOptions& options) {
    std::ifstream in(path);
    if (!in) throw ingest_error("cannot open file: " + path);
    std::string id = path;
    if (auto pos = id.find_last_of("/\\"); pos != std::string::npos) id = id.substr(pos + 1);
    if (auto pos = id.find_last_of('.'); pos != std::string::npos) id = id.substr(0, pos);
    return load_dataset(in, label_column, options, id);
}

namespace {

std::string format_value(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string quote_if_needed(const std::string& cell, char delimiter) {
    if (cell.find(delimiter) == std::string::npos && cell.find('"') == std::string::npos)
        return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void save_dataset(const Dataset& d, std::ostream& out, char delimiter) {
    for (const auto& col : d.columns()) out << quote_if_needed(col.name, delimiter) << delimiter;
    out << "class\n";
    for (std::size_t i = 0; i < d.n(); ++i) {
        for (const auto& col : d.columns()) {
            if (col.is_numeric())
                out << format_value(col.values[i]);
            else
                out << quote_if_needed(col.categories[static_cast<std::size_t>(col.values[i])],
                                       delimiter);
            out << delimiter;
        }
        out << quote_if_needed(d.class_names()[static_cast<std::size_t>(d.label(i))], delimiter)
            << "\n";
    }
}

NumericMatrix to_numeric(const DatasetView& view) {
    const std::size_t n = view.size(), m = view.m();
    NumericMatrix out;
    out.rows = n;
    out.cols = m;
    out.data.assign(n * m, 0.0);
    std::vector<double> raw(n);
    for (std::size_t f = 0; f < m; ++f) {
        const auto& col = view.base().column(f);
        if (col.is_numeric()) {
            for (std::size_t k = 0; k < n; ++k) raw[k] = view.value(k, f);
        } else {
            // Re-derive ordinal codes by first appearance within the view.
            std::unordered_map<int, int> remap;
            for (std::size_t k = 0; k < n; ++k) {
                int global = static_cast<int>(view.value(k, f));
                auto it = remap.find(global);
                if (it == remap.end())
                    it = remap.emplace(global, static_cast<int>(remap.size())).first;
                raw[k] = it->second;
            }
        }
        double lo = raw[0], hi = raw[0];
        for (double v : raw) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        const double range = hi - lo;
        for (std::size_t k = 0; k < n; ++k)
            out.at(k, f) = range > 0.0 ? (raw[k] - lo) / range : 0.0;
    }
    return out;
}

NumericMatrix to_numeric(const Dataset& d) { return to_numeric(d.full_view()); }

std::vector<DatasetView> ovo_views(const Dataset& d) {
    const int nc = static_cast<int>(d.n_classes());
    if (nc < 2) throw measure_error("one-versus-one decomposition needs at least 2 classes");
    std::vector<DatasetView> views;
    views.reserve(static_cast<std::size_t>(nc) * (nc - 1) / 2);
    for (int a = 0; a < nc; ++a) {
        for (int b = a + 1; b < nc; ++b) {
            std::vector<std::size_t> rows;
            for (std::size_t i = 0; i < d.n(); ++i)
                if (d.label(i) == a || d.label(i) == b) rows.push_back(i);
            views.emplace_back(d, std::move(rows), std::make_pair(a, b));
        }
    }
    return views;
}

double ovo_aggregate(const std::vector<double>& values) {
    if (values.empty()) throw measure_error("cannot aggregate an empty value sequence");
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

}  // namespace dcm
