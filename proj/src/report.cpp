#include "dcm/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "dcm/balance.hpp"
#include "dcm/dimensionality.hpp"
#include "dcm/distance.hpp"
#include "dcm/feature.hpp"
#include "dcm/linearity.hpp"
#include "dcm/neighborhood.hpp"
#include "dcm/network.hpp"

namespace dcm {

namespace {

const std::vector<std::string> kCatalog = {
    "F1", "F1v", "F2", "F3", "F4", "L1", "L2", "L3", "N1", "N2",  "N3",
    "N4", "T1",  "LSC", "Density", "ClsCoef", "Hubs", "T2", "T3", "T4", "C1", "C2"};

const std::map<std::string, std::vector<std::string>> kGroups = {
    {"feature", {"F1", "F1v", "F2", "F3", "F4"}},
    {"linearity", {"L1", "L2", "L3"}},
    {"neighborhood", {"N1", "N2", "N3", "N4", "T1", "LSC"}},
    {"network", {"Density", "ClsCoef", "Hubs"}},
    {"dimensionality", {"T2", "T3", "T4"}},
    {"balance", {"C1", "C2"}},
};

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Lazily built intermediates shared across the measures of one run.
struct SharedContext {
    const Dataset& d;
    const RunParams& params;

    std::optional<DatasetView> full;
    std::optional<DistanceMatrix> dist;
    std::optional<PcaSummary> pca;
    std::optional<std::vector<DatasetView>> views;

    struct PairData {
        NumericMatrix X;
        std::vector<int> y;
        LinearModel model;
    };
    std::vector<std::optional<PairData>> pair_data;
    std::vector<std::string> warnings;

    explicit SharedContext(const Dataset& dataset, const RunParams& p)
        : d(dataset), params(p) {}

    const DatasetView& full_view() {
        if (!full) full = d.full_view();
        return *full;
    }
    const DistanceMatrix& distances() {
        if (!dist) dist = distance_matrix(full_view());
        return *dist;
    }
    const PcaSummary& pca_summary_ref() {
        if (!pca) pca = pca_summary(d);
        return *pca;
    }
    const std::vector<DatasetView>& ovo() {
        if (!views) {
            views = ovo_views(d);
            pair_data.resize(views->size());
        }
        return *views;
    }
    const PairData& pair(std::size_t idx) {
        ovo();
        if (!pair_data[idx]) {
            PairData pd;
            pd.X = to_numeric((*views)[idx]);
            pd.y = (*views)[idx].binary_labels();
            TrainOptions opt;
            opt.C = params.svm_c;
            pd.model = train_linear(pd.X, pd.y, opt);
            if (!pd.model.converged) {
                const auto [a, b] = *(*views)[idx].class_pair();
                warnings.push_back("linear solver did not converge for class pair (" +
                                   d.class_names()[static_cast<std::size_t>(a)] + ", " +
                                   d.class_names()[static_cast<std::size_t>(b)] + "); gap " +
                                   format_double(pd.model.duality_gap));
            }
            pair_data[idx] = std::move(pd);
        }
        return *pair_data[idx];
    }
};

double ovo_over_pairs(SharedContext& ctx, MeasureResult& res,
                      const std::function<double(const DatasetView&, std::size_t)>& fn) {
    const auto& views = ctx.ovo();
    std::vector<double> vals;
    vals.reserve(views.size());
    for (std::size_t k = 0; k < views.size(); ++k) vals.push_back(fn(views[k], k));
    res.per_pair = vals;
    return ovo_aggregate(vals);
}

double evaluate_measure(const std::string& id, SharedContext& ctx, MeasureResult& res) {
    const auto& d = ctx.d;
    if (id == "F1") return f1(d);
    if (id == "F1v")
        return ovo_over_pairs(ctx, res, [](const DatasetView& v, std::size_t) { return f1v(v); });
    if (id == "F2")
        return ovo_over_pairs(ctx, res, [](const DatasetView& v, std::size_t) { return f2(v); });
    if (id == "F3")
        return ovo_over_pairs(ctx, res, [](const DatasetView& v, std::size_t) { return f3(v); });
    if (id == "F4")
        return ovo_over_pairs(ctx, res, [](const DatasetView& v, std::size_t) { return f4(v); });
    if (id == "L1")
        return ovo_over_pairs(ctx, res, [&](const DatasetView&, std::size_t k) {
            return l1_from_model(ctx.pair(k).model);
        });
    if (id == "L2")
        return ovo_over_pairs(ctx, res, [&](const DatasetView&, std::size_t k) {
            const auto& pd = ctx.pair(k);
            return l2_from_model(pd.model, pd.X, pd.y);
        });
    if (id == "L3")
        return ovo_over_pairs(ctx, res, [&](const DatasetView&, std::size_t k) {
            const auto& pd = ctx.pair(k);
            return l3_from_model(pd.model, pd.X, pd.y, ctx.params.seed);
        });
    if (id == "N1") return n1(ctx.full_view(), ctx.distances());
    if (id == "N2") return n2(ctx.full_view(), ctx.distances());
    if (id == "N3") return n3(ctx.full_view(), ctx.distances());
    if (id == "N4") return n4(ctx.full_view(), ctx.params.seed);
    if (id == "T1") return t1(ctx.full_view(), ctx.distances());
    if (id == "LSC") return lsc(ctx.full_view(), ctx.distances());
    if (id == "Density")
        return density(build_graph(ctx.full_view(), ctx.distances(), ctx.params.epsilon));
    if (id == "ClsCoef")
        return clustering_coefficient(
            build_graph(ctx.full_view(), ctx.distances(), ctx.params.epsilon));
    if (id == "Hubs")
        return hub_score(build_graph(ctx.full_view(), ctx.distances(), ctx.params.epsilon));
    if (id == "T2") return t2(d);
    if (id == "T3") return t3(d, ctx.pca_summary_ref());
    if (id == "T4") return t4(d, ctx.pca_summary_ref());
    if (id == "C1") return c1(d);
    if (id == "C2") return c2(d);
    throw std::invalid_argument("unknown measure id: " + id);
}

}  // namespace

const MeasureResult* ComplexityReport::find(const std::string& id) const {
    for (const auto& [mid, res] : measures)
        if (mid == id) return &res;
    return nullptr;
}

bool ComplexityReport::all_ok() const {
    return std::all_of(measures.begin(), measures.end(),
                       [](const auto& m) { return m.second.ok; });
}

const std::vector<std::string>& measure_catalog() { return kCatalog; }

std::vector<std::string> expand_selection(const std::vector<std::string>& selection) {
    if (selection.empty()) throw std::invalid_argument("empty measure selection");
    std::vector<std::string> out;
    auto add = [&](const std::string& id) {
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    };
    for (const auto& item : selection) {
        if (item == "all") {
            for (const auto& id : kCatalog) add(id);
        } else if (auto git = kGroups.find(item); git != kGroups.end()) {
            for (const auto& id : git->second) add(id);
        } else if (std::find(kCatalog.begin(), kCatalog.end(), item) != kCatalog.end()) {
            add(item);
        } else {
            throw std::invalid_argument("unknown measure or group: " + item);
        }
    }
    // Report in catalog order regardless of request order.
    std::vector<std::string> ordered;
    for (const auto& id : kCatalog)
        if (std::find(out.begin(), out.end(), id) != out.end()) ordered.push_back(id);
    return ordered;
}

std::pair<double, double> measure_bounds(const std::string& id, std::size_t n,
                                         std::size_t m) {
    if (id == "T2" || id == "T3") return {0.0, static_cast<double>(m)};
    if (id == "LSC") return {0.0, 1.0 - 1.0 / static_cast<double>(n)};
    return {0.0, 1.0};
}

ComplexityReport compute_all(const Dataset& d, const std::vector<std::string>& selection,
                             const RunParams& params) {
    const auto ids = expand_selection(selection);  // throws before any compute

    ComplexityReport report;
    report.dataset_id = d.id();
    report.n = d.n();
    report.m = d.m();
    report.n_c = d.n_classes();
    report.params = params;
    report.warnings = d.warnings();

    std::size_t symbolic = 0;
    for (const auto& col : d.columns()) symbolic += !col.is_numeric();
    if (symbolic > 0)
        report.warnings.push_back(std::to_string(symbolic) +
                                  " symbolic feature(s) ordinal-encoded for numeric measures");

    SharedContext ctx(d, params);
    for (const auto& id : ids) {
        MeasureResult res;
        const auto start = std::chrono::steady_clock::now();
        try {
            double v = evaluate_measure(id, ctx, res);
            const auto [lo, hi] = measure_bounds(id, d.n(), d.m());
            constexpr double kTol = 1e-9;
            if (v >= lo - kTol && v <= hi + kTol) {
                res.value = std::clamp(v, lo, hi);
                res.ok = true;
            } else {
                res.error = "value " + format_double(v) + " outside documented bounds [" +
                            format_double(lo) + ", " + format_double(hi) + "]";
            }
        } catch (const std::exception& e) {
            res.error = e.what();
            res.per_pair.clear();
        }
        res.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.measures.emplace_back(id, std::move(res));
    }
    report.warnings.insert(report.warnings.end(), ctx.warnings.begin(), ctx.warnings.end());
    return report;
}

std::string to_json(const ComplexityReport& report) {
    nlohmann::ordered_json j;
    j["dataset"] = {{"id", report.dataset_id},
                    {"n", report.n},
                    {"m", report.m},
                    {"classes", report.n_c}};
    j["params"] = {{"seed", report.params.seed},
                   {"epsilon", report.params.epsilon},
                   {"svm_c", report.params.svm_c},
                   {"impute", report.params.impute},
                   {"encoding", report.params.encoding}};
    nlohmann::ordered_json measures;
    for (const auto& [id, res] : report.measures) {
        nlohmann::ordered_json entry;
        entry["status"] = res.ok ? "ok" : "failed";
        if (res.ok) {
            entry["value"] = res.value;
            if (!res.per_pair.empty()) entry["per_pair"] = res.per_pair;
            // C1 is reported imbalance-oriented; keep the plain normalized
            // class-proportion entropy alongside it.
            if (id == "C1") entry["normalized_entropy"] = 1.0 - res.value;
        } else {
            entry["error"] = res.error;
        }
        measures[id] = std::move(entry);
    }
    j["measures"] = std::move(measures);
    j["warnings"] = report.warnings;
    return j.dump(2) + "\n";
}

std::string to_csv(const ComplexityReport& report, bool with_header) {
    std::ostringstream out;
    if (with_header) {
        out << "dataset,n,m,n_c";
        for (const auto& [id, res] : report.measures) out << ',' << id;
        out << '\n';
    }
    out << report.dataset_id << ',' << report.n << ',' << report.m << ',' << report.n_c;
    for (const auto& [id, res] : report.measures) {
        out << ',';
        if (res.ok) out << format_double(res.value);  // failures leave an empty cell
    }
    out << '\n';
    return out.str();
}

std::string to_table(const ComplexityReport& report) {
    std::ostringstream out;
    out << "dataset: " << report.dataset_id << "  (n=" << report.n << ", m=" << report.m
        << ", classes=" << report.n_c << ")\n";
    out << "seed=" << report.params.seed << " epsilon=" << format_double(report.params.epsilon)
        << " svm_c=" << format_double(report.params.svm_c) << "\n\n";
    char line[120];
    std::snprintf(line, sizeof(line), "%-8s %-18s %s\n", "measure", "value", "status");
    out << line;
    for (const auto& [id, res] : report.measures) {
        std::snprintf(line, sizeof(line), "%-8s %-18s %s\n", id.c_str(),
                      res.ok ? format_double(res.value).c_str() : "-",
                      res.ok ? "ok" : res.error.c_str());
        out << line;
    }
    for (const auto& w : report.warnings) out << "warning: " << w << '\n';
    return out.str();
}

}  // namespace dcm
