// Command-line front end: single-dataset measurement, corpus batch mode,
// and synthetic fixture generation.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dcm/dataset.hpp"
#include "dcm/distance.hpp"
#include "dcm/network.hpp"
#include "dcm/report.hpp"
#include "dcm/synth.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitMeasureFailed = 2;

bool parse_index(const std::string& s, std::size_t& out) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = std::stoul(s);
    return true;
}

dcm::Dataset load_with_label(const std::string& path, const std::string& label,
                             const dcm::IngestionOptions& options) {
    std::ifstream in(path);
    if (!in) throw dcm::ingest_error("cannot open file: " + path);
    std::string id = fs::path(path).stem().string();
    try {
        return dcm::load_dataset(in, label, options, id);
    } catch (const dcm::ingest_error&) {
        std::size_t idx;
        if (!parse_index(label, idx)) throw;
        std::ifstream retry(path);
        return dcm::load_dataset(retry, idx, options, id);
    }
}

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<std::string> make_selection(const std::string& measures,
                                        const std::string& groups) {
    std::vector<std::string> selection;
    for (const auto& m : split_csv_list(measures)) selection.push_back(m);
    for (const auto& g : split_csv_list(groups)) selection.push_back(g);
    if (selection.empty()) selection.push_back("all");
    return selection;
}

void write_output(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write to " + output_path);
        out << text;
    }
}

int run_measure(const std::string& input, const std::string& label,
                const std::string& measures, const std::string& groups,
                const dcm::RunParams& params, std::string format,
                const std::string& output_path, const std::string& dump_graph) {
    dcm::IngestionOptions opts;
    opts.impute = params.impute;
    dcm::Dataset dataset = load_with_label(input, label, opts);

    const auto selection = make_selection(measures, groups);
    const auto report = dcm::compute_all(dataset, selection, params);

    if (!dump_graph.empty()) {
        auto view = dataset.full_view();
        const auto graph =
            dcm::build_graph(view, dcm::distance_matrix(view), params.epsilon);
        std::ofstream out(dump_graph);
        if (!out) throw std::runtime_error("cannot write to " + dump_graph);
        dcm::write_edge_list(graph, out);
    }

    if (format.empty()) format = output_path.empty() ? "table" : "json";
    std::string text;
    if (format == "json")
        text = dcm::to_json(report);
    else if (format == "csv")
        text = dcm::to_csv(report);
    else
        text = dcm::to_table(report);
    write_output(text, output_path);

    return report.all_ok() ? kExitOk : kExitMeasureFailed;
}

struct BatchRow {
    std::string csv;
    bool ok = false;
    std::vector<std::string> warnings;
};

int run_batch(const std::string& dir, const std::string& label, const std::string& measures,
              const std::string& groups, const dcm::RunParams& params,
              const std::string& output_path, unsigned jobs) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const auto ext = entry.path().extension().string();
        if (ext == ".csv" || ext == ".tsv" || ext == ".txt")
            files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "error: no dataset files in " << dir << "\n";
        return kExitInputError;
    }

    const auto selection = make_selection(measures, groups);
    const auto ids = dcm::expand_selection(selection);  // fail fast on bad names

    auto process = [&](const std::string& path) {
        BatchRow row;
        std::string file_label = label;
        // Optional sidecar: "<file>.meta.json" may override the label column.
        const std::string sidecar = path + ".meta.json";
        if (fs::exists(sidecar)) {
            std::ifstream sc(sidecar);
            try {
                auto j = nlohmann::json::parse(sc);
                if (j.contains("label")) file_label = j["label"].get<std::string>();
            } catch (const std::exception& e) {
                row.warnings.push_back(path + ": bad sidecar: " + e.what());
            }
        }
        try {
            dcm::IngestionOptions opts;
            opts.impute = params.impute;
            dcm::Dataset dataset = load_with_label(path, file_label, opts);
            const auto report = dcm::compute_all(dataset, selection, params);
            row.csv = dcm::to_csv(report, false);
            row.ok = report.all_ok();
            for (const auto& [id, res] : report.measures)
                if (!res.ok) row.warnings.push_back(path + ": " + id + ": " + res.error);
        } catch (const std::exception& e) {
            // Partial row: id plus empty cells, so the matrix stays rectangular.
            std::ostringstream os;
            os << fs::path(path).stem().string() << ",,,";
            for (std::size_t k = 0; k < ids.size(); ++k) os << ',';
            os << '\n';
            row.csv = os.str();
            row.warnings.push_back(path + ": " + e.what());
        }
        return row;
    };

    std::vector<BatchRow> rows(files.size());
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        for (std::size_t k = 0; k < files.size(); ++k) rows[k] = process(files[k]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= files.size()) break;
                rows[k] = process(files[k]);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::ostringstream matrix;
    matrix << "dataset,n,m,n_c";
    for (const auto& id : ids) matrix << ',' << id;
    matrix << '\n';
    bool any_failed = false;
    for (const auto& row : rows) {
        matrix << row.csv;
        if (!row.ok) any_failed = true;
        for (const auto& w : row.warnings) std::cerr << "warning: " << w << "\n";
    }
    write_output(matrix.str(), output_path);
    return any_failed ? kExitMeasureFailed : kExitOk;
}

int run_synth(const std::string& fixture, std::size_t n, std::size_t classes, double sep,
              double spread, std::size_t dims, const std::string& radii_arg,
              std::uint64_t seed, const std::string& output_path) {
    dcm::Dataset dataset = [&]() {
        if (fixture == "clusters")
            return dcm::make_clusters(n, classes, sep, spread, seed, dims);
        if (fixture == "rings") {
            std::vector<double> radii;
            for (const auto& r : split_csv_list(radii_arg)) radii.push_back(std::stod(r));
            return dcm::make_rings(n, radii, seed);
        }
        if (fixture == "alternating-line") return dcm::make_alternating_line(n);
        throw std::invalid_argument("unknown fixture: " + fixture);
    }();

    std::ostringstream out;
    dcm::save_dataset(dataset, out);
    write_output(out.str(), output_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification complexity measures"};
    app.require_subcommand(1);

    dcm::RunParams params;
    std::string input, label = "class", measures, groups, format, output, dump_graph;
    unsigned jobs = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--label", label, "label column name or zero-based index")
            ->capture_default_str();
        cmd->add_option("--measures", measures, "comma-separated measure ids");
        cmd->add_option("--groups", groups, "comma-separated measure groups");
        cmd->add_option("--seed", params.seed, "seed for stochastic measures")
            ->envname("DCM_SEED")
            ->capture_default_str();
        cmd->add_option("--epsilon", params.epsilon, "epsilon-NN graph threshold")
            ->envname("DCM_EPSILON")
            ->capture_default_str();
        cmd->add_option("--svm-c", params.svm_c, "linear classifier cost parameter")
            ->capture_default_str();
        cmd->add_flag("--impute", params.impute, "impute missing cells (median/mode)");
        cmd->add_option("--output", output, "write result to this file");
    };

    auto* measure_cmd = app.add_subcommand("measure", "analyze one dataset");
    measure_cmd->add_option("input", input, "delimited-text dataset")->required();
    add_common(measure_cmd);
    measure_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    measure_cmd->add_option("--dump-graph", dump_graph,
                            "write the pruned epsilon-NN graph as an edge list");

    auto* batch_cmd = app.add_subcommand("batch", "measure a directory of datasets");
    batch_cmd->add_option("dir", input, "directory of delimited-text datasets")->required();
    add_common(batch_cmd);
    batch_cmd->add_option("--jobs", jobs, "parallel workers")->capture_default_str();

    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic dataset");
    std::string fixture;
    std::size_t n = 50, classes = 2, dims = 2;
    double sep = 5.0, spread = 1.0;
    std::string radii = "1,3";
    synth_cmd->add_option("fixture", fixture, "clusters | rings | alternating-line")
        ->required();
    synth_cmd->add_option("--n", n, "points per class (total for alternating-line)")
        ->capture_default_str();
    synth_cmd->add_option("--classes", classes, "number of classes")->capture_default_str();
    synth_cmd->add_option("--sep", sep, "cluster center separation")->capture_default_str();
    synth_cmd->add_option("--spread", spread, "cluster standard deviation")
        ->capture_default_str();
    synth_cmd->add_option("--dims", dims, "cluster dimensionality")->capture_default_str();
    synth_cmd->add_option("--radii", radii, "comma-separated ring radii")
        ->capture_default_str();
    synth_cmd->add_option("--seed", params.seed, "generator seed")
        ->envname("DCM_SEED")
        ->capture_default_str();
    synth_cmd->add_option("--output", output, "write dataset to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (measure_cmd->parsed())
            return run_measure(input, label, measures, groups, params, format, output,
                               dump_graph);
        if (batch_cmd->parsed())
            return run_batch(input, label, measures, groups, params, output, jobs);
        return run_synth(fixture, n, classes, sep, spread, dims, radii, params.seed, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
