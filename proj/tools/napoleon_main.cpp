#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "napoleon/alignment.hpp"
#include "napoleon/fermat.hpp"
#include "napoleon/frame.hpp"
#include "napoleon/records.hpp"
#include "napoleon/svg.hpp"
#include "napoleon/transforms.hpp"
#include "napoleon/verify.hpp"

namespace {

// Exit codes: 0 success, 1 verification failure, 2 I/O or parse trouble
// (including per-record failures, which are logged and skipped, never
// aborting the batch).
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitIoError = 2;

std::vector<napoleon::TripleRecord> load_records(const std::string& path,
                                                 bool& any_error) {
    std::vector<napoleon::RecordError> errors;
    std::vector<napoleon::TripleRecord> records =
        napoleon::read_triples(path, errors);
    for (const napoleon::RecordError& error : errors) {
        std::cerr << "[read] " << path << " " << error.message << "\n";
    }
    any_error = any_error || !errors.empty();
    return records;
}

std::string vertices_json(const napoleon::Triple& triple) {
    std::string out = "[";
    for (int i = 0; i < 3; ++i) {
        if (i > 0) out += ',';
        out += '[';
        for (Eigen::Index j = 0; j < triple.dim(); ++j) {
            if (j > 0) out += ',';
            out += napoleon::format_coordinate(triple[i][j]);
        }
        out += ']';
    }
    return out + "]";
}

std::string point_json(const napoleon::Point& point) {
    std::string out = "[";
    for (Eigen::Index j = 0; j < point.size(); ++j) {
        if (j > 0) out += ',';
        out += napoleon::format_coordinate(point[j]);
    }
    return out + "]";
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw napoleon::IoError("cannot open " + path + " for writing");
    return out;
}

struct CommonOptions {
    std::string input;
    std::string output;
    double tol = napoleon::kCollinearTol;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--input", opts.input, "line-delimited triple records")
        ->required();
    cmd->add_option("--output", opts.output, "output path")->required();
    cmd->add_option("--tol", opts.tol, "relative collinearity tolerance");
}

int run_transform(const CommonOptions& opts, const std::string& op,
                  napoleon::Kind kind) {
    bool any_error = false;
    const auto records = load_records(opts.input, any_error);
    const bool napoleon_op = op == "napoleon";
    const std::string suffix = std::string(napoleon_op ? ".N" : ".T") +
                               (kind == napoleon::Kind::inner ? "+" : "-");
    std::vector<napoleon::TripleRecord> results;
    results.reserve(records.size());
    for (const napoleon::TripleRecord& record : records) {
        try {
            napoleon::Triple image =
                napoleon_op ? napoleon::napoleon(record.triple, kind, opts.tol)
                            : napoleon::torricelli(record.triple, kind, opts.tol);
            results.emplace_back(record.id + suffix, std::move(image),
                                 record.tags);
        } catch (const napoleon::Error& e) {
            std::cerr << "[transform] record \"" << record.id
                      << "\" failed: " << e.what() << "\n";
            any_error = true;
        }
    }
    napoleon::write_triples(opts.output, results);
    return any_error ? kExitIoError : kExitOk;
}

int run_iterate(const CommonOptions& opts, napoleon::Kind kind, long long k) {
    bool any_error = false;
    const auto records = load_records(opts.input, any_error);
    const std::string suffix = std::string(kind == napoleon::Kind::inner
                                               ? ".N+^"
                                               : ".N-^") +
                               std::to_string(k);
    std::vector<napoleon::TripleRecord> results;
    results.reserve(records.size());
    for (const napoleon::TripleRecord& record : records) {
        try {
            if (kind == napoleon::Kind::inner && k >= 2) {
                std::cerr << "[iterate] record \"" << record.id
                          << "\": fast path, inner iterates collapse to the "
                             "centroid triple from k = 2 on\n";
            } else if (kind == napoleon::Kind::outer && k >= 3) {
                std::cerr << "[iterate] record \"" << record.id
                          << "\": fast path, outer iterates are 2-periodic, "
                             "using k = "
                          << 1 + (k - 1) % 2 << "\n";
            }
            results.emplace_back(
                record.id + suffix,
                napoleon::napoleon_iter(record.triple, kind, k, opts.tol),
                record.tags);
        } catch (const napoleon::Error& e) {
            std::cerr << "[iterate] record \"" << record.id
                      << "\" failed: " << e.what() << "\n";
            any_error = true;
        }
    }
    napoleon::write_triples(opts.output, results);
    return any_error ? kExitIoError : kExitOk;
}

int run_align(const CommonOptions& opts, bool with_oracle, int grid_n,
              int refine_iters) {
    bool any_error = false;
    const auto records = load_records(opts.input, any_error);
    std::ofstream out = open_output(opts.output);
    for (const napoleon::TripleRecord& record : records) {
        try {
            const napoleon::AlignmentResult best =
                napoleon::optimal_equilateral_alignment(record.triple, opts.tol);
            out << "{\"id\":" << nlohmann::json(record.id + ".A").dump()
                << ",\"dimension\":" << record.triple.dim()
                << ",\"vertices\":" << vertices_json(best.y)
                << ",\"objective\":" << napoleon::format_coordinate(best.objective)
                << ",\"branch_k\":" << best.branch_k
                << ",\"unique\":" << (best.unique ? "true" : "false")
                << ",\"inner_objective\":"
                << napoleon::format_coordinate(best.objective_pos)
                << ",\"outer_objective\":"
                << napoleon::format_coordinate(best.objective_neg);
            if (best.alternate_y) {
                out << ",\"alternate_vertices\":"
                    << vertices_json(*best.alternate_y);
            }
            if (with_oracle) {
                const napoleon::AlignmentResult oracle = napoleon::oracle_alignment(
                    record.triple, grid_n, refine_iters);
                out << ",\"oracle_objective\":"
                    << napoleon::format_coordinate(oracle.objective)
                    << ",\"oracle_gap\":"
                    << napoleon::format_coordinate(oracle.objective -
                                                   best.objective);
            }
            out << "}\n";
        } catch (const napoleon::Error& e) {
            std::cerr << "[align] record \"" << record.id
                      << "\" failed: " << e.what() << "\n";
            any_error = true;
        }
    }
    out.flush();
    if (!out) throw napoleon::IoError("failed while writing " + opts.output);
    return any_error ? kExitIoError : kExitOk;
}

int run_fermat(const CommonOptions& opts) {
    bool any_error = false;
    const auto records = load_records(opts.input, any_error);
    std::ofstream out = open_output(opts.output);
    for (const napoleon::TripleRecord& record : records) {
        try {
            const napoleon::Point point =
                napoleon::fermat_point(record.triple, opts.tol);
            double total = 0.0;
            for (int i = 0; i < 3; ++i) {
                total += (record.triple[i] - point).norm();
            }
            out << "{\"id\":" << nlohmann::json(record.id + ".F").dump()
                << ",\"dimension\":" << record.triple.dim()
                << ",\"point\":" << point_json(point) << ",\"sum_distances\":"
                << napoleon::format_coordinate(total) << "}\n";
        } catch (const napoleon::Error& e) {
            std::cerr << "[fermat] record \"" << record.id
                      << "\" failed: " << e.what() << "\n";
            any_error = true;
        }
    }
    out.flush();
    if (!out) throw napoleon::IoError("failed while writing " + opts.output);
    return any_error ? kExitIoError : kExitOk;
}

int run_verify(const napoleon::VerifyOptions& options,
               const std::string& report_path) {
    const napoleon::VerificationReport report =
        napoleon::run_verification(options, std::cerr);
    const std::string text = report.to_json();
    if (report_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out = open_output(report_path);
        out << text;
        out.flush();
        if (!out) {
            throw napoleon::IoError("failed while writing " + report_path);
        }
    }
    if (!report.all_passed()) {
        std::cerr << "[verify] FAILED\n";
        return kExitVerifyFailed;
    }
    std::cerr << "[verify] all checks passed\n";
    return kExitOk;
}

int run_plot(const CommonOptions& opts, const std::string& show) {
    bool any_error = false;
    const auto records = load_records(opts.input, any_error);
    const napoleon::PlotSelection selection = napoleon::PlotSelection::parse(show);
    napoleon::render_svg(opts.output, records, selection, std::cerr);
    return any_error ? kExitIoError : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Torricelli and Napoleon constructions, equilateral alignment and "
        "Fermat points for labeled triangles in R^d"};
    app.require_subcommand(1);

    const std::map<std::string, napoleon::Kind> kind_map{
        {"inner", napoleon::Kind::inner}, {"outer", napoleon::Kind::outer}};

    CommonOptions transform_opts;
    std::string transform_op;
    napoleon::Kind transform_kind = napoleon::Kind::outer;
    CLI::App* transform = app.add_subcommand(
        "transform", "apply a Torricelli or Napoleon transform per record");
    add_common(transform, transform_opts);
    transform->add_option("--op", transform_op, "torricelli or napoleon")
        ->required()
        ->check(CLI::IsMember({"torricelli", "napoleon"}));
    transform->add_option("--kind", transform_kind, "inner or outer")
        ->required()
        ->transform(CLI::CheckedTransformer(kind_map, CLI::ignore_case));

    CommonOptions iterate_opts;
    napoleon::Kind iterate_kind = napoleon::Kind::outer;
    long long iterate_k = 0;
    CLI::App* iterate =
        app.add_subcommand("iterate", "apply the k-fold Napoleon iterate");
    add_common(iterate, iterate_opts);
    iterate->add_option("--kind", iterate_kind, "inner or outer")
        ->required()
        ->transform(CLI::CheckedTransformer(kind_map, CLI::ignore_case));
    iterate->add_option("--k", iterate_k, "iteration count")
        ->required()
        ->check(CLI::NonNegativeNumber);

    CommonOptions align_opts;
    bool with_oracle = false;
    int align_grid_n = 64;
    int align_refine = 64;
    CLI::App* align = app.add_subcommand(
        "align", "nearest equilateral triple per record (closed form)");
    add_common(align, align_opts);
    align->add_flag("--with-oracle", with_oracle,
                    "also run the search oracle and report the gap");
    align->add_option("--grid-n", align_grid_n, "oracle theta-grid size");
    align->add_option("--refine-iters", align_refine,
                      "oracle golden-section steps");

    CommonOptions fermat_opts;
    CLI::App* fermat = app.add_subcommand(
        "fermat", "sum-of-distances minimizer per record");
    add_common(fermat, fermat_opts);

    napoleon::VerifyOptions verify_opts;
    std::string report_path;
    CLI::App* verify = app.add_subcommand(
        "verify", "run the invariant suite on generated instances");
    verify->add_option("--n", verify_opts.n, "random instance count")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--dim", verify_opts.dimension, "ambient dimension")
        ->check(CLI::Range(2, 64));
    verify->add_option("--seed", verify_opts.seed, "generator seed");
    verify->add_option("--grid-n", verify_opts.grid_n, "oracle theta-grid size");
    verify->add_option("--refine-iters", verify_opts.refine_iters,
                       "oracle golden-section steps");
    verify->add_option("--output", report_path, "report path (stdout if unset)");

    CommonOptions plot_opts;
    std::string show = "all";
    CLI::App* plot = app.add_subcommand("plot", "render records as SVG");
    add_common(plot, plot_opts);
    plot->add_option(
        "--show", show,
        "comma-separated: torricelli+, torricelli-, napoleon+, napoleon-, "
        "double, fermat, all");

    CLI11_PARSE(app, argc, argv);

    try {
        if (transform->parsed()) {
            return run_transform(transform_opts, transform_op, transform_kind);
        }
        if (iterate->parsed()) {
            return run_iterate(iterate_opts, iterate_kind, iterate_k);
        }
        if (align->parsed()) {
            return run_align(align_opts, with_oracle, align_grid_n, align_refine);
        }
        if (fermat->parsed()) return run_fermat(fermat_opts);
        if (verify->parsed()) return run_verify(verify_opts, report_path);
        if (plot->parsed()) return run_plot(plot_opts, show);
    } catch (const napoleon::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const napoleon::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}
