// igs — invertible Gram-Schmidt toolkit.
//
// Subcommands: ortho, inverse, roundtrip, po, bench, compress, gen.
// Exit codes: 0 success, 2 usage error, 3 dependent input, 4 I/O or
// format error.  Output files depend only on the flags (and --seed), so
// repeated invocations are byte-identical.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "igs/gram_schmidt.hpp"
#include "igs/io.hpp"
#include "igs/lab.hpp"
#include "igs/metrics.hpp"

namespace {

namespace fs = std::filesystem;
using namespace igs;

/// Thrown by subcommand bodies for problems that are the caller's fault
/// but that CLI11 cannot see (e.g. a method/format combination).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string brief(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

Method parse_method(const std::string& name) {
    const auto method = method_from_string(name);
    if (!method) {
        throw UsageError("unknown method '" + name + "'");
    }
    return *method;
}

void require_egsp_for_tensor(Method method) {
    if (method != Method::egsp) {
        throw UsageError("tensor inputs support only --method egsp");
    }
}

/// ReportFile row for a one-shot (non-benchmark) run.  A tensor block is a
/// single vector of dimension rows*block_cols under the Frobenius inner
/// product, so M reports the flattened dimension.
lab::ExperimentRow make_row(std::size_t m, std::size_t n, double max_po, MetricsReport rep,
                            Method method) {
    lab::ExperimentRow row{};
    row.m = m;
    row.n = n;
    row.max_po = max_po;
    row.mae = rep.mae;
    row.mse = rep.mse;
    row.psnr = rep.psnr;
    row.method = method;
    row.seed = 0;
    return row;
}

struct OrthoArgs {
    std::string input, output_u, output_r;
    std::string method = "egsp";
    double tol = 1e-12;
};

void run_ortho(const OrthoArgs& a) {
    const Method method = parse_method(a.method);
    const Tolerance tol{a.tol};
    double max_po = 0.0;
    if (io::looks_like_tensor(a.input)) {
        require_egsp_for_tensor(method);
        const BlockSet v = io::read_tensor(a.input);
        const GsResult2d result = egsp2d(v, tol);
        max_po = po(result.u).max_abs();
        io::write_tensor(result.u, a.output_u);
        io::write_coeffs(result.r, a.output_r);
    } else {
        const VectorSet v = io::read_matrix(a.input);
        const GsResult result = forward(method, v, tol);
        max_po = po(result.u).max_abs();
        io::write_matrix(result.u, a.output_u);
        io::write_coeffs(result.r, a.output_r);
    }
    std::cout << "max_po = " << brief(max_po) << "\n";
}

struct InverseArgs {
    std::string input, coeffs, output;
    std::string method = "egsp";
};

void run_inverse(const InverseArgs& a) {
    const Method method = parse_method(a.method);
    const PackedCoefficients r = io::read_coeffs(a.coeffs);
    if (io::looks_like_tensor(a.input)) {
        require_egsp_for_tensor(method);
        const BlockSet u = io::read_tensor(a.input);
        io::write_tensor(iegsp2d(u, r), a.output);
    } else {
        const VectorSet u = io::read_matrix(a.input);
        io::write_matrix(inverse(method, u, r), a.output);
    }
}

struct RoundtripArgs {
    std::string input, output;
    std::string method = "egsp";
    double tol = 1e-12;
};

void run_roundtrip(const RoundtripArgs& a) {
    const Method method = parse_method(a.method);
    const Tolerance tol{a.tol};
    lab::ExperimentRow row{};
    if (io::looks_like_tensor(a.input)) {
        require_egsp_for_tensor(method);
        const BlockSet v = io::read_tensor(a.input);
        const GsResult2d fwd = egsp2d(v, tol);
        const BlockSet v_hat = iegsp2d(fwd.u, fwd.r);
        row = make_row(v.rows() * v.block_cols(), v.count(), po(fwd.u).max_abs(),
                       metrics(v, v_hat), method);
    } else {
        const VectorSet v = io::read_matrix(a.input);
        const GsResult fwd = forward(method, v, tol);
        const VectorSet v_hat = inverse(method, fwd.u, fwd.r);
        row = make_row(v.rows(), v.cols(), po(fwd.u).max_abs(), metrics(v, v_hat), method);
    }
    io::write_report(row, a.output);
    std::cout << "max_po = " << brief(row.max_po) << ", mae = " << brief(row.mae)
              << ", mse = " << brief(row.mse) << ", psnr = " << brief(row.psnr) << "\n";
}

struct PoArgs {
    std::string input, output;
};

void run_po(const PoArgs& a) {
    const POVector w = io::looks_like_tensor(a.input) ? po(io::read_tensor(a.input))
                                                      : po(io::read_matrix(a.input));
    io::write_plot(w, a.output);
    std::cout << "max_po = " << brief(w.max_abs()) << "\n";
}

struct BenchArgs {
    std::size_t m = 20;
    std::vector<std::size_t> n_list = {5, 10, 15, 20};
    std::uint64_t seed = 0;
    std::string method = "egsp";
    std::string out_dir;
};

void run_bench(const BenchArgs& a) {
    lab::ExperimentConfig cfg;
    cfg.m = a.m;
    cfg.n_list = a.n_list;
    cfg.seed = a.seed;
    cfg.method = parse_method(a.method);

    const auto table1 = lab::run_table1(cfg);
    const auto table2 = lab::run_table2(cfg);

    fs::create_directories(a.out_dir);
    for (std::size_t i = 0; i < table2.size(); ++i) {
        const std::string tag = "_n" + std::to_string(table2[i].n) + ".txt";
        io::write_report(table2[i], fs::path(a.out_dir) / ("report" + tag));
        io::write_plot(table1[i].po, fs::path(a.out_dir) / ("plot" + tag));
        std::cout << "N = " << table2[i].n << ": max_po = " << brief(table2[i].max_po)
                  << ", psnr = " << brief(table2[i].psnr) << "\n";
    }
}

struct CompressArgs {
    std::string input, output;
    std::size_t keep = 0;
    std::string method = "egsp";
    double tol = 1e-12;
};

void run_compress(const CompressArgs& a) {
    const Method method = parse_method(a.method);
    const Tolerance tol{a.tol};
    fs::path report_path(a.output);
    report_path += ".report";

    // The quality baseline is the full (keep = N) reconstruction, so the
    // report measures pruning loss alone and keep = N yields PSNR = inf.
    // It differs from the raw input only by round-trip rounding (~1e-16
    // relative), far below any lossy keep's error.
    lab::ExperimentRow row{};
    if (io::looks_like_tensor(a.input)) {
        require_egsp_for_tensor(method);
        const BlockSet v = io::read_tensor(a.input);
        const GsResult2d fwd = egsp2d(v, tol);
        const BlockSet v_hat = prune_reconstruct(fwd.u, fwd.r, a.keep);
        io::write_tensor(v_hat, a.output);
        row = make_row(v.rows() * v.block_cols(), v.count(), po(fwd.u).max_abs(),
                       metrics(iegsp2d(fwd.u, fwd.r), v_hat), method);
    } else {
        const VectorSet v = io::read_matrix(a.input);
        const GsResult fwd = forward(method, v, tol);
        const VectorSet v_hat = prune_reconstruct(fwd.u, fwd.r, a.keep);
        io::write_matrix(v_hat, a.output);
        row = make_row(v.rows(), v.cols(), po(fwd.u).max_abs(),
                       metrics(inverse(method, fwd.u, fwd.r), v_hat), method);
    }
    io::write_report(row, report_path);
    std::cout << "keep = " << a.keep << ": mae = " << brief(row.mae) << ", mse = "
              << brief(row.mse) << ", psnr = " << brief(row.psnr) << "\n";
}

struct GenArgs {
    std::size_t m = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string output;
};

void run_gen(const GenArgs& a) {
    io::write_matrix(lab::random_basis(a.m, a.n, a.seed), a.output);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invertible Gram-Schmidt toolkit"};
    app.require_subcommand(1);

    const auto method_names = CLI::IsMember({"gsp", "egsp", "mgs"});

    OrthoArgs ortho_args;
    CLI::App* ortho = app.add_subcommand(
        "ortho", "Orthogonalize a matrix (or tensor) and store the coefficients");
    ortho->add_option("--input", ortho_args.input, "input matrix or tensor file")->required();
    ortho->add_option("--output-u", ortho_args.output_u, "orthogonal set output")->required();
    ortho->add_option("--output-r", ortho_args.output_r, "packed coefficient output")->required();
    ortho->add_option("--method", ortho_args.method, "forward method")->check(method_names);
    ortho->add_option("--tol", ortho_args.tol, "relative dependence guard");
    ortho->callback([&] { run_ortho(ortho_args); });

    InverseArgs inverse_args;
    CLI::App* inverse = app.add_subcommand(
        "inverse", "Reconstruct the original set from u and the coefficients");
    inverse->add_option("--input", inverse_args.input, "orthogonal set file")->required();
    inverse->add_option("--coeffs", inverse_args.coeffs, "packed coefficient file")->required();
    inverse->add_option("--output", inverse_args.output, "reconstruction output")->required();
    inverse->add_option("--method", inverse_args.method, "forward method to invert")
        ->check(method_names);
    inverse->callback([&] { run_inverse(inverse_args); });

    RoundtripArgs roundtrip_args;
    CLI::App* roundtrip =
        app.add_subcommand("roundtrip", "Forward then inverse; write a quality report");
    roundtrip->add_option("--input", roundtrip_args.input, "input matrix or tensor file")
        ->required();
    roundtrip->add_option("--output", roundtrip_args.output, "report output")->required();
    roundtrip->add_option("--method", roundtrip_args.method, "forward method")
        ->check(method_names);
    roundtrip->add_option("--tol", roundtrip_args.tol, "relative dependence guard");
    roundtrip->callback([&] { run_roundtrip(roundtrip_args); });

    PoArgs po_args;
    CLI::App* po_cmd =
        app.add_subcommand("po", "Write the pairwise inner products of a stored set");
    po_cmd->add_option("--input", po_args.input, "matrix or tensor file")->required();
    po_cmd->add_option("--output", po_args.output, "plot output")->required();
    po_cmd->callback([&] { run_po(po_args); });

    BenchArgs bench_args;
    CLI::App* bench =
        app.add_subcommand("bench", "Random-basis benchmark: reports and plots per N");
    bench->add_option("--m", bench_args.m, "vector dimension");
    bench->add_option("--n-list", bench_args.n_list, "comma-separated vector counts")
        ->delimiter(',');
    bench->add_option("--seed", bench_args.seed, "base seed");
    bench->add_option("--method", bench_args.method, "forward method")->check(method_names);
    bench->add_option("--out-dir", bench_args.out_dir, "output directory")->required();
    bench->callback([&] { run_bench(bench_args); });

    CompressArgs compress_args;
    CLI::App* compress = app.add_subcommand(
        "compress", "Lossy reconstruction keeping the first K components");
    compress->add_option("--input", compress_args.input, "input matrix or tensor file")
        ->required();
    compress->add_option("--keep", compress_args.keep, "components to keep (1..N)")->required();
    compress->add_option("--output", compress_args.output, "reconstruction output")->required();
    compress->add_option("--method", compress_args.method, "forward method")->check(method_names);
    compress->add_option("--tol", compress_args.tol, "relative dependence guard");
    compress->callback([&] { run_compress(compress_args); });

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Generate a uniform random matrix");
    gen->add_option("--m", gen_args.m, "rows")->required();
    gen->add_option("--n", gen_args.n, "columns")->required();
    gen->add_option("--seed", gen_args.seed, "seed");
    gen->add_option("--output", gen_args.output, "matrix output")->required();
    gen->callback([&] { run_gen(gen_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const DependenceError& e) {
        std::cerr << "igs: error: " << e.what() << "\n";
        return 3;
    } catch (const io::IoError& e) {
        std::cerr << "igs: error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "igs: error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "igs: error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "igs: error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
