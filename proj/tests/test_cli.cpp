// Drives the installed CLI binary end to end.  argv[1] is the binary,
// argv[2] a scratch directory this suite may wipe.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "igs/gram_schmidt.hpp"
#include "igs/io.hpp"
#include "igs/lab.hpp"
#include "igs/metrics.hpp"

using namespace igs;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_scratch;

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    const fs::path out = g_scratch / "last_stdout.txt";
    const fs::path err = g_scratch / "last_stderr.txt";
    const std::string cmd =
        g_cli + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    const int code = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

fs::path at(const std::string& name) { return g_scratch / name; }

double max_abs_diff(const VectorSet& a, const VectorSet& b) {
    REQUIRE(a.rows() == b.rows());
    REQUIRE(a.cols() == b.cols());
    double best = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i)
        best = std::max(best, std::abs(a.values()[i] - b.values()[i]));
    return best;
}

}  // namespace

TEST_CASE("gen, ortho and inverse round-trip a random matrix") {
    const std::string v = at("v.txt").string();
    const std::string u = at("u.txt").string();
    const std::string r = at("r.txt").string();
    const std::string vh = at("vh.txt").string();

    CHECK(run_cli("gen --m 20 --n 10 --seed 5 --output " + v).code == 0);
    const RunResult ortho = run_cli("ortho --input " + v + " --output-u " + u +
                                    " --output-r " + r);
    CHECK(ortho.code == 0);
    CHECK(ortho.out.find("max_po") != std::string::npos);
    CHECK(run_cli("inverse --input " + u + " --coeffs " + r + " --output " + vh).code == 0);

    const VectorSet original = io::read_matrix(v);
    const VectorSet rebuilt = io::read_matrix(vh);
    CHECK(max_abs_diff(original, rebuilt) <= 1e-12);

    const POVector w = po(io::read_matrix(u));
    CHECK(w.max_abs() <= 1e-13);
    CHECK(io::read_coeffs(r).n_vectors() == 10);
}

TEST_CASE("gen output is byte-deterministic") {
    CHECK(run_cli("gen --m 8 --n 8 --seed 3 --output " + at("g1.txt").string()).code == 0);
    CHECK(run_cli("gen --m 8 --n 8 --seed 3 --output " + at("g2.txt").string()).code == 0);
    CHECK(slurp(at("g1.txt")) == slurp(at("g2.txt")));
    CHECK(run_cli("gen --m 8 --n 8 --seed 4 --output " + at("g3.txt").string()).code == 0);
    CHECK(slurp(at("g1.txt")) != slurp(at("g3.txt")));
}

TEST_CASE("identity input produces zero coefficients") {
    io::write_matrix(VectorSet::from_columns({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                     at("eye.txt"));
    CHECK(run_cli("ortho --input " + at("eye.txt").string() + " --output-u " +
                  at("eye_u.txt").string() + " --output-r " + at("eye_r.txt").string())
              .code == 0);
    const PackedCoefficients r = io::read_coeffs(at("eye_r.txt"));
    REQUIRE(r.size() == 3);
    for (double x : r.values()) CHECK(x == 0.0);
    CHECK(slurp(at("eye_r.txt")) == "n_vectors 3\n0\n0\n0\n");
}

TEST_CASE("the two-vector hand example stores coefficient 1.0") {
    io::write_matrix(VectorSet::from_columns({{1, 0}, {1, 1}}), at("hand.txt"));
    for (const char* method : {"gsp", "egsp", "mgs"}) {
        CHECK(run_cli("ortho --method " + std::string(method) + " --input " +
                      at("hand.txt").string() + " --output-u " + at("hand_u.txt").string() +
                      " --output-r " + at("hand_r.txt").string())
                  .code == 0);
        CHECK(io::read_matrix(at("hand_u.txt")) ==
              VectorSet::from_columns({{1, 0}, {0, 1}}));
        const PackedCoefficients r = io::read_coeffs(at("hand_r.txt"));
        REQUIRE(r.size() == 1);
        CHECK(r.values()[0] == 1.0);
    }
}

TEST_CASE("collinear input exits 3 and names column 2") {
    io::write_matrix(VectorSet::from_columns({{1, 0}, {2, 0}}), at("dep.txt"));
    const RunResult result = run_cli("ortho --input " + at("dep.txt").string() +
                                     " --output-u " + at("dep_u.txt").string() +
                                     " --output-r " + at("dep_r.txt").string());
    CHECK(result.code == 3);
    CHECK(result.err.find("column 2") != std::string::npos);
    CHECK(!fs::exists(at("dep_u.txt")));  // nothing written on failure
}

TEST_CASE("roundtrip writes a quality report") {
    CHECK(run_cli("gen --m 20 --n 10 --seed 8 --output " + at("rt.txt").string()).code == 0);
    CHECK(run_cli("roundtrip --input " + at("rt.txt").string() + " --output " +
                  at("rt_report.txt").string())
              .code == 0);
    const lab::ExperimentRow row = io::read_report(at("rt_report.txt"));
    CHECK(row.m == 20);
    CHECK(row.n == 10);
    CHECK(row.method == Method::egsp);
    CHECK(row.max_po <= 1e-13);
    CHECK(row.psnr >= 250.0);
}

TEST_CASE("po writes the plot of a stored set") {
    CHECK(run_cli("gen --m 10 --n 6 --seed 9 --output " + at("po_v.txt").string()).code == 0);
    CHECK(run_cli("ortho --input " + at("po_v.txt").string() + " --output-u " +
                  at("po_u.txt").string() + " --output-r " + at("po_r.txt").string())
              .code == 0);
    CHECK(run_cli("po --input " + at("po_u.txt").string() + " --output " +
                  at("po_plot.txt").string())
              .code == 0);
    const POVector w = io::read_plot(at("po_plot.txt"));
    CHECK(w.n_vectors() == 6);
    CHECK(w.size() == 15);
    CHECK(w.max_abs() <= 1e-13);
    // the plot matches the library certificate bitwise
    CHECK(w == po(io::read_matrix(at("po_u.txt"))));
}

TEST_CASE("compress keeping everything reports infinite psnr") {
    CHECK(run_cli("gen --m 12 --n 6 --seed 10 --output " + at("cp.txt").string()).code == 0);
    CHECK(run_cli("compress --input " + at("cp.txt").string() + " --keep 6 --output " +
                  at("cp_full.txt").string())
              .code == 0);
    const lab::ExperimentRow full = io::read_report(at("cp_full.txt.report"));
    CHECK(std::isinf(full.psnr));
    CHECK(full.mse == 0.0);

    CHECK(run_cli("compress --input " + at("cp.txt").string() + " --keep 2 --output " +
                  at("cp_lossy.txt").string())
              .code == 0);
    const lab::ExperimentRow lossy = io::read_report(at("cp_lossy.txt.report"));
    CHECK(lossy.mse > 0.0);
    CHECK(std::isfinite(lossy.psnr));
    CHECK(io::read_matrix(at("cp_lossy.txt")).cols() == 6);

    CHECK(run_cli("compress --input " + at("cp.txt").string() + " --keep 7 --output " +
                  at("cp_bad.txt").string())
              .code == 2);
    CHECK(run_cli("compress --input " + at("cp.txt").string() + " --keep 0 --output " +
                  at("cp_bad.txt").string())
              .code == 2);
}

TEST_CASE("bench writes one report and one plot per N") {
    const std::string dir = at("benchdir").string();
    CHECK(run_cli("bench --m 20 --n-list 5,10,15,20 --seed 1 --out-dir " + dir).code == 0);
    for (int n : {5, 10, 15, 20}) {
        const fs::path report = fs::path(dir) / ("report_n" + std::to_string(n) + ".txt");
        const fs::path plot = fs::path(dir) / ("plot_n" + std::to_string(n) + ".txt");
        REQUIRE(fs::exists(report));
        REQUIRE(fs::exists(plot));
        const lab::ExperimentRow row = io::read_report(report);
        CHECK(row.n == static_cast<std::size_t>(n));
        CHECK(row.max_po <= 1e-13);
        CHECK(row.psnr >= 250.0);
        CHECK(io::read_plot(plot).size() == static_cast<std::size_t>(n * (n - 1) / 2));
    }
}

TEST_CASE("tensor files are auto-detected") {
    const VectorSet flat = lab::random_basis(8, 3, 11);
    const BlockSet v(4, 2, 3, std::vector<double>(flat.values().begin(), flat.values().end()));
    io::write_tensor(v, at("tv.txt"));

    CHECK(run_cli("ortho --input " + at("tv.txt").string() + " --output-u " +
                  at("tu.txt").string() + " --output-r " + at("tr.txt").string())
              .code == 0);
    CHECK(io::looks_like_tensor(at("tu.txt")));
    CHECK(run_cli("inverse --input " + at("tu.txt").string() + " --coeffs " +
                  at("tr.txt").string() + " --output " + at("tvh.txt").string())
              .code == 0);
    const BlockSet rebuilt = io::read_tensor(at("tvh.txt"));
    double err = 0.0;
    for (std::size_t i = 0; i < v.values().size(); ++i)
        err = std::max(err, std::abs(v.values()[i] - rebuilt.values()[i]));
    CHECK(err <= 1e-12);

    CHECK(run_cli("po --input " + at("tu.txt").string() + " --output " +
                  at("tplot.txt").string())
              .code == 0);
    CHECK(io::read_plot(at("tplot.txt")).n_vectors() == 3);

    CHECK(run_cli("roundtrip --input " + at("tv.txt").string() + " --output " +
                  at("trep.txt").string())
              .code == 0);
    CHECK(io::read_report(at("trep.txt")).m == 8);  // flattened block dimension

    // only the enhanced method has a block form
    CHECK(run_cli("ortho --method gsp --input " + at("tv.txt").string() + " --output-u " +
                  at("x.txt").string() + " --output-r " + at("y.txt").string())
              .code == 2);
    CHECK(run_cli("ortho --method mgs --input " + at("tv.txt").string() + " --output-u " +
                  at("x.txt").string() + " --output-r " + at("y.txt").string())
              .code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("").code == 2);                                  // no subcommand
    CHECK(run_cli("frobnicate").code == 2);                        // unknown subcommand
    CHECK(run_cli("ortho --input " + at("v.txt").string()).code == 2);  // missing flags
    CHECK(run_cli("ortho --input " + at("v.txt").string() + " --output-u a --output-r b" +
                  " --method qr")
              .code == 2);  // unknown method
    CHECK(run_cli("gen --m 0 --n 3 --seed 1 --output " + at("z.txt").string()).code == 2);
    CHECK(run_cli("ortho --input " + at("v.txt").string() + " --output-u " +
                  at("a.txt").string() + " --output-r " + at("b.txt").string() + " --tol 0")
              .code == 2);  // tolerance outside (0,1)
    CHECK(run_cli("bench --m 20 --n-list 5,25 --out-dir " + at("bb").string()).code == 2);
}

TEST_CASE("missing or malformed inputs exit 4") {
    CHECK(run_cli("ortho --input " + at("nope.txt").string() + " --output-u a --output-r b")
              .code == 4);
    std::ofstream(at("ragged.txt")) << "1,2\n3\n";
    const RunResult result = run_cli("ortho --input " + at("ragged.txt").string() +
                                     " --output-u " + at("a.txt").string() + " --output-r " +
                                     at("b.txt").string());
    CHECK(result.code == 4);
    CHECK(result.err.find("ragged.txt:2") != std::string::npos);  // path:line diagnostic
    std::ofstream(at("badcoef.txt")) << "n_vectors 3\n1\n2\n";
    CHECK(run_cli("inverse --input " + at("u.txt").string() + " --coeffs " +
                  at("badcoef.txt").string() + " --output " + at("c.txt").string())
              .code == 4);
}

TEST_CASE("help exits 0") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("ortho --help").code == 0);
}

int wrapped_main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: test_cli <igs-binary> <scratch-dir>\n";
        return 1;
    }
    g_cli = argv[1];
    g_scratch = fs::path(argv[2]);
    fs::remove_all(g_scratch);
    fs::create_directories(g_scratch);

    doctest::Context context;
    context.applyCommandLine(1, argv);  // keep doctest away from our paths
    return context.run();
}

int main(int argc, char** argv) { return wrapped_main(argc, argv); }
