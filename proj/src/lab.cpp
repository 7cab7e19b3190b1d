#include "igs/lab.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace igs::lab {

namespace {

// splitmix64 finalizer; decorrelates the per-cell seeds derived from one
// base seed.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt_a,
                                 std::uint64_t salt_b = 0) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt_a + 1) +
                      0xd1b54a32d192ed03ULL * (salt_b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// One engine draw -> (0,1), strictly open on both ends: the top 52 bits are
// offset by half an ulp, so the result lies in [2^-53, 1 - 2^-53].
double unit_open(std::mt19937_64& eng) noexcept {
    return (static_cast<double>(eng() >> 12) + 0.5) * 0x1p-52;
}

void check_config(const ExperimentConfig& cfg) {
    if (cfg.n_list.empty()) {
        throw std::invalid_argument("ExperimentConfig: n_list must be nonempty");
    }
    for (std::size_t n : cfg.n_list) {
        if (n < 2) {
            throw std::invalid_argument("ExperimentConfig: every N must be at least 2");
        }
        if (n > cfg.m) {
            throw std::invalid_argument("ExperimentConfig: m must be >= every N (m=" +
                                        std::to_string(cfg.m) + ", N=" + std::to_string(n) + ")");
        }
    }
    if (cfg.trials == 0) {
        throw std::invalid_argument("ExperimentConfig: trials must be at least 1");
    }
}

Table1Entry run_cell(const ExperimentConfig& cfg, std::size_t n) {
    ExperimentRow row{cfg.m, n, 0.0, 0.0, 0.0,
                      std::numeric_limits<double>::infinity(), cfg.method, cfg.seed};
    std::vector<double> first_po;
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        const VectorSet v = random_basis(cfg.m, n, mix_seed(cfg.seed, n, trial));
        const GsResult fwd = forward(cfg.method, v);
        const POVector w = po(fwd.u);
        const VectorSet v_hat = inverse(cfg.method, fwd.u, fwd.r);
        const MetricsReport rep = metrics(v, v_hat);
        row.max_po = std::max(row.max_po, w.max_abs());
        row.mae = std::max(row.mae, rep.mae);
        row.mse = std::max(row.mse, rep.mse);
        row.psnr = std::min(row.psnr, rep.psnr);
        if (trial == 0) {
            first_po.assign(w.values().begin(), w.values().end());
        }
    }
    return {row, POVector(n, std::move(first_po))};
}

}  // namespace

VectorSet random_basis(std::size_t m, std::size_t n, std::uint64_t seed) {
    VectorSet v(m, n);
    std::mt19937_64 eng(seed);
    for (double& x : v.values()) {
        x = unit_open(eng);
    }
    return v;
}

std::vector<Table1Entry> run_table1(const ExperimentConfig& cfg) {
    check_config(cfg);
    std::vector<Table1Entry> entries;
    entries.reserve(cfg.n_list.size());
    for (std::size_t n : cfg.n_list) {
        entries.push_back(run_cell(cfg, n));
    }
    return entries;
}

std::vector<ExperimentRow> run_table2(const ExperimentConfig& cfg) {
    check_config(cfg);
    std::vector<ExperimentRow> rows;
    rows.reserve(cfg.n_list.size());
    for (std::size_t n : cfg.n_list) {
        rows.push_back(run_cell(cfg, n).row);
    }
    return rows;
}

std::vector<StabilityRow> stability_sweep(std::size_t m, std::size_t n, double condition_knob,
                                          std::uint64_t seed) {
    if (!(condition_knob > 0.0) || condition_knob > 1.0) {
        throw std::invalid_argument("stability_sweep: condition_knob must be in (0, 1], got " +
                                    std::to_string(condition_knob));
    }
    std::mt19937_64 eng(seed);
    std::vector<double> common(m);
    for (double& x : common) {
        x = unit_open(eng);
    }
    VectorSet v(m, n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t i = 0; i < m; ++i) {
            v(i, col) = common[i] + condition_knob * unit_open(eng);
        }
    }
    std::vector<StabilityRow> rows;
    for (Method method : {Method::gsp, Method::egsp, Method::mgs_strict}) {
        rows.push_back({method, po(forward(method, v).u).max_abs()});
    }
    return rows;
}

}  // namespace igs::lab
