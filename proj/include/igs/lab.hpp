#pragma once

#include <cstdint>
#include <vector>

#include "igs/gram_schmidt.hpp"
#include "igs/metrics.hpp"
#include "igs/types.hpp"

namespace igs::lab {

/// One experiment grid: a forward method applied to random bases of
/// dimension m for each N in n_list.  With trials > 1 every cell is
/// repeated on `trials` derived seeds and the worst trial is reported.
struct ExperimentConfig {
    std::size_t m = 20;
    std::vector<std::size_t> n_list;
    std::uint64_t seed = 0;
    Method method = Method::egsp;
    std::size_t trials = 1;
};

/// One table row.  With trials > 1, max_po/mae/mse carry the per-cell
/// maximum over trials and psnr the minimum.
struct ExperimentRow {
    std::size_t m;
    std::size_t n;
    double max_po;
    double mae;
    double mse;
    double psnr;
    Method method;
    std::uint64_t seed;

    bool operator==(const ExperimentRow&) const = default;
};

struct Table1Entry {
    ExperimentRow row;
    POVector po;  // certificate of the first trial, for plot files
};

struct StabilityRow {
    Method method;
    double max_po;
};

/// m-by-n set with entries drawn i.i.d. uniform on the open interval (0,1).
/// The generator is std::mt19937_64 seeded with `seed`; each entry maps one
/// engine draw through ((x >> 12) + 0.5) * 2^-52, and entries are filled
/// column by column.  Deterministic for a fixed seed on every platform.
VectorSet random_basis(std::size_t m, std::size_t n, std::uint64_t seed);

/// Orthogonality table: one row per N in n_list, in order, carrying the
/// certificate maximum (plus the round-trip metrics, so rows are complete).
std::vector<Table1Entry> run_table1(const ExperimentConfig& cfg);

/// Round-trip table: forward, matching inverse, MAE/MSE/PSNR per N.
std::vector<ExperimentRow> run_table2(const ExperimentConfig& cfg);

/// Orthogonality certificates of gsp, egsp and mgs_strict on one shared
/// near-dependent basis v_n = w + condition_knob * z_n (w, z_n uniform on
/// (0,1), drawn from mt19937_64 seeded with `seed`: w first, then z column
/// by column).  Requires 0 < condition_knob <= 1; small knobs drive the set
/// under the dependence guard and DependenceError propagates.  The rows are
/// evidence, not a ranking.
std::vector<StabilityRow> stability_sweep(std::size_t m, std::size_t n, double condition_knob,
                                          std::uint64_t seed);

}  // namespace igs::lab
