#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "igs/lab.hpp"
#include "igs/metrics.hpp"
#include "igs/packing.hpp"
#include "igs/types.hpp"

namespace igs::io {

/// Malformed file or filesystem failure.  line() is 1-based; 0 means the
/// error concerns the file as a whole.
class IoError : public std::runtime_error {
public:
    IoError(std::filesystem::path path, std::size_t line, const std::string& message);

    const std::filesystem::path& path() const noexcept { return path_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::filesystem::path path_;
    std::size_t line_;
};

// Plain-text formats.  Writers render doubles with 17 significant digits,
// emit comma-separated fields, and replace the target atomically
// (temp file + rename).  Readers accept comma or whitespace delimiters and
// reproduce written values bitwise.
//
//   matrix:  one row per line, no header
//   tensor:  "dims M B N" header, then N blocks of M lines x B values,
//            consecutive blocks separated by one blank line
//   coeffs:  "n_vectors N" header, then N(N-1)/2 values, one per line
//   report:  eight "key = value" lines: method, seed, M, N, max_po, mae,
//            mse, psnr ("inf" allowed for psnr)
//   plot:    "k,value" lines with k running 1..N(N-1)/2

VectorSet read_matrix(const std::filesystem::path& path);
void write_matrix(const VectorSet& v, const std::filesystem::path& path);

BlockSet read_tensor(const std::filesystem::path& path);
void write_tensor(const BlockSet& v, const std::filesystem::path& path);

PackedCoefficients read_coeffs(const std::filesystem::path& path);
void write_coeffs(const PackedCoefficients& r, const std::filesystem::path& path);

lab::ExperimentRow read_report(const std::filesystem::path& path);
void write_report(const lab::ExperimentRow& row, const std::filesystem::path& path);

POVector read_plot(const std::filesystem::path& path);
void write_plot(const POVector& w, const std::filesystem::path& path);

/// True when the file starts with a tensor "dims" header.
bool looks_like_tensor(const std::filesystem::path& path);

}  // namespace igs::io
