#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace igs {

/// Thrown when two operands disagree on dimensions.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by the forward transforms when a column (or block) is
/// (near-)linearly dependent on its predecessors.  Columns are numbered
/// from 1, matching the diagnostics printed by the CLI.
class DependenceError : public std::runtime_error {
public:
    DependenceError(std::size_t column, const std::string& what_arg)
        : std::runtime_error(what_arg), column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// Relative threshold for the dependence guard: a residual u_n is treated
/// as dependent when dot(u_n,u_n) <= rel_dep^2 * dot(v_n,v_n), where v_n
/// is the original input column.  Must satisfy 0 < rel_dep < 1.
struct Tolerance {
    double rel_dep = 1e-12;
};

/// Dense set of N real column vectors of dimension M, stored column-major.
/// Entries must be finite on construction.
class VectorSet {
public:
    VectorSet(std::size_t rows, std::size_t cols);
    VectorSet(std::size_t rows, std::size_t cols, std::vector<double> values);

    /// Build from a list of columns, e.g. from_columns({{1,0},{1,1}}).
    static VectorSet from_columns(std::initializer_list<std::initializer_list<double>> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t n) noexcept { return values_[i + rows_ * n]; }
    double operator()(std::size_t i, std::size_t n) const noexcept { return values_[i + rows_ * n]; }

    std::span<double> column(std::size_t n) noexcept { return {values_.data() + rows_ * n, rows_}; }
    std::span<const double> column(std::size_t n) const noexcept {
        return {values_.data() + rows_ * n, rows_};
    }

    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }

    bool operator==(const VectorSet&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> values_;
};

/// Set of N real M-by-B blocks (the two-dimensional analogue of VectorSet).
/// Block n occupies a contiguous slab of M*B values, column-major within
/// the block, so a BlockSet with B = 1 has exactly the memory layout of a
/// VectorSet with the same values.
class BlockSet {
public:
    BlockSet(std::size_t rows, std::size_t block_cols, std::size_t count);
    BlockSet(std::size_t rows, std::size_t block_cols, std::size_t count,
             std::vector<double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t block_cols() const noexcept { return block_cols_; }
    std::size_t count() const noexcept { return count_; }

    double& operator()(std::size_t i, std::size_t j, std::size_t n) noexcept {
        return values_[i + rows_ * j + rows_ * block_cols_ * n];
    }
    double operator()(std::size_t i, std::size_t j, std::size_t n) const noexcept {
        return values_[i + rows_ * j + rows_ * block_cols_ * n];
    }

    std::span<double> block(std::size_t n) noexcept {
        return {values_.data() + rows_ * block_cols_ * n, rows_ * block_cols_};
    }
    std::span<const double> block(std::size_t n) const noexcept {
        return {values_.data() + rows_ * block_cols_ * n, rows_ * block_cols_};
    }

    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }

    bool operator==(const BlockSet&) const = default;

private:
    std::size_t rows_;
    std::size_t block_cols_;
    std::size_t count_;
    std::vector<double> values_;
};

}  // namespace igs
