#include "igs/types.hpp"

#include <cmath>
#include <string>

namespace igs {

namespace {

void require_positive(std::size_t value, const char* name) {
    if (value == 0) {
        throw std::invalid_argument(std::string(name) + " must be at least 1");
    }
}

void require_finite(std::span<const double> values, const char* what) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw std::invalid_argument(std::string(what) + ": non-finite entry at offset " +
                                        std::to_string(i));
        }
    }
}

}  // namespace

VectorSet::VectorSet(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {
    require_positive(rows, "rows");
    require_positive(cols, "cols");
}

VectorSet::VectorSet(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    require_positive(rows, "rows");
    require_positive(cols, "cols");
    if (values_.size() != rows * cols) {
        throw ShapeError("VectorSet: expected " + std::to_string(rows * cols) + " values, got " +
                         std::to_string(values_.size()));
    }
    require_finite(values_, "VectorSet");
}

VectorSet VectorSet::from_columns(std::initializer_list<std::initializer_list<double>> columns) {
    if (columns.size() == 0 || columns.begin()->size() == 0) {
        throw ShapeError("VectorSet::from_columns: need at least one non-empty column");
    }
    const std::size_t rows = columns.begin()->size();
    std::vector<double> values;
    values.reserve(rows * columns.size());
    for (const auto& col : columns) {
        if (col.size() != rows) {
            throw ShapeError("VectorSet::from_columns: ragged columns");
        }
        values.insert(values.end(), col.begin(), col.end());
    }
    return VectorSet(rows, columns.size(), std::move(values));
}

BlockSet::BlockSet(std::size_t rows, std::size_t block_cols, std::size_t count)
    : rows_(rows), block_cols_(block_cols), count_(count),
      values_(rows * block_cols * count, 0.0) {
    require_positive(rows, "rows");
    require_positive(block_cols, "block_cols");
    require_positive(count, "count");
}

BlockSet::BlockSet(std::size_t rows, std::size_t block_cols, std::size_t count,
                   std::vector<double> values)
    : rows_(rows), block_cols_(block_cols), count_(count), values_(std::move(values)) {
    require_positive(rows, "rows");
    require_positive(block_cols, "block_cols");
    require_positive(count, "count");
    if (values_.size() != rows * block_cols * count) {
        throw ShapeError("BlockSet: expected " + std::to_string(rows * block_cols * count) +
                         " values, got " + std::to_string(values_.size()));
    }
    require_finite(values_, "BlockSet");
}

}  // namespace igs
