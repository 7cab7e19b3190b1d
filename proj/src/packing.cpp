#include "igs/packing.hpp"

#include <stdexcept>
#include <string>

namespace igs {

std::size_t pack_index(std::size_t n, std::size_t m) {
    if (n < 2 || m < 1 || m > n - 1) {
        throw std::out_of_range("pack_index: invalid pair (n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ")");
    }
    return (n - 1) * (n - 2) / 2 + m;
}

PackedCoefficients::PackedCoefficients(std::size_t n_vectors)
    : n_vectors_(n_vectors), values_(packed_length(n_vectors), 0.0) {
    if (n_vectors == 0) {
        throw std::invalid_argument("PackedCoefficients: n_vectors must be at least 1");
    }
}

PackedCoefficients::PackedCoefficients(std::size_t n_vectors, std::vector<double> values)
    : n_vectors_(n_vectors), values_(std::move(values)) {
    if (n_vectors == 0) {
        throw std::invalid_argument("PackedCoefficients: n_vectors must be at least 1");
    }
    if (values_.size() != packed_length(n_vectors)) {
        throw ShapeError("PackedCoefficients: " + std::to_string(n_vectors) +
                         " vectors need " + std::to_string(packed_length(n_vectors)) +
                         " coefficients, got " + std::to_string(values_.size()));
    }
}

double PackedCoefficients::at(std::size_t n, std::size_t m) const {
    if (n > n_vectors_) {
        throw std::out_of_range("PackedCoefficients::at: n=" + std::to_string(n) +
                                " exceeds n_vectors=" + std::to_string(n_vectors_));
    }
    return values_[pack_index(n, m) - 1];
}

double& PackedCoefficients::at(std::size_t n, std::size_t m) {
    if (n > n_vectors_) {
        throw std::out_of_range("PackedCoefficients::at: n=" + std::to_string(n) +
                                " exceeds n_vectors=" + std::to_string(n_vectors_));
    }
    return values_[pack_index(n, m) - 1];
}

VectorSet TriangularFactor::dense() const {
    const std::size_t n = size();
    VectorSet out(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t row = 0; row < n; ++row) {
            out(row, col) = (*this)(row, col);
        }
    }
    return out;
}

}  // namespace igs
