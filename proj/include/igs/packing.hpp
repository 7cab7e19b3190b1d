#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "igs/types.hpp"

namespace igs {

/// Cumulative coefficient count: the number of packed coefficients consumed
/// by vectors 1..x+1, i.e. 0 + 1 + ... + x = x(x+1)/2.
constexpr std::size_t gfbr(std::size_t x) noexcept { return x * (x + 1) / 2; }

/// Packed length for a set of N vectors: N(N-1)/2.
constexpr std::size_t packed_length(std::size_t n_vectors) noexcept {
    return n_vectors == 0 ? 0 : n_vectors * (n_vectors - 1) / 2;
}

/// Position of coefficient r_{n,m} in the packed vector.  Indices are
/// 1-based on both sides: 2 <= n, 1 <= m <= n-1, and the result runs over
/// 1..N(N-1)/2 in exactly the order the forward loops emit coefficients
/// (outer n ascending, inner m ascending).  Throws std::out_of_range on
/// invalid (n, m).
std::size_t pack_index(std::size_t n, std::size_t m);

/// Projection coefficients of one forward transform, stored as a flat
/// vector of length N(N-1)/2 in pack_index order.  The length depends only
/// on the number of vectors, never on their dimension.
class PackedCoefficients {
public:
    explicit PackedCoefficients(std::size_t n_vectors);
    PackedCoefficients(std::size_t n_vectors, std::vector<double> values);

    std::size_t n_vectors() const noexcept { return n_vectors_; }
    std::size_t size() const noexcept { return values_.size(); }

    /// Coefficient r_{n,m}, 1-based as in pack_index.
    double at(std::size_t n, std::size_t m) const;
    double& at(std::size_t n, std::size_t m);

    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }

    bool operator==(const PackedCoefficients&) const = default;

private:
    std::size_t n_vectors_;
    std::vector<double> values_;
};

/// Unit-lower-triangular N-by-N view of a packed coefficient vector:
/// diagonal 1, entry (i,j) = r_{i+1,j+1} below the diagonal, 0 above
/// (indices here are 0-based).  Non-owning; the coefficients must outlive
/// the view.
class TriangularFactor {
public:
    explicit TriangularFactor(const PackedCoefficients& coeffs) noexcept : coeffs_(&coeffs) {}

    std::size_t size() const noexcept { return coeffs_->n_vectors(); }

    double operator()(std::size_t row, std::size_t col) const {
        if (row == col) return 1.0;
        if (col > row) return 0.0;
        return coeffs_->at(row + 1, col + 1);
    }

    /// Materialize as a dense N-by-N matrix.
    VectorSet dense() const;

private:
    const PackedCoefficients* coeffs_;
};

}  // namespace igs
