#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "igs/types.hpp"

namespace igs {

/// Round-trip quality triple.  mse = 0 if and only if psnr is +infinity.
struct MetricsReport {
    double mae;
    double mse;
    double psnr;
};

/// Pairwise inner products u_n . u_m for all n < m, outer index ascending
/// then inner ascending; length N(N-1)/2.  The orthogonality certificate:
/// every entry of a well-orthogonalized set is close to zero.
class POVector {
public:
    POVector(std::size_t n_vectors, std::vector<double> values);

    std::size_t n_vectors() const noexcept { return n_vectors_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }

    /// Largest magnitude, 0 for the empty (N = 1) vector.
    double max_abs() const noexcept;

    bool operator==(const POVector&) const = default;

private:
    std::size_t n_vectors_;
    std::vector<double> values_;
};

// Mean absolute / squared error over all elements (normalized by the total
// element count).  Shapes must match exactly; mismatches throw ShapeError.
double mae(const VectorSet& v, const VectorSet& v_hat);
double mae(const BlockSet& v, const BlockSet& v_hat);
double mse(const VectorSet& v, const VectorSet& v_hat);
double mse(const BlockSet& v, const BlockSet& v_hat);

// Peak signal-to-noise ratio in dB: 10*log10(max|v|^2 / mse), with the peak
// taken over the first (original) argument; +infinity when mse = 0.
double psnr(const VectorSet& v, const VectorSet& v_hat);
double psnr(const BlockSet& v, const BlockSet& v_hat);

MetricsReport metrics(const VectorSet& v, const VectorSet& v_hat);
MetricsReport metrics(const BlockSet& v, const BlockSet& v_hat);

// Proof of orthogonality; blocks use the Frobenius inner product.
POVector po(const VectorSet& u);
POVector po(const BlockSet& u);

}  // namespace igs
