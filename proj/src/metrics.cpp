#include "igs/metrics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "igs/packing.hpp"

namespace igs {

namespace {

void check_same_shape(const VectorSet& a, const VectorSet& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("metrics: shapes differ (" + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + ")");
    }
}

void check_same_shape(const BlockSet& a, const BlockSet& b) {
    if (a.rows() != b.rows() || a.block_cols() != b.block_cols() || a.count() != b.count()) {
        throw ShapeError("metrics: block shapes differ (" + std::to_string(a.rows()) + "x" +
                         std::to_string(a.block_cols()) + "x" + std::to_string(a.count()) +
                         " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.block_cols()) +
                         "x" + std::to_string(b.count()) + ")");
    }
}

// Sums run over the flat storage in order.
double mean_abs_diff(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::abs(a[i] - b[i]);
    }
    return acc / static_cast<double>(a.size());
}

double mean_sq_diff(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc / static_cast<double>(a.size());
}

double max_abs(std::span<const double> a) {
    double peak = 0.0;
    for (double x : a) {
        peak = std::max(peak, std::abs(x));
    }
    return peak;
}

double psnr_from(double peak, double mean_sq) {
    if (mean_sq == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(peak * peak / mean_sq);
}

// Pairwise products of all against all, n < m, loop order fixed.
template <typename Set>
POVector po_impl(const Set& u, std::size_t n_count, auto element) {
    std::vector<double> values;
    values.reserve(packed_length(n_count));
    for (std::size_t n = 0; n + 1 < n_count; ++n) {
        const auto a = element(u, n);
        for (std::size_t m = n + 1; m < n_count; ++m) {
            const auto b = element(u, m);
            double acc = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                acc += a[i] * b[i];
            }
            values.push_back(acc);
        }
    }
    return POVector(n_count, std::move(values));
}

}  // namespace

POVector::POVector(std::size_t n_vectors, std::vector<double> values)
    : n_vectors_(n_vectors), values_(std::move(values)) {
    if (n_vectors == 0) {
        throw std::invalid_argument("POVector: n_vectors must be at least 1");
    }
    if (values_.size() != packed_length(n_vectors)) {
        throw ShapeError("POVector: " + std::to_string(n_vectors) + " vectors need " +
                         std::to_string(packed_length(n_vectors)) + " products, got " +
                         std::to_string(values_.size()));
    }
}

double POVector::max_abs() const noexcept {
    double peak = 0.0;
    for (double x : values_) {
        peak = std::max(peak, std::abs(x));
    }
    return peak;
}

double mae(const VectorSet& v, const VectorSet& v_hat) {
    check_same_shape(v, v_hat);
    return mean_abs_diff(v.values(), v_hat.values());
}

double mae(const BlockSet& v, const BlockSet& v_hat) {
    check_same_shape(v, v_hat);
    return mean_abs_diff(v.values(), v_hat.values());
}

double mse(const VectorSet& v, const VectorSet& v_hat) {
    check_same_shape(v, v_hat);
    return mean_sq_diff(v.values(), v_hat.values());
}

double mse(const BlockSet& v, const BlockSet& v_hat) {
    check_same_shape(v, v_hat);
    return mean_sq_diff(v.values(), v_hat.values());
}

double psnr(const VectorSet& v, const VectorSet& v_hat) {
    return psnr_from(max_abs(v.values()), mse(v, v_hat));
}

double psnr(const BlockSet& v, const BlockSet& v_hat) {
    return psnr_from(max_abs(v.values()), mse(v, v_hat));
}

MetricsReport metrics(const VectorSet& v, const VectorSet& v_hat) {
    const double e2 = mse(v, v_hat);
    return {mae(v, v_hat), e2, psnr_from(max_abs(v.values()), e2)};
}

MetricsReport metrics(const BlockSet& v, const BlockSet& v_hat) {
    const double e2 = mse(v, v_hat);
    return {mae(v, v_hat), e2, psnr_from(max_abs(v.values()), e2)};
}

POVector po(const VectorSet& u) {
    return po_impl(u, u.cols(), [](const VectorSet& s, std::size_t n) { return s.column(n); });
}

POVector po(const BlockSet& u) {
    return po_impl(u, u.count(), [](const BlockSet& s, std::size_t n) { return s.block(n); });
}

}  // namespace igs
