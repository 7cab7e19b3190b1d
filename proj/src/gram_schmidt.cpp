#include "igs/gram_schmidt.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

// Vectors and blocks are both contiguous slabs of doubles; a block simply
// has length M*B instead of M, which turns its dot product into the
// Frobenius inner product.  Every kernel below therefore runs on a slab
// view, and the block entry points share code (and rounding behaviour,
// so the B = 1 case matches the vector case bit for bit).

namespace igs {

namespace {

struct ConstSlabs {
    const double* data;
    std::size_t len;
    std::size_t count;

    std::span<const double> operator[](std::size_t n) const noexcept {
        return {data + len * n, len};
    }
};

struct MutSlabs {
    double* data;
    std::size_t len;
    std::size_t count;

    std::span<double> operator[](std::size_t n) const noexcept { return {data + len * n, len}; }
};

ConstSlabs slabs(const VectorSet& s) noexcept { return {s.values().data(), s.rows(), s.cols()}; }
MutSlabs slabs(VectorSet& s) noexcept { return {s.values().data(), s.rows(), s.cols()}; }
ConstSlabs slabs(const BlockSet& s) noexcept {
    return {s.values().data(), s.rows() * s.block_cols(), s.count()};
}
MutSlabs slabs(BlockSet& s) noexcept {
    return {s.values().data(), s.rows() * s.block_cols(), s.count()};
}

// Sequential left-to-right accumulation; the summation order is part of
// the determinism contract.
double dot(std::span<const double> a, std::span<const double> b) noexcept {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept {
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] += alpha * x[i];
    }
}

enum class SetKind { vectors, blocks };

void check_tolerance(const Tolerance& tol) {
    if (!(tol.rel_dep > 0.0) || !(tol.rel_dep < 1.0)) {
        throw std::invalid_argument("Tolerance: rel_dep must be in (0, 1), got " +
                                    std::to_string(tol.rel_dep));
    }
}

[[noreturn]] void throw_dependent(SetKind kind, std::size_t column_1based) {
    const char* what = kind == SetKind::vectors ? "vector" : "block";
    throw DependenceError(column_1based, "column " + std::to_string(column_1based) + " of the " +
                                             what +
                                             " set is linearly dependent within tolerance");
}

void check_inverse_shapes(std::size_t set_count, const PackedCoefficients& r) {
    if (r.n_vectors() != set_count) {
        throw ShapeError("coefficients are for " + std::to_string(r.n_vectors()) +
                         " vectors, set has " + std::to_string(set_count));
    }
}

enum class ForwardOrder {
    classical,  // accumulate all projections, subtract once; numerator dot(v_n, u_m)
    enhanced,   // subtract each projection immediately;      numerator dot(v_n, u_m)
    mgs,        // subtract each projection immediately;      numerator dot(u_n, u_m)
};

PackedCoefficients forward_kernel(ConstSlabs v, MutSlabs u, double rel_dep, ForwardOrder order,
                                  SetKind kind) {
    PackedCoefficients r(v.count);
    const std::span<double> coeffs = r.values();
    std::size_t k = 0;
    std::vector<double> acu(order == ForwardOrder::classical ? v.len : 0);

    for (std::size_t n = 0; n < v.count; ++n) {
        const auto v_n = v[n];
        const auto u_n = u[n];
        if (order == ForwardOrder::classical) {
            std::fill(acu.begin(), acu.end(), 0.0);
            for (std::size_t m = 0; m < n; ++m) {
                const auto u_m = u[m];
                const double num = dot(v_n, u_m);
                const double den = dot(u_m, u_m);
                coeffs[k] = num / den;
                axpy(coeffs[k], u_m, acu);
                ++k;
            }
            for (std::size_t i = 0; i < v.len; ++i) {
                u_n[i] = v_n[i] - acu[i];
            }
        } else {
            std::copy(v_n.begin(), v_n.end(), u_n.begin());
            for (std::size_t m = 0; m < n; ++m) {
                const auto u_m = u[m];
                const double num =
                    order == ForwardOrder::enhanced ? dot(v_n, u_m) : dot(u_n, u_m);
                const double den = dot(u_m, u_m);
                coeffs[k] = num / den;
                axpy(-coeffs[k], u_m, u_n);
                ++k;
            }
        }
        // Dependence guard, applied to each residual as it is produced: a
        // residual that keeps no more than rel_dep of its input's norm marks
        // the input column as dependent on its predecessors.  Every slab
        // later used as a projector has passed this, so the divisions above
        // never see a degenerate denominator.
        if (dot(u_n, u_n) <= rel_dep * rel_dep * dot(v_n, v_n)) {
            throw_dependent(kind, n + 1);
        }
    }
    return r;
}

enum class InverseOrder {
    classical,  // accumulate the coefficient sum, add once
    enhanced,   // add each term as soon as it is formed
};

void inverse_kernel(ConstSlabs u, const PackedCoefficients& r, MutSlabs v, InverseOrder order) {
    check_inverse_shapes(u.count, r);
    const std::span<const double> coeffs = r.values();
    std::size_t k = 0;
    std::vector<double> acu(order == InverseOrder::classical ? u.len : 0);

    for (std::size_t n = 0; n < u.count; ++n) {
        const auto u_n = u[n];
        const auto v_n = v[n];
        if (order == InverseOrder::classical) {
            std::fill(acu.begin(), acu.end(), 0.0);
            for (std::size_t m = 0; m < n; ++m) {
                axpy(coeffs[k], u[m], acu);
                ++k;
            }
            for (std::size_t i = 0; i < u.len; ++i) {
                v_n[i] = u_n[i] + acu[i];
            }
        } else {
            std::copy(u_n.begin(), u_n.end(), v_n.begin());
            for (std::size_t m = 0; m < n; ++m) {
                axpy(coeffs[k], u[m], v_n);
                ++k;
            }
        }
    }
}

void prune_kernel(ConstSlabs u, const PackedCoefficients& r, std::size_t keep, MutSlabs out) {
    check_inverse_shapes(u.count, r);
    if (keep < 1 || keep > u.count) {
        throw std::out_of_range("prune_reconstruct: keep=" + std::to_string(keep) +
                                " outside [1, " + std::to_string(u.count) + "]");
    }
    const std::span<const double> coeffs = r.values();
    std::size_t k = 0;
    for (std::size_t n = 0; n < u.count; ++n) {
        const auto out_n = out[n];
        if (n < keep) {
            const auto u_n = u[n];
            std::copy(u_n.begin(), u_n.end(), out_n.begin());
        } else {
            std::fill(out_n.begin(), out_n.end(), 0.0);
        }
        for (std::size_t m = 0; m < n; ++m) {
            axpy(coeffs[k], u[m], out_n);
            ++k;
        }
    }
}

}  // namespace

GsResult gsp(const VectorSet& v, Tolerance tol) {
    check_tolerance(tol);
    VectorSet u(v.rows(), v.cols());
    auto r = forward_kernel(slabs(v), slabs(u), tol.rel_dep, ForwardOrder::classical,
                            SetKind::vectors);
    return {std::move(u), std::move(r)};
}

GsResult egsp(const VectorSet& v, Tolerance tol) {
    check_tolerance(tol);
    VectorSet u(v.rows(), v.cols());
    auto r =
        forward_kernel(slabs(v), slabs(u), tol.rel_dep, ForwardOrder::enhanced, SetKind::vectors);
    return {std::move(u), std::move(r)};
}

GsResult mgs_strict(const VectorSet& v, Tolerance tol) {
    check_tolerance(tol);
    VectorSet u(v.rows(), v.cols());
    auto r = forward_kernel(slabs(v), slabs(u), tol.rel_dep, ForwardOrder::mgs, SetKind::vectors);
    return {std::move(u), std::move(r)};
}

VectorSet igsp(const VectorSet& u, const PackedCoefficients& r) {
    VectorSet v(u.rows(), u.cols());
    inverse_kernel(slabs(u), r, slabs(v), InverseOrder::classical);
    return v;
}

VectorSet iegsp(const VectorSet& u, const PackedCoefficients& r) {
    VectorSet v(u.rows(), u.cols());
    inverse_kernel(slabs(u), r, slabs(v), InverseOrder::enhanced);
    return v;
}

GsResult2d egsp2d(const BlockSet& v, Tolerance tol) {
    check_tolerance(tol);
    BlockSet u(v.rows(), v.block_cols(), v.count());
    auto r =
        forward_kernel(slabs(v), slabs(u), tol.rel_dep, ForwardOrder::enhanced, SetKind::blocks);
    return {std::move(u), std::move(r)};
}

BlockSet iegsp2d(const BlockSet& u, const PackedCoefficients& r) {
    BlockSet v(u.rows(), u.block_cols(), u.count());
    inverse_kernel(slabs(u), r, slabs(v), InverseOrder::enhanced);
    return v;
}

VectorSet prune_reconstruct(const VectorSet& u, const PackedCoefficients& r, std::size_t keep) {
    VectorSet out(u.rows(), u.cols());
    prune_kernel(slabs(u), r, keep, slabs(out));
    return out;
}

BlockSet prune_reconstruct(const BlockSet& u, const PackedCoefficients& r, std::size_t keep) {
    BlockSet out(u.rows(), u.block_cols(), u.count());
    prune_kernel(slabs(u), r, keep, slabs(out));
    return out;
}

std::string_view to_string(Method method) noexcept {
    switch (method) {
        case Method::gsp:
            return "gsp";
        case Method::egsp:
            return "egsp";
        case Method::mgs_strict:
            return "mgs";
    }
    return "egsp";
}

std::optional<Method> method_from_string(std::string_view name) noexcept {
    if (name == "gsp") return Method::gsp;
    if (name == "egsp") return Method::egsp;
    if (name == "mgs" || name == "mgs_strict") return Method::mgs_strict;
    return std::nullopt;
}

GsResult forward(Method method, const VectorSet& v, Tolerance tol) {
    switch (method) {
        case Method::gsp:
            return gsp(v, tol);
        case Method::egsp:
            return egsp(v, tol);
        case Method::mgs_strict:
            return mgs_strict(v, tol);
    }
    throw std::invalid_argument("forward: unknown method");
}

VectorSet inverse(Method method, const VectorSet& u, const PackedCoefficients& r) {
    return method == Method::gsp ? igsp(u, r) : iegsp(u, r);
}

}  // namespace igs
