#pragma once

#include <optional>
#include <string_view>

#include "igs/packing.hpp"
#include "igs/types.hpp"

namespace igs {

struct GsResult {
    VectorSet u;
    PackedCoefficients r;
};

struct GsResult2d {
    BlockSet u;
    PackedCoefficients r;
};

// All kernels below accumulate inner products and column updates strictly
// sequentially in index order, so results are deterministic for a given
// input.  Outputs are orthogonal but deliberately not normalized.

/// Classical Gram-Schmidt: u_1 = v_1 and, for n >= 2,
/// u_n = v_n - sum_{m<n} r_{n,m} u_m with r_{n,m} = dot(u_m,v_n)/dot(u_m,u_m).
/// The projection sum is accumulated first and subtracted once.
/// Throws DependenceError (naming the 1-based column) when a residual falls
/// under the relative dependence guard.
GsResult gsp(const VectorSet& v, Tolerance tol = {});

/// Exact inverse of gsp: v_n = u_n + sum_{m<n} r_{n,m} u_m, with the sum
/// accumulated first and added once.
VectorSet igsp(const VectorSet& u, const PackedCoefficients& r);

/// Enhanced variant: u_n starts at v_n and each projection is subtracted
/// as soon as its coefficient is computed; numerators use the original v_n.
/// Algebraically identical to gsp, differing only in rounding order.
GsResult egsp(const VectorSet& v, Tolerance tol = {});

/// Strict modified Gram-Schmidt: as egsp, but numerators use the partially
/// updated u_n.  Stability baseline; invert with iegsp.
GsResult mgs_strict(const VectorSet& v, Tolerance tol = {});

/// Exact inverse of egsp: v_n = u_n + sum_{m<n} r_{n,m} u_m, accumulated
/// incrementally in loop order.
VectorSet iegsp(const VectorSet& u, const PackedCoefficients& r);

/// Block form of egsp with the Frobenius inner product; the packed
/// coefficient count is still N(N-1)/2, independent of the block shape.
GsResult2d egsp2d(const BlockSet& v, Tolerance tol = {});

/// Block form of iegsp.
BlockSet iegsp2d(const BlockSet& u, const PackedCoefficients& r);

/// Lossy reconstruction keeping the first `keep` orthogonal components:
/// columns n <= keep are reconstructed exactly; for n > keep the residual
/// term u_n is dropped and only the coefficient sum remains.  keep = N
/// reproduces the exact inverse.  Throws std::out_of_range unless
/// 1 <= keep <= N.
VectorSet prune_reconstruct(const VectorSet& u, const PackedCoefficients& r, std::size_t keep);
BlockSet prune_reconstruct(const BlockSet& u, const PackedCoefficients& r, std::size_t keep);

/// Forward-kernel selector used by the experiment harness and the CLI.
enum class Method { gsp, egsp, mgs_strict };

std::string_view to_string(Method method) noexcept;              // "gsp", "egsp", "mgs"
std::optional<Method> method_from_string(std::string_view name) noexcept;

GsResult forward(Method method, const VectorSet& v, Tolerance tol = {});

/// Matching inverse: igsp for Method::gsp, iegsp otherwise (mgs_strict
/// stores ordinary projection coefficients, so iegsp reconstructs it too).
VectorSet inverse(Method method, const VectorSet& u, const PackedCoefficients& r);

}  // namespace igs
