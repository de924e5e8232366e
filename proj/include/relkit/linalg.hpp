#pragma once

#include "relkit/types.hpp"

namespace relkit {

/// Largest singular value (0 for empty matrices).
double operator_norm(const Matrix& m);

bool all_finite(const Matrix& m);

/// Moore-Penrose pseudoinverse with relative singular-value cutoff tol.rank.
Matrix pinv(const Matrix& m, const Tolerances& tol);

/// Orthonormal basis of {x : m x = 0}. Singular values are judged against
/// tol.rank * max(sigma_max, scale_floor); pass the operator scale of `m`
/// as `scale_floor` when `m` may be (near) zero by construction.
Matrix nullspace_basis(const Matrix& m, const Tolerances& tol, double scale_floor = 0.0);

/// Hermitian check in the operator norm, relative to max(1, |m|).
bool is_hermitian(const Matrix& m, double slack);

/// Eigenvalues of the symmetrized matrix lie in [-tol.psd, 1 + tol.psd].
bool is_nonnegative_contraction(const Matrix& m, const Tolerances& tol);

/// Throws InvalidContraction unless `m` is a Hermitian nonnegative contraction.
void require_contraction(const Matrix& m, const Tolerances& tol, const char* what);

/// Principal square root of a nonnegative contraction; eigenvalues are
/// clamped to [0, 1] before the root so that roots of x and I - x commute.
Matrix contraction_sqrt(const Matrix& m, const Tolerances& tol);

/// Principal square root of a PSD matrix (eigenvalues clamped to [0, inf)).
Matrix psd_sqrt(const Matrix& m, const Tolerances& tol);

/// Smallest eigenvalue of the symmetrized matrix (0 for empty).
double min_eigenvalue(const Matrix& m);

/// Zeroes a vector whose norm is roundoff relative to the given scale.
Vector snap_small(Vector v, double scale, const Tolerances& tol);

}  // namespace relkit
