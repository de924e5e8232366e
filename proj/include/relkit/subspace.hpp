#pragma once

#include "relkit/linalg.hpp"
#include "relkit/types.hpp"

namespace relkit {

/// A linear subspace of C^n held as an orthonormal basis (n x r, r >= 0).
/// The zero subspace is the n x 0 basis, never a zero column. Values are
/// immutable after construction and safe to share across threads.
class Subspace {
  public:
    /// Wraps an already-orthonormal basis; throws InvalidInput if the
    /// columns fail the orthonormality invariant at tol.orth.
    Subspace(Index ambient_dim, Matrix orthonormal_basis, const Tolerances& tol);

    static Subspace zero(Index ambient_dim);
    static Subspace full(Index ambient_dim);

    Index ambient() const { return ambient_; }
    Index dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

    /// Orthogonal projection onto the subspace, n x n.
    Matrix projector() const { return basis_ * basis_.adjoint(); }

  private:
    Index ambient_;
    Matrix basis_;
};

/// Column space of an arbitrary matrix; singular values below
/// tol.rank * max(sigma_max, scale_floor) are treated as zero. Pass the
/// operator scale as `scale_floor` when `m` is a slice or image whose
/// entries may be pure roundoff (a near-zero matrix has sigma_max of
/// roundoff size, which would otherwise defeat the relative cutoff).
Subspace orthonormalize(const Matrix& m, const Tolerances& tol, double scale_floor = 0.0);

Subspace intersect(const Subspace& a, const Subspace& b, const Tolerances& tol);

Subspace sum(const Subspace& a, const Subspace& b, const Tolerances& tol);

Subspace orthogonal_complement(const Subspace& s, const Tolerances& tol);

/// True iff every basis vector of `inner` projects onto `outer` with
/// residual at most tol.member.
bool contains(const Subspace& outer, const Subspace& inner, const Tolerances& tol);

/// Gap metric |P_a - P_b|_2; the subspace-equality oracle (0 iff equal).
double subspace_distance(const Subspace& a, const Subspace& b);

/// {x : m x in s}, computed as the kernel of (I - P_s) m. Residuals are
/// judged against max(|m|, scale_floor); pass 1 when m is a contraction, so
/// an m that is zero up to roundoff maps everything into s.
Subspace preimage(const Matrix& m, const Subspace& s, const Tolerances& tol,
                  double scale_floor = 0.0);

/// Image m(s), re-orthonormalized with the same scale convention.
Subspace apply(const Matrix& m, const Subspace& s, const Tolerances& tol,
               double scale_floor = 0.0);

}  // namespace relkit
