#pragma once

#include "relkit/subspace.hpp"

namespace relkit {

/// ran A^{1/2} carrying the inner product that makes phi -> A^{1/2} phi a
/// partial isometry from the ambient space: <u, v> = <A^{1/2+} u, A^{1/2+} v>.
/// The square root and pseudoinverse are fixed at construction.
class OperatorRangeSpace {
  public:
    OperatorRangeSpace(Matrix a, const Tolerances& tol);

    const Matrix& op() const { return a_; }
    const Matrix& sqrt_op() const { return sqrt_; }
    const Matrix& pinv_sqrt_op() const { return pinv_sqrt_; }
    const Subspace& range() const { return range_; }
    const Tolerances& tol() const { return tol_; }

    /// Relative residual of v against the range; 0 counts as a member.
    double membership_residual(const Vector& v) const;

    /// Throws NotInRange / IllConditioned per the residual bands.
    void require_member(const Vector& v, const char* what) const;

  private:
    Matrix a_;
    Matrix sqrt_;
    Matrix pinv_sqrt_;
    Subspace range_;
    Tolerances tol_;
};

/// Inner product of the range space; both arguments must be members.
Complex ors_inner(const OperatorRangeSpace& s, const Vector& u, const Vector& v);

double ors_norm_sq(const OperatorRangeSpace& s, const Vector& u);

/// Complemented pair X + Y = I of nonnegative contractions with their range
/// spaces; everything derived is cached at construction.
class ContractionPair {
  public:
    ContractionPair(Matrix x, const Tolerances& tol);
    ContractionPair(Matrix x, Matrix y, const Tolerances& tol);

    Index dim() const { return x_.rows(); }
    const Matrix& x() const { return x_; }
    const Matrix& y() const { return y_; }
    const Matrix& sqrt_x() const { return space_x_.sqrt_op(); }
    const Matrix& sqrt_y() const { return space_y_.sqrt_op(); }
    const OperatorRangeSpace& space_x() const { return space_x_; }
    const OperatorRangeSpace& space_y() const { return space_y_; }
    const Tolerances& tol() const { return tol_; }

  private:
    Matrix x_;
    Matrix y_;
    OperatorRangeSpace space_x_;
    OperatorRangeSpace space_y_;
    Tolerances tol_;
};

/// The overlapping space ran X^{1/2} Y^{1/2} with the summed inner product;
/// `space` realizes it as the range space of XY.
struct OverlapSpace {
    OperatorRangeSpace space;
    Subspace sqrt_range_intersection;  ///< ran X^{1/2} cap ran Y^{1/2}, computed directly
    double k0_gap;                     ///< gap against ran X^{1/2} Y^{1/2}
};

OverlapSpace overlap_space(const ContractionPair& p);

/// Summed inner product on the overlap, <.,.>_X + <.,.>_Y.
Complex overlap_inner(const ContractionPair& p, const Vector& u, const Vector& v);

/// Kernel/range identities for a complemented pair, each side computed by an
/// independent route, with the worst gap against tol.member.
struct KlemmaReport {
    Subspace ker_xy, ker_x_plus_ker_y;
    Subspace ran_x_cap_ran_y, ran_xy;
    Subspace sqrt_cap, sqrt_prod;
    Subspace clos_cap, clos_xy;
    double kernel_gap, range_gap, sqrt_gap, closure_gap;
    bool pass;
};

KlemmaReport klemma_report(const ContractionPair& p);

/// Column isometry col(X^{1/2}, Y^{1/2}), 2n x n.
Matrix build_w(const ContractionPair& p);

/// W W^*, the orthogonal projection onto ran W inside
/// clos ran X x clos ran Y.
Matrix w_projection(const ContractionPair& p);

struct WModelReport {
    Matrix w;                  ///< 2n x n isometry
    Matrix projection;         ///< W W^*
    double isometry_residual;  ///< |W^* W - I|
    double idempotent_residual;
    double hermitian_residual;
    double block_residual;     ///< against [[X, X12 Y12],[Y12 X12, Y]]
    Subspace ker_wstar;        ///< kernel of W^* inside the model space
    Subspace ker_wstar_predicted;  ///< {(-Y^{1/2} k, X^{1/2} k) : k in clos ran XY}
    double kernel_gap;
    bool surjective;           ///< ran W = clos ran X x clos ran Y
};

WModelReport w_model(const ContractionPair& p);

/// Coordinate realization of V = col(X, Y) from the ambient space into the
/// product of range spaces, together with its adjoint (f, g) -> f + g.
struct VModelReport {
    Matrix v;       ///< 2n x n, col(X, Y)
    Matrix v_star;  ///< n x 2n, [I I]
    Matrix u;       ///< 2n x 2n, diag(X^{1/2}, Y^{1/2}); U W = V
    double uw_equals_v_residual;
    double isometry_residual;  ///< Gram defect of V in the range-space metric
    Subspace ker_vstar;            ///< computed within ran X^{1/2} x ran Y^{1/2}
    Subspace ker_vstar_predicted;  ///< {(phi, -phi) : phi in the overlap}
    double kernel_gap;
    bool surjective;
};

VModelReport v_model(const ContractionPair& p);

/// Pythagorean split of |h|^2 into range-space norms of X h and Y h.
struct PythagoreanSides {
    double lhs;  ///< |h|^2
    double rhs;  ///< |X h|^2_X + |Y h|^2_Y
};

PythagoreanSides pythagorean_check(const ContractionPair& p, const Vector& h);

/// Norm dichotomy for f in the X-space and g in the Y-space:
/// |f+g|^2 <= |f|^2_X + |g|^2_Y with equality iff (f,g) = (Xh, Yh).
struct InekSides {
    double lhs;        ///< |f + g|^2
    double rhs;        ///< |f|^2_X + |g|^2_Y
    bool equality_predicted;  ///< X(f+g) = f within tolerance
};

InekSides inek_check(const ContractionPair& p, const Vector& f, const Vector& g);

/// Parallel sum a (a + b)^+ b of PSD matrices.
Matrix parallel_sum(const Matrix& a, const Matrix& b, const Tolerances& tol);

}  // namespace relkit
