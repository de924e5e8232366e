#include "relkit/complementation.hpp"

#include <Eigen/Eigenvalues>

namespace relkit {

OperatorRangeSpace::OperatorRangeSpace(Matrix a, const Tolerances& tol)
    : a_(std::move(a)), range_(Subspace::zero(1)), tol_(tol) {
    if (a_.rows() < 1) throw InvalidInput("OperatorRangeSpace: empty operator");
    require_contraction(a_, tol_, "OperatorRangeSpace");
    const Index n = a_.rows();
    Matrix h = (a_ + a_.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Eigen::VectorXd lam = es.eigenvalues();
    // A is a contraction, so its natural scale is 1: eigenvalues below
    // tol.rank count as zero even when the whole operator is roundoff-sized.
    const double lam_max = lam.size() ? lam.maxCoeff() : 0.0;
    const double cutoff = tol_.rank * std::max(lam_max, 1.0);
    // Eigenvalues at or below the rank cutoff are zero for the root as well,
    // so ran A^{1/2} and the stored range subspace agree exactly.
    Eigen::VectorXd root = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd inv_root = Eigen::VectorXd::Zero(n);
    Index rank = 0;
    for (Index i = 0; i < n; ++i) {
        if (lam(i) > cutoff) {
            root(i) = std::sqrt(std::min(lam(i), 1.0));
            inv_root(i) = 1.0 / root(i);
            ++rank;
        }
    }
    sqrt_ = es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
    pinv_sqrt_ = es.eigenvectors() * inv_root.asDiagonal() * es.eigenvectors().adjoint();
    // Eigenvalue ordering in Eigen is ascending, so the kept eigenvectors
    // are the trailing ones.
    range_ = Subspace(n, es.eigenvectors().rightCols(rank), tol_);
}

double OperatorRangeSpace::membership_residual(const Vector& v) const {
    if (v.size() != a_.rows())
        throw DimensionMismatch("OperatorRangeSpace: vector size does not match");
    const double norm = v.norm();
    if (norm == 0.0) return 0.0;
    return (v - range_.projector() * v).norm() / norm;
}

void OperatorRangeSpace::require_member(const Vector& v, const char* what) const {
    const double r = membership_residual(v);
    if (r < tol_.member) return;
    if (r < 10.0 * tol_.member)
        throw IllConditioned(std::string(what) + ": membership residual in the undecidable band");
    throw NotInRange(std::string(what) + ": vector is not in the operator range");
}

Complex ors_inner(const OperatorRangeSpace& s, const Vector& u, const Vector& v) {
    s.require_member(u, "ors_inner");
    s.require_member(v, "ors_inner");
    Vector pu = s.pinv_sqrt_op() * u;
    Vector pv = s.pinv_sqrt_op() * v;
    return pu.dot(pv);
}

double ors_norm_sq(const OperatorRangeSpace& s, const Vector& u) {
    s.require_member(u, "ors_norm_sq");
    return (s.pinv_sqrt_op() * u).squaredNorm();
}

ContractionPair::ContractionPair(Matrix x, const Tolerances& tol)
    : x_(std::move(x)),
      y_(Matrix::Identity(x_.rows(), x_.cols()) - x_),
      space_x_(x_, tol),
      space_y_(y_, tol),
      tol_(tol) {}

ContractionPair::ContractionPair(Matrix x, Matrix y, const Tolerances& tol)
    : x_(std::move(x)), y_(std::move(y)), space_x_(x_, tol), space_y_(y_, tol), tol_(tol) {
    if (x_.rows() != y_.rows() || x_.cols() != y_.cols())
        throw DimensionMismatch("ContractionPair: X and Y sizes differ");
    Matrix id = Matrix::Identity(x_.rows(), x_.cols());
    if (operator_norm(x_ + y_ - id) > tol_.member)
        throw InvalidInput("ContractionPair: X + Y != I within tolerance");
    if (operator_norm(x_ * y_ - y_ * x_) > tol_.member)
        throw InvalidInput("ContractionPair: X and Y fail to commute within tolerance");
}

OverlapSpace overlap_space(const ContractionPair& p) {
    const Tolerances& tol = p.tol();
    Subspace cap = intersect(p.space_x().range(), p.space_y().range(), tol);
    Subspace prod = orthonormalize(p.sqrt_x() * p.sqrt_y(), tol, 1.0);
    double gap = subspace_distance(cap, prod);
    return OverlapSpace{OperatorRangeSpace(p.x() * p.y(), tol), std::move(cap), gap};
}

Complex overlap_inner(const ContractionPair& p, const Vector& u, const Vector& v) {
    return ors_inner(p.space_x(), u, v) + ors_inner(p.space_y(), u, v);
}

KlemmaReport klemma_report(const ContractionPair& p) {
    const Tolerances& tol = p.tol();
    Subspace ran_x = p.space_x().range();  // = clos ran X = ran X^{1/2} here
    Subspace ran_y = p.space_y().range();
    Subspace ker_x = orthogonal_complement(ran_x, tol);
    Subspace ker_y = orthogonal_complement(ran_y, tol);

    KlemmaReport rep{
        orthogonal_complement(orthonormalize(p.x() * p.y(), tol, 1.0), tol),
        sum(ker_x, ker_y, tol),
        intersect(orthonormalize(p.x(), tol, 1.0), orthonormalize(p.y(), tol, 1.0), tol),
        orthonormalize(p.x() * p.y(), tol, 1.0),
        intersect(orthonormalize(p.sqrt_x(), tol, 1.0), orthonormalize(p.sqrt_y(), tol, 1.0), tol),
        orthonormalize(p.sqrt_x() * p.sqrt_y(), tol, 1.0),
        intersect(ran_x, ran_y, tol),
        orthonormalize(p.sqrt_x() * p.sqrt_y() * (p.sqrt_x() * p.sqrt_y()), tol, 1.0),
        0.0, 0.0, 0.0, 0.0, false};

    rep.kernel_gap = subspace_distance(rep.ker_xy, rep.ker_x_plus_ker_y);
    rep.range_gap = subspace_distance(rep.ran_x_cap_ran_y, rep.ran_xy);
    rep.sqrt_gap = subspace_distance(rep.sqrt_cap, rep.sqrt_prod);
    rep.closure_gap = subspace_distance(rep.clos_cap, rep.clos_xy);
    rep.pass = rep.kernel_gap < tol.member && rep.range_gap < tol.member &&
               rep.sqrt_gap < tol.member && rep.closure_gap < tol.member;
    return rep;
}

Matrix build_w(const ContractionPair& p) {
    Matrix w(2 * p.dim(), p.dim());
    w.topRows(p.dim()) = p.sqrt_x();
    w.bottomRows(p.dim()) = p.sqrt_y();
    return w;
}

Matrix w_projection(const ContractionPair& p) {
    Matrix w = build_w(p);
    return w * w.adjoint();
}

namespace {

/// Kernel of the map (f, g) -> a f + b g restricted to ran(bas_f) x ran(bas_g),
/// returned as a subspace of C^{2n}.
Subspace restricted_pair_kernel(const Matrix& a, const Matrix& b, const Subspace& bas_f,
                                const Subspace& bas_g, const Tolerances& tol) {
    const Index n = a.rows();
    Matrix composed(n, bas_f.dim() + bas_g.dim());
    composed.leftCols(bas_f.dim()) = a * bas_f.basis();
    composed.rightCols(bas_g.dim()) = b * bas_g.basis();
    Matrix coeffs = nullspace_basis(composed, tol, 1.0);
    Matrix embed = Matrix::Zero(2 * n, coeffs.cols());
    embed.topRows(n) = bas_f.basis() * coeffs.topRows(bas_f.dim());
    embed.bottomRows(n) = bas_g.basis() * coeffs.bottomRows(bas_g.dim());
    return orthonormalize(embed, tol);
}

Subspace pair_span(const Matrix& top, const Matrix& bottom, const Subspace& params,
                   const Tolerances& tol) {
    const Index n = top.rows();
    Matrix embed(2 * n, params.dim());
    embed.topRows(n) = top * params.basis();
    embed.bottomRows(n) = bottom * params.basis();
    return orthonormalize(embed, tol);
}

}  // namespace

WModelReport w_model(const ContractionPair& p) {
    const Tolerances& tol = p.tol();
    const Index n = p.dim();
    Matrix w = build_w(p);
    Matrix proj = w * w.adjoint();
    Matrix id_n = Matrix::Identity(n, n);

    Matrix block(2 * n, 2 * n);
    block.topLeftCorner(n, n) = p.x();
    block.topRightCorner(n, n) = p.sqrt_x() * p.sqrt_y();
    block.bottomLeftCorner(n, n) = p.sqrt_y() * p.sqrt_x();
    block.bottomRightCorner(n, n) = p.y();

    Subspace clos_ran_x = p.space_x().range();
    Subspace clos_ran_y = p.space_y().range();
    Subspace clos_ran_xy = orthonormalize(p.x() * p.y(), tol, 1.0);

    WModelReport rep{
        w,
        proj,
        operator_norm(w.adjoint() * w - id_n),
        operator_norm(proj * proj - proj),
        operator_norm(proj - proj.adjoint()),
        operator_norm(proj - block),
        restricted_pair_kernel(p.sqrt_x(), p.sqrt_y(), clos_ran_x, clos_ran_y, tol),
        pair_span(-p.sqrt_y(), p.sqrt_x(), clos_ran_xy, tol),
        0.0,
        false};
    rep.kernel_gap = subspace_distance(rep.ker_wstar, rep.ker_wstar_predicted);
    rep.surjective = rep.ker_wstar.dim() == 0;
    return rep;
}

VModelReport v_model(const ContractionPair& p) {
    const Tolerances& tol = p.tol();
    const Index n = p.dim();
    Matrix v(2 * n, n);
    v.topRows(n) = p.x();
    v.bottomRows(n) = p.y();
    Matrix v_star(n, 2 * n);
    v_star.leftCols(n) = Matrix::Identity(n, n);
    v_star.rightCols(n) = Matrix::Identity(n, n);
    Matrix u = Matrix::Zero(2 * n, 2 * n);
    u.topLeftCorner(n, n) = p.sqrt_x();
    u.bottomRightCorner(n, n) = p.sqrt_y();

    // Gram of V in the range-space metric: (pinv X12 X)^* (pinv X12 X) + the
    // Y term collapses to X + Y = I in exact arithmetic.
    Matrix gx = p.space_x().pinv_sqrt_op() * p.x();
    Matrix gy = p.space_y().pinv_sqrt_op() * p.y();
    double gram_defect =
        operator_norm(gx.adjoint() * gx + gy.adjoint() * gy - Matrix::Identity(n, n));

    Matrix w = build_w(p);

    Subspace ran_x12 = p.space_x().range();
    Subspace ran_y12 = p.space_y().range();
    Subspace overlap = orthonormalize(p.sqrt_x() * p.sqrt_y(), tol, 1.0);
    Matrix id_n = Matrix::Identity(n, n);

    VModelReport rep{
        v,
        v_star,
        u,
        operator_norm(u * w - v),
        gram_defect,
        restricted_pair_kernel(id_n, id_n, ran_x12, ran_y12, tol),
        pair_span(id_n, -id_n, overlap, tol),
        0.0,
        false};
    rep.kernel_gap = subspace_distance(rep.ker_vstar, rep.ker_vstar_predicted);
    rep.surjective = rep.ker_vstar.dim() == 0;
    return rep;
}

PythagoreanSides pythagorean_check(const ContractionPair& p, const Vector& h) {
    if (h.size() != p.dim())
        throw DimensionMismatch("pythagorean_check: vector size does not match");
    // Components that a (numerically zero) factor reduces to roundoff count
    // as zero; their range-space norm is zero as well.
    Vector xh = snap_small(p.x() * h, h.norm(), p.tol());
    Vector yh = snap_small(p.y() * h, h.norm(), p.tol());
    PythagoreanSides sides{h.squaredNorm(), 0.0};
    sides.rhs = ors_norm_sq(p.space_x(), xh) + ors_norm_sq(p.space_y(), yh);
    return sides;
}

InekSides inek_check(const ContractionPair& p, const Vector& f, const Vector& g) {
    const Vector s = f + g;
    InekSides sides{s.squaredNorm(),
                    ors_norm_sq(p.space_x(), f) + ors_norm_sq(p.space_y(), g), false};
    const double scale = std::max(1.0, s.norm() + f.norm());
    sides.equality_predicted = (p.x() * s - f).norm() <= p.tol().member * scale;
    return sides;
}

Matrix parallel_sum(const Matrix& a, const Matrix& b, const Tolerances& tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
        throw DimensionMismatch("parallel_sum: matrices must be square of equal size");
    if (!all_finite(a) || !all_finite(b))
        throw NotPositive("parallel_sum: non-finite entries");
    if (!is_hermitian(a, tol.psd) || min_eigenvalue(a) < -tol.psd)
        throw NotPositive("parallel_sum: first argument is not PSD");
    if (!is_hermitian(b, tol.psd) || min_eigenvalue(b) < -tol.psd)
        throw NotPositive("parallel_sum: second argument is not PSD");
    return a * pinv(a + b, tol) * b;
}

}  // namespace relkit
