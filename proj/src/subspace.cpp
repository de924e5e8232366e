#include "relkit/subspace.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace relkit {

Subspace::Subspace(Index ambient_dim, Matrix orthonormal_basis, const Tolerances& tol)
    : ambient_(ambient_dim), basis_(std::move(orthonormal_basis)) {
    if (ambient_ < 1) throw InvalidInput("Subspace: ambient dimension must be positive");
    if (basis_.rows() != ambient_)
        throw DimensionMismatch("Subspace: basis rows do not match ambient dimension");
    if (basis_.cols() > ambient_)
        throw InvalidInput("Subspace: more basis vectors than ambient dimension");
    if (!all_finite(basis_)) throw InvalidInput("Subspace: non-finite basis entries");
    if (basis_.cols() > 0) {
        Matrix gram = basis_.adjoint() * basis_;
        double defect = operator_norm(gram - Matrix::Identity(basis_.cols(), basis_.cols()));
        if (defect > tol.orth)
            throw InvalidInput("Subspace: basis is not orthonormal within tolerance");
    }
}

Subspace Subspace::zero(Index ambient_dim) {
    return Subspace(ambient_dim, Matrix::Zero(ambient_dim, 0), Tolerances{});
}

Subspace Subspace::full(Index ambient_dim) {
    return Subspace(ambient_dim, Matrix::Identity(ambient_dim, ambient_dim), Tolerances{});
}

Subspace orthonormalize(const Matrix& m, const Tolerances& tol, double scale_floor) {
    if (m.rows() < 1) throw InvalidInput("orthonormalize: matrix must have at least one row");
    if (!all_finite(m)) throw InvalidInput("orthonormalize: non-finite entries");
    if (m.cols() == 0) return Subspace::zero(m.rows());
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double scale = std::max(sv.size() > 0 ? sv(0) : 0.0, scale_floor);
    const double cutoff = tol.rank * scale;
    Index rank = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff && sv(i) > 0.0) ++rank;
    return Subspace(m.rows(), svd.matrixU().leftCols(rank), tol);
}

static void check_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
    if (a.ambient() != b.ambient())
        throw DimensionMismatch(std::string(op) + ": ambient dimensions differ");
}

Subspace sum(const Subspace& a, const Subspace& b, const Tolerances& tol) {
    check_same_ambient(a, b, "sum");
    Matrix stacked(a.ambient(), a.dim() + b.dim());
    stacked << a.basis(), b.basis();
    return orthonormalize(stacked, tol);
}

Subspace orthogonal_complement(const Subspace& s, const Tolerances& tol) {
    const Index n = s.ambient();
    const Index r = s.dim();
    if (r == 0) return Subspace::full(n);
    if (r == n) return Subspace::zero(n);
    // The stored basis is orthonormal, so a Householder completion is exact;
    // no rank decision is involved.
    Eigen::HouseholderQR<Matrix> qr(s.basis());
    Matrix q = qr.householderQ();
    return Subspace(n, q.rightCols(n - r), tol);
}

Subspace intersect(const Subspace& a, const Subspace& b, const Tolerances& tol) {
    check_same_ambient(a, b, "intersect");
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient());
    // a cap b = (a^perp + b^perp)^perp keeps every rank decision on matrices
    // of unit scale.
    return orthogonal_complement(
        sum(orthogonal_complement(a, tol), orthogonal_complement(b, tol), tol), tol);
}

bool contains(const Subspace& outer, const Subspace& inner, const Tolerances& tol) {
    check_same_ambient(outer, inner, "contains");
    if (inner.dim() == 0) return true;
    Matrix residual = inner.basis() - outer.projector() * inner.basis();
    for (Index j = 0; j < residual.cols(); ++j)
        if (residual.col(j).norm() > tol.member) return false;
    return true;
}

double subspace_distance(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw DimensionMismatch("subspace_distance: ambient dimensions differ");
    Matrix diff = a.projector() - b.projector();
    if (diff.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es((diff + diff.adjoint()) / 2.0,
                                             Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

Subspace preimage(const Matrix& m, const Subspace& s, const Tolerances& tol,
                  double scale_floor) {
    if (m.rows() != s.ambient())
        throw DimensionMismatch("preimage: matrix rows do not match subspace ambient");
    Matrix defect = m - s.projector() * m;
    Matrix kernel = nullspace_basis(defect, tol, std::max(operator_norm(m), scale_floor));
    return Subspace(m.cols(), kernel, tol);
}

Subspace apply(const Matrix& m, const Subspace& s, const Tolerances& tol, double scale_floor) {
    if (m.cols() != s.ambient())
        throw DimensionMismatch("apply: matrix cols do not match subspace ambient");
    if (m.rows() < 1) throw InvalidInput("apply: empty codomain");
    return orthonormalize(m * s.basis(), tol, std::max(operator_norm(m), scale_floor));
}

}  // namespace relkit
