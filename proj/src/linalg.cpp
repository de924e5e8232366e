#include "relkit/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace relkit {

double operator_norm(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

bool all_finite(const Matrix& m) {
    return m.allFinite();
}

Matrix pinv(const Matrix& m, const Tolerances& tol) {
    if (m.rows() == 0 || m.cols() == 0) return Matrix::Zero(m.cols(), m.rows());
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cutoff = tol.rank * sv(0);
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff && sv(i) > 0.0) inv(i) = 1.0 / sv(i);
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

Matrix nullspace_basis(const Matrix& m, const Tolerances& tol, double scale_floor) {
    const Index n = m.cols();
    if (n == 0) return Matrix::Zero(0, 0);
    if (m.rows() == 0) return Matrix::Identity(n, n);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = std::max(sv.size() > 0 ? sv(0) : 0.0, scale_floor);
    const double cutoff = tol.rank * scale;
    Index rank = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return svd.matrixV().rightCols(n - rank);
}

bool is_hermitian(const Matrix& m, double slack) {
    const double scale = std::max(1.0, operator_norm(m));
    return operator_norm(m - m.adjoint()) <= slack * scale;
}

double min_eigenvalue(const Matrix& m) {
    if (m.rows() == 0) return 0.0;
    Matrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

bool is_nonnegative_contraction(const Matrix& m, const Tolerances& tol) {
    if (m.rows() != m.cols()) return false;
    if (!all_finite(m)) return false;
    if (m.rows() == 0) return true;
    if (!is_hermitian(m, tol.psd)) return false;
    Matrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol.psd &&
           es.eigenvalues().maxCoeff() <= 1.0 + tol.psd;
}

void require_contraction(const Matrix& m, const Tolerances& tol, const char* what) {
    if (!is_nonnegative_contraction(m, tol))
        throw InvalidContraction(std::string(what) + ": not a nonnegative Hermitian contraction");
}

namespace {

Matrix clamped_sqrt(const Matrix& m, double lo, double hi) {
    if (m.rows() == 0) return m;
    Matrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Eigen::VectorXd lam = es.eigenvalues();
    for (Index i = 0; i < lam.size(); ++i)
        lam(i) = std::sqrt(std::min(std::max(lam(i), lo), hi));
    return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Matrix contraction_sqrt(const Matrix& m, const Tolerances& tol) {
    require_contraction(m, tol, "contraction_sqrt");
    return clamped_sqrt(m, 0.0, 1.0);
}

Matrix psd_sqrt(const Matrix& m, const Tolerances& tol) {
    if (m.rows() != m.cols() || !all_finite(m) || !is_hermitian(m, tol.psd) ||
        min_eigenvalue(m) < -tol.psd)
        throw NotPositive("psd_sqrt: matrix is not Hermitian positive semidefinite");
    return clamped_sqrt(m, 0.0, std::numeric_limits<double>::infinity());
}

Vector snap_small(Vector v, double scale, const Tolerances& tol) {
    if (v.norm() <= tol.rank * std::max(scale, 1.0)) v.setZero();
    return v;
}

}  // namespace relkit
