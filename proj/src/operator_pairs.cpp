#include "relkit/operator_pairs.hpp"

namespace relkit {

namespace {

/// A split component that is zero up to roundoff (relative to the scale of
/// Psi) becomes an exact zero and its partner becomes Psi itself, so
/// downstream scale-free predicates see the operators the construction
/// means and the sum rebuilds Psi without residue.
void snap_split(Matrix& first, Matrix& second, const Matrix& psi, const Tolerances& tol) {
    const double cut = tol.rank * std::max(operator_norm(psi), 1.0);
    if (operator_norm(first) <= cut) {
        first.setZero();
        second = psi;
    } else if (operator_norm(second) <= cut) {
        second.setZero();
        first = psi;
    }
}

}  // namespace

OperatorPair make_operator_pair(Matrix phi, Matrix psi) {
    if (phi.cols() != psi.cols())
        throw DimensionMismatch("OperatorPair: Phi and Psi must share the parameter space");
    if (!all_finite(phi) || !all_finite(psi))
        throw InvalidInput("OperatorPair: non-finite entries");
    if (phi.rows() < 1 || psi.rows() < 1)
        throw InvalidInput("OperatorPair: target spaces must be nontrivial");
    return OperatorPair{std::move(phi), std::move(psi)};
}

LinearRelation relation_of_pair(const OperatorPair& p, const Tolerances& tol) {
    Matrix stacked(p.dim_h() + p.dim_k(), p.dim_e());
    stacked.topRows(p.dim_h()) = p.phi;
    stacked.bottomRows(p.dim_k()) = p.psi;
    return LinearRelation(p.dim_h(), p.dim_k(), orthonormalize(stacked, tol));
}

Subspace d_space(const OperatorPair& p, const Tolerances& tol) {
    Subspace ran_phi_star = orthonormalize(p.phi.adjoint(), tol);
    return preimage(Matrix(p.psi.adjoint()), ran_phi_star, tol);
}

bool is_regular(const OperatorPair& p, const Tolerances& tol) {
    return d_space(p, tol).dim() == p.dim_k();
}

RegularityCertificate regularity_certificate(const OperatorPair& p, const Tolerances& tol) {
    RegularityCertificate cert{};
    cert.d_space_full = is_regular(p, tol);
    Matrix ker_phi = nullspace_basis(p.phi, tol);
    cert.mul_trivial = orthonormalize(p.psi * ker_phi, tol, operator_norm(p.psi)).dim() == 0;
    Matrix ker_psi = nullspace_basis(p.psi, tol);
    cert.kernel_inclusion =
        ker_phi.cols() == 0 ||
        contains(Subspace(p.dim_e(), ker_psi, tol), Subspace(p.dim_e(), ker_phi, tol), tol);
    cert.agree = cert.d_space_full == cert.mul_trivial &&
                 cert.d_space_full == cert.kernel_inclusion;
    return cert;
}

bool is_singular_pair(const OperatorPair& p, const Tolerances& tol) {
    Subspace ran_phi_star = orthonormalize(p.phi.adjoint(), tol);
    Subspace ran_psi_star = orthonormalize(p.psi.adjoint(), tol);
    return intersect(ran_phi_star, ran_psi_star, tol).dim() == 0;
}

PairDecomposition lebesgue_pair(const OperatorPair& p, const Tolerances& tol) {
    Subspace d = d_space(p, tol);
    Matrix p0 = orthogonal_complement(d, tol).projector();
    Matrix id = Matrix::Identity(p.dim_k(), p.dim_k());

    PairDecomposition out{};
    out.psi1 = (id - p0) * p.psi;
    out.psi2 = p0 * p.psi;
    snap_split(out.psi1, out.psi2, p.psi, tol);
    out.k = p0;
    out.regular_part = is_regular(make_operator_pair(p.phi, out.psi1), tol);
    out.singular_part = is_singular_pair(make_operator_pair(p.phi, out.psi2), tol);
    out.pseudo_orthogonal = true;  // an orthogonal projection always splits
    out.lebesgue_type = out.regular_part && out.singular_part;
    out.split_direct = true;
    out.singular_cross_check = true;
    out.weak_b_prime = true;
    return out;
}

Matrix radon_nikodym(const OperatorPair& p, const Tolerances& tol) {
    Matrix ker_phi = nullspace_basis(p.phi, tol);
    if (orthonormalize(p.psi * ker_phi, tol, operator_norm(p.psi)).dim() != 0)
        throw NotRegular("radon_nikodym: Psi(ker Phi) is nontrivial");
    Matrix r = p.psi * pinv(p.phi, tol);
    const double scale = std::max(1.0, operator_norm(p.psi));
    if (operator_norm(p.psi - r * p.phi) > tol.member * scale)
        throw NotRegular("radon_nikodym: reconstruction residual exceeds tolerance");
    return r;
}

PairDecomposition pair_decompose(const OperatorPair& p, const Matrix& k, const Tolerances& tol) {
    if (k.rows() != p.dim_k() || k.cols() != p.dim_k())
        throw DimensionMismatch("pair_decompose: K must be square of size dim_k");
    require_contraction(k, tol, "pair_decompose");
    const Index n = p.dim_k();
    Matrix x = Matrix::Identity(n, n) - k;

    PairDecomposition out{};
    out.psi1 = x * p.psi;
    out.psi2 = k * p.psi;
    snap_split(out.psi1, out.psi2, p.psi, tol);
    out.k = k;

    // Splitting of Psi(ker Phi), checked directly on the kernel images.
    Matrix ker_phi = nullspace_basis(p.phi, tol);
    const double psi_scale = operator_norm(p.psi);
    Subspace s = orthonormalize(p.psi * ker_phi, tol, psi_scale);
    Subspace s1 = orthonormalize(out.psi1 * ker_phi, tol, psi_scale);
    Subspace s2 = orthonormalize(out.psi2 * ker_phi, tol, psi_scale);
    out.split_direct = subspace_distance(sum(s1, s2, tol), s) < tol.member &&
                       s1.dim() + s2.dim() == s.dim();

    // The relation-level route must agree; it is the defining one.
    Decomposition rel = decompose(relation_of_pair(p, tol), k, tol);
    out.pseudo_orthogonal = rel.pseudo_orthogonal;

    out.regular_part = is_regular(make_operator_pair(p.phi, out.psi1), tol);
    out.singular_part = is_singular_pair(make_operator_pair(p.phi, out.psi2), tol);
    out.lebesgue_type = out.regular_part && out.singular_part;

    // Independent singularity route for the second component.
    Subspace psi_star_k = orthonormalize(p.psi.adjoint() * k, tol);
    Subspace phi_star = orthonormalize(p.phi.adjoint(), tol);
    bool cross = intersect(psi_star_k, phi_star, tol).dim() == 0;
    out.singular_cross_check = cross == out.singular_part;

    out.weak_b_prime = contains(apply(x * k, s, tol, 1.0), intersect(s1, s2, tol), tol);
    return out;
}

PythagoreanSides pythagorean_pair_check(const OperatorPair& p, const Matrix& k,
                                        const Vector& eta, const Tolerances& tol) {
    if (eta.size() != p.dim_e())
        throw DimensionMismatch("pythagorean_pair_check: eta must live in the parameter space");
    PairDecomposition d = pair_decompose(p, k, tol);
    if (!d.pseudo_orthogonal)
        throw NotPseudoOrthogonal("pythagorean_pair_check: decomposition is not pseudo-orthogonal");
    Matrix x = Matrix::Identity(p.dim_k(), p.dim_k()) - k;
    ContractionPair pair(x, tol);
    const double scale = operator_norm(p.psi) * eta.norm();
    Vector v1 = snap_small(d.psi1 * eta, scale, tol);
    Vector v2 = snap_small(d.psi2 * eta, scale, tol);
    PythagoreanSides sides{(p.psi * eta).squaredNorm(), 0.0};
    sides.rhs = ors_norm_sq(pair.space_x(), v1) + ors_norm_sq(pair.space_y(), v2);
    return sides;
}

}  // namespace relkit
