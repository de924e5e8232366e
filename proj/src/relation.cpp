#include "relkit/relation.hpp"

namespace relkit {

LinearRelation::LinearRelation(Index dim_h, Index dim_k, Subspace graph)
    : dim_h_(dim_h), dim_k_(dim_k), graph_(std::move(graph)) {
    if (dim_h_ < 1 || dim_k_ < 1)
        throw InvalidInput("LinearRelation: space dimensions must be positive");
    if (graph_.ambient() != dim_h_ + dim_k_)
        throw DimensionMismatch("LinearRelation: graph ambient must be dim_h + dim_k");
}

LinearRelation from_operator(const Matrix& m, const Tolerances& tol) {
    if (!all_finite(m)) throw InvalidInput("from_operator: non-finite entries");
    const Index h = m.cols();
    const Index k = m.rows();
    Matrix stacked(h + k, h);
    stacked << Matrix::Identity(h, h), m;
    return LinearRelation(h, k, orthonormalize(stacked, tol));
}

LinearRelation from_pairs(Index dim_h, Index dim_k, const Matrix& stacked_pairs,
                          const Tolerances& tol) {
    if (stacked_pairs.rows() != dim_h + dim_k)
        throw DimensionMismatch("from_pairs: stacked pairs must have dim_h + dim_k rows");
    return LinearRelation(dim_h, dim_k, orthonormalize(stacked_pairs, tol));
}

LinearRelation zero_on(const Subspace& dom, Index dim_k, const Tolerances& tol) {
    Matrix stacked(dom.ambient() + dim_k, dom.dim());
    stacked << dom.basis(), Matrix::Zero(dim_k, dom.dim());
    return LinearRelation(dom.ambient(), dim_k, orthonormalize(stacked, tol));
}

namespace {

// Coordinate slices of orthonormal graph bases carry unit scale, so rank
// decisions use a floor of 1; otherwise a noise-only slice would keep its
// roundoff directions.

Subspace h_slice(const LinearRelation& t, const Subspace& graph_part, const Tolerances& tol) {
    return orthonormalize(graph_part.basis().topRows(t.dim_h()), tol, 1.0);
}

Subspace k_slice(const LinearRelation& t, const Subspace& graph_part, const Tolerances& tol) {
    return orthonormalize(graph_part.basis().bottomRows(t.dim_k()), tol, 1.0);
}

Subspace h_times_zero(const LinearRelation& t) {
    Matrix basis = Matrix::Zero(t.dim_h() + t.dim_k(), t.dim_h());
    basis.topRows(t.dim_h()) = Matrix::Identity(t.dim_h(), t.dim_h());
    return Subspace(t.dim_h() + t.dim_k(), basis, Tolerances{});
}

Subspace zero_times_k(const LinearRelation& t) {
    Matrix basis = Matrix::Zero(t.dim_h() + t.dim_k(), t.dim_k());
    basis.bottomRows(t.dim_k()) = Matrix::Identity(t.dim_k(), t.dim_k());
    return Subspace(t.dim_h() + t.dim_k(), basis, Tolerances{});
}

}  // namespace

RelationParts parts(const LinearRelation& t, const Tolerances& tol) {
    const Subspace& g = t.graph();
    Subspace dom = orthonormalize(g.basis().topRows(t.dim_h()), tol, 1.0);
    Subspace ran = orthonormalize(g.basis().bottomRows(t.dim_k()), tol, 1.0);
    Subspace ker = h_slice(t, intersect(g, h_times_zero(t), tol), tol);
    Subspace mul = k_slice(t, intersect(g, zero_times_k(t), tol), tol);
    return RelationParts{std::move(dom), std::move(ran), std::move(ker), std::move(mul)};
}

LinearRelation adjoint(const LinearRelation& t, const Tolerances& tol) {
    // (k, h) lies in T* iff <f', k> = <f, h> for every (f, f') in T. With an
    // orthonormal graph basis [Bh; Bk] this is the kernel of [Bk^* , -Bh^*],
    // a matrix with exactly orthonormal rows.
    const Matrix& b = t.graph().basis();
    Matrix eqs(t.dim(), t.dim_k() + t.dim_h());
    eqs.leftCols(t.dim_k()) = b.bottomRows(t.dim_k()).adjoint();
    eqs.rightCols(t.dim_h()) = -b.topRows(t.dim_h()).adjoint();
    Matrix kernel = nullspace_basis(eqs, tol, 1.0);
    return LinearRelation(t.dim_k(), t.dim_h(),
                          Subspace(t.dim_k() + t.dim_h(), kernel, tol));
}

bool is_closable(const LinearRelation& t, const Tolerances& tol) {
    return parts(t, tol).mul.dim() == 0;
}

bool is_singular(const LinearRelation& t, const Tolerances& tol) {
    RelationParts p = parts(t, tol);
    return contains(p.mul, p.ran, tol);
}

LinearRelation multiply_left(const Matrix& r, const LinearRelation& t, const Tolerances& tol) {
    if (r.rows() != t.dim_k() || r.cols() != t.dim_k())
        throw DimensionMismatch("multiply_left: matrix must be square of size dim_k");
    Matrix mapped = t.graph().basis();
    mapped.bottomRows(t.dim_k()) = r * mapped.bottomRows(t.dim_k());
    // The graph basis is orthonormal, so the mapped columns carry unit scale.
    return LinearRelation(t.dim_h(), t.dim_k(), orthonormalize(mapped, tol, 1.0));
}

LinearRelation add(const LinearRelation& t1, const LinearRelation& t2, const Tolerances& tol) {
    if (t1.dim_h() != t2.dim_h() || t1.dim_k() != t2.dim_k())
        throw DimensionMismatch("add: relations live on different spaces");
    const Index nh = t1.dim_h();
    const Index nk = t1.dim_k();
    // Work in H x K x K: L1 = {(f, a, b) : (f, a) in T1}, L2 = {(f, a, b) :
    // (f, b) in T2}; the sum is the image of L1 cap L2 under (f,a,b) -> (f,a+b).
    // Both lift bases below are exactly orthonormal.
    Matrix l1 = Matrix::Zero(nh + 2 * nk, t1.dim() + nk);
    l1.block(0, 0, nh, t1.dim()) = t1.graph().basis().topRows(nh);
    l1.block(nh, 0, nk, t1.dim()) = t1.graph().basis().bottomRows(nk);
    l1.block(nh + nk, t1.dim(), nk, nk) = Matrix::Identity(nk, nk);

    Matrix l2 = Matrix::Zero(nh + 2 * nk, t2.dim() + nk);
    l2.block(0, 0, nh, t2.dim()) = t2.graph().basis().topRows(nh);
    l2.block(nh + nk, 0, nk, t2.dim()) = t2.graph().basis().bottomRows(nk);
    l2.block(nh, t2.dim(), nk, nk) = Matrix::Identity(nk, nk);

    Subspace meet = intersect(Subspace(nh + 2 * nk, l1, tol),
                              Subspace(nh + 2 * nk, l2, tol), tol);

    Matrix collapse = Matrix::Zero(nh + nk, nh + 2 * nk);
    collapse.block(0, 0, nh, nh) = Matrix::Identity(nh, nh);
    collapse.block(nh, nh, nk, nk) = Matrix::Identity(nk, nk);
    collapse.block(nh, nh + nk, nk, nk) = Matrix::Identity(nk, nk);
    return LinearRelation(nh, nk, orthonormalize(collapse * meet.basis(), tol, 1.0));
}

bool is_strict_sum(const LinearRelation& t1, const LinearRelation& t2, const Tolerances& tol) {
    if (t1.dim_h() != t2.dim_h() || t1.dim_k() != t2.dim_k())
        throw DimensionMismatch("is_strict_sum: relations live on different spaces");
    Subspace m1 = parts(t1, tol).mul;
    Subspace m2 = parts(t2, tol).mul;
    return intersect(m1, m2, tol).dim() == 0;
}

double relation_distance(const LinearRelation& a, const LinearRelation& b) {
    if (a.dim_h() != b.dim_h() || a.dim_k() != b.dim_k())
        throw DimensionMismatch("relation_distance: relations live on different spaces");
    return subspace_distance(a.graph(), b.graph());
}

RegularSingularSplit regular_singular_split(const LinearRelation& t, const Tolerances& tol) {
    Subspace mul = parts(t, tol).mul;
    Matrix p0 = mul.projector();
    Matrix id = Matrix::Identity(t.dim_k(), t.dim_k());
    return RegularSingularSplit{multiply_left(id - p0, t, tol),
                                multiply_left(p0, t, tol), std::move(p0)};
}

OperatorPart operator_part(const LinearRelation& t, const Tolerances& tol) {
    RelationParts p = parts(t, tol);
    if (p.mul.dim() != 0)
        throw NotClosable("operator_part: relation has a nontrivial multivalued part");
    const Matrix& b = t.graph().basis();
    Matrix bh = b.topRows(t.dim_h());
    Matrix bk = b.bottomRows(t.dim_k());
    // mul T = {0} makes bh full column rank, so bk pinv(bh) maps f to T f on
    // dom T and annihilates its complement.
    Matrix m = bk * pinv(bh, tol);
    return OperatorPart{std::move(p.dom), std::move(m)};
}

}  // namespace relkit
