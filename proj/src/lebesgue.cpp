#include "relkit/lebesgue.hpp"

#include "relkit/random_gen.hpp"

namespace relkit {

namespace {

SplitCertificate splitting_condition(const LinearRelation& t, const Matrix& x, const Matrix& y,
                                     const Tolerances& tol) {
    Subspace mul_t = parts(t, tol).mul;
    Subspace x_mul = apply(x, mul_t, tol, 1.0);
    Subspace y_mul = apply(y, mul_t, tol, 1.0);
    Subspace joined = sum(x_mul, y_mul, tol);
    SplitCertificate cert{mul_t, x_mul, y_mul, subspace_distance(joined, mul_t), false, false,
                          false};
    cert.equality = cert.sum_gap < tol.member;
    cert.direct = cert.equality && (x_mul.dim() + y_mul.dim() == mul_t.dim());
    cert.mul_invariant = contains(mul_t, x_mul, tol);
    return cert;
}

bool is_orthogonal_projection(const Matrix& k, const Tolerances& tol) {
    return is_hermitian(k, tol.member) && operator_norm(k * k - k) <= tol.member;
}

}  // namespace

Decomposition decompose(const LinearRelation& t, const Matrix& k, const Tolerances& tol) {
    if (k.rows() != t.dim_k() || k.cols() != t.dim_k())
        throw DimensionMismatch("decompose: K must be square of size dim_k");
    require_contraction(k, tol, "decompose");
    Matrix x = Matrix::Identity(t.dim_k(), t.dim_k()) - k;

    Decomposition d{t,
                    multiply_left(x, t, tol),
                    multiply_left(k, t, tol),
                    k,
                    false,
                    false,
                    false,
                    false,
                    false,
                    splitting_condition(t, x, k, tol),
                    std::nullopt};
    d.strict = is_strict_sum(d.t1, d.t2, tol);
    d.pseudo_orthogonal = d.split.direct && d.split.mul_invariant;
    return d;
}

Decomposition classify(Decomposition d, const Tolerances& tol) {
    const Index n = d.t.dim_k();
    Matrix x = Matrix::Identity(n, n) - d.k;

    LinearRelation t_star = adjoint(d.t, tol);
    RelationParts star_parts = parts(t_star, tol);

    ClassifyCertificate cert{};
    cert.closable_first = is_closable(d.t1, tol);
    cert.singular_second = is_singular(d.t2, tol);

    // Finite-dimensional forms of the generating conditions: closability of
    // (I-K) T via (I-K) ran(I-K) inside dom T*, singularity of K T via
    // ran K cap dom T* inside ker T*.
    Subspace ran_x = orthonormalize(x, tol, 1.0);
    Subspace x_ran_x = apply(x, ran_x, tol, 1.0);
    cert.criterion_closable = contains(star_parts.dom, x_ran_x, tol);
    Subspace ran_k = orthonormalize(d.k, tol, 1.0);
    cert.criterion_singular = contains(star_parts.ker, intersect(ran_k, star_parts.dom, tol), tol);
    cert.criteria_agree = (cert.criterion_closable == cert.closable_first) &&
                          (cert.criterion_singular == cert.singular_second);

    d.lebesgue_type = cert.closable_first && cert.singular_second;
    d.orthogonal = is_orthogonal_projection(d.k, tol);
    d.classify_cert = cert;
    d.classified = true;
    return d;
}

ProductCriterion closable_product_criterion(const LinearRelation& t, const Matrix& r,
                                            const Tolerances& tol) {
    if (r.rows() != t.dim_k() || r.cols() != t.dim_k())
        throw DimensionMismatch("closable_product_criterion: R must be square of size dim_k");
    require_contraction(r, tol, "closable_product_criterion");

    RelationParts star_parts = parts(adjoint(t, tol), tol);
    Subspace r_ran_r = apply(r, orthonormalize(r, tol, 1.0), tol, 1.0);

    ProductCriterion out{false, false, false, r_ran_r, star_parts.dom, true};
    out.holds = contains(star_parts.dom, r_ran_r, tol);
    out.direct_predicate = is_closable(multiply_left(r, t, tol), tol);
    out.agree = out.holds == out.direct_predicate;
    if (out.holds) {
        Subspace ker_r = orthogonal_complement(orthonormalize(r, tol, 1.0), tol);
        out.necessary_condition = contains(ker_r, parts(t, tol).mul, tol);
    }
    return out;
}

ProductCriterion singular_product_criterion(const LinearRelation& t, const Matrix& r,
                                            const Tolerances& tol) {
    if (r.rows() != t.dim_k() || r.cols() != t.dim_k())
        throw DimensionMismatch("singular_product_criterion: R must be square of size dim_k");
    require_contraction(r, tol, "singular_product_criterion");

    RelationParts t_parts = parts(t, tol);
    RelationParts star_parts = parts(adjoint(t, tol), tol);
    Subspace meet = intersect(orthonormalize(r, tol, 1.0), star_parts.dom, tol);

    ProductCriterion out{false, false, false, meet, star_parts.ker, true};
    const bool dense_range = t_parts.ran.dim() == t.dim_k();
    out.holds = dense_range ? meet.dim() == 0 : contains(star_parts.ker, meet, tol);
    out.direct_predicate = is_singular(multiply_left(r, t, tol), tol);
    out.agree = out.holds == out.direct_predicate;
    return out;
}

Decomposition lebesgue_decomposition(const LinearRelation& t, const Tolerances& tol) {
    Matrix p0 = parts(t, tol).mul.projector();
    return classify(decompose(t, p0, tol), tol);
}

Matrix admissible_k(const LinearRelation& t, const Matrix& g, const Tolerances& tol) {
    const Index n = t.dim_k();
    if (g.rows() != n || g.cols() != n)
        throw DimensionMismatch("admissible_k: G must be square of size dim_k");
    require_contraction(g, tol, "admissible_k");

    LinearRelation t_star = adjoint(t, tol);
    RelationParts star_parts = parts(t_star, tol);
    Subspace mul_t = parts(t, tol).mul;
    const Subspace& dom_star = star_parts.dom;  // = (mul T)^perp

    Matrix p_dom = dom_star.projector();
    if (operator_norm(g - p_dom * g * p_dom) > tol.member * std::max(1.0, operator_norm(g)))
        throw ConditionsViolated("admissible_k: G is not supported on dom T*");

    Subspace ran_g = orthonormalize(g, tol, 1.0);
    if (!contains(star_parts.ker, intersect(ran_g, dom_star, tol), tol))
        throw ConditionsViolated(
            "admissible_k: ran G cap dom T* is not contained in ker T*");

    // Regularity condition on I - G, in its subspace form. dom T* is closed
    // here, so this amounts to (P - G) ran(P - G) staying inside dom T*.
    Subspace ran_rest = orthonormalize(p_dom - g, tol, 1.0);
    if (!contains(dom_star, apply(p_dom - g, ran_rest, tol, 1.0), tol))
        throw ConditionsViolated(
            "admissible_k: (I - G) does not map its range into dom T*");

    return mul_t.projector() + g;
}

bool domination_leq(const LinearRelation& t1, const LinearRelation& t2, const Tolerances& tol,
                    double psd_slack) {
    OperatorPart op1 = operator_part(t1, tol);  // throws NotClosable when mul is nontrivial
    OperatorPart op2 = operator_part(t2, tol);
    if (!contains(op1.domain, op2.domain, tol)) return false;
    if (op2.domain.dim() == 0) return true;
    const Matrix& d2 = op2.domain.basis();
    Matrix gap = d2.adjoint() *
                 (op2.matrix.adjoint() * op2.matrix - op1.matrix.adjoint() * op1.matrix) * d2;
    return min_eigenvalue(gap) >= -psd_slack;
}

RangeOverlap range_overlap(const LinearRelation& t, const Matrix& k, const Tolerances& tol) {
    Decomposition d = decompose(t, k, tol);
    if (!d.pseudo_orthogonal)
        throw NotPseudoOrthogonal("range_overlap: the pair (T, K) fails the splitting condition");
    const Index n = t.dim_k();
    Matrix x = Matrix::Identity(n, n) - k;

    Subspace ran_t1 = parts(d.t1, tol).ran;
    Subspace ran_t2 = parts(d.t2, tol).ran;
    Subspace ran_t = parts(t, tol).ran;

    Subspace m = intersect(ran_t, preimage(x, ran_t, tol, 1.0), tol);
    RangeOverlap out{intersect(ran_t1, ran_t2, tol), apply(x * k, m, tol, 1.0), m, 0.0,
                     std::nullopt};
    out.gap = subspace_distance(out.direct, out.via_m);
    if (ran_t.dim() == n)
        out.dense_range_gap = subspace_distance(out.direct, orthonormalize(x * k, tol, 1.0));
    return out;
}

UniquenessReport uniqueness_check(const LinearRelation& t, int trials, std::uint64_t seed,
                                  const Tolerances& tol) {
    Decomposition canonical = lebesgue_decomposition(t, tol);
    LinearRelation t_star = adjoint(t, tol);
    RelationParts star_parts = parts(t_star, tol);
    Subspace support = intersect(star_parts.ker, star_parts.dom, tol);

    UniquenessReport rep;
    rep.admissible_dim = static_cast<int>(support.dim());
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, "uniqueness_check", static_cast<std::uint64_t>(trial)));
        Matrix g = random_contraction_on(support, rng, 0.95, tol);
        Matrix k = admissible_k(t, g, tol);
        Decomposition d = classify(decompose(t, k, tol), tol);
        double gap1 = relation_distance(d.t1, canonical.t1);
        double gap2 = relation_distance(d.t2, canonical.t2);
        rep.max_gap_regular = std::max(rep.max_gap_regular, gap1);
        rep.max_gap_singular = std::max(rep.max_gap_singular, gap2);
        if (!d.pseudo_orthogonal || !d.lebesgue_type || gap1 > tol.member || gap2 > tol.member)
            ++rep.violations;
        ++rep.trials;
    }
    return rep;
}

AddendumReport addendum_check(const LinearRelation& t, const Matrix& k, const Tolerances& tol) {
    Decomposition d = decompose(t, k, tol);
    const Index n = t.dim_k();
    Matrix x = Matrix::Identity(n, n) - k;

    Subspace mul1 = parts(d.t1, tol).mul;
    Subspace mul2 = parts(d.t2, tol).mul;
    Subspace meet = intersect(mul1, mul2, tol);
    Subspace xy_mul = apply(x * k, d.split.mul_t, tol, 1.0);

    AddendumReport rep{};
    rep.weak_b_prime = contains(xy_mul, meet, tol);
    rep.strict = d.strict;
    rep.strong_conditions = d.pseudo_orthogonal;
    rep.weak_conditions = d.split.equality && rep.weak_b_prime;
    rep.strict_equivalence = !rep.strict || (rep.weak_conditions == rep.strong_conditions);
    return rep;
}

}  // namespace relkit
