#include "relkit/verify.hpp"

#include "relkit/complementation.hpp"
#include "relkit/lebesgue.hpp"
#include "relkit/operator_pairs.hpp"
#include "relkit/random_gen.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

namespace relkit {

namespace {

struct Outcome {
    bool ok = true;
    double residual = 0.0;
    std::string note;
};

Outcome fail(double residual, std::string note) {
    return Outcome{false, residual, std::move(note)};
}

Outcome pass(double residual = 0.0) {
    return Outcome{true, residual, {}};
}

using PropertyFn = std::function<Outcome(Rng&, int, const Tolerances&)>;

struct Property {
    const char* name;
    PropertyFn fn;
};

Index rand_dim(Rng& rng, int max_dim) {
    return static_cast<Index>(rng.uniform_int(1, max_dim));
}

Spectrum rand_spectrum(Rng& rng) {
    switch (rng.uniform_int(0, 2)) {
        case 0: return Spectrum::Uniform01;
        case 1: return Spectrum::Projection;
        default: return Spectrum::MixedAtoms;
    }
}

double rel_gap(double lhs, double rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

double rel_gap(Complex lhs, Complex rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

/// Relative Pythagorean defect; both sides roundoff-small counts as exact.
double pyth_gap(const PythagoreanSides& sides) {
    if (sides.lhs <= 1e-20) return std::abs(sides.rhs - sides.lhs) <= 1e-20 ? 0.0 : 1.0;
    return std::abs(sides.lhs - sides.rhs) / sides.lhs;
}

// ---------------------------------------------------------------- subspace

Outcome prop_orthonormalize_idempotent(Rng& rng, int max_dim, const Tolerances& tol) {
    const Index n = rand_dim(rng, max_dim);
    const Index r = static_cast<Index>(rng.uniform_int(0, static_cast<int>(n)));
    Matrix m(n, 2 * r);
    m.leftCols(r) = random_matrix(n, r, rng);
    m.rightCols(r) = m.leftCols(r) * random_matrix(r, r, rng);  // dependent columns
    Subspace s = orthonormalize(m, tol);
    Subspace again = orthonormalize(s.basis(), tol);
    const double gap = subspace_distance(s, again);
    return gap < tol.member ? pass(gap) : fail(gap, "re-orthonormalization moved the subspace");
}

Outcome prop_dimension_formula(Rng& rng, int max_dim, const Tolerances& tol) {
    const Index n = rand_dim(rng, max_dim);
    Subspace s1 = random_subspace(n, rng.uniform_int(0, static_cast<int>(n)), rng, tol);
    // Half the time force a shared sub-basis so the intersection is nontrivial.
    Subspace s2 = random_subspace(n, rng.uniform_int(0, static_cast<int>(n)), rng, tol);
    if (rng.bernoulli(0.5) && s1.dim() > 0) {
        const Index shared = static_cast<Index>(rng.uniform_int(1, static_cast<int>(s1.dim())));
        Matrix cols(n, shared + s2.dim());
        cols.leftCols(shared) = s1.basis().leftCols(shared);
        cols.rightCols(s2.dim()) = s2.basis();
        s2 = orthonormalize(cols, tol);
    }
    const Index lhs = sum(s1, s2, tol).dim() + intersect(s1, s2, tol).dim();
    const Index rhs = s1.dim() + s2.dim();
    const double gap = static_cast<double>(std::abs(lhs - rhs));
    return lhs == rhs ? pass() : fail(gap, "dim(sum) + dim(cap) != dim + dim");
}

Outcome prop_complement_involution(Rng& rng, int max_dim, const Tolerances& tol) {
    const Index n = rand_dim(rng, max_dim);
    Subspace s = random_subspace(n, rng.uniform_int(0, static_cast<int>(n)), rng, tol);
    const double gap =
        subspace_distance(s, orthogonal_complement(orthogonal_complement(s, tol), tol));
    return gap < tol.member ? pass(gap) : fail(gap, "double complement moved the subspace");
}

Outcome prop_contains_antisymmetry(Rng& rng, int max_dim, const Tolerances& tol) {
    const Index n = rand_dim(rng, max_dim);
    Subspace a = random_subspace(n, rng.uniform_int(0, static_cast<int>(n)), rng, tol);
    Subspace b = a;
    if (rng.bernoulli(0.5)) {
        b = random_subspace(n, rng.uniform_int(0, static_cast<int>(n)), rng, tol);
    } else if (a.dim() > 0) {
        // Same span through a random change of basis.
        Matrix mix = random_matrix(a.dim(), a.dim(), rng) +
                     3.0 * Matrix::Identity(a.dim(), a.dim());
        b = orthonormalize(a.basis() * mix, tol);
    }
    const bool mutual = contains(a, b, tol) && contains(b, a, tol);
    const bool equal = subspace_distance(a, b) < tol.member;
    return mutual == equal ? pass() : fail(1.0, "mutual containment disagrees with the gap");
}

// ---------------------------------------------------------------- relation

LinearRelation rand_relation(Rng& rng, int max_dim, const Tolerances& tol) {
    return random_relation(rand_dim(rng, max_dim), rand_dim(rng, max_dim), rng,
                           rng.bernoulli(0.5), tol);
}

Outcome prop_adjoint_involution(Rng& rng, int max_dim, const Tolerances& tol) {
    LinearRelation t = rand_relation(rng, max_dim, tol);
    const double gap = relation_distance(t, adjoint(adjoint(t, tol), tol));
    return gap < tol.member ? pass(gap) : fail(gap, "double adjoint moved the graph");
}

Outcome prop_adjoint_dimension(Rng& rng, int max_dim, const Tolerances& tol) {
    LinearRelation t = rand_relation(rng, max_dim, tol);
    const Index expected = t.dim_h() + t.dim_k();
    const Index got = t.dim() + adjoint(t, tol).dim();
    return got == expected ? pass() : fail(1.0, "dim T + dim T* is off");
}

Outcome prop_adjoint_duality(Rng& rng, int max_dim, const Tolerances& tol) {
    LinearRelation t = rand_relation(rng, max_dim, tol);
    RelationParts p = parts(t, tol);
    RelationParts q = parts(adjoint(t, tol), tol);
    const double g1 = subspace_distance(q.mul, orthogonal_complement(p.dom, tol));
    const double g2 = subspace_distance(q.dom, orthogonal_complement(p.mul, tol));
    const double worst = std::max(g1, g2);
    return worst < tol.member ? pass(worst) : fail(worst, "adjoint duality identities failed");
}

LinearRelation rand_singular_relation(Rng& rng, int max_dim, const Tolerances& tol) {
    const Index nh = rand_dim(rng, max_dim);
    const Index nk = rand_dim(rng, max_dim);
    Subspace dom = random_subspace(nh, rng.uniform_int(0, static_cast<int>(nh)), rng, tol);
    Subspace ran = random_subspace(nk, rng.uniform_int(0, static_cast<int>(nk)), rng, tol);
    Matrix cols = Matrix::Zero(nh + nk, dom.dim() + ran.dim());
    cols.block(0, 0, nh, dom.dim()) = dom.basis();
    cols.block(nh, dom.dim(), nk, ran.dim()) = ran.basis();
    return LinearRelation(nh, nk, orthonormalize(cols, tol));
}

Outcome prop_singular_duality(Rng& rng, int max_dim, const Tolerances& tol) {
    LinearRelation t = rng.bernoulli(0.4) ? rand_singular_relation(rng, max_dim, tol)
                                          : rand_relation(rng, max_dim, tol);
    const bool direct = is_singular(t, tol);
    const bool dual = is_singular(adjoint(t, tol), tol);
    return direct == dual ? pass() : fail(1.0, "singularity is not adjoint-invariant");
}

Outcome prop_mul_of_product(Rng& rng, int max_dim, const Tolerances& tol) {
    LinearRelation t = rand_relation(rng, max_dim, tol);
    Matrix r = random_contraction(t.dim_k(), rng, rand_spectrum(rng));
    Subspace lhs = parts(multiply_left(r, t, tol), tol).mul;
    Subspace rhs = apply(r, parts(t, tol).mul, tol, 1.0);
    const double gap = subspace_distance(lhs, rhs);
    return gap < tol.member ? pass(gap) : fail(gap, "mul(RT) != R mul T");
}

Outcome prop_split_reconstruction(Rng& rng, int max_dim, const Tolerances& tol) {
    LinearRelation t = rand_relation(rng, max_dim, tol);
    RegularSingularSplit split = regular_singular_split(t, tol);
    const double gap = relation_distance(add(split.regular, split.singular, tol), t);
    if (gap >= tol.member) return fail(gap, "regular + singular does not rebuild T");
    if (!is_closable(split.regular, tol)) return fail(1.0, "regular part is not closable");
    if (!is_singular(split.singular, tol)) return fail(1.0, "singular part is not singular");
    return pass(gap);
}

// ----------------------------------------------------------- complementation

Outcome prop_inner_identity(Rng& rng, int max_dim, const Tolerances& tol) {
    const Index n = rand_dim(rng, max_dim);
    OperatorRangeSpace space(random_contraction(n, rng, rand_spectrum(rng)), tol);
    Vector phi = random_vector(n, rng);
    Vector psi = random_vector(n, rng);
    const Matrix& a = space.op();
    Vector a_phi = snap_small(a * phi, phi.norm(), tol);
    Vector a_psi = snap_small(a * psi, psi.norm(), tol);
    Vector r_phi = snap_small(space.sqrt_op() * phi, phi.norm(), tol);
    const Complex lhs1 = ors_inner(space, a_phi, a_psi);
    const Complex rhs1 = a_phi.dot(psi);
    const Complex lhs2 = ors_inner(space, r_phi, a_psi);
    const Complex rhs2 = r_phi.dot(psi);
    const double worst = std::max(rel_gap(lhs1, rhs1), rel_gap(lhs2, rhs2));
    return worst < tol.member ? pass(worst) : fail(worst, "range-space inner identities failed");
}

Outcome prop_norm_inequality(Rng& rng, int max_dim, const Tolerances& tol) {
    const Index n = rand_dim(rng, max_dim);
    OperatorRangeSpace space(random_contraction(n, rng, rand_spectrum(rng)), tol);
    Vector seed_vec = random_vector(n, rng);
    Vector u = snap_small(space.sqrt_op() * seed_vec, seed_vec.norm(), tol);
    const double range_norm = std::sqrt(std::max(0.0, ors_norm_sq(space, u)));
    const double ambient = u.norm();
    const double violation = std::max(0.0, ambient - range_norm);
    return violation <= tol.member * std::max(1.0, ambient)
               ? pass(violation)
               : fail(violation, "range norm fell below the ambient norm");
}

Outcome prop_overlap_space(Rng& rng, int max_dim, const Tolerances& tol) {
    const Index n = rand_dim(rng, max_dim);
    ContractionPair p(random_contraction(n, rng, rand_spectrum(rng)), tol);
    OverlapSpace overlap = overlap_space(p);
    double worst = overlap.k0_gap;
    Vector h = random_vector(n, rng);
    Vector g = random_vector(n, rng);
    Vector u = snap_small(p.sqrt_x() * p.sqrt_y() * h, h.norm(), tol);
    Vector v = snap_small(p.sqrt_x() * p.sqrt_y() * g, g.norm(), tol);
    const Complex lhs = overlap_inner(p, u, v);
    const Complex rhs = ors_inner(overlap.space, u, v);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)}));
    return worst < 1e-7 ? pass(worst) : fail(worst, "overlap inner product identities failed");
}

Outcome prop_parallel_sum_projection(Rng& rng, int max_dim, const Tolerances& tol) {
    const Index n = rand_dim(rng, max_dim);
    const bool projection = rng.bernoulli(0.5);
    Matrix k = random_contraction(n, rng,
                                  projection ? Spectrum::Projection : Spectrum::StrictMargin);
    Matrix id = Matrix::Identity(n, n);
    const double ps_norm = operator_norm(parallel_sum(id - k, k, tol));
    const double idem = operator_norm(k * k - k);
    const bool ps_zero = ps_norm < 1e-8;
    const bool is_proj = idem < 1e-8;
    if (ps_zero != is_proj) return fail(1.0, "parallel-sum projection test misclassified");
    return pass(is_proj ? ps_norm : 0.0);
}

Outcome prop_projection_inner_coincide(Rng& rng, int max_dim, const Tolerances& tol) {
    const Index n = rand_dim(rng, max_dim);
    OperatorRangeSpace space(random_contraction(n, rng, Spectrum::Projection), tol);
    Vector seed_u = random_vector(n, rng);
    Vector seed_v = random_vector(n, rng);
    Vector u = snap_small(space.op() * seed_u, seed_u.norm(), tol);
    Vector v = snap_small(space.op() * seed_v, seed_v.norm(), tol);
    const Complex lhs = ors_inner(space, u, v);
    const Complex rhs = u.dot(v);
    const double gap = std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return gap < tol.member ? pass(gap)
                            : fail(gap, "projection range inner product differs from ambient");
}

Outcome prop_pythagorean(Rng& rng, int max_dim, const Tolerances& tol) {
    const Index n = rand_dim(rng, max_dim);
    ContractionPair p(random_contraction(n, rng, rand_spectrum(rng)), tol);
    Vector h = random_vector(n, rng);
    PythagoreanSides sides = pythagorean_check(p, h);
    const double gap = pyth_gap(sides);
    return gap <= 1e-10 ? pass(gap) : fail(gap, "Pythagorean identity failed");
}

Outcome prop_range_intersections(Rng& rng, int max_dim, const Tolerances& tol) {
    const Index n = rand_dim(rng, max_dim);
    ContractionPair p(random_contraction(n, rng, rand_spectrum(rng)), tol);
    KlemmaReport rep = klemma_report(p);
    const double worst =
        std::max({rep.kernel_gap, rep.range_gap, rep.sqrt_gap, rep.closure_gap});
    return rep.pass ? pass(worst) : fail(worst, "kernel/range identities failed");
}

Outcome prop_model_isometries(Rng& rng, int max_dim, const Tolerances& tol) {
    const Index n = rand_dim(rng, max_dim);
    ContractionPair p(random_contraction(n, rng, rand_spectrum(rng)), tol);
    WModelReport w = w_model(p);
    VModelReport v = v_model(p);
    const double worst =
        std::max({w.isometry_residual, w.idempotent_residual, w.hermitian_residual,
                  w.block_residual, v.uw_equals_v_residual, v.isometry_residual});
    return worst < 1e-9 ? pass(worst) : fail(worst, "model isometry identities failed");
}

Outcome prop_model_kernels(Rng& rng, int max_dim, const Tolerances& tol) {
    const Index n = rand_dim(rng, max_dim);
    Matrix x = random_contraction(n, rng, rng.bernoulli(0.5) ? Spectrum::Projection
                                                             : Spectrum::MixedAtoms);
    ContractionPair p(x, tol);
    WModelReport w = w_model(p);
    VModelReport v = v_model(p);
    const double worst = std::max(w.kernel_gap, v.kernel_gap);
    if (worst >= 1e-8) return fail(worst, "model kernel bases differ from prediction");
    const bool idempotent = operator_norm(x * x - x) < 1e-8;
    if (w.surjective != idempotent || v.surjective != idempotent)
        return fail(1.0, "surjectivity disagrees with idempotency");
    const Index overlap_dim = orthonormalize(p.x() * p.y(), tol, 1.0).dim();
    if (v.ker_vstar.dim() != overlap_dim)
        return fail(1.0, "kernel dimension differs from the overlap dimension");
    return pass(worst);
}

// ---------------------------------------------------------------- lebesgue

Outcome prop_decompose_roundtrip(Rng& rng, int max_dim, const Tolerances& tol) {
    LinearRelation t = rand_relation(rng, max_dim, tol);
    Matrix k = random_splitting_k(t, rng, tol);
    Decomposition d = decompose(t, k, tol);
    if (!d.pseudo_orthogonal) return fail(1.0, "splitting K failed the direct-sum condition");
    const double gap = relation_distance(add(d.t1, d.t2, tol), t);
    if (gap >= tol.member) return fail(gap, "T1 + T2 does not rebuild T");
    RelationParts pt = parts(t, tol);
    const double dom_gap = std::max(subspace_distance(parts(d.t1, tol).dom, pt.dom),
                                    subspace_distance(parts(d.t2, tol).dom, pt.dom));
    if (dom_gap >= tol.member) return fail(dom_gap, "domain equalities failed");
    return pass(std::max(gap, dom_gap));
}

Outcome prop_pythagorean_strict(Rng& rng, int max_dim, const Tolerances& tol) {
    LinearRelation t = rand_relation(rng, max_dim, tol);
    Matrix k = random_splitting_k(t, rng, tol);
    Decomposition d = decompose(t, k, tol);
    if (!d.pseudo_orthogonal) return fail(1.0, "splitting K failed the direct-sum condition");
    if (!d.strict) return fail(1.0, "pseudo-orthogonal sum is not strict");
    if (t.dim() == 0) return pass();
    Vector coeff = random_vector(t.dim(), rng);
    Vector pair_vec = t.graph().basis() * coeff;
    Vector g = pair_vec.tail(t.dim_k());
    ContractionPair cp(Matrix::Identity(t.dim_k(), t.dim_k()) - k, tol);
    PythagoreanSides sides = pythagorean_check(cp, g);
    const double gap = pyth_gap(sides);
    return gap <= 1e-9 ? pass(gap) : fail(gap, "range-element Pythagorean identity failed");
}

Outcome prop_mul_overlap(Rng& rng, int max_dim, const Tolerances& tol) {
    LinearRelation t = rand_relation(rng, max_dim, tol);
    Matrix k = rng.bernoulli(0.5) ? random_splitting_k(t, rng, tol)
                                  : random_contraction(t.dim_k(), rng, rand_spectrum(rng));
    Decomposition d = decompose(t, k, tol);
    if (!d.split.equality) return pass();  // identity is claimed only under equality
    Matrix x = Matrix::Identity(t.dim_k(), t.dim_k()) - k;
    Subspace lhs = intersect(d.split.x_mul, d.split.y_mul, tol);
    Subspace rhs = apply(x * k, d.split.mul_t, tol, 1.0);
    const double gap = subspace_distance(lhs, rhs);
    return gap < tol.member ? pass(gap) : fail(gap, "X mul cap Y mul != XY mul");
}

Outcome prop_product_criteria(Rng& rng, int max_dim, const Tolerances& tol) {
    LinearRelation t = rand_relation(rng, max_dim, tol);
    Matrix r;
    switch (rng.uniform_int(0, 2)) {
        case 0: r = random_contraction(t.dim_k(), rng, rand_spectrum(rng)); break;
        case 1: {
            // Supported inside dom T*: the closability criterion holds.
            Subspace dom_star = parts(adjoint(t, tol), tol).dom;
            r = random_contraction_on(dom_star, rng, 1.0, tol);
            break;
        }
        default: {
            // Supported inside mul T: the singularity criterion holds.
            Subspace mul = parts(t, tol).mul;
            r = random_contraction_on(mul, rng, 1.0, tol);
            break;
        }
    }
    ProductCriterion closable = closable_product_criterion(t, r, tol);
    ProductCriterion singular = singular_product_criterion(t, r, tol);
    if (!closable.agree) return fail(1.0, "closability criterion disagreed with the predicate");
    if (!singular.agree) return fail(1.0, "singularity criterion disagreed with the predicate");
    if (closable.holds && !closable.necessary_condition)
        return fail(1.0, "necessary condition mul T in ker R failed");
    return pass();
}

Outcome prop_canonical_decomposition(Rng& rng, int max_dim, const Tolerances& tol) {
    LinearRelation t = rand_relation(rng, max_dim, tol);
    Decomposition d = lebesgue_decomposition(t, tol);
    if (!(d.strict && d.pseudo_orthogonal && d.lebesgue_type && d.orthogonal))
        return fail(1.0, "canonical decomposition flags failed");
    const double gap = relation_distance(add(d.t1, d.t2, tol), t);
    return gap < tol.member ? pass(gap) : fail(gap, "canonical decomposition does not rebuild T");
}

Outcome prop_range_overlap(Rng& rng, int max_dim, const Tolerances& tol) {
    LinearRelation t = rand_relation(rng, max_dim, tol);
    Matrix k = random_splitting_k(t, rng, tol);
    RangeOverlap overlap = range_overlap(t, k, tol);
    double worst = overlap.gap;
    if (overlap.dense_range_gap) worst = std::max(worst, *overlap.dense_range_gap);
    return worst < 1e-8 ? pass(worst) : fail(worst, "overlap formula failed");
}

Outcome prop_regular_part_maximality(Rng& rng, int max_dim, const Tolerances& tol) {
    LinearRelation t = rand_relation(rng, max_dim, tol);
    Matrix k = rng.bernoulli(0.5) ? random_admissible_k(t, rng, tol)
                                  : random_splitting_k(t, rng, tol);
    Decomposition d = classify(decompose(t, k, tol), tol);
    if (!d.pseudo_orthogonal || !d.lebesgue_type) return pass();  // not a Lebesgue type sample
    LinearRelation t_reg = regular_singular_split(t, tol).regular;
    return domination_leq(d.t1, t_reg, tol, 1e-9)
               ? pass()
               : fail(1.0, "closable part not dominated by the regular part");
}

Outcome prop_unique_decomposition(Rng& rng, int max_dim, const Tolerances& tol) {
    LinearRelation t = rand_relation(rng, max_dim, tol);
    const std::uint64_t inner_seed =
        static_cast<std::uint64_t>(rng.uniform_int(0, 1 << 30));
    UniquenessReport rep = uniqueness_check(t, 3, inner_seed, tol);
    const double worst = std::max(rep.max_gap_regular, rep.max_gap_singular);
    return rep.violations == 0 ? pass(worst)
                               : fail(worst, "an admissible K produced a different decomposition");
}

Outcome prop_weak_conditions(Rng& rng, int max_dim, const Tolerances& tol) {
    LinearRelation t = rand_relation(rng, max_dim, tol);
    Matrix k = rng.bernoulli(0.5) ? random_splitting_k(t, rng, tol)
                                  : random_contraction(t.dim_k(), rng, rand_spectrum(rng));
    Decomposition d = decompose(t, k, tol);
    AddendumReport rep = addendum_check(t, k, tol);
    if (!rep.strict_equivalence) return fail(1.0, "weak/strong equivalence failed under strictness");
    if (d.strict && !rep.weak_b_prime)
        return fail(1.0, "strict sum violated the weak overlap condition");
    if (rep.strong_conditions && !(rep.strict && rep.weak_conditions))
        return fail(1.0, "strong conditions did not imply the weak ones");
    return pass();
}

// ------------------------------------------------------------------- pairs

OperatorPair rand_pair(Rng& rng, int max_dim, const Tolerances& tol) {
    (void)tol;
    const Index e = rand_dim(rng, max_dim);
    const Index h = rand_dim(rng, max_dim);
    const Index k = rand_dim(rng, max_dim);
    Matrix phi = rng.bernoulli(0.5) ? random_rank_deficient(h, e, rng) : random_matrix(h, e, rng);
    Matrix psi = rng.bernoulli(0.5) ? random_rank_deficient(k, e, rng) : random_matrix(k, e, rng);
    return make_operator_pair(std::move(phi), std::move(psi));
}

Outcome prop_pair_parts(Rng& rng, int max_dim, const Tolerances& tol) {
    OperatorPair p = rand_pair(rng, max_dim, tol);
    LinearRelation rel = relation_of_pair(p, tol);
    RelationParts rp = parts(rel, tol);
    Matrix ker_phi = nullspace_basis(p.phi, tol);
    Matrix ker_psi = nullspace_basis(p.psi, tol);
    double worst = subspace_distance(rp.dom, orthonormalize(p.phi, tol));
    worst = std::max(worst, subspace_distance(rp.ran, orthonormalize(p.psi, tol)));
    worst = std::max(worst, subspace_distance(rp.ker, orthonormalize(p.phi * ker_psi, tol,
                                                               operator_norm(p.phi))));
    worst = std::max(worst, subspace_distance(rp.mul, orthonormalize(p.psi * ker_phi, tol,
                                                               operator_norm(p.psi))));
    worst = std::max(worst,
                     subspace_distance(d_space(p, tol), parts(adjoint(rel, tol), tol).dom));
    return worst < tol.member ? pass(worst) : fail(worst, "pair part identities failed");
}

Outcome prop_pair_predicates(Rng& rng, int max_dim, const Tolerances& tol) {
    OperatorPair p = rand_pair(rng, max_dim, tol);
    LinearRelation rel = relation_of_pair(p, tol);
    if (is_regular(p, tol) != is_closable(rel, tol))
        return fail(1.0, "regularity disagreed with closability of the relation");
    if (is_singular_pair(p, tol) != is_singular(rel, tol))
        return fail(1.0, "pair singularity disagreed with the relation predicate");
    OperatorPair swapped = make_operator_pair(p.psi, p.phi);
    if (is_singular_pair(p, tol) != is_singular_pair(swapped, tol))
        return fail(1.0, "pair singularity is not symmetric");
    RegularityCertificate cert = regularity_certificate(p, tol);
    if (!cert.agree) return fail(1.0, "regularity certificate routes disagreed");
    return pass();
}

Outcome prop_pair_lebesgue_flags(Rng& rng, int max_dim, const Tolerances& tol) {
    OperatorPair p = rand_pair(rng, max_dim, tol);
    PairDecomposition d = lebesgue_pair(p, tol);
    if (!d.regular_part) return fail(1.0, "canonical regular part is not regular");
    if (!d.singular_part) return fail(1.0, "canonical singular part is not singular");
    const double gap = operator_norm(d.psi1 + d.psi2 - p.psi);
    const double slack = 1e-13 * std::max(1.0, operator_norm(p.psi));
    return gap <= slack ? pass(gap) : fail(gap, "Psi1 + Psi2 does not rebuild Psi");
}

Outcome prop_pair_radon_nikodym(Rng& rng, int max_dim, const Tolerances& tol) {
    OperatorPair p = rand_pair(rng, max_dim, tol);
    PairDecomposition d = lebesgue_pair(p, tol);
    OperatorPair regular = make_operator_pair(p.phi, d.psi1);
    Matrix r = radon_nikodym(regular, tol);
    const double scale = std::max(1.0, operator_norm(p.psi));
    double worst = operator_norm(d.psi1 - r * p.phi) / scale;
    Subspace ran_phi = orthonormalize(p.phi, tol);
    Matrix off = Matrix::Identity(p.dim_h(), p.dim_h()) - ran_phi.projector();
    worst = std::max(worst, operator_norm(r * off));
    return worst <= 1e-10 ? pass(worst) : fail(worst, "derivative reconstruction failed");
}

Matrix random_admissible_pair_k(const OperatorPair& p, Rng& rng, const Tolerances& tol) {
    Subspace d = d_space(p, tol);
    Subspace ker_psi_star = Subspace(p.dim_k(), nullspace_basis(p.psi.adjoint(), tol), tol);
    Subspace support = intersect(ker_psi_star, d, tol);
    return orthogonal_complement(d, tol).projector() +
           random_contraction_on(support, rng, 0.95, tol);
}

Outcome prop_pair_regular_bound(Rng& rng, int max_dim, const Tolerances& tol) {
    OperatorPair p = rand_pair(rng, max_dim, tol);
    Matrix k = random_admissible_pair_k(p, rng, tol);
    PairDecomposition d = pair_decompose(p, k, tol);
    if (!d.pseudo_orthogonal || !d.lebesgue_type)
        return fail(1.0, "admissible pair K failed to produce a Lebesgue type split");
    PairDecomposition canonical = lebesgue_pair(p, tol);
    Matrix gap = canonical.psi1.adjoint() * canonical.psi1 - d.psi1.adjoint() * d.psi1;
    const double lam = min_eigenvalue(gap);
    return lam >= -1e-9 ? pass(std::max(0.0, -lam))
                        : fail(-lam, "|Psi1 h| exceeded |Psi_reg h|");
}

Outcome prop_pair_unique(Rng& rng, int max_dim, const Tolerances& tol) {
    OperatorPair p = rand_pair(rng, max_dim, tol);
    Matrix k = random_admissible_pair_k(p, rng, tol);
    PairDecomposition d = pair_decompose(p, k, tol);
    PairDecomposition canonical = lebesgue_pair(p, tol);
    const double worst = std::max(operator_norm(d.psi1 - canonical.psi1),
                                  operator_norm(d.psi2 - canonical.psi2));
    return worst < tol.member ? pass(worst)
                              : fail(worst, "admissible pair K left the canonical split");
}

Outcome prop_pair_sum_relation(Rng& rng, int max_dim, const Tolerances& tol) {
    const Index e = rand_dim(rng, max_dim);
    const Index h = rand_dim(rng, max_dim);
    const Index kk = rand_dim(rng, max_dim);
    Matrix phi = rng.bernoulli(0.5) ? random_rank_deficient(h, e, rng) : random_matrix(h, e, rng);
    Matrix psi1 = rng.bernoulli(0.5) ? random_rank_deficient(kk, e, rng) : random_matrix(kk, e, rng);
    Matrix psi2 = rng.bernoulli(0.5) ? random_rank_deficient(kk, e, rng) : random_matrix(kk, e, rng);
    OperatorPair p = make_operator_pair(phi, psi1 + psi2);

    LinearRelation whole = relation_of_pair(p, tol);
    LinearRelation summed = add(relation_of_pair(make_operator_pair(phi, psi1), tol),
                                relation_of_pair(make_operator_pair(phi, psi2), tol), tol);
    if (!contains(summed.graph(), whole.graph(), tol))
        return fail(1.0, "L(Phi, Psi) escaped L(Phi, Psi1) + L(Phi, Psi2)");

    Matrix ker_phi = nullspace_basis(phi, tol);
    const double psi_scale = operator_norm(p.psi);
    Subspace s = orthonormalize(Matrix(p.psi * ker_phi), tol, psi_scale);
    Subspace s12 = sum(orthonormalize(Matrix(psi1 * ker_phi), tol, psi_scale),
                       orthonormalize(Matrix(psi2 * ker_phi), tol, psi_scale), tol);
    const bool kernel_images_match = subspace_distance(s, s12) < tol.member;
    const bool equal = relation_distance(whole, summed) < tol.member;
    return equal == kernel_images_match
               ? pass()
               : fail(1.0, "sum equality disagreed with the kernel-image condition");
}

Outcome prop_pair_pythagorean(Rng& rng, int max_dim, const Tolerances& tol) {
    OperatorPair p = rand_pair(rng, max_dim, tol);
    Matrix k = random_splitting_k(relation_of_pair(p, tol), rng, tol);
    Vector eta = random_vector(p.dim_e(), rng);
    PythagoreanSides sides = pythagorean_pair_check(p, k, eta, tol);
    const double gap = pyth_gap(sides);
    return gap <= 1e-9 ? pass(gap) : fail(gap, "pair Pythagorean identity failed");
}

const std::vector<Property>& registry() {
    static const std::vector<Property> props = {
        {"complement.inner_identity", prop_inner_identity},
        {"complement.model_isometries", prop_model_isometries},
        {"complement.model_kernels", prop_model_kernels},
        {"complement.norm_inequality", prop_norm_inequality},
        {"complement.overlap_space", prop_overlap_space},
        {"complement.parallel_sum_projection", prop_parallel_sum_projection},
        {"complement.projection_inner_coincide", prop_projection_inner_coincide},
        {"complement.pythagorean", prop_pythagorean},
        {"complement.range_intersections", prop_range_intersections},
        {"lebesgue.canonical_decomposition", prop_canonical_decomposition},
        {"lebesgue.decompose_roundtrip", prop_decompose_roundtrip},
        {"lebesgue.mul_overlap", prop_mul_overlap},
        {"lebesgue.product_criteria", prop_product_criteria},
        {"lebesgue.pythagorean_strict", prop_pythagorean_strict},
        {"lebesgue.range_overlap", prop_range_overlap},
        {"lebesgue.regular_part_maximality", prop_regular_part_maximality},
        {"lebesgue.unique_decomposition", prop_unique_decomposition},
        {"lebesgue.weak_conditions", prop_weak_conditions},
        {"pairs.kernel_range_parts", prop_pair_parts},
        {"pairs.lebesgue_flags", prop_pair_lebesgue_flags},
        {"pairs.predicate_agreement", prop_pair_predicates},
        {"pairs.pythagorean", prop_pair_pythagorean},
        {"pairs.radon_nikodym", prop_pair_radon_nikodym},
        {"pairs.regular_part_bound", prop_pair_regular_bound},
        {"pairs.sum_relation", prop_pair_sum_relation},
        {"pairs.unique_decomposition", prop_pair_unique},
        {"relation.adjoint_dimension", prop_adjoint_dimension},
        {"relation.adjoint_duality", prop_adjoint_duality},
        {"relation.adjoint_involution", prop_adjoint_involution},
        {"relation.mul_of_product", prop_mul_of_product},
        {"relation.singular_duality", prop_singular_duality},
        {"relation.split_reconstruction", prop_split_reconstruction},
        {"subspace.complement_involution", prop_complement_involution},
        {"subspace.contains_antisymmetry", prop_contains_antisymmetry},
        {"subspace.dimension_formula", prop_dimension_formula},
        {"subspace.orthonormalize_idempotent", prop_orthonormalize_idempotent},
    };
    return props;
}

}  // namespace

std::vector<std::string> property_names() {
    std::vector<std::string> names;
    for (const auto& p : registry()) names.emplace_back(p.name);
    return names;
}

VerifyReport run_verify(const VerifyConfig& config) {
    config.validate();
    VerifyReport report;
    report.config = config;
    report.all_passed = true;
    for (const auto& prop : registry()) {
        PropertyResult result;
        result.name = prop.name;
        for (int trial = 0; trial < config.trials; ++trial) {
            Rng rng(derive_seed(config.seed, prop.name, static_cast<std::uint64_t>(trial)));
            Outcome out;
            try {
                out = prop.fn(rng, config.max_dim, config.tol);
            } catch (const Error& e) {
                out = fail(1.0, std::string("exception: ") + e.what());
            }
            ++result.trials;
            if (out.ok) {
                ++result.passes;
            } else if (result.first_failure.empty()) {
                std::ostringstream msg;
                msg << "trial " << trial << ": " << out.note;
                result.first_failure = msg.str();
            }
            result.worst_residual = std::max(result.worst_residual, out.residual);
        }
        if (result.passes != result.trials) report.all_passed = false;
        report.properties.push_back(std::move(result));
    }
    return report;
}

nlohmann::json verify_report_to_json(const VerifyReport& report) {
    nlohmann::json props = nlohmann::json::array();
    for (const auto& p : report.properties) {
        nlohmann::json entry{{"name", p.name},
                             {"trials", p.trials},
                             {"passes", p.passes},
                             {"worst_residual", p.worst_residual}};
        if (!p.first_failure.empty()) entry["first_failure"] = p.first_failure;
        props.push_back(std::move(entry));
    }
    return nlohmann::json{{"kind", "verify"},
                          {"seed", report.config.seed},
                          {"trials", report.config.trials},
                          {"max_dim", report.config.max_dim},
                          {"tolerance_member", report.config.tol.member},
                          {"properties", std::move(props)},
                          {"all_passed", report.all_passed}};
}

}  // namespace relkit
