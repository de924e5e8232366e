#pragma once

#include "relkit/complementation.hpp"
#include "relkit/relation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace relkit {

/// Evidence for the splitting condition
/// mul T = (I-K) mul T + K mul T (direct sum).
struct SplitCertificate {
    Subspace mul_t;
    Subspace x_mul;  ///< (I-K) mul T
    Subspace y_mul;  ///< K mul T
    double sum_gap;  ///< gap between x_mul + y_mul and mul T
    bool equality;
    bool direct;         ///< equality plus matching dimension count
    bool mul_invariant;  ///< (I-K) mul T inside mul T
};

/// Evidence for the classification conditions evaluated through the
/// product criteria, alongside the direct predicates.
struct ClassifyCertificate {
    bool closable_first;        ///< mul T1 = {0}
    bool singular_second;       ///< ran T2 inside mul T2
    bool criterion_closable;    ///< (I-K) ran(I-K) inside dom T*
    bool criterion_singular;    ///< ran K cap dom T* inside ker T*
    bool criteria_agree;
};

/// T = T1 + T2 generated by a nonnegative contraction K via
/// T1 = (I-K) T and T2 = K T, with its classification flags.
struct Decomposition {
    LinearRelation t, t1, t2;
    Matrix k;
    bool strict = false;
    bool pseudo_orthogonal = false;
    bool lebesgue_type = false;
    bool orthogonal = false;
    bool classified = false;
    SplitCertificate split;
    std::optional<ClassifyCertificate> classify_cert;
};

/// Builds T1 = (I-K) T, T2 = K T and decides the splitting condition.
/// A failed condition yields pseudo_orthogonal = false, not an error.
Decomposition decompose(const LinearRelation& t, const Matrix& k, const Tolerances& tol);

/// Fills lebesgue_type and orthogonal, with criterion cross-checks.
Decomposition classify(Decomposition d, const Tolerances& tol);

struct ProductCriterion {
    bool holds;
    bool direct_predicate;  ///< the predicate evaluated on R T itself
    bool agree;
    Subspace lhs, rhs;      ///< the witnessing subspaces of the criterion
    bool necessary_condition;  ///< mul T inside ker R (closable case, when holds)
};

/// R T closable iff R ran R lies in dom T*.
ProductCriterion closable_product_criterion(const LinearRelation& t, const Matrix& r,
                                            const Tolerances& tol);

/// R T singular iff ran R cap dom T* lies in ker T*; with dense ran T the
/// sharper test ran R cap dom T* = {0} is used.
ProductCriterion singular_product_criterion(const LinearRelation& t, const Matrix& r,
                                            const Tolerances& tol);

/// The canonical choice K = P0 (projection onto mul T); every flag holds.
Decomposition lebesgue_decomposition(const LinearRelation& t, const Tolerances& tol);

/// Builds K = I on mul T (+) G on dom T* and validates the admissibility
/// conditions on G; throws ConditionsViolated naming the failed one.
Matrix admissible_k(const LinearRelation& t, const Matrix& g, const Tolerances& tol);

/// Contractive domination for closable relations:
/// dom t2 inside dom t1 and |T1 h| <= |T2 h| on dom t2.
bool domination_leq(const LinearRelation& t1, const LinearRelation& t2, const Tolerances& tol,
                    double psd_slack);

struct RangeOverlap {
    Subspace direct;     ///< ran T1 cap ran T2
    Subspace via_m;      ///< XY M with M = {eta in ran T : X eta in ran T}
    Subspace m_subspace;
    double gap;
    std::optional<double> dense_range_gap;  ///< vs ran XY when ran T is everything
};

RangeOverlap range_overlap(const LinearRelation& t, const Matrix& k, const Tolerances& tol);

struct UniquenessReport {
    int trials = 0;
    int violations = 0;
    double max_gap_regular = 0.0;
    double max_gap_singular = 0.0;
    int admissible_dim = 0;  ///< dim of ker T* cap dom T*, the sampling support
};

/// Samples admissible contractions K and checks that each classified
/// decomposition coincides with the canonical one.
UniquenessReport uniqueness_check(const LinearRelation& t, int trials, std::uint64_t seed,
                                  const Tolerances& tol);

struct AddendumReport {
    bool weak_b_prime;        ///< mul T1 cap mul T2 inside XY mul T
    bool strict_equivalence;  ///< weak and strong conditions agree when strict
    bool strict;
    bool weak_conditions;     ///< sum equality plus weak_b_prime
    bool strong_conditions;   ///< the direct-sum splitting condition
};

AddendumReport addendum_check(const LinearRelation& t, const Matrix& k, const Tolerances& tol);

}  // namespace relkit
