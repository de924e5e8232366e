#pragma once

#include "relkit/subspace.hpp"

namespace relkit {

/// dom/ran/ker/mul of a relation, recomputed on demand from the graph.
struct RelationParts {
    Subspace dom, ran, ker, mul;
};

/// The single-valued action of a closable relation: `matrix` agrees with the
/// relation on `domain` and is zero on its orthogonal complement.
struct OperatorPart {
    Subspace domain;
    Matrix matrix;
};

/// A linear relation T in L(H, K): a subspace of H x K with the first
/// dim_h coordinates carrying the H-component. In finite dimensions every
/// relation is closed, so the closure never appears as a separate object
/// and the double adjoint is the relation itself.
class LinearRelation {
  public:
    LinearRelation(Index dim_h, Index dim_k, Subspace graph);

    Index dim_h() const { return dim_h_; }
    Index dim_k() const { return dim_k_; }
    Index dim() const { return graph_.dim(); }
    const Subspace& graph() const { return graph_; }

  private:
    Index dim_h_;
    Index dim_k_;
    Subspace graph_;
};

/// Graph {(f, M f)} of an everywhere-defined operator.
LinearRelation from_operator(const Matrix& m, const Tolerances& tol);

/// Relation spanned by explicit (h, k) pairs given as stacked columns.
LinearRelation from_pairs(Index dim_h, Index dim_k, const Matrix& stacked_pairs,
                          const Tolerances& tol);

/// dom T x {0}, the zero operator on dom T.
LinearRelation zero_on(const Subspace& dom, Index dim_k, const Tolerances& tol);

RelationParts parts(const LinearRelation& t, const Tolerances& tol);

/// Adjoint T* in L(K, H): all (k, h) with <f', k> = <f, h> on the graph.
LinearRelation adjoint(const LinearRelation& t, const Tolerances& tol);

/// mul T = {0}; equivalent here to dom T* being all of K.
bool is_closable(const LinearRelation& t, const Tolerances& tol);

/// T = dom T x ran T; tested as ran T inside mul T.
bool is_singular(const LinearRelation& t, const Tolerances& tol);

/// R T = {(f, R f') : (f, f') in T} for a square matrix R on K.
LinearRelation multiply_left(const Matrix& r, const LinearRelation& t, const Tolerances& tol);

/// The sum {(f, f' + f'') : (f, f') in t1, (f, f'') in t2}.
LinearRelation add(const LinearRelation& t1, const LinearRelation& t2, const Tolerances& tol);

/// mul T1 cap mul T2 = {0}: the summands of t1 + t2 are uniquely determined.
bool is_strict_sum(const LinearRelation& t1, const LinearRelation& t2, const Tolerances& tol);

double relation_distance(const LinearRelation& a, const LinearRelation& b);

struct RegularSingularSplit {
    LinearRelation regular;   ///< (I - P0) T, closable
    LinearRelation singular;  ///< P0 T, singular
    Matrix p0;                ///< orthogonal projection onto mul T
};

RegularSingularSplit regular_singular_split(const LinearRelation& t, const Tolerances& tol);

/// Matrix of a closable relation, zero on the complement of its domain.
/// Throws NotClosable when mul T is nontrivial.
OperatorPart operator_part(const LinearRelation& t, const Tolerances& tol);

}  // namespace relkit
