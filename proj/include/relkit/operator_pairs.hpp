#pragma once

#include "relkit/lebesgue.hpp"

namespace relkit {

/// Bounded pair Phi in B(E, H), Psi in B(E, K) sharing the parameter space E.
struct OperatorPair {
    Matrix phi;  ///< dim_h x dim_e
    Matrix psi;  ///< dim_k x dim_e

    Index dim_e() const { return phi.cols(); }
    Index dim_h() const { return phi.rows(); }
    Index dim_k() const { return psi.rows(); }
};

OperatorPair make_operator_pair(Matrix phi, Matrix psi);

/// The operator range relation {(Phi eta, Psi eta) : eta in E}.
LinearRelation relation_of_pair(const OperatorPair& p, const Tolerances& tol);

/// {k : Psi* k in ran Phi*} = dom of the adjoint relation.
Subspace d_space(const OperatorPair& p, const Tolerances& tol);

/// Psi regular with respect to Phi: the D-space is all of K.
bool is_regular(const OperatorPair& p, const Tolerances& tol);

struct RegularityCertificate {
    bool d_space_full;
    bool mul_trivial;       ///< Psi(ker Phi) = {0}
    bool kernel_inclusion;  ///< ker Phi inside ker Psi
    bool agree;
};

RegularityCertificate regularity_certificate(const OperatorPair& p, const Tolerances& tol);

/// Psi singular with respect to Phi: ran Phi* cap ran Psi* = {0}.
bool is_singular_pair(const OperatorPair& p, const Tolerances& tol);

/// Psi = Psi1 + Psi2 with Psi1 = (I-K) Psi, Psi2 = K Psi, and flags.
struct PairDecomposition {
    Matrix psi1, psi2;
    Matrix k;
    bool regular_part = false;       ///< Psi1 regular w.r.t. Phi
    bool singular_part = false;      ///< Psi2 singular w.r.t. Phi
    bool pseudo_orthogonal = false;
    bool lebesgue_type = false;
    bool split_direct = false;       ///< Psi(ker Phi) splits as a direct sum
    bool singular_cross_check = false;  ///< ran Psi* K cap ran Phi* = {0} agrees
    bool weak_b_prime = false;       ///< Psi1(ker Phi) cap Psi2(ker Phi) in XY Psi(ker Phi)
};

/// Canonical choice: P0 projects onto the complement of the D-space.
PairDecomposition lebesgue_pair(const OperatorPair& p, const Tolerances& tol);

/// R with Psi = R Phi, zero on the complement of ran Phi.
/// Throws NotRegular when Psi(ker Phi) is nontrivial.
Matrix radon_nikodym(const OperatorPair& p, const Tolerances& tol);

PairDecomposition pair_decompose(const OperatorPair& p, const Matrix& k, const Tolerances& tol);

/// |Psi eta|^2 against |Psi1 eta|^2_X + |Psi2 eta|^2_Y.
PythagoreanSides pythagorean_pair_check(const OperatorPair& p, const Matrix& k,
                                        const Vector& eta, const Tolerances& tol);

}  // namespace relkit
