#pragma once

#include "relkit/relation.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace relkit {

/// Deterministic generator: all draws go through the raw 64-bit engine so
/// replays are identical across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform();  ///< [0, 1)
    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);  ///< inclusive bounds
    double gaussian();
    Complex gaussian_complex();
    bool bernoulli(double p);

  private:
    std::mt19937_64 engine_;
};

/// Stable per-(seed, label, trial) sub-seed derivation.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t trial);

Matrix random_matrix(Index rows, Index cols, Rng& rng);

Vector random_vector(Index n, Rng& rng);

/// Haar-distributed unitary via QR with phase normalization.
Matrix random_unitary(Index n, Rng& rng);

enum class Spectrum {
    Uniform01,     ///< eigenvalues uniform in [0, 1]
    Projection,    ///< eigenvalues in {0, 1}
    StrictMargin,  ///< eigenvalues in [0.05, 0.95]
    MixedAtoms,    ///< uniform draws with some forced to exactly 0 or 1
};

/// Hermitian nonnegative contraction by unitary conjugation of a diagonal.
Matrix random_contraction(Index n, Rng& rng, Spectrum kind);

Subspace random_subspace(Index n, Index r, Rng& rng, const Tolerances& tol);

/// Random relation; with force_mul the graph is made to contain a
/// nontrivial {0} x M block so singular-part behavior gets exercised.
LinearRelation random_relation(Index dim_h, Index dim_k, Rng& rng, bool force_mul,
                               const Tolerances& tol);

/// Hermitian PSD contraction with spectrum in [0, scale] supported on the
/// given subspace (zero on its complement).
Matrix random_contraction_on(const Subspace& support, Rng& rng, double scale,
                             const Tolerances& tol);

/// Product A B^* with inner rank chosen in [0, min(rows, cols)].
Matrix random_rank_deficient(Index rows, Index cols, Rng& rng);

/// A contraction that splits mul T directly: an orthogonal projection
/// within mul T plus an arbitrary contraction on its complement, so the
/// induced decomposition of T is always pseudo-orthogonal.
Matrix random_splitting_k(const LinearRelation& t, Rng& rng, const Tolerances& tol);

/// The canonical block form: identity on mul T plus a contraction with
/// spectrum in [0, 0.95] supported on ker T* cap dom T*. Every such K
/// induces a Lebesgue type decomposition.
Matrix random_admissible_k(const LinearRelation& t, Rng& rng, const Tolerances& tol);

}  // namespace relkit
