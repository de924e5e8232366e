#include "relkit/random_gen.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace relkit {

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

int Rng::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

double Rng::gaussian() {
    // Box-Muller on two fresh uniforms; no state is carried between calls.
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::gaussian_complex() {
    return Complex(gaussian(), gaussian()) / std::sqrt(2.0);
}

bool Rng::bernoulli(double p) {
    return uniform() < p;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t trial) {
    // FNV-1a over the label, then two splitmix64 steps over the mix.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : label) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::uint64_t z = seed ^ h ^ (trial * 0x9e3779b97f4a7c15ull);
    for (int i = 0; i < 2; ++i) {
        z += 0x9e3779b97f4a7c15ull;
        std::uint64_t x = z;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        z = x ^ (x >> 31);
    }
    return z;
}

Matrix random_matrix(Index rows, Index cols, Rng& rng) {
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = rng.gaussian_complex();
    return m;
}

Vector random_vector(Index n, Rng& rng) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = rng.gaussian_complex();
    return v;
}

Matrix random_unitary(Index n, Rng& rng) {
    Matrix g = random_matrix(n, n, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index i = 0; i < n; ++i) {
        Complex d = r(i, i);
        double a = std::abs(d);
        q.col(i) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
    }
    return q;
}

Matrix random_contraction(Index n, Rng& rng, Spectrum kind) {
    Eigen::VectorXd lam(n);
    for (Index i = 0; i < n; ++i) {
        switch (kind) {
            case Spectrum::Uniform01: lam(i) = rng.uniform(); break;
            case Spectrum::Projection: lam(i) = rng.bernoulli(0.5) ? 1.0 : 0.0; break;
            case Spectrum::StrictMargin: lam(i) = rng.uniform(0.05, 0.95); break;
            case Spectrum::MixedAtoms: {
                double roll = rng.uniform();
                if (roll < 0.25)
                    lam(i) = 0.0;
                else if (roll < 0.5)
                    lam(i) = 1.0;
                else
                    lam(i) = rng.uniform();
                break;
            }
        }
    }
    Matrix u = random_unitary(n, rng);
    return u * lam.asDiagonal() * u.adjoint();
}

Subspace random_subspace(Index n, Index r, Rng& rng, const Tolerances& tol) {
    if (r == 0) return Subspace::zero(n);
    return orthonormalize(random_matrix(n, r, rng), tol);
}

LinearRelation random_relation(Index dim_h, Index dim_k, Rng& rng, bool force_mul,
                               const Tolerances& tol) {
    const Index total = dim_h + dim_k;
    Index mul_dim = 0;
    if (force_mul) mul_dim = static_cast<Index>(rng.uniform_int(1, static_cast<int>(dim_k)));
    const Index max_generic = total - mul_dim;
    Index generic = static_cast<Index>(rng.uniform_int(0, static_cast<int>(max_generic)));
    Matrix cols(total, generic + mul_dim);
    cols.leftCols(generic) = random_matrix(total, generic, rng);
    cols.rightCols(mul_dim).setZero();
    if (mul_dim > 0)
        cols.bottomRightCorner(dim_k, mul_dim) = random_matrix(dim_k, mul_dim, rng);
    return LinearRelation(dim_h, dim_k, orthonormalize(cols, tol));
}

Matrix random_contraction_on(const Subspace& support, Rng& rng, double scale,
                             const Tolerances& tol) {
    (void)tol;
    const Index n = support.ambient();
    const Index s = support.dim();
    if (s == 0) return Matrix::Zero(n, n);
    Eigen::VectorXd lam(s);
    for (Index i = 0; i < s; ++i) lam(i) = rng.uniform(0.0, scale);
    Matrix u = random_unitary(s, rng);
    Matrix small = u * lam.asDiagonal() * u.adjoint();
    return support.basis() * small * support.basis().adjoint();
}

Matrix random_rank_deficient(Index rows, Index cols, Rng& rng) {
    const Index r = static_cast<Index>(rng.uniform_int(0, static_cast<int>(std::min(rows, cols))));
    if (r == 0) return Matrix::Zero(rows, cols);
    return random_matrix(rows, r, rng) * random_matrix(cols, r, rng).adjoint();
}

Matrix random_splitting_k(const LinearRelation& t, Rng& rng, const Tolerances& tol) {
    Subspace mul = parts(t, tol).mul;
    Subspace dom_star = orthogonal_complement(mul, tol);
    const Index m = mul.dim();
    Matrix k = Matrix::Zero(t.dim_k(), t.dim_k());
    if (m > 0) {
        // Orthogonal projection within mul T; its range is K mul T and its
        // kernel within mul T is (I-K) mul T, a direct split.
        const Index q = static_cast<Index>(rng.uniform_int(0, static_cast<int>(m)));
        Matrix coeffs = random_matrix(m, q, rng);
        Subspace piece = orthonormalize(mul.basis() * coeffs, tol);
        k += piece.projector();
    }
    k += random_contraction_on(dom_star, rng, 1.0, tol);
    return k;
}

Matrix random_admissible_k(const LinearRelation& t, Rng& rng, const Tolerances& tol) {
    RelationParts star = parts(adjoint(t, tol), tol);
    Subspace mul = parts(t, tol).mul;
    Subspace support = intersect(star.ker, star.dom, tol);
    return mul.projector() + random_contraction_on(support, rng, 0.95, tol);
}

}  // namespace relkit
