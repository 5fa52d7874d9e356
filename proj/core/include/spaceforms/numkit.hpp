#pragma once

// Small dense linear-algebra kernels shared by the classifiers: rank and
// kernel decisions, primary decomposition, and orthonormalization with respect
// to the Euclidean or the Lorentz form.
//
// Dense storage and the underlying SVD / Schur factorizations come from Eigen;
// what lives here is the tolerance policy layered on top of them.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace spaceforms::numkit {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Numerical thresholds used by every decision in the library.
struct Tolerance {
    double rank_tol = 1e-12;     ///< relative singular-value cutoff
    double angle_tol = 1e-7;     ///< radians; rotation angles closer than this are equal
    double residual_tol = 1e-9;  ///< absolute residual accepted for identities

    /// Throws InvariantViolation unless all three are finite and positive.
    void validate() const;
};

enum class FormKind { Euclidean, Lorentz };

/// The identity form, or the Lorentz form diag(-1, 1, ..., 1).
struct BilinearForm {
    FormKind kind = FormKind::Euclidean;
    Index dim = 0;

    static BilinearForm euclidean(Index dim) { return {FormKind::Euclidean, dim}; }
    static BilinearForm lorentz(Index dim) { return {FormKind::Lorentz, dim}; }

    Matrix gram() const;
    double operator()(const Vector& x, const Vector& y) const;
    /// Gram matrix of the form restricted to the column span of `basis`.
    Matrix restrict_to(const Matrix& basis) const;
};

/// Throws InvariantViolation if `m` is empty or has a non-finite entry.
void require_valid(const Matrix& m, std::string_view what);

/// Maximum absolute row sum.
double inf_norm(const Matrix& m);

struct RankKernel {
    Index rank = 0;
    Matrix kernel;  ///< orthonormal columns spanning the numerical kernel
};

/// Numerical rank and kernel. Singular values at or below
/// rank_tol * max(1, sigma_max, scale) count as zero; `scale` lets callers
/// judge a product such as P*N against the size of N alone.
RankKernel rank_kernel(const Matrix& m, const Tolerance& tol, double scale = 0.0);

/// Orthonormal basis of span(basis) built by pivoted Gram-Schmidt on the
/// projections of the standard basis vectors. Coordinate-aligned subspaces
/// therefore come back as standard basis vectors, in index order.
Matrix canonical_basis(const Matrix& basis);

/// Orthonormal basis of the Euclidean orthogonal complement of span(basis)
/// inside R^ambient, in canonical form.
Matrix orthogonal_complement(const Matrix& basis, Index ambient);

struct RealValue {
    double value = 0.0;
};
/// A conjugate pair modulus * exp(+-i*angle) with angle in (0, pi).
struct ComplexPair {
    double modulus = 1.0;
    double angle = 0.0;
};
using EigenDescriptor = std::variant<RealValue, ComplexPair>;

struct EigenCluster {
    EigenDescriptor value;
    Index multiplicity = 0;  ///< algebraic, counting both members of a pair
    Matrix basis;            ///< orthonormal basis of the primary component

    bool is_real() const { return std::holds_alternative<RealValue>(value); }
    double real_value() const { return std::get<RealValue>(value).value; }
};

struct EigenStructure {
    std::vector<EigenCluster> clusters;  ///< real clusters (descending), then pairs (by angle)
    std::vector<std::string> diagnostics;
};

struct EigenOptions {
    Index size_cap = 64;
    Index max_iterations_per_row = 40;
};

/// Primary decomposition of a square matrix. Eigenvalues come from Hessenberg
/// reduction plus shifted QR; clusters whose primary component does not have
/// the dimension of the cluster are merged with their nearest neighbour, which
/// absorbs the splitting that rounding causes in non-trivial Jordan blocks.
EigenStructure eigen_structure(const Matrix& m, const Tolerance& tol,
                               const EigenOptions& options = {});

/// Orthonormal basis for the generalized kernel of `poly` (the union of
/// Ker poly^k), grown one power at a time and capped at `max_dim`.
Matrix generalized_kernel(const Matrix& poly, Index max_dim, const Tolerance& tol);

/// Columns of the result satisfy form(v_i, v_j) = +-delta_ij. For Lorentz
/// time-like spans the single negative vector comes first. Throws
/// DegenerateSpan when the restricted form is singular (light-like span) or
/// the input columns are dependent.
Matrix orthonormalize(const Matrix& vectors, const BilinearForm& form, const Tolerance& tol);

/// Minimum-norm solution of m * x = rhs where m is known to have the given
/// rank (singular values beyond `rank` are discarded).
Vector min_norm_solve(const Matrix& m, const Vector& rhs, Index rank);

} // namespace spaceforms::numkit
