#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "random_group.hpp"
#include "spaceforms/spaceforms.hpp"

using namespace spaceforms;
using namespace spaceforms::numkit;
namespace t = spaceforms::testing;

namespace {

Matrix gram_of(const Matrix& v, const BilinearForm& form) { return v.transpose() * form.gram() * v; }

} // namespace

TEST(RankKernel, ZeroMatrixHasFullKernel) {
    const auto rk = rank_kernel(Matrix::Zero(3, 3), {});
    EXPECT_EQ(rk.rank, 0);
    ASSERT_EQ(rk.kernel.cols(), 3);
    EXPECT_LT((rk.kernel - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(RankKernel, IdentityHasNoKernel) {
    const auto rk = rank_kernel(Matrix::Identity(4, 4), {});
    EXPECT_EQ(rk.rank, 4);
    EXPECT_EQ(rk.kernel.cols(), 0);
}

TEST(RankKernel, RotationHasNoFixedDirection) {
    // det(I - R) = 2 - 2 cos(pi/3) = 1.
    const Matrix m = Matrix::Identity(2, 2) - rotation(std::numbers::pi / 3);
    EXPECT_NEAR(m.determinant(), 1.0, 1e-14);
    const auto rk = rank_kernel(m, {});
    EXPECT_EQ(rk.rank, 2);
    EXPECT_EQ(rk.kernel.cols(), 0);
}

TEST(RankKernel, KernelVectorsAreAnnihilatedAndPermutationInvariant) {
    t::Rng rng(7);
    const Tolerance tol;
    for (int trial = 0; trial < 50; ++trial) {
        const int rows = 3 + trial % 4, cols = 4 + trial % 3, inner = 1 + trial % 3;
        const Matrix m = Matrix::Random(rows, inner) * Matrix::Random(inner, cols);
        const auto rk = rank_kernel(m, tol);
        EXPECT_EQ(rk.rank + rk.kernel.cols(), cols);
        EXPECT_EQ(rk.rank, std::min<Index>(inner, std::min(rows, cols)));
        if (rk.kernel.cols() > 0) {
            EXPECT_LE((m * rk.kernel).cwiseAbs().maxCoeff(), tol.residual_tol * std::max(1.0, inf_norm(m)));
        }
        Eigen::PermutationMatrix<Eigen::Dynamic> pr(rows), pc(cols);
        pr.setIdentity();
        pc.setIdentity();
        std::shuffle(pr.indices().data(), pr.indices().data() + rows, rng);
        std::shuffle(pc.indices().data(), pc.indices().data() + cols, rng);
        EXPECT_EQ(rank_kernel(pr * m * pc, tol).rank, rk.rank);
    }
}

TEST(EigenStructure, PlaneRotationIsOneComplexPair) {
    // Roots of x^2 - sqrt(2) x + 1 are (sqrt(2) +- i sqrt(2)) / 2.
    const std::complex<double> root(std::sqrt(2.0) / 2, std::sqrt(2.0) / 2);
    const auto es = eigen_structure(rotation(std::numbers::pi / 4), {});
    ASSERT_EQ(es.clusters.size(), 1u);
    const auto& c = es.clusters[0];
    ASSERT_FALSE(c.is_real());
    EXPECT_EQ(c.multiplicity, 2);
    EXPECT_NEAR(std::get<ComplexPair>(c.value).modulus, std::abs(root), 1e-12);
    EXPECT_NEAR(std::get<ComplexPair>(c.value).angle, std::arg(root), 1e-12);
    EXPECT_EQ(c.basis.cols(), 2);
}

TEST(EigenStructure, DiagonalSigns) {
    Matrix m = Vector::Ones(3).asDiagonal();
    m(2, 2) = -1;
    const auto es = eigen_structure(m, {});
    ASSERT_EQ(es.clusters.size(), 2u);
    EXPECT_DOUBLE_EQ(es.clusters[0].real_value(), 1.0);
    EXPECT_EQ(es.clusters[0].multiplicity, 2);
    EXPECT_DOUBLE_EQ(es.clusters[1].real_value(), -1.0);
    EXPECT_EQ(es.clusters[1].multiplicity, 1);
}

TEST(EigenStructure, UnipotentJordanBlockIsOnePrimaryComponent) {
    Matrix m = Matrix::Identity(3, 3);
    m(0, 1) = m(1, 2) = 1.0;
    const auto es = eigen_structure(m, {});
    ASSERT_EQ(es.clusters.size(), 1u);
    EXPECT_NEAR(es.clusters[0].real_value(), 1.0, 1e-9);
    EXPECT_EQ(es.clusters[0].multiplicity, 3);
    EXPECT_EQ(es.clusters[0].basis.cols(), 3);
}

TEST(EigenStructure, RejectsOversizedInput) {
    EigenOptions opts;
    opts.size_cap = 4;
    try {
        eigen_structure(Matrix::Identity(5, 5), {}, opts);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDimension);
    }
}

namespace {

void expect_block_diagonalizes(const Matrix& m, const Tolerance& tol) {
    const auto es = eigen_structure(m, tol);
    Index total = 0;
    for (const auto& c : es.clusters) total += c.multiplicity;
    ASSERT_EQ(total, m.rows());
    Matrix x(m.rows(), m.rows());
    Index at = 0;
    std::vector<std::pair<Index, Index>> ranges;
    for (const auto& c : es.clusters) {
        x.middleCols(at, c.basis.cols()) = c.basis;
        ranges.emplace_back(at, c.basis.cols());
        at += c.basis.cols();
    }
    ASSERT_EQ(at, m.rows());
    const Matrix b = x.inverse() * m * x;
    Matrix off = b;
    for (auto [s, len] : ranges) off.block(s, s, len, len).setZero();
    EXPECT_LE(inf_norm(off), tol.residual_tol * inf_norm(m));
}

} // namespace

TEST(EigenStructure, PrimaryComponentsBlockDiagonalizeGroupElements) {
    t::Rng rng(11);
    const Tolerance tol;
    for (Space space : {Space::Spherical, Space::Euclidean, Space::Hyperbolic}) {
        for (int n = 1; n <= 5; ++n) {
            for (const auto& sym : enumerate_symbols(space, n)) {
                const Matrix f = representative(sym, t::generic_params(sym, rng)).matrix();
                const Matrix m = t::conjugate(f, t::random_element(space, n, rng), space);
                SCOPED_TRACE(render(sym));
                expect_block_diagonalizes(m, tol);
            }
        }
    }
}

TEST(EigenStructure, PrimaryComponentsBlockDiagonalizeGenericMatrices) {
    std::srand(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix m = Matrix::Random(2 + trial % 6, 2 + trial % 6);
        expect_block_diagonalizes(m, {});
    }
}

TEST(EigenStructure, NearCoincidentAnglesAreReported) {
    Matrix m = Matrix::Zero(4, 4);
    m.topLeftCorner(2, 2) = rotation(1.0);
    m.bottomRightCorner(2, 2) = rotation(1.0 + 5e-7);
    const auto es = eigen_structure(m, {});
    EXPECT_EQ(es.clusters.size(), 2u);
    EXPECT_FALSE(es.diagnostics.empty());
}

TEST(Orthonormalize, StandardBasisIsUnchanged) {
    const Matrix v = Matrix::Identity(3, 3);
    const Matrix out = orthonormalize(v, BilinearForm::euclidean(3), {});
    EXPECT_LT((out - v).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Orthonormalize, TriangularPair) {
    Matrix v(2, 2);
    v << 2, 1, 0, 1;
    const Matrix out = orthonormalize(v, BilinearForm::euclidean(2), {});
    EXPECT_LT((out - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Orthonormalize, LorentzPairPutsTimeLikeFirst) {
    // (1,0) has form value -1; removing its component from (0.5,1) leaves (0,1).
    Matrix v(2, 2);
    v << 1, 0.5, 0, 1;
    const auto form = BilinearForm::lorentz(2);
    const Matrix out = orthonormalize(v, form, {});
    EXPECT_LT((out - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_DOUBLE_EQ(form(out.col(0), out.col(0)), -1.0);
    EXPECT_DOUBLE_EQ(form(out.col(1), out.col(1)), 1.0);
}

TEST(Orthonormalize, LorentzNullPairSpansAPlane) {
    Matrix v(3, 2);
    v << 1, 1, 1, -1, 0, 0;
    const auto form = BilinearForm::lorentz(3);
    const Matrix out = orthonormalize(v, form, {});
    Matrix want = Matrix::Identity(2, 2);
    want(0, 0) = -1;
    EXPECT_LT((gram_of(out, form) - want).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Orthonormalize, LightLikeSpanIsDegenerate) {
    Matrix v(3, 2);
    v << 1, 0, 1, 0, 0, 1;
    try {
        orthonormalize(v, BilinearForm::lorentz(3), {});
        FAIL() << "expected DegenerateSpan";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateSpan);
    }
}

TEST(Orthonormalize, DependentVectorsAreRejected) {
    Matrix v(3, 2);
    v << 1, 2, 0, 0, 1, 2;
    EXPECT_THROW(orthonormalize(v, BilinearForm::euclidean(3), {}), Error);
}

TEST(Orthonormalize, GramIsDiagonalSigns) {
    t::Rng rng(3);
    const Tolerance tol;
    for (int trial = 0; trial < 100; ++trial) {
        const int dim = 2 + trial % 5;
        const int k = 1 + trial % dim;
        const Matrix g = t::random_lorentz(dim - 1, rng);
        const Matrix mix = t::random_orthogonal(k, rng);
        const Matrix v = g.leftCols(k) * mix;
        const auto form = BilinearForm::lorentz(dim);
        const Matrix out = orthonormalize(v, form, tol);
        Matrix want = Matrix::Identity(k, k);
        want(0, 0) = -1;
        EXPECT_LE((gram_of(out, form) - want).cwiseAbs().maxCoeff(), tol.residual_tol);
        const Matrix e = orthonormalize(Matrix::Random(dim, k), BilinearForm::euclidean(dim), tol);
        EXPECT_LE((e.transpose() * e - Matrix::Identity(k, k)).cwiseAbs().maxCoeff(), tol.residual_tol);
    }
}

TEST(Tolerance, RejectsNonPositiveValues) {
    Tolerance tol;
    tol.angle_tol = 0;
    EXPECT_THROW(tol.validate(), Error);
    tol.angle_tol = 1e-7;
    tol.rank_tol = std::nan("");
    EXPECT_THROW(tol.validate(), Error);
}

TEST(Matrix, NonFiniteEntriesAreRejected) {
    Matrix m = Matrix::Identity(2, 2);
    m(1, 0) = std::numeric_limits<double>::infinity();
    EXPECT_THROW(require_valid(m, "m"), Error);
    EXPECT_THROW(eigen_structure(m, {}), Error);
}
