#include "spaceforms/euclidean.hpp"

#include <cmath>
#include <sstream>

#include "spaceforms/error.hpp"
#include "spaceforms/spherical.hpp"

namespace spaceforms {

using numkit::Index;

void require_euclidean(const Matrix& m, const Tolerance& tol) {
    numkit::require_valid(m, "matrix");
    if (m.rows() != m.cols()) fail(ErrorKind::NotInGroup, "matrix is not square");
    const Index n = m.rows() - 1;
    if (n < 1) fail(ErrorKind::UnsupportedDimension, "Euclidean isometries need n >= 1");
    double err = std::abs(m(n, n) - 1.0);
    for (Index j = 0; j < n; ++j) err = std::max(err, std::abs(m(n, j)));
    if (err > tol.residual_tol) fail(ErrorKind::NotInGroup, "last row must be (0, ..., 0, 1)");
    require_orthogonal(m.topLeftCorner(n, n), tol);
}

Matrix affine(const Matrix& a, const Vector& b) {
    const Index n = a.rows();
    Matrix m = Matrix::Identity(n + 1, n + 1);
    m.topLeftCorner(n, n) = a;
    m.topRightCorner(n, 1) = b;
    return m;
}

ConjugationResult euclidean_normal_form(const Matrix& m, const Tolerance& tol) {
    tol.validate();
    require_euclidean(m, tol);
    const Index n = m.rows() - 1;
    const Matrix a = m.topLeftCorner(n, n);
    const Vector b = m.topRightCorner(n, 1);

    ConjugationResult orth = orthogonal_normal_form(a, tol);

    // Regroup the orthogonal form as (rotations, -I | +I).
    Matrix q0(n, n);
    std::vector<Block> moving;
    Index r = 0;
    Index col = 0, at = 0;
    for (const auto& blk : orth.form.blocks) {
        if (blk.kind != BlockKind::PosId) {
            q0.middleCols(col, blk.size()) = orth.conjugator.middleCols(at, blk.size());
            col += blk.size();
            moving.push_back(blk);
        }
        at += blk.size();
    }
    const Index n_moving = col;
    at = 0;
    for (const auto& blk : orth.form.blocks) {
        if (blk.kind == BlockKind::PosId) {
            q0.middleCols(col, blk.size()) = orth.conjugator.middleCols(at, blk.size());
            col += blk.size();
            r += blk.size();
        }
        at += blk.size();
    }

    const Vector bp = q0.transpose() * b;
    Vector p_moving = Vector::Zero(n_moving);
    if (n_moving > 0) {
        NormalForm part{moving};
        const Matrix lhs = Matrix::Identity(n_moving, n_moving) - part.matrix();
        p_moving = lhs.partialPivLu().solve(bp.head(n_moving));
    }
    const Vector tau = bp.tail(r);

    const Index d = numkit::rank_kernel(m - Matrix::Identity(n + 1, n + 1), tol).kernel.cols();
    bool hyperbolic;
    if (d == r + 1) {
        hyperbolic = false;
    } else if (d == r && r >= 1) {
        hyperbolic = true;
    } else {
        std::ostringstream msg;
        msg << "fixed-space dimensions d = " << d << ", r = " << r
            << " violate d in {r, r+1}; tolerances are mis-set";
        fail(ErrorKind::InternalInconsistency, msg.str());
    }

    Matrix w = Matrix::Identity(r, r);
    ConjugationResult res;
    res.form.blocks = moving;
    if (hyperbolic) {
        const double len = tau.norm();
        const Matrix comp = numkit::orthogonal_complement(tau, r);
        w.leftCols(r - 1) = comp;
        w.col(r - 1) = tau / len;
        if (r > 1) res.form.blocks.push_back({BlockKind::PosId, static_cast<int>(r - 1), 0.0});
        res.form.blocks.push_back({BlockKind::Trans, 1, len});
    } else {
        res.form.blocks.push_back({BlockKind::PosId, static_cast<int>(r + 1), 0.0});
    }

    Matrix d_block = Matrix::Identity(n, n);
    d_block.bottomRightCorner(r, r) = w;
    Vector shift = Vector::Zero(n);
    shift.head(n_moving) = p_moving;
    const Matrix q = q0 * d_block;
    const Vector c = q0 * shift;

    res.conjugator = affine(q, c);
    res.form_matrix = res.form.matrix();
    const Matrix inverse = affine(q.transpose(), -q.transpose() * c);
    res.residual = numkit::inf_norm(inverse * m * res.conjugator - res.form_matrix);
    res.diagnostics = orth.diagnostics;
    if (res.residual > tol.residual_tol * std::max(1.0, numkit::inf_norm(m))) {
        std::ostringstream msg;
        msg << "normal-form residual " << res.residual << " exceeds residual_tol";
        res.diagnostics.push_back(msg.str());
    }
    return res;
}

EuclideanSegre classify_euclidean(const Matrix& m, const Tolerance& tol) {
    const auto res = euclidean_normal_form(m, tol);
    return symbol_of(res.form, Space::Euclidean, static_cast<int>(m.rows() - 1)).euclidean();
}

} // namespace spaceforms
