#include "spaceforms/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "spaceforms/error.hpp"

namespace spaceforms {

using numkit::Index;

void require_orthogonal(const Matrix& a, const Tolerance& tol) {
    numkit::require_valid(a, "matrix");
    if (a.rows() != a.cols()) fail(ErrorKind::NotInGroup, "matrix is not square");
    const Index n = a.rows();
    const double err = numkit::inf_norm(a.transpose() * a - Matrix::Identity(n, n));
    if (err > tol.residual_tol) {
        std::ostringstream msg;
        msg << "matrix is not orthogonal (|A^T A - I| = " << err << ")";
        fail(ErrorKind::NotInGroup, msg.str());
    }
}

namespace {

struct RotCluster {
    int pairs = 0;
    double angle = 0.0;
    Matrix planes;  // 2*pairs columns, (x_i, y_i) per plane
};

// Splits an A-invariant subspace on which A acts with a single rotation angle
// into invariant planes, orienting each so the angle lands in (0, pi).
RotCluster split_planes(const Matrix& a, Matrix u) {
    const Index n = a.rows();
    const Index k = u.cols() / 2;
    RotCluster cl;
    cl.pairs = static_cast<int>(k);
    cl.planes.resize(n, 2 * k);
    double angle_sum = 0.0;
    for (Index p = 0; p < k; ++p) {
        Vector x = numkit::canonical_basis(u).col(0);
        Vector ax = a * x;
        Vector y = ax - x * x.dot(ax);
        y = u * (u.transpose() * y);  // keep y inside the subspace
        y.normalize();
        angle_sum += std::atan2(y.dot(ax), x.dot(ax));
        cl.planes.col(2 * p) = x;
        cl.planes.col(2 * p + 1) = y;
        if (p + 1 == k) break;
        Matrix rest = u - x * (x.transpose() * u) - y * (y.transpose() * u);
        Eigen::JacobiSVD<Matrix> svd(rest, Eigen::ComputeThinU);
        u = svd.matrixU().leftCols(u.cols() - 2);
    }
    cl.angle = angle_sum / static_cast<double>(k);
    return cl;
}

} // namespace

ConjugationResult orthogonal_normal_form(const Matrix& a, const Tolerance& tol) {
    tol.validate();
    require_orthogonal(a, tol);
    const Index n = a.rows();
    const Matrix id = Matrix::Identity(n, n);

    const Matrix plus = numkit::rank_kernel(a - id, tol).kernel;
    const Matrix minus = numkit::rank_kernel(a + id, tol).kernel;
    Matrix real_part(n, plus.cols() + minus.cols());
    real_part << plus, minus;
    const Matrix rest = numkit::orthogonal_complement(real_part, n);
    if (rest.cols() % 2 != 0) {
        fail(ErrorKind::InternalInconsistency,
             "complement of the +-1 eigenspaces has odd dimension; check rank_tol");
    }

    ConjugationResult res;
    std::vector<RotCluster> clusters;
    if (rest.cols() > 0) {
        Matrix s = rest.transpose() * (a + a.transpose()) * rest;
        s = 0.5 * (s + s.transpose());
        Eigen::SelfAdjointEigenSolver<Matrix> es(s);
        const Vector& mu = es.eigenvalues();
        const Index m = mu.size();
        // Eigenvalues ascend, so angles descend.
        std::vector<double> theta(static_cast<std::size_t>(m));
        for (Index i = 0; i < m; ++i) {
            theta[static_cast<std::size_t>(i)] = std::acos(std::clamp(mu(i) / 2.0, -1.0, 1.0));
        }
        Index start = 0;
        while (start < m) {
            Index end = start + 1;
            while (end < m && theta[static_cast<std::size_t>(end - 1)] - theta[static_cast<std::size_t>(end)] <= tol.angle_tol) {
                ++end;
            }
            if ((end - start) % 2 != 0) {
                fail(ErrorKind::ConvergenceFailure,
                     "rotation angle cluster of odd size; angle_tol may be too tight");
            }
            Matrix u = rest * es.eigenvectors().middleCols(start, end - start);
            clusters.push_back(split_planes(a, u));
            start = end;
        }
        for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
            const double gap = std::abs(clusters[i].angle - clusters[i + 1].angle);
            if (gap <= 10.0 * tol.angle_tol) {
                std::ostringstream msg;
                msg << "ambiguous rotation angles: clusters " << clusters[i].angle << " and "
                    << clusters[i + 1].angle << " are within 10x angle_tol";
                res.diagnostics.push_back(msg.str());
            }
        }
    }
    std::stable_sort(clusters.begin(), clusters.end(), [](const RotCluster& x, const RotCluster& y) {
        if (x.pairs != y.pairs) return x.pairs > y.pairs;
        return x.angle > y.angle;
    });

    Matrix q(n, n);
    Index col = 0;
    for (const auto& c : clusters) {
        q.middleCols(col, c.planes.cols()) = c.planes;
        col += c.planes.cols();
        res.form.blocks.push_back({BlockKind::Rot, c.pairs, c.angle});
    }
    q.middleCols(col, plus.cols()) = plus;
    col += plus.cols();
    q.middleCols(col, minus.cols()) = minus;
    if (plus.cols() > 0) res.form.blocks.push_back({BlockKind::PosId, static_cast<int>(plus.cols()), 0.0});
    if (minus.cols() > 0) res.form.blocks.push_back({BlockKind::NegId, static_cast<int>(minus.cols()), 0.0});

    res.form_matrix = res.form.matrix();
    res.conjugator = q;
    res.residual = numkit::inf_norm(q.transpose() * a * q - res.form_matrix);
    if (res.residual > tol.residual_tol * std::max(1.0, numkit::inf_norm(a))) {
        std::ostringstream msg;
        msg << "normal-form residual " << res.residual << " exceeds residual_tol";
        res.diagnostics.push_back(msg.str());
    }
    return res;
}

SphericalSegre classify_spherical(const Matrix& a, const Tolerance& tol) {
    return orthogonal_symbol(orthogonal_normal_form(a, tol).form.blocks);
}

} // namespace spaceforms
