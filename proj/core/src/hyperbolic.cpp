#include "spaceforms/hyperbolic.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "spaceforms/error.hpp"
#include "spaceforms/spherical.hpp"

namespace spaceforms {

using numkit::BilinearForm;
using numkit::Index;

namespace {

Matrix lorentz_gram(Index dim) { return BilinearForm::lorentz(dim).gram(); }

Matrix lorentz_inverse(const Matrix& x) {
    const Matrix j = lorentz_gram(x.rows());
    return j * x.transpose() * j;
}

double min_eigenvalue(const Matrix& sym) {
    if (sym.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (sym + sym.transpose()), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

// Smallest right singular vector, for a kernel known to be one-dimensional.
Vector smallest_singular_vector(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    return svd.matrixV().col(m.cols() - 1);
}

std::string format_residual(const char* what, double value) {
    std::ostringstream msg;
    msg << what << " " << value << " exceeds residual_tol";
    return msg.str();
}

} // namespace

void require_lorentz(const Matrix& t, const Tolerance& tol) {
    numkit::require_valid(t, "matrix");
    if (t.rows() != t.cols()) fail(ErrorKind::NotInGroup, "matrix is not square");
    if (t.rows() < 2) fail(ErrorKind::UnsupportedDimension, "hyperbolic isometries need n >= 1");
    const Matrix j = lorentz_gram(t.rows());
    const double err = numkit::inf_norm(t.transpose() * j * t - j);
    const double scale = std::max(1.0, numkit::inf_norm(t));
    if (err > tol.residual_tol * scale * scale) {
        std::ostringstream msg;
        msg << "matrix does not preserve the Lorentz form (|T^T J T - J| = " << err << ")";
        fail(ErrorKind::NotInGroup, msg.str());
    }
}

bool is_proper_lorentz(const Matrix& t) { return t.rows() > 0 && t(0, 0) > 0.0; }

SpaceTimeSplit space_time_split(const Matrix& t, const Tolerance& tol) {
    tol.validate();
    require_lorentz(t, tol);
    if (!is_proper_lorentz(t)) {
        fail(ErrorKind::NotProper, "matrix reverses time orientation; classify -T instead");
    }
    const Index dim = t.rows();
    const Matrix j = lorentz_gram(dim);
    const auto es = numkit::eigen_structure(t, tol);
    const double spacelike_margin = std::sqrt(tol.residual_tol);

    SpaceTimeSplit split;
    split.diagnostics = es.diagnostics;
    std::vector<const numkit::EigenCluster*> temporal;
    for (const auto& cl : es.clusters) {
        if (min_eigenvalue(cl.basis.transpose() * j * cl.basis) > spacelike_margin) continue;
        temporal.push_back(&cl);
    }
    if (temporal.empty()) fail(ErrorKind::InternalInconsistency, "no temporal component found");
    for (const auto* cl : temporal) {
        if (!cl->is_real() || cl->real_value() <= 0.0) {
            fail(ErrorKind::InternalInconsistency, "temporal eigenvalues must be real and positive");
        }
        split.temporal_eigenvalues.push_back(cl->real_value());
    }

    const double pair_tol = std::sqrt(tol.residual_tol);
    if (temporal.size() == 1) {
        if (std::abs(temporal[0]->real_value() - 1.0) > 1e-3) {
            fail(ErrorKind::InternalInconsistency, "single temporal eigenvalue differs from 1");
        }
        split.temporal_kind = TemporalKind::Unit;
    } else if (temporal.size() == 2) {
        const double prod = temporal[0]->real_value() * temporal[1]->real_value();
        if (std::abs(prod - 1.0) > pair_tol || temporal[0]->multiplicity != 1 ||
            temporal[1]->multiplicity != 1) {
            fail(ErrorKind::InternalInconsistency, "temporal eigenvalues are not a pair lambda, 1/lambda");
        }
        split.temporal_kind = TemporalKind::BoostPair;
    } else {
        fail(ErrorKind::InternalInconsistency, "more than two temporal eigenvalue clusters");
    }

    Index r = 0;
    for (const auto* cl : temporal) r += cl->basis.cols();
    Matrix vt(dim, r);
    Index col = 0;
    for (const auto* cl : temporal) {
        vt.middleCols(col, cl->basis.cols()) = cl->basis;
        col += cl->basis.cols();
    }
    split.temporal_basis = numkit::canonical_basis(vt);
    Matrix constraint = split.temporal_basis.transpose() * j;
    split.spatial_basis = dim - r > 0 ? numkit::orthogonal_complement(constraint.transpose(), dim)
                                      : Matrix(dim, 0);
    if (split.spatial_basis.cols() != dim - r) {
        fail(ErrorKind::DegenerateSpan, "temporal part is degenerate for the Lorentz form");
    }
    if (split.spatial_basis.cols() > 0 &&
        min_eigenvalue(split.spatial_basis.transpose() * j * split.spatial_basis) <= spacelike_margin) {
        fail(ErrorKind::DegenerateSpan, "spatial part is not space-like");
    }
    return split;
}

Matrix parabolic_change_of_basis() {
    Matrix p(3, 3);
    p << 3.0 / 8.0, 0.0, 5.0 / 8.0, 0.5, 1.0, -0.5, 1.0, 0.0, -1.0;
    return p;
}

Matrix parabolic_chain_gram() {
    Matrix g(3, 3);
    g << 0.0, 0.0, -1.0, 0.0, 1.0, -0.5, -1.0, -0.5, 0.0;
    return g;
}

ParabolicChain parabolic_chain(const Matrix& t, const Matrix& vt, const Tolerance& tol) {
    const Index dim = t.rows();
    const BilinearForm q = BilinearForm::lorentz(dim);
    const Matrix e = t - Matrix::Identity(dim, dim);
    const Matrix m1 = e * vt;
    const Matrix m2 = e * m1;
    const Matrix m3 = e * m2;
    const Index r1 = numkit::rank_kernel(m1, tol).rank;
    const Index r2 = numkit::rank_kernel(m2, tol).rank;
    const Index r3 = numkit::rank_kernel(m3, tol).rank;
    if (r1 != 2 || r2 != 1 || r3 != 0) {
        std::ostringstream msg;
        msg << "temporal block is not a single size-3 Jordan chain (ranks " << r1 << ", " << r2
            << ", " << r3 << "); adjust rank_tol";
        fail(ErrorKind::DegenerateSpan, msg.str());
    }

    Eigen::JacobiSVD<Matrix> svd(m2, Eigen::ComputeThinU);
    Vector u = svd.matrixU().col(0);
    if (u(0) < 0) u = -u;

    Vector v = vt * numkit::min_norm_solve(m1, u, 2);
    const double qv = q(v, v);
    if (!(qv > 0.0)) fail(ErrorKind::DegenerateSpan, "parabolic chain vector is not space-like");
    const double scale = 1.0 / std::sqrt(qv);
    v *= scale;
    u *= scale;

    Vector w = vt * numkit::min_norm_solve(m1, v, 2);
    w += (q(w, w) / 2.0) * u;
    return {u, v, w};
}

namespace {

ConjugationResult proper_normal_form(const Matrix& t, const Tolerance& tol) {
    const SpaceTimeSplit split = space_time_split(t, tol);
    const Index dim = t.rows();
    const BilinearForm q = BilinearForm::lorentz(dim);
    const Matrix& vt = split.temporal_basis;
    const Index r = vt.cols();

    ConjugationResult res;
    res.diagnostics = split.diagnostics;
    Matrix temporal(dim, r);

    if (split.temporal_kind == TemporalKind::BoostPair) {
        double lambda = split.temporal_eigenvalues[0];
        double mu = split.temporal_eigenvalues[1];
        if (lambda < mu) std::swap(lambda, mu);
        const Matrix id = Matrix::Identity(dim, dim);
        Vector a = vt * smallest_singular_vector((t - lambda * id) * vt);
        Vector b = vt * smallest_singular_vector((t - mu * id) * vt);
        if (a(0) < 0) a = -a;
        if (b(0) < 0) b = -b;
        const double qab = q(a, b);
        if (!(qab < 0.0)) fail(ErrorKind::DegenerateSpan, "boost eigenvectors are not a light-like pair");
        const double s = 1.0 / std::sqrt(-qab);
        a *= s;
        b *= s;
        temporal.col(0) = (a + b) / std::sqrt(2.0);
        temporal.col(1) = (a - b) / std::sqrt(2.0);
        res.form.blocks.push_back({BlockKind::Boost, 1, 0.5 * (std::log(lambda) - std::log(mu))});
    } else {
        const Matrix e = t - Matrix::Identity(dim, dim);
        if (numkit::rank_kernel(e * vt, tol).rank == 0) {
            Matrix l = numkit::orthonormalize(vt, q, tol);
            if (l(0, 0) < 0) l.col(0) = -l.col(0);
            temporal = l;
            res.form.blocks.push_back({BlockKind::PosId, static_cast<int>(r), 0.0});
        } else {
            const ParabolicChain ch = parabolic_chain(t, vt, tol);
            Matrix chain(dim, 3);
            chain << ch.u, ch.v, ch.w;
            temporal.leftCols(3) = chain * parabolic_change_of_basis();
            if (r > 3) {
                const Matrix k = numkit::rank_kernel(chain.transpose() * q.gram() * vt, tol).kernel;
                temporal.rightCols(r - 3) = numkit::orthonormalize(vt * k, q, tol);
            }
            res.form.blocks.push_back({BlockKind::Theta, 1, 0.0});
            if (r > 3) res.form.blocks.push_back({BlockKind::PosId, static_cast<int>(r - 3), 0.0});
        }
    }

    Matrix spatial(dim, dim - r);
    if (dim - r > 0) {
        const Matrix ls = numkit::orthonormalize(split.spatial_basis, q, tol);
        const Matrix as = ls.transpose() * q.gram() * t * ls;
        const ConjugationResult orth = orthogonal_normal_form(as, tol);
        spatial = ls * orth.conjugator;
        res.form.blocks.insert(res.form.blocks.end(), orth.form.blocks.begin(), orth.form.blocks.end());
        res.diagnostics.insert(res.diagnostics.end(), orth.diagnostics.begin(), orth.diagnostics.end());
    }

    Matrix x(dim, dim);
    x << temporal, spatial;
    res.conjugator = x;
    res.form_matrix = res.form.matrix();
    res.residual = numkit::inf_norm(lorentz_inverse(x) * t * x - res.form_matrix);
    const Matrix j = q.gram();
    const double membership = numkit::inf_norm(x.transpose() * j * x - j);
    if (membership > tol.residual_tol) {
        res.diagnostics.push_back(format_residual("conjugator Lorentz residual", membership));
    }
    if (res.residual > tol.residual_tol * std::max(1.0, numkit::inf_norm(t))) {
        res.diagnostics.push_back(format_residual("normal-form residual", res.residual));
    }
    return res;
}

} // namespace

ConjugationResult lorentz_normal_form(const Matrix& t, const Tolerance& tol) {
    tol.validate();
    require_lorentz(t, tol);
    if (is_proper_lorentz(t)) return proper_normal_form(t, tol);
    ConjugationResult res = proper_normal_form(-t, tol);
    res.proper = false;
    res.form_matrix = -res.form_matrix;
    res.residual = numkit::inf_norm(lorentz_inverse(res.conjugator) * t * res.conjugator - res.form_matrix);
    return res;
}

HyperbolicSegre classify_hyperbolic(const Matrix& t, const Tolerance& tol) {
    tol.validate();
    require_lorentz(t, tol);
    if (!is_proper_lorentz(t)) fail(ErrorKind::NotProper, "matrix reverses time orientation");
    const auto res = proper_normal_form(t, tol);
    return symbol_of(res.form, Space::Hyperbolic, static_cast<int>(t.rows() - 1)).hyperbolic();
}

} // namespace spaceforms
