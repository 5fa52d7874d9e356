#include "spaceforms/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "spaceforms/error.hpp"

namespace spaceforms::numkit {

void Tolerance::validate() const {
    for (double t : {rank_tol, angle_tol, residual_tol}) {
        if (!std::isfinite(t) || t <= 0.0) {
            fail(ErrorKind::InvariantViolation, "tolerances must be finite and positive");
        }
    }
}

Matrix BilinearForm::gram() const {
    Matrix g = Matrix::Identity(dim, dim);
    if (kind == FormKind::Lorentz && dim > 0) g(0, 0) = -1.0;
    return g;
}

double BilinearForm::operator()(const Vector& x, const Vector& y) const {
    double s = x.dot(y);
    if (kind == FormKind::Lorentz) s -= 2.0 * x(0) * y(0);
    return s;
}

Matrix BilinearForm::restrict_to(const Matrix& basis) const {
    return basis.transpose() * gram() * basis;
}

void require_valid(const Matrix& m, std::string_view what) {
    if (m.rows() == 0 || m.cols() == 0) {
        fail(ErrorKind::InvariantViolation, std::string(what) + " is empty");
    }
    if (!m.allFinite()) {
        fail(ErrorKind::InvariantViolation, std::string(what) + " has non-finite entries");
    }
}

double inf_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

RankKernel rank_kernel(const Matrix& m, const Tolerance& tol, double scale) {
    const Index cols = m.cols();
    if (cols == 0) return {0, Matrix(0, 0)};
    if (m.rows() == 0) return {0, Matrix::Identity(cols, cols)};

    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    const Vector& sigma = svd.singularValues();
    const double smax = sigma.size() > 0 ? sigma(0) : 0.0;
    const double threshold = tol.rank_tol * std::max({1.0, smax, scale});
    Index rank = 0;
    for (Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > threshold) ++rank;
    }
    Matrix kernel = svd.matrixV().rightCols(cols - rank);
    return {rank, canonical_basis(kernel)};
}

Matrix canonical_basis(const Matrix& basis) {
    const Index n = basis.rows();
    const Index k = basis.cols();
    if (k == 0) return Matrix(n, 0);

    // Orthonormalize first so projections are well defined.
    Eigen::HouseholderQR<Matrix> qr(basis);
    Matrix q = qr.householderQ() * Matrix::Identity(n, k);

    // Candidate i is the projection of e_i onto the span.
    Matrix cand = q * q.transpose();
    Matrix out(n, k);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (Index c = 0; c < k; ++c) {
        Index best = -1;
        double best_norm = -1.0;
        for (Index i = 0; i < n; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            double nn = cand.col(i).norm();
            // Prefer the lowest index among near-equal candidates.
            if (nn > best_norm * (1.0 + 1e-9) + 1e-14) {
                best_norm = nn;
                best = i;
            }
        }
        used[static_cast<std::size_t>(best)] = true;
        Vector v = cand.col(best) / best_norm;
        out.col(c) = v;
        for (Index i = 0; i < n; ++i) {
            if (!used[static_cast<std::size_t>(i)]) {
                cand.col(i) -= v * v.dot(cand.col(i));
            }
        }
    }
    // One re-orthogonalization pass keeps the columns orthonormal to rounding.
    for (Index c = 0; c < k; ++c) {
        for (Index p = 0; p < c; ++p) out.col(c) -= out.col(p) * out.col(p).dot(out.col(c));
        out.col(c).normalize();
    }
    return out;
}

Matrix orthogonal_complement(const Matrix& basis, Index ambient) {
    if (basis.cols() == 0) return Matrix::Identity(ambient, ambient);
    Tolerance tol;
    tol.rank_tol = 1e-10;
    return rank_kernel(basis.transpose(), tol).kernel;
}

Vector min_norm_solve(const Matrix& m, const Vector& rhs, Index rank) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector& s = svd.singularValues();
    Vector x = Vector::Zero(m.cols());
    for (Index i = 0; i < std::min<Index>(rank, s.size()); ++i) {
        x += svd.matrixV().col(i) * (svd.matrixU().col(i).dot(rhs) / s(i));
    }
    return x;
}

Matrix generalized_kernel(const Matrix& poly, Index max_dim, const Tolerance& tol) {
    const Index n = poly.rows();
    Eigen::JacobiSVD<Matrix> svd(poly);
    const double scale = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    Matrix k(n, 0);
    for (Index step = 0; step < n; ++step) {
        Matrix proj = Matrix::Identity(n, n) - k * k.transpose();
        RankKernel next = rank_kernel(proj * poly, tol, scale);
        if (next.kernel.cols() <= k.cols()) break;
        k = next.kernel;
        if (k.cols() >= max_dim) break;
    }
    return k;
}

namespace {

struct RawCluster {
    std::vector<std::complex<double>> members;  // every eigenvalue, conjugates included
    bool real = false;

    // Representative point in the closed upper half plane.
    std::complex<double> center() const {
        if (real) {
            double s = 0.0;
            for (auto z : members) s += z.real();
            return {s / static_cast<double>(members.size()), 0.0};
        }
        std::complex<double> s = 0.0;
        for (auto z : members) s += std::complex<double>(z.real(), std::abs(z.imag()));
        return s / static_cast<double>(members.size());
    }
};

bool flagged_real(std::complex<double> z, double angle_tol) {
    return std::abs(z.imag()) <= angle_tol * std::max(1.0, std::abs(z));
}

bool same_cluster(std::complex<double> a, std::complex<double> b, double angle_tol) {
    const bool ra = flagged_real(a, angle_tol);
    const bool rb = flagged_real(b, angle_tol);
    if (ra != rb) return false;
    if (ra) return std::abs(a.real() - b.real()) <= angle_tol * std::max(1.0, std::abs(a.real()));
    const double ma = std::abs(a), mb = std::abs(b);
    const double ta = std::abs(std::arg(a)), tb = std::abs(std::arg(b));
    return std::abs(ma - mb) <= angle_tol * std::max(1.0, ma) && std::abs(ta - tb) <= angle_tol;
}

Matrix cluster_polynomial(const Matrix& m, std::complex<double> c, bool real) {
    const Index n = m.rows();
    const Matrix id = Matrix::Identity(n, n);
    if (real) return m - c.real() * id;
    return m * m - 2.0 * c.real() * m + std::norm(c) * id;
}

} // namespace

EigenStructure eigen_structure(const Matrix& m, const Tolerance& tol, const EigenOptions& options) {
    require_valid(m, "matrix");
    if (m.rows() != m.cols()) fail(ErrorKind::InvariantViolation, "matrix is not square");
    const Index n = m.rows();
    if (n > options.size_cap) {
        fail(ErrorKind::UnsupportedDimension,
             "matrix size " + std::to_string(n) + " exceeds cap " + std::to_string(options.size_cap));
    }

    Eigen::EigenSolver<Matrix> solver;
    solver.setMaxIterations(options.max_iterations_per_row * n);
    solver.compute(m, false);
    if (solver.info() != Eigen::Success) {
        fail(ErrorKind::ConvergenceFailure,
             "QR iteration did not converge; raise the iteration cap");
    }
    std::vector<std::complex<double>> values(solver.eigenvalues().data(),
                                             solver.eigenvalues().data() + n);

    // Single-linkage grouping of eigenvalues, conjugates sharing a cluster.
    std::vector<std::size_t> parent(values.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (same_cluster(values[i], values[j], tol.angle_tol)) parent[find(i)] = find(j);
        }
    }
    std::vector<RawCluster> raw;
    {
        std::vector<long> slot(values.size(), -1);
        for (std::size_t i = 0; i < values.size(); ++i) {
            std::size_t r = find(i);
            if (slot[r] < 0) {
                slot[r] = static_cast<long>(raw.size());
                raw.push_back({});
                raw.back().real = flagged_real(values[i], tol.angle_tol);
            }
            raw[static_cast<std::size_t>(slot[r])].members.push_back(values[i]);
        }
    }

    // Resolve: each cluster's primary component must have the cluster's
    // dimension and together they must span. Otherwise merge the offending
    // cluster (or the closest pair) and retry.
    std::vector<Matrix> bases;
    for (;;) {
        bases.assign(raw.size(), Matrix());
        long bad = -1;
        Matrix all(n, 0);
        for (std::size_t c = 0; c < raw.size(); ++c) {
            const Index want = static_cast<Index>(raw[c].members.size());
            Matrix poly = cluster_polynomial(m, raw[c].center(), raw[c].real);
            bases[c] = generalized_kernel(poly, want, tol);
            if (bases[c].cols() != want) {
                bad = static_cast<long>(c);
                break;
            }
            Matrix grown(n, all.cols() + want);
            grown << all, bases[c];
            all = grown;
        }
        // Overlapping components from a split Jordan block are nearly
        // parallel, so independence is judged with a much looser cutoff.
        Tolerance span_tol = tol;
        span_tol.rank_tol = std::max(tol.rank_tol, 1e-6);
        if (bad < 0 && rank_kernel(all, span_tol).rank == n) break;
        if (raw.size() == 1) {
            fail(ErrorKind::ConvergenceFailure,
                 "primary decomposition failed; tolerances may be too tight for this input");
        }
        std::size_t a = 0, b = 1;
        if (bad >= 0) {
            a = static_cast<std::size_t>(bad);
            b = a == 0 ? 1 : 0;
            for (std::size_t c = 0; c < raw.size(); ++c) {
                if (c != a && std::abs(raw[c].center() - raw[a].center()) <
                                  std::abs(raw[b].center() - raw[a].center())) {
                    b = c;
                }
            }
        } else {
            for (std::size_t i = 0; i < raw.size(); ++i) {
                for (std::size_t j = i + 1; j < raw.size(); ++j) {
                    if (std::abs(raw[i].center() - raw[j].center()) <
                        std::abs(raw[a].center() - raw[b].center())) {
                        a = i;
                        b = j;
                    }
                }
            }
        }
        const auto ca = raw[a].center();
        if (std::abs(raw[b].center() - ca) > 1e-2 * std::max(1.0, std::abs(ca))) {
            fail(ErrorKind::ConvergenceFailure,
                 "eigenvalue cluster is defective beyond the merge radius; check tolerances");
        }
        raw[b].real = raw[b].real || raw[a].real;
        raw[b].members.insert(raw[b].members.end(), raw[a].members.begin(), raw[a].members.end());
        raw.erase(raw.begin() + static_cast<long>(a));
    }

    EigenStructure out;
    for (std::size_t c = 0; c < raw.size(); ++c) {
        EigenCluster cl;
        auto z = raw[c].center();
        if (raw[c].real) {
            cl.value = RealValue{z.real()};
        } else {
            cl.value = ComplexPair{std::abs(z), std::arg(z)};
        }
        cl.multiplicity = static_cast<Index>(raw[c].members.size());
        cl.basis = bases[c];
        out.clusters.push_back(std::move(cl));
    }
    std::sort(out.clusters.begin(), out.clusters.end(),
              [](const EigenCluster& a, const EigenCluster& b) {
                  if (a.is_real() != b.is_real()) return a.is_real();
                  if (a.is_real()) return a.real_value() > b.real_value();
                  const auto& pa = std::get<ComplexPair>(a.value);
                  const auto& pb = std::get<ComplexPair>(b.value);
                  if (pa.angle != pb.angle) return pa.angle < pb.angle;
                  return pa.modulus < pb.modulus;
              });

    for (std::size_t i = 0; i + 1 < out.clusters.size(); ++i) {
        const auto& a = out.clusters[i];
        const auto& b = out.clusters[i + 1];
        if (a.is_real() || b.is_real()) continue;
        double d = std::abs(std::get<ComplexPair>(a.value).angle - std::get<ComplexPair>(b.value).angle);
        if (d <= 10.0 * tol.angle_tol) {
            std::ostringstream msg;
            msg << "rotation angles differ by " << d << ", within 10x angle_tol";
            out.diagnostics.push_back(msg.str());
        }
    }
    return out;
}

namespace {

Vector project_out(const Vector& v, const Matrix& done, const std::vector<double>& signs,
                   const BilinearForm& form) {
    Vector r = v;
    for (Index j = 0; j < done.cols(); ++j) {
        r -= done.col(j) * (form(done.col(j), r) * signs[static_cast<std::size_t>(j)]);
    }
    return r;
}

} // namespace

Matrix orthonormalize(const Matrix& vectors, const BilinearForm& form, const Tolerance& tol) {
    const Index n = vectors.rows();
    const Index k = vectors.cols();
    if (form.dim != n) fail(ErrorKind::InvariantViolation, "form dimension does not match vectors");
    if (k == 0) return Matrix(n, 0);
    const double scale = std::max(1.0, vectors.colwise().norm().maxCoeff());
    const double eps = std::sqrt(tol.residual_tol) * scale * scale;

    if (form.kind == FormKind::Euclidean) {
        Matrix out(n, k);
        for (Index c = 0; c < k; ++c) {
            Vector v = vectors.col(c);
            for (int pass = 0; pass < 2; ++pass) {
                for (Index p = 0; p < c; ++p) v -= out.col(p) * out.col(p).dot(v);
            }
            double nv = v.norm();
            if (nv <= std::sqrt(tol.residual_tol) * scale) fail(ErrorKind::DegenerateSpan, "vectors are linearly dependent");
            out.col(c) = v / nv;
        }
        return out;
    }

    // Lorentz: pivot on the time-like vector first, then on the largest
    // space-like one, re-projecting the remainder after each choice.
    std::vector<Vector> rest;
    for (Index c = 0; c < k; ++c) rest.push_back(vectors.col(c));
    Matrix done(n, 0);
    std::vector<double> signs;
    bool have_time = false;
    while (!rest.empty()) {
        std::size_t pick = rest.size();
        double best = 0.0;
        if (!have_time) {
            for (std::size_t i = 0; i < rest.size(); ++i) {
                double q = form(rest[i], rest[i]);
                if (q < -eps && -q > best) {
                    best = -q;
                    pick = i;
                }
            }
        }
        if (pick == rest.size()) {
            for (std::size_t i = 0; i < rest.size(); ++i) {
                double q = form(rest[i], rest[i]);
                if (q > eps && q > best) {
                    best = q;
                    pick = i;
                }
            }
        }
        if (pick == rest.size()) {
            // Remaining vectors are all null: try w_i -/+ w_j.
            bool found = false;
            for (std::size_t i = 0; i < rest.size() && !found; ++i) {
                for (std::size_t j = i + 1; j < rest.size() && !found; ++j) {
                    double b = form(rest[i], rest[j]);
                    if (std::abs(b) > eps) {
                        rest[i] = rest[i] - (b > 0 ? 1.0 : -1.0) * rest[j];
                        found = true;
                    }
                }
            }
            if (!found) fail(ErrorKind::DegenerateSpan, "span is degenerate for the Lorentz form");
            continue;
        }
        Vector v = rest[pick];
        rest.erase(rest.begin() + static_cast<long>(pick));
        double q = form(v, v);
        if (q < 0) {
            if (have_time) fail(ErrorKind::DegenerateSpan, "span has two time-like directions");
            have_time = true;
        }
        v /= std::sqrt(std::abs(q));
        double sign = q < 0 ? -1.0 : 1.0;
        Matrix grown(n, done.cols() + 1);
        grown << done, v;
        done = grown;
        signs.push_back(sign);
        for (auto& w : rest) {
            w = project_out(w, done.rightCols(1), {sign}, form);
        }
    }
    // Reorder so the time-like vector, if any, is first.
    for (Index c = 0; c < done.cols(); ++c) {
        if (signs[static_cast<std::size_t>(c)] < 0 && c != 0) {
            Vector t = done.col(c);
            for (Index j = c; j > 0; --j) done.col(j) = done.col(j - 1);
            done.col(0) = t;
            break;
        }
    }
    return done;
}

} // namespace spaceforms::numkit
