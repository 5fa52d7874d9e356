#include "random_group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace spaceforms::testing {

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Matrix random_orthogonal(int n, Rng& rng) {
    std::normal_distribution<double> normal;
    Matrix g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g(i, j) = normal(rng);
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        if (r(j, j) < 0) q.col(j) = -q.col(j);
    }
    return q;
}

Matrix random_euclidean(int n, Rng& rng) {
    Vector b(n);
    for (int i = 0; i < n; ++i) b(i) = uniform(rng, -2.0, 2.0);
    return affine(random_orthogonal(n, rng), b);
}

Matrix random_lorentz(int n, Rng& rng, double max_rapidity) {
    auto spatial_rotation = [&]() {
        Matrix m = Matrix::Identity(n + 1, n + 1);
        m.bottomRightCorner(n, n) = random_orthogonal(n, rng);
        return m;
    };
    Matrix boost = Matrix::Identity(n + 1, n + 1);
    boost.topLeftCorner(2, 2) = boost_block(uniform(rng, 0.0, max_rapidity));
    return spatial_rotation() * boost * spatial_rotation();
}

Matrix random_element(Space space, int n, Rng& rng) {
    switch (space) {
    case Space::Spherical: return random_orthogonal(n + 1, rng);
    case Space::Euclidean: return random_euclidean(n, rng);
    case Space::Hyperbolic: return random_lorentz(n, rng);
    }
    return {};
}

Matrix group_inverse(const Matrix& g, Space space) {
    switch (space) {
    case Space::Spherical: return g.transpose();
    case Space::Euclidean: {
        const auto n = g.rows() - 1;
        const Matrix a = g.topLeftCorner(n, n).transpose();
        return affine(a, -a * g.topRightCorner(n, 1));
    }
    case Space::Hyperbolic: {
        const Matrix j = numkit::BilinearForm::lorentz(g.rows()).gram();
        return j * g.transpose() * j;
    }
    }
    return {};
}

Matrix conjugate(const Matrix& f, const Matrix& g, Space space) {
    return g * f * group_inverse(g, space);
}

std::vector<double> generic_angles(std::size_t count, Rng& rng) {
    const double lo = 0.05, hi = std::numbers::pi - 0.05, gap = 0.05;
    for (;;) {
        std::vector<double> out;
        for (std::size_t i = 0; i < count; ++i) out.push_back(uniform(rng, lo, hi));
        std::vector<double> sorted = out;
        std::sort(sorted.begin(), sorted.end());
        bool ok = true;
        for (std::size_t i = 1; i < sorted.size(); ++i) ok = ok && sorted[i] - sorted[i - 1] >= gap;
        if (ok) return out;
    }
}

std::size_t rotation_clusters(const SegreSymbol& sym) {
    if (auto* s = std::get_if<SphericalSegre>(&sym.data)) return s->rotation_mults.size();
    if (auto* e = std::get_if<EuclideanSegre>(&sym.data)) return e->sigma_R.rotation_mults.size();
    return sym.hyperbolic().sigma_s.rotation_mults.size();
}

RepresentativeParams generic_params(const SegreSymbol& sym, Rng& rng) {
    RepresentativeParams p;
    p.angles = generic_angles(rotation_clusters(sym), rng);
    p.translation = uniform(rng, 0.5, 3.0);
    p.boost = uniform(rng, 0.2, 1.5);
    return p;
}

} // namespace spaceforms::testing
