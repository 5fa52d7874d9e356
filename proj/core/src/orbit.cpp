#include "spaceforms/orbit.hpp"

#include "spaceforms/error.hpp"
#include "spaceforms/euclidean.hpp"
#include "spaceforms/hyperbolic.hpp"
#include "spaceforms/spherical.hpp"

namespace spaceforms {

using numkit::Index;

int group_dimension(int n) { return n * (n + 1) / 2; }

namespace {

int orthogonal_isotropy(const SphericalSegre& s) {
    int d = 0;
    for (int k : s.rotation_mults) d += k * k;
    for (int m : s.real_mults) d += m * (m - 1) / 2;
    return d;
}

// Basis of the Lie algebra of the group, as (size x size) matrices.
std::vector<Matrix> tangent_basis(Space space, Index size) {
    std::vector<Matrix> out;
    if (space == Space::Euclidean) {
        const Index n = size - 1;
        for (Index i = 0; i < n; ++i) {
            for (Index j = i + 1; j < n; ++j) {
                Matrix x = Matrix::Zero(size, size);
                x(i, j) = 1.0;
                x(j, i) = -1.0;
                out.push_back(x);
            }
        }
        for (Index i = 0; i < n; ++i) {
            Matrix x = Matrix::Zero(size, size);
            x(i, n) = 1.0;
            out.push_back(x);
        }
        return out;
    }
    const Matrix j = space == Space::Hyperbolic ? numkit::BilinearForm::lorentz(size).gram()
                                                : Matrix::Identity(size, size);
    for (Index a = 0; a < size; ++a) {
        for (Index b = a + 1; b < size; ++b) {
            Matrix s = Matrix::Zero(size, size);
            s(a, b) = 1.0;
            s(b, a) = -1.0;
            out.push_back(j * s);
        }
    }
    return out;
}

void require_member(const Matrix& m, Space space, const Tolerance& tol) {
    switch (space) {
    case Space::Spherical: require_orthogonal(m, tol); break;
    case Space::Euclidean: require_euclidean(m, tol); break;
    case Space::Hyperbolic: require_lorentz(m, tol); break;
    }
}

} // namespace

OrbitDimensions isotropy_dimension(const SegreSymbol& sym) {
    validate(sym);
    int iso = 0;
    if (auto* s = std::get_if<SphericalSegre>(&sym.data)) {
        iso = orthogonal_isotropy(*s);
    } else if (auto* e = std::get_if<EuclideanSegre>(&sym.data)) {
        iso = orthogonal_isotropy(e->sigma_R);
        iso += e->kind == EuclideanKind::Elliptic ? e->r * (e->r + 1) / 2 : e->r * (e->r - 1) / 2 + 1;
    } else {
        const auto& h = sym.hyperbolic();
        iso = orthogonal_isotropy(h.sigma_s);
        switch (h.kind) {
        case HyperbolicKind::Elliptic: iso += h.r * (h.r - 1) / 2; break;
        case HyperbolicKind::Parabolic: iso += 1 + (h.r - 3) * (h.r - 2) / 2; break;
        case HyperbolicKind::Hyperbolic: iso += 1; break;
        }
    }
    return {iso, group_dimension(sym.n) - iso};
}

int centralizer_dimension_numeric(const Matrix& m, Space space, const Tolerance& tol) {
    tol.validate();
    require_member(m, space, tol);
    const Index size = m.rows();
    const Matrix inv = m.inverse();
    const auto basis = tangent_basis(space, size);
    Matrix op(size * size, static_cast<Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const Matrix img = m * basis[k] * inv - basis[k];
        op.col(static_cast<Index>(k)) = Eigen::Map<const Vector>(img.data(), img.size());
    }
    return static_cast<int>(numkit::rank_kernel(op, tol).kernel.cols());
}

ConjugationResult normal_form(const Matrix& m, Space space, const Tolerance& tol) {
    switch (space) {
    case Space::Spherical: return orthogonal_normal_form(m, tol);
    case Space::Euclidean: return euclidean_normal_form(m, tol);
    case Space::Hyperbolic: return lorentz_normal_form(m, tol);
    }
    fail(ErrorKind::InvariantViolation, "unknown space");
}

SegreSymbol classify(const Matrix& m, Space space, const Tolerance& tol) {
    const int n = static_cast<int>(m.rows()) - 1;
    switch (space) {
    case Space::Spherical: return make_symbol(n, classify_spherical(m, tol));
    case Space::Euclidean: return make_symbol(n, classify_euclidean(m, tol));
    case Space::Hyperbolic: return make_symbol(n, classify_hyperbolic(m, tol));
    }
    fail(ErrorKind::InvariantViolation, "unknown space");
}

bool same_orbit_type(const Matrix& a, const Matrix& b, Space space, const Tolerance& tol) {
    if (a.rows() != b.rows()) return false;
    return classify(a, space, tol) == classify(b, space, tol);
}

} // namespace spaceforms
