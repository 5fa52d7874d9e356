#pragma once

// Isotropy (centralizer) dimensions and orbit-type comparison.

#include "spaceforms/normal_form.hpp"

namespace spaceforms {

struct OrbitDimensions {
    int isotropy = 0;
    int orbit = 0;
};

/// Dimension of the isometry group of the n-dimensional space form, n(n+1)/2.
int group_dimension(int n);

/// Closed-form isotropy dimension of a Segre class, plus the orbit dimension.
OrbitDimensions isotropy_dimension(const SegreSymbol& sym);

/// Dimension of the centralizer of `m`, computed as the nullity of
/// X -> M X M^{-1} - X on the Lie algebra of the group (skew matrices,
/// affine skew-plus-translation pairs, or J-skew matrices).
int centralizer_dimension_numeric(const Matrix& m, Space space, const Tolerance& tol = {});

/// Segre symbol of a group element of the given space.
SegreSymbol classify(const Matrix& m, Space space, const Tolerance& tol = {});

/// Normal form in the given space (dispatches to the three classifiers).
ConjugationResult normal_form(const Matrix& m, Space space, const Tolerance& tol = {});

/// True iff both elements have the same Segre symbol, i.e. the same orbit type.
bool same_orbit_type(const Matrix& a, const Matrix& b, Space space, const Tolerance& tol = {});

} // namespace spaceforms
