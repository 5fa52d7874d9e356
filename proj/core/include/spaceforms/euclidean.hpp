#pragma once

// Isometries of E^n as (n+1)x(n+1) affine matrices [[A, b], [0, 1]] with A
// orthogonal.

#include "spaceforms/normal_form.hpp"

namespace spaceforms {

/// Throws NotInGroup unless `m` has the affine shape with orthogonal linear part.
void require_euclidean(const Matrix& m, const Tolerance& tol);

/// Affine matrix [[a, b], [0, 1]].
Matrix affine(const Matrix& a, const Vector& b);

/// Normal form Rot..., -I, then either +I_{r+1} (a fixed point exists) or
/// +I_{r-1} followed by the translation block [[1, a], [0, 1]]. The
/// conjugator is itself an affine isometry.
ConjugationResult euclidean_normal_form(const Matrix& m, const Tolerance& tol = {});

EuclideanSegre classify_euclidean(const Matrix& m, const Tolerance& tol = {});

} // namespace spaceforms
