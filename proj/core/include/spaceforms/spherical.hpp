#pragma once

// Isometries of S^n, i.e. the orthogonal group O(n+1).

#include "spaceforms/normal_form.hpp"

namespace spaceforms {

/// Throws NotInGroup unless `a` is square with A^T A = I within residual_tol.
void require_orthogonal(const Matrix& a, const Tolerance& tol);

/// Block-diagonal form with rotation blocks (by decreasing multiplicity, then
/// decreasing angle), then +I, then -I. The conjugator is orthogonal.
ConjugationResult orthogonal_normal_form(const Matrix& a, const Tolerance& tol = {});

SphericalSegre classify_spherical(const Matrix& a, const Tolerance& tol = {});

} // namespace spaceforms
