#pragma once

// Isometries of H^n as elements of the Lorentz group O(1,n), with the form
// J = diag(-1, 1, ..., 1). Proper (time-orientation preserving) elements have
// a positive upper-left entry and act on the hyperboloid model of H^n.

#include "spaceforms/normal_form.hpp"

namespace spaceforms {

/// Throws NotInGroup unless T^T J T = J within residual_tol * max(1, |T|)^2.
void require_lorentz(const Matrix& t, const Tolerance& tol);

bool is_proper_lorentz(const Matrix& t);

enum class TemporalKind { Unit, BoostPair };

/// Splitting into the space-like primary components (spatial part) and the
/// rest (temporal part), which carries the time-like directions.
struct SpaceTimeSplit {
    Matrix temporal_basis;  ///< columns span V_t
    Matrix spatial_basis;   ///< columns span V_s, the Lorentz complement of V_t
    TemporalKind temporal_kind = TemporalKind::Unit;
    std::vector<double> temporal_eigenvalues;  ///< one value per temporal cluster
    std::vector<std::string> diagnostics;
};

/// Requires a proper Lorentz matrix; throws NotProper otherwise.
SpaceTimeSplit space_time_split(const Matrix& t, const Tolerance& tol = {});

/// The parabolic chain of a unipotent temporal block: u light-like and fixed,
/// (T - I) v = u with Q(v) = 1, (T - I) w = v with Q(w) = 0.
struct ParabolicChain {
    Vector u, v, w;
};

/// Builds the chain inside the span of `temporal_basis`.
ParabolicChain parabolic_chain(const Matrix& t, const Matrix& temporal_basis, const Tolerance& tol);

/// Change of basis taking the chain (u, v, w) to a Lorentz-orthonormal basis
/// in which the block becomes Theta.
Matrix parabolic_change_of_basis();

/// Gram matrix of the chain (u, v, w).
Matrix parabolic_chain_gram();

/// Lorentz normal form: temporal block first (+I_r, Theta + I_{r-3} or a
/// boost), then the spatial rotations, +I (boost case only) and -I. The
/// conjugator Q satisfies Q^T J Q = J with Q(0,0) > 0. Time-reversing input T
/// is handled through -T; the result then has proper = false and
/// form_matrix = -form.matrix().
ConjugationResult lorentz_normal_form(const Matrix& t, const Tolerance& tol = {});

/// Requires a proper Lorentz matrix; throws NotProper otherwise.
HyperbolicSegre classify_hyperbolic(const Matrix& t, const Tolerance& tol = {});

} // namespace spaceforms
