#pragma once

// Random group elements and generic class representatives for tests.

#include <cstdint>
#include <random>
#include <vector>

#include "spaceforms/spaceforms.hpp"

namespace spaceforms::testing {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);

/// Haar-distributed element of O(n).
Matrix random_orthogonal(int n, Rng& rng);

/// Affine isometry of E^n with translation entries in [-2, 2].
Matrix random_euclidean(int n, Rng& rng);

/// Proper Lorentz matrix of size n+1: rotation * boost * rotation, with the
/// boost rapidity drawn from [0, max_rapidity].
Matrix random_lorentz(int n, Rng& rng, double max_rapidity = 1.5);

/// Random element of the isometry group of the n-dimensional space form.
Matrix random_element(Space space, int n, Rng& rng);

/// g^{-1} using the group structure.
Matrix group_inverse(const Matrix& g, Space space);

/// g * f * g^{-1}.
Matrix conjugate(const Matrix& f, const Matrix& g, Space space);

/// `count` angles in (0.05, pi - 0.05) with pairwise gaps of at least 0.05.
std::vector<double> generic_angles(std::size_t count, Rng& rng);

/// Random angles, translation length in [0.5, 3] and rapidity in [0.2, 1.5].
RepresentativeParams generic_params(const SegreSymbol& sym, Rng& rng);

/// Number of rotation clusters carried by the symbol.
std::size_t rotation_clusters(const SegreSymbol& sym);

} // namespace spaceforms::testing
