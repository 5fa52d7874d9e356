#pragma once

// Block-diagonal normal forms shared by the three classifiers.

#include <optional>
#include <string>
#include <vector>

#include "spaceforms/numkit.hpp"
#include "spaceforms/segre.hpp"

namespace spaceforms {

using numkit::Matrix;
using numkit::Tolerance;
using numkit::Vector;

enum class BlockKind {
    Rot,    ///< `count` copies of R_angle, angle in (0, pi)
    PosId,  ///< identity of size `count`
    NegId,  ///< minus identity of size `count`
    Trans,  ///< [[1, a], [0, 1]], the translation of length a > 0 (affine tail)
    Theta,  ///< the 3x3 parabolic Lorentz block
    Boost,  ///< [[cosh t, sinh t], [sinh t, cosh t]], t > 0
};

struct Block {
    BlockKind kind = BlockKind::PosId;
    int count = 1;
    double param = 0.0;  ///< angle, translation length or rapidity

    int size() const;
    Matrix matrix() const;

    friend bool operator==(const Block&, const Block&) = default;
};

struct NormalForm {
    std::vector<Block> blocks;

    int size() const;
    Matrix matrix() const;
    /// e.g. "Rot(1.047198)x2 + PosId(1)".
    std::string describe(int digits = 6) const;

    std::vector<double> angles() const;  ///< one entry per Rot block
    std::optional<double> translation_length() const;
    std::optional<double> boost() const;

    /// Same block kinds and counts, parameters within `param_tol`.
    bool matches(const NormalForm& other, double param_tol) const;
};

Matrix rotation(double angle);
Matrix theta_block();
Matrix boost_block(double t);

struct ConjugationResult {
    NormalForm form;
    Matrix form_matrix;
    Matrix conjugator;  ///< Q with Q^{-1} * input * Q = form_matrix
    double residual = 0.0;
    bool proper = true;  ///< false for time-reversing Lorentz input (form_matrix = -form)
    std::vector<std::string> diagnostics;
};

/// Orthogonal part of a normal form (Rot, PosId, NegId blocks) as a symbol.
SphericalSegre orthogonal_symbol(const std::vector<Block>& blocks);

/// Segre symbol read off a normal form of the given space.
SegreSymbol symbol_of(const NormalForm& form, Space space, int n);

/// Continuous data for a representative of a Segre class.
struct RepresentativeParams {
    std::vector<double> angles;  ///< one per rotation cluster in symbol order
    double translation = 1.0;
    double boost = 1.0;
};

/// Spread-out default angles for the given number of rotation clusters.
std::vector<double> default_angles(std::size_t count);

/// The normal form of the class `sym` with the given parameters. For symbols
/// whose orthogonal part has two real blocks the larger one gets +1.
NormalForm representative(const SegreSymbol& sym, const RepresentativeParams& params);
NormalForm representative(const SegreSymbol& sym);

/// Symbolic description of the class, e.g. "R_θ ⊕ εI_2" or "Θ ⊕ -I_1".
std::string symbolic_form(const SegreSymbol& sym);

} // namespace spaceforms
