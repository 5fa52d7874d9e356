#pragma once

// Varieties of invariant totally geodesic submanifolds, described as disjoint
// unions of products of Grassmannians, and their dimension vectors.

#include <string>
#include <string_view>
#include <vector>

#include "spaceforms/segre.hpp"

namespace spaceforms {

enum class GrKind {
    Real,        ///< k-planes in R^m
    Complex,     ///< complex k-planes in C^m
    Affine,      ///< affine k-planes in E^m
    Hyperbolic,  ///< totally geodesic H^k in H^m
};

struct GrassmannianFactor {
    GrKind kind = GrKind::Real;
    int sub = 0;
    int ambient = 0;

    bool nonempty() const { return 0 <= sub && sub <= ambient; }
    int real_dim() const;
    bool is_point() const { return real_dim() == 0; }
    /// "P^2", "Gr_2(R^4)", "E^1", "H^3", ... or "*" for a point.
    std::string render() const;

    friend bool operator==(const GrassmannianFactor&, const GrassmannianFactor&) = default;
};

struct Component {
    std::vector<GrassmannianFactor> factors;

    int dim() const;
    /// Non-point factors joined by " × ", or "*".
    std::string render() const;
};

struct VarietyDescription {
    int degree = 0;
    std::vector<Component> components;

    bool empty() const { return components.empty(); }
    /// Component dimensions in decreasing order.
    std::vector<int> dimensions() const;
    /// e.g. "(P^1 × P^1) ⊔ {* *}", or "∅".
    std::string render() const;
};

/// Per-degree component dimensions, each sorted decreasingly; an empty
/// variety is recorded as {-1}.
struct DimensionVector {
    std::vector<std::vector<int>> degrees;

    /// "[1;(0,0);1]"; a single degree with several entries prints as "[0,0]".
    std::string render() const;
    /// Accepts the rendered form, with or without brackets. Within a degree
    /// the entries may be written "(a,b)" or "a,b".
    static DimensionVector parse(std::string_view text);

    friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
};

/// Invariant k-dimensional linear subspaces of an orthogonal map with symbol `s`.
VarietyDescription linear_invariant_variety(const SphericalSegre& s, int k);

/// Invariant k-dimensional totally geodesic submanifolds (0 <= k <= n).
VarietyDescription invariant_variety(const SegreSymbol& sym, int k);

/// Dimension vector over degrees 0..upto (upto <= n - 1).
DimensionVector dimension_vector(const SegreSymbol& sym, int upto);
DimensionVector dimension_vector(const SegreSymbol& sym);

/// Number of leading degrees minus one that determine the symbol:
/// min(t, n-1) with t = 1, 3, 4 for S^n, E^n, H^n.
int reconstruction_depth(Space space, int n);

/// The unique class of I(space^n) whose dimension vector agrees with `d` on
/// the degrees supplied. Throws NoMatch or AmbiguousMatch.
SegreSymbol reconstruct_symbol(Space space, int n, const DimensionVector& d);

} // namespace spaceforms
