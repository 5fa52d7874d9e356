#pragma once

// Segre symbols: the discrete invariants that label orbit types of isometries
// of S^n, E^n and H^n, with their text grammar, enumeration and class counts.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace spaceforms {

enum class Space { Spherical, Euclidean, Hyperbolic };

std::string_view to_string(Space space) noexcept;
/// Accepts "spherical", "euclidean", "hyperbolic" (also "S", "E", "H").
Space parse_space(std::string_view text);

/// Multiplicities of an orthogonal map: rotation_mults[i] counts the rotation
/// planes sharing one angle, real_mults the dimensions of the +-1 eigenspaces.
/// Both lists are kept sorted in decreasing order.
struct SphericalSegre {
    std::vector<int> rotation_mults;
    std::vector<int> real_mults;

    int dimension() const;
    int rotation_pairs() const;
    bool empty() const { return rotation_mults.empty() && real_mults.empty(); }
    void normalize();

    friend bool operator==(const SphericalSegre&, const SphericalSegre&) = default;
};

enum class EuclideanKind { Elliptic, Hyperbolic };

/// r is the dimension of the fixed space of the linear part; sigma_R describes
/// the rest, which has no eigenvalue 1.
struct EuclideanSegre {
    EuclideanKind kind = EuclideanKind::Elliptic;
    int r = 0;
    SphericalSegre sigma_R;

    friend bool operator==(const EuclideanSegre&, const EuclideanSegre&) = default;
};

enum class HyperbolicKind { Elliptic, Parabolic, Hyperbolic };

/// r is the dimension of the temporal part; sigma_s describes the spatial part.
struct HyperbolicSegre {
    HyperbolicKind kind = HyperbolicKind::Elliptic;
    int r = 1;
    SphericalSegre sigma_s;

    friend bool operator==(const HyperbolicSegre&, const HyperbolicSegre&) = default;
};

struct SegreSymbol {
    int n = 0;
    std::variant<SphericalSegre, EuclideanSegre, HyperbolicSegre> data;

    Space space() const;
    const SphericalSegre& spherical() const { return std::get<SphericalSegre>(data); }
    const EuclideanSegre& euclidean() const { return std::get<EuclideanSegre>(data); }
    const HyperbolicSegre& hyperbolic() const { return std::get<HyperbolicSegre>(data); }

    /// One-letter type: "e", "h", "p" (spherical symbols report "e").
    std::string kind_tag() const;
    /// "elliptic", "parabolic" or "hyperbolic".
    std::string kind_name() const;

    friend bool operator==(const SegreSymbol&, const SegreSymbol&) = default;
};

SegreSymbol make_symbol(int n, SphericalSegre s);
SegreSymbol make_symbol(int n, EuclideanSegre s);
SegreSymbol make_symbol(int n, HyperbolicSegre s);

/// Throws InvariantViolation if the symbol breaks the dimension bookkeeping or
/// a per-kind restriction.
void validate(const SegreSymbol& sym);

std::string render(const SphericalSegre& s);
std::string render(const SegreSymbol& sym);

/// Parses the bracket grammar. Throws SyntaxError (with offset) on malformed
/// text and InvariantViolation if the symbol does not fit (space, n).
SegreSymbol parse_symbol(std::string_view text, Space space, int n);

/// Number of partitions of k.
std::uint64_t partition_count(int k);

/// Partitions of k, each in decreasing order, listed in decreasing
/// lexicographic order.
std::vector<std::vector<int>> partitions(int k);

struct ClassCount {
    std::uint64_t total = 0;
    std::uint64_t elliptic = 0;
    std::uint64_t parabolic = 0;
    std::uint64_t hyperbolic = 0;
};

/// Valid ranges: spherical n >= 0, Euclidean and hyperbolic n >= 1.
void require_supported(Space space, int n);

std::uint64_t spherical_count(int n);           ///< s(n), with s(-1) = 1
std::uint64_t euclidean_elliptic_count(int n);  ///< e^e(n), zero for n < 0
std::uint64_t euclidean_count_split_form(int n);  ///< e(n) as the sum over i = n-1, n
std::uint64_t euclidean_count_two_sums(int n);    ///< e(n) as two explicit sums

ClassCount count_classes(Space space, int n);

/// Every Segre class of I(space^n), ordered by type (e, h, p), then r
/// decreasing, then number of rotation pairs increasing, then rotation
/// multiplicities and real multiplicities in decreasing lexicographic order.
std::vector<SegreSymbol> enumerate_symbols(Space space, int n);

/// Orthogonal symbols of the given linear dimension with at most
/// `max_real_parts` real blocks, in enumeration order.
std::vector<SphericalSegre> enumerate_orthogonal(int dim, int max_real_parts);

} // namespace spaceforms
