#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "spaceforms/spaceforms.hpp"

using namespace spaceforms;

namespace {

// Brute-force partition count by recursion over the largest part.
std::uint64_t partitions_bounded(int k, int largest) {
    if (k == 0) return 1;
    std::uint64_t total = 0;
    for (int p = std::min(k, largest); p >= 1; --p) total += partitions_bounded(k - p, p);
    return total;
}

std::vector<std::string> rendered(Space space, int n) {
    std::vector<std::string> out;
    for (const auto& s : enumerate_symbols(space, n)) out.push_back(render(s));
    return out;
}

} // namespace

TEST(Partitions, CountMatchesBruteForce) {
    for (int k = 0; k <= 25; ++k) EXPECT_EQ(partition_count(k), partitions_bounded(k, k)) << k;
}

TEST(Partitions, ListedInDecreasingLexOrder) {
    const auto p4 = partitions(4);
    const std::vector<std::vector<int>> want{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    EXPECT_EQ(p4, want);
    for (int k = 0; k <= 10; ++k) EXPECT_EQ(partitions(k).size(), partition_count(k));
}

TEST(Counts, SphericalSmallValues) {
    EXPECT_EQ(spherical_count(-1), 1u);
    EXPECT_EQ(count_classes(Space::Spherical, 1).total, 3u);
    EXPECT_EQ(count_classes(Space::Spherical, 2).total, 3u);
    EXPECT_EQ(count_classes(Space::Spherical, 3).total, 7u);
}

TEST(Counts, EuclideanSmallValues) {
    const std::vector<std::uint64_t> want{3, 6, 10, 16};
    for (int n = 1; n <= 4; ++n) {
        const auto c = count_classes(Space::Euclidean, n);
        EXPECT_EQ(c.total, want[n - 1]) << n;
        EXPECT_EQ(c.total, c.elliptic + c.hyperbolic);
        EXPECT_EQ(c.hyperbolic, euclidean_elliptic_count(n - 1));
        EXPECT_EQ(c.parabolic, 0u);
    }
}

TEST(Counts, HyperbolicSmallValues) {
    const std::vector<std::uint64_t> want{3, 6, 11};
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(count_classes(Space::Hyperbolic, n).total, want[n - 1]) << n;
    const auto h3 = count_classes(Space::Hyperbolic, 3);
    EXPECT_EQ(h3.elliptic, 6u);
    EXPECT_EQ(h3.parabolic, 2u);
    EXPECT_EQ(h3.hyperbolic, 3u);
}

TEST(Counts, EuclideanFormsAgree) {
    for (int n = 1; n <= 30; ++n) EXPECT_EQ(euclidean_count_split_form(n), euclidean_count_two_sums(n)) << n;
}

TEST(Counts, FormulaMatchesEnumeration) {
    for (Space space : {Space::Spherical, Space::Euclidean, Space::Hyperbolic}) {
        for (int n = space == Space::Spherical ? 0 : 1; n <= 10; ++n) {
            const auto syms = enumerate_symbols(space, n);
            const auto c = count_classes(space, n);
            EXPECT_EQ(syms.size(), c.total) << to_string(space) << n;
            std::uint64_t e = 0, p = 0, h = 0;
            for (const auto& s : syms) {
                const auto tag = s.kind_tag();
                (tag == "e" ? e : tag == "p" ? p : h) += 1;
            }
            EXPECT_EQ(e, c.elliptic);
            EXPECT_EQ(p, c.parabolic);
            EXPECT_EQ(h, c.hyperbolic);
        }
    }
}

TEST(Counts, EnumerationMatchesIndependentListing) {
    // Orthogonal classes of R^m: choose a partition for each rotation angle
    // cluster count and up to two real eigenspaces, counted directly.
    std::function<std::uint64_t(int)> orthogonal = [](int m) {
        std::uint64_t total = 0;
        for (int pairs = 0; 2 * pairs <= m; ++pairs) {
            const int rest = m - 2 * pairs;
            total += partitions_bounded(pairs, pairs) * static_cast<std::uint64_t>(rest / 2 + 1);
        }
        return total;
    };
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(spherical_count(n), orthogonal(n + 1));
}

TEST(Enumerate, SphericalThreeFollowsTableOrder) {
    const std::vector<std::string> want{"[4]", "[3,1]", "[2,2]", "[(1 1),2]", "[(1 1),1,1]", "[(2 2)]", "[(1 1),(1 1)]"};
    EXPECT_EQ(rendered(Space::Spherical, 3), want);
}

TEST(Enumerate, EuclideanTwoFollowsTableOrder) {
    const std::vector<std::string> want{"[e;2;0]", "[e;1;1]", "[e;0;2]", "[e;0;(1 1)]", "[h;2;0]", "[h;1;1]"};
    EXPECT_EQ(rendered(Space::Euclidean, 2), want);
}

TEST(Enumerate, HyperbolicThreeFollowsTableOrder) {
    const std::vector<std::string> want{"[e;4;0]",      "[e;3;1]",      "[e;2;2]",      "[e;2;(1 1)]",
                                        "[e;1;3]",      "[e;1;(1 1),1]", "[h;2;2]",      "[h;2;1,1]",
                                        "[h;2;(1 1)]", "[p;4;0]",      "[p;3;1]"};
    EXPECT_EQ(rendered(Space::Hyperbolic, 3), want);
}

TEST(Enumerate, SymbolsAreDistinctAndValid) {
    for (Space space : {Space::Spherical, Space::Euclidean, Space::Hyperbolic}) {
        for (int n = 1; n <= 8; ++n) {
            std::set<std::string> seen;
            for (const auto& s : enumerate_symbols(space, n)) {
                EXPECT_NO_THROW(validate(s));
                EXPECT_TRUE(seen.insert(render(s)).second) << render(s);
            }
        }
    }
}

TEST(Render, Examples) {
    EXPECT_EQ(render(make_symbol(3, EuclideanSegre{EuclideanKind::Elliptic, 3, {}})), "[e;3;0]");
    EXPECT_EQ(render(make_symbol(3, SphericalSegre{{1}, {2}})), "[(1 1),2]");
    EXPECT_EQ(render(make_symbol(4, SphericalSegre{{2}, {1}})), "[(2 2),1]");
    EXPECT_EQ(render(make_symbol(3, HyperbolicSegre{HyperbolicKind::Hyperbolic, 2, {{}, {1, 1}}})), "[h;2;1,1]");
}

TEST(Parse, RoundTripsEveryEnumeratedSymbol) {
    for (Space space : {Space::Spherical, Space::Euclidean, Space::Hyperbolic}) {
        for (int n = 1; n <= 7; ++n) {
            for (const auto& s : enumerate_symbols(space, n)) {
                EXPECT_EQ(parse_symbol(render(s), space, n), s) << render(s);
            }
        }
    }
}

TEST(Parse, NormalizesOrder) {
    const auto s = parse_symbol("[1,2]", Space::Spherical, 2);
    EXPECT_EQ(render(s), "[2,1]");
}

TEST(Parse, ReportsSyntaxPositions) {
    try {
        parse_symbol("[e;2;x]", Space::Euclidean, 2);
        FAIL() << "expected SyntaxError";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
        EXPECT_NE(std::string(e.what()).find("position 5"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_symbol("[(1 2)]", Space::Spherical, 3), Error);
    EXPECT_THROW(parse_symbol("[3,1", Space::Spherical, 3), Error);
}

TEST(Parse, RejectsSymbolsThatDoNotFit) {
    auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InternalInconsistency;
    };
    EXPECT_EQ(kind_of([] { parse_symbol("[3]", Space::Spherical, 3); }), ErrorKind::InvariantViolation);
    EXPECT_EQ(kind_of([] { parse_symbol("[p;2;0]", Space::Hyperbolic, 1); }), ErrorKind::InvariantViolation);
    EXPECT_EQ(kind_of([] { parse_symbol("[h;0;2]", Space::Euclidean, 2); }), ErrorKind::InvariantViolation);
    EXPECT_EQ(kind_of([] { parse_symbol("[p;3;0]", Space::Euclidean, 2); }), ErrorKind::SyntaxError);
}

TEST(Space, ParseAndRange) {
    EXPECT_EQ(parse_space("Hyperbolic"), Space::Hyperbolic);
    EXPECT_EQ(parse_space("e"), Space::Euclidean);
    EXPECT_THROW(parse_space("elliptic"), Error);
    EXPECT_THROW(count_classes(Space::Euclidean, 0), Error);
    EXPECT_NO_THROW(count_classes(Space::Spherical, 0));
}
