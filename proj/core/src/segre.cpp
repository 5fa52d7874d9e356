#include "spaceforms/segre.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <type_traits>

#include "spaceforms/error.hpp"

namespace spaceforms {

std::string_view to_string(Space space) noexcept {
    switch (space) {
    case Space::Spherical: return "spherical";
    case Space::Euclidean: return "euclidean";
    case Space::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

Space parse_space(std::string_view text) {
    std::string t(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "spherical" || t == "s") return Space::Spherical;
    if (t == "euclidean" || t == "e") return Space::Euclidean;
    if (t == "hyperbolic" || t == "h") return Space::Hyperbolic;
    fail(ErrorKind::InvariantViolation, "unknown space '" + std::string(text) + "'");
}

int SphericalSegre::dimension() const {
    return 2 * rotation_pairs() + std::accumulate(real_mults.begin(), real_mults.end(), 0);
}

int SphericalSegre::rotation_pairs() const {
    return std::accumulate(rotation_mults.begin(), rotation_mults.end(), 0);
}

void SphericalSegre::normalize() {
    std::sort(rotation_mults.begin(), rotation_mults.end(), std::greater<>());
    std::sort(real_mults.begin(), real_mults.end(), std::greater<>());
}

Space SegreSymbol::space() const {
    switch (data.index()) {
    case 0: return Space::Spherical;
    case 1: return Space::Euclidean;
    default: return Space::Hyperbolic;
    }
}

std::string SegreSymbol::kind_tag() const {
    if (auto* e = std::get_if<EuclideanSegre>(&data)) {
        return e->kind == EuclideanKind::Elliptic ? "e" : "h";
    }
    if (auto* h = std::get_if<HyperbolicSegre>(&data)) {
        switch (h->kind) {
        case HyperbolicKind::Elliptic: return "e";
        case HyperbolicKind::Parabolic: return "p";
        case HyperbolicKind::Hyperbolic: return "h";
        }
    }
    return "e";
}

std::string SegreSymbol::kind_name() const {
    const std::string tag = kind_tag();
    if (tag == "p") return "parabolic";
    if (tag == "h") return "hyperbolic";
    return "elliptic";
}

SegreSymbol make_symbol(int n, SphericalSegre s) {
    s.normalize();
    return {n, std::move(s)};
}

SegreSymbol make_symbol(int n, EuclideanSegre s) {
    s.sigma_R.normalize();
    return {n, std::move(s)};
}

SegreSymbol make_symbol(int n, HyperbolicSegre s) {
    s.sigma_s.normalize();
    return {n, std::move(s)};
}

namespace {

void check_parts(const SphericalSegre& s, std::size_t max_real) {
    for (int m : s.rotation_mults) {
        if (m <= 0) fail(ErrorKind::InvariantViolation, "rotation multiplicities must be positive");
    }
    for (int m : s.real_mults) {
        if (m <= 0) fail(ErrorKind::InvariantViolation, "real multiplicities must be positive");
    }
    if (!std::is_sorted(s.rotation_mults.begin(), s.rotation_mults.end(), std::greater<>()) ||
        !std::is_sorted(s.real_mults.begin(), s.real_mults.end(), std::greater<>())) {
        fail(ErrorKind::InvariantViolation, "multiplicities must be listed in decreasing order");
    }
    if (s.real_mults.size() > max_real) {
        fail(ErrorKind::InvariantViolation,
             "at most " + std::to_string(max_real) + " real eigenvalue blocks allowed here");
    }
}

} // namespace

void validate(const SegreSymbol& sym) {
    const int n = sym.n;
    std::visit(
        [n](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SphericalSegre>) {
                check_parts(s, 2);
                if (s.dimension() != n + 1) {
                    fail(ErrorKind::InvariantViolation, "spherical symbol must have dimension n+1");
                }
            } else if constexpr (std::is_same_v<T, EuclideanSegre>) {
                check_parts(s.sigma_R, 1);
                if (s.r < 0 || s.r + s.sigma_R.dimension() != n) {
                    fail(ErrorKind::InvariantViolation, "Euclidean symbol must satisfy r + dim sigma = n");
                }
                if (s.kind == EuclideanKind::Hyperbolic && s.r < 1) {
                    fail(ErrorKind::InvariantViolation, "hyperbolic Euclidean symbols need r >= 1");
                }
            } else {
                const std::size_t max_real = s.kind == HyperbolicKind::Hyperbolic ? 2 : 1;
                check_parts(s.sigma_s, max_real);
                if (s.r + s.sigma_s.dimension() != n + 1) {
                    fail(ErrorKind::InvariantViolation, "hyperbolic symbol must satisfy r + dim sigma = n+1");
                }
                if (s.kind == HyperbolicKind::Elliptic && s.r < 1) {
                    fail(ErrorKind::InvariantViolation, "elliptic symbols need r >= 1");
                }
                if (s.kind == HyperbolicKind::Parabolic && s.r < 3) {
                    fail(ErrorKind::InvariantViolation, "parabolic symbols need r >= 3");
                }
                if (s.kind == HyperbolicKind::Hyperbolic && s.r != 2) {
                    fail(ErrorKind::InvariantViolation, "hyperbolic symbols need r = 2");
                }
            }
        },
        sym.data);
}

namespace {

std::string render_items(const SphericalSegre& s) {
    if (s.empty()) return "0";
    std::string out;
    for (int m : s.rotation_mults) {
        if (!out.empty()) out += ',';
        out += '(' + std::to_string(m) + ' ' + std::to_string(m) + ')';
    }
    for (int m : s.real_mults) {
        if (!out.empty()) out += ',';
        out += std::to_string(m);
    }
    return out;
}

} // namespace

std::string render(const SphericalSegre& s) { return '[' + render_items(s) + ']'; }

std::string render(const SegreSymbol& sym) {
    if (auto* s = std::get_if<SphericalSegre>(&sym.data)) return render(*s);
    if (auto* e = std::get_if<EuclideanSegre>(&sym.data)) {
        return '[' + sym.kind_tag() + ';' + std::to_string(e->r) + ';' + render_items(e->sigma_R) + ']';
    }
    const auto& h = sym.hyperbolic();
    return '[' + sym.kind_tag() + ';' + std::to_string(h.r) + ';' + render_items(h.sigma_s) + ']';
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw SyntaxError(pos_, std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    int number() {
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000000) throw SyntaxError(start, "number too large");
            ++pos_;
        }
        if (pos_ == start) throw SyntaxError(pos_, "expected a number");
        return static_cast<int>(value);
    }

    char letter(std::string_view allowed) {
        if (pos_ >= text_.size() || allowed.find(text_[pos_]) == std::string_view::npos) {
            throw SyntaxError(pos_, "expected one of '" + std::string(allowed) + "'");
        }
        return text_[pos_++];
    }

    // item ("," item)*, or the single token "0" for the empty list.
    SphericalSegre items() {
        SphericalSegre s;
        if (peek('0')) {
            ++pos_;
            return s;
        }
        for (;;) {
            if (peek('(')) {
                ++pos_;
                const std::size_t at = pos_;
                int a = number();
                expect(' ');
                int b = number();
                if (a != b) throw SyntaxError(at, "rotation pair must repeat its multiplicity");
                if (a == 0) throw SyntaxError(at, "multiplicity must be positive");
                expect(')');
                s.rotation_mults.push_back(a);
            } else {
                const std::size_t at = pos_;
                int m = number();
                if (m == 0) throw SyntaxError(at, "multiplicity must be positive");
                s.real_mults.push_back(m);
            }
            if (!peek(',')) break;
            ++pos_;
        }
        s.normalize();
        return s;
    }

    void finish() {
        if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected trailing characters");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

SegreSymbol parse_symbol(std::string_view text, Space space, int n) {
    Parser p(text);
    SegreSymbol sym;
    p.expect('[');
    if (space == Space::Spherical) {
        sym = make_symbol(n, p.items());
    } else if (space == Space::Euclidean) {
        EuclideanSegre e;
        e.kind = p.letter("eh") == 'e' ? EuclideanKind::Elliptic : EuclideanKind::Hyperbolic;
        p.expect(';');
        e.r = p.number();
        p.expect(';');
        e.sigma_R = p.items();
        sym = make_symbol(n, std::move(e));
    } else {
        HyperbolicSegre h;
        switch (p.letter("eph")) {
        case 'e': h.kind = HyperbolicKind::Elliptic; break;
        case 'p': h.kind = HyperbolicKind::Parabolic; break;
        default: h.kind = HyperbolicKind::Hyperbolic; break;
        }
        p.expect(';');
        h.r = p.number();
        p.expect(';');
        h.sigma_s = p.items();
        sym = make_symbol(n, std::move(h));
    }
    p.expect(']');
    p.finish();
    validate(sym);
    return sym;
}

std::uint64_t partition_count(int k) {
    if (k < 0) return 0;
    // Euler's pentagonal number recurrence.
    std::vector<std::int64_t> p(static_cast<std::size_t>(k) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= k; ++m) {
        std::int64_t sum = 0;
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            const int g2 = j * (3 * j + 1) / 2;
            if (g1 > m) break;
            const std::int64_t sign = (j % 2 == 1) ? 1 : -1;
            sum += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) sum += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = sum;
    }
    return static_cast<std::uint64_t>(p[static_cast<std::size_t>(k)]);
}

std::vector<std::vector<int>> partitions(int k) {
    std::vector<std::vector<int>> out;
    if (k < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(rest - part, part);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

void require_supported(Space space, int n) {
    const int lowest = space == Space::Spherical ? 0 : 1;
    if (n < lowest) {
        fail(ErrorKind::UnsupportedDimension,
             std::string(to_string(space)) + " dimension must be at least " + std::to_string(lowest));
    }
}

std::uint64_t spherical_count(int n) {
    if (n < -1) return 0;
    const int half = (n + 1) / 2;
    std::uint64_t s = 0;
    for (int j = 0; j <= half; ++j) s += partition_count(j) * static_cast<std::uint64_t>(half - j + 1);
    return s;
}

std::uint64_t euclidean_elliptic_count(int n) {
    if (n < 0) return 0;
    std::uint64_t s = 0;
    for (int j = 0; j <= n / 2; ++j) s += partition_count(j) * static_cast<std::uint64_t>(n - 2 * j + 1);
    return s;
}

std::uint64_t euclidean_count_split_form(int n) {
    std::uint64_t s = 0;
    for (int i = n - 1; i <= n; ++i) s += euclidean_elliptic_count(i);
    return s;
}

std::uint64_t euclidean_count_two_sums(int n) {
    std::uint64_t s = 0;
    for (int j = 0; j <= n / 2; ++j) s += partition_count(j) * static_cast<std::uint64_t>(n - 2 * j + 1);
    if (n >= 1) {
        for (int j = 0; j <= (n - 1) / 2; ++j) s += partition_count(j) * static_cast<std::uint64_t>(n - 2 * j);
    }
    return s;
}

ClassCount count_classes(Space space, int n) {
    require_supported(space, n);
    ClassCount c;
    switch (space) {
    case Space::Spherical:
        c.elliptic = spherical_count(n);
        break;
    case Space::Euclidean:
        c.elliptic = euclidean_elliptic_count(n);
        c.hyperbolic = euclidean_elliptic_count(n - 1);
        break;
    case Space::Hyperbolic:
        c.elliptic = euclidean_elliptic_count(n);
        c.parabolic = euclidean_elliptic_count(n - 2);
        c.hyperbolic = spherical_count(n - 2);
        break;
    }
    c.total = c.elliptic + c.parabolic + c.hyperbolic;
    return c;
}

std::vector<SphericalSegre> enumerate_orthogonal(int dim, int max_real_parts) {
    std::vector<SphericalSegre> out;
    if (dim < 0) return out;
    for (int j = 0; 2 * j <= dim; ++j) {
        const int rest = dim - 2 * j;
        std::vector<std::vector<int>> reals;
        if (rest == 0) {
            reals.push_back({});
        } else {
            reals.push_back({rest});
            if (max_real_parts >= 2) {
                for (int m1 = rest - 1; 2 * m1 >= rest; --m1) reals.push_back({m1, rest - m1});
            }
        }
        for (const auto& rot : partitions(j)) {
            for (const auto& re : reals) out.push_back({rot, re});
        }
    }
    return out;
}

std::vector<SegreSymbol> enumerate_symbols(Space space, int n) {
    require_supported(space, n);
    std::vector<SegreSymbol> out;
    switch (space) {
    case Space::Spherical:
        for (auto& s : enumerate_orthogonal(n + 1, 2)) out.push_back(make_symbol(n, std::move(s)));
        break;
    case Space::Euclidean:
        for (EuclideanKind kind : {EuclideanKind::Elliptic, EuclideanKind::Hyperbolic}) {
            const int low = kind == EuclideanKind::Hyperbolic ? 1 : 0;
            for (int r = n; r >= low; --r) {
                for (auto& s : enumerate_orthogonal(n - r, 1)) {
                    out.push_back(make_symbol(n, EuclideanSegre{kind, r, std::move(s)}));
                }
            }
        }
        break;
    case Space::Hyperbolic:
        for (int r = n + 1; r >= 1; --r) {
            for (auto& s : enumerate_orthogonal(n + 1 - r, 1)) {
                out.push_back(make_symbol(n, HyperbolicSegre{HyperbolicKind::Elliptic, r, std::move(s)}));
            }
        }
        for (auto& s : enumerate_orthogonal(n - 1, 2)) {
            out.push_back(make_symbol(n, HyperbolicSegre{HyperbolicKind::Hyperbolic, 2, std::move(s)}));
        }
        for (int r = n + 1; r >= 3; --r) {
            for (auto& s : enumerate_orthogonal(n + 1 - r, 1)) {
                out.push_back(make_symbol(n, HyperbolicSegre{HyperbolicKind::Parabolic, r, std::move(s)}));
            }
        }
        break;
    }
    return out;
}

} // namespace spaceforms
