#include "spaceforms/varieties.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "spaceforms/error.hpp"

namespace spaceforms {

int GrassmannianFactor::real_dim() const {
    switch (kind) {
    case GrKind::Real: return sub * (ambient - sub);
    case GrKind::Complex: return 2 * sub * (ambient - sub);
    case GrKind::Affine:
    case GrKind::Hyperbolic: return (sub + 1) * (ambient - sub);
    }
    return 0;
}

std::string GrassmannianFactor::render() const {
    if (is_point()) return "*";
    const std::string m = std::to_string(ambient);
    const std::string k = std::to_string(sub);
    switch (kind) {
    case GrKind::Real:
        if (sub == 1 || sub == ambient - 1) return "P^" + std::to_string(ambient - 1);
        return "Gr_" + k + "(R^" + m + ")";
    case GrKind::Complex: return "Gr_" + k + "(C^" + m + ")";
    case GrKind::Affine: return sub == 0 ? "E^" + m : "Gr_" + k + "(E^" + m + ")";
    case GrKind::Hyperbolic: return sub == 0 ? "H^" + m : "Gr_" + k + "(H^" + m + ")";
    }
    return "?";
}

int Component::dim() const {
    int d = 0;
    for (const auto& f : factors) d += f.real_dim();
    return d;
}

std::string Component::render() const {
    std::string out;
    for (const auto& f : factors) {
        if (f.is_point()) continue;
        if (!out.empty()) out += " × ";
        out += f.render();
    }
    return out.empty() ? "*" : out;
}

std::vector<int> VarietyDescription::dimensions() const {
    std::vector<int> d;
    for (const auto& c : components) d.push_back(c.dim());
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

std::string VarietyDescription::render() const {
    if (components.empty()) return "∅";
    std::vector<std::pair<int, std::string>> parts;
    int points = 0;
    for (const auto& c : components) {
        if (c.dim() == 0) {
            ++points;
        } else {
            parts.emplace_back(c.dim(), c.render());
        }
    }
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    const bool several = parts.size() + (points > 0 ? 1 : 0) > 1;
    std::string out;
    for (const auto& [dim, text] : parts) {
        if (!out.empty()) out += " ⊔ ";
        const bool product = text.find("×") != std::string::npos;
        out += several && product ? "(" + text + ")" : text;
    }
    if (points > 0) {
        if (!out.empty()) out += " ⊔ ";
        out += "{*";
        for (int i = 1; i < points; ++i) out += " *";
        out += "}";
    }
    return out;
}

std::string DimensionVector::render() const {
    auto entry = [](const std::vector<int>& d, bool wrap) {
        std::string s;
        for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
        return wrap && d.size() > 1 ? "(" + s + ")" : s;
    };
    std::string out = "[";
    const bool wrap = degrees.size() > 1;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i) out += ';';
        out += entry(degrees[i], wrap);
    }
    return out + "]";
}

DimensionVector DimensionVector::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    std::size_t offset = 0;
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw SyntaxError(s.size(), "expected ']'");
        s = s.substr(1, s.size() - 2);
        offset = 1;
    }
    DimensionVector d;
    std::size_t pos = 0;
    auto number = [&]() {
        const std::size_t start = pos;
        bool neg = false;
        if (pos < s.size() && s[pos] == '-') {
            neg = true;
            ++pos;
        }
        int v = 0;
        const std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 100000) throw SyntaxError(start + offset, "number too large");
            ++pos;
        }
        if (pos == digits) throw SyntaxError(pos + offset, "expected a number");
        if (neg && v != 1) throw SyntaxError(start + offset, "only -1 may be negative");
        return neg ? -v : v;
    };
    if (s.empty()) throw SyntaxError(offset, "empty dimension vector");
    for (;;) {
        std::vector<int> degree;
        const bool paren = pos < s.size() && s[pos] == '(';
        if (paren) ++pos;
        for (;;) {
            degree.push_back(number());
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        if (paren) {
            if (pos >= s.size() || s[pos] != ')') throw SyntaxError(pos + offset, "expected ')'");
            ++pos;
        }
        if (std::count(degree.begin(), degree.end(), -1) > 0 && degree.size() > 1) {
            throw SyntaxError(pos + offset, "-1 marks an empty variety and stands alone");
        }
        std::sort(degree.begin(), degree.end(), std::greater<>());
        d.degrees.push_back(std::move(degree));
        if (pos == s.size()) break;
        if (s[pos] != ';') throw SyntaxError(pos + offset, "expected ';'");
        ++pos;
    }
    return d;
}

namespace {

using Factors = std::vector<GrassmannianFactor>;

// Each component of `left` times the factor f (nothing if f is empty).
std::vector<Component> product(const std::vector<Component>& left, const GrassmannianFactor& f) {
    std::vector<Component> out;
    if (!f.nonempty()) return out;
    for (const auto& c : left) {
        Component next = c;
        next.factors.push_back(f);
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<Component> prefix(const GrassmannianFactor& f, const std::vector<Component>& right) {
    std::vector<Component> out;
    if (!f.nonempty()) return out;
    for (const auto& c : right) {
        Component next;
        next.factors.push_back(f);
        next.factors.insert(next.factors.end(), c.factors.begin(), c.factors.end());
        out.push_back(std::move(next));
    }
    return out;
}

void require_degree(int k, int top) {
    if (k < 0 || k > top) {
        fail(ErrorKind::RangeError,
             "degree " + std::to_string(k) + " outside 0.." + std::to_string(top));
    }
}

} // namespace

VarietyDescription linear_invariant_variety(const SphericalSegre& s, int k) {
    require_degree(k, s.dimension());
    VarietyDescription out;
    out.degree = k;
    // Factor slots: complex planes from each rotation cluster, then real
    // subspaces of each +-1 eigenspace.
    Factors slots;
    for (int n : s.rotation_mults) slots.push_back({GrKind::Complex, 0, n});
    for (int m : s.real_mults) slots.push_back({GrKind::Real, 0, m});

    Factors cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
        if (i == slots.size()) {
            if (rest == 0) out.components.push_back({cur});
            return;
        }
        const int weight = slots[i].kind == GrKind::Complex ? 2 : 1;
        for (int take = std::min(slots[i].ambient, rest / weight); take >= 0; --take) {
            cur.push_back({slots[i].kind, take, slots[i].ambient});
            rec(i + 1, rest - weight * take);
            cur.pop_back();
        }
    };
    rec(0, k);
    return out;
}

VarietyDescription invariant_variety(const SegreSymbol& sym, int k) {
    validate(sym);
    require_degree(k, sym.n);
    VarietyDescription out;
    out.degree = k;
    auto& comps = out.components;

    if (auto* s = std::get_if<SphericalSegre>(&sym.data)) {
        comps = linear_invariant_variety(*s, k + 1).components;
    } else if (auto* e = std::get_if<EuclideanSegre>(&sym.data)) {
        const int top = e->sigma_R.dimension();
        for (int k1 = std::min(k, top); k1 >= 0; --k1) {
            const int k2 = k - k1;
            const auto lin = linear_invariant_variety(e->sigma_R, k1).components;
            GrassmannianFactor aff = e->kind == EuclideanKind::Elliptic
                                         ? GrassmannianFactor{GrKind::Affine, k2, e->r}
                                         : GrassmannianFactor{GrKind::Affine, k2 - 1, e->r - 1};
            auto part = product(lin, aff);
            comps.insert(comps.end(), part.begin(), part.end());
        }
    } else {
        const auto& h = sym.hyperbolic();
        const int top = h.sigma_s.dimension();
        switch (h.kind) {
        case HyperbolicKind::Elliptic:
            for (int k2 = std::min(k, top); k2 >= 0; --k2) {
                const GrassmannianFactor hyp{GrKind::Hyperbolic, k - k2, h.r - 1};
                auto part = prefix(hyp, linear_invariant_variety(h.sigma_s, k2).components);
                comps.insert(comps.end(), part.begin(), part.end());
            }
            break;
        case HyperbolicKind::Parabolic:
            for (int k2 = std::min(k - 2, top); k2 >= 0; --k2) {
                const GrassmannianFactor aff{GrKind::Affine, k - 2 - k2, h.r - 3};
                auto part = prefix(aff, linear_invariant_variety(h.sigma_s, k2).components);
                comps.insert(comps.end(), part.begin(), part.end());
            }
            break;
        case HyperbolicKind::Hyperbolic:
            if (k >= 1) comps = linear_invariant_variety(h.sigma_s, k - 1).components;
            break;
        }
    }
    for (const auto& c : comps) {
        for (const auto& f : c.factors) {
            if (!f.nonempty()) fail(ErrorKind::InternalInconsistency, "empty factor in a component");
        }
    }
    return out;
}

DimensionVector dimension_vector(const SegreSymbol& sym, int upto) {
    if (upto > sym.n - 1 && !(sym.n == 0 && upto == 0)) {
        fail(ErrorKind::RangeError, "dimension vectors stop at degree n-1");
    }
    DimensionVector d;
    for (int k = 0; k <= upto; ++k) {
        auto dims = invariant_variety(sym, k).dimensions();
        if (dims.empty()) dims.push_back(-1);
        d.degrees.push_back(std::move(dims));
    }
    return d;
}

DimensionVector dimension_vector(const SegreSymbol& sym) {
    return dimension_vector(sym, std::max(0, sym.n - 1));
}

int reconstruction_depth(Space space, int n) {
    require_supported(space, n);
    const int t = space == Space::Spherical ? 1 : space == Space::Euclidean ? 3 : 4;
    return std::max(0, std::min(t, n - 1));
}

SegreSymbol reconstruct_symbol(Space space, int n, const DimensionVector& d) {
    require_supported(space, n);
    if (d.degrees.empty()) fail(ErrorKind::RangeError, "no degrees supplied");
    const int upto = static_cast<int>(d.degrees.size()) - 1;
    if (upto > std::max(0, n - 1)) fail(ErrorKind::RangeError, "dimension vector has too many degrees");
    DimensionVector want = d;
    for (auto& deg : want.degrees) std::sort(deg.begin(), deg.end(), std::greater<>());

    std::vector<SegreSymbol> hits;
    for (const auto& sym : enumerate_symbols(space, n)) {
        if (dimension_vector(sym, upto) == want) hits.push_back(sym);
    }
    if (hits.empty()) fail(ErrorKind::NoMatch, "no Segre class has dimension vector " + want.render());
    if (hits.size() > 1) {
        std::string names;
        for (const auto& h : hits) names += (names.empty() ? "" : ", ") + render(h);
        fail(ErrorKind::AmbiguousMatch, "dimension vector " + want.render() + " matches " + names);
    }
    return hits.front();
}

} // namespace spaceforms
