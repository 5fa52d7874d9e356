#include "spaceforms/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "spaceforms/error.hpp"

namespace spaceforms {

int Block::size() const {
    switch (kind) {
    case BlockKind::Rot: return 2 * count;
    case BlockKind::PosId:
    case BlockKind::NegId: return count;
    case BlockKind::Trans:
    case BlockKind::Boost: return 2;
    case BlockKind::Theta: return 3;
    }
    return 0;
}

Matrix rotation(double angle) {
    Matrix r(2, 2);
    r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    return r;
}

Matrix theta_block() {
    Matrix t(3, 3);
    t << 1.5, 1.0, -0.5, 1.0, 1.0, -1.0, 0.5, 1.0, 0.5;
    return t;
}

Matrix boost_block(double t) {
    Matrix b(2, 2);
    b << std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t);
    return b;
}

Matrix Block::matrix() const {
    const int s = size();
    Matrix m = Matrix::Zero(s, s);
    switch (kind) {
    case BlockKind::Rot:
        for (int i = 0; i < count; ++i) m.block(2 * i, 2 * i, 2, 2) = rotation(param);
        break;
    case BlockKind::PosId: m.setIdentity(); break;
    case BlockKind::NegId: m = -Matrix::Identity(s, s); break;
    case BlockKind::Trans: m << 1.0, param, 0.0, 1.0; break;
    case BlockKind::Theta: m = theta_block(); break;
    case BlockKind::Boost: m = boost_block(param); break;
    }
    return m;
}

int NormalForm::size() const {
    int s = 0;
    for (const auto& b : blocks) s += b.size();
    return s;
}

Matrix NormalForm::matrix() const {
    const int s = size();
    Matrix m = Matrix::Zero(s, s);
    int at = 0;
    for (const auto& b : blocks) {
        m.block(at, at, b.size(), b.size()) = b.matrix();
        at += b.size();
    }
    return m;
}

std::string NormalForm::describe(int digits) const {
    std::ostringstream out;
    out.precision(digits);
    out << std::fixed;
    bool first = true;
    for (const auto& b : blocks) {
        if (!first) out << " + ";
        first = false;
        switch (b.kind) {
        case BlockKind::Rot:
            out << "Rot(" << b.param << ")";
            if (b.count > 1) out << "x" << b.count;
            break;
        case BlockKind::PosId: out << "PosId(" << b.count << ")"; break;
        case BlockKind::NegId: out << "NegId(" << b.count << ")"; break;
        case BlockKind::Trans: out << "Trans(" << b.param << ")"; break;
        case BlockKind::Theta: out << "Theta"; break;
        case BlockKind::Boost: out << "Boost(" << b.param << ")"; break;
        }
    }
    return out.str();
}

std::vector<double> NormalForm::angles() const {
    std::vector<double> out;
    for (const auto& b : blocks) {
        if (b.kind == BlockKind::Rot) out.push_back(b.param);
    }
    return out;
}

std::optional<double> NormalForm::translation_length() const {
    for (const auto& b : blocks) {
        if (b.kind == BlockKind::Trans) return b.param;
    }
    return std::nullopt;
}

std::optional<double> NormalForm::boost() const {
    for (const auto& b : blocks) {
        if (b.kind == BlockKind::Boost) return b.param;
    }
    return std::nullopt;
}

bool NormalForm::matches(const NormalForm& other, double param_tol) const {
    if (blocks.size() != other.blocks.size()) return false;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& a = blocks[i];
        const auto& b = other.blocks[i];
        if (a.kind != b.kind || a.count != b.count) return false;
        if (std::abs(a.param - b.param) > param_tol) return false;
    }
    return true;
}

SphericalSegre orthogonal_symbol(const std::vector<Block>& blocks) {
    SphericalSegre s;
    for (const auto& b : blocks) {
        if (b.count == 0) continue;
        switch (b.kind) {
        case BlockKind::Rot: s.rotation_mults.push_back(b.count); break;
        case BlockKind::PosId:
        case BlockKind::NegId: s.real_mults.push_back(b.count); break;
        default: break;
        }
    }
    s.normalize();
    return s;
}

namespace {

int count_of(const std::vector<Block>& blocks, BlockKind kind) {
    int c = 0;
    for (const auto& b : blocks) {
        if (b.kind == kind) c += b.size();
    }
    return c;
}

bool has(const std::vector<Block>& blocks, BlockKind kind) {
    return std::any_of(blocks.begin(), blocks.end(), [kind](const Block& b) { return b.kind == kind; });
}

std::vector<Block> without(const std::vector<Block>& blocks, BlockKind kind) {
    std::vector<Block> out;
    for (const auto& b : blocks) {
        if (b.kind != kind) out.push_back(b);
    }
    return out;
}

} // namespace

SegreSymbol symbol_of(const NormalForm& form, Space space, int n) {
    const auto& bl = form.blocks;
    SegreSymbol sym;
    switch (space) {
    case Space::Spherical:
        sym = make_symbol(n, orthogonal_symbol(bl));
        break;
    case Space::Euclidean: {
        EuclideanSegre e;
        const int ones = count_of(bl, BlockKind::PosId);
        if (has(bl, BlockKind::Trans)) {
            e.kind = EuclideanKind::Hyperbolic;
            e.r = ones + 1;
        } else {
            e.kind = EuclideanKind::Elliptic;
            e.r = ones - 1;
        }
        e.sigma_R = orthogonal_symbol(without(bl, BlockKind::PosId));
        sym = make_symbol(n, std::move(e));
        break;
    }
    case Space::Hyperbolic: {
        HyperbolicSegre h;
        if (has(bl, BlockKind::Boost)) {
            h.kind = HyperbolicKind::Hyperbolic;
            h.r = 2;
            h.sigma_s = orthogonal_symbol(bl);
        } else if (has(bl, BlockKind::Theta)) {
            h.kind = HyperbolicKind::Parabolic;
            h.r = 3 + count_of(bl, BlockKind::PosId);
            h.sigma_s = orthogonal_symbol(without(bl, BlockKind::PosId));
        } else {
            h.kind = HyperbolicKind::Elliptic;
            h.r = count_of(bl, BlockKind::PosId);
            h.sigma_s = orthogonal_symbol(without(bl, BlockKind::PosId));
        }
        sym = make_symbol(n, std::move(h));
        break;
    }
    }
    validate(sym);
    return sym;
}

std::vector<double> default_angles(std::size_t count) {
    std::vector<double> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(std::numbers::pi * static_cast<double>(count - i) / static_cast<double>(count + 1));
    }
    return out;
}

namespace {

void push(std::vector<Block>& out, BlockKind kind, int count, double param = 0.0) {
    if (count > 0) out.push_back({kind, count, param});
}

// Rotation blocks for the orthogonal part, in canonical order.
std::vector<Block> rotation_blocks(const SphericalSegre& s, const std::vector<double>& angles) {
    if (angles.size() != s.rotation_mults.size()) {
        fail(ErrorKind::InvariantViolation, "need one angle per rotation cluster");
    }
    std::vector<Block> out;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (!(angles[i] > 0.0 && angles[i] < std::numbers::pi)) {
            fail(ErrorKind::InvariantViolation, "rotation angles must lie in (0, pi)");
        }
        out.push_back({BlockKind::Rot, s.rotation_mults[i], angles[i]});
    }
    std::stable_sort(out.begin(), out.end(), [](const Block& a, const Block& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.param > b.param;
    });
    return out;
}

const SphericalSegre& orthogonal_part(const SegreSymbol& sym) {
    if (auto* s = std::get_if<SphericalSegre>(&sym.data)) return *s;
    if (auto* e = std::get_if<EuclideanSegre>(&sym.data)) return e->sigma_R;
    return sym.hyperbolic().sigma_s;
}

int real_part(const SphericalSegre& s, std::size_t i) {
    return i < s.real_mults.size() ? s.real_mults[i] : 0;
}

} // namespace

NormalForm representative(const SegreSymbol& sym, const RepresentativeParams& params) {
    validate(sym);
    const SphericalSegre& orth = orthogonal_part(sym);
    NormalForm nf;
    auto& bl = nf.blocks;
    switch (sym.space()) {
    case Space::Spherical:
        bl = rotation_blocks(orth, params.angles);
        push(bl, BlockKind::PosId, real_part(orth, 0));
        push(bl, BlockKind::NegId, real_part(orth, 1));
        break;
    case Space::Euclidean: {
        const auto& e = sym.euclidean();
        bl = rotation_blocks(orth, params.angles);
        push(bl, BlockKind::NegId, real_part(orth, 0));
        if (e.kind == EuclideanKind::Elliptic) {
            push(bl, BlockKind::PosId, e.r + 1);
        } else {
            if (!(params.translation > 0.0)) fail(ErrorKind::InvariantViolation, "translation length must be positive");
            push(bl, BlockKind::PosId, e.r - 1);
            bl.push_back({BlockKind::Trans, 1, params.translation});
        }
        break;
    }
    case Space::Hyperbolic: {
        const auto& h = sym.hyperbolic();
        switch (h.kind) {
        case HyperbolicKind::Elliptic: push(bl, BlockKind::PosId, h.r); break;
        case HyperbolicKind::Parabolic:
            bl.push_back({BlockKind::Theta, 1, 0.0});
            push(bl, BlockKind::PosId, h.r - 3);
            break;
        case HyperbolicKind::Hyperbolic:
            if (!(params.boost > 0.0)) fail(ErrorKind::InvariantViolation, "boost parameter must be positive");
            bl.push_back({BlockKind::Boost, 1, params.boost});
            break;
        }
        auto rot = rotation_blocks(orth, params.angles);
        bl.insert(bl.end(), rot.begin(), rot.end());
        if (h.kind == HyperbolicKind::Hyperbolic) {
            push(bl, BlockKind::PosId, real_part(orth, 0));
            push(bl, BlockKind::NegId, real_part(orth, 1));
        } else {
            push(bl, BlockKind::NegId, real_part(orth, 0));
        }
        break;
    }
    }
    return nf;
}

NormalForm representative(const SegreSymbol& sym) {
    RepresentativeParams p;
    p.angles = default_angles(orthogonal_part(sym).rotation_mults.size());
    return representative(sym, p);
}

namespace {

std::string rotations_text(const SphericalSegre& s) {
    std::vector<std::string> parts;
    const bool single = s.rotation_mults.size() == 1;
    for (std::size_t i = 0; i < s.rotation_mults.size(); ++i) {
        const std::string r = single ? "R_θ" : "R_θ" + std::to_string(i + 1);
        for (int c = 0; c < s.rotation_mults[i]; ++c) parts.push_back(r);
    }
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : " ⊕ ") + p;
    return out;
}

void append(std::string& out, const std::string& part) {
    if (part.empty()) return;
    if (!out.empty()) out += " ⊕ ";
    out += part;
}

std::string id(const std::string& prefix, int m) {
    return m > 0 ? prefix + "I_" + std::to_string(m) : std::string();
}

} // namespace

std::string symbolic_form(const SegreSymbol& sym) {
    const SphericalSegre& orth = orthogonal_part(sym);
    std::string out;
    switch (sym.space()) {
    case Space::Spherical:
        append(out, rotations_text(orth));
        append(out, id("ε", real_part(orth, 0)));
        append(out, id("-ε", real_part(orth, 1)));
        break;
    case Space::Euclidean: {
        const auto& e = sym.euclidean();
        append(out, rotations_text(orth));
        append(out, id("-", real_part(orth, 0)));
        if (e.kind == EuclideanKind::Elliptic) {
            append(out, id("", e.r + 1));
        } else {
            append(out, id("", e.r - 1));
            append(out, "T_a");
        }
        break;
    }
    case Space::Hyperbolic: {
        const auto& h = sym.hyperbolic();
        switch (h.kind) {
        case HyperbolicKind::Elliptic: append(out, id("", h.r)); break;
        case HyperbolicKind::Parabolic:
            append(out, "Θ");
            append(out, id("", h.r - 3));
            break;
        case HyperbolicKind::Hyperbolic: append(out, "Ω_t"); break;
        }
        append(out, rotations_text(orth));
        if (h.kind == HyperbolicKind::Hyperbolic) {
            append(out, id("ε", real_part(orth, 0)));
            append(out, id("-ε", real_part(orth, 1)));
        } else {
            append(out, id("-", real_part(orth, 0)));
        }
        break;
    }
    }
    return out;
}

} // namespace spaceforms
