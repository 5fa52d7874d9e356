#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spaceforms/spaceforms.hpp"

namespace spaceforms::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string space;
    int n = -1;
    std::string input;
    std::string payload;
    bool json = false;
    std::optional<double> tol, rank_tol, angle_tol;
    std::string symbol;
    int degree = -1;
    std::string d;
    std::string out_dir;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Tolerance tolerance(const Options& o) {
    Tolerance t;
    if (o.tol) t.residual_tol = *o.tol;
    if (o.rank_tol) t.rank_tol = *o.rank_tol;
    if (o.angle_tol) t.angle_tol = *o.angle_tol;
    t.validate();
    return t;
}

std::pair<Space, int> space_and_n(const Options& o) {
    if (o.space.empty()) throw InputError("--space is required");
    if (o.n < 0) throw InputError("--n is required");
    const Space s = parse_space(o.space);
    require_supported(s, o.n);
    return {s, o.n};
}

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json read_envelope(const Options& o, std::istream& in) {
    std::string text;
    if (!o.payload.empty()) {
        text = o.payload;
    } else if (o.input.empty() || o.input == "-") {
        text = read_all(in);
    } else {
        std::ifstream f(o.input);
        if (!f) throw InputError("cannot read " + o.input);
        text = read_all(f);
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

struct MatrixRequest {
    Space space;
    int n;
    Matrix matrix;
};

MatrixRequest matrix_request(const Options& o, std::istream& in) {
    const json doc = read_envelope(o, in);
    if (!doc.is_object()) throw InputError("expected a JSON object with space, n and matrix");
    std::string space_text = o.space;
    if (doc.contains("space")) {
        if (!doc["space"].is_string()) throw InputError("\"space\" must be a string");
        const std::string s = doc["space"].get<std::string>();
        if (!space_text.empty() && parse_space(space_text) != parse_space(s)) {
            throw InputError("--space disagrees with the input document");
        }
        space_text = s;
    }
    int n = o.n;
    if (doc.contains("n")) {
        if (!doc["n"].is_number_integer()) throw InputError("\"n\" must be an integer");
        const int dn = doc["n"].get<int>();
        if (n >= 0 && n != dn) throw InputError("--n disagrees with the input document");
        n = dn;
    }
    if (space_text.empty()) throw InputError("space not given");
    if (!doc.contains("matrix") || !doc["matrix"].is_array()) throw InputError("\"matrix\" must be an array of rows");
    const auto& rows = doc["matrix"];
    const auto size = static_cast<Eigen::Index>(rows.size());
    if (n < 0) n = static_cast<int>(size) - 1;
    const Space space = parse_space(space_text);
    require_supported(space, n);
    if (size != n + 1) {
        throw InputError("matrix has " + std::to_string(size) + " rows, expected " + std::to_string(n + 1));
    }
    Matrix m(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != size) {
            throw InputError("row " + std::to_string(i) + " must have " + std::to_string(size) + " entries");
        }
        for (Eigen::Index j = 0; j < size; ++j) {
            const auto& v = row[static_cast<std::size_t>(j)];
            if (!v.is_number()) throw InputError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not a number");
            m(i, j) = v.get<double>();
        }
    }
    return {space, n, m};
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_matrix(std::ostream& out, const Matrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << "  ";
        for (Eigen::Index j = 0; j < m.cols(); ++j) out << std::setw(13) << std::setprecision(6) << m(i, j);
        out << "\n";
    }
}

std::string block_name(BlockKind k) {
    switch (k) {
    case BlockKind::Rot: return "Rot";
    case BlockKind::PosId: return "PosId";
    case BlockKind::NegId: return "NegId";
    case BlockKind::Trans: return "Trans";
    case BlockKind::Theta: return "Theta";
    case BlockKind::Boost: return "Boost";
    }
    return "?";
}

std::string factor_kind(GrKind k) {
    switch (k) {
    case GrKind::Real: return "real";
    case GrKind::Complex: return "complex";
    case GrKind::Affine: return "affine";
    case GrKind::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

int matrix_command(const Options& o, std::istream& in, std::ostream& out, bool full_report) {
    const auto req = matrix_request(o, in);
    const Tolerance tol = tolerance(o);
    const auto res = normal_form(req.matrix, req.space, tol);
    const SegreSymbol sym = symbol_of(res.form, req.space, req.n);
    const auto dims = isotropy_dimension(sym);

    if (o.json) {
        json blocks = json::array();
        for (const auto& b : res.form.blocks) {
            json jb{{"kind", block_name(b.kind)}, {"count", b.count}};
            if (b.kind == BlockKind::Rot || b.kind == BlockKind::Trans || b.kind == BlockKind::Boost) jb["param"] = b.param;
            blocks.push_back(std::move(jb));
        }
        json report{
            {"space", to_string(req.space)},
            {"n", req.n},
            {"type", sym.kind_name()},
            {"segre", render(sym)},
            {"isotropy_dim", dims.isotropy},
            {"orbit_dim", dims.orbit},
            {"normal_form",
             {{"descriptor", res.form.describe(17)}, {"blocks", blocks}, {"matrix", matrix_json(res.form_matrix)}}},
            {"conjugator", matrix_json(res.conjugator)},
            {"residual", res.residual},
            {"parameters",
             {{"angles", res.form.angles()},
              {"translation_length", optional_number(res.form.translation_length())},
              {"boost", optional_number(res.form.boost())}}},
            {"diagnostics", res.diagnostics},
        };
        if (req.space == Space::Hyperbolic) report["proper"] = res.proper;
        out << report.dump(2) << "\n";
    } else {
        out << std::setprecision(6);
        out << "segre        " << render(sym) << "\n";
        out << "type         " << sym.kind_name() << "\n";
        if (req.space == Space::Hyperbolic) out << "proper       " << (res.proper ? "yes" : "no") << "\n";
        if (full_report) {
            out << "isotropy_dim " << dims.isotropy << "\n";
            out << "orbit_dim    " << dims.orbit << "\n";
        }
        out << "normal form  " << res.form.describe() << (res.proper ? "" : " (negated)") << "\n";
        if (!full_report) {
            out << "form matrix\n";
            print_matrix(out, res.form_matrix);
            out << "conjugator\n";
            print_matrix(out, res.conjugator);
        }
        out << "residual     " << res.residual << "\n";
        for (const auto& d : res.diagnostics) out << "warning: " << d << "\n";
    }
    return res.diagnostics.empty() ? kOk : kAmbiguous;
}

int count_command(const Options& o, std::ostream& out) {
    const auto [space, n] = space_and_n(o);
    const auto c = count_classes(space, n);
    if (o.json) {
        json j{{"space", to_string(space)}, {"n", n}, {"total", c.total}};
        if (space != Space::Spherical) {
            j["elliptic"] = c.elliptic;
            j["hyperbolic"] = c.hyperbolic;
        }
        if (space == Space::Hyperbolic) j["parabolic"] = c.parabolic;
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "total      " << c.total << "\n";
    if (space != Space::Spherical) out << "elliptic   " << c.elliptic << "\n";
    if (space == Space::Hyperbolic) out << "parabolic  " << c.parabolic << "\n";
    if (space != Space::Spherical) out << "hyperbolic " << c.hyperbolic << "\n";
    return kOk;
}

int enumerate_command(const Options& o, std::ostream& out) {
    const auto [space, n] = space_and_n(o);
    json arr = json::array();
    for (const auto& s : enumerate_symbols(space, n)) {
        const auto dims = isotropy_dimension(s);
        if (o.json) {
            arr.push_back({{"segre", render(s)},
                           {"type", s.kind_name()},
                           {"normal_form", symbolic_form(s)},
                           {"isotropy_dim", dims.isotropy},
                           {"orbit_dim", dims.orbit}});
        } else {
            out << render(s) << "\t" << symbolic_form(s) << "\t" << dims.isotropy << "\t" << dims.orbit << "\n";
        }
    }
    if (o.json) out << arr.dump(2) << "\n";
    return kOk;
}

json variety_json(const VarietyDescription& v) {
    json comps = json::array();
    for (const auto& c : v.components) {
        json factors = json::array();
        for (const auto& f : c.factors) {
            factors.push_back({{"kind", factor_kind(f.kind)}, {"k", f.sub}, {"m", f.ambient}, {"dim", f.real_dim()}});
        }
        comps.push_back({{"render", c.render()}, {"dim", c.dim()}, {"factors", factors}});
    }
    return {{"k", v.degree}, {"variety", v.render()}, {"components", comps}};
}

int varieties_command(const Options& o, std::ostream& out) {
    const auto [space, n] = space_and_n(o);
    if (o.symbol.empty()) throw InputError("--symbol is required");
    const SegreSymbol s = parse_symbol(o.symbol, space, n);
    std::vector<int> degrees;
    if (o.degree >= 0) {
        degrees.push_back(o.degree);
    } else {
        for (int k = 0; k < std::max(1, n); ++k) degrees.push_back(k);
    }
    json arr = json::array();
    for (int k : degrees) {
        const auto v = invariant_variety(s, k);
        if (o.json) {
            arr.push_back(variety_json(v));
        } else {
            out << "Γ(" << k << ") = " << v.render() << "\n";
        }
    }
    const std::string d = dimension_vector(s).render();
    if (o.json) {
        out << json{{"segre", render(s)}, {"degrees", arr}, {"d", d}}.dump(2) << "\n";
    } else {
        out << "d = " << d << "\n";
    }
    return kOk;
}

int reconstruct_command(const Options& o, std::ostream& out) {
    const auto [space, n] = space_and_n(o);
    if (o.d.empty()) throw InputError("--d is required");
    const SegreSymbol s = reconstruct_symbol(space, n, DimensionVector::parse(o.d));
    if (o.json) {
        out << json{{"segre", render(s)}, {"type", s.kind_name()}}.dump(2) << "\n";
    } else {
        out << render(s) << "\n";
    }
    return kOk;
}

std::string table_name(Space space, int n) {
    const char tag = space == Space::Spherical ? 's' : space == Space::Euclidean ? 'e' : 'h';
    return std::string(1, tag) + std::to_string(n);
}

std::string table_tsv(Space space, int n) {
    std::string text;
    for (const auto& s : enumerate_symbols(space, n)) {
        text += render(s) + "\t" + symbolic_form(s) + "\t" + dimension_vector(s).render() + "\n";
    }
    return text;
}

json table_json(Space space, int n) {
    json rows = json::array();
    for (const auto& s : enumerate_symbols(space, n)) {
        json vars = json::array();
        for (int k = 0; k < std::max(1, n); ++k) vars.push_back(variety_json(invariant_variety(s, k)));
        rows.push_back({{"segre", render(s)},
                        {"normal_form", symbolic_form(s)},
                        {"varieties", vars},
                        {"d", dimension_vector(s).render()}});
    }
    return {{"name", table_name(space, n)}, {"space", to_string(space)}, {"n", n}, {"rows", rows}};
}

int tables_command(const Options& o, std::ostream& out) {
    std::vector<std::pair<Space, int>> which;
    if (!o.space.empty() || o.n >= 0) {
        which.push_back(space_and_n(o));
    } else {
        for (Space s : {Space::Spherical, Space::Euclidean, Space::Hyperbolic}) {
            for (int n = 1; n <= 3; ++n) which.emplace_back(s, n);
        }
    }
    if (!o.out_dir.empty()) {
        std::filesystem::create_directories(o.out_dir);
        for (const auto& [space, n] : which) {
            const auto base = std::filesystem::path(o.out_dir) / table_name(space, n);
            std::ofstream tsv(base.string() + ".tsv");
            tsv << table_tsv(space, n);
            std::ofstream js(base.string() + ".json");
            js << table_json(space, n).dump(2) << "\n";
            if (!tsv || !js) throw std::runtime_error("cannot write " + base.string());
        }
        return kOk;
    }
    if (o.json) {
        json arr = json::array();
        for (const auto& [space, n] : which) arr.push_back(table_json(space, n));
        out << arr.dump(2) << "\n";
        return kOk;
    }
    for (const auto& [space, n] : which) {
        if (which.size() > 1) out << "# " << table_name(space, n) << "\n";
        out << table_tsv(space, n);
    }
    return kOk;
}

int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::NotInGroup: return kNotInGroup;
    case ErrorKind::ConvergenceFailure:
    case ErrorKind::DegenerateSpan:
    case ErrorKind::AmbiguousMatch: return kAmbiguous;
    case ErrorKind::InternalInconsistency: return kFailure;
    default: return kInputError;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classify isometries of spherical, Euclidean and hyperbolic space forms", "spaceforms"};
    app.require_subcommand(1);
    Options o;

    auto add_space = [&](CLI::App* sub) {
        sub->add_option("--space", o.space, "spherical, euclidean or hyperbolic");
        sub->add_option("--n", o.n, "dimension of the space form")->check(CLI::NonNegativeNumber);
        sub->add_flag("--json", o.json, "machine-readable output");
    };
    auto add_matrix = [&](CLI::App* sub) {
        add_space(sub);
        sub->add_option("--input", o.input, "JSON file with {space, n, matrix}; '-' reads stdin");
        sub->add_option("--payload", o.payload, "the JSON document inline");
        sub->add_option("--tol", o.tol, "residual tolerance");
        sub->add_option("--rank-tol", o.rank_tol, "relative singular value cutoff");
        sub->add_option("--angle-tol", o.angle_tol, "rotation angle clustering tolerance");
    };

    auto* classify_cmd = app.add_subcommand("classify", "Segre symbol, type, isotropy and normal form of a matrix");
    add_matrix(classify_cmd);
    auto* nf_cmd = app.add_subcommand("normal-form", "normal form and conjugator of a matrix");
    add_matrix(nf_cmd);
    auto* count_cmd = app.add_subcommand("count", "number of Segre classes");
    add_space(count_cmd);
    auto* enum_cmd = app.add_subcommand("enumerate", "all Segre classes in table order");
    add_space(enum_cmd);
    auto* var_cmd = app.add_subcommand("varieties", "invariant totally geodesic submanifolds of a class");
    add_space(var_cmd);
    var_cmd->add_option("--symbol", o.symbol, "Segre symbol, e.g. \"[e;1;(1 1)]\"");
    var_cmd->add_option("--degree", o.degree, "a single degree k")->check(CLI::NonNegativeNumber);
    auto* rec_cmd = app.add_subcommand("reconstruct", "Segre symbol from leading dimension vectors");
    add_space(rec_cmd);
    rec_cmd->add_option("--d", o.d, "dimension vector, e.g. \"1;0,0\"");
    auto* tab_cmd = app.add_subcommand("tables", "class tables for n = 1, 2, 3");
    add_space(tab_cmd);
    tab_cmd->add_option("--out", o.out_dir, "write <name>.tsv and <name>.json into this directory");

    std::vector<const char*> argv{"spaceforms"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*classify_cmd) return matrix_command(o, in, out, true);
        if (*nf_cmd) return matrix_command(o, in, out, false);
        if (*count_cmd) return count_command(o, out);
        if (*enum_cmd) return enumerate_command(o, out);
        if (*var_cmd) return varieties_command(o, out);
        if (*rec_cmd) return reconstruct_command(o, out);
        if (*tab_cmd) return tables_command(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}

} // namespace spaceforms::cli
