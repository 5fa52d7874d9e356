#include "golden.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <sstream>

namespace spaceforms::golden {

namespace {

std::vector<std::string> split(const std::string& text, const std::string& sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t at = text.find(sep, start);
        out.push_back(text.substr(start, at - start));
        if (at == std::string::npos) break;
        start = at + sep.size();
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(' ');
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(' ') - b + 1);
}

} // namespace

Table load(const std::string& path, Space space, int n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Table t;
    t.space = space;
    t.n = n;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto cols = split(line, "\t");
        if (cols.size() < 4) throw std::runtime_error("short line in " + path + ": " + line);
        Row r;
        r.symbol = cols[0];
        r.descriptor = cols[1];
        for (const auto& v : split(cols[2], " | ")) r.varieties.push_back(trim(v));
        r.d = cols[3];
        if (cols.size() > 4) r.corrected_d = cols[4];
        t.rows.push_back(std::move(r));
    }
    return t;
}

std::vector<Table> load_all(const std::string& dir) {
    std::vector<Table> out;
    for (Space space : {Space::Spherical, Space::Euclidean, Space::Hyperbolic}) {
        const char tag = space == Space::Spherical ? 's' : space == Space::Euclidean ? 'e' : 'h';
        for (int n = 1; n <= 3; ++n) {
            const std::string name = std::string(1, tag) + std::to_string(n);
            out.push_back(load(dir + "/" + name + ".tsv", space, n));
            out.back().name = name;
        }
    }
    return out;
}

std::vector<std::vector<std::string>> canonical_variety(const std::string& text) {
    std::vector<std::vector<std::string>> comps;
    const std::string t = trim(text);
    if (t == "∅") return comps;
    for (std::string part : split(t, " ⊔ ")) {
        part = trim(part);
        if (part.size() >= 2 && part.front() == '{' && part.back() == '}') {
            for (const auto& p : split(part.substr(1, part.size() - 2), " ")) {
                if (p == "*") comps.push_back({"*"});
            }
            continue;
        }
        if (part.size() >= 2 && part.front() == '(' && part.back() == ')' && part.find(" × ") != std::string::npos) {
            part = part.substr(1, part.size() - 2);
        }
        std::vector<std::string> factors;
        for (const auto& f : split(part, " × ")) factors.push_back(trim(f));
        std::sort(factors.begin(), factors.end());
        comps.push_back(std::move(factors));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

namespace {

void check_d(const Table& table, const Row& row, const std::string& got, Outcome& out) {
    const std::string where = table.name + " " + row.symbol;
    if (row.corrected_d) {
        if (got != *row.corrected_d) out.mismatches.push_back(where + ": d " + got + " != " + *row.corrected_d);
        out.errata.push_back(where + ": printed " + row.d + ", computed " + got);
    } else if (got != row.d) {
        out.mismatches.push_back(where + ": d " + got + " != " + row.d);
    }
}

} // namespace

Outcome compare(const Table& table) {
    Outcome out;
    const auto syms = enumerate_symbols(table.space, table.n);
    if (syms.size() != table.rows.size()) {
        out.mismatches.push_back(table.name + ": " + std::to_string(syms.size()) + " classes, table has " +
                                 std::to_string(table.rows.size()));
    }
    for (std::size_t i = 0; i < std::min(syms.size(), table.rows.size()); ++i) {
        const auto& row = table.rows[i];
        const auto& s = syms[i];
        const std::string where = table.name + " row " + std::to_string(i + 1);
        if (render(s) != row.symbol) {
            out.mismatches.push_back(where + ": symbol " + render(s) + " != " + row.symbol);
            continue;
        }
        if (symbolic_form(s) != row.descriptor) {
            out.mismatches.push_back(where + ": normal form " + symbolic_form(s) + " != " + row.descriptor);
        }
        if (static_cast<int>(row.varieties.size()) != table.n) {
            out.mismatches.push_back(where + ": expected " + std::to_string(table.n) + " degrees");
        }
        for (int k = 0; k < std::min<int>(table.n, static_cast<int>(row.varieties.size())); ++k) {
            const auto got = invariant_variety(s, k).render();
            if (canonical_variety(got) != canonical_variety(row.varieties[k])) {
                out.mismatches.push_back(where + " degree " + std::to_string(k) + ": " + got + " != " +
                                         row.varieties[k]);
            }
        }
        check_d(table, row, dimension_vector(s).render(), out);
    }
    return out;
}

Outcome compare_lines(const Table& table, const std::vector<std::string>& lines) {
    Outcome out;
    if (lines.size() != table.rows.size()) {
        out.mismatches.push_back(table.name + ": " + std::to_string(lines.size()) + " lines, table has " +
                                 std::to_string(table.rows.size()));
    }
    for (std::size_t i = 0; i < std::min(lines.size(), table.rows.size()); ++i) {
        const auto cols = split(lines[i], "\t");
        const auto& row = table.rows[i];
        if (cols.size() != 3) {
            out.mismatches.push_back(table.name + ": malformed line " + lines[i]);
            continue;
        }
        if (cols[0] != row.symbol) out.mismatches.push_back(table.name + ": symbol " + cols[0] + " != " + row.symbol);
        if (cols[1] != row.descriptor) {
            out.mismatches.push_back(table.name + " " + row.symbol + ": normal form " + cols[1]);
        }
        check_d(table, row, cols[2], out);
    }
    return out;
}

} // namespace spaceforms::golden
