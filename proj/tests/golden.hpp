#pragma once

// Transcribed reference tables for S^n, E^n and H^n, n = 1, 2, 3, and their
// comparison against computed values.

#include <optional>
#include <string>
#include <vector>

#include "spaceforms/spaceforms.hpp"

namespace spaceforms::golden {

struct Row {
    std::string symbol;
    std::string descriptor;
    std::vector<std::string> varieties;  ///< one entry per degree 0..n-1
    std::string d;                       ///< as printed
    std::optional<std::string> corrected_d;
};

struct Table {
    Space space = Space::Spherical;
    int n = 0;
    std::string name;  ///< "s3", "e2", ...
    std::vector<Row> rows;
};

/// All nine tables from `dir` (files s1.tsv ... h3.tsv).
std::vector<Table> load_all(const std::string& dir);
Table load(const std::string& path, Space space, int n);

/// Canonical form of a variety string: components as sorted factor lists,
/// components sorted, points expanded. Invariant under reordering of
/// components and of factors within a product.
std::vector<std::vector<std::string>> canonical_variety(const std::string& text);

struct Outcome {
    std::vector<std::string> mismatches;
    std::vector<std::string> errata;  ///< annotated rows where the printed d differs
};

/// Compares one table with the library: row order, symbols, descriptors,
/// varieties and d-vectors.
Outcome compare(const Table& table);

/// Compares one table with lines of the form SYMBOL<TAB>DESCRIPTOR<TAB>D.
Outcome compare_lines(const Table& table, const std::vector<std::string>& lines);

} // namespace spaceforms::golden
