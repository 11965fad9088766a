#pragma once

#include <map>
#include <string>
#include <vector>

namespace workbench {

// Configuration table: one column per line, listing the triple points on it.
// Double points are implicit (Fact: n2 = k(k-1)/2 - 3*n3). Point labels are
// interned to dense integers 1..n3 at parse time.
struct ConfigTable {
    int k = 0;                             // line count
    int n3 = 0;                            // declared triple-point count
    std::vector<std::vector<int>> lines;   // lines[i] = point labels on L(i+1)
};

// Distribution of lines by the number of triples they carry.
struct LineCensus {
    std::map<int, int> ell;  // i -> number of lines with exactly i triples
    long n2 = 0;             // implied double-point count
    int n3 = 0;
};

// Parses the table file format: '#' comments, header `lines: <k> triples:
// <n3>`, then rows `L<i>: e<j> e<j> e<j> [e<j>]` in any row order.
ConfigTable parse_table(const std::string& text);
ConfigTable parse_table_file(const std::string& path);

// Checks the double/triple-point invariants and returns the census.
// Every label must lie on exactly 3 lines, two lines share at most one
// label, and the census equalities must hold.
LineCensus validate(const ConfigTable& table);

// Inequality satisfied by every complex line arrangement without points of
// multiplicity k, k-1, or k-2: n2 + (3/4)*n3 >= k. Not a combinatorial
// filter; exported for realizability context only.
bool hirzebruch_feasible(long k, long n2, long n3);

// Serializes a table in the file format with sorted labels per row.
std::string emit_table(const ConfigTable& table);

// point_lines()[p-1] = 0-based indices of the lines through point p.
std::vector<std::vector<int>> point_lines(const ConfigTable& table);

}  // namespace workbench
