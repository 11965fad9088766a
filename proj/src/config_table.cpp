#include "workbench/config_table.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "workbench/errors.hpp"

namespace workbench {

namespace {

struct Token {
    std::string text;
    int line;    // 1-based
    int column;  // 1-based
};

// Splits the input into tokens, dropping '#' comments. Tokens never span
// source lines.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> rows;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        std::vector<Token> row;
        size_t pos = 0;
        while (pos < raw.size()) {
            while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
            size_t start = pos;
            while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
            if (pos > start)
                row.push_back({raw.substr(start, pos - start), lineno, static_cast<int>(start) + 1});
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

int parse_positive_int(const Token& tok, const std::string& what) {
    if (tok.text.empty() || tok.text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected " + what + ", got '" + tok.text + "'", tok.line, tok.column);
    long value = 0;
    for (char c : tok.text) {
        value = value * 10 + (c - '0');
        if (value > 1000000) throw ParseError(what + " out of range", tok.line, tok.column);
    }
    if (value <= 0) throw ParseError(what + " must be positive", tok.line, tok.column);
    return static_cast<int>(value);
}

// Parses a `<prefix><int>:` or `<prefix><int>` token and returns the int.
int parse_tagged(const Token& tok, char prefix, bool colon, const std::string& what) {
    std::string body = tok.text;
    if (body.empty() || body[0] != prefix)
        throw ParseError("expected " + what + ", got '" + tok.text + "'", tok.line, tok.column);
    body.erase(0, 1);
    if (colon) {
        if (body.empty() || body.back() != ':')
            throw ParseError("expected ':' after " + what, tok.line, tok.column);
        body.pop_back();
    }
    Token inner{body, tok.line, tok.column};
    return parse_positive_int(inner, what + " index");
}

}  // namespace

ConfigTable parse_table(const std::string& text) {
    auto rows = tokenize(text);
    if (rows.empty()) throw ParseError("empty table file", 1, 1);

    const auto& header = rows.front();
    if (header.size() != 4 || header[0].text != "lines:" || header[2].text != "triples:")
        throw ParseError("expected header 'lines: <k> triples: <n3>'", header[0].line,
                         header[0].column);
    ConfigTable table;
    table.k = parse_positive_int(header[1], "line count");
    table.n3 = parse_positive_int(header[3], "triple count");
    table.lines.assign(table.k, {});

    std::vector<bool> seen(table.k, false);
    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        int index = parse_tagged(row[0], 'L', true, "line label");
        if (index > table.k)
            throw ParseError("line L" + std::to_string(index) + " exceeds declared count",
                             row[0].line, row[0].column);
        if (seen[index - 1])
            throw ParseError("line L" + std::to_string(index) + " listed twice", row[0].line,
                             row[0].column);
        seen[index - 1] = true;
        if (row.size() < 2)
            throw ParseError("line L" + std::to_string(index) + " has no points", row[0].line,
                             row[0].column);
        if (row.size() > 5)
            throw ParseError("line L" + std::to_string(index) + " has more than four points",
                             row[5].line, row[5].column);
        auto& column = table.lines[index - 1];
        for (size_t t = 1; t < row.size(); ++t) {
            int label = parse_tagged(row[t], 'e', false, "point label");
            if (std::find(column.begin(), column.end(), label) != column.end())
                throw DuplicateIncidenceError(
                    "point e" + std::to_string(label) + " repeated on line L" +
                        std::to_string(index),
                    row[t].line, row[t].column);
            column.push_back(label);
        }
    }
    for (int i = 0; i < table.k; ++i)
        if (!seen[i])
            throw ParseError("row for L" + std::to_string(i + 1) + " missing",
                             rows.back().front().line, 1);

    // Intern labels to 1..m preserving numeric order.
    std::set<int> labels;
    for (const auto& column : table.lines) labels.insert(column.begin(), column.end());
    std::map<int, int> dense;
    int next = 1;
    for (int label : labels) dense[label] = next++;
    for (auto& column : table.lines)
        for (int& label : column) label = dense[label];
    return table;
}

ConfigTable parse_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open table file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_table(buffer.str());
}

LineCensus validate(const ConfigTable& table) {
    if (table.k <= 0 || static_cast<int>(table.lines.size()) != table.k)
        throw ValidationError("table has " + std::to_string(table.lines.size()) +
                              " columns, declared " + std::to_string(table.k));

    std::map<int, int> occurrences;
    for (int i = 0; i < table.k; ++i) {
        const auto& column = table.lines[i];
        if (column.empty() || column.size() > 4)
            throw ValidationError("line L" + std::to_string(i + 1) + " carries " +
                                  std::to_string(column.size()) + " triples, expected 1 to 4");
        for (int label : column) ++occurrences[label];
    }
    for (const auto& [label, count] : occurrences)
        if (count != 3) throw NotTriplePointError(label, count);

    for (int i = 0; i < table.k; ++i)
        for (int j = i + 1; j < table.k; ++j) {
            int shared = 0;
            for (int label : table.lines[i])
                if (std::find(table.lines[j].begin(), table.lines[j].end(), label) !=
                    table.lines[j].end())
                    ++shared;
            if (shared > 1) throw RepeatedPairError(i + 1, j + 1);
        }

    LineCensus census;
    census.n3 = table.n3;
    long weighted = 0;
    for (const auto& column : table.lines) {
        ++census.ell[static_cast<int>(column.size())];
        weighted += static_cast<long>(column.size());
    }
    if (weighted != 3L * table.n3)
        throw CensusMismatchError("incidence count " + std::to_string(weighted) +
                                  " does not equal 3*n3 = " + std::to_string(3L * table.n3));
    census.n2 = static_cast<long>(table.k) * (table.k - 1) / 2 - 3L * table.n3;
    if (census.n2 < 0)
        throw CensusMismatchError("implied double-point count is negative: " +
                                  std::to_string(census.n2));
    return census;
}

bool hirzebruch_feasible(long k, long n2, long n3) {
    return 4 * n2 + 3 * n3 >= 4 * k;
}

std::string emit_table(const ConfigTable& table) {
    std::ostringstream out;
    out << "lines: " << table.k << " triples: " << table.n3 << "\n";
    for (int i = 0; i < table.k; ++i) {
        auto column = table.lines[i];
        std::sort(column.begin(), column.end());
        out << "L" << (i + 1) << ":";
        for (int label : column) out << " e" << label;
        out << "\n";
    }
    return out.str();
}

std::vector<std::vector<int>> point_lines(const ConfigTable& table) {
    std::vector<std::vector<int>> incident(table.n3);
    for (int i = 0; i < table.k; ++i)
        for (int label : table.lines[i]) {
            if (label >= 1 && label <= table.n3) incident[label - 1].push_back(i);
        }
    return incident;
}

}  // namespace workbench
