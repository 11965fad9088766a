#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "workbench/config_table.hpp"

namespace workbench {

// Ordered pencil hint: y[0] maps to y=0, y[1] to y=z, y[2] to y=b*z, and
// likewise x[0..2] to x=0, x=z, x=a*z.  Entries are 1-based line ids.
struct GridHint {
    std::array<int, 3> y{0, 0, 0};
    std::array<int, 3> x{0, 0, 0};
};

struct ExpectedModuli {
    std::string verdict;
    // Defining polynomials of the expected moduli locus, canonical text.
    // Absent (not empty) when the source row is unusable.
    std::optional<std::vector<std::string>> constraints;
    std::optional<std::string> eliminant;
    std::optional<int> points_total;
    std::optional<int> points_real;
    std::optional<int> orbits;
    std::optional<int> dimension;
    std::optional<std::string> irreducible;
    std::vector<std::string> notes;
};

struct RegistryEntry {
    std::string name;
    std::string file;
    std::string group;
    ConfigTable table;
    GridHint gauge;
    std::map<char, int> params;  // parameter letter -> point label
    bool geometric = false;
    bool zariski = false;
    ExpectedModuli expected;
};

struct Registry {
    std::vector<RegistryEntry> entries;
    std::vector<std::string> notes;

    const RegistryEntry* find(const std::string& name) const;
};

// Reads expected.json plus every referenced table file; validates each table.
Registry load_registry(const std::string& dir);

// WORKBENCH_REGISTRY if set, otherwise "registry" relative to the cwd.
std::string default_registry_dir();

}  // namespace workbench
