#pragma once

#include <string>
#include <vector>

#include "workbench/config_table.hpp"

namespace workbench {

// Relabeling of a table that preserves all incidences.
struct TableAutomorphism {
    std::vector<int> line_perm;   // image of line i, 0-based
    std::vector<int> point_perm;  // image of point p, 0-based
};

// Canonical byte string of the line/point incidence structure. Two tables
// get equal bytes iff some pair of line and point relabelings maps one to
// the other. Computed by colour refinement with backtracking over
// individualized vertices; the result is the minimum leaf serialization,
// so it is deterministic and exact.
std::string canonical_form(const ConfigTable& table);

// Short printable fingerprint of canonical_form, for manifests.
std::string canonical_digest(const ConfigTable& table);

// Generating set of the automorphism group (possibly redundant, identity
// omitted). Derived from the canonical labelings that tie for the minimum.
std::vector<TableAutomorphism> automorphisms(const ConfigTable& table);

// Iso-invariant fingerprint from colour refinement alone, no backtracking.
// Unequal certificates prove non-isomorphism; equal certificates prove
// nothing. Cheap enough for inner loops where canonical_form is not.
std::string refinement_certificate(const ConfigTable& table);

// Exact isomorphism test by backtracking over line images, pruned by the
// refinement colours. Unlike canonical_form it exits on the first witness,
// so it stays fast on tables with large automorphism groups.
bool isomorphic(const ConfigTable& a, const ConfigTable& b);

// Rebuilds a table from canonical_form bytes. Lines and points carry their
// canonical positions: canonical_form(table_from_canonical(c)) == c.
ConfigTable table_from_canonical(const std::string& bytes);

}  // namespace workbench
