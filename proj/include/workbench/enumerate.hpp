#pragma once

#include <map>
#include <string>
#include <vector>

#include "workbench/config_table.hpp"
#include "workbench/registry.hpp"

namespace workbench {

struct EnumOptions {
    // Forces every line to carry exactly 3 triples, the (n_3) configuration
    // shape. Requires n3 == k.
    bool exact_three = false;
    // Sound feasibility prunes (minimum line counts implied by a column of
    // 3 or 4 triples, by 2 triples, and by 3 non-collinear triples). They
    // only skip branches that validation would kill later; turning them off
    // must not change the output.
    bool apply_filters = true;
    // Nonzero: shuffle the candidate order per node with this seed. The
    // final class list must not depend on it.
    unsigned shuffle_seed = 0;
};

// One isomorphism class of configuration tables. The stored table is the
// decoded canonical form itself, so equal classes compare byte-equal and
// the output order (sorted by digest) is branching-independent.
struct EnumClass {
    ConfigTable table;
    std::string digest;
};

// Enumerates every isomorphism class of configuration tables with k lines
// and n3 triple points, one representative per class, sorted by digest.
// Column sizes follow the line census: parts {3,4} when feasible (each
// line carries at least three triples), otherwise all censuses with parts
// in 1..floor((k-1)/2). Lines with no triples are not generated; a class
// that needs one is a smaller arrangement padded with free lines.
// Throws InfeasibleCensusError when no census solves the count equations.
std::vector<EnumClass> enumerate_classes(int k, int n3,
                                         const EnumOptions& opts = {});

// Matches enumeration output against the registry entries with the same
// shape (k lines, n3 triples, and the exact-three restriction if set).
struct MatchResult {
    std::map<std::string, std::string> name_to_digest;
    // Names whose tables are pairwise isomorphic, grouped; nonempty means
    // the registry double-counts those classes.
    std::vector<std::vector<std::string>> shared_names;
    bool bijective() const { return shared_names.empty(); }
};

// Throws CountMismatchError when some enumerated class has no registry
// name or some selected registry name has no enumerated class; the error
// carries both offending lists. Name groups that share one class are
// reported in the result, not treated as an error.
MatchResult match_registry(const std::vector<EnumClass>& classes,
                           const Registry& reg, int k, int n3,
                           bool exact_three = false);

}  // namespace workbench
