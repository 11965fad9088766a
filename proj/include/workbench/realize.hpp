#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "workbench/config_table.hpp"
#include "workbench/ratfunc.hpp"
#include "workbench/registry.hpp"

namespace workbench {

// Two concurrent line triples with disjoint line sets. The listed order is
// the gauge order: the y lines take y=0, y=z, y=b*z and the x lines take
// x=0, x=z, x=a*z, so the pencil points land at [1,0,0] and [0,1,0].
struct GridChoice {
    std::array<int, 3> y_lines{};  // 0-based line indices
    std::array<int, 3> x_lines{};
    int y_point = 0;  // 1-based labels of the pencil triples
    int x_point = 0;
};

// Exact coordinates over Q(a,b,c,d) for a partially pinned arrangement.
// Lines store dual coordinates [A,B,C] for Ax+By+Cz=0. Every stored
// incidence either holds identically or contributed one constraint.
struct RealizationState {
    std::vector<std::optional<Vec3>> lines;
    std::vector<std::optional<Vec3>> points;
    std::vector<char> params;          // 'a','b', then introduced 'c','d'
    std::map<char, int> param_points;  // introduced param -> 1-based point
    std::vector<MultiPoly> constraints;   // must vanish
    std::vector<MultiPoly> inequations;   // must stay nonzero
    // incidences already used for coordinates or already constrained
    std::set<std::pair<int, int>> settled;

    bool complete() const;
};

// Deterministic gauge search: prefers the pencil pair whose 3x3 grid
// crossings hit the most table triples, then the smallest pair of pencil
// point labels; within a pencil, lines in index order. Throws NoGridError
// when no two triples have disjoint line sets.
GridChoice find_grid(const ConfigTable& table);

// Gauge from a stored hint (1-based line numbers in gauge order).
GridChoice grid_from_hint(const ConfigTable& table, const GridHint& hint);

// Pins the six gauge lines and the two pencil points; records the unit
// inequations a, a-1, b, b-1 that make the gauge lines pairwise distinct.
RealizationState seed_grid(const ConfigTable& table, const GridChoice& choice);

// Fixpoint of the incidence rules: a point on two coordinatized lines gets
// their cross product, a line through two coordinatized points likewise,
// and any further incidence between coordinatized elements appends its
// determinant to constraints unless it vanishes identically. Constraints
// are never substituted back. Throws InconsistentIncidenceError when a
// forced coordinate vector is identically zero.
void propagate(RealizationState& state, const ConfigTable& table);

// Places one fresh parameter as the affine coordinate of a stalled point
// along its single coordinatized line. Candidates are ranked by the number
// of uncoordinatized lines through them, ties to the highest label; hints
// override the ranking. Returns false when the state is already complete.
// Throws ParameterBudgetExceededError when a fifth parameter would be
// needed, and Error when nothing is parameterizable.
bool introduce_parameter(RealizationState& state, const ConfigTable& table,
                         const std::map<char, int>& hints = {});

// Full pipeline: gauge (hint or search), seed, propagate / introduce loop,
// then one non-concurrency inequation per coordinatized line triple that
// shares no table point. An identically zero inequation is recorded as the
// zero polynomial: the table forces a degeneracy.
RealizationState realize_table(const ConfigTable& table,
                               const GridHint* gauge_hint = nullptr,
                               const std::map<char, int>& param_hints = {});

}  // namespace workbench
