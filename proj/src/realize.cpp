#include "workbench/realize.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "workbench/errors.hpp"

namespace workbench {
namespace {

RationalFunction rf(long v) { return RationalFunction(v); }

bool is_zero_vec(const Vec3& v) {
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

Rational rational_gcd(const Rational& x, const Rational& y) {
    Integer num, den;
    mpz_gcd(num.get_mpz_t(), x.get_num().get_mpz_t(), y.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
    Rational g(num, den);
    g.canonicalize();
    return g;
}

// Scale-normal form of a projective vector: when the last nonzero entry is a
// nonzero constant the vector is divided by it (affine charts read off as
// [x, y, 1]); otherwise denominators are cleared and the joint polynomial
// gcd, joint rational content, and sign of the last entry's leading
// coefficient are removed. The zero vector passes through for the caller to
// reject.
Vec3 normalize_projective(const Vec3& v) {
    int last = -1;
    for (int i = 2; i >= 0; --i) {
        if (!v[i].is_zero()) {
            last = i;
            break;
        }
    }
    if (last < 0) return v;
    if (v[last].is_constant()) {
        Vec3 out;
        for (int i = 0; i < 3; ++i) out[i] = v[i] / v[last];
        return out;
    }
    MultiPoly den_prod = v[0].den() * v[1].den() * v[2].den();
    std::array<MultiPoly, 3> p;
    for (int i = 0; i < 3; ++i) {
        p[i] = v[i].num() * divide_exact(den_prod, v[i].den());
    }
    MultiPoly g = poly_gcd(poly_gcd(p[0], p[1]), p[2]);
    Rational content(0);
    for (int i = 0; i < 3; ++i) {
        if (p[i].is_zero()) continue;
        p[i] = divide_exact(p[i], g);
        content = content == 0 ? p[i].content()
                               : rational_gcd(content, p[i].content());
    }
    Rational scale = 1 / content;
    if (sign(p[last].leading_coefficient()) < 0) scale = -scale;
    Vec3 out;
    for (int i = 0; i < 3; ++i) out[i] = RationalFunction(p[i] * scale);
    return out;
}

// The gauge units are invertible on the whole parameter chart, so they are
// removed from every derived polynomial: a, a-1, b, b-1.
std::vector<MultiPoly> gauge_units() {
    MultiPoly a = MultiPoly::variable('a');
    MultiPoly b = MultiPoly::variable('b');
    MultiPoly one(1L);
    return {a, a - one, b, b - one};
}

MultiPoly strip_gauge_units(MultiPoly p) {
    if (p.is_zero()) return p;
    const std::vector<MultiPoly> units = gauge_units();
    bool stripped = true;
    while (stripped && !p.is_constant()) {
        stripped = false;
        for (const MultiPoly& u : units) {
            MultiPoly q;
            while (!p.is_constant() && divides(u, p, &q)) {
                p = q;
                stripped = true;
            }
        }
    }
    return p.normalized();
}

void push_unique(std::vector<MultiPoly>& list, const MultiPoly& p) {
    if (std::find(list.begin(), list.end(), p) == list.end()) {
        list.push_back(p);
    }
}

// 1-based label of the unique point shared by the three columns, or 0.
int common_point(const ConfigTable& t, const std::array<int, 3>& cols) {
    std::vector<int> shared(t.lines[cols[0]].begin(), t.lines[cols[0]].end());
    for (int s = 1; s < 3; ++s) {
        std::vector<int> next;
        for (int lab : t.lines[cols[s]]) {
            if (std::find(shared.begin(), shared.end(), lab) != shared.end()) {
                next.push_back(lab);
            }
        }
        shared = next;
    }
    return shared.size() == 1 ? shared[0] : 0;
}

}  // namespace

bool RealizationState::complete() const {
    for (const auto& l : lines) {
        if (!l) return false;
    }
    for (const auto& p : points) {
        if (!p) return false;
    }
    return true;
}

GridChoice find_grid(const ConfigTable& table) {
    const auto pls = point_lines(table);
    int best_score = -1;
    int best_p = -1;
    int best_q = -1;
    for (int p = 0; p < table.n3; ++p) {
        if (pls[p].size() != 3) continue;
        for (int q = p + 1; q < table.n3; ++q) {
            if (pls[q].size() != 3) continue;
            bool disjoint = true;
            for (int lp : pls[p]) {
                for (int lq : pls[q]) {
                    if (lp == lq) disjoint = false;
                }
            }
            if (!disjoint) continue;
            // crossings that the table already names as triple points
            int score = 0;
            for (int lp : pls[p]) {
                for (int lq : pls[q]) {
                    for (int lab : table.lines[lp]) {
                        const auto& col = table.lines[lq];
                        if (std::find(col.begin(), col.end(), lab) !=
                            col.end()) {
                            ++score;
                            break;
                        }
                    }
                }
            }
            if (score > best_score) {
                best_score = score;
                best_p = p;
                best_q = q;
            }
        }
    }
    if (best_p < 0) {
        throw NoGridError("no two triple points lie on disjoint line triples");
    }
    const auto& yl = pls[best_p];
    const auto& xl = pls[best_q];
    GridChoice g;
    g.y_lines = {yl[0], yl[1], yl[2]};
    g.x_lines = {xl[0], xl[1], xl[2]};
    g.y_point = best_p + 1;
    g.x_point = best_q + 1;
    return g;
}

GridChoice grid_from_hint(const ConfigTable& table, const GridHint& hint) {
    GridChoice g;
    for (int i = 0; i < 3; ++i) {
        g.y_lines[i] = hint.y[i] - 1;
        g.x_lines[i] = hint.x[i] - 1;
        if (g.y_lines[i] < 0 || g.y_lines[i] >= table.k || g.x_lines[i] < 0 ||
            g.x_lines[i] >= table.k) {
            throw Error("gauge hint names a line outside the table");
        }
    }
    g.y_point = common_point(table, g.y_lines);
    g.x_point = common_point(table, g.x_lines);
    if (g.y_point == 0 || g.x_point == 0 || g.y_point == g.x_point) {
        throw Error("gauge hint lines are not two disjoint pencils");
    }
    for (int ly : g.y_lines) {
        for (int lx : g.x_lines) {
            if (ly == lx) {
                throw Error("gauge hint lines are not two disjoint pencils");
            }
        }
    }
    return g;
}

RealizationState seed_grid(const ConfigTable& table, const GridChoice& choice) {
    RealizationState s;
    s.lines.assign(table.k, std::nullopt);
    s.points.assign(table.n3, std::nullopt);
    RationalFunction a = RationalFunction::variable(var_index('a'));
    RationalFunction b = RationalFunction::variable(var_index('b'));
    s.lines[choice.y_lines[0]] = Vec3{rf(0), rf(1), rf(0)};
    s.lines[choice.y_lines[1]] = Vec3{rf(0), rf(1), rf(-1)};
    s.lines[choice.y_lines[2]] = Vec3{rf(0), rf(1), -b};
    s.lines[choice.x_lines[0]] = Vec3{rf(1), rf(0), rf(0)};
    s.lines[choice.x_lines[1]] = Vec3{rf(1), rf(0), rf(-1)};
    s.lines[choice.x_lines[2]] = Vec3{rf(1), rf(0), -a};
    s.points[choice.y_point - 1] = Vec3{rf(1), rf(0), rf(0)};
    s.points[choice.x_point - 1] = Vec3{rf(0), rf(1), rf(0)};
    s.params = {'a', 'b'};
    for (const MultiPoly& u : gauge_units()) s.inequations.push_back(u);
    // the pencil apexes sit on their three gauge lines by construction
    for (int i = 0; i < 3; ++i) {
        s.settled.insert({choice.y_point - 1, choice.y_lines[i]});
        s.settled.insert({choice.x_point - 1, choice.x_lines[i]});
    }
    return s;
}

void propagate(RealizationState& state, const ConfigTable& table) {
    const auto pls = point_lines(table);
    bool coords_changed = true;
    while (coords_changed) {
        coords_changed = false;
        for (int p = 0; p < table.n3; ++p) {
            if (state.points[p]) continue;
            int first = -1;
            int second = -1;
            for (int l : pls[p]) {
                if (!state.lines[l]) continue;
                if (first < 0) {
                    first = l;
                } else {
                    second = l;
                    break;
                }
            }
            if (second < 0) continue;
            Vec3 v = normalize_projective(
                cross(*state.lines[first], *state.lines[second]));
            if (is_zero_vec(v)) {
                throw InconsistentIncidenceError(
                    "point e" + std::to_string(p + 1) +
                    " lies on two identical lines");
            }
            state.points[p] = v;
            state.settled.insert({p, first});
            state.settled.insert({p, second});
            coords_changed = true;
        }
        for (int l = 0; l < table.k; ++l) {
            if (state.lines[l]) continue;
            int first = -1;
            int second = -1;
            for (int lab : table.lines[l]) {
                if (!state.points[lab - 1]) continue;
                if (first < 0) {
                    first = lab - 1;
                } else {
                    second = lab - 1;
                    break;
                }
            }
            if (second < 0) continue;
            Vec3 v = normalize_projective(
                cross(*state.points[first], *state.points[second]));
            if (is_zero_vec(v)) {
                throw InconsistentIncidenceError(
                    "line L" + std::to_string(l + 1) +
                    " passes through two identical points");
            }
            state.lines[l] = v;
            state.settled.insert({first, l});
            state.settled.insert({second, l});
            coords_changed = true;
        }
        // every remaining coordinatized incidence certifies or constrains
        for (int p = 0; p < table.n3; ++p) {
            if (!state.points[p]) continue;
            for (int l : pls[p]) {
                if (!state.lines[l]) continue;
                if (state.settled.count({p, l})) continue;
                state.settled.insert({p, l});
                RationalFunction d = dot(*state.lines[l], *state.points[p]);
                if (d.is_zero()) continue;
                MultiPoly c = strip_gauge_units(d.num());
                push_unique(state.constraints, c);
            }
        }
    }
}

bool introduce_parameter(RealizationState& state, const ConfigTable& table,
                         const std::map<char, int>& hints) {
    if (state.complete()) return false;
    if (state.params.size() >= static_cast<size_t>(kMaxVars)) {
        throw ParameterBudgetExceededError(
            "table needs a fifth parameter; the alphabet stops at d");
    }
    const char letter = static_cast<char>('a' + state.params.size());
    const auto pls = point_lines(table);
    // a candidate sits on exactly one coordinatized line, so one affine
    // coordinate pins it
    int chosen = -1;
    auto hint = hints.find(letter);
    if (hint != hints.end()) {
        chosen = hint->second - 1;
    } else {
        int best_rank = -1;
        for (int p = 0; p < table.n3; ++p) {
            if (state.points[p]) continue;
            int placed = 0;
            int open = 0;
            for (int l : pls[p]) {
                if (state.lines[l]) {
                    ++placed;
                } else {
                    ++open;
                }
            }
            if (placed != 1) continue;
            int rank = open * table.n3 + p;
            if (rank > best_rank) {
                best_rank = rank;
                chosen = p;
            }
        }
    }
    if (chosen < 0 || chosen >= table.n3 || state.points[chosen]) {
        throw Error("propagation stalled with no parameterizable point");
    }
    int anchor = -1;
    for (int l : pls[chosen]) {
        if (state.lines[l]) {
            if (anchor >= 0) {
                throw Error("parameter point already has two placed lines");
            }
            anchor = l;
        }
    }
    if (anchor < 0) {
        throw Error("parameter point lies on no placed line");
    }
    const Vec3& L = *state.lines[anchor];
    RationalFunction t = RationalFunction::variable(var_index(letter));
    Vec3 v;
    if (!L[1].is_zero()) {
        v = Vec3{t, (L[0] * t + L[2]) / -L[1], rf(1)};
    } else if (!L[0].is_zero()) {
        v = Vec3{-L[2] / L[0], t, rf(1)};
    } else {
        // [0,0,C] is the line at infinity z=0; a valid table never needs a
        // parameter there because both pencil apexes would sit on it
        throw Error("parameter anchor degenerates to the line at infinity");
    }
    state.points[chosen] = v;
    state.settled.insert({chosen, anchor});
    state.params.push_back(letter);
    state.param_points[letter] = chosen + 1;
    return true;
}

RealizationState realize_table(const ConfigTable& table,
                               const GridHint* gauge_hint,
                               const std::map<char, int>& param_hints) {
    GridChoice grid =
        gauge_hint ? grid_from_hint(table, *gauge_hint) : find_grid(table);
    RealizationState state = seed_grid(table, grid);
    propagate(state, table);
    while (!state.complete()) {
        if (!introduce_parameter(state, table, param_hints)) break;
        propagate(state, table);
    }
    // non-concurrency: every line triple that shares no table point must
    // keep a nonzero determinant
    std::set<std::array<int, 3>> concurrent;
    const auto pls = point_lines(table);
    for (int p = 0; p < table.n3; ++p) {
        std::array<int, 3> tri{pls[p][0], pls[p][1], pls[p][2]};
        std::sort(tri.begin(), tri.end());
        concurrent.insert(tri);
    }
    for (int i = 0; i < table.k; ++i) {
        for (int j = i + 1; j < table.k; ++j) {
            for (int l = j + 1; l < table.k; ++l) {
                if (concurrent.count({i, j, l})) continue;
                RationalFunction det = dot(
                    *state.lines[i], cross(*state.lines[j], *state.lines[l]));
                if (det.is_zero()) {
                    // the table itself forces three lines through one point
                    push_unique(state.inequations, MultiPoly());
                    continue;
                }
                MultiPoly q = strip_gauge_units(det.num());
                if (q.is_constant()) continue;
                push_unique(state.inequations, q);
            }
        }
    }
    // every factor of an inequation is nonzero on the chart, so it cannot
    // carry a constraint: divide each constraint down to its honest core
    std::vector<MultiPoly> reduced;
    for (MultiPoly c : state.constraints) {
        for (const MultiPoly& q : state.inequations) {
            if (q.is_zero() || q.is_constant()) continue;
            MultiPoly g = poly_gcd(c, q);
            while (!g.is_constant() && !c.is_constant()) {
                c = divide_exact(c, g);
                g = poly_gcd(c, q);
            }
        }
        push_unique(reduced, c.normalized());
    }
    state.constraints = std::move(reduced);
    return state;
}

}  // namespace workbench
