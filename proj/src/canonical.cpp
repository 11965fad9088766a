#include "workbench/canonical.hpp"

#include <algorithm>

#include "workbench/errors.hpp"
#include <set>
#include <tuple>
#include <utility>

namespace workbench {

namespace {

// Bipartite search state: vertices 0..nl-1 are lines, nl..nl+np-1 points.
struct Searcher {
    int nl = 0;
    int np = 0;
    std::vector<std::vector<int>> adj;

    bool have_best = false;
    std::string best;
    std::vector<std::vector<int>> best_labelings;  // vertex -> position
    bool collect_all = false;

    // Stable colour refinement. New colour ids are assigned in sorted order
    // of (part, old colour, sorted neighbour colours), so the result depends
    // only on the isomorphism class of the coloured graph and line colours
    // always stay below point colours, even after individualization.
    std::vector<int> refine(std::vector<int> colors) const {
        int n = nl + np;
        int count = 0;
        for (int c : colors) count = std::max(count, c + 1);
        for (;;) {
            using Sig = std::tuple<int, int, std::vector<int>>;
            std::vector<std::pair<Sig, int>> sigs(n);
            for (int v = 0; v < n; ++v) {
                std::vector<int> around;
                around.reserve(adj[v].size());
                for (int w : adj[v]) around.push_back(colors[w]);
                std::sort(around.begin(), around.end());
                sigs[v] = {{v < nl ? 0 : 1, colors[v], std::move(around)}, v};
            }
            std::sort(sigs.begin(), sigs.end());
            std::vector<int> next(n);
            int fresh = 0;
            for (int i = 0; i < n; ++i) {
                if (i > 0 && sigs[i].first != sigs[i - 1].first) ++fresh;
                next[sigs[i].second] = fresh;
            }
            ++fresh;
            if (fresh == count) return next;
            count = fresh;
            colors = std::move(next);
        }
    }

    // With a discrete colouring, colour = position. Lines keep the lowest
    // positions because their initial colours precede point colours and
    // refinement orders new ids by old colour first.
    std::string serialize(const std::vector<int>& pos) const {
        std::string out;
        out.push_back(static_cast<char>(nl));
        out.push_back(static_cast<char>(np));
        std::vector<int> order(nl);
        for (int v = 0; v < nl; ++v) order[pos[v]] = v;
        for (int i = 0; i < nl; ++i) {
            int v = order[i];
            std::vector<int> pts;
            pts.reserve(adj[v].size());
            for (int w : adj[v]) pts.push_back(pos[w] - nl);
            std::sort(pts.begin(), pts.end());
            out.push_back(static_cast<char>(pts.size()));
            for (int p : pts) out.push_back(static_cast<char>(p));
        }
        return out;
    }

    void search(std::vector<int> colors) {
        colors = refine(std::move(colors));
        int n = nl + np;
        std::vector<int> cell_size(n, 0);
        for (int c : colors) ++cell_size[c];
        int branch_color = -1;
        for (int c = 0; c < n; ++c)
            if (cell_size[c] >= 2) {
                branch_color = c;
                break;
            }
        if (branch_color < 0) {
            std::string bytes = serialize(colors);
            if (!have_best || bytes < best) {
                have_best = true;
                best = bytes;
                best_labelings.clear();
                best_labelings.push_back(colors);
            } else if (bytes == best && collect_all) {
                best_labelings.push_back(colors);
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (colors[v] != branch_color) continue;
            std::vector<int> child = colors;
            child[v] = n;  // fresh maximal colour; refine re-densifies
            search(std::move(child));
        }
    }
};

Searcher build(const ConfigTable& table) {
    Searcher s;
    s.nl = table.k;
    s.np = table.n3;
    s.adj.assign(s.nl + s.np, {});
    for (int i = 0; i < table.k; ++i)
        for (int label : table.lines[i]) {
            s.adj[i].push_back(s.nl + label - 1);
            s.adj[s.nl + label - 1].push_back(i);
        }
    return s;
}

std::vector<int> initial_colors(const Searcher& s) {
    // Pairs (part, degree), densified in sorted order; all line colours
    // precede all point colours.
    int n = s.nl + s.np;
    std::vector<std::pair<int, int>> keys(n);
    for (int v = 0; v < n; ++v)
        keys[v] = {v < s.nl ? 0 : 1, static_cast<int>(s.adj[v].size())};
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v)
        colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
                                     sorted.begin());
    return colors;
}

}  // namespace

std::string canonical_form(const ConfigTable& table) {
    Searcher s = build(table);
    s.search(initial_colors(s));
    return s.best;
}

std::string canonical_digest(const ConfigTable& table) {
    static const char* hex = "0123456789abcdef";
    std::string bytes = canonical_form(table);
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(hex[c >> 4]);
        out.push_back(hex[c & 15]);
    }
    return out;
}

std::string refinement_certificate(const ConfigTable& table) {
    Searcher s = build(table);
    std::vector<int> colors = s.refine(initial_colors(s));
    int n = s.nl + s.np;
    int count = 0;
    for (int c : colors) count = std::max(count, c + 1);
    // Stable partition: all members of a cell have the same colour row, so
    // one row per cell describes the quotient exactly. Colour ids are
    // assigned canonically by refine, making the serialization comparable
    // across tables.
    std::vector<int> size(count, 0), member(count, -1);
    for (int v = 0; v < n; ++v) {
        ++size[colors[v]];
        member[colors[v]] = v;
    }
    std::string out;
    out += std::to_string(s.nl) + "," + std::to_string(s.np) + ";";
    for (int c = 0; c < count; ++c) {
        std::vector<int> row;
        for (int w : s.adj[member[c]]) row.push_back(colors[w]);
        std::sort(row.begin(), row.end());
        out += std::to_string(size[c]) + ":";
        for (int x : row) out += std::to_string(x) + ".";
        out.push_back(';');
    }
    return out;
}

namespace {

// Backtracking line-by-line embedding of a into b; both sides have equal
// refinement colours, which prunes candidate images hard.
struct IsoSearch {
    const ConfigTable& a;
    const ConfigTable& b;
    std::vector<int> ca, cb;          // refinement colours, lines then points
    std::vector<int> line_img;        // a-line -> b-line or -1
    std::vector<int> point_img;       // a-point (0-based) -> b-point or -1
    std::vector<char> line_used, point_used;

    bool lines_done(size_t i) {
        if (i == a.lines.size()) return true;
        const auto& col = a.lines[i];
        for (int j = 0; j < b.k; ++j) {
            if (line_used[j] || cb[j] != ca[i]) continue;
            if (b.lines[j].size() != col.size()) continue;
            line_img[i] = j;
            line_used[j] = 1;
            if (match_points(i, j, 0)) return true;
            line_used[j] = 0;
            line_img[i] = -1;
        }
        return false;
    }

    // Assigns images for the points of a-line i inside b-line j, then
    // recurses to the next line.
    bool match_points(size_t i, int j, size_t t) {
        const auto& col = a.lines[i];
        if (t == col.size()) return lines_done(i + 1);
        int p = col[t] - 1;
        if (point_img[p] >= 0) {
            // image already fixed; it must lie on the image line
            for (int qlab : b.lines[j])
                if (qlab - 1 == point_img[p]) return match_points(i, j, t + 1);
            return false;
        }
        for (int qlab : b.lines[j]) {
            int q = qlab - 1;
            if (point_used[q] || cb[b.k + q] != ca[a.k + p]) continue;
            point_img[p] = q;
            point_used[q] = 1;
            if (match_points(i, j, t + 1)) return true;
            point_used[q] = 0;
            point_img[p] = -1;
        }
        return false;
    }
};

}  // namespace

bool isomorphic(const ConfigTable& a, const ConfigTable& b) {
    if (a.k != b.k || a.n3 != b.n3) return false;
    Searcher sa = build(a), sb = build(b);
    std::vector<int> ca = sa.refine(initial_colors(sa));
    std::vector<int> cb = sb.refine(initial_colors(sb));
    {
        auto ha = ca, hb = cb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return false;
    }
    IsoSearch is{a, b, std::move(ca), std::move(cb),
                 std::vector<int>(a.k, -1), std::vector<int>(a.n3, -1),
                 std::vector<char>(b.k, 0), std::vector<char>(b.n3, 0)};
    return is.lines_done(0);
}

ConfigTable table_from_canonical(const std::string& bytes) {
    ConfigTable t;
    size_t at = 0;
    auto take = [&]() -> int {
        if (at >= bytes.size()) throw Error("truncated canonical bytes");
        return static_cast<unsigned char>(bytes[at++]);
    };
    t.k = take();
    t.n3 = take();
    t.lines.resize(t.k);
    for (int i = 0; i < t.k; ++i) {
        int sz = take();
        t.lines[i].resize(sz);
        for (int j = 0; j < sz; ++j) t.lines[i][j] = take() + 1;
    }
    if (at != bytes.size()) throw Error("trailing canonical bytes");
    return t;
}

std::vector<TableAutomorphism> automorphisms(const ConfigTable& table) {
    Searcher s = build(table);
    s.collect_all = true;
    s.search(initial_colors(s));

    std::vector<TableAutomorphism> gens;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    const auto& base = s.best_labelings.front();
    for (const auto& labeling : s.best_labelings) {
        std::vector<int> inverse(s.nl + s.np);
        for (int v = 0; v < s.nl + s.np; ++v) inverse[labeling[v]] = v;
        TableAutomorphism a;
        a.line_perm.resize(s.nl);
        a.point_perm.resize(s.np);
        bool identity = true;
        for (int v = 0; v < s.nl; ++v) {
            a.line_perm[v] = inverse[base[v]];
            if (a.line_perm[v] != v) identity = false;
        }
        for (int p = 0; p < s.np; ++p) {
            a.point_perm[p] = inverse[base[s.nl + p]] - s.nl;
            if (a.point_perm[p] != p) identity = false;
        }
        if (identity) continue;
        if (seen.insert({a.line_perm, a.point_perm}).second) gens.push_back(std::move(a));
    }
    return gens;
}

}  // namespace workbench
