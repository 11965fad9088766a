#include "workbench/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "workbench/canonical.hpp"
#include "workbench/errors.hpp"

namespace workbench {

namespace {

// All column-size multisets (sorted descending) compatible with k lines
// and n3 triples. Every line must carry at least three triples when that
// is solvable, mirroring the reduction that drives the ten-line census;
// otherwise any part sizes from 1 to floor((k-1)/2) are admitted.
std::vector<std::vector<int>> census_parts(int k, int n3, bool exact_three) {
    std::vector<std::vector<int>> out;
    if (exact_three) {
        if (n3 != k)
            throw InfeasibleCensusError(
                "exact-three census needs n3 == k, got k=" + std::to_string(k) +
                " n3=" + std::to_string(n3));
        out.push_back(std::vector<int>(k, 3));
        return out;
    }
    const long incid = 3L * n3;
    if (incid >= 3L * k && incid <= 4L * k) {
        int ell4 = static_cast<int>(incid - 3L * k);
        std::vector<int> parts(ell4, 4);
        parts.resize(k, 3);
        out.push_back(std::move(parts));
        return out;
    }
    // Relaxed census: lines with fewer than three triples are allowed. A
    // line with i triples meets 2i other lines in distinct points, so
    // i <= (k-1)/2.
    const int cap = (k - 1) / 2;
    std::vector<int> counts(cap + 1, 0);
    std::vector<std::vector<int>> found;
    auto rec = [&](auto&& self, int part, int lines_left, long incid_left) -> void {
        if (part == 0) {
            if (lines_left == 0 && incid_left == 0) {
                std::vector<int> parts;
                for (int i = cap; i >= 1; --i)
                    parts.insert(parts.end(), counts[i], i);
                found.push_back(std::move(parts));
            }
            return;
        }
        for (int c = 0; c <= lines_left && 1L * c * part <= incid_left; ++c) {
            counts[part] = c;
            self(self, part - 1, lines_left - c, incid_left - 1L * c * part);
        }
        counts[part] = 0;
    };
    if (cap >= 1) rec(rec, cap, k, incid);
    if (found.empty())
        throw InfeasibleCensusError("no line census solves k=" + std::to_string(k) +
                                    " n3=" + std::to_string(n3));
    return found;
}

// Minimum-line-count prunes. Each is a theorem about valid tables: a column
// of 3 triples forces 6 distinct partner lines, a column of 4 forces 8, two
// triples force 5 lines total, and 3 triples off a common line force 6. A
// census violating one admits no completion, so dropping it is sound.
bool census_passes_filters(int k, int n3, const std::vector<int>& parts) {
    if (n3 >= 2 && k < 5) return false;
    const int maxpart = parts.empty() ? 0 : parts.front();
    for (int s : parts) {
        if (s >= 4 && k < 9) return false;
        if (s == 3 && k < 7) return false;
    }
    if (n3 >= 3 && k < 6 && maxpart < n3) return false;
    return true;
}

struct Node {
    ConfigTable partial;             // partial.k = columns placed so far
    std::vector<int> usage;          // 1-based, occurrences per point
    std::vector<std::vector<char>> paired;  // 1-based pair-used matrix
};

struct LevelPool {
    std::unordered_map<std::string, std::vector<size_t>> buckets;
    std::vector<Node> nodes;

    // Keeps the node only when no isomorphic node is pooled yet.
    void offer(Node&& node) {
        const std::string cert = refinement_certificate(node.partial);
        auto& bucket = buckets[cert];
        for (size_t idx : bucket)
            if (isomorphic(node.partial, nodes[idx].partial)) return;
        bucket.push_back(nodes.size());
        nodes.push_back(std::move(node));
    }
};

class Search {
  public:
    Search(int k, int n3, const EnumOptions& opts, std::map<std::string, ConfigTable>& finals)
        : k_(k), n3_(n3), opts_(opts), finals_(finals) {}

    void run(const std::vector<int>& parts) {
        Node root;
        root.partial.k = 0;
        root.partial.n3 = 0;
        root.usage.assign(n3_ + 1, 0);
        root.paired.assign(n3_ + 1, std::vector<char>(n3_ + 1, 0));
        LevelPool level;
        level.offer(std::move(root));
        for (size_t depth = 0; depth < parts.size(); ++depth) {
            LevelPool next;
            const int size = parts[depth];
            const int rem_cols = static_cast<int>(parts.size() - depth - 1);
            for (Node& node : level.nodes) extend(node, size, rem_cols, next);
            level = std::move(next);
        }
        for (Node& node : level.nodes) {
            ConfigTable table = node.partial;
            table.n3 = n3_;
            assert(table.k == k_);
            validate(table);
            finals_.emplace(canonical_form(table), table);
        }
    }

  private:
    void extend(const Node& node, int size, int rem_cols, LevelPool& next) {
        columns_.clear();
        column_.clear();
        collect(node, size, 1);
        if (opts_.shuffle_seed) {
            std::seed_seq seq{opts_.shuffle_seed, static_cast<unsigned>(node.partial.k),
                              static_cast<unsigned>(next.nodes.size())};
            std::mt19937 rng(seq);
            std::shuffle(columns_.begin(), columns_.end(), rng);
        }
        for (const auto& col : columns_) {
            Node child = node;
            child.partial.lines.push_back(col);
            child.partial.k += 1;
            for (size_t i = 0; i < col.size(); ++i) {
                child.partial.n3 = std::max(child.partial.n3, col[i]);
                child.usage[col[i]] += 1;
                for (size_t j = i + 1; j < col.size(); ++j)
                    child.paired[col[i]][col[j]] = child.paired[col[j]][col[i]] = 1;
            }
            if (!completable(child, rem_cols)) continue;
            next.offer(std::move(child));
        }
    }

    // Ascending label choices for the next column. Points never seen before
    // must enter as the next unused label, so labels are dense in order of
    // first use and relabel-equivalent branches collapse.
    void collect(const Node& node, int size, int from) {
        if (static_cast<int>(column_.size()) == size) {
            columns_.push_back(column_);
            return;
        }
        const int seen = node.partial.n3 + fresh_;
        const int last = column_.empty() ? 0 : column_.back();
        for (int x = std::max(from, last + 1); x <= std::min(seen + 1, n3_); ++x) {
            if (x <= node.partial.n3) {
                if (node.usage[x] >= 3) continue;
                bool clash = false;
                for (int y : column_)
                    if (node.paired[y][x]) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
            } else {
                ++fresh_;
            }
            column_.push_back(x);
            collect(node, size, x + 1);
            column_.pop_back();
            if (x > node.partial.n3) --fresh_;
        }
    }

    // Every seen point still needs 3 - usage occurrences, at most one per
    // remaining column; unseen points need three columns each.
    bool completable(const Node& node, int rem_cols) const {
        for (int x = 1; x <= node.partial.n3; ++x)
            if (3 - node.usage[x] > rem_cols) return false;
        if (node.partial.n3 < n3_ && rem_cols < 3) return false;
        return true;
    }

    int k_;
    int n3_;
    EnumOptions opts_;
    std::map<std::string, ConfigTable>& finals_;
    std::vector<std::vector<int>> columns_;
    std::vector<int> column_;
    int fresh_ = 0;
};

std::string hex_of(const std::string& bytes) {
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(hex[c >> 4]);
        out.push_back(hex[c & 15]);
    }
    return out;
}

}  // namespace

std::vector<EnumClass> enumerate_classes(int k, int n3, const EnumOptions& opts) {
    if (k < 0 || n3 < 0) throw InfeasibleCensusError("negative shape");
    std::map<std::string, ConfigTable> finals;
    if (n3 == 0) {
        // Only double points: a single class, every column empty.
        ConfigTable t;
        t.k = k;
        t.lines.assign(k, {});
        finals.emplace(canonical_form(t), t);
    } else {
        for (const auto& parts : census_parts(k, n3, opts.exact_three)) {
            if (opts.apply_filters && !census_passes_filters(k, n3, parts)) continue;
            Search(k, n3, opts, finals).run(parts);
        }
    }
    std::vector<EnumClass> out;
    out.reserve(finals.size());
    for (const auto& [bytes, table] : finals)
        out.push_back({table_from_canonical(bytes), hex_of(bytes)});
    std::sort(out.begin(), out.end(),
              [](const EnumClass& a, const EnumClass& b) { return a.digest < b.digest; });
    return out;
}

MatchResult match_registry(const std::vector<EnumClass>& classes, const Registry& reg,
                           int k, int n3, bool exact_three) {
    std::set<std::string> class_digests;
    for (const auto& c : classes) class_digests.insert(c.digest);

    MatchResult result;
    std::map<std::string, std::vector<std::string>> by_digest;
    std::vector<std::string> unmatched_names;
    for (const auto& e : reg.entries) {
        if (e.table.k != k || e.table.n3 != n3) continue;
        if (exact_three) {
            bool all3 = true;
            for (const auto& col : e.table.lines)
                if (col.size() != 3) all3 = false;
            if (!all3) continue;
        }
        const std::string digest = canonical_digest(e.table);
        result.name_to_digest[e.name] = digest;
        by_digest[digest].push_back(e.name);
        if (!class_digests.count(digest)) unmatched_names.push_back(e.name);
    }
    std::vector<std::string> unmatched_classes;
    for (const auto& d : class_digests)
        if (!by_digest.count(d)) unmatched_classes.push_back(d);
    if (!unmatched_classes.empty() || !unmatched_names.empty())
        throw CountMismatchError(
            "enumeration and registry disagree: " +
                std::to_string(unmatched_classes.size()) + " classes without a name, " +
                std::to_string(unmatched_names.size()) + " names without a class",
            unmatched_classes, unmatched_names);
    for (auto& [digest, names] : by_digest)
        if (names.size() > 1) {
            std::sort(names.begin(), names.end());
            result.shared_names.push_back(names);
        }
    std::sort(result.shared_names.begin(), result.shared_names.end());
    return result;
}

}  // namespace workbench
