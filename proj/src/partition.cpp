#include "strgraph/partition.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace strgraph {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g)
{
    std::vector<Mask> adj(g.size());
    for (Vertex v = 0; v < g.size(); ++v) adj[v] = g.row_mask(v);
    return adj;
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Classes 0..2 are X1..X3, 3 is X4a, 4 is X4b.
class GreatSearch {
public:
    explicit GreatSearch(const Graph& g) : n_(g.size()), adj_(adjacency_masks(g)) {}

    std::optional<std::array<Mask, 5>> run()
    {
        std::array<Mask, 5> cls{};
        std::array<Mask, 5> cand;
        cand.fill(full_mask(n_));
        if (dfs(full_mask(n_), cls, cand)) return result_;
        return std::nullopt;
    }

private:
    bool dfs(Mask unassigned, std::array<Mask, 5>& cls, const std::array<Mask, 5>& cand)
    {
        if (unassigned == 0) {
            result_ = cls;
            return true;
        }
        Mask covered = cand[0] | cand[1] | cand[2] | cand[3] | cand[4];
        if (unassigned & ~covered) return false;

        Vertex best = -1;
        int best_options = 6;
        for (Mask rest = unassigned; rest; rest &= rest - 1) {
            const Vertex u = std::countr_zero(rest);
            const Mask bit = Mask{1} << u;
            int options = 0;
            for (int c = 0; c < 5; ++c) options += (cand[c] & bit) ? 1 : 0;
            if (options < best_options) {
                best_options = options;
                best = u;
                if (options <= 1) break;
            }
        }

        const Mask bit = Mask{1} << best;
        const Mask nb = adj_[best];
        bool empty_clique_tried = false;
        for (int c = 0; c < 5; ++c) {
            if (!(cand[c] & bit)) continue;
            if (c < 3 && cls[c] == 0) {
                if (empty_clique_tried) continue;
                empty_clique_tried = true;
            }
            if (c == 4 && cls[3] == 0) continue;

            std::array<Mask, 5> next = cand;
            if (c < 3) {
                next[c] &= nb;
            } else {
                const int other = c == 3 ? 4 : 3;
                next[c] &= nb;
                next[other] &= ~nb;
            }
            cls[c] |= bit;
            if (dfs(unassigned & ~bit, cls, next)) return true;
            cls[c] &= ~bit;
        }
        return false;
    }

    int n_;
    std::vector<Mask> adj_;
    std::array<Mask, 5> result_{};
};

void require_bitset_size(const Graph& g, const char* who)
{
    if (g.size() > 64) throw std::invalid_argument(std::string(who) + ": exact search requires n <= 64");
}

}  // namespace

std::optional<GreatPartition> find_great_partition(const Graph& g)
{
    require_bitset_size(g, "find_great_partition");
    auto found = GreatSearch(g).run();
    if (!found) return std::nullopt;
    const int n = g.size();
    GreatPartition p(n);
    p.x1 = VertexSet::from_mask(n, (*found)[0]);
    p.x2 = VertexSet::from_mask(n, (*found)[1]);
    p.x3 = VertexSet::from_mask(n, (*found)[2]);
    // Canonical split orientation: X4a holds the lowest X4 vertex.
    Mask a = (*found)[3];
    Mask b = (*found)[4];
    if (b != 0 && (a == 0 || std::countr_zero(b) < std::countr_zero(a))) std::swap(a, b);
    p.x4a = VertexSet::from_mask(n, a);
    p.x4b = VertexSet::from_mask(n, b);
    return p;
}

bool is_great(const Graph& g) { return find_great_partition(g).has_value(); }

// ---------------------------------------------------------------- (r,s)-coloring

namespace {

class RSSearch {
public:
    RSSearch(const Graph& g, int r, int s) : n_(g.size()), r_(r), s_(s), adj_(adjacency_masks(g)), cls_(r, 0) {}

    bool dfs(Vertex v)
    {
        if (v == n_) return true;
        const Mask bit = Mask{1} << v;
        bool empty_clique_tried = false;
        bool empty_stable_tried = false;
        for (int c = 0; c < r_; ++c) {
            const bool clique = c < s_;
            if (cls_[c] == 0) {
                bool& tried = clique ? empty_clique_tried : empty_stable_tried;
                if (tried) continue;
                tried = true;
            }
            const bool ok = clique ? (cls_[c] & ~adj_[v]) == 0 : (cls_[c] & adj_[v]) == 0;
            if (!ok) continue;
            cls_[c] |= bit;
            if (dfs(v + 1)) return true;
            cls_[c] &= ~bit;
        }
        return false;
    }

    const std::vector<Mask>& classes() const { return cls_; }

private:
    int n_, r_, s_;
    std::vector<Mask> adj_;
    std::vector<Mask> cls_;
};

}  // namespace

std::optional<RSColoring> find_rs_coloring(const Graph& g, int r, int s)
{
    if (s < 0 || r < s || r > 6) throw std::invalid_argument("find_rs_coloring: need 0 <= s <= r <= 6");
    require_bitset_size(g, "find_rs_coloring");
    if (r == 0) {
        if (g.size() == 0) return RSColoring{0, 0, {}};
        return std::nullopt;
    }
    RSSearch search(g, r, s);
    if (!search.dfs(0)) return std::nullopt;
    RSColoring out{r, s, {}};
    for (Mask m : search.classes()) out.classes.push_back(VertexSet::from_mask(g.size(), m));
    return out;
}

std::vector<std::string> rs_coloring_violations(const Graph& g, const RSColoring& c)
{
    std::vector<std::string> issues;
    if (static_cast<int>(c.classes.size()) != c.r) issues.emplace_back("class count differs from r");
    if (c.s < 0 || c.s > c.r) issues.emplace_back("s out of range");
    std::vector<int> seen(g.size(), 0);
    for (std::size_t k = 0; k < c.classes.size(); ++k) {
        for (Vertex v : c.classes[k].members()) {
            if (v >= g.size()) issues.emplace_back("vertex out of range");
            else ++seen[v];
        }
        const bool clique_class = static_cast<int>(k) < c.s;
        if (clique_class && !is_clique(g, c.classes[k]))
            issues.push_back("class " + std::to_string(k) + " is not a clique");
        if (!clique_class && !is_independent(g, c.classes[k]))
            issues.push_back("class " + std::to_string(k) + " is not independent");
    }
    for (Vertex v = 0; v < g.size(); ++v)
        if (seen[v] != 1) issues.push_back("vertex " + std::to_string(v) + " not covered exactly once");
    return issues;
}

// --------------------------------------------------------------- exact counting

namespace {

std::uint64_t exact_count(const Graph& g)
{
    const int n = g.size();
    if (n > kExactCountLimit)
        throw std::invalid_argument("count_great_partitions: exact mode supports n <= " +
                                    std::to_string(kExactCountLimit));
    const auto adj = adjacency_masks(g);
    const std::size_t subsets = std::size_t{1} << n;

    std::vector<std::uint8_t> clique(subsets, 0);
    std::vector<std::uint8_t> two_clique(subsets, 0);
    clique[0] = 1;
    two_clique[0] = 1;
    for (std::size_t s = 1; s < subsets; ++s) {
        const int v = std::countr_zero(s);
        const Mask rest = s & (s - 1);
        clique[s] = clique[rest] && (rest & ~adj[v]) == 0;
    }
    for (std::size_t s = 1; s < subsets; ++s) {
        const int v = std::countr_zero(s);
        const Mask a = (adj[v] & s) | (Mask{1} << v);
        const Mask b = s & ~a;
        bool ok = clique[a] && clique[b];
        for (Mask rest = b; ok && rest; rest &= rest - 1)
            if (adj[std::countr_zero(rest)] & a) ok = false;
        two_clique[s] = ok;
    }

    // pairs[W]: ordered splits of W into two cliques.
    std::vector<std::uint64_t> pairs(subsets, 0);
    for (std::size_t w = 0; w < subsets; ++w) {
        std::uint64_t total = 0;
        for (std::size_t c = w;; c = (c - 1) & w) {
            if (clique[c] && clique[w & ~c]) ++total;
            if (c == 0) break;
        }
        pairs[w] = total;
    }

    const Mask all = full_mask(n);
    std::uint64_t count = 0;
    for (std::size_t x4 = 0; x4 < subsets; ++x4) {
        if (!two_clique[x4]) continue;
        const Mask w = all & ~x4;
        for (Mask c = w;; c = (c - 1) & w) {
            if (clique[c]) count += pairs[w & ~c];
            if (c == 0) break;
        }
    }
    return count;
}

struct PartsKey {
    std::array<std::vector<std::uint64_t>, 4> words;
    auto operator<=>(const PartsKey&) const = default;
};

PartsKey key_of(const std::array<VertexSet, 4>& parts)
{
    PartsKey k;
    for (int i = 0; i < 4; ++i) k.words[i] = parts[i].words();
    return k;
}

}  // namespace

CandidateCount count_great_partitions_restricted(const Graph& g)
{
    CandidateCount out;
    std::optional<GreatPartition> base = reconstruct_by_common_neighbors(g);
    out.source = "common-neighbors";
    if (!base && g.size() <= 64) {
        base = find_great_partition(g);
        out.source = "search";
    }
    if (!base) {
        out.source = "none";
        return out;
    }

    const int n = g.size();
    std::vector<std::array<VertexSet, 4>> seeds{base->parts()};
    // Single-vertex relocations of the recovered partition.
    const auto base_parts = base->parts();
    for (Vertex v = 0; v < n; ++v) {
        int from = 0;
        while (!base_parts[from].contains(v)) ++from;
        for (int to = 0; to < 4; ++to) {
            if (to == from) continue;
            auto moved = base_parts;
            moved[from].erase(v);
            moved[to].insert(v);
            if (make_great_partition(g, moved)) seeds.push_back(moved);
        }
    }

    std::set<PartsKey> seen;
    for (const auto& parts : seeds) {
        std::array<int, 4> order{0, 1, 2, 3};
        do {
            std::array<VertexSet, 4> tuple{parts[order[0]], parts[order[1]], parts[order[2]], parts[order[3]]};
            auto key = key_of(tuple);
            if (seen.count(key)) continue;
            if (auto p = make_great_partition(g, tuple)) {
                seen.insert(std::move(key));
                out.partitions.push_back(*p);
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    out.count = out.partitions.size();
    return out;
}

std::uint64_t count_great_partitions(const Graph& g, CountMode mode)
{
    if (mode == CountMode::Exact) return exact_count(g);
    return count_great_partitions_restricted(g).count;
}

// -------------------------------------------------------------------------- P*

int pstar_threshold(int n) { return (13 * n + 31) / 32; }

PStarReport pstar_check(const Graph& g, const GreatPartition& p)
{
    if (auto issues = great_partition_violations(g, p); !issues.empty())
        throw std::invalid_argument("pstar_check: invalid great partition: " + issues.front());

    const int n = g.size();
    PStarReport report;
    report.n = n;
    report.threshold = pstar_threshold(n);
    const auto parts = p.parts();
    std::vector<int> part_of(n, 0);
    for (int k = 0; k < 4; ++k)
        for (Vertex v : parts[k].members()) part_of[v] = k;

    std::vector<VertexSet> nbr;
    nbr.reserve(n);
    for (Vertex v = 0; v < n; ++v) nbr.push_back(g.neighbors(v));

    auto fail = [&](char cond, std::vector<Vertex> witness, int detail) {
        report.failures.push_back({cond, std::move(witness), detail});
        ++report.failure_counts[cond - 'a'];
    };

    std::array<bool, 4> clique_part{};
    for (int k = 0; k < 4; ++k) clique_part[k] = is_clique(g, parts[k]);

    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const int common = (nbr[u] & nbr[v]).count();
            if (part_of[u] == part_of[v]) {
                if (clique_part[part_of[u]] && common < report.threshold) fail('a', {u, v}, common);
            } else if (common >= report.threshold) {
                fail('b', {u, v}, common);
            }
        }
    }

    // (c): {v, a, b} induces a path on three vertices for some a, b in the part.
    for (int k = 0; k < 4; ++k) {
        const VertexSet& part = parts[k];
        const auto members = part.members();
        for (Vertex v = 0; v < n; ++v) {
            if (part.contains(v)) continue;
            const VertexSet in = nbr[v] & part;
            const VertexSet out = part - nbr[v];
            bool found = false;
            for (Vertex a : in.members()) {
                if (nbr[a].intersects(out)) { found = true; break; }
                VertexSet non_adjacent = in - nbr[a];
                non_adjacent.erase(a);
                if (!non_adjacent.empty()) { found = true; break; }
            }
            if (!found) fail('c', {v}, k + 1);
        }
    }

    const VertexSet x4 = p.x4();
    if (is_clique(g, x4)) fail('d', x4.members(), 4);

    report.holds = report.failures.empty();
    return report;
}

std::optional<GreatPartition> reconstruct_by_common_neighbors(const Graph& g)
{
    const int n = g.size();
    const int threshold = pstar_threshold(n);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::vector<VertexSet> nbr;
    nbr.reserve(n);
    for (Vertex v = 0; v < n; ++v) nbr.push_back(g.neighbors(v));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if ((nbr[u] & nbr[v]).count() >= threshold) parent[find(u)] = find(v);

    std::vector<VertexSet> clusters;
    std::vector<int> cluster_of_root(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        const int root = find(v);
        if (cluster_of_root[root] < 0) {
            cluster_of_root[root] = static_cast<int>(clusters.size());
            clusters.emplace_back(n);
        }
        clusters[cluster_of_root[root]].insert(v);
    }

    std::array<VertexSet, 4> parts{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
    int used = 0;
    for (const auto& c : clusters) {  // ordered by lowest member
        if (c.count() < 2) {
            parts[3] |= c;
            continue;
        }
        if (used == 3) return std::nullopt;
        parts[used++] = c;
    }
    return make_great_partition(g, parts);
}

bool same_up_to_clique_permutation(const GreatPartition& a, const GreatPartition& b)
{
    if (a.x4() != b.x4()) return false;
    std::array<VertexSet, 3> lhs{a.x1, a.x2, a.x3};
    std::array<VertexSet, 3> rhs{b.x1, b.x2, b.x3};
    auto less = [](const VertexSet& x, const VertexSet& y) { return x.words() < y.words(); };
    std::sort(lhs.begin(), lhs.end(), less);
    std::sort(rhs.begin(), rhs.end(), less);
    return lhs == rhs;
}

}  // namespace strgraph
