#include "strgraph/graph.hpp"

#include <algorithm>
#include <bit>

namespace strgraph {

namespace {

int word_count(int universe) { return (universe + 63) / 64; }

}  // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0)
{
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe)
{
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask)
{
    if (universe > 64) throw std::invalid_argument("VertexSet::from_mask: universe > 64");
    VertexSet s(universe);
    if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
}

VertexSet VertexSet::full(int universe)
{
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
}

VertexSet VertexSet::from_vector(int universe, const std::vector<Vertex>& members)
{
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
}

bool VertexSet::contains(Vertex v) const
{
    if (v < 0 || v >= universe_) return false;
    return (words_[v >> 6] >> (v & 63)) & 1U;
}

void VertexSet::insert(Vertex v)
{
    if (v < 0 || v >= universe_) throw std::out_of_range("VertexSet::insert: vertex out of range");
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v)
{
    if (v < 0 || v >= universe_) throw std::out_of_range("VertexSet::erase: vertex out of range");
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::count() const
{
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w) {
            out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

Vertex VertexSet::first() const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    return -1;
}

std::uint64_t VertexSet::mask() const
{
    if (universe_ > 64) throw std::logic_error("VertexSet::mask: universe > 64");
    return words_.empty() ? 0 : words_[0];
}

void VertexSet::check_universe(const VertexSet& other) const
{
    if (universe_ != other.universe_) throw std::invalid_argument("VertexSet: universe mismatch");
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const
{
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n), words_per_row_(word_count(n))
{
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    bits_.assign(static_cast<std::size_t>(n) * words_per_row_, 0);
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n)
{
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_pair(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1U;
}

void Graph::set_edge(Vertex u, Vertex v, bool present)
{
    check_pair(u, v);
    const auto bu = std::uint64_t{1} << (u & 63);
    const auto bv = std::uint64_t{1} << (v & 63);
    if (present) {
        row(u)[v >> 6] |= bv;
        row(v)[u >> 6] |= bu;
    } else {
        row(u)[v >> 6] &= ~bv;
        row(v)[u >> 6] &= ~bu;
    }
}

void Graph::add_edge(Vertex u, Vertex v) { set_edge(u, v, true); }
void Graph::remove_edge(Vertex u, Vertex v) { set_edge(u, v, false); }

VertexSet Graph::neighbors(Vertex v) const
{
    if (v < 0 || v >= n_) throw std::out_of_range("Graph::neighbors: vertex out of range");
    VertexSet s(n_);
    std::copy(row(v), row(v) + words_per_row_, s.words_.begin());
    return s;
}

std::uint64_t Graph::row_mask(Vertex v) const
{
    if (n_ > 64) throw std::logic_error("Graph::row_mask: graph has more than 64 vertices");
    return row(v)[0];
}

int Graph::degree(Vertex v) const
{
    int d = 0;
    for (int i = 0; i < words_per_row_; ++i) d += std::popcount(row(v)[i]);
    return d;
}

long Graph::edge_count() const
{
    long total = 0;
    for (Vertex v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::permuted(const std::vector<Vertex>& perm) const
{
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("Graph::permuted: size mismatch");
    Graph h(n_);
    for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

Graph Graph::induced(const std::vector<Vertex>& vertices) const
{
    const int k = static_cast<int>(vertices.size());
    Graph h(k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (adjacent(vertices[a], vertices[b])) h.add_edge(a, b);
    return h;
}

Graph Graph::complement() const
{
    Graph h(n_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) h.add_edge(u, v);
    return h;
}

// ------------------------------------------------------------------- graph6

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::runtime_error("graph6: " + what + " at byte " + std::to_string(offset)), offset_(offset)
{
}

namespace {

constexpr int kBias = 63;

int graph6_value(std::string_view text, std::size_t pos)
{
    if (pos >= text.size()) throw Graph6Error("unexpected end of input", pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw Graph6Error("byte out of range [63,126]", pos);
    return c - kBias;
}

}  // namespace

Graph from_graph6(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    std::size_t base = 0;
    if (text.substr(0, header.size()) == header) base = header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    std::size_t pos = base;
    if (pos >= text.size()) throw Graph6Error("missing vertex count", pos);
    long n = 0;
    if (text[pos] != '~') {
        n = graph6_value(text, pos);
        pos += 1;
    } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
        for (int i = 0; i < 6; ++i) n = (n << 6) | graph6_value(text, pos + 2 + i);
        if (n <= 258047) throw Graph6Error("non-canonical 8-byte vertex count", pos);
        pos += 8;
    } else {
        for (int i = 0; i < 3; ++i) n = (n << 6) | graph6_value(text, pos + 1 + i);
        if (n <= 62) throw Graph6Error("non-canonical 4-byte vertex count", pos);
        pos += 4;
    }
    if (n > 1'000'000) throw Graph6Error("vertex count too large", base);

    Graph g(static_cast<int>(n));
    const long pairs = n * (n - 1) / 2;
    const long bytes = (pairs + 5) / 6;
    long bit = 0;
    for (long b = 0; b < bytes; ++b) {
        const std::size_t at = pos + static_cast<std::size_t>(b);
        const int value = graph6_value(text, at);
        for (int k = 5; k >= 0; --k, ++bit) {
            const bool set = (value >> k) & 1;
            if (bit >= pairs) {
                if (set) throw Graph6Error("nonzero padding bit", at);
                continue;
            }
            if (!set) continue;
            // Column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
            long j = 1;
            long start = 0;
            while (start + j <= bit) {
                start += j;
                ++j;
            }
            const long i = bit - start;
            g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    const std::size_t end = pos + static_cast<std::size_t>(bytes);
    if (end != text.size()) throw Graph6Error("trailing garbage", end);
    return g;
}

std::string to_graph6(const Graph& g)
{
    const long n = g.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

// ------------------------------------------------------------ set predicates

bool is_clique(const Graph& g, const VertexSet& s)
{
    for (Vertex v : s.members()) {
        VertexSet rest = s;
        rest.erase(v);
        if (!rest.is_subset_of(g.neighbors(v))) return false;
    }
    return true;
}

bool is_independent(const Graph& g, const VertexSet& s)
{
    for (Vertex v : s.members())
        if (s.intersects(g.neighbors(v))) return false;
    return true;
}

std::optional<CliqueSplit> is_two_clique_union(const Graph& g, const VertexSet& s)
{
    CliqueSplit split{VertexSet(g.size()), VertexSet(g.size())};
    const Vertex root = s.first();
    if (root < 0) return split;

    // G[s] must be a cluster graph with at most two components.
    split.a = g.neighbors(root) & s;
    split.a.insert(root);
    split.b = s - split.a;
    if (!is_clique(g, split.a) || !is_clique(g, split.b)) return std::nullopt;
    for (Vertex v : split.b.members())
        if (g.neighbors(v).intersects(split.a)) return std::nullopt;
    return split;
}

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v)
{
    if (u == v) throw std::invalid_argument("common_neighbors: u == v");
    VertexSet c = g.neighbors(u) & g.neighbors(v);
    return c;
}

int common_neighbor_count(const Graph& g, Vertex u, Vertex v)
{
    if (u == v) throw std::invalid_argument("common_neighbor_count: u == v");
    if (g.size() <= 64) return std::popcount(g.row_mask(u) & g.row_mask(v));
    return (g.neighbors(u) & g.neighbors(v)).count();
}

// -------------------------------------------------------------- enumeration

LabeledGraphRange::LabeledGraphRange(int n) : n_(n)
{
    if (n < 0) throw std::invalid_argument("enumerate_labeled: negative n");
    if (n > 6) throw std::invalid_argument("enumerate_labeled: exhaustive mode supports n <= 6");
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) pairs_.emplace_back(i, j);
}

Graph LabeledGraphRange::at(std::uint64_t mask) const
{
    Graph g(n_);
    for (std::size_t k = 0; k < pairs_.size(); ++k)
        if ((mask >> k) & 1U) g.add_edge(pairs_[k].first, pairs_[k].second);
    return g;
}

LabeledGraphRange enumerate_labeled(int n) { return LabeledGraphRange(n); }

// ------------------------------------------------------------- named graphs

Graph complete_graph(int n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n)
{
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star_graph(int leaves)
{
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph wheel_graph(int rim)
{
    Graph g(rim + 1);
    for (Vertex v = 1; v <= rim; ++v) {
        g.add_edge(0, v);
        g.add_edge(v, v % rim + 1);
    }
    return g;
}

}  // namespace strgraph
