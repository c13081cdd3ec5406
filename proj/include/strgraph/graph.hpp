#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strgraph {

using Vertex = int;

/// Dynamic bitset over a fixed vertex universe {0, ..., universe-1}.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<Vertex> members);

    static VertexSet from_mask(int universe, std::uint64_t mask);
    static VertexSet full(int universe);
    static VertexSet from_vector(int universe, const std::vector<Vertex>& members);

    int universe() const { return universe_; }
    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);
    int count() const;
    bool empty() const;
    std::vector<Vertex> members() const;
    /// Lowest member, or -1 when empty.
    Vertex first() const;

    /// Bitmask view; valid only when universe() <= 64.
    std::uint64_t mask() const;

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    friend class Graph;
    void check_universe(const VertexSet& other) const;

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Labeled simple undirected graph on {0, ..., n-1}.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    int size() const { return n_; }
    bool adjacent(Vertex u, Vertex v) const;
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    void set_edge(Vertex u, Vertex v, bool present);

    VertexSet neighbors(Vertex v) const;
    /// Adjacency row as a bitmask; requires size() <= 64.
    std::uint64_t row_mask(Vertex v) const;
    int degree(Vertex v) const;
    long edge_count() const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Graph with vertex v relabeled to perm[v].
    Graph permuted(const std::vector<Vertex>& perm) const;
    Graph induced(const std::vector<Vertex>& vertices) const;
    Graph complement() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_pair(Vertex u, Vertex v) const;
    std::uint64_t* row(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * words_per_row_; }
    const std::uint64_t* row(Vertex v) const { return bits_.data() + static_cast<std::size_t>(v) * words_per_row_; }

    int n_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Error raised by the graph6 decoder, carrying the offending byte offset.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

/// Split of a vertex set into two cliques with no edge between them.
struct CliqueSplit {
    VertexSet a;
    VertexSet b;
};

/// The part containing the lowest vertex of s is returned as `a`.
std::optional<CliqueSplit> is_two_clique_union(const Graph& g, const VertexSet& s);

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v);
int common_neighbor_count(const Graph& g, Vertex u, Vertex v);

/// All 2^{C(n,2)} labeled graphs on n <= 6 vertices, in edge-mask order.
/// Bit k of the mask is the k-th pair in graph6 column order (0,1),(0,2),(1,2),(0,3),...
class LabeledGraphRange {
public:
    explicit LabeledGraphRange(int n);
    int order() const { return n_; }
    std::uint64_t count() const { return std::uint64_t{1} << pairs_.size(); }
    Graph at(std::uint64_t mask) const;

    class iterator {
    public:
        using value_type = Graph;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(const LabeledGraphRange* range, std::uint64_t mask) : range_(range), mask_(mask) {}
        Graph operator*() const { return range_->at(mask_); }
        iterator& operator++() { ++mask_; return *this; }
        iterator operator++(int) { auto tmp = *this; ++mask_; return tmp; }
        bool operator==(const iterator& other) const { return mask_ == other.mask_; }

    private:
        const LabeledGraphRange* range_ = nullptr;
        std::uint64_t mask_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, count()}; }

private:
    int n_;
    std::vector<std::pair<Vertex, Vertex>> pairs_;
};

LabeledGraphRange enumerate_labeled(int n);

// Small named graphs used across tests and tools.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
/// Hub 0 joined to the cycle 1..k.
Graph wheel_graph(int rim);

}  // namespace strgraph
