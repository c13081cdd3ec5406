#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "strgraph/graph.hpp"

namespace strgraph {

/// Vertex layout of the 15-vertex base: hubs v_1..v_5 are 0..4, the connector
/// v_ij (i < j) is 5 + the index of {i, j} in lexicographic order.
namespace gadget_base {
inline constexpr int kHubs = 5;
inline constexpr int kVertices = 15;
Vertex connector(int i, int j);                 // hubs counted from 0
std::pair<int, int> connector_pair(Vertex c);   // inverse, i < j
bool is_optional_pair(Vertex u, Vertex v);      // connectors sharing exactly one index
std::vector<std::pair<Vertex, Vertex>> optional_pairs();  // 30 pairs, u < v, lexicographic
}  // namespace gadget_base

/// Mandatory edges v_ij - v_i, v_ij - v_j plus the given optional edges.
/// Throws std::invalid_argument on a pair outside the shared-index rule.
Graph build_gadget_base(const std::vector<std::pair<Vertex, Vertex>>& optional_edges = {});

/// Induced copy of a base graph: hubs[i] is v_{i+1}; connectors[k] is the
/// connector of the k-th pair in lexicographic order.
struct NonstringWitness {
    std::array<Vertex, 5> hubs{};
    std::array<Vertex, 10> connectors{};
};

std::vector<std::string> witness_violations(const Graph& g, const NonstringWitness& w);

/// Backtracking search for an induced witness. A witness proves g is not a
/// string graph; none proves nothing.
std::optional<NonstringWitness> find_nonstring_witness(const Graph& g);

/// Part order per type:
///   a: stable, stable (each at most 10)
///   b: clique x4 (each at most 5), single vertex
///   c: clique x3 (each at most 5), stable set of size 3
///   d: clique x3 (each at most 5), induced path on 3 vertices
///   e: clique x2 (each at most 5), point + clique of size 1..3, twice
/// Every part is nonempty.
struct PartitionCertificate {
    char type = 'a';
    std::vector<VertexSet> parts;
};

std::vector<std::string> certificate_violations(const Graph& g, const PartitionCertificate& c);

struct Gadget {
    Graph graph;
    std::vector<std::pair<Vertex, Vertex>> optional_edges;
    PartitionCertificate certificate;
    NonstringWitness witness;
};

class GadgetSearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Searches partitions of the base vertex set of the requested shape and adds
/// exactly the optional edges the shape needs. Deterministic.
Gadget find_gadget_for_type(char type);

nlohmann::json gadget_to_json(const Gadget& g);
Gadget gadget_from_json(const nlohmann::json& j);

/// Replays a gadget: graph matches its optional edges, witness and certificate valid.
std::vector<std::string> gadget_violations(const Gadget& g);

// ------------------------------------------------------------- positive side

struct GridRepresentation {
    int k = 0;
    /// cells[v]: grid cells (row * k + col) of the connected set for v.
    std::vector<std::vector<int>> cells;
    /// curves[v]: walk through the cells of v along a spanning tree.
    std::vector<std::vector<std::pair<int, int>>> curves;
};

/// Connected subgraphs of the k x k grid with intersection graph g.
/// Requires n <= 8 and 1 <= k <= 5. Failure proves nothing.
std::optional<GridRepresentation> grid_string_search(const Graph& g, int k, std::uint64_t seed = 1,
                                                     int attempts = 4000);

std::vector<std::string> grid_representation_violations(const Graph& g, const GridRepresentation& r);

// ----------------------------------------------------------------- U(k)

/// Vertices 0..k-1 are the elements; k + mask is the subset with that bitmask.
Graph build_universal(int k);

/// Disjoint A, B with |A| = k, |B| = 2^k and the traces N(b) & A, b in B,
/// exactly the subsets of A. Requires 1 <= k <= 3.
bool contains_universal(const Graph& g, int k);

}  // namespace strgraph
