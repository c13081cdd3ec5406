#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "strgraph/exact.hpp"
#include "strgraph/graph.hpp"
#include "strgraph/great_partition.hpp"
#include "strgraph/koebe.hpp"

namespace strgraph {

/// Template H blown up: vertex i becomes a clique of sizes[i] vertices, and
/// each template edge ij carries a sizes[i] x sizes[j] cross adjacency.
struct BlowupSpec {
    PlanarEmbedding H;
    std::vector<int> sizes;
    struct Block {
        Vertex i;  // i < j, a template edge
        Vertex j;
        std::vector<std::vector<bool>> adj;  // adj[m][M]
    };
    std::vector<Block> blocks;
    /// labels[i][m] = vertex of the blown-up graph; default is consecutive.
    std::vector<std::vector<Vertex>> labels;

    static BlowupSpec make(PlanarEmbedding h, std::vector<int> sizes);
    void set_cross(Vertex i, int m, Vertex j, int big_m, bool present);
    bool cross(Vertex i, int m, Vertex j, int big_m) const;
    int vertex_count() const;
};

Graph blowup_graph(const BlowupSpec& spec);

/// Sizes uniform in [1, max_size], each cross pair present with probability 1/2.
BlowupSpec random_blowup_spec(const PlanarEmbedding& h, int max_size, std::uint64_t seed);

struct ConvexSet {
    Vertex template_vertex = -1;
    int index = 0;  // m, counted from 1
    std::vector<QPoint> points;
    std::vector<QPoint> hull;
};

struct ConvexRepresentation {
    /// Indexed by vertex of the represented graph.
    std::vector<ConvexSet> sets;
    double epsilon = 0;
    Rational delta;
    int shrink_steps = 0;
    std::vector<QPoint> centers;
    std::vector<Rational> radii;

    int size() const { return static_cast<int>(sets.size()); }
};

class BuildError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BuildOptions {
    /// Denominator bound used when rationalizing centers, radii and arc points.
    long max_denominator = 1L << 40;
    int max_shrinks = 24;
    /// Extra factor on delta = epsilon^2 / 200; values in (0, 1] only shrink it.
    double delta_scale = 1.0;
    bool verify = true;
};

/// Places the points p_ij(A) on arcs of the packed template and takes hulls.
/// With verify set, halves delta until verify_representation passes.
ConvexRepresentation build_representation(const BlowupSpec& spec, const CirclePacking& p,
                                          const BuildOptions& options = {});

struct VerifyReport {
    bool ok = true;
    std::vector<std::pair<Vertex, Vertex>> missing;  // edge of g, hulls disjoint
    std::vector<std::pair<Vertex, Vertex>> extra;    // non-edge of g, hulls meet
    std::string error;
};

/// Exact pairwise hull intersection compared against g.
VerifyReport verify_representation(const ConvexRepresentation& rep, const Graph& g);

/// Intersection graph of the hulls.
Graph intersection_graph(const ConvexRepresentation& rep);

struct CanonicalRepresentation {
    GreatPartition partition;
    BlowupSpec spec;
    CirclePacking packing;
    ConvexRepresentation rep;
};

/// Maps X1, X2, X3 to template vertices 0, 1, 2 of K5 - e and X4a, X4b to the
/// non-adjacent pair 3, 4. Returns none iff g is not great; throws BuildError
/// if a great graph fails to build or verify.
std::optional<CanonicalRepresentation> represent_canonical(const Graph& g, const BuildOptions& options = {});

struct StringRepresentation {
    std::vector<std::vector<QPoint>> curves;
    /// crossings[u][v]: connected components of curve u meet curve v.
    std::vector<std::vector<int>> crossings;
    int max_crossings = 0;
};

class StringError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// x-monotone polylines through pairwise witness points; throws StringError
/// if the bound 2n or the intersection pattern fails.
StringRepresentation strings_from_convex(const ConvexRepresentation& rep);

/// Connected components of the intersection of two polylines.
int polyline_contacts(const std::vector<QPoint>& a, const std::vector<QPoint>& b);

Graph string_graph(const StringRepresentation& s);

nlohmann::json representation_to_json(const ConvexRepresentation& rep);
ConvexRepresentation representation_from_json(const nlohmann::json& j);
nlohmann::json strings_to_json(const StringRepresentation& s);

}  // namespace strgraph
