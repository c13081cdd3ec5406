#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "strgraph/graph.hpp"

namespace strgraph {

struct Point {
    double x = 0;
    double y = 0;
};

/// Combinatorial embedding: rotation[v] lists the neighbors of v in
/// counterclockwise order. Faces are traced with the face on the left of each
/// dart, so inner faces come out counterclockwise.
struct PlanarEmbedding {
    Graph graph;
    std::vector<std::vector<Vertex>> rotation;
    std::vector<Vertex> outer_face;

    /// Closed walks, one per face, as vertex sequences.
    std::vector<std::vector<Vertex>> faces() const;
};

class EmbeddingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Validates a rotation system (each list a permutation of the neighbors,
/// Euler's formula over traced faces) and picks the longest face as outer.
PlanarEmbedding make_embedding(const Graph& g, std::vector<std::vector<Vertex>> rotation);

/// Embeds a connected planar graph; throws EmbeddingError otherwise.
PlanarEmbedding embed(const Graph& g);

/// K5 minus the edge 3-4: triangle 0 1 2 with 3 inside and 4 outside.
PlanarEmbedding k5_minus_e_embedding();
Graph k5_minus_e();

struct CirclePacking {
    std::vector<Point> centers;
    std::vector<double> radii;
    /// One entry per edge (i < j): the point on segment o_i o_j at distance r_i from o_i.
    struct Tangency {
        Vertex i;
        Vertex j;
        Point t;
    };
    std::vector<Tangency> tangency;
    /// Largest |angle sum - 2 pi| over interior vertices when iteration stopped.
    double angle_residual = 0;
    int iterations = 0;

    int size() const { return static_cast<int>(radii.size()); }
};

class PackingError : public std::runtime_error {
public:
    PackingError(const std::string& what, double residual) : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

struct PackOptions {
    double tol = 1e-10;
    int max_sweeps = 1'000'000;
};

/// Tangency packing of the embedded graph, minimum radius normalized to 1.
CirclePacking pack(const PlanarEmbedding& e, const PackOptions& options = {});

/// Minimum angle at a center between cyclically consecutive tangency points.
/// Circles with one tangency are skipped; if every circle has one, returns 1.
double min_gap_angle(const CirclePacking& p);

/// epsilon = min(min_gap_angle, 1).
double construction_epsilon(const CirclePacking& p);

struct PackingIssue {
    std::string kind;  // "tangency", "separation", "tangency-point", "radius", "shape"
    Vertex i = -1;
    Vertex j = -1;
    double value = 0;
};

struct PackingReport {
    bool ok = true;
    double max_tangency_residual = 0;
    double min_nonedge_margin = 0;
    std::vector<PackingIssue> issues;
};

/// Re-checks every packing invariant from raw coordinates. Non-edges must be
/// separated by more than margin (default 10 * tol) and every radius must be
/// at least min_radius - tol.
PackingReport check_packing(const PlanarEmbedding& e, const CirclePacking& p, double tol, double margin = -1,
                            double min_radius = 1.0);

CirclePacking scaled(const CirclePacking& p, double factor);

nlohmann::json packing_to_json(const CirclePacking& p);

}  // namespace strgraph
