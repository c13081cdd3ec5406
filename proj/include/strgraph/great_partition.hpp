#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "strgraph/graph.hpp"

namespace strgraph {

/// Ordered partition (X1, X2, X3, X4) with X4 carried as its two-clique split.
/// Any part may be empty.
struct GreatPartition {
    VertexSet x1, x2, x3, x4a, x4b;

    explicit GreatPartition(int n = 0) : x1(n), x2(n), x3(n), x4a(n), x4b(n) {}

    int universe() const { return x1.universe(); }
    VertexSet x4() const { return x4a | x4b; }
    /// Parts in order X1, X2, X3, X4.
    std::array<VertexSet, 4> parts() const { return {x1, x2, x3, x4()}; }
    std::array<int, 4> sizes() const;

    friend bool operator==(const GreatPartition&, const GreatPartition&) = default;
};

/// Structural problems of a candidate partition; empty means valid.
std::vector<std::string> great_partition_violations(const Graph& g, const GreatPartition& p);
bool is_valid_great_partition(const Graph& g, const GreatPartition& p);

/// Builds a GreatPartition from four parts, computing the X4 split; nullopt if
/// the parts do not form a great partition of g.
std::optional<GreatPartition> make_great_partition(const Graph& g, const std::array<VertexSet, 4>& parts);

/// Part sizes differing by at most one, larger parts first.
std::array<int, 4> balanced_sizes(int n);

/// "Almost equal size" check used by experiments: max - min <= slack.
bool is_balanced(const GreatPartition& p, int slack);

nlohmann::json partition_to_json(const GreatPartition& p);
GreatPartition partition_from_json(const nlohmann::json& j, int n);

/// Random graph with a planted great partition.
///
/// Labels are a uniform shuffle; X1..X3 are complete, X4 is split uniformly
/// among its 2^{|X4|-1} unordered two-clique splits, and every pair in
/// different parts is an independent fair coin.
std::pair<Graph, GreatPartition> random_great_graph(int n, const std::array<int, 4>& sizes, std::uint64_t seed);

}  // namespace strgraph
