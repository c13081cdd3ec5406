#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strgraph/graph.hpp"
#include "strgraph/great_partition.hpp"

namespace strgraph {

/// Branch-and-bound over the classes {X1, X2, X3, X4a, X4b}.
///
/// The next vertex is the unassigned one with the fewest feasible classes
/// (lowest index on ties). Empty interchangeable classes are only tried in
/// first-use order, which removes the 3! x 2 relabelings. Requires n <= 64.
std::optional<GreatPartition> find_great_partition(const Graph& g);
bool is_great(const Graph& g);

/// Partition into s cliques followed by r - s independent sets.
struct RSColoring {
    int r = 0;
    int s = 0;
    std::vector<VertexSet> classes;
};

std::optional<RSColoring> find_rs_coloring(const Graph& g, int r, int s);
std::vector<std::string> rs_coloring_violations(const Graph& g, const RSColoring& c);

enum class CountMode {
    /// Subset dynamic programming over all 4-part assignments; n <= 16.
    Exact,
    /// Orbits of partitions recovered from the graph plus single-vertex
    /// relocations of them; a lower bound on the exact count.
    CandidateRestricted,
};

inline constexpr int kExactCountLimit = 16;

/// Number of ordered tuples (X1, X2, X3, X4) that are great partitions of g.
/// The split of X4 is not a multiplicity.
std::uint64_t count_great_partitions(const Graph& g, CountMode mode = CountMode::Exact);

struct CandidateCount {
    std::uint64_t count = 0;
    /// "common-neighbors", "search", or "none".
    std::string source;
    std::vector<GreatPartition> partitions;
};

CandidateCount count_great_partitions_restricted(const Graph& g);

// ------------------------------------------------------------------ P* checks

/// ceil(13n/32), the common-neighbor threshold separating same-part pairs.
int pstar_threshold(int n);

struct PStarFailure {
    char condition;  // 'a', 'b', 'c' or 'd'
    std::vector<Vertex> witness;
    /// Common-neighbor count for (a)/(b), part index 1..4 for (c).
    int detail = 0;
};

struct PStarReport {
    bool holds = true;
    int n = 0;
    int threshold = 0;
    std::vector<PStarFailure> failures;
    std::array<int, 4> failure_counts{};  // per condition a..d
};

/// Evaluates conditions (a)-(d); throws std::invalid_argument if p is not a
/// great partition of g.
PStarReport pstar_check(const Graph& g, const GreatPartition& p);

/// Clusters vertices by "at least ceil(13n/32) common neighbors", takes the
/// transitive closure, uses clusters of two or more vertices as X1..X3 and
/// the rest as X4, then validates.
std::optional<GreatPartition> reconstruct_by_common_neighbors(const Graph& g);

/// True if a and b are the same partition up to permuting X1..X3 (X4 fixed).
bool same_up_to_clique_permutation(const GreatPartition& a, const GreatPartition& b);

}  // namespace strgraph
