#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace strgraph {

/// Result of one desk-scale experiment. Contains no timing, so the JSON and
/// text forms are identical across runs with the same parameters.
struct ExperimentReport {
    std::string id;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json stats = nlohmann::json::object();
    std::string expectation;
    bool pass = true;
    std::string note;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

inline constexpr int kExactCanonicalLimit = 6;

/// Labeled great graphs on n <= 6 vertices, by the partition solver.
std::uint64_t count_canonical_exact(int n, int jobs = 1);

/// Labeled graphs on n <= 6 vertices admitting a valid assignment to
/// {X1, X2, X3, X4a, X4b}, found by trying all 5^n assignments.
std::uint64_t count_canonical_brute_force(int n);

/// Cross pairs of the balanced 4-clique partition: C(n,2) - sum C(s_i, 2).
long speed_m_star(int n);

/// ceil(3 C(n,2) / 4).
long speed_three_quarters(int n);

ExperimentReport canonical_count_report(int n, int jobs = 1);

/// Exact mode (n <= 6): count >= 2^{m*}. Analytic mode otherwise.
ExperimentReport speed_lower_bound_check(int n, int jobs = 1);

/// Candidate-restricted great-partition counts of random balanced great graphs.
ExperimentReport great_partition_ratio_experiment(int n, int samples, std::uint64_t seed, int jobs = 1);

/// P* satisfaction and common-neighbor means on random balanced great graphs,
/// checked against the planted partition.
ExperimentReport pstar_statistics(int n, int samples, std::uint64_t seed, int jobs = 1);

/// Statement attached to every report.
extern const char* const kNonReproducibility;

}  // namespace strgraph
