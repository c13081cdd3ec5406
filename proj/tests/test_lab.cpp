#include <doctest.h>

#include <cmath>

#include "strgraph/lab.hpp"
#include "strgraph/partition.hpp"
#include "strgraph/rng.hpp"

using namespace strgraph;

TEST_CASE("small canonical counts")
{
    CHECK(count_canonical_exact(1) == 1);
    CHECK(count_canonical_exact(3) == 8);
    CHECK(count_canonical_exact(4) == 64);
    CHECK(count_canonical_exact(5) == 1024);
    CHECK_THROWS_AS(count_canonical_exact(7), std::invalid_argument);
}

TEST_CASE("solver count agrees with brute-force assignment count")
{
    for (int n = 1; n <= 6; ++n) CHECK(count_canonical_exact(n) == count_canonical_brute_force(n));
}

TEST_CASE("n = 6 count lies between the clique-partition bound and all graphs")
{
    const auto count = count_canonical_exact(6, 4);
    CHECK(count >= (1u << 13));
    CHECK(count < (1u << 15));
    CHECK(count == count_canonical_exact(6, 1));
    const auto r = canonical_count_report(6, 2);
    CHECK(r.pass);
    CHECK(r.stats["canonical"] == count);
}

TEST_CASE("speed bound arithmetic")
{
    CHECK(speed_m_star(4) == 6);
    CHECK(speed_m_star(6) == 13);
    CHECK(speed_m_star(8) == 24);
    CHECK(speed_three_quarters(8) == 21);
    for (int n = 4; n <= 200; ++n) {
        // Direct count of cross pairs for the balanced sizes.
        const auto sizes = balanced_sizes(n);
        long cross = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) cross += static_cast<long>(sizes[a]) * sizes[b];
        CHECK(speed_m_star(n) == cross);
        CHECK(speed_m_star(n) >= speed_three_quarters(n));
    }
    const auto exact = speed_lower_bound_check(6);
    CHECK(exact.params["mode"] == "exact");
    CHECK(exact.stats["m_star"] == 13);
    CHECK(exact.pass);
    const auto analytic = speed_lower_bound_check(8);
    CHECK(analytic.params["mode"] == "analytic");
    CHECK(analytic.stats["m_star"] == 24);
    CHECK(analytic.stats["three_quarters_pairs"] == 21);
    CHECK(analytic.pass);
}

TEST_CASE("ratio experiment")
{
    const auto r = great_partition_ratio_experiment(32, 20, 11, 2);
    CHECK(r.stats["fraction_below_6"] == 0.0);
    CHECK(r.params["samples"] == 20);
    CHECK(r.to_json().dump() == great_partition_ratio_experiment(32, 20, 11, 1).to_json().dump());
    CHECK(r.to_json().dump() != great_partition_ratio_experiment(32, 20, 12, 1).to_json().dump());
    CHECK_THROWS_AS(great_partition_ratio_experiment(32, 0, 1), std::invalid_argument);
}

TEST_CASE("P* statistics means")
{
    const int n = 64;
    const auto r = pstar_statistics(n, 10, 5, 3);
    const double band = 3 * std::sqrt(static_cast<double>(n));
    CHECK(std::abs(r.stats["same_part_mean"].get<double>() - 7.0 * n / 16) <= band);
    CHECK(std::abs(r.stats["cross_part_mean"].get<double>() - 3.0 * n / 8) <= band);
    CHECK(r.stats["same_part_ok"] == true);
    CHECK(r.stats["cross_part_ok"] == true);
    CHECK(r.params["threshold"] == pstar_threshold(n));
    CHECK(r.to_text() == pstar_statistics(n, 10, 5, 1).to_text());
    CHECK(r.to_text().find("note: ") != std::string::npos);
}

TEST_CASE("completing the parts of a valid partition keeps it valid")
{
    Rng rng(21);
    int checked = 0;
    while (checked < 100) {
        const int n = 4 + static_cast<int>(rng.below(9));
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.coin()) g.add_edge(u, v);
        const auto p = find_great_partition(g);
        if (!p) continue;
        ++checked;
        Graph h = g;
        for (const auto* part : {&p->x1, &p->x2, &p->x3, &p->x4a, &p->x4b}) {
            const auto m = part->members();
            for (std::size_t a = 0; a < m.size(); ++a)
                for (std::size_t b = a + 1; b < m.size(); ++b) h.add_edge(m[a], m[b]);
        }
        CHECK(is_valid_great_partition(h, *p));
        CHECK(is_great(h));
    }
}
