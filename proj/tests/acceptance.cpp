// One PASS/FAIL line per acceptance criterion.
//
// Usage: acceptance [--only N] [--expect-red N,M,...] [--jobs J]
// Exit status is 0 iff the set of failing criteria equals the --expect-red set.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "strgraph/convex_rep.hpp"
#include "strgraph/gadgets.hpp"
#include "strgraph/koebe.hpp"
#include "strgraph/lab.hpp"
#include "strgraph/partition.hpp"
#include "strgraph/rng.hpp"

using namespace strgraph;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// Uniform composition of n into four nonnegative parts.
std::array<int, 4> random_sizes(int n, Rng& rng)
{
    std::array<int, 3> cut{};
    for (auto& c : cut) c = static_cast<int>(rng.below(n + 1));
    std::sort(cut.begin(), cut.end());
    return {cut[0], cut[1] - cut[0], cut[2] - cut[1], n - cut[2]};
}

Outcome criterion1()
{
    Rng rng(101);
    double worst = 0;
    int failures = 0;
    const auto t0 = Clock::now();
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng.below(24));
        const auto [g, planted] = random_great_graph(n, random_sizes(n, rng), mix_seed(101, t));
        const auto ti = Clock::now();
        bool ok = false;
        try {
            const auto rep = represent_canonical(g);
            ok = rep && verify_representation(rep->rep, g).ok;
        } catch (const std::exception&) {
        }
        const double dt = seconds_since(ti);
        worst = std::max(worst, dt);
        if (!ok || dt >= 5.0) ++failures;
    }
    const double total = seconds_since(t0);
    return {failures == 0 && total < 600,
            fmt("200 great graphs n<=24: %d failures, max %.3fs/instance (<5s), total %.1fs (<600s)", failures,
                worst, total)};
}

Outcome criterion2()
{
    const std::array<std::pair<const char*, PlanarEmbedding>, 4> tpls = {{
        {"K3", embed(complete_graph(3))},
        {"K4", embed(complete_graph(4))},
        {"K5-e", k5_minus_e_embedding()},
        {"W4", embed(wheel_graph(4))},
    }};
    std::vector<CirclePacking> packings;
    for (const auto& [name, e] : tpls) packings.push_back(pack(e));
    Rng rng(202);
    int mismatches = 0;
    for (int t = 0; t < 50; ++t) {
        const auto k = rng.below(tpls.size());
        const auto spec = random_blowup_spec(tpls[k].second, 4, mix_seed(202, t));
        try {
            const auto rep = build_representation(spec, packings[k]);
            if (!verify_representation(rep, blowup_graph(spec)).ok) ++mismatches;
        } catch (const std::exception&) {
            ++mismatches;
        }
    }
    return {mismatches == 0, fmt("50 blow-ups over K3/K4/K5-e/W4, n_i<=4: %d mismatches", mismatches)};
}

Outcome criterion3()
{
    const auto e = k5_minus_e_embedding();
    const auto p = pack(e);
    const auto report = check_packing(e, p, 1e-10);
    const bool k5_ok = report.ok && report.max_tangency_residual < 1e-10 && report.min_nonedge_margin > 0;

    // Equal radii, centres at pairwise distance 2.
    const auto k3 = pack(embed(complete_graph(3)));
    double k3_err = 0;
    for (int v = 0; v < 3; ++v) k3_err = std::max(k3_err, std::abs(k3.radii[v] - 1.0));
    for (int u = 0; u < 3; ++u)
        for (int v = u + 1; v < 3; ++v)
            k3_err = std::max(k3_err, std::abs(std::hypot(k3.centers[u].x - k3.centers[v].x,
                                                          k3.centers[u].y - k3.centers[v].y) - 2.0));
    return {k5_ok && k3_err < 1e-9,
            fmt("K5-e residual %.2e (<1e-10), non-edge margin %.3e (>0); K3 closed-form error %.2e (<1e-9)",
                report.max_tangency_residual, report.min_nonedge_margin, k3_err)};
}

Outcome criterion4()
{
    Rng rng(404);
    int verified = 0, violations = 0, worst_excess = -1 << 30;
    for (int t = 0; verified < 50 && t < 500; ++t) {
        const int n = 2 + static_cast<int>(rng.below(23));
        const auto [g, planted] = random_great_graph(n, random_sizes(n, rng), mix_seed(404, t));
        const auto rep = represent_canonical(g);
        if (!rep || !verify_representation(rep->rep, g).ok) continue;
        ++verified;
        const auto s = strings_from_convex(rep->rep);
        bool ok = string_graph(s) == g;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const int c = polyline_contacts(s.curves[u], s.curves[v]);
                worst_excess = std::max(worst_excess, c - 2 * n);
                if (c > 2 * n) ok = false;
            }
        if (!ok) ++violations;
    }
    return {verified == 50 && violations == 0,
            fmt("%d verified representations: %d with a pair crossing more than 2n times (max crossings - 2n = %d)",
                verified, violations, worst_excess)};
}

Outcome criterion5(const std::filesystem::path& assets)
{
    int found_ok = 0, golden_ok = 0;
    for (char type : {'a', 'b', 'c', 'd', 'e'}) {
        try {
            const auto gadget = find_gadget_for_type(type);
            if (gadget.certificate.type == type && gadget_violations(gadget).empty() &&
                find_nonstring_witness(gadget.graph))
                ++found_ok;
        } catch (const std::exception&) {
        }
    }
    const auto t0 = Clock::now();
    for (char type : {'a', 'b', 'c', 'd', 'e'}) {
        try {
            const auto base = assets / "gadgets" / (std::string("type_") + type);
            std::ifstream js(base.string() + ".json");
            const auto gadget = gadget_from_json(nlohmann::json::parse(js));
            std::ifstream g6f(base.string() + ".g6");
            std::string g6;
            g6f >> g6;
            const Graph g = from_graph6(g6);
            if (gadget.certificate.type == type && gadget_violations(gadget).empty() && g == gadget.graph &&
                find_nonstring_witness(g) && certificate_violations(g, gadget.certificate).empty())
                ++golden_ok;
        } catch (const std::exception&) {
        }
    }
    const double dt = seconds_since(t0);
    return {found_ok == 5 && golden_ok == 5 && dt < 60,
            fmt("gadget find: %d/5 types with valid witness and certificate; golden files: %d/5 re-validated in "
                "%.3fs (<60s)",
                found_ok, golden_ok, dt)};
}

// 5^6 labelings over a per-graph table of clique subsets.
bool brute_great6(const Graph& g)
{
    std::array<bool, 64> clique{};
    for (int s = 0; s < 64; ++s) {
        bool ok = true;
        for (int u = 0; u < 6 && ok; ++u)
            for (int v = u + 1; v < 6 && ok; ++v)
                if ((s >> u & 1) && (s >> v & 1) && !g.adjacent(u, v)) ok = false;
        clique[s] = ok;
    }
    for (int code = 0; code < 15625; ++code) {
        int c = code;
        std::array<int, 5> cls{};
        for (int v = 0; v < 6; ++v, c /= 5) cls[c % 5] |= 1 << v;
        bool ok = clique[cls[0]] && clique[cls[1]] && clique[cls[2]] && clique[cls[3]] && clique[cls[4]];
        for (int u = 0; u < 6 && ok; ++u)
            for (int v = 0; v < 6 && ok; ++v)
                if ((cls[3] >> u & 1) && (cls[4] >> v & 1) && g.adjacent(u, v)) ok = false;
        if (ok) return true;
    }
    return false;
}

Outcome criterion6(int jobs)
{
    const auto t0 = Clock::now();
    const auto range = enumerate_labeled(6);
    const std::uint64_t total = range.count();
    std::atomic<std::uint64_t> next{0}, disagreements{0}, invalid{0}, great{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            for (std::uint64_t m; (m = next.fetch_add(1)) < total;) {
                const Graph g = range.at(m);
                const auto p = find_great_partition(g);
                if (p.has_value() != brute_great6(g)) ++disagreements;
                if (p && !is_valid_great_partition(g, *p)) ++invalid;
                if (p) ++great;
            }
        });
    for (auto& t : pool) t.join();
    const double dt = seconds_since(t0);
    const auto canon = count_canonical_exact(6, jobs);
    const bool bounds = canon >= (1u << 13) && canon < (1u << 15);
    return {disagreements == 0 && invalid == 0 && dt < 300 && bounds && canon == great,
            fmt("all %llu graphs on 6 vertices: %llu disagreements with 5^6 brute force, %llu invalid partitions, "
                "%.1fs (<300s); |Canon_6| = %llu in [2^13, 2^15)",
                static_cast<unsigned long long>(total), static_cast<unsigned long long>(disagreements.load()),
                static_cast<unsigned long long>(invalid.load()), dt, static_cast<unsigned long long>(canon))};
}

Outcome criterion7(int jobs)
{
    const auto r = great_partition_ratio_experiment(64, 200, 7, jobs);
    const double f = r.stats["fraction_exactly_6"].get<double>();
    return {f >= 0.90, fmt("n=64, 200 seeds: fraction with candidate-restricted count exactly 6 = %.3f (>=0.90)", f)};
}

Outcome criterion8(int jobs)
{
    const int n = 128;
    const auto r = pstar_statistics(n, 100, 8, jobs);
    const double holds = r.stats["fraction_pstar_holds"].get<double>();
    const double same = r.stats["same_part_mean"].get<double>();
    const double cross = r.stats["cross_part_mean"].get<double>();
    const double band = 3 * std::sqrt(static_cast<double>(n));
    const bool same_ok = std::abs(same - 7.0 * n / 16) <= band;
    const bool cross_ok = std::abs(cross - 3.0 * n / 8) <= band;
    return {holds >= 0.95 && same_ok && cross_ok,
            fmt("n=128, 100 seeds: P* holds in %.2f (>=0.95); same-part mean %.2f (56 +- %.2f: %s); cross-part "
                "mean %.2f (48 +- %.2f: %s)",
                holds, same, band, same_ok ? "ok" : "out", cross, band, cross_ok ? "ok" : "out")};
}

Outcome criterion9()
{
    const std::string statement = kNonReproducibility;
    return {!statement.empty(), "non-reproducibility: " + statement};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria"};
    int only = 0;
    std::vector<int> expect_red;
    int jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string assets = STRGRAPH_ASSETS_DIR;
    app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 9));
    app.add_option("--expect-red", expect_red, "criteria known to fail")->delimiter(',');
    app.add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    app.add_option("--assets", assets);
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::function<Outcome()>> criteria = {
        criterion1,
        criterion2,
        criterion3,
        criterion4,
        [&] { return criterion5(assets); },
        [&] { return criterion6(jobs); },
        [&] { return criterion7(jobs); },
        [&] { return criterion8(jobs); },
        criterion9,
    };
    std::set<int> red;
    for (int i = 1; i <= 9; ++i) {
        if (only && only != i) continue;
        Outcome o;
        try {
            o = criteria[i - 1]();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        if (!o.pass) red.insert(i);
        std::printf("criterion %d: %s  %s\n", i, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    std::set<int> expected;
    for (int i : expect_red)
        if (!only || only == i) expected.insert(i);
    return red == expected ? 0 : 1;
}
