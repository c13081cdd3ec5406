#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "strgraph/convex_rep.hpp"
#include "strgraph/gadgets.hpp"
#include "strgraph/graph.hpp"
#include "strgraph/koebe.hpp"
#include "strgraph/lab.hpp"
#include "strgraph/partition.hpp"
#include "strgraph/svg.hpp"

namespace strgraph::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::string read_source(Context& ctx, const std::string& path)
{
    std::stringstream buf;
    if (path == "-") {
        buf << ctx.in.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw UsageError("cannot read " + path);
        buf << f.rdbuf();
    }
    return buf.str();
}

std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

struct GraphInput {
    std::string path;
    std::string graph6;

    void attach(CLI::App* app)
    {
        app->add_option("--in", path, "graph6 file, - for stdin");
        app->add_option("--graph6", graph6, "graph6 string");
    }

    Graph load(Context& ctx) const
    {
        if (path.empty() == graph6.empty()) throw UsageError("give exactly one of --in and --graph6");
        std::string text = graph6.empty() ? read_source(ctx, path) : graph6;
        // First non-empty line.
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line))
            if (!trim(line).empty()) break;
        line = trim(line);
        if (line.empty()) throw UsageError("no graph6 data");
        return from_graph6(line);
    }
};

nlohmann::json load_json(Context& ctx, const std::string& path)
{
    try {
        return nlohmann::json::parse(read_source(ctx, path));
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void emit(Context& ctx, const nlohmann::json& j) { ctx.out << j.dump(2) << "\n"; }

void maybe_write(const std::string& path, const std::string& text)
{
    if (!path.empty()) write_text_file(path, text);
}

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("STRGRAPH_SEED")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && end != env) return v;
        throw UsageError("STRGRAPH_SEED must be an unsigned integer");
    }
    return 1;
}

nlohmann::json pairs_json(const std::vector<std::pair<Vertex, Vertex>>& pairs)
{
    nlohmann::json out = nlohmann::json::array();
    for (auto [u, v] : pairs) out.push_back({u, v});
    return out;
}

nlohmann::json pstar_json(const PStarReport& r)
{
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"condition", std::string(1, f.condition)}, {"witness", f.witness}, {"detail", f.detail}});
    return {{"holds", r.holds},
            {"n", r.n},
            {"threshold", r.threshold},
            {"failure_counts",
             {{"a", r.failure_counts[0]}, {"b", r.failure_counts[1]}, {"c", r.failure_counts[2]}, {"d", r.failure_counts[3]}}},
            {"failures", failures}};
}

std::vector<std::pair<Vertex, Vertex>> parse_pairs(const std::string& text)
{
    std::vector<std::pair<Vertex, Vertex>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw UsageError("pair '" + item + "' must look like u-v");
        try {
            out.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
        } catch (const std::exception&) {
            throw UsageError("pair '" + item + "' must look like u-v");
        }
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Context ctx{in, out, err};
    CLI::App app{"String graph toolkit: great partitions, circle packings, convex and string representations, "
                 "non-string gadgets and desk-scale experiments."};
    app.name("strgraph");
    app.require_subcommand(1);
    std::function<int()> action;

    std::uint64_t seed = 0;
    bool seed_given = false;
    int jobs = 1;
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option_function<std::uint64_t>(
            "--seed", [&](std::uint64_t s) { seed = s, seed_given = true; }, "random seed (default $STRGRAPH_SEED or 1)");
    };
    auto add_jobs = [&](CLI::App* sub) { sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber); };
    auto resolved_seed = [&] { return seed_given ? seed : default_seed(); };

    // ---------------------------------------------------------- partition
    auto* partition = app.add_subcommand("partition", "great partitions");
    partition->require_subcommand(1);
    GraphInput part_in;
    auto* pfind = partition->add_subcommand("find", "find a great partition");
    part_in.attach(pfind);
    pfind->callback([&] {
        action = [&] {
            const Graph g = part_in.load(ctx);
            const auto p = find_great_partition(g);
            if (!p) {
                emit(ctx, {{"great", false}, {"n", g.size()}});
                return int(kNegative);
            }
            emit(ctx, {{"great", true}, {"n", g.size()}, {"partition", partition_to_json(*p)}});
            return int(kOk);
        };
    });
    auto* pcount = partition->add_subcommand("count", "count great partitions");
    GraphInput count_in;
    count_in.attach(pcount);
    std::string count_mode = "auto";
    pcount->add_option("--mode", count_mode, "exact, candidate or auto")->check(CLI::IsMember({"exact", "candidate", "auto"}));
    pcount->callback([&] {
        action = [&] {
            const Graph g = count_in.load(ctx);
            const bool exact = count_mode == "exact" || (count_mode == "auto" && g.size() <= kExactCountLimit);
            if (exact && g.size() > kExactCountLimit)
                throw UsageError("exact counting needs n <= " + std::to_string(kExactCountLimit));
            nlohmann::json j{{"n", g.size()}, {"mode", exact ? "exact" : "candidate-restricted"}};
            std::uint64_t count = 0;
            if (exact) {
                count = count_great_partitions(g, CountMode::Exact);
            } else {
                const auto c = count_great_partitions_restricted(g);
                count = c.count;
                j["candidate_source"] = c.source;
            }
            j["count"] = count;
            emit(ctx, j);
            return count > 0 ? int(kOk) : int(kNegative);
        };
    });

    // -------------------------------------------------------------- pstar
    auto* pstar = app.add_subcommand("pstar", "P* conditions");
    pstar->require_subcommand(1);
    auto* pcheck = pstar->add_subcommand("check", "check P* for a partition (found if not given)");
    GraphInput pstar_in;
    pstar_in.attach(pcheck);
    std::string pstar_partition;
    pcheck->add_option("--partition", pstar_partition, "partition JSON file");
    pcheck->callback([&] {
        action = [&] {
            const Graph g = pstar_in.load(ctx);
            GreatPartition p;
            if (!pstar_partition.empty()) {
                auto j = load_json(ctx, pstar_partition);
                if (j.contains("partition")) j = j["partition"];
                try {
                    p = partition_from_json(j, g.size());
                } catch (const std::exception& e) {
                    throw UsageError(std::string("bad partition: ") + e.what());
                }
                if (!is_valid_great_partition(g, p)) throw UsageError("partition is not a great partition of the graph");
            } else {
                auto found = find_great_partition(g);
                if (!found) {
                    emit(ctx, {{"great", false}});
                    return int(kNegative);
                }
                p = *found;
            }
            const auto r = pstar_check(g, p);
            emit(ctx, pstar_json(r));
            return r.holds ? int(kOk) : int(kNegative);
        };
    });

    // --------------------------------------------------------------- pack
    auto* packcmd = app.add_subcommand("pack", "circle packing of a planar graph");
    GraphInput pack_in;
    pack_in.attach(packcmd);
    std::string pack_svg;
    double pack_tol = 1e-10;
    packcmd->add_option("--svg", pack_svg, "write an SVG picture");
    packcmd->add_option("--tol", pack_tol, "angle-sum tolerance")->check(CLI::PositiveNumber);
    packcmd->callback([&] {
        action = [&] {
            const Graph g = pack_in.load(ctx);
            PlanarEmbedding e;
            try {
                e = embed(g);
            } catch (const EmbeddingError& ex) {
                emit(ctx, {{"planar", false}, {"reason", ex.what()}});
                return int(kNegative);
            }
            PackOptions options;
            options.tol = pack_tol;
            const auto p = pack(e, options);
            const auto report = check_packing(e, p, std::max(pack_tol, 1e-9));
            auto j = packing_to_json(p);
            j["check"] = {{"ok", report.ok},
                          {"max_tangency_residual", report.max_tangency_residual},
                          {"min_nonedge_margin", report.min_nonedge_margin}};
            emit(ctx, j);
            maybe_write(pack_svg, svg_packing(p));
            return report.ok ? int(kOk) : int(kDefect);
        };
    });

    // ---------------------------------------------------------- represent
    auto* represent = app.add_subcommand("represent", "convex representation of a great graph");
    GraphInput rep_in;
    rep_in.attach(represent);
    std::string rep_svg, rep_out;
    represent->add_option("--svg", rep_svg, "write an SVG picture");
    represent->add_option("--out", rep_out, "also write the JSON to a file");
    represent->callback([&] {
        action = [&] {
            const Graph g = rep_in.load(ctx);
            const auto canon = represent_canonical(g);
            if (!canon) {
                emit(ctx, {{"great", false}});
                return int(kNegative);
            }
            auto j = representation_to_json(canon->rep);
            j["partition"] = partition_to_json(canon->partition);
            emit(ctx, j);
            maybe_write(rep_out, j.dump(2) + "\n");
            maybe_write(rep_svg, svg_representation(canon->rep));
            return int(kOk);
        };
    });

    // ------------------------------------------------------------- verify
    auto* verify = app.add_subcommand("verify", "exact check of a representation against a graph");
    GraphInput verify_in;
    verify_in.attach(verify);
    std::string verify_rep;
    verify->add_option("--rep", verify_rep, "representation JSON")->required();
    verify->callback([&] {
        action = [&] {
            const Graph g = verify_in.load(ctx);
            ConvexRepresentation rep;
            try {
                rep = representation_from_json(load_json(ctx, verify_rep));
            } catch (const UsageError&) {
                throw;
            } catch (const std::exception& e) {
                throw UsageError(std::string("bad representation: ") + e.what());
            }
            const auto r = verify_representation(rep, g);
            emit(ctx, {{"ok", r.ok}, {"missing", pairs_json(r.missing)}, {"extra", pairs_json(r.extra)}, {"error", r.error}});
            return r.ok ? int(kOk) : int(kNegative);
        };
    });

    // ------------------------------------------------------------ strings
    auto* strings = app.add_subcommand("strings", "polyline string representation");
    GraphInput strings_in;
    strings_in.attach(strings);
    std::string strings_rep, strings_svg;
    strings->add_option("--rep", strings_rep, "representation JSON (otherwise built from the graph)");
    strings->add_option("--svg", strings_svg, "write an SVG picture");
    strings->callback([&] {
        action = [&] {
            ConvexRepresentation rep;
            if (!strings_rep.empty()) {
                try {
                    rep = representation_from_json(load_json(ctx, strings_rep));
                } catch (const UsageError&) {
                    throw;
                } catch (const std::exception& e) {
                    throw UsageError(std::string("bad representation: ") + e.what());
                }
            } else {
                const Graph g = strings_in.load(ctx);
                auto canon = represent_canonical(g);
                if (!canon) {
                    emit(ctx, {{"great", false}});
                    return int(kNegative);
                }
                rep = std::move(canon->rep);
            }
            const auto s = strings_from_convex(rep);
            emit(ctx, strings_to_json(s));
            maybe_write(strings_svg, svg_strings(s));
            return int(kOk);
        };
    });

    // ------------------------------------------------------------- gadget
    auto* gadget = app.add_subcommand("gadget", "non-string gadgets");
    gadget->require_subcommand(1);
    auto* gbuild = gadget->add_subcommand("build", "base graph with optional edges");
    std::string optional_text;
    gbuild->add_option("--optional", optional_text, "optional edges as u-v,u-v (connector vertices 5..14)");
    gbuild->callback([&] {
        action = [&] {
            Graph g;
            const auto pairs = parse_pairs(optional_text);
            try {
                g = build_gadget_base(pairs);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            const auto w = find_nonstring_witness(g);
            if (!w) throw std::logic_error("base graph without a non-string witness");
            emit(ctx, {{"graph6", to_graph6(g)},
                       {"n", g.size()},
                       {"edges", g.edge_count()},
                       {"optional_edges", pairs_json(pairs)},
                       {"witness", {{"hubs", w->hubs}, {"connectors", w->connectors}}}});
            return int(kOk);
        };
    });
    auto* gfind = gadget->add_subcommand("find", "gadget with a partition certificate of a given type");
    std::string gadget_type;
    std::string gadget_out;
    gfind->add_option("--type", gadget_type, "a, b, c, d or e")->required()->check(CLI::IsMember({"a", "b", "c", "d", "e"}));
    gfind->add_option("--out", gadget_out, "also write the JSON to a file");
    gfind->callback([&] {
        action = [&] {
            const Gadget g = find_gadget_for_type(gadget_type[0]);
            const auto violations = gadget_violations(g);
            if (!violations.empty()) throw GadgetSearchError("gadget failed replay: " + violations.front());
            const auto j = gadget_to_json(g);
            emit(ctx, j);
            maybe_write(gadget_out, j.dump(2) + "\n");
            return int(kOk);
        };
    });
    auto* gcheck = gadget->add_subcommand("check", "replay a gadget JSON file");
    std::string gadget_file;
    gcheck->add_option("file", gadget_file, "gadget JSON")->required();
    gcheck->callback([&] {
        action = [&] {
            Gadget g;
            try {
                g = gadget_from_json(load_json(ctx, gadget_file));
            } catch (const UsageError&) {
                throw;
            } catch (const std::exception& e) {
                throw UsageError(std::string("bad gadget: ") + e.what());
            }
            const auto violations = gadget_violations(g);
            emit(ctx, {{"ok", violations.empty()}, {"violations", violations}});
            return violations.empty() ? int(kOk) : int(kNegative);
        };
    });

    // ------------------------------------------------------------ certify
    auto* certify = app.add_subcommand("certify", "one-sided string / non-string certificates");
    certify->require_subcommand(1);
    auto* cstring = certify->add_subcommand("string", "grid search for a string representation");
    GraphInput cs_in;
    cs_in.attach(cstring);
    int grid_k = 5;
    int attempts = 4000;
    cstring->add_option("--k", grid_k, "grid side (1..5)");
    cstring->add_option("--attempts", attempts, "randomized attempts")->check(CLI::PositiveNumber);
    add_seed(cstring);
    cstring->callback([&] {
        action = [&] {
            const Graph g = cs_in.load(ctx);
            if (g.size() > 8 || grid_k < 1 || grid_k > 5) throw UsageError("certify string needs n <= 8 and 1 <= k <= 5");
            const auto r = grid_string_search(g, grid_k, resolved_seed(), attempts);
            if (!r) {
                emit(ctx, {{"string", "unknown"}, {"k", grid_k}});
                return int(kNegative);
            }
            nlohmann::json curves = nlohmann::json::array();
            for (const auto& c : r->curves) {
                nlohmann::json pts = nlohmann::json::array();
                for (auto [row, col] : c) pts.push_back({row, col});
                curves.push_back(pts);
            }
            emit(ctx, {{"string", true}, {"k", grid_k}, {"cells", r->cells}, {"curves", curves}});
            return int(kOk);
        };
    });
    auto* cnon = certify->add_subcommand("nonstring", "search for an induced non-string witness");
    GraphInput cn_in;
    cn_in.attach(cnon);
    cnon->callback([&] {
        action = [&] {
            const Graph g = cn_in.load(ctx);
            const auto w = find_nonstring_witness(g);
            if (!w) {
                emit(ctx, {{"nonstring", "unknown"}});
                return int(kNegative);
            }
            emit(ctx, {{"nonstring", true}, {"witness", {{"hubs", w->hubs}, {"connectors", w->connectors}}}});
            return int(kOk);
        };
    });

    // ---------------------------------------------------------------- lab
    auto* lab = app.add_subcommand("lab", "desk-scale experiments");
    lab->require_subcommand(1);
    int lab_n = 0;
    int samples = 0;
    bool text = false;
    auto lab_report = [&](const ExperimentReport& r) {
        if (text) ctx.out << r.to_text();
        else emit(ctx, r.to_json());
        return r.pass ? int(kOk) : int(kNegative);
    };
    auto* lcount = lab->add_subcommand("count", "exact canonical count (n <= 6)");
    lcount->add_option("--n", lab_n, "vertices")->required()->check(CLI::Range(1, kExactCanonicalLimit));
    auto* lspeed = lab->add_subcommand("speed", "speed lower bound");
    lspeed->add_option("--n", lab_n, "vertices")->required()->check(CLI::Range(1, 100000));
    auto* lratio = lab->add_subcommand("ratio", "great-partition ratio");
    lratio->add_option("--n", lab_n, "vertices")->required()->check(CLI::Range(4, 64));
    lratio->add_option("--samples", samples, "samples")->required()->check(CLI::PositiveNumber);
    auto* lpstar = lab->add_subcommand("pstar", "P* statistics");
    lpstar->add_option("--n", lab_n, "vertices")->required()->check(CLI::Range(8, 4096));
    lpstar->add_option("--samples", samples, "samples")->required()->check(CLI::PositiveNumber);
    for (auto* sub : {lcount, lspeed, lratio, lpstar}) {
        sub->add_flag("--text", text, "human-readable report");
        add_jobs(sub);
    }
    add_seed(lratio);
    add_seed(lpstar);
    lcount->callback([&] { action = [&] { return lab_report(canonical_count_report(lab_n, jobs)); }; });
    lspeed->callback([&] { action = [&] { return lab_report(speed_lower_bound_check(lab_n, jobs)); }; });
    lratio->callback([&] {
        action = [&] { return lab_report(great_partition_ratio_experiment(lab_n, samples, resolved_seed(), jobs)); };
    });
    lpstar->callback([&] {
        action = [&] { return lab_report(pstar_statistics(lab_n, samples, resolved_seed(), jobs)); };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "strgraph: " << e.what() << "\n";
        return kUsage;
    }
    if (!action) {
        err << "strgraph: nothing to do\n";
        return kUsage;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        err << "strgraph: " << e.what() << "\n";
        return kUsage;
    } catch (const Graph6Error& e) {
        err << "strgraph: bad graph6 at byte " << e.offset() << ": " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "strgraph: internal error: " << e.what() << "\n";
        return kDefect;
    }
}

}  // namespace strgraph::cli
