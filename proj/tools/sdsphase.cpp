// Command-line front end: build one phase space, run verification suites, or
// scan every update order of a family instance.
//
// Exit codes: 0 success (and all checks passed), 1 verification failures,
// 2 usage or input errors, 3 resource caps exceeded.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sds/closed_form.hpp"
#include "sds/dot_export.hpp"
#include "sds/errors.hpp"
#include "sds/json_report.hpp"
#include "sds/phase_space.hpp"
#include "sds/sds_engine.hpp"
#include "sds/verify.hpp"
#include "sds/version.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

sds::FamilyKind parse_family_kind(const std::string& family, int n) {
    const auto tag = sds::parse_family(family);
    if (!tag) {
        throw std::invalid_argument("unknown family: " + family +
                                    " (expected complete|star|circ|line)");
    }
    return sds::FamilyKind{*tag, n};
}

sds::UpdateSequence extremal_for(const sds::FamilyKind& kind, int k) {
    const int n_vtx = kind.vertex_count();
    switch (kind.tag) {
        case sds::Family::Complete:
            return sds::UpdateSequence::identity(n_vtx);
        case sds::Family::Star: {
            if (k == 1) {
                // Deepest transients need the center to fire after the arms.
                std::vector<int> reversed(static_cast<std::size_t>(n_vtx));
                std::iota(reversed.begin(), reversed.end(), 0);
                std::reverse(reversed.begin(), reversed.end());
                return sds::UpdateSequence(std::move(reversed));
            }
            return sds::UpdateSequence::identity(n_vtx);
        }
        case sds::Family::Circle:
            if (k == 1 || k == 3) return sds::extremal_order_circle(kind.n, 0);
            return sds::UpdateSequence::identity(n_vtx);
        case sds::Family::Line:
            if (k == 1 || k == 3) return sds::extremal_order_line(kind.n, k).order;
            return sds::UpdateSequence::identity(n_vtx);
    }
    throw std::invalid_argument("extremal_for: unknown family");
}

sds::UpdateSequence resolve_order(const std::string& spec, int n_vertices,
                                  int k,
                                  const std::optional<sds::FamilyKind>& kind,
                                  nlohmann::json& config) {
    if (spec == "identity") {
        return sds::UpdateSequence::identity(n_vertices);
    }
    if (spec.rfind("random:", 0) == 0) {
        const std::string seed_text = spec.substr(7);
        std::uint64_t seed = 0;
        try {
            seed = std::stoull(seed_text);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad seed in --order " + spec);
        }
        config["seed"] = seed;
        std::mt19937_64 rng(seed);
        return sds::UpdateSequence::random(n_vertices, rng);
    }
    if (spec == "extremal") {
        if (!kind) {
            throw std::invalid_argument(
                "--order extremal requires --family, not --graph-file");
        }
        return extremal_for(*kind, k);
    }
    // Explicit comma-separated permutation.
    std::vector<int> order;
    std::istringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            order.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad --order entry: " + token);
        }
    }
    if (static_cast<int>(order.size()) != n_vertices) {
        throw std::invalid_argument(
            "--order length does not match the vertex count");
    }
    return sds::UpdateSequence(std::move(order));
}

struct BuildArgs {
    std::string family;
    int n = 0;
    int k = -1;
    std::string order_spec = "identity";
    std::string graph_file;
    std::string dot_path;
    std::string json_path;
    int cap = sds::kDefaultPhaseSpaceCap;
};

int run_build(const BuildArgs& args) {
    std::optional<sds::FamilyKind> kind;
    sds::BaseGraph graph;
    nlohmann::json config;
    config["command"] = "build";
    config["version"] = sds::kVersion;
    config["k"] = args.k;
    config["cap"] = args.cap;
    config["order_spec"] = args.order_spec;

    if (!args.graph_file.empty()) {
        if (!args.family.empty()) {
            throw std::invalid_argument(
                "--graph-file and --family are mutually exclusive");
        }
        graph = sds::read_edge_list_file(args.graph_file);
        config["graph_file"] = args.graph_file;
    } else {
        if (args.family.empty()) {
            throw std::invalid_argument("need --family with --n, or --graph-file");
        }
        kind = parse_family_kind(args.family, args.n);
        graph = kind->make_graph();
        config["family"] = kind->name();
        config["n"] = kind->n;
    }

    const sds::UpdateSequence order =
        resolve_order(args.order_spec, graph.n_vertices, args.k, kind, config);
    config["order"] = order.to_string();

    const auto t0 = Clock::now();
    const sds::ThresholdSds system(graph, args.k, order);
    const sds::PhaseSpace ps = sds::build_phase_space(system, args.cap);
    const double build_seconds = seconds_since(t0);

    const auto t1 = Clock::now();
    const auto comps = sds::components(ps);
    const auto fixed = sds::fixed_points(ps);
    const auto goe = sds::goe_states(ps);
    const int max_depth = sds::max_transient_depth(ps);
    const double analyze_seconds = seconds_since(t1);

    std::cout << "system: " << (kind ? "family=" + kind->name() : "graph-file")
              << " vertices=" << graph.n_vertices << " k=" << args.k
              << " order=" << order.to_string() << "\n";
    std::cout << "phase space: " << ps.size() << " states, " << comps.size()
              << " components, " << fixed.size() << " fixed points, "
              << goe.size() << " goe states, max depth " << max_depth << "\n";
    std::cout << "components:\n";
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const sds::ComponentReport& c = comps[i];
        std::cout << "  [" << i << "] size " << c.member_count << " depth "
                  << c.depth << " goe " << c.goe_count << " shape "
                  << sds::to_string(c.shape) << " cycle";
        for (const sds::state_t s : c.cycle) {
            std::cout << ' ' << sds::format_state(s, ps.n);
        }
        std::cout << "\n";
    }

    const std::vector<std::pair<std::string, double>> timings = {
        {"build_seconds", build_seconds},
        {"analyze_seconds", analyze_seconds},
    };

    if (!args.dot_path.empty()) {
        std::ofstream out(args.dot_path);
        if (!out) {
            throw std::invalid_argument("cannot open for writing: " +
                                        args.dot_path);
        }
        sds::write_dot(out, ps);
        std::cout << "dot written to " << args.dot_path << "\n";
    }
    if (!args.json_path.empty()) {
        std::ofstream out(args.json_path);
        if (!out) {
            throw std::invalid_argument("cannot open for writing: " +
                                        args.json_path);
        }
        out << sds::phase_space_json(ps, config, timings).dump(2) << "\n";
        std::cout << "json written to " << args.json_path << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    int nmin = 1;
    int nmax = 8;
    int orders = 5;
    std::uint64_t seed = 12345;
    int budget = sds::kDefaultScanVertexBudget;
    std::string json_path;
};

void print_report(const sds::VerificationReport& report) {
    std::cout << "suite " << report.suite << ": " << report.cases.size()
              << " cases, " << report.failure_count() << " failures, seed "
              << report.seed << ", " << report.wall_seconds << "s\n";
    for (const sds::VerificationCase& c : report.cases) {
        if (c.pass) continue;
        std::cout << "  FAIL " << c.claim << " [" << c.params
                  << "] predicted " << c.predicted << " measured "
                  << c.measured;
        if (!c.counterexample.empty()) {
            std::cout << " (" << c.counterexample << ")";
        }
        std::cout << "\n";
    }
}

int run_verify(const VerifyArgs& args) {
    const sds::IntRange range{args.nmin, args.nmax};

    std::vector<std::string> suites;
    if (args.suite == "all") {
        suites = {"complete", "star", "circ", "line", "fixed-points"};
    } else if (args.suite == "complete" || args.suite == "star" ||
               args.suite == "circ" || args.suite == "circle" ||
               args.suite == "line" || args.suite == "fixed-points" ||
               args.suite == "depth-table" || args.suite == "table1") {
        suites = {args.suite};
    } else {
        throw std::invalid_argument(
            "unknown suite: " + args.suite +
            " (expected complete|star|circ|line|fixed-points|depth-table|all)");
    }

    nlohmann::json config;
    config["command"] = "verify";
    config["version"] = sds::kVersion;
    config["suite"] = args.suite;
    config["nmin"] = args.nmin;
    config["nmax"] = args.nmax;
    config["orders"] = args.orders;
    config["seed"] = args.seed;
    config["budget"] = args.budget;

    std::vector<sds::VerificationReport> reports;
    for (const std::string& name : suites) {
        if (name == "complete") {
            reports.push_back(sds::verify_complete(range, args.orders, args.seed));
        } else if (name == "star") {
            reports.push_back(sds::verify_star(range, args.orders, args.seed));
        } else if (name == "circ" || name == "circle") {
            reports.push_back(sds::verify_circle(range, args.orders, args.seed));
        } else if (name == "line") {
            reports.push_back(sds::verify_line(range, args.orders, args.seed));
        } else if (name == "fixed-points") {
            reports.push_back(
                sds::verify_fixed_points_only(range, args.orders, args.seed));
        } else {
            reports.push_back(sds::verify_depth_table(range, args.budget,
                                                      args.orders, args.seed));
        }
        print_report(reports.back());
        if (reports.back().suite == "depth-table") {
            std::cout << sds::render_depth_table(reports.back());
        }
    }

    std::size_t failures = 0;
    for (const sds::VerificationReport& r : reports) {
        failures += r.failure_count();
    }
    std::cout << (failures == 0 ? "all checks passed"
                                : std::to_string(failures) + " checks failed")
              << "\n";

    if (!args.json_path.empty()) {
        std::ofstream out(args.json_path);
        if (!out) {
            throw std::invalid_argument("cannot open for writing: " +
                                        args.json_path);
        }
        if (reports.size() == 1) {
            out << sds::verification_json(reports.front(), config).dump(2)
                << "\n";
        } else {
            nlohmann::json all;
            all["config"] = config;
            all["suites"] = nlohmann::json::array();
            for (const sds::VerificationReport& r : reports) {
                all["suites"].push_back(sds::verification_json(r, config));
            }
            out << all.dump(2) << "\n";
        }
        std::cout << "json written to " << args.json_path << "\n";
    }
    return failures == 0 ? 0 : 1;
}

struct ScanArgs {
    std::string family;
    int n = 0;
    int k = -1;
    int budget = sds::kDefaultScanVertexBudget;
};

int run_scan(const ScanArgs& args) {
    const sds::FamilyKind kind = parse_family_kind(args.family, args.n);
    const sds::ScanResult result = sds::scan_orders(kind, args.k, args.budget);
    std::cout << "family=" << kind.name() << " n=" << args.n
              << " k=" << args.k << ": max depth " << result.max_depth
              << " over " << result.orders_scanned << " orders, witness";
    for (std::size_t i = 0; i < result.witness_order.size(); ++i) {
        std::cout << (i ? "," : " ") << result.witness_order[i];
    }
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"phase spaces of k-threshold sequential dynamical systems"};
    app.set_version_flag("--version", sds::kVersion);
    app.require_subcommand(1);

    BuildArgs build_args;
    CLI::App* build = app.add_subcommand(
        "build", "build and analyze one phase space");
    build->add_option("--family", build_args.family,
                      "graph family: complete|star|circ|line");
    build->add_option("--n", build_args.n,
                      "size: vertex count (arm count for star)");
    build->add_option("--k", build_args.k, "threshold")->required();
    build->add_option("--order", build_args.order_spec,
                      "identity | random:<seed> | extremal | comma list");
    build->add_option("--graph-file", build_args.graph_file,
                      "edge list file instead of --family");
    build->add_option("--dot", build_args.dot_path, "write graphviz here");
    build->add_option("--json", build_args.json_path, "write json report here");
    build->add_option("--cap", build_args.cap,
                      "largest vertex count to expand (default 24)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "check structural claims against measurements");
    verify->add_option("--suite", verify_args.suite,
                       "complete|star|circ|line|fixed-points|depth-table|all");
    verify->add_option("--nmin", verify_args.nmin, "smallest size (default 1)");
    verify->add_option("--nmax", verify_args.nmax, "largest size (default 8)");
    verify->add_option("--orders", verify_args.orders,
                       "random orders per instance (default 5)");
    verify->add_option("--seed", verify_args.seed, "random-order seed");
    verify->add_option("--budget", verify_args.budget,
                       "vertex budget for exhaustive order scans (default 8)");
    verify->add_option("--json", verify_args.json_path,
                       "write json report here");

    ScanArgs scan_args;
    CLI::App* scan = app.add_subcommand(
        "scan-orders", "exhaust all update orders of one instance");
    scan->add_option("--family", scan_args.family,
                     "graph family: complete|star|circ|line")->required();
    scan->add_option("--n", scan_args.n, "size parameter")->required();
    scan->add_option("--k", scan_args.k, "threshold")->required();
    scan->add_option("--budget", scan_args.budget,
                     "vertex budget (default 8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (build->parsed()) return run_build(build_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (scan->parsed()) return run_scan(scan_args);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const sds::CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const sds::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
