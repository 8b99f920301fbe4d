#include "bocd/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>

#include "bocd/benchmark.hpp"
#include "bocd/graph.hpp"
#include "bocd/metrics.hpp"
#include "bocd/nsga2.hpp"
#include "bocd/objectives.hpp"

namespace bocd::cli {

namespace {

using nlohmann::ordered_json;

// Input problems (unreadable or malformed files) map to exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    return out;
}

Graph read_graph(const std::string& path) {
    auto in = open_input(path);
    try {
        return load_edge_list(in);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Partition read_partition(const std::string& path, const Graph& g) {
    auto in = open_input(path);
    try {
        return load_membership(in, g);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

struct DetectOptions {
    std::string graph_path;
    std::string truth_path;
    std::string output = "bocd";
    GaConfig config;
    std::size_t runs = 1;
    bool json = false;
};

struct EvaluateOptions {
    std::string graph_path;
    std::string partition_path;
    std::string second_path;
    double r = 2.5;
    bool json = false;
};

struct GenerateOptions {
    BenchmarkSpec spec;
    std::string output = "benchmark";
};

struct RunSummary {
    std::uint64_t seed;
    RunResult result;
};

int cmd_detect(const DetectOptions& opt, std::ostream& out) {
    try {
        opt.config.validate();
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("detect", e.what());
    }
    if (opt.runs == 0) throw CLI::ValidationError("--runs", "must be at least 1");

    const auto start = std::chrono::steady_clock::now();
    const Graph g = read_graph(opt.graph_path);
    if (g.edge_count() == 0) throw InputError(opt.graph_path + ": graph has no edges");
    std::optional<Partition> truth;
    if (!opt.truth_path.empty()) truth = read_partition(opt.truth_path, g);

    std::vector<RunSummary> runs;
    std::size_t best = 0;
    for (std::size_t k = 0; k < opt.runs; ++k) {
        GaConfig cfg = opt.config;
        cfg.seed = opt.config.seed + k;
        runs.push_back({cfg.seed, evolve(g, cfg)});
        if (runs.back().result.best_by_q.objectives.q > runs[best].result.best_by_q.objectives.q) best = k;
    }
    const auto& winner = runs[best].result;
    const Partition partition = decode(winner.best_by_q.chromosome);
    const auto& obj = winner.best_by_q.objectives;
    std::optional<double> score;
    if (truth) score = nmi(partition, *truth);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    {
        auto f = open_output(opt.output + ".membership");
        write_membership(f, g, partition);
    }
    {
        auto front = winner.final_front;
        std::stable_sort(front.begin(), front.end(),
                         [](const Individual& a, const Individual& b) { return a.objectives.f1 < b.objectives.f1; });
        auto f = open_output(opt.output + ".pareto.csv");
        f << "f1,f2,q,cs,k\n";
        for (const auto& ind : front) {
            const auto& o = ind.objectives;
            f << fmt::format("{},{},{},{},{}\n", o.f1, o.f2, o.q, o.cs, decode(ind.chromosome).community_count());
        }
    }

    ordered_json record;
    record["format_version"] = kRunRecordFormatVersion;
    record["command"] = "detect";
    record["config"] = {
        {"graph", opt.graph_path},
        {"truth", opt.truth_path.empty() ? ordered_json(nullptr) : ordered_json(opt.truth_path)},
        {"population", opt.config.population_size},
        {"generations", opt.config.generations},
        {"crossover_prob", opt.config.crossover_prob},
        {"mutation_prob", opt.config.mutation_prob},
        {"exponent_r", opt.config.r},
        {"seed", opt.config.seed},
        {"runs", opt.runs},
    };
    ordered_json per_run = ordered_json::array();
    for (const auto& r : runs) {
        const auto& o = r.result.best_by_q.objectives;
        const auto found = decode(r.result.best_by_q.chromosome);
        per_run.push_back({{"seed", r.seed},
                           {"best_q", o.q},
                           {"best_cs", o.cs},
                           {"k", found.community_count()},
                           {"nmi", truth ? ordered_json(nmi(found, *truth)) : ordered_json(nullptr)}});
    }
    record["results"] = {
        {"seed", runs[best].seed},
        {"best_q", obj.q},
        {"best_cs", obj.cs},
        {"f1", obj.f1},
        {"f2", obj.f2},
        {"k", partition.community_count()},
        {"nmi", score ? ordered_json(*score) : ordered_json(nullptr)},
        {"front_size", winner.final_front.size()},
        {"best_chromosome", winner.best_by_q.chromosome.to_string()},
        {"runs", per_run},
    };
    ordered_json history = ordered_json::array();
    for (const auto& h : winner.history)
        history.push_back({{"generation", h.generation},
                           {"best_q", h.best_q},
                           {"best_cs", h.best_cs},
                           {"front_size", h.front_size}});
    record["history"] = std::move(history);
    record["timing"] = {{"wall_seconds", wall}, {"threads", opt.config.threads}};
    {
        auto f = open_output(opt.output + ".run.json");
        f << record.dump(2) << '\n';
    }

    if (opt.json) {
        out << record["results"].dump(2) << '\n';
    } else {
        out << fmt::format("q = {}\ncs = {}\nk = {}\n", obj.q, obj.cs, partition.community_count());
        if (score) out << fmt::format("nmi = {}\n", *score);
        out << fmt::format("wrote {0}.membership {0}.pareto.csv {0}.run.json\n", opt.output);
    }
    return kExitOk;
}

int cmd_evaluate(const EvaluateOptions& opt, std::ostream& out) {
    if (!(opt.r > 0.0)) throw CLI::ValidationError("--exponent-r", "must be positive");
    const Graph g = read_graph(opt.graph_path);
    if (g.edge_count() == 0) throw InputError(opt.graph_path + ": graph has no edges");
    const Partition first = read_partition(opt.partition_path, g);
    std::optional<double> score;
    if (!opt.second_path.empty()) score = nmi(first, read_partition(opt.second_path, g));

    const auto obj = evaluate(g, first, ScoreParams{opt.r});
    if (opt.json) {
        ordered_json report = {{"q", obj.q}, {"cs", obj.cs}, {"k", first.community_count()}};
        report["nmi"] = score ? ordered_json(*score) : ordered_json(nullptr);
        out << report.dump(2) << '\n';
    } else {
        out << fmt::format("q = {}\ncs = {}\nk = {}\n", obj.q, obj.cs, first.community_count());
        if (score) out << fmt::format("nmi = {}\n", *score);
    }
    return kExitOk;
}

int cmd_generate(const GenerateOptions& opt, std::ostream& out) {
    try {
        opt.spec.validate();
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("generate", e.what());
    }
    const auto planted = generate(opt.spec);
    const auto& g = planted.graph;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.degree(v) == 0)
            throw InputError("node " + g.label(v) + " has no edges and cannot be written as an edge list; try another seed");
    {
        auto f = open_output(opt.output + ".edges");
        write_edge_list(f, g);
    }
    {
        auto f = open_output(opt.output + ".truth");
        write_membership(f, g, planted.truth);
    }
    out << fmt::format("nodes = {0}\nedges = {1}\nwrote {2}.edges {2}.truth\n", g.node_count(), g.edge_count(),
                       opt.output);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bi-objective genetic community detection"};
    app.require_subcommand(1);

    DetectOptions detect_opt;
    auto* detect = app.add_subcommand("detect", "Find communities with the NSGA-II genetic algorithm");
    detect->add_option("graph", detect_opt.graph_path, "Edge-list file")->required();
    detect->add_option("--truth", detect_opt.truth_path, "Ground-truth membership file (reports NMI)");
    detect->add_option("--output", detect_opt.output, "Output prefix")->capture_default_str();
    detect->add_option("--population", detect_opt.config.population_size, "Population size (even)")
        ->capture_default_str();
    detect->add_option("--generations", detect_opt.config.generations, "Generations")->capture_default_str();
    detect->add_option("--crossover-prob", detect_opt.config.crossover_prob, "Crossover probability")
        ->capture_default_str();
    detect->add_option("--mutation-prob", detect_opt.config.mutation_prob, "Per-gene mutation probability")
        ->capture_default_str();
    detect->add_option("--exponent-r", detect_opt.config.r, "Community-score power-mean exponent")
        ->capture_default_str();
    detect->add_option("--seed", detect_opt.config.seed, "Random seed")->capture_default_str();
    detect->add_option("--runs", detect_opt.runs, "Independent runs (seed, seed+1, ...); best by Q is kept")
        ->capture_default_str();
    detect->add_option("--threads", detect_opt.config.threads, "Evaluation threads (0 = OpenMP default)")
        ->capture_default_str();
    detect->add_flag("--json", detect_opt.json, "Print results as JSON");

    EvaluateOptions eval_opt;
    auto* evaluate_cmd = app.add_subcommand("evaluate", "Score a partition: modularity, community score, NMI");
    evaluate_cmd->add_option("graph", eval_opt.graph_path, "Edge-list file")->required();
    evaluate_cmd->add_option("partition", eval_opt.partition_path, "Membership file")->required();
    evaluate_cmd->add_option("other", eval_opt.second_path, "Second membership file for NMI");
    evaluate_cmd->add_option("--exponent-r", eval_opt.r, "Community-score power-mean exponent")
        ->capture_default_str();
    evaluate_cmd->add_flag("--json", eval_opt.json, "Print results as JSON");

    GenerateOptions gen_opt;
    auto* generate_cmd = app.add_subcommand("generate", "Write a planted-partition benchmark graph");
    generate_cmd->add_option("--nodes", gen_opt.spec.nodes, "Node count")->capture_default_str();
    generate_cmd->add_option("--communities", gen_opt.spec.communities, "Planted communities")
        ->capture_default_str();
    generate_cmd->add_option("--avg-degree", gen_opt.spec.avg_degree, "Expected degree")->capture_default_str();
    generate_cmd->add_option("--mu", gen_opt.spec.mixing, "Mixing parameter in [0, 1]")->required();
    generate_cmd->add_option("--seed", gen_opt.spec.seed, "Random seed")->capture_default_str();
    generate_cmd->add_option("--output", gen_opt.output, "Output prefix")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (detect->parsed()) return cmd_detect(detect_opt, out);
        if (evaluate_cmd->parsed()) return cmd_evaluate(eval_opt, out);
        return cmd_generate(gen_opt, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

}  // namespace bocd::cli
