// Command-line front end: replay event files, duel adversaries, sweep small
// instances, query offline optima, and print generated sequences.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lateops/harness.hpp"

namespace {

using namespace lateops;

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    return file;
}

OracleCaps caps_from(int cap) {
    OracleCaps caps = OracleCaps::from_env();
    if (cap > 0) {
        caps.max_is_vertices = cap;
        caps.max_matching_edges = cap;
    }
    return caps;
}

std::string with_param(const std::string& spec, const std::string& kv) {
    return spec + (spec.find(':') == std::string::npos ? ":" : ",") + kv;
}

RequestSequence load_sequence(const std::string& source, ArrivalModel model, std::uint64_t seed) {
    if (source.rfind("gen.", 0) == 0) return make_generated_sequence(source, model, seed);
    std::ifstream in(source);
    if (!in) throw std::runtime_error("cannot open event file '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_events(buf.str());
}

int cmd_run(const ExperimentConfig& cfg, const std::string& format, const std::string& out_path,
            const std::string& assert_max_ratio) {
    const ExperimentReport rep = run_experiment(cfg);
    std::ofstream file;
    std::ostream& out = open_out(out_path, file);
    if (format == "csv") out << rep.to_csv();
    else out << rep.to_json().dump(2) << "\n";
    if (!assert_max_ratio.empty()) {
        const Rational limit = parse_rational(assert_max_ratio);
        if (rep.unbounded || rep.ratio > limit) {
            std::cerr << "ratio " << (rep.unbounded ? "unbounded" : rep.ratio.to_string())
                      << " exceeds limit " << limit.to_string() << "\n";
            return 2;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"online graph algorithms with late accepts and rejects"};
    app.require_subcommand(1);

    std::string problem = "is", model, algorithm, source, format = "json", out_path;
    std::string assert_max_ratio;
    std::uint64_t seed = 0;
    int cap = 0;
    bool no_transcript = false;

    auto add_common = [&](CLI::App* sub, bool needs_alg) {
        sub->add_option("--problem", problem, "is | match | vc | msf")->required();
        auto* m = sub->add_option("--model", model, "standard | la | lr | lar");
        auto* a = sub->add_option("--algorithm", algorithm, "online algorithm name");
        if (needs_alg) { m->required(); a->required(); }
        sub->add_option("--seed", seed, "rng seed for generated sources");
        sub->add_option("--cap", cap, "offline search size cap (overrides LATEOPS_CAP)");
        sub->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", out_path, "write output here instead of stdout");
    };

    auto* run = app.add_subcommand("run", "replay a source against an algorithm");
    add_common(run, true);
    run->add_option("--source", source, "adv.* spec, gen.* spec, or event file path")->required();
    run->add_flag("--no-transcript", no_transcript, "omit events and moves from the report");
    run->add_option("--assert-max-ratio", assert_max_ratio,
                    "exit 2 if the competitive ratio exceeds this rational");

    int n_max = 5, samples = 1000, order_cap = 5040;
    std::string sweep_csv;
    auto* sweep = app.add_subcommand("sweep", "all small instances under all arrival orders");
    add_common(sweep, true);
    sweep->add_option("--n-max", n_max, "largest instance size");
    sweep->add_option("--samples", samples, "random instances per size above 5");
    sweep->add_option("--order-cap", order_cap, "arrival order budget per instance");
    sweep->add_option("--csv", sweep_csv, "write one line per run to this file");
    sweep->add_option("--assert-max-ratio", assert_max_ratio,
                      "exit 2 if any run exceeds this rational ratio");

    std::uint64_t budget = 0;
    auto* duel = app.add_subcommand("adversary", "duel an adaptive adversary, print its stream");
    add_common(duel, true);
    duel->add_option("--source", source, "adv.* spec")->required();
    duel->add_option("--budget", budget, "override the adversary's event budget");

    auto* oracle = app.add_subcommand("oracle", "offline optimum of a sequence");
    add_common(oracle, false);
    oracle->add_option("--source", source, "gen.* spec or event file path")->required();

    auto* gen = app.add_subcommand("gen", "print a generated event sequence");
    add_common(gen, false);
    gen->add_option("--source", source, "gen.* spec")->required();

    auto* list = app.add_subcommand("list", "known algorithms and adversaries");

    CLI11_PARSE(app, argc, argv);

    try {
        ExperimentConfig cfg;
        cfg.problem = parse_problem(problem);
        if (!model.empty()) cfg.model = parse_decision_model(model);
        cfg.algorithm = algorithm;
        cfg.source = source;
        cfg.seed = seed;
        cfg.caps = caps_from(cap);
        cfg.with_transcript = !no_transcript;

        if (run->parsed()) return cmd_run(cfg, format, out_path, assert_max_ratio);

        if (sweep->parsed()) {
            SweepConfig sc;
            sc.problem = cfg.problem;
            sc.model = cfg.model;
            sc.algorithm = cfg.algorithm;
            sc.n_max = n_max;
            sc.sample_count = samples;
            sc.order_cap = order_cap;
            sc.seed = seed == 0 ? 1 : seed;
            sc.caps = cfg.caps;
            std::ofstream csv_file;
            if (!sweep_csv.empty()) {
                csv_file.open(sweep_csv);
                if (!csv_file) throw std::runtime_error("cannot open '" + sweep_csv + "'");
                csv_file << "run,n,m,alg_value,opt_value,ratio\n";
                sc.csv = &csv_file;
            }
            const SweepSummary sum = sweep_small_graphs(sc);
            std::ofstream file;
            std::ostream& out = open_out(out_path, file);
            out << sweep_to_json(sum).dump(2) << "\n";
            if (!assert_max_ratio.empty()) {
                const Rational limit = parse_rational(assert_max_ratio);
                if (sum.any_unbounded || sum.max_ratio > limit) {
                    std::cerr << "max ratio "
                              << (sum.any_unbounded ? "unbounded" : sum.max_ratio.to_string())
                              << " exceeds limit " << limit.to_string() << "\n";
                    return 2;
                }
            }
            return 0;
        }

        if (duel->parsed()) {
            std::string spec = source;
            if (budget > 0) spec = with_param(spec, "budget=" + std::to_string(budget));
            auto adv = make_adversary(spec);
            const ExperimentReport rep = run_duel(cfg, *adv);
            std::ofstream file;
            std::ostream& out = open_out(out_path, file);
            out << rep.events_text;
            std::cerr << rep.to_json().dump(2) << "\n";
            return 0;
        }

        if (oracle->parsed()) {
            const RequestSequence seq =
                load_sequence(source, problem_arrival_model(cfg.problem), cfg.seed);
            const GraphSnapshot g = build_snapshot(seq);
            const OracleResult res = problem_oracle(cfg.problem, g, cfg.caps);
            ordered_json j;
            j["problem"] = problem;
            j["n"] = g.vertex_count();
            j["m"] = g.edge_count();
            j["value"] = res.value;
            j["witness"] = res.witness;
            j["nodes_explored"] = res.nodes_explored;
            std::ofstream file;
            std::ostream& out = open_out(out_path, file);
            out << j.dump(2) << "\n";
            return 0;
        }

        if (gen->parsed()) {
            const RequestSequence seq =
                make_generated_sequence(source, problem_arrival_model(cfg.problem), cfg.seed);
            std::ofstream file;
            std::ostream& out = open_out(out_path, file);
            out << serialize_events(seq);
            return 0;
        }

        if (list->parsed()) {
            ordered_json j;
            for (const std::string& name : algorithm_names()) {
                ordered_json models = ordered_json::array();
                for (DecisionModel m : supported_models(name)) models.push_back(to_string(m));
                j["algorithms"][name] = models;
            }
            j["adversaries"] = adversary_names();
            std::cout << j.dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
