#pragma once

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lateops/adversaries.hpp"
#include "lateops/algorithms.hpp"
#include "lateops/generators.hpp"
#include "lateops/ledger.hpp"
#include "lateops/oracles.hpp"
#include "lateops/rational.hpp"
#include "lateops/stream.hpp"

namespace lateops {

enum class Problem { IndependentSet, Matching, VertexCover, SpanningForest };

inline const char* to_string(Problem p) {
    switch (p) {
        case Problem::IndependentSet: return "is";
        case Problem::Matching: return "match";
        case Problem::VertexCover: return "vc";
        case Problem::SpanningForest: return "msf";
    }
    return "?";
}

inline Problem parse_problem(const std::string& s) {
    if (s == "is") return Problem::IndependentSet;
    if (s == "match") return Problem::Matching;
    if (s == "vc") return Problem::VertexCover;
    if (s == "msf") return Problem::SpanningForest;
    throw std::invalid_argument("unknown problem '" + s + "'");
}

inline ArrivalModel problem_arrival_model(Problem p) {
    return (p == Problem::IndependentSet || p == Problem::VertexCover)
               ? ArrivalModel::VertexArrival
               : ArrivalModel::EdgeArrival;
}

inline ItemKind problem_item_kind(Problem p) {
    return problem_arrival_model(p) == ArrivalModel::VertexArrival ? ItemKind::VertexItem
                                                                   : ItemKind::EdgeItem;
}

inline bool problem_is_maximization(Problem p) {
    return p == Problem::IndependentSet || p == Problem::Matching;
}

inline long long solution_value(Problem p, const GraphSnapshot& g, const std::vector<int>& items) {
    if (p != Problem::SpanningForest) return static_cast<long long>(items.size());
    long long w = 0;
    for (int id : items) w += g.edge(id).weight;
    return w;
}

inline bool solution_feasible(Problem p, const GraphSnapshot& g, const std::vector<int>& items) {
    switch (p) {
        case Problem::IndependentSet: return is_independent_set(g, items);
        case Problem::Matching: return is_matching(g, items);
        case Problem::VertexCover: return is_vertex_cover(g, items);
        case Problem::SpanningForest: return is_spanning_forest(g, items);
    }
    return false;
}

inline OracleResult problem_oracle(Problem p, const GraphSnapshot& g, const OracleCaps& caps) {
    switch (p) {
        case Problem::IndependentSet: return opt_independent_set(g, caps);
        case Problem::Matching: return opt_matching(g, caps);
        case Problem::VertexCover: return opt_vertex_cover(g, caps);
        case Problem::SpanningForest: return opt_spanning_forest(g);
    }
    throw std::logic_error("unreachable");
}

struct RatioResult {
    Rational ratio = Rational(1);
    bool unbounded = false;
};

// OPT/ALG for maximization, ALG/OPT for minimization; 0/0 counts as 1, and a
// zero denominator with nonzero numerator sets the unbounded flag.
inline RatioResult competitive_ratio(Problem p, long long alg_value, long long opt_value) {
    const long long num = problem_is_maximization(p) ? opt_value : alg_value;
    const long long den = problem_is_maximization(p) ? alg_value : opt_value;
    if (den == 0) {
        if (num == 0) return {Rational(1), false};
        return {Rational(0), true};
    }
    return {Rational(num, den), false};
}

struct ExperimentConfig {
    Problem problem = Problem::IndependentSet;
    DecisionModel model = DecisionModel::Standard;
    std::string algorithm;
    std::string source;  // "adv.*", "gen.*", or a path to an event file
    std::uint64_t seed = 0;
    OracleCaps caps = OracleCaps::from_env();
    bool with_transcript = true;
    bool implicit_reject = false;
};

struct ExperimentReport {
    ExperimentConfig config;
    int n = 0, m = 0;
    long long alg_value = 0;
    long long opt_value = 0;
    bool opt_from_oracle = true;
    Rational ratio = Rational(1);
    bool unbounded = false;
    std::vector<int> solution;
    ordered_json adversary;  // null unless the source was adaptive
    std::string events_text;
    std::string moves_json;
    double wall_ms = 0;

    ordered_json to_json() const {
        ordered_json j;
        j["config"] = {{"problem", to_string(config.problem)},
                       {"model", to_string(config.model)},
                       {"algorithm", config.algorithm},
                       {"source", config.source},
                       {"seed", config.seed},
                       {"caps", {{"is_vertices", config.caps.max_is_vertices},
                                 {"matching_edges", config.caps.max_matching_edges}}}};
        j["n"] = n;
        j["m"] = m;
        j["alg_value"] = alg_value;
        j["opt_value"] = opt_value;
        j["opt_source"] = opt_from_oracle ? "oracle" : "adversary_bound";
        j["ratio"] = ratio.to_string();
        j["ratio_double"] = unbounded ? -1.0 : ratio.to_double();
        j["unbounded"] = unbounded;
        j["solution"] = solution;
        j["adversary"] = adversary;
        if (!events_text.empty() || !moves_json.empty())
            j["transcript"] = {{"events", events_text}, {"moves", moves_json}};
        j["wall_ms"] = wall_ms;
        return j;
    }

    std::string to_csv() const {
        std::ostringstream out;
        out << "problem,model,algorithm,source,seed,n,m,alg_value,opt_value,opt_source,ratio,"
               "unbounded\n";
        out << to_string(config.problem) << ',' << to_string(config.model) << ','
            << config.algorithm << ",\"" << config.source << "\"," << config.seed << ',' << n
            << ',' << m << ',' << alg_value << ',' << opt_value << ','
            << (opt_from_oracle ? "oracle" : "adversary_bound") << ',' << ratio.to_string() << ','
            << (unbounded ? 1 : 0) << "\n";
        return out.str();
    }
};

using EventHook = std::function<void(const ArrivalEvent&, const GraphSnapshot&,
                                     const SolutionLedger&, OnlineAlgorithm&)>;

namespace detail {

inline void reveal_items_for(const ArrivalEvent& ev, const GraphSnapshot& g, SolutionLedger& led) {
    if (ev.kind == ArrivalModel::VertexArrival) led.reveal(ev.vertex);
    else led.reveal(g.edge_count() - 1);
}

// A spanning-forest algorithm owes a spanning forest of everything revealed
// after every step, not only at the end.
inline void check_step_duty(Problem p, const GraphSnapshot& g, const SolutionLedger& led) {
    if (p != Problem::SpanningForest) return;
    const std::vector<int> held(led.accepted().begin(), led.accepted().end());
    if (!is_spanning_forest(g, held))
        throw std::runtime_error("accepted edges stopped spanning the revealed graph");
}

inline void finish_report(ExperimentReport& rep, Problem problem, const GraphSnapshot& g,
                          SolutionLedger& led, const OracleCaps& caps, Adversary* adv,
                          std::optional<long long> opt_override) {
    rep.solution = led.finalize();
    rep.n = g.vertex_count();
    rep.m = g.edge_count();
    if (!solution_feasible(problem, g, rep.solution))
        throw std::runtime_error("algorithm produced an infeasible solution");
    rep.alg_value = solution_value(problem, g, rep.solution);
    if (opt_override) {
        rep.opt_value = *opt_override;
        rep.opt_from_oracle = true;
    } else {
        try {
            rep.opt_value = problem_oracle(problem, g, caps).value;
            rep.opt_from_oracle = true;
        } catch (const OracleCapExceeded&) {
            if (!adv) throw;
            rep.opt_value = adv->certified_bound();
            rep.opt_from_oracle = false;
        }
    }
    const RatioResult rr = competitive_ratio(problem, rep.alg_value, rep.opt_value);
    rep.ratio = rr.ratio;
    rep.unbounded = rr.unbounded;
}

}  // namespace detail

// Replays a fixed request sequence against an algorithm. When alg is null,
// one is built from the config registry. opt_override skips the oracle call
// (callers that already know the optimum of an isomorphic instance).
inline ExperimentReport run_sequence(const ExperimentConfig& config, const RequestSequence& seq,
                                     OnlineAlgorithm* alg = nullptr, const EventHook& hook = {},
                                     std::optional<long long> opt_override = std::nullopt) {
    const auto started = std::chrono::steady_clock::now();
    if (seq.model != problem_arrival_model(config.problem))
        throw std::invalid_argument("arrival model does not fit the problem");
    {
        const std::vector<Violation> bad = validate_sequence(seq);
        if (!bad.empty())
            throw std::invalid_argument("invalid request sequence at event " +
                                        std::to_string(bad.front().event_index) + ": " +
                                        bad.front().rule);
    }
    std::unique_ptr<OnlineAlgorithm> owned;
    if (!alg) {
        owned = make_algorithm(config.algorithm, config.model, config.caps);
        alg = owned.get();
    }
    if (alg->item_kind() != problem_item_kind(config.problem))
        throw std::invalid_argument("algorithm item kind does not fit the problem");
    SolutionLedger led(config.model, alg->item_kind(), config.implicit_reject);
    GraphSnapshot g;
    for (const ArrivalEvent& ev : seq.events) {
        g.apply(ev);
        detail::reveal_items_for(ev, g, led);
        alg->step(ev, g, led);
        led.end_step();
        detail::check_step_duty(config.problem, g, led);
        if (hook) hook(ev, g, led, *alg);
    }
    ExperimentReport rep;
    rep.config = config;
    detail::finish_report(rep, config.problem, g, led, config.caps, nullptr, opt_override);
    if (config.with_transcript) {
        rep.events_text = serialize_events(seq);
        rep.moves_json = led.log_json_lines();
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            started).count();
    return rep;
}

// Adaptive duel: the adversary extends the input one event at a time based
// on the public ledger.
inline ExperimentReport run_duel(const ExperimentConfig& config, Adversary& adv,
                                 OnlineAlgorithm* alg = nullptr, const EventHook& hook = {}) {
    const auto started = std::chrono::steady_clock::now();
    if (adv.arrival_model() != problem_arrival_model(config.problem))
        throw std::invalid_argument("adversary arrival model does not fit the problem");
    std::unique_ptr<OnlineAlgorithm> owned;
    if (!alg) {
        owned = make_algorithm(config.algorithm, config.model, config.caps);
        alg = owned.get();
    }
    SolutionLedger led(config.model, alg->item_kind(), config.implicit_reject);
    GraphSnapshot g;
    RequestSequence seq;
    seq.model = adv.arrival_model();
    while (auto ev = adv.next(g, led)) {
        if (auto rule = g.check(*ev))
            throw std::logic_error("adversary emitted an invalid event: " + *rule);
        seq.events.push_back(*ev);
        g.apply(*ev);
        detail::reveal_items_for(*ev, g, led);
        alg->step(*ev, g, led);
        led.end_step();
        detail::check_step_duty(config.problem, g, led);
        if (hook) hook(*ev, g, led, *alg);
    }
    ExperimentReport rep;
    rep.config = config;
    detail::finish_report(rep, config.problem, g, led, config.caps, &adv, std::nullopt);
    rep.adversary = adv.details();
    rep.adversary["bound"] = adv.certified_bound();
    rep.adversary["witness_size"] = adv.certified_witness().size();
    if (config.with_transcript) {
        rep.events_text = serialize_events(seq);
        rep.moves_json = led.log_json_lines();
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            started).count();
    return rep;
}

// Dispatches on the source naming scheme: adversaries ("adv."), generators
// ("gen."), otherwise a path to an event file.
inline ExperimentReport run_experiment(const ExperimentConfig& config) {
    if (config.source.rfind("adv.", 0) == 0) {
        auto adv = make_adversary(config.source);
        return run_duel(config, *adv);
    }
    if (config.source.rfind("gen.", 0) == 0) {
        const RequestSequence seq = make_generated_sequence(
            config.source, problem_arrival_model(config.problem), config.seed);
        return run_sequence(config, seq);
    }
    std::ifstream in(config.source);
    if (!in) throw std::runtime_error("cannot open event file '" + config.source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return run_sequence(config, parse_events(buf.str()));
}

// ---------- systematic small-instance sweeps --------------------------------

struct SweepConfig {
    Problem problem = Problem::IndependentSet;
    DecisionModel model = DecisionModel::Standard;
    std::string algorithm;
    int n_max = 5;             // exhaustive labeled graphs for n <= min(5, n_max)
    int sample_count = 10000;  // seeded samples per n in 6..n_max
    int order_cap = 5040;      // enumerate all orders up to this many, else sample this many
    std::uint64_t seed = 1;
    OracleCaps caps = OracleCaps::from_env();
    std::ostream* csv = nullptr;
};

struct SweepHooks {
    EventHook after_event;
    std::function<void(const RequestSequence&, const ExperimentReport&, OnlineAlgorithm&)>
        after_run;
};

struct SweepSummary {
    long long runs = 0;
    Rational max_ratio = Rational(0);
    std::string argmax_events;
    long long argmax_alg = 0;
    long long argmax_opt = 0;
    bool any_unbounded = false;
    std::vector<long long> histogram =
        std::vector<long long>(11, 0);  // [1.0,1.25) ... [3.25,3.5), then overflow
};

namespace detail {

inline long long factorial_capped(int k, long long cap) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= i;
        if (f >= cap) return cap;
    }
    return f;
}

inline void sweep_one(const SweepConfig& cfg, const SweepHooks& hooks, const RequestSequence& seq,
                      std::optional<long long> known_opt, SweepSummary& sum) {
    ExperimentConfig rc;
    rc.problem = cfg.problem;
    rc.model = cfg.model;
    rc.algorithm = cfg.algorithm;
    rc.source = "sweep";
    rc.caps = cfg.caps;
    rc.with_transcript = false;
    auto alg = make_algorithm(cfg.algorithm, cfg.model, cfg.caps);
    const ExperimentReport rep = run_sequence(rc, seq, alg.get(), hooks.after_event, known_opt);
    ++sum.runs;
    if (rep.unbounded) sum.any_unbounded = true;
    if (!rep.unbounded && rep.ratio > sum.max_ratio) {
        sum.max_ratio = rep.ratio;
        sum.argmax_events = serialize_events(seq);
        sum.argmax_alg = rep.alg_value;
        sum.argmax_opt = rep.opt_value;
    }
    const double r = rep.unbounded ? 1e9 : rep.ratio.to_double();
    const int bucket = std::min(10, std::max(0, static_cast<int>((r - 1.0) / 0.25)));
    ++sum.histogram[static_cast<std::size_t>(bucket)];
    if (cfg.csv)
        (*cfg.csv) << sum.runs << ',' << rep.n << ',' << rep.m << ',' << rep.alg_value << ','
                   << rep.opt_value << ',' << (rep.unbounded ? -1.0 : rep.ratio.to_double())
                   << '\n';
    if (hooks.after_run) hooks.after_run(seq, rep, *alg);
}

}  // namespace detail

// Every labeled graph on up to min(5, n_max) vertices under every arrival
// order (sampled once past order_cap), then seeded random instances for
// n in 6..n_max. Deterministic for a fixed config.
inline SweepSummary sweep_small_graphs(const SweepConfig& cfg, const SweepHooks& hooks = {}) {
    SweepSummary sum;
    const bool vertex_model = problem_arrival_model(cfg.problem) == ArrivalModel::VertexArrival;
    for (int n = 1; n <= std::min(5, cfg.n_max); ++n) {
        const int pairs = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> pair_list;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pair_list.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
            LabeledGraph g{n, {}};
            for (int b = 0; b < pairs; ++b)
                if (mask >> b & 1)
                    g.edges.push_back(Edge{pair_list[static_cast<std::size_t>(b)].first,
                                           pair_list[static_cast<std::size_t>(b)].second, 1});
            std::optional<long long> known_opt;
            const int items = vertex_model ? n : static_cast<int>(g.edges.size());
            const long long total_orders = detail::factorial_capped(items, cfg.order_cap);
            const bool exhaustive = total_orders < cfg.order_cap ||
                                    detail::factorial_capped(items, cfg.order_cap + 1) <=
                                        cfg.order_cap;
            std::vector<int> order(static_cast<std::size_t>(items));
            for (int i = 0; i < items; ++i) order[static_cast<std::size_t>(i)] = i;
            auto run_order = [&](const std::vector<int>& ord) {
                const RequestSequence seq =
                    vertex_model ? vertex_sequence(g, ord) : edge_sequence(g, ord);
                if (!known_opt) {
                    // isomorphic reorderings share the optimum value
                    known_opt = problem_oracle(cfg.problem, build_snapshot(seq), cfg.caps).value;
                }
                detail::sweep_one(cfg, hooks, seq, known_opt, sum);
            };
            if (exhaustive) {
                do { run_order(order); } while (std::next_permutation(order.begin(), order.end()));
            } else {
                DetRng rng(cfg.seed ^ (mask * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(n)));
                for (int s = 0; s < cfg.order_cap; ++s) {
                    std::vector<int> ord(order);
                    rng.shuffle(ord);
                    run_order(ord);
                }
            }
        }
    }
    for (int n = 6; n <= cfg.n_max; ++n) {
        DetRng rng(cfg.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(n));
        for (int s = 0; s < cfg.sample_count; ++s) {
            const double p = rng.unit();
            LabeledGraph g = gen_gnp(n, p, rng);
            std::vector<int> order(
                static_cast<std::size_t>(vertex_model ? n : static_cast<int>(g.edges.size())));
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
            rng.shuffle(order);
            const RequestSequence seq =
                vertex_model ? vertex_sequence(g, order) : edge_sequence(g, order);
            detail::sweep_one(cfg, hooks, seq, std::nullopt, sum);
        }
    }
    return sum;
}

inline ordered_json sweep_to_json(const SweepSummary& sum) {
    ordered_json j;
    j["runs"] = sum.runs;
    j["max_ratio"] = sum.max_ratio.to_string();
    j["max_ratio_double"] = sum.max_ratio.to_double();
    j["argmax"] = {{"events", sum.argmax_events},
                   {"alg_value", sum.argmax_alg},
                   {"opt_value", sum.argmax_opt}};
    j["any_unbounded"] = sum.any_unbounded;
    j["histogram"] = sum.histogram;
    return j;
}

}  // namespace lateops
