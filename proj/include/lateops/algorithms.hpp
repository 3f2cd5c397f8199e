#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lateops/disjoint_set.hpp"
#include "lateops/ledger.hpp"
#include "lateops/oracles.hpp"
#include "lateops/rational.hpp"
#include "lateops/stream.hpp"

namespace lateops {

// An online algorithm sees each arrival after it has been applied to the
// snapshot and revealed in the ledger, and answers with ledger moves.
class OnlineAlgorithm {
  public:
    OnlineAlgorithm(std::string name, DecisionModel model, ItemKind kind)
        : name_(std::move(name)), model_(model), kind_(kind) {}
    virtual ~OnlineAlgorithm() = default;

    const std::string& name() const { return name_; }
    DecisionModel model() const { return model_; }
    ItemKind item_kind() const { return kind_; }

    virtual void step(const ArrivalEvent& ev, const GraphSnapshot& g, SolutionLedger& led) = 0;

  private:
    std::string name_;
    DecisionModel model_;
    ItemKind kind_;
};

// ---------- swap-set search for the swapping independent-set algorithm ----

// A set T of pending vertices that is independent and satisfies
// |T| >= sqrt(3) * |N(T) cap S|, together with that conflict set.
struct AdmissibleSet {
    std::vector<int> vertices;  // sorted
    std::vector<int> conflict;  // N(T) cap S, sorted
};

struct SwapSearchTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

struct PendingClass {
    std::vector<int> members;        // sorted, share one neighborhood
    std::vector<int> conflict_idx;   // indices into the S order
};

}  // namespace detail

// Exact search for the admissible set minimizing |N(T) cap S|, breaking ties
// by larger |T|, then by lexicographically smallest sorted vertex list.
//
// Pending vertices with identical neighborhoods are interchangeable: they are
// pairwise non-adjacent, contribute the same conflicts, and any optimum can be
// closed under completing such a class without growing its conflict set. The
// subset enumeration therefore runs over neighborhood classes, whose count
// stays small even when |P| is large; class_cap bounds it explicitly.
inline std::optional<AdmissibleSet> find_admissible_min_conflict(const GraphSnapshot& g,
                                                                 const std::set<int>& accepted,
                                                                 const std::set<int>& pending,
                                                                 int class_cap = 24) {
    if (pending.empty()) return std::nullopt;

    std::vector<int> s_order(accepted.begin(), accepted.end());
    std::map<int, int> s_pos;
    for (std::size_t i = 0; i < s_order.size(); ++i) s_pos[s_order[i]] = static_cast<int>(i);

    std::map<std::vector<int>, std::vector<int>> by_neighborhood;
    for (int p : pending) by_neighborhood[g.neighbors(p)].push_back(p);

    std::vector<detail::PendingClass> classes;
    std::vector<const std::vector<int>*> class_nbrs;
    for (auto& [nbrs, members] : by_neighborhood) {
        detail::PendingClass cls;
        cls.members = members;  // ascending: set iteration order
        for (int u : nbrs)
            if (auto it = s_pos.find(u); it != s_pos.end()) cls.conflict_idx.push_back(it->second);
        classes.push_back(std::move(cls));
        class_nbrs.push_back(&nbrs);
    }
    const int k = static_cast<int>(classes.size());
    if (k > class_cap)
        throw SwapSearchTooLarge("swap-set search: " + std::to_string(k) +
                                 " neighborhood classes exceed cap " + std::to_string(class_cap));

    // classes i, j are mutually adjacent iff any member of one neighbors the
    // other; neighborhoods are uniform, so one representative probe suffices.
    std::vector<std::vector<char>> clash(static_cast<std::size_t>(k),
                                         std::vector<char>(static_cast<std::size_t>(k), 0));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const std::vector<int>& nb = *class_nbrs[static_cast<std::size_t>(i)];
            const bool adj = std::binary_search(nb.begin(), nb.end(),
                                                classes[static_cast<std::size_t>(j)].members[0]);
            clash[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = adj;
            clash[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = adj;
        }

    std::vector<int> conflict_count(s_order.size(), 0);
    std::vector<char> chosen(static_cast<std::size_t>(k), 0);
    long long total = 0, conflict = 0;
    bool have_best = false;
    long long best_conflict = 0, best_total = 0;
    std::vector<int> best_vertices;

    auto materialize = [&]() {
        std::vector<int> vs;
        for (int i = 0; i < k; ++i)
            if (chosen[static_cast<std::size_t>(i)])
                vs.insert(vs.end(), classes[static_cast<std::size_t>(i)].members.begin(),
                          classes[static_cast<std::size_t>(i)].members.end());
        std::sort(vs.begin(), vs.end());
        return vs;
    };

    auto consider = [&]() {
        if (total == 0) return;
        if (!geq_sqrt3_times(total, conflict)) return;
        if (have_best && (conflict > best_conflict ||
                          (conflict == best_conflict && total < best_total)))
            return;
        std::vector<int> vs = materialize();
        if (have_best && conflict == best_conflict && total == best_total &&
            !(vs < best_vertices))
            return;
        have_best = true;
        best_conflict = conflict;
        best_total = total;
        best_vertices = std::move(vs);
    };

    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == k) {
            consider();
            return;
        }
        bool blocked = false;
        for (int j = 0; j < idx && !blocked; ++j)
            blocked = chosen[static_cast<std::size_t>(j)] &&
                      clash[static_cast<std::size_t>(j)][static_cast<std::size_t>(idx)];
        if (!blocked) {
            chosen[static_cast<std::size_t>(idx)] = 1;
            total += static_cast<long long>(classes[static_cast<std::size_t>(idx)].members.size());
            for (int c : classes[static_cast<std::size_t>(idx)].conflict_idx)
                if (conflict_count[static_cast<std::size_t>(c)]++ == 0) ++conflict;
            self(self, idx + 1);
            for (int c : classes[static_cast<std::size_t>(idx)].conflict_idx)
                if (--conflict_count[static_cast<std::size_t>(c)] == 0) --conflict;
            total -= static_cast<long long>(classes[static_cast<std::size_t>(idx)].members.size());
            chosen[static_cast<std::size_t>(idx)] = 0;
        }
        self(self, idx + 1);
    };
    rec(rec, 0);

    if (!have_best) return std::nullopt;
    AdmissibleSet out;
    out.vertices = std::move(best_vertices);
    std::set<int> confl;
    for (int v : out.vertices)
        for (int u : g.neighbors(v))
            if (accepted.count(u)) confl.insert(u);
    out.conflict.assign(confl.begin(), confl.end());
    return out;
}

// Direct subset enumeration over P; exponential, kept as an independent
// check of swap-search results and terminal states.
inline bool admissible_set_exists_bruteforce(const GraphSnapshot& g, const std::set<int>& accepted,
                                             const std::set<int>& pending, int pending_cap = 22) {
    const std::vector<int> pool(pending.begin(), pending.end());
    const int k = static_cast<int>(pool.size());
    if (k > pending_cap)
        throw SwapSearchTooLarge("brute-force admissibility check: |P| exceeds cap");
    for (std::uint64_t mask = 1; mask < (1ULL << k); ++mask) {
        std::vector<int> t;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) t.push_back(pool[static_cast<std::size_t>(i)]);
        if (!is_independent_set(g, t)) continue;
        std::set<int> confl;
        for (int v : t)
            for (int u : g.neighbors(v))
                if (accepted.count(u)) confl.insert(u);
        if (geq_sqrt3_times(static_cast<long long>(t.size()), static_cast<long long>(confl.size())))
            return true;
    }
    return false;
}

// ---------- length-3 augmenting path search for the matching algorithm ----

struct Length3Path {
    int x, u, v, y;          // x-u, u-v (matched), v-y
    int edge_xu, edge_uv, edge_vy;
};

// Smallest (u, v, x, y) lexicographically, over both orientations of every
// matched edge uv and free endpoints x, y.
inline std::optional<Length3Path> find_length3_augmenting_path(const GraphSnapshot& g,
                                                               const std::set<int>& matched) {
    std::vector<int> mate(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int id : matched) {
        const Edge& e = g.edge(id);
        mate[static_cast<std::size_t>(e.u)] = id;
        mate[static_cast<std::size_t>(e.v)] = id;
    }
    std::vector<std::pair<int, int>> oriented;  // (u, v) with {u,v} matched
    for (int id : matched) {
        const Edge& e = g.edge(id);
        oriented.emplace_back(e.u, e.v);
        oriented.emplace_back(e.v, e.u);
    }
    std::sort(oriented.begin(), oriented.end());
    for (auto [u, v] : oriented) {
        for (int x : g.neighbors(u)) {
            if (mate[static_cast<std::size_t>(x)] >= 0) continue;
            for (int y : g.neighbors(v)) {
                if (y == x || mate[static_cast<std::size_t>(y)] >= 0) continue;
                return Length3Path{x, u, v, y, g.edge_id(x, u),
                                   mate[static_cast<std::size_t>(u)], g.edge_id(v, y)};
            }
            // this x admits no y (e.g. the only free neighbor of v is x
            // itself); a larger x may still work
        }
    }
    return std::nullopt;
}

// ---------- independent set -----------------------------------------------

class GreedyIndependentSet : public OnlineAlgorithm {
  public:
    explicit GreedyIndependentSet(DecisionModel model)
        : OnlineAlgorithm("is.greedy", model, ItemKind::VertexItem) {}

    void step(const ArrivalEvent& ev, const GraphSnapshot&, SolutionLedger& led) override {
        bool compatible = true;
        for (int u : ev.neighbors)
            if (led.accepted().count(u)) { compatible = false; break; }
        if (compatible) {
            led.accept_now(ev.vertex);
        } else if (led.model() == DecisionModel::Standard ||
                   led.model() == DecisionModel::LateReject) {
            led.reject_now(ev.vertex);
        }
        // late-accept models: incompatible vertices simply stay pending
    }
};

// Keeps a single neighbor swap: an arriving vertex with exactly one accepted
// neighbor evicts it.
class SwapIndependentSet : public OnlineAlgorithm {
  public:
    SwapIndependentSet()
        : OnlineAlgorithm("is.swap", DecisionModel::LateReject, ItemKind::VertexItem) {}

    void step(const ArrivalEvent& ev, const GraphSnapshot&, SolutionLedger& led) override {
        std::vector<int> hit;
        for (int u : ev.neighbors)
            if (led.accepted().count(u)) hit.push_back(u);
        if (hit.empty()) {
            led.accept_now(ev.vertex);
        } else if (hit.size() == 1) {
            led.late_reject(hit[0]);
            led.accept_now(ev.vertex);
        } else {
            led.reject_now(ev.vertex);
        }
    }
};

// Accepts nothing until the revealed graph holds an independent set of size
// c, late-accepts one maximum witness, then continues greedily.
class ThresholdIndependentSet : public OnlineAlgorithm {
  public:
    ThresholdIndependentSet(long long c, OracleCaps caps)
        : OnlineAlgorithm("is.threshold", DecisionModel::LateAccept, ItemKind::VertexItem),
          c_(c), caps_(caps) {
        if (c_ < 1) throw std::invalid_argument("is.threshold: c must be positive");
    }

    void step(const ArrivalEvent& ev, const GraphSnapshot& g, SolutionLedger& led) override {
        if (!triggered_) {
            OracleResult opt = opt_independent_set(g, caps_);
            if (opt.value >= c_) {
                for (int v : opt.witness) led.late_accept(v);
                triggered_ = true;
            }
            return;
        }
        bool compatible = true;
        for (int u : ev.neighbors)
            if (led.accepted().count(u)) { compatible = false; break; }
        if (compatible) led.accept_now(ev.vertex);
    }

    bool triggered() const { return triggered_; }

  private:
    long long c_;
    OracleCaps caps_;
    bool triggered_ = false;
};

// Greedy acceptance plus swap moves: while some admissible set exists, the
// one with the fewest accepted neighbors replaces them.
class SwappingIndependentSet : public OnlineAlgorithm {
  public:
    explicit SwappingIndependentSet(int class_cap = 24)
        : OnlineAlgorithm("is.admissible", DecisionModel::LateAcceptThenReject, ItemKind::VertexItem),
          class_cap_(class_cap) {}

    void step(const ArrivalEvent& ev, const GraphSnapshot& g, SolutionLedger& led) override {
        bool compatible = true;
        for (int u : ev.neighbors)
            if (led.accepted().count(u)) { compatible = false; break; }
        if (compatible) {
            led.accept_now(ev.vertex);
            arrival_accepted_.insert(ev.vertex);
            return;
        }
        while (auto t = find_admissible_min_conflict(g, led.accepted(), led.pending(), class_cap_)) {
            for (int u : t->conflict) {
                led.late_reject(u);
                arrival_accepted_.erase(u);
                swap_accepted_.erase(u);
            }
            for (int v : t->vertices) {
                led.late_accept(v);
                swap_accepted_.insert(v);
            }
        }
    }

    // Current accepted vertices split by how they entered the solution.
    const std::set<int>& accepted_on_arrival() const { return arrival_accepted_; }
    const std::set<int>& accepted_by_swap() const { return swap_accepted_; }

  private:
    int class_cap_;
    std::set<int> arrival_accepted_;
    std::set<int> swap_accepted_;
};

// ---------- matching -------------------------------------------------------

class GreedyMatching : public OnlineAlgorithm {
  public:
    explicit GreedyMatching(DecisionModel model)
        : OnlineAlgorithm("match.greedy", model, ItemKind::EdgeItem) {}

    void step(const ArrivalEvent&, const GraphSnapshot& g, SolutionLedger& led) override {
        const int id = g.edge_count() - 1;
        const Edge& e = g.edge(id);
        bool free = true;
        for (int other : led.accepted()) {
            const Edge& f = g.edge(other);
            if (f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v) { free = false; break; }
        }
        if (free) {
            led.accept_now(id);
        } else if (led.model() == DecisionModel::Standard ||
                   led.model() == DecisionModel::LateReject) {
            led.reject_now(id);
        }
    }
};

// Maximal matching that additionally augments along length-3 paths: a matched
// edge uv with free-ended edges xu, vy is traded for those two.
class AugmentingMatching : public OnlineAlgorithm {
  public:
    AugmentingMatching()
        : OnlineAlgorithm("match.augment", DecisionModel::LateAcceptThenReject, ItemKind::EdgeItem) {}

    void step(const ArrivalEvent&, const GraphSnapshot& g, SolutionLedger& led) override {
        const int id = g.edge_count() - 1;
        const Edge& e = g.edge(id);
        std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
        for (int other : led.accepted()) {
            const Edge& f = g.edge(other);
            used[static_cast<std::size_t>(f.u)] = used[static_cast<std::size_t>(f.v)] = 1;
        }
        if (!used[static_cast<std::size_t>(e.u)] && !used[static_cast<std::size_t>(e.v)])
            led.accept_now(id);
        while (auto p = find_length3_augmenting_path(g, led.accepted())) {
            led.late_accept(p->edge_xu);
            led.late_accept(p->edge_vy);
            led.late_reject(p->edge_uv);
        }
    }
};

// ---------- vertex cover ---------------------------------------------------

// Accepts a vertex iff it arrives with an uncovered incident edge.
class NecessityVertexCover : public OnlineAlgorithm {
  public:
    NecessityVertexCover()
        : OnlineAlgorithm("vc.standard", DecisionModel::Standard, ItemKind::VertexItem) {}

    void step(const ArrivalEvent& ev, const GraphSnapshot&, SolutionLedger& led) override {
        for (int u : ev.neighbors) {
            if (!led.accepted().count(u)) {
                led.accept_now(ev.vertex);
                return;
            }
        }
        led.reject_now(ev.vertex);
    }
};

// Mimics greedy maximal matching: the first wholly uncovered incident edge
// brings both endpoints into the cover.
class MatchingVertexCover : public OnlineAlgorithm {
  public:
    explicit MatchingVertexCover(DecisionModel model)
        : OnlineAlgorithm("vc.matching", model, ItemKind::VertexItem) {}

    void step(const ArrivalEvent& ev, const GraphSnapshot&, SolutionLedger& led) override {
        if (led.accepted().count(ev.vertex)) return;
        for (int u : ev.neighbors) {
            if (!led.accepted().count(u)) {
                led.late_accept(u);
                led.accept_now(ev.vertex);
                return;
            }
        }
    }
};

// Accepts the first b+1 vertices outright, then late-rejects down to an
// optimal cover of the revealed graph and continues accepting only vertices
// with an uncovered incident edge.
class ResetVertexCover : public OnlineAlgorithm {
  public:
    ResetVertexCover(long long b, OracleCaps caps)
        : OnlineAlgorithm("vc.reset", DecisionModel::LateReject, ItemKind::VertexItem),
          b_(b), caps_(caps) {
        if (b_ < 0) throw std::invalid_argument("vc.reset: b must be non-negative");
    }

    void step(const ArrivalEvent& ev, const GraphSnapshot& g, SolutionLedger& led) override {
        if (!reset_done_) {
            led.accept_now(ev.vertex);
            if (ev.vertex == b_) {
                OracleResult cover = opt_vertex_cover(g, caps_);
                const std::set<int> keep(cover.witness.begin(), cover.witness.end());
                const std::vector<int> held(led.accepted().begin(), led.accepted().end());
                for (int u : held)
                    if (!keep.count(u)) led.late_reject(u);
                reset_done_ = true;
            }
            return;
        }
        for (int u : ev.neighbors) {
            if (!led.accepted().count(u)) {
                led.accept_now(ev.vertex);
                return;
            }
        }
        led.reject_now(ev.vertex);
    }

  private:
    long long b_;
    OracleCaps caps_;
    bool reset_done_ = false;
};

// ---------- spanning forest ------------------------------------------------

class JoiningSpanningForest : public OnlineAlgorithm {
  public:
    JoiningSpanningForest()
        : OnlineAlgorithm("msf.standard", DecisionModel::Standard, ItemKind::EdgeItem) {}

    void step(const ArrivalEvent&, const GraphSnapshot& g, SolutionLedger& led) override {
        const int id = g.edge_count() - 1;
        const Edge& e = g.edge(id);
        dsu_.grow_to(g.vertex_count());
        if (dsu_.unite(e.u, e.v)) led.accept_now(id);
        else led.reject_now(id);
    }

  private:
    DisjointSet dsu_;
};

// Cycle rule: when an arriving edge closes a cycle in the kept forest, the
// heaviest cycle edge goes, ties by later arrival.
class CycleEvictingSpanningForest : public OnlineAlgorithm {
  public:
    CycleEvictingSpanningForest()
        : OnlineAlgorithm("msf.redrule", DecisionModel::LateReject, ItemKind::EdgeItem) {}

    void step(const ArrivalEvent&, const GraphSnapshot& g, SolutionLedger& led) override {
        const int id = g.edge_count() - 1;
        const Edge& e = g.edge(id);
        while (static_cast<int>(forest_.size()) < g.vertex_count()) forest_.emplace_back();
        const std::vector<int> path = forest_path(e.u, e.v);
        if (path.empty()) {
            led.accept_now(id);
            link(id, g);
            return;
        }
        int heaviest = id;
        const Edge* he = &e;
        for (int cand : path) {
            const Edge& ce = g.edge(cand);
            if (ce.weight > he->weight || (ce.weight == he->weight && cand > heaviest)) {
                heaviest = cand;
                he = &ce;
            }
        }
        if (heaviest == id) {
            led.reject_now(id);
            return;
        }
        led.late_reject(heaviest);
        unlink(heaviest, g);
        led.accept_now(id);
        link(id, g);
    }

  private:
    void link(int id, const GraphSnapshot& g) {
        const Edge& e = g.edge(id);
        forest_[static_cast<std::size_t>(e.u)].push_back({e.v, id});
        forest_[static_cast<std::size_t>(e.v)].push_back({e.u, id});
    }

    void unlink(int id, const GraphSnapshot& g) {
        const Edge& e = g.edge(id);
        auto drop = [id](std::vector<std::pair<int, int>>& v) {
            std::erase_if(v, [id](const std::pair<int, int>& p) { return p.second == id; });
        };
        drop(forest_[static_cast<std::size_t>(e.u)]);
        drop(forest_[static_cast<std::size_t>(e.v)]);
    }

    // Edge ids along the unique forest path between a and b; empty if they
    // sit in different components.
    std::vector<int> forest_path(int a, int b) {
        std::vector<int> via_edge(forest_.size(), -1), via_from(forest_.size(), -1);
        std::vector<int> queue{a};
        via_from[static_cast<std::size_t>(a)] = a;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            if (v == b) break;
            for (auto [u, id] : forest_[static_cast<std::size_t>(v)]) {
                if (via_from[static_cast<std::size_t>(u)] >= 0) continue;
                via_from[static_cast<std::size_t>(u)] = v;
                via_edge[static_cast<std::size_t>(u)] = id;
                queue.push_back(u);
            }
        }
        std::vector<int> path;
        if (via_from[static_cast<std::size_t>(b)] < 0) return path;
        for (int v = b; v != a; v = via_from[static_cast<std::size_t>(v)])
            path.push_back(via_edge[static_cast<std::size_t>(v)]);
        return path;
    }

    std::vector<std::vector<std::pair<int, int>>> forest_;  // vertex -> (nbr, edge id)
};

// ---------- registry -------------------------------------------------------

struct AlgorithmSpec {
    std::string base;
    std::map<std::string, long long> params;
};

// "vc.reset:b=3" / "is.threshold:c=4,cap=10" style names.
inline AlgorithmSpec parse_algorithm_spec(const std::string& s) {
    AlgorithmSpec spec;
    const auto colon = s.find(':');
    spec.base = s.substr(0, colon);
    if (colon == std::string::npos) return spec;
    std::string rest = s.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        const std::string kv = rest.substr(pos, comma - pos);
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size())
            throw std::invalid_argument("malformed parameter '" + kv + "' in '" + s + "'");
        try {
            spec.params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("parameter '" + kv + "' in '" + s + "' is not an integer");
        }
        pos = comma + 1;
    }
    return spec;
}

inline const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = {
        "is.greedy",   "is.swap",     "is.threshold", "is.admissible", "match.greedy",
        "match.augment", "vc.standard", "vc.matching", "vc.reset", "msf.standard", "msf.redrule"};
    return names;
}

inline std::vector<DecisionModel> supported_models(const std::string& base) {
    using D = DecisionModel;
    if (base == "is.greedy") return {D::Standard, D::LateReject, D::LateAcceptThenReject};
    if (base == "is.swap") return {D::LateReject};
    if (base == "is.threshold") return {D::LateAccept};
    if (base == "is.admissible") return {D::LateAcceptThenReject};
    if (base == "match.greedy")
        return {D::Standard, D::LateAccept, D::LateReject, D::LateAcceptThenReject};
    if (base == "match.augment") return {D::LateAcceptThenReject};
    if (base == "vc.standard") return {D::Standard};
    if (base == "vc.matching") return {D::LateAccept, D::LateAcceptThenReject};
    if (base == "vc.reset") return {D::LateReject};
    if (base == "msf.standard") return {D::Standard};
    if (base == "msf.redrule") return {D::LateReject};
    throw std::invalid_argument("unknown algorithm '" + base + "'");
}

inline DecisionModel canonical_model(const std::string& base) { return supported_models(base)[0]; }

inline std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& name, DecisionModel model,
                                                       const OracleCaps& caps = OracleCaps::from_env()) {
    const AlgorithmSpec spec = parse_algorithm_spec(name);
    const std::vector<DecisionModel> ok = supported_models(spec.base);
    if (std::find(ok.begin(), ok.end(), model) == ok.end())
        throw std::invalid_argument("algorithm '" + spec.base + "' does not support model '" +
                                    std::string(to_string(model)) + "'");
    auto param = [&](const char* key) -> std::optional<long long> {
        auto it = spec.params.find(key);
        return it == spec.params.end() ? std::nullopt : std::optional<long long>(it->second);
    };
    auto require = [&](const char* key) {
        auto v = param(key);
        if (!v)
            throw std::invalid_argument("algorithm '" + spec.base + "' requires parameter '" +
                                        key + "'");
        return *v;
    };
    if (spec.base == "is.greedy") return std::make_unique<GreedyIndependentSet>(model);
    if (spec.base == "is.swap") return std::make_unique<SwapIndependentSet>();
    if (spec.base == "is.threshold") return std::make_unique<ThresholdIndependentSet>(require("c"), caps);
    if (spec.base == "is.admissible")
        return std::make_unique<SwappingIndependentSet>(static_cast<int>(param("cap").value_or(24)));
    if (spec.base == "match.greedy") return std::make_unique<GreedyMatching>(model);
    if (spec.base == "match.augment") return std::make_unique<AugmentingMatching>();
    if (spec.base == "vc.standard") return std::make_unique<NecessityVertexCover>();
    if (spec.base == "vc.matching") return std::make_unique<MatchingVertexCover>(model);
    if (spec.base == "vc.reset") return std::make_unique<ResetVertexCover>(require("b"), caps);
    if (spec.base == "msf.standard") return std::make_unique<JoiningSpanningForest>();
    if (spec.base == "msf.redrule") return std::make_unique<CycleEvictingSpanningForest>();
    throw std::invalid_argument("unknown algorithm '" + spec.base + "'");
}

}  // namespace lateops
