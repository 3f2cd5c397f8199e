#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lateops/ledger.hpp"
#include "lateops/oracles.hpp"
#include "lateops/rational.hpp"
#include "lateops/stream.hpp"

namespace lateops {

using ordered_json = nlohmann::ordered_json;

// Adaptive request builders. next() observes everything decided so far and
// either extends the input or ends it. Alongside the events, an adversary
// maintains a certified bound on the offline optimum of the emitted graph:
// an explicit witness solution (lower bound for maximization problems, a
// feasible solution i.e. upper bound for minimization ones), so reported
// ratios stay sound even beyond oracle reach.
class Adversary {
  public:
    Adversary(std::string name, ArrivalModel arrival) : name_(std::move(name)), arrival_(arrival) {}
    virtual ~Adversary() = default;

    const std::string& name() const { return name_; }
    ArrivalModel arrival_model() const { return arrival_; }
    const GraphSnapshot& emitted() const { return mirror_; }

    std::optional<ArrivalEvent> next(const GraphSnapshot& g, const SolutionLedger& led) {
        auto ev = produce(g, led);
        if (ev) mirror_.apply(*ev);
        return ev;
    }

    virtual long long certified_bound() const = 0;
    virtual std::vector<int> certified_witness() const = 0;  // item ids
    virtual ordered_json details() const { return ordered_json::object(); }

  protected:
    virtual std::optional<ArrivalEvent> produce(const GraphSnapshot& g,
                                                const SolutionLedger& led) = 0;

    GraphSnapshot mirror_;

  private:
    std::string name_;
    ArrivalModel arrival_;
};

// ---------- independent set ------------------------------------------------

// Isolated vertices until the first acceptance, then pendants on that vertex.
// The certified set is everything but the victim; before any acceptance it is
// the isolated vertices themselves when count_isolated holds (late-accept
// flavor) and empty otherwise (standard flavor).
class IsPendantAdversary : public Adversary {
  public:
    IsPendantAdversary(std::string name, long long n, bool count_isolated)
        : Adversary(std::move(name), ArrivalModel::VertexArrival),
          n_(n), count_isolated_(count_isolated) {
        if (n_ < 1) throw std::invalid_argument("adversary requires n >= 1");
    }

    long long certified_bound() const override {
        const long long emitted = mirror_.vertex_count();
        if (victim_ >= 0) return emitted - 1;
        return count_isolated_ ? emitted : 0;
    }

    std::vector<int> certified_witness() const override {
        std::vector<int> w;
        if (victim_ < 0 && !count_isolated_) return w;
        for (int v = 0; v < mirror_.vertex_count(); ++v)
            if (v != victim_) w.push_back(v);
        return w;
    }

    ordered_json details() const override {
        return ordered_json{{"victim", victim_}};
    }

  protected:
    std::optional<ArrivalEvent> produce(const GraphSnapshot&, const SolutionLedger& led) override {
        if (victim_ < 0 && !led.accepted().empty()) victim_ = *led.accepted().begin();
        const int id = mirror_.vertex_count();
        if (id >= n_) return std::nullopt;
        if (victim_ < 0) return ArrivalEvent::vertex_arrival(id);
        return ArrivalEvent::vertex_arrival(id, {victim_});
    }

  private:
    long long n_;
    bool count_isolated_;
    int victim_ = -1;
};

// Each new vertex neighbors the smallest currently held vertex, so holders
// are chased along a growing forest; the certified set is an exact maximum
// independent set of that forest.
class IsChaseAdversary : public Adversary {
  public:
    explicit IsChaseAdversary(long long n)
        : Adversary("adv.is.lr", ArrivalModel::VertexArrival), n_(n) {
        if (n_ < 1) throw std::invalid_argument("adversary requires n >= 1");
    }

    long long certified_bound() const override { return max_is_forest(mirror_).value; }
    std::vector<int> certified_witness() const override { return max_is_forest(mirror_).witness; }

  protected:
    std::optional<ArrivalEvent> produce(const GraphSnapshot&, const SolutionLedger& led) override {
        const int id = mirror_.vertex_count();
        if (id >= n_) return std::nullopt;
        if (led.accepted().empty()) return ArrivalEvent::vertex_arrival(id);
        return ArrivalEvent::vertex_arrival(id, {*led.accepted().begin()});
    }

  private:
    long long n_;
};

// Bag construction: the input is a union of independent bags; a new vertex is
// adjacent to every presented vertex outside its own bag that was not
// late-rejected at presentation time. Holding an independent set therefore
// confines the algorithm to one bag, and every switch strands the rejected
// vertices as part of an offline solution.
//
// The certified bound is the best chain of disjoint witness sets: full bags,
// rejected same-bag batches, and the current holdings, where consecutive
// sets must be separated in time (earlier one fully rejected before the later
// one started). Such a chain is independent by construction. Termination:
// bound >= (c_target + eps) * max(holdings, 1), or the event budget runs out.
class IsBagsAdversary : public Adversary {
  public:
    IsBagsAdversary(Rational c_target, Rational eps, long long n1, long long budget)
        : Adversary("adv.is.bags", ArrivalModel::VertexArrival),
          c_target_(c_target), eps_(eps), n1_(n1), budget_(budget) {
        if (n1_ < 1) throw std::invalid_argument("adv.is.bags requires n1 >= 1");
        if (budget_ < 1) throw std::invalid_argument("adv.is.bags requires budget >= 1");
        if (!(c_target_ > Rational(0)) || !(eps_ > Rational(0)))
            throw std::invalid_argument("adv.is.bags requires positive c and eps");
        bags_.emplace_back();
    }

    long long certified_bound() const override { return bound_; }
    std::vector<int> certified_witness() const override { return witness_; }

    Rational achieved_ratio() const { return achieved_; }
    bool target_reached() const { return target_reached_; }
    long long switches() const { return switches_; }
    int alg_bag() const { return alg_bag_; }

    ordered_json details() const override {
        ordered_json d;
        d["bags"] = ordered_json::array();
        for (const auto& b : bags_) d["bags"].push_back(b.size());
        d["a"] = ordered_json::array();
        for (std::size_t j = 0; j < bags_.size(); ++j) {
            auto it = first_reject_a_.find(static_cast<int>(j));
            if (it != first_reject_a_.end()) d["a"].push_back(it->second);
            else if (static_cast<int>(j) == alg_bag_) d["a"].push_back(holdings_);
            else d["a"].push_back(0);
        }
        long long s_odd = 0, s_even = 0;
        for (std::size_t j = 0; j < d["a"].size(); ++j) {
            if (j % 2 == 0) s_odd += d["a"][j].get<long long>();   // bags 1,3,... (0-based even)
            else s_even += d["a"][j].get<long long>();
        }
        d["s_odd"] = s_odd;
        d["s_even"] = s_even;
        d["switches"] = switches_;
        d["holdings"] = holdings_;
        d["bound"] = bound_;
        d["achieved"] = achieved_.to_string();
        d["target_reached"] = target_reached_;
        return d;
    }

  protected:
    std::optional<ArrivalEvent> produce(const GraphSnapshot&, const SolutionLedger& led) override {
        observe(led);
        refresh_bound(led);
        const Rational threshold = (c_target_ + eps_) * Rational(std::max<long long>(holdings_, 1));
        if (Rational(bound_) >= threshold) {
            target_reached_ = true;
            return std::nullopt;
        }
        if (mirror_.vertex_count() >= budget_) return std::nullopt;

        const int id = mirror_.vertex_count();
        const int bag = static_cast<int>(bags_.size()) - 1;
        std::vector<int> nbrs;
        for (int w = 0; w < id; ++w)
            if (vertex_bag_[static_cast<std::size_t>(w)] != bag && !led.rejected().count(w))
                nbrs.push_back(w);
        vertex_bag_.push_back(bag);
        bags_[static_cast<std::size_t>(bag)].push_back(id);
        return ArrivalEvent::vertex_arrival(id, std::move(nbrs));
    }

  private:
    struct Node {
        std::vector<int> members;
        int start = 0, end = 0;          // min/max member id (presentation order)
        long long rejected_by = -1;      // tick all members were rejected, -1 if alive
    };

    void observe(const SolutionLedger& led) {
        const long long tick = mirror_.vertex_count();
        for (int v : led.rejected()) {
            if (reject_tick_.count(v)) continue;
            reject_tick_[v] = tick;
            const int bag = vertex_bag_[static_cast<std::size_t>(v)];
            batch_members_[{bag, tick}].push_back(v);
            if (!first_reject_a_.count(bag)) {
                long long held_now = 0;
                for (int u : bags_[static_cast<std::size_t>(bag)])
                    if (led.accepted().count(u)) ++held_now;
                long long batch = 0;
                for (int u : led.rejected())
                    if (vertex_bag_[static_cast<std::size_t>(u)] == bag &&
                        !reject_tick_.count(u))
                        ++batch;
                // batch counts peers recorded in this same observation pass
                first_reject_a_[bag] = held_now + batch + 1;
            }
        }
        holdings_ = static_cast<long long>(led.accepted().size());
        int now_bag = alg_bag_;
        int newest = -1;
        for (int v : led.accepted()) newest = std::max(newest, v);
        if (newest >= 0) now_bag = vertex_bag_[static_cast<std::size_t>(newest)];
        if (now_bag != alg_bag_) {
            if (alg_bag_ >= 0) {  // first acceptance is not a switch
                ++switches_;
                if (bags_.size() >= 2) bags_.emplace_back();
            }
            alg_bag_ = now_bag;
        }
        if (bags_.size() == 1 &&
            static_cast<long long>(bags_[0].size()) >= n1_ && holdings_ >= 1)
            bags_.emplace_back();
    }

    void refresh_bound(const SolutionLedger& led) {
        std::vector<Node> nodes;
        for (const auto& [key, members] : batch_members_) {
            Node nd;
            nd.members = members;
            nd.start = *std::min_element(members.begin(), members.end());
            nd.end = *std::max_element(members.begin(), members.end());
            nd.rejected_by = key.second;
            nodes.push_back(std::move(nd));
        }
        for (const auto& bag : bags_) {
            if (bag.empty()) continue;
            Node nd;
            nd.members = bag;
            nd.start = bag.front();
            nd.end = bag.back();
            nd.rejected_by = -1;
            for (int v : bag) {
                auto it = reject_tick_.find(v);
                if (it == reject_tick_.end()) { nd.rejected_by = -1; break; }
                nd.rejected_by = std::max(nd.rejected_by, it->second);
            }
            nodes.push_back(std::move(nd));
        }
        if (!led.accepted().empty()) {
            Node nd;
            nd.members.assign(led.accepted().begin(), led.accepted().end());
            nd.start = nd.members.front();
            nd.end = nd.members.back();
            nd.rejected_by = -1;
            nodes.push_back(std::move(nd));
        }
        std::sort(nodes.begin(), nodes.end(),
                  [](const Node& a, const Node& b) { return a.start < b.start; });
        // Longest chain under: previous fully rejected before the next
        // starts, eras disjoint. The constraint is inherited along sorted
        // starts, so consecutive feasibility gives pairwise feasibility.
        const std::size_t k = nodes.size();
        std::vector<long long> best(k);
        std::vector<int> prev(k, -1);
        long long top = 0;
        int top_at = -1;
        for (std::size_t i = 0; i < k; ++i) {
            best[i] = static_cast<long long>(nodes[i].members.size());
            for (std::size_t j = 0; j < i; ++j) {
                if (nodes[j].rejected_by < 0) continue;
                if (nodes[j].end >= nodes[i].start) continue;
                if (nodes[j].rejected_by > nodes[i].start) continue;
                const long long cand = best[j] + static_cast<long long>(nodes[i].members.size());
                if (cand > best[i]) { best[i] = cand; prev[i] = static_cast<int>(j); }
            }
            if (best[i] > top) { top = best[i]; top_at = static_cast<int>(i); }
        }
        std::set<int> wit;
        for (int i = top_at; i >= 0; i = prev[static_cast<std::size_t>(i)])
            wit.insert(nodes[static_cast<std::size_t>(i)].members.begin(),
                       nodes[static_cast<std::size_t>(i)].members.end());
        bound_ = static_cast<long long>(wit.size());
        witness_.assign(wit.begin(), wit.end());
        const Rational now(bound_, std::max<long long>(holdings_, 1));
        if (now > achieved_) achieved_ = now;
    }

    Rational c_target_, eps_;
    long long n1_, budget_;
    std::vector<std::vector<int>> bags_;
    std::vector<int> vertex_bag_;
    std::map<int, long long> reject_tick_;
    std::map<std::pair<int, long long>, std::vector<int>> batch_members_;
    std::map<int, long long> first_reject_a_;
    long long holdings_ = 0;
    int alg_bag_ = -1;
    long long switches_ = 0;
    long long bound_ = 0;
    std::vector<int> witness_;
    Rational achieved_ = Rational(0);
    bool target_reached_ = false;
};

// ---------- matching --------------------------------------------------------

// Base edges first; each accepted base edge sprouts pendants on both ends.
class MatchExtendAdversary : public Adversary {
  public:
    explicit MatchExtendAdversary(long long m)
        : Adversary("adv.match.ext", ArrivalModel::EdgeArrival), m_(m) {
        if (m_ < 1) throw std::invalid_argument("adversary requires m >= 1");
        gadgets_.resize(static_cast<std::size_t>(m_));
    }

    long long certified_bound() const override {
        return static_cast<long long>(certified_witness().size());
    }

    std::vector<int> certified_witness() const override {
        std::vector<int> w;
        for (const auto& gd : gadgets_) {
            if (gd.base < 0) continue;
            if (gd.ext_uv[1] >= 0) {  // both pendants out: they are disjoint
                w.push_back(gd.ext_uv[0]);
                w.push_back(gd.ext_uv[1]);
            } else {
                w.push_back(gd.base);
            }
        }
        std::sort(w.begin(), w.end());
        return w;
    }

  protected:
    std::optional<ArrivalEvent> produce(const GraphSnapshot&, const SolutionLedger& led) override {
        for (std::size_t i = 0; i < gadgets_.size(); ++i) {
            Gadget& gd = gadgets_[i];
            if (gd.base >= 0 && !gd.reacted && led.accepted().count(gd.base)) {
                gd.reacted = true;
                queue_.push_back(static_cast<int>(i));
                queue_.push_back(static_cast<int>(i));
            }
        }
        if (!queue_.empty()) {
            const int i = queue_.front();
            queue_.pop_front();
            Gadget& gd = gadgets_[static_cast<std::size_t>(i)];
            const Edge& base = mirror_.edge(gd.base);
            const int fresh = mirror_.vertex_count();
            const int side = gd.ext_uv[0] < 0 ? 0 : 1;
            gd.ext_uv[side] = mirror_.edge_count();
            return ArrivalEvent::edge_arrival(side == 0 ? base.u : base.v, fresh);
        }
        if (next_base_ < m_) {
            const int i = static_cast<int>(next_base_++);
            const int a = mirror_.vertex_count();
            gadgets_[static_cast<std::size_t>(i)].base = mirror_.edge_count();
            return ArrivalEvent::edge_arrival(a, a + 1);
        }
        return std::nullopt;
    }

  private:
    struct Gadget {
        int base = -1;
        int ext_uv[2] = {-1, -1};
        bool reacted = false;
    };
    long long m_;
    long long next_base_ = 0;
    std::vector<Gadget> gadgets_;
    std::deque<int> queue_;
};

// Base edges first; an accepted base uv gets a bait edge vx. Giving up uv for
// vx is punished with xy, keeping uv is punished with zu; either way two
// disjoint edges exist where the algorithm keeps one.
class MatchBaitAdversary : public Adversary {
  public:
    explicit MatchBaitAdversary(long long m)
        : Adversary("adv.match.lr", ArrivalModel::EdgeArrival), m_(m) {
        if (m_ < 1) throw std::invalid_argument("adversary requires m >= 1");
        gadgets_.resize(static_cast<std::size_t>(m_));
    }

    long long certified_bound() const override {
        long long b = 0;
        for (const auto& gd : gadgets_) b += static_cast<long long>(gd.witness.size());
        return b;
    }

    std::vector<int> certified_witness() const override {
        std::vector<int> w;
        for (const auto& gd : gadgets_) w.insert(w.end(), gd.witness.begin(), gd.witness.end());
        std::sort(w.begin(), w.end());
        return w;
    }

  protected:
    std::optional<ArrivalEvent> produce(const GraphSnapshot&, const SolutionLedger& led) override {
        if (next_base_ < m_) {
            const int a = mirror_.vertex_count();
            Gadget& gd = gadgets_[static_cast<std::size_t>(next_base_++)];
            gd.base = mirror_.edge_count();
            return ArrivalEvent::edge_arrival(a, a + 1);
        }
        while (cursor_ < static_cast<std::size_t>(m_)) {
            Gadget& gd = gadgets_[cursor_];
            if (gd.stage == Stage::AwaitBase) {
                if (!led.accepted().count(gd.base)) {  // never taken: one edge suffices
                    gd.witness = {gd.base};
                    gd.stage = Stage::Closed;
                    ++cursor_;
                    continue;
                }
                gd.stage = Stage::AwaitSwap;
                gd.bait = mirror_.edge_count();
                const int x = mirror_.vertex_count();
                return ArrivalEvent::edge_arrival(mirror_.edge(gd.base).v, x);
            }
            if (gd.stage == Stage::AwaitSwap) {
                const int x = mirror_.edge(gd.bait).v;  // fresh endpoint of the bait
                gd.stage = Stage::Closed;
                if (led.rejected().count(gd.base)) {
                    gd.witness = {gd.base, mirror_.edge_count()};
                    const int y = mirror_.vertex_count();
                    ++cursor_;
                    return ArrivalEvent::edge_arrival(x, y);
                }
                gd.witness = {gd.bait, mirror_.edge_count()};
                const int z = mirror_.vertex_count();
                ++cursor_;
                return ArrivalEvent::edge_arrival(mirror_.edge(gd.base).u, z);
            }
            ++cursor_;
        }
        return std::nullopt;
    }

  private:
    enum class Stage { AwaitBase, AwaitSwap, Closed };
    struct Gadget {
        int base = -1, bait = -1;
        Stage stage = Stage::AwaitBase;
        std::vector<int> witness;
    };
    long long m_;
    long long next_base_ = 0;
    std::size_t cursor_ = 0;
    std::vector<Gadget> gadgets_;
};

// Base edges first; an accepted base uv gets pendants xu and vy. If the
// algorithm trades uv for them, outer pendants x'x and yy' make the trade
// lossy: three disjoint edges against its two.
class MatchAugmentBaitAdversary : public Adversary {
  public:
    explicit MatchAugmentBaitAdversary(long long m)
        : Adversary("adv.match.lar", ArrivalModel::EdgeArrival), m_(m) {
        if (m_ < 1) throw std::invalid_argument("adversary requires m >= 1");
        gadgets_.resize(static_cast<std::size_t>(m_));
    }

    long long certified_bound() const override {
        long long b = 0;
        for (const auto& gd : gadgets_) b += static_cast<long long>(gd.witness.size());
        return b;
    }

    std::vector<int> certified_witness() const override {
        std::vector<int> w;
        for (const auto& gd : gadgets_) w.insert(w.end(), gd.witness.begin(), gd.witness.end());
        std::sort(w.begin(), w.end());
        return w;
    }

  protected:
    std::optional<ArrivalEvent> produce(const GraphSnapshot&, const SolutionLedger& led) override {
        if (next_base_ < m_) {
            const int a = mirror_.vertex_count();
            Gadget& gd = gadgets_[static_cast<std::size_t>(next_base_++)];
            gd.base = mirror_.edge_count();
            gd.witness = {gd.base};
            return ArrivalEvent::edge_arrival(a, a + 1);
        }
        while (cursor_ < static_cast<std::size_t>(m_)) {
            Gadget& gd = gadgets_[cursor_];
            const Edge base = gd.base >= 0 ? mirror_.edge(gd.base) : Edge{};
            switch (gd.stage) {
                case Stage::AwaitBase:
                    if (!led.accepted().count(gd.base)) {
                        gd.stage = Stage::Closed;  // witness stays {base}
                        ++cursor_;
                        continue;
                    }
                    gd.stage = Stage::GrowA;
                    gd.xu = mirror_.edge_count();
                    return ArrivalEvent::edge_arrival(base.u, mirror_.vertex_count());
                case Stage::GrowA:
                    gd.stage = Stage::AwaitTrade;
                    gd.vy = mirror_.edge_count();
                    return ArrivalEvent::edge_arrival(base.v, mirror_.vertex_count());
                case Stage::AwaitTrade:
                    if (!led.rejected().count(gd.base)) {
                        gd.witness = {gd.xu, gd.vy};  // two disjoint edges exist
                        gd.stage = Stage::Closed;
                        ++cursor_;
                        continue;
                    }
                    gd.stage = Stage::PunishA;
                    gd.witness = {gd.base, mirror_.edge_count()};
                    return ArrivalEvent::edge_arrival(mirror_.edge(gd.xu).v,
                                                      mirror_.vertex_count());
                case Stage::PunishA:
                    gd.stage = Stage::Closed;
                    gd.witness.push_back(mirror_.edge_count());
                    ++cursor_;
                    return ArrivalEvent::edge_arrival(mirror_.edge(gd.vy).v,
                                                      mirror_.vertex_count());
                case Stage::Closed:
                    ++cursor_;
                    continue;
            }
        }
        return std::nullopt;
    }

  private:
    enum class Stage { AwaitBase, GrowA, AwaitTrade, PunishA, Closed };
    struct Gadget {
        int base = -1, xu = -1, vy = -1;
        Stage stage = Stage::AwaitBase;
        std::vector<int> witness;
    };
    long long m_;
    long long next_base_ = 0;
    std::size_t cursor_ = 0;
    std::vector<Gadget> gadgets_;
};

// ---------- vertex cover -----------------------------------------------------

// Isolated vertices until the first rejection, then pendants on the rejected
// vertex; that vertex alone covers every edge.
class VcPendantAdversary : public Adversary {
  public:
    VcPendantAdversary(std::string name, long long n)
        : Adversary(std::move(name), ArrivalModel::VertexArrival), n_(n) {
        if (n_ < 1) throw std::invalid_argument("adversary requires n >= 1");
    }

    long long certified_bound() const override { return victim_ >= 0 ? 1 : 0; }

    std::vector<int> certified_witness() const override {
        if (victim_ < 0) return {};
        return {victim_};
    }

    ordered_json details() const override { return ordered_json{{"victim", victim_}}; }

  protected:
    std::optional<ArrivalEvent> produce(const GraphSnapshot&, const SolutionLedger& led) override {
        if (victim_ < 0 && !led.rejected().empty()) victim_ = *led.rejected().begin();
        const int id = mirror_.vertex_count();
        if (id >= n_) return std::nullopt;
        if (victim_ < 0) return ArrivalEvent::vertex_arrival(id);
        return ArrivalEvent::vertex_arrival(id, {victim_});
    }

  private:
    long long n_;
    int victim_ = -1;
};

// Sequential pair gadgets: u, then v adjacent to u. Covering with both
// endpoints wastes one; covering with one gets a pendant hung on the other.
// Under late rejections, any vertex dropped from the cover is flooded with
// pendants. The certified cover is rebuilt exactly per gadget component.
class VcPairsAdversary : public Adversary {
  public:
    VcPairsAdversary(long long gadgets, long long flood, long long budget)
        : Adversary("adv.vc.pairs", ArrivalModel::VertexArrival),
          target_gadgets_(gadgets), flood_(flood), budget_(budget) {
        if (target_gadgets_ < 1) throw std::invalid_argument("adversary requires g >= 1");
        if (budget_ < 1) throw std::invalid_argument("adversary requires budget >= 1");
    }

    long long certified_bound() const override {
        long long b = 0;
        for (const auto& gd : gadgets_) b += static_cast<long long>(cover_of(gd).size());
        return b;
    }

    std::vector<int> certified_witness() const override {
        std::vector<int> w;
        for (const auto& gd : gadgets_) {
            const std::vector<int> h = cover_of(gd);
            w.insert(w.end(), h.begin(), h.end());
        }
        std::sort(w.begin(), w.end());
        return w;
    }

    ordered_json details() const override {
        ordered_json d;
        d["gadgets"] = static_cast<long long>(gadgets_.size());
        d["floods"] = static_cast<long long>(flooded_.size());
        return d;
    }

  protected:
    std::optional<ArrivalEvent> produce(const GraphSnapshot&, const SolutionLedger& led) override {
        for (int z : led.rejected()) {
            if (flooded_.count(z)) continue;
            flooded_.insert(z);
            long long k = flood_ > 0 ? flood_
                                     : 2 * static_cast<long long>(led.accepted().size()) + 1;
            k = std::max<long long>(k, 3);
            const int gi = gadget_of_[static_cast<std::size_t>(z)];
            gadgets_[static_cast<std::size_t>(gi)].flooded.push_back(z);
            for (long long i = 0; i < k; ++i) flood_queue_.push_back(z);
        }
        if (mirror_.vertex_count() >= budget_) return std::nullopt;
        if (!flood_queue_.empty()) {
            const int z = flood_queue_.front();
            flood_queue_.pop_front();
            const int gi = gadget_of_[static_cast<std::size_t>(z)];
            gadget_of_.push_back(gi);
            return ArrivalEvent::vertex_arrival(mirror_.vertex_count(), {z});
        }
        if (!gadgets_.empty()) {
            Gadget& gd = gadgets_.back();
            if (gd.v < 0) {
                gd.v = mirror_.vertex_count();
                gadget_of_.push_back(static_cast<int>(gadgets_.size()) - 1);
                return ArrivalEvent::vertex_arrival(gd.v, {gd.u});
            }
            if (!gd.closed) {
                const bool u_in = led.accepted().count(gd.u), v_in = led.accepted().count(gd.v);
                gd.closed = true;
                if (u_in != v_in) {  // pendant on the uncovered endpoint
                    gd.attach = u_in ? gd.v : gd.u;
                    gd.w = mirror_.vertex_count();
                    gadget_of_.push_back(static_cast<int>(gadgets_.size()) - 1);
                    return ArrivalEvent::vertex_arrival(gd.w, {gd.attach});
                }
            }
        }
        if (static_cast<long long>(gadgets_.size()) < target_gadgets_) {
            Gadget gd;
            gd.u = mirror_.vertex_count();
            gadgets_.push_back(gd);
            gadget_of_.push_back(static_cast<int>(gadgets_.size()) - 1);
            return ArrivalEvent::vertex_arrival(gd.u);
        }
        return std::nullopt;
    }

  private:
    struct Gadget {
        int u = -1, v = -1, w = -1, attach = -1;
        bool closed = false;
        std::vector<int> flooded;
    };

    // Exact minimum cover of one gadget component. Flooded vertices must be
    // in the cover (pendant flocks are strictly worse); beyond those, only
    // the uv edge and the w pendant edge constrain the choice.
    std::vector<int> cover_of(const Gadget& gd) const {
        std::vector<int> base(gd.flooded);
        std::sort(base.begin(), base.end());
        if (gd.v < 0) return base;  // no edges yet beyond flood stars
        auto has = [&](int x) { return std::binary_search(base.begin(), base.end(), x); };
        std::vector<int> best;
        bool have = false;
        std::vector<int> extra_pool;
        for (int x : {gd.u, gd.v, gd.attach == gd.u ? gd.w : -1, gd.attach == gd.v ? gd.w : -1})
            if (x >= 0 && !has(x)) extra_pool.push_back(x);
        std::sort(extra_pool.begin(), extra_pool.end());
        extra_pool.erase(std::unique(extra_pool.begin(), extra_pool.end()), extra_pool.end());
        const int k = static_cast<int>(extra_pool.size());
        for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
            std::vector<int> h(base);
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1) h.push_back(extra_pool[static_cast<std::size_t>(i)]);
            std::sort(h.begin(), h.end());
            auto in = [&](int x) { return std::binary_search(h.begin(), h.end(), x); };
            if (!in(gd.u) && !in(gd.v)) continue;
            if (gd.w >= 0 && !in(gd.w) && !in(gd.attach)) continue;
            if (!have || h.size() < best.size()) { best = h; have = true; }
        }
        return best;
    }

    long long target_gadgets_, flood_, budget_;
    std::vector<Gadget> gadgets_;
    std::vector<int> gadget_of_;  // vertex id -> gadget index
    std::set<int> flooded_;
    std::deque<int> flood_queue_;
};

// ---------- spanning forest --------------------------------------------------

// Heavy path first, then a unit-weight hub connected to every path vertex.
// Non-adaptive; the certified forest is the hub star.
class MsfHubAdversary : public Adversary {
  public:
    MsfHubAdversary(long long n, long long w)
        : Adversary("adv.msf.hub", ArrivalModel::EdgeArrival), n_(n), w_(w) {
        if (n_ < 3) throw std::invalid_argument("adv.msf.hub requires n >= 3");
        if (w_ < 1) throw std::invalid_argument("adv.msf.hub requires W >= 1");
        for (int i = 0; i + 2 < n_; ++i) plan_.push_back(ArrivalEvent::edge_arrival(i, i + 1, w_));
        for (int i = 0; i + 1 < n_; ++i)
            plan_.push_back(ArrivalEvent::edge_arrival(i, static_cast<int>(n_) - 1, 1));
    }

    long long certified_bound() const override { return opt_spanning_forest(mirror_).value; }
    std::vector<int> certified_witness() const override {
        return opt_spanning_forest(mirror_).witness;
    }

  protected:
    std::optional<ArrivalEvent> produce(const GraphSnapshot&, const SolutionLedger&) override {
        if (cursor_ >= plan_.size()) return std::nullopt;
        return plan_[cursor_++];
    }

  private:
    long long n_, w_;
    std::vector<ArrivalEvent> plan_;
    std::size_t cursor_ = 0;
};

// ---------- registry ---------------------------------------------------------

struct AdversarySpec {
    std::string base;
    std::map<std::string, Rational> params;
};

inline AdversarySpec parse_adversary_spec(const std::string& s) {
    AdversarySpec spec;
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
        spec.params.emplace(kv.substr(0, eq), parse_rational(kv.substr(eq + 1)));
        pos = comma + 1;
    }
    return spec;
}

inline const std::vector<std::string>& adversary_names() {
    static const std::vector<std::string> names = {
        "adv.is.std",    "adv.is.la",    "adv.is.lr",  "adv.is.bags",
        "adv.match.ext", "adv.match.lr", "adv.match.lar",
        "adv.vc.std",    "adv.vc.lr",    "adv.vc.pairs", "adv.msf.hub"};
    return names;
}

inline std::unique_ptr<Adversary> make_adversary(const std::string& name) {
    const AdversarySpec spec = parse_adversary_spec(name);
    auto param = [&](const char* key) -> std::optional<Rational> {
        auto it = spec.params.find(key);
        return it == spec.params.end() ? std::nullopt : std::optional<Rational>(it->second);
    };
    auto integer = [&](const char* key, std::optional<long long> fallback =
                                            std::nullopt) -> long long {
        auto v = param(key);
        if (!v) {
            if (fallback) return *fallback;
            throw std::invalid_argument("adversary '" + spec.base + "' requires parameter '" +
                                        key + "'");
        }
        if (v->den() != 1)
            throw std::invalid_argument("parameter '" + std::string(key) + "' of '" + spec.base +
                                        "' must be an integer");
        return v->num();
    };
    if (spec.base == "adv.is.std")
        return std::make_unique<IsPendantAdversary>(spec.base, integer("n"), false);
    if (spec.base == "adv.is.la")
        return std::make_unique<IsPendantAdversary>(spec.base, integer("n"), true);
    if (spec.base == "adv.is.lr") return std::make_unique<IsChaseAdversary>(integer("n"));
    if (spec.base == "adv.is.bags") {
        const Rational c = param("c").value_or(Rational(2));
        const Rational eps = param("eps").value_or(Rational(1, 20));
        return std::make_unique<IsBagsAdversary>(c, eps, integer("n1", 200),
                                                 integer("budget", 10000));
    }
    if (spec.base == "adv.match.ext") return std::make_unique<MatchExtendAdversary>(integer("m"));
    if (spec.base == "adv.match.lr") return std::make_unique<MatchBaitAdversary>(integer("m"));
    if (spec.base == "adv.match.lar")
        return std::make_unique<MatchAugmentBaitAdversary>(integer("m"));
    if (spec.base == "adv.vc.std")
        return std::make_unique<VcPendantAdversary>(spec.base, integer("n"));
    if (spec.base == "adv.vc.lr")
        return std::make_unique<VcPendantAdversary>(spec.base, integer("n"));
    if (spec.base == "adv.vc.pairs")
        return std::make_unique<VcPairsAdversary>(integer("g"), integer("flood", 0),
                                                  integer("budget", 100000));
    if (spec.base == "adv.msf.hub") {
        const long long w = param("W") ? integer("W") : integer("w", 1000);
        return std::make_unique<MsfHubAdversary>(integer("n"), w);
    }
    throw std::invalid_argument("unknown adversary '" + spec.base + "'");
}

}  // namespace lateops
