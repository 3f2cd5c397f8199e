#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lateops/rational.hpp"
#include "lateops/stream.hpp"

namespace lateops {

// mt19937_64 has a pinned bit stream across platforms; the bounded draw and
// unit draw below avoid std::uniform_int_distribution, whose mapping is
// implementation-defined, so seeds reproduce everywhere.
class DetRng {
  public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // Uniform in [0, n); n >= 1.
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(raw()) * n) >> 64);
    }

    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(bounded(i))]);
    }

  private:
    std::mt19937_64 eng_;
};

// Offline graph used to stage arrival sequences.
struct LabeledGraph {
    int n = 0;
    std::vector<Edge> edges;
};

inline LabeledGraph graph_from_snapshot(const GraphSnapshot& g) {
    return LabeledGraph{g.vertex_count(), g.edges()};
}

// Presents original vertex order[k] as arrival k; neighbor lists are
// relabeled to arrival indices.
inline RequestSequence vertex_sequence(const LabeledGraph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.n)
        throw std::invalid_argument("vertex order must list every vertex once");
    std::vector<int> pos(static_cast<std::size_t>(g.n), -1);
    for (int k = 0; k < g.n; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(g.n));
    for (const Edge& e : g.edges) {
        const int pu = pos[static_cast<std::size_t>(e.u)], pv = pos[static_cast<std::size_t>(e.v)];
        if (pu < pv) nbrs[static_cast<std::size_t>(pv)].push_back(pu);
        else nbrs[static_cast<std::size_t>(pu)].push_back(pv);
    }
    RequestSequence seq;
    seq.model = ArrivalModel::VertexArrival;
    for (int k = 0; k < g.n; ++k)
        seq.events.push_back(ArrivalEvent::vertex_arrival(k, std::move(nbrs[static_cast<std::size_t>(k)])));
    return seq;
}

inline RequestSequence vertex_sequence(const LabeledGraph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) order[static_cast<std::size_t>(i)] = i;
    return vertex_sequence(g, order);
}

// Emits edges in the given order; vertices are relabeled by first appearance,
// so isolated vertices of the staged graph never surface.
inline RequestSequence edge_sequence(const LabeledGraph& g, const std::vector<int>& edge_order) {
    std::vector<int> label(static_cast<std::size_t>(g.n), -1);
    int next = 0;
    RequestSequence seq;
    seq.model = ArrivalModel::EdgeArrival;
    for (int id : edge_order) {
        const Edge& e = g.edges[static_cast<std::size_t>(id)];
        if (label[static_cast<std::size_t>(e.u)] < 0) label[static_cast<std::size_t>(e.u)] = next++;
        if (label[static_cast<std::size_t>(e.v)] < 0) label[static_cast<std::size_t>(e.v)] = next++;
        seq.events.push_back(ArrivalEvent::edge_arrival(label[static_cast<std::size_t>(e.u)],
                                                        label[static_cast<std::size_t>(e.v)], e.weight));
    }
    return seq;
}

inline RequestSequence edge_sequence(const LabeledGraph& g) {
    std::vector<int> order(g.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    return edge_sequence(g, order);
}

// Random arrival order over the same graph.
inline RequestSequence order_shuffle(const RequestSequence& seq, std::uint64_t seed) {
    DetRng rng(seed);
    const LabeledGraph g = graph_from_snapshot(build_snapshot(seq));
    if (seq.model == ArrivalModel::VertexArrival) {
        std::vector<int> order(static_cast<std::size_t>(g.n));
        for (int i = 0; i < g.n; ++i) order[static_cast<std::size_t>(i)] = i;
        rng.shuffle(order);
        return vertex_sequence(g, order);
    }
    std::vector<int> order(g.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    rng.shuffle(order);
    return edge_sequence(g, order);
}

inline LabeledGraph gen_path(int n) {
    LabeledGraph g{n, {}};
    for (int i = 0; i + 1 < n; ++i) g.edges.push_back(Edge{i, i + 1, 1});
    return g;
}

inline LabeledGraph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    LabeledGraph g = gen_path(n);
    g.edges.push_back(Edge{0, n - 1, 1});
    return g;
}

inline LabeledGraph gen_gnp(int n, double p, DetRng& rng, long long wlo = 1, long long whi = 1) {
    if (wlo < 1 || whi < wlo) throw std::invalid_argument("weights need 1 <= wlo <= whi");
    LabeledGraph g{n, {}};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) g.edges.push_back(Edge{u, v, rng.range(wlo, whi)});
    return g;
}

inline LabeledGraph gen_bipartite(int a, int b, double p, DetRng& rng) {
    LabeledGraph g{a + b, {}};
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            if (rng.unit() < p) g.edges.push_back(Edge{u, v, 1});
    return g;
}

// "gen.gnp:n=10,p=0.3,wlo=1,whi=9", "gen.path:n=6", "gen.cycle:n=7",
// "gen.bipartite:a=3,b=4,p=0.5"; shuffled arrival order unless shuffle=0.
inline RequestSequence make_generated_sequence(const std::string& name, ArrivalModel model,
                                               std::uint64_t seed) {
    const auto colon = name.find(':');
    const std::string base = name.substr(0, colon);
    std::map<std::string, Rational> params;
    if (colon != std::string::npos) {
        std::string rest = name.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            const std::string kv = rest.substr(pos, comma - pos);
            const auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size())
                throw std::invalid_argument("malformed parameter '" + kv + "' in '" + name + "'");
            params.emplace(kv.substr(0, eq), parse_rational(kv.substr(eq + 1)));
            pos = comma + 1;
        }
    }
    auto get = [&](const char* key, std::optional<Rational> fallback =
                                        std::nullopt) -> Rational {
        auto it = params.find(key);
        if (it != params.end()) return it->second;
        if (fallback) return *fallback;
        throw std::invalid_argument("generator '" + base + "' requires parameter '" + key + "'");
    };
    auto integer = [&](const char* key, std::optional<long long> fallback =
                                            std::nullopt) -> long long {
        std::optional<Rational> fb;
        if (fallback) fb = Rational(*fallback);
        const Rational r = get(key, fb);
        if (r.den() != 1)
            throw std::invalid_argument("parameter '" + std::string(key) + "' must be an integer");
        return r.num();
    };
    DetRng rng(seed);
    LabeledGraph g;
    if (base == "gen.path") {
        g = gen_path(static_cast<int>(integer("n")));
    } else if (base == "gen.cycle") {
        g = gen_cycle(static_cast<int>(integer("n")));
    } else if (base == "gen.gnp") {
        g = gen_gnp(static_cast<int>(integer("n")), get("p").to_double(), rng,
                    integer("wlo", 1), integer("whi", 1));
    } else if (base == "gen.bipartite") {
        g = gen_bipartite(static_cast<int>(integer("a")), static_cast<int>(integer("b")),
                          get("p").to_double(), rng);
    } else {
        throw std::invalid_argument("unknown generator '" + base + "'");
    }
    RequestSequence seq = model == ArrivalModel::VertexArrival ? vertex_sequence(g)
                                                               : edge_sequence(g);
    if (integer("shuffle", 1) != 0) seq = order_shuffle(seq, rng.raw());
    return seq;
}

}  // namespace lateops
