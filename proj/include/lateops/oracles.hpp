#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "lateops/disjoint_set.hpp"
#include "lateops/stream.hpp"

namespace lateops {

struct OracleResult {
    long long value = 0;
    std::vector<int> witness;        // vertex ids or edge ids, sorted
    std::uint64_t nodes_explored = 0;
};

struct OracleCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exhaustive search keeps exactness but not scale; caps make the refusal
// explicit instead of silently slow. LATEOPS_CAP overrides both.
struct OracleCaps {
    int max_is_vertices = 30;
    int max_matching_edges = 40;

    static OracleCaps from_env() {
        OracleCaps caps;
        if (const char* raw = std::getenv("LATEOPS_CAP")) {
            char* end = nullptr;
            const long v = std::strtol(raw, &end, 10);
            if (end == raw || *end != '\0' || v <= 0)
                throw std::invalid_argument("LATEOPS_CAP must be a positive integer");
            caps.max_is_vertices = static_cast<int>(v);
            caps.max_matching_edges = static_cast<int>(v);
        }
        return caps;
    }
};

// Feasibility predicates, shared by oracle self-checks and the harness gate.

inline bool is_independent_set(const GraphSnapshot& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= g.vertex_count()) return false;
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || g.has_edge(vs[i], vs[j])) return false;
    }
    return true;
}

inline bool is_matching(const GraphSnapshot& g, const std::vector<int>& edge_ids) {
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int id : edge_ids) {
        if (id < 0 || id >= g.edge_count()) return false;
        const Edge& e = g.edge(id);
        if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) return false;
        used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
    }
    return true;
}

inline bool is_vertex_cover(const GraphSnapshot& g, const std::vector<int>& vs) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count()) return false;
        in[static_cast<std::size_t>(v)] = 1;
    }
    for (const Edge& e : g.edges())
        if (!in[static_cast<std::size_t>(e.u)] && !in[static_cast<std::size_t>(e.v)]) return false;
    return true;
}

// Acyclic and joins exactly the components of g.
inline bool is_spanning_forest(const GraphSnapshot& g, const std::vector<int>& edge_ids) {
    DisjointSet forest(g.vertex_count());
    for (int id : edge_ids) {
        if (id < 0 || id >= g.edge_count()) return false;
        const Edge& e = g.edge(id);
        if (!forest.unite(e.u, e.v)) return false;  // cycle
    }
    DisjointSet whole(g.vertex_count());
    for (const Edge& e : g.edges()) whole.unite(e.u, e.v);
    return forest.components() == whole.components();
}

namespace detail {

struct MaxIsSearch {
    const std::vector<std::uint64_t>& adj;
    long long best = -1;
    std::uint64_t best_set = 0;
    std::uint64_t nodes = 0;

    void run(std::uint64_t pool, long long count, std::uint64_t chosen) {
        ++nodes;
        if (count + std::popcount(pool) <= best) return;
        if (pool == 0) {
            best = count;
            best_set = chosen;
            return;
        }
        // A vertex with at most one live neighbor belongs to some optimum.
        int pivot = -1, pivot_deg = -1;
        for (std::uint64_t rest = pool; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const int deg = std::popcount(adj[static_cast<std::size_t>(v)] & pool);
            if (deg <= 1) {
                run(pool & ~(adj[static_cast<std::size_t>(v)] | (1ULL << v)), count + 1,
                    chosen | (1ULL << v));
                return;
            }
            if (deg > pivot_deg) { pivot_deg = deg; pivot = v; }
        }
        const std::uint64_t bit = 1ULL << pivot;
        run(pool & ~(adj[static_cast<std::size_t>(pivot)] | bit), count + 1, chosen | bit);
        run(pool & ~bit, count, chosen);
    }
};

inline std::vector<std::uint64_t> adjacency_masks(const GraphSnapshot& g) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= 1ULL << e.v;
        adj[static_cast<std::size_t>(e.v)] |= 1ULL << e.u;
    }
    return adj;
}

inline std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace detail

inline OracleResult opt_independent_set(const GraphSnapshot& g,
                                        const OracleCaps& caps = OracleCaps::from_env()) {
    const int n = g.vertex_count();
    if (n > caps.max_is_vertices)
        throw OracleCapExceeded("independent-set oracle: " + std::to_string(n) +
                                " vertices exceeds cap " + std::to_string(caps.max_is_vertices));
    if (n > 64) throw OracleCapExceeded("independent-set oracle is limited to 64 vertices");
    const auto adj = detail::adjacency_masks(g);
    detail::MaxIsSearch search{adj};
    const std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
    search.run(all, 0, 0);
    OracleResult res{search.best, detail::mask_to_vertices(search.best_set), search.nodes};
    if (!is_independent_set(g, res.witness) ||
        static_cast<long long>(res.witness.size()) != res.value)
        throw std::logic_error("independent-set oracle produced an invalid witness");
    return res;
}

// Plain subset enumeration; slow on purpose, used to cross-check the search.
inline OracleResult opt_independent_set_enum(const GraphSnapshot& g) {
    const int n = g.vertex_count();
    if (n > 16) throw OracleCapExceeded("enumeration oracle is limited to 16 vertices");
    const auto adj = detail::adjacency_masks(g);
    OracleResult res;
    res.value = -1;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        ++res.nodes_explored;
        bool ok = true;
        for (std::uint64_t rest = mask; ok && rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            ok = (adj[static_cast<std::size_t>(v)] & mask) == 0;
        }
        if (ok && std::popcount(mask) > res.value) {
            res.value = std::popcount(mask);
            res.witness = detail::mask_to_vertices(mask);
        }
    }
    return res;
}

namespace detail {

struct MaxMatchingSearch {
    const std::vector<Edge>& edges;
    std::vector<char> used;
    int free_vertices;
    long long best = -1;
    std::vector<char> take, best_take;
    std::uint64_t nodes = 0;

    void run(std::size_t i, long long count) {
        ++nodes;
        const long long remaining = static_cast<long long>(edges.size() - i);
        if (count + std::min<long long>(remaining, free_vertices / 2) <= best) return;
        if (i == edges.size()) {
            best = count;
            best_take = take;
            return;
        }
        const Edge& e = edges[i];
        if (!used[static_cast<std::size_t>(e.u)] && !used[static_cast<std::size_t>(e.v)]) {
            used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
            free_vertices -= 2;
            take[i] = 1;
            run(i + 1, count + 1);
            take[i] = 0;
            free_vertices += 2;
            used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 0;
        }
        run(i + 1, count);
    }
};

}  // namespace detail

inline OracleResult opt_matching(const GraphSnapshot& g,
                                 const OracleCaps& caps = OracleCaps::from_env()) {
    const int m = g.edge_count();
    if (m > caps.max_matching_edges)
        throw OracleCapExceeded("matching oracle: " + std::to_string(m) +
                                " edges exceeds cap " + std::to_string(caps.max_matching_edges));
    detail::MaxMatchingSearch search{g.edges(),
                                     std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0),
                                     g.vertex_count()};
    search.take.assign(static_cast<std::size_t>(m), 0);
    search.best_take = search.take;
    search.run(0, 0);
    OracleResult res;
    res.value = search.best;
    res.nodes_explored = search.nodes;
    for (int i = 0; i < m; ++i)
        if (search.best_take[static_cast<std::size_t>(i)]) res.witness.push_back(i);
    if (!is_matching(g, res.witness) || static_cast<long long>(res.witness.size()) != res.value)
        throw std::logic_error("matching oracle produced an invalid witness");
    return res;
}

inline OracleResult opt_vertex_cover(const GraphSnapshot& g,
                                     const OracleCaps& caps = OracleCaps::from_env()) {
    // Complement of a maximum independent set; exact for every graph.
    OracleResult is = opt_independent_set(g, caps);
    OracleResult res;
    res.nodes_explored = is.nodes_explored;
    res.value = g.vertex_count() - is.value;
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : is.witness) in[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in[static_cast<std::size_t>(v)]) res.witness.push_back(v);
    if (!is_vertex_cover(g, res.witness))
        throw std::logic_error("vertex-cover oracle produced an invalid witness");
    return res;
}

// Kruskal; value is the total weight of a minimum spanning forest.
inline OracleResult opt_spanning_forest(const GraphSnapshot& g) {
    std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Edge& ea = g.edge(a);
        const Edge& eb = g.edge(b);
        return ea.weight != eb.weight ? ea.weight < eb.weight : a < b;
    });
    DisjointSet dsu(g.vertex_count());
    OracleResult res;
    for (int id : order) {
        ++res.nodes_explored;
        const Edge& e = g.edge(id);
        if (dsu.unite(e.u, e.v)) {
            res.value += e.weight;
            res.witness.push_back(id);
        }
    }
    std::sort(res.witness.begin(), res.witness.end());
    if (!is_spanning_forest(g, res.witness))
        throw std::logic_error("spanning-forest oracle produced an invalid witness");
    return res;
}

// Exact maximum independent set on forests by tree DP; no size cap. Used
// where the revealed graph is a forest by construction.
inline OracleResult max_is_forest(const GraphSnapshot& g) {
    const int n = g.vertex_count();
    {
        DisjointSet dsu(n);
        for (const Edge& e : g.edges())
            if (!dsu.unite(e.u, e.v)) throw std::invalid_argument("max_is_forest: graph has a cycle");
    }
    std::vector<long long> take(static_cast<std::size_t>(n), 1), skip(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -2), order;
    order.reserve(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        if (parent[static_cast<std::size_t>(root)] != -2) continue;
        parent[static_cast<std::size_t>(root)] = -1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int u : g.neighbors(v)) {
                if (parent[static_cast<std::size_t>(u)] != -2) continue;
                parent[static_cast<std::size_t>(u)] = v;
                stack.push_back(u);
            }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        const int p = parent[static_cast<std::size_t>(v)];
        if (p < 0) continue;
        take[static_cast<std::size_t>(p)] += skip[static_cast<std::size_t>(v)];
        skip[static_cast<std::size_t>(p)] +=
            std::max(take[static_cast<std::size_t>(v)], skip[static_cast<std::size_t>(v)]);
    }
    OracleResult res;
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    for (int v : order) {  // parents precede children
        const int p = parent[static_cast<std::size_t>(v)];
        const bool parent_taken = p >= 0 && taken[static_cast<std::size_t>(p)];
        if (!parent_taken && take[static_cast<std::size_t>(v)] > skip[static_cast<std::size_t>(v)])
            taken[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 0; v < n; ++v) {
        if (taken[static_cast<std::size_t>(v)]) {
            res.witness.push_back(v);
            ++res.value;
        }
    }
    res.nodes_explored = static_cast<std::uint64_t>(n);
    if (!is_independent_set(g, res.witness))
        throw std::logic_error("forest oracle produced an invalid witness");
    return res;
}

}  // namespace lateops
