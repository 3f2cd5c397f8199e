#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace lateops {

enum class ArrivalModel { VertexArrival, EdgeArrival };

inline const char* to_string(ArrivalModel m) {
    return m == ArrivalModel::VertexArrival ? "vertex" : "edge";
}

// Canonical edge: u < v, integer weight (1 when the input carries none).
struct Edge {
    int u = -1;
    int v = -1;
    long long weight = 1;
};

struct ArrivalEvent {
    ArrivalModel kind = ArrivalModel::VertexArrival;
    int vertex = -1;                 // vertex arrivals
    std::vector<int> neighbors;      // vertex arrivals, kept sorted
    Edge edge;                       // edge arrivals

    static ArrivalEvent vertex_arrival(int id, std::vector<int> nbrs = {}) {
        ArrivalEvent ev;
        ev.kind = ArrivalModel::VertexArrival;
        ev.vertex = id;
        std::sort(nbrs.begin(), nbrs.end());
        ev.neighbors = std::move(nbrs);
        return ev;
    }

    static ArrivalEvent edge_arrival(int u, int v, long long weight = 1) {
        ArrivalEvent ev;
        ev.kind = ArrivalModel::EdgeArrival;
        if (u > v) std::swap(u, v);
        ev.edge = Edge{u, v, weight};
        return ev;
    }
};

struct RequestSequence {
    ArrivalModel model = ArrivalModel::VertexArrival;
    std::vector<ArrivalEvent> events;
};

struct Violation {
    std::size_t event_index;
    std::string rule;
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t line_no, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + reason),
          line(line_no) {}
    std::size_t line;
};

// Graph revealed so far. Vertex ids are dense 0..n-1; edge ids are arrival
// indices into edges().
class GraphSnapshot {
  public:
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

    // -1 when absent.
    int edge_id(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = edge_index_.find(key(u, v));
        return it == edge_index_.end() ? -1 : it->second;
    }

    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    // Violated rule, or nullopt if the event may be applied next.
    std::optional<std::string> check(const ArrivalEvent& ev) const {
        if (ev.kind == ArrivalModel::VertexArrival) {
            if (ev.vertex != n_) return "vertex id not dense";
            int prev = -1;
            for (int u : ev.neighbors) {
                if (u < 0) return "negative neighbor id";
                if (u == ev.vertex) return "self-loop";
                if (u > ev.vertex) return "neighbor not yet revealed";
                if (u == prev) return "duplicate neighbor";
                prev = u;
            }
            return std::nullopt;
        }
        const Edge& e = ev.edge;
        if (e.u < 0) return "negative vertex id";
        if (e.u == e.v) return "self-loop";
        if (e.weight <= 0) return "non-positive weight";
        // New endpoints must keep ids dense: {} or {n} or {n, n+1}.
        if (e.v > n_ + 1) return "vertex id gap";
        if (e.v == n_ + 1 && e.u != n_) return "vertex id gap";
        if (e.v < n_ && edge_id(e.u, e.v) >= 0) return "duplicate edge";
        return std::nullopt;
    }

    void apply(const ArrivalEvent& ev) {
        if (auto rule = check(ev)) throw std::invalid_argument(*rule);
        if (ev.kind == ArrivalModel::VertexArrival) {
            adj_.emplace_back(ev.neighbors);
            for (int u : ev.neighbors) {
                insert_sorted(adj_[static_cast<std::size_t>(u)], ev.vertex);
                edge_index_.emplace(key(u, ev.vertex), static_cast<int>(edges_.size()));
                edges_.push_back(Edge{u, ev.vertex, 1});
            }
            ++n_;
            return;
        }
        const Edge& e = ev.edge;
        while (n_ <= e.v) {
            adj_.emplace_back();
            ++n_;
        }
        insert_sorted(adj_[static_cast<std::size_t>(e.u)], e.v);
        insert_sorted(adj_[static_cast<std::size_t>(e.v)], e.u);
        edge_index_.emplace(key(e.u, e.v), static_cast<int>(edges_.size()));
        edges_.push_back(e);
    }

  private:
    static std::uint64_t key(int u, int v) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
               static_cast<std::uint32_t>(v);
    }

    static void insert_sorted(std::vector<int>& v, int x) {
        v.insert(std::lower_bound(v.begin(), v.end(), x), x);
    }

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, int> edge_index_;
};

// Collects every violation; an offending event is skipped, later events are
// judged against the longest valid prefix.
inline std::vector<Violation> validate_sequence(const RequestSequence& seq) {
    std::vector<Violation> out;
    GraphSnapshot snap;
    for (std::size_t i = 0; i < seq.events.size(); ++i) {
        const ArrivalEvent& ev = seq.events[i];
        if (ev.kind != seq.model) {
            out.push_back({i, ev.kind == ArrivalModel::EdgeArrival
                                  ? "edge event in vertex model"
                                  : "vertex event in edge model"});
            continue;
        }
        if (auto rule = snap.check(ev)) {
            out.push_back({i, *rule});
            continue;
        }
        snap.apply(ev);
    }
    return out;
}

inline bool is_valid(const RequestSequence& seq) { return validate_sequence(seq).empty(); }

// Pre: the prefix validates. Throws std::out_of_range / std::invalid_argument.
inline GraphSnapshot build_snapshot(const RequestSequence& seq, std::size_t prefix_len) {
    if (prefix_len > seq.events.size()) throw std::out_of_range("prefix length exceeds sequence");
    GraphSnapshot snap;
    for (std::size_t i = 0; i < prefix_len; ++i) {
        if (seq.events[i].kind != seq.model)
            throw std::invalid_argument("event kind does not match sequence model");
        snap.apply(seq.events[i]);
    }
    return snap;
}

inline GraphSnapshot build_snapshot(const RequestSequence& seq) {
    return build_snapshot(seq, seq.events.size());
}

namespace detail {

inline long long parse_integer(const std::string& tok, std::size_t line_no) {
    if (tok.empty()) throw ParseError(line_no, "empty token");
    std::size_t pos = tok[0] == '-' ? 1 : 0;
    if (pos == tok.size()) throw ParseError(line_no, "malformed integer '" + tok + "'");
    for (std::size_t i = pos; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw ParseError(line_no, "malformed integer '" + tok + "'");
    try {
        return std::stoll(tok);
    } catch (const std::exception&) {
        throw ParseError(line_no, "integer out of range '" + tok + "'");
    }
}

}  // namespace detail

// Line format: "model vertex|edge" first, then "v <id> <neighbor>*" or
// "e <u> <v> [weight]". '#' starts a comment. Weights must be positive
// integers; fractional weights are a parse error, not a rounding.
inline RequestSequence parse_events(const std::string& text) {
    RequestSequence seq;
    bool model_seen = false;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (!model_seen) {
            if (head != "model") throw ParseError(line_no, "expected model declaration");
            std::string which;
            if (!(ls >> which)) throw ParseError(line_no, "missing arrival model");
            if (which == "vertex") seq.model = ArrivalModel::VertexArrival;
            else if (which == "edge") seq.model = ArrivalModel::EdgeArrival;
            else throw ParseError(line_no, "unknown arrival model '" + which + "'");
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "trailing tokens");
            model_seen = true;
            continue;
        }
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (head == "v") {
            if (seq.model != ArrivalModel::VertexArrival)
                throw ParseError(line_no, "vertex event in edge model");
            if (toks.empty()) throw ParseError(line_no, "missing vertex id");
            std::vector<int> nbrs;
            const int id = static_cast<int>(detail::parse_integer(toks[0], line_no));
            for (std::size_t i = 1; i < toks.size(); ++i)
                nbrs.push_back(static_cast<int>(detail::parse_integer(toks[i], line_no)));
            seq.events.push_back(ArrivalEvent::vertex_arrival(id, std::move(nbrs)));
        } else if (head == "e") {
            if (seq.model != ArrivalModel::EdgeArrival)
                throw ParseError(line_no, "edge event in vertex model");
            if (toks.size() < 2) throw ParseError(line_no, "missing edge endpoint");
            if (toks.size() > 3) throw ParseError(line_no, "trailing tokens");
            const int u = static_cast<int>(detail::parse_integer(toks[0], line_no));
            const int v = static_cast<int>(detail::parse_integer(toks[1], line_no));
            long long w = 1;
            if (toks.size() == 3) {
                w = detail::parse_integer(toks[2], line_no);
                if (w <= 0) throw ParseError(line_no, "non-positive weight");
            }
            seq.events.push_back(ArrivalEvent::edge_arrival(u, v, w));
        } else {
            throw ParseError(line_no, "unknown event '" + head + "'");
        }
    }
    if (!model_seen) throw ParseError(line_no == 0 ? 1 : line_no, "expected model declaration");
    return seq;
}

// Canonical form: sorted neighbor lists, u < v, weight always explicit.
inline std::string serialize_events(const RequestSequence& seq) {
    std::ostringstream out;
    out << "model " << to_string(seq.model) << "\n";
    for (const ArrivalEvent& ev : seq.events) {
        if (ev.kind == ArrivalModel::VertexArrival) {
            out << "v " << ev.vertex;
            for (int u : ev.neighbors) out << ' ' << u;
        } else {
            out << "e " << ev.edge.u << ' ' << ev.edge.v << ' ' << ev.edge.weight;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace lateops
