// Core domain types and the single source of truth for move legality.
//
// Vertices are 0-based everywhere in memory; the 1-based ids of the file
// formats exist only inside the io layer. All types here are immutable
// after construction and the operations are pure, so values can be shared
// freely across threads.
#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "isrforge/bits.hpp"
#include "isrforge/errors.hpp"

namespace isrforge {

inline constexpr int kDefaultVertexCap = 1'000'000;

// ---------------------------------------------------------------------------
// Graph

class Graph {
public:
    Graph() = default;

    // Builds a simple undirected graph from 0-based endpoint pairs.
    // Self-loops and duplicate edges are rejected, not repaired.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<size_t>(n), Bitset(n));
        for (const auto& [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        assert(u >= 0 && u < n_ && v >= 0 && v < n_);
        return adj_[static_cast<size_t>(u)].test(v);
    }
    const Bitset& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }

    // Edges in ascending (u, v) order with u < v.
    template <class F>
    void for_each_edge(F&& f) const {
        for (int u = 0; u < n_; ++u) {
            adj_[static_cast<size_t>(u)].for_each_bit([&](int v) {
                if (v > u) f(u, v);
            });
        }
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.adj_ == b.adj_;
    }

private:
    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw IsrError(Errc::vertex_out_of_range, "edge endpoint out of range");
        if (u == v) throw IsrError(Errc::self_loop, "self-loop");
        if (adj_[static_cast<size_t>(u)].test(v))
            throw IsrError(Errc::duplicate_edge, "duplicate edge");
        adj_[static_cast<size_t>(u)].set(v);
        adj_[static_cast<size_t>(v)].set(u);
        ++m_;
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
};

// ---------------------------------------------------------------------------
// VertexSet: token positions as a bit vector with a cached cardinality.

class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : bits_(universe) {}

    int universe() const { return bits_.universe(); }
    int count() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(int v) const { return bits_.test(v); }
    const Bitset& bits() const { return bits_; }

    void add(int v) {
        assert(!bits_.test(v));
        bits_.set(v);
        ++count_;
    }
    void remove(int v) {
        assert(bits_.test(v));
        bits_.reset(v);
        --count_;
    }

    VertexSet with(int v) const {
        VertexSet s(*this);
        s.add(v);
        return s;
    }
    VertexSet without(int v) const {
        VertexSet s(*this);
        s.remove(v);
        return s;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count_));
        bits_.for_each_bit([&](int v) { out.push_back(v); });
        return out;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.bits_ == b.bits_;
    }
    // Ascending order of vertex lists; the order used wherever the suite
    // needs a deterministic "least" set.
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        return Bitset::compare_sets(a.bits_, b.bits_) < 0;
    }

private:
    Bitset bits_;
    int count_ = 0;
};

inline VertexSet make_vertex_set(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
}

// Injective over sets sharing a universe; equal sets yield identical bytes.
inline std::string canonical_key(const VertexSet& s) { return s.bits().key_bytes(); }

inline VertexSet vertex_set_from_key(int universe, const std::string& key) {
    Bitset b = Bitset::from_key_bytes(universe, key);
    VertexSet s(universe);
    b.for_each_bit([&](int v) { s.add(v); });
    return s;
}

// ---------------------------------------------------------------------------
// Rules, instances, moves

enum class RuleModel { TJ, TS };

inline const char* rule_name(RuleModel m) { return m == RuleModel::TJ ? "tj" : "ts"; }

struct Move {
    int from = -1;
    int to = -1;
    friend bool operator==(const Move&, const Move&) = default;
    friend auto operator<=>(const Move&, const Move&) = default;
};

inline Move reversed(Move m) { return Move{m.to, m.from}; }

struct Sequence {
    std::vector<Move> moves;
    size_t length() const { return moves.size(); }
    friend bool operator==(const Sequence&, const Sequence&) = default;
};

// ---------------------------------------------------------------------------
// Rule semantics

inline bool is_independent(const Graph& g, const VertexSet& s) {
    assert(s.universe() == g.vertex_count());
    bool ok = true;
    s.bits().for_each_bit([&](int v) {
        if (ok && g.neighbors(v).intersects(s.bits())) ok = false;
    });
    return ok;
}

// Legality of a single move at s: from occupied, to free, the swapped set
// independent, and for TS the slide must follow an edge.
inline bool is_legal_move(const Graph& g, const VertexSet& s, Move mv, RuleModel model) {
    if (mv.from == mv.to) return false;
    if (mv.from < 0 || mv.from >= g.vertex_count() || mv.to < 0 || mv.to >= g.vertex_count())
        return false;
    if (!s.contains(mv.from) || s.contains(mv.to)) return false;
    if (model == RuleModel::TS && !g.has_edge(mv.from, mv.to)) return false;
    // s is independent, so only the incoming token can clash.
    return g.neighbors(mv.to).intersection_within(s.bits(), mv.from);
}

// All legal moves at s in ascending (from, to) order.
inline std::vector<Move> legal_moves(const Graph& g, const VertexSet& s, RuleModel model) {
    assert(is_independent(g, s));
    std::vector<Move> out;
    const int n = g.vertex_count();
    s.bits().for_each_bit([&](int from) {
        if (model == RuleModel::TS) {
            g.neighbors(from).for_each_bit([&](int to) {
                if (!s.contains(to) && g.neighbors(to).intersection_within(s.bits(), from))
                    out.push_back(Move{from, to});
            });
        } else {
            for (int to = 0; to < n; ++to) {
                if (to == from || s.contains(to)) continue;
                if (g.neighbors(to).intersection_within(s.bits(), from))
                    out.push_back(Move{from, to});
            }
        }
    });
    return out;
}

inline VertexSet apply_move(const VertexSet& s, Move mv) {
    if (!s.contains(mv.from) || s.contains(mv.to))
        throw IsrError(Errc::move_not_applicable,
                       "move " + std::to_string(mv.from) + "->" + std::to_string(mv.to) +
                           " not applicable",
                       0, mv.from, mv.to);
    return s.without(mv.from).with(mv.to);
}

// ---------------------------------------------------------------------------
// Instance

struct Instance {
    Graph graph;
    VertexSet start;
    VertexSet target;
    RuleModel model = RuleModel::TJ;
    std::string name;
};

// Validates the Instance invariants shared by parsers and generators.
// `a`/`b` of a not_independent error carry the witness edge (0-based).
inline Instance make_instance(Graph graph, VertexSet start, VertexSet target,
                              RuleModel model = RuleModel::TJ, std::string name = {}) {
    auto check_independent = [&](const VertexSet& s, const char* which) {
        s.bits().for_each_bit([&](int v) {
            Bitset clash = graph.neighbors(v);
            clash &= s.bits();
            int w = clash.lowest_bit();
            if (w >= 0)
                throw IsrError(Errc::not_independent,
                               std::string(which) + " set is not independent (edge " +
                                   std::to_string(std::min(v, w) + 1) + "-" +
                                   std::to_string(std::max(v, w) + 1) + ")",
                               0, std::min(v, w), std::max(v, w));
        });
    };
    if (start.empty())
        throw IsrError(Errc::missing_start, "start set is empty");
    if (target.empty())
        throw IsrError(Errc::missing_target, "target set is empty");
    if (start.count() != target.count())
        throw IsrError(Errc::size_mismatch,
                       "start has " + std::to_string(start.count()) + " tokens, target has " +
                           std::to_string(target.count()),
                       0, start.count(), target.count());
    check_independent(start, "start");
    check_independent(target, "target");
    return Instance{std::move(graph), std::move(start), std::move(target), model,
                    std::move(name)};
}

}  // namespace isrforge
