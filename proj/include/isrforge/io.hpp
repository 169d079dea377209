// Parsers and writers for the .col / .dat / .sol text formats.
//
// The exact grammars live in docs/FORMATS.md. This is the only layer that
// sees 1-based vertex ids; everything behind it is 0-based. Inputs tolerate
// CRLF and runs of spaces/tabs; outputs are LF-only with no trailing blanks.
#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "isrforge/model.hpp"

namespace isrforge {

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> toks;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

// One physical line per callback, 1-based line numbers, '\r' stripped.
template <class F>
inline void for_each_line(std::string_view text, F&& f) {
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        if (pos == text.size() && lineno > 0) break;
        size_t nl = text.find('\n', pos);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++lineno;
        f(lineno, line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

inline long long parse_int(std::string_view tok, int lineno, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw IsrError(Errc::syntax, std::string("expected ") + what + ", got '" +
                                         std::string(tok) + "'",
                       lineno);
    return value;
}

// 1-based id -> 0-based vertex, range-checked against n.
inline int parse_vertex(std::string_view tok, int n, int lineno) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw IsrError(Errc::syntax, "expected vertex id, got '" + std::string(tok) + "'",
                       lineno);
    if (v < 1 || v > n)
        throw IsrError(Errc::vertex_out_of_range,
                       "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n),
                       lineno, v);
    return static_cast<int>(v - 1);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graph files (.col)

struct GraphLimits {
    int vertex_cap = kDefaultVertexCap;
};

inline Graph parse_graph(std::string_view text, GraphLimits limits = {}) {
    bool got_header = false;
    int n = 0;
    long long m = 0, found = 0;
    Graph g;
    std::vector<Bitset> adj;
    detail::for_each_line(text, [&](int lineno, std::string_view line) {
        auto toks = detail::split_tokens(line);
        if (toks.empty()) return;
        if (toks[0] == "c") return;
        if (toks[0] == "p") {
            if (got_header) throw IsrError(Errc::syntax, "duplicate 'p' header", lineno);
            if (toks.size() != 4 || toks[1] != "edge")
                throw IsrError(Errc::syntax, "expected 'p edge <n> <m>'", lineno);
            long long nn = detail::parse_int(toks[2], lineno, "vertex count");
            long long mm = detail::parse_int(toks[3], lineno, "edge count");
            if (nn < 0 || mm < 0)
                throw IsrError(Errc::syntax, "negative count in header", lineno);
            if (nn > limits.vertex_cap)
                throw IsrError(Errc::syntax,
                               "vertex count " + std::to_string(nn) + " exceeds cap " +
                                   std::to_string(limits.vertex_cap),
                               lineno);
            n = static_cast<int>(nn);
            m = mm;
            adj.assign(static_cast<size_t>(n), Bitset(n));
            got_header = true;
            return;
        }
        if (toks[0] == "e") {
            if (!got_header)
                throw IsrError(Errc::syntax, "'e' line before 'p edge' header", lineno);
            if (toks.size() != 3)
                throw IsrError(Errc::syntax, "expected 'e <u> <v>'", lineno);
            int u = detail::parse_vertex(toks[1], n, lineno);
            int v = detail::parse_vertex(toks[2], n, lineno);
            if (u == v) throw IsrError(Errc::self_loop, "self-loop at vertex " +
                                           std::to_string(u + 1), lineno);
            if (adj[static_cast<size_t>(u)].test(v))
                throw IsrError(Errc::duplicate_edge,
                               "duplicate edge " + std::to_string(std::min(u, v) + 1) + "-" +
                                   std::to_string(std::max(u, v) + 1),
                               lineno);
            ++found;
            if (found > m)
                throw IsrError(Errc::edge_count_mismatch,
                               "header promised " + std::to_string(m) + " edges, found more",
                               lineno, m, found);
            adj[static_cast<size_t>(u)].set(v);
            adj[static_cast<size_t>(v)].set(u);
            return;
        }
        throw IsrError(Errc::syntax, "unknown line type '" + std::string(toks[0]) + "'",
                       lineno);
    });
    if (!got_header) throw IsrError(Errc::syntax, "missing 'p edge' header", 0);
    if (found != m)
        throw IsrError(Errc::edge_count_mismatch,
                       "header promised " + std::to_string(m) + " edges, found " +
                           std::to_string(found),
                       0, m, found);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int u = 0; u < n; ++u)
        adj[static_cast<size_t>(u)].for_each_bit([&](int v) {
            if (v > u) edges.emplace_back(u, v);
        });
    return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Instance files (.dat)

inline Instance parse_instance(std::string_view text, const Graph& graph,
                               RuleModel model = RuleModel::TJ, std::string name = {}) {
    const int n = graph.vertex_count();
    VertexSet start(n), target(n);
    bool saw_start = false, saw_target = false;
    detail::for_each_line(text, [&](int lineno, std::string_view line) {
        auto toks = detail::split_tokens(line);
        if (toks.empty()) return;
        if (toks[0] == "c") return;
        VertexSet* dest = nullptr;
        if (toks[0] == "s") {
            dest = &start;
            saw_start = true;
        } else if (toks[0] == "t") {
            dest = &target;
            saw_target = true;
        } else {
            throw IsrError(Errc::syntax, "unknown line type '" + std::string(toks[0]) + "'",
                           lineno);
        }
        for (size_t i = 1; i < toks.size(); ++i) {
            int v = detail::parse_vertex(toks[i], n, lineno);
            if (dest->contains(v))
                throw IsrError(Errc::syntax,
                               "duplicate vertex " + std::to_string(v + 1) + " in set",
                               lineno);
            dest->add(v);
        }
    });
    if (!saw_start || start.empty())
        throw IsrError(Errc::missing_start, "no start set ('s' line)", 0);
    if (!saw_target || target.empty())
        throw IsrError(Errc::missing_target, "no target set ('t' line)", 0);
    return make_instance(graph, std::move(start), std::move(target), model, std::move(name));
}

// ---------------------------------------------------------------------------
// Solution files (.sol)

namespace detail {
inline void append_set_line(std::string& out, char tag, const VertexSet& s) {
    out.push_back(tag);
    s.bits().for_each_bit([&](int v) {
        out.push_back(' ');
        out += std::to_string(v + 1);
    });
    out.push_back('\n');
}
}  // namespace detail

// A verified sequence as text. The `c solver` comment appears only when a
// solver name is given, keeping bare sequences minimal.
inline std::string write_solution(const Sequence& seq, const Instance& instance,
                                  const std::string& solver = {}) {
    std::string out;
    if (!solver.empty()) out += "c solver " + solver + "\n";
    detail::append_set_line(out, 's', instance.start);
    for (const Move& mv : seq.moves)
        out += "m " + std::to_string(mv.from + 1) + " " + std::to_string(mv.to + 1) + "\n";
    detail::append_set_line(out, 't', instance.target);
    return out;
}

inline std::string write_unreachable(const std::string& solver = {}) {
    std::string out;
    if (!solver.empty()) out += "c solver " + solver + "\n";
    out += "u\n";
    return out;
}

struct UnreachableClaim {};
using ParsedSolution = std::variant<Sequence, UnreachableClaim>;

// Inverse of write_solution on valid input. Checks syntax and id ranges
// only; legality is verify's job.
inline ParsedSolution parse_solution(std::string_view text, const Instance& instance) {
    const int n = instance.graph.vertex_count();
    Sequence seq;
    bool saw_start = false, saw_target = false, saw_unreachable = false;
    VertexSet s_set(n), t_set(n);
    detail::for_each_line(text, [&](int lineno, std::string_view line) {
        auto toks = detail::split_tokens(line);
        if (toks.empty()) return;
        if (toks[0] == "c") return;
        if (saw_unreachable)
            throw IsrError(Errc::syntax, "content after 'u' line", lineno);
        if (toks[0] == "u") {
            if (toks.size() != 1) throw IsrError(Errc::syntax, "'u' takes no arguments", lineno);
            if (saw_start || saw_target)
                throw IsrError(Errc::syntax, "'u' mixed with solution lines", lineno);
            saw_unreachable = true;
            return;
        }
        if (toks[0] == "s" || toks[0] == "t") {
            bool is_start = toks[0] == "s";
            if (is_start && (saw_target || !seq.moves.empty()))
                throw IsrError(Errc::syntax, "'s' line after moves", lineno);
            if (!is_start && !saw_start)
                throw IsrError(Errc::syntax, "'t' line before 's'", lineno);
            VertexSet& dest = is_start ? s_set : t_set;
            (is_start ? saw_start : saw_target) = true;
            for (size_t i = 1; i < toks.size(); ++i) {
                int v = detail::parse_vertex(toks[i], n, lineno);
                if (dest.contains(v))
                    throw IsrError(Errc::syntax,
                                   "duplicate vertex " + std::to_string(v + 1) + " in set",
                                   lineno);
                dest.add(v);
            }
            return;
        }
        if (toks[0] == "m") {
            if (!saw_start) throw IsrError(Errc::syntax, "'m' line before 's'", lineno);
            if (saw_target) throw IsrError(Errc::syntax, "'m' line after 't'", lineno);
            if (toks.size() != 3) throw IsrError(Errc::syntax, "expected 'm <from> <to>'", lineno);
            int from = detail::parse_vertex(toks[1], n, lineno);
            int to = detail::parse_vertex(toks[2], n, lineno);
            if (from == to) throw IsrError(Errc::syntax, "degenerate move", lineno);
            seq.moves.push_back(Move{from, to});
            return;
        }
        throw IsrError(Errc::syntax, "unknown line type '" + std::string(toks[0]) + "'",
                       lineno);
    });
    if (saw_unreachable) return UnreachableClaim{};
    if (!saw_start) throw IsrError(Errc::syntax, "no 's' line", 0);
    if (!saw_target) throw IsrError(Errc::syntax, "no 't' line", 0);
    return seq;
}

// ---------------------------------------------------------------------------
// Writers used by the generator CLI (round-trip with the parsers above).

inline std::string write_graph(const Graph& g, const std::string& comment = {}) {
    std::string out;
    if (!comment.empty()) out += "c " + comment + "\n";
    out += "p edge " + std::to_string(g.vertex_count()) + " " +
           std::to_string(g.edge_count()) + "\n";
    g.for_each_edge([&](int u, int v) {
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    });
    return out;
}

inline std::string write_instance(const Instance& inst, const std::string& comment = {}) {
    std::string out;
    if (!comment.empty()) out += "c " + comment + "\n";
    detail::append_set_line(out, 's', inst.start);
    detail::append_set_line(out, 't', inst.target);
    return out;
}

}  // namespace isrforge
