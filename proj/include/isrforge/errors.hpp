#pragma once

#include <stdexcept>
#include <string>

namespace isrforge {

enum class Errc {
    syntax,
    duplicate_edge,
    self_loop,
    edge_count_mismatch,
    vertex_out_of_range,
    missing_start,
    missing_target,
    not_independent,
    size_mismatch,
    move_not_applicable,
    too_large,
    not_satisfying,
    decode_inconsistent,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::syntax: return "syntax";
        case Errc::duplicate_edge: return "duplicate-edge";
        case Errc::self_loop: return "self-loop";
        case Errc::edge_count_mismatch: return "edge-count-mismatch";
        case Errc::vertex_out_of_range: return "vertex-out-of-range";
        case Errc::missing_start: return "missing-start";
        case Errc::missing_target: return "missing-target";
        case Errc::not_independent: return "not-independent";
        case Errc::size_mismatch: return "size-mismatch";
        case Errc::move_not_applicable: return "move-not-applicable";
        case Errc::too_large: return "too-large";
        case Errc::not_satisfying: return "not-satisfying";
        case Errc::decode_inconsistent: return "decode-inconsistent";
    }
    return "?";
}

// One structured error type for the whole suite. `line` is 1-based for
// parse errors and 0 elsewhere; `a`/`b` carry error-specific payload
// (expected/found counts, a witness edge, a clause index) or -1.
class IsrError : public std::runtime_error {
public:
    IsrError(Errc code, std::string message, int line = 0, long long a = -1, long long b = -1)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          code_(code),
          line_(line),
          a_(a),
          b_(b) {}

    Errc code() const { return code_; }
    int line() const { return line_; }
    long long a() const { return a_; }
    long long b() const { return b_; }

private:
    Errc code_;
    int line_;
    long long a_, b_;
};

}  // namespace isrforge
