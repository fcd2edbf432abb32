#pragma once

// Text serialization for certificates and verdict blocks, shared by the CLI
// and the golden-file tests. Certificates are labeled walk lists; verdicts
// are tagged text blocks.

#include <sstream>
#include <string>
#include <vector>

#include "sgh/classify.hpp"
#include "sgh/io.hpp"

namespace sgh {

namespace detail {

inline void emit_walk(std::ostream& out, const SignedGraph& g, const char* label, const std::vector<int>& walk) {
    out << label << ":";
    for (int v : walk) out << " " << g.name(v);
    out << "\n";
}

} // namespace detail

inline std::string serialize_ordering(const SignedGraph& g, const MinOrdering& ord) {
    std::ostringstream out;
    auto line = [&](const std::vector<int>& order) {
        for (std::size_t i = 0; i < order.size(); ++i) out << (i ? " " : "") << g.name(order[i]);
        out << "\n";
    };
    line(ord.order_a);
    if (ord.mode == GraphMode::bipartite) line(ord.order_b);
    return out.str();
}

inline std::string serialize_chain(const SignedGraph& g, const Chain& c) {
    std::ostringstream out;
    out << "CHAIN " << g.name(c.walk_u.front()) << " " << g.name(c.walk_u.back()) << "\n";
    detail::emit_walk(out, g, "U", c.walk_u);
    detail::emit_walk(out, g, "D", c.walk_d);
    return out.str();
}

inline std::string serialize_invertible_pair(const SignedGraph& g, const InvertiblePairCertificate& c) {
    std::ostringstream out;
    out << "INVPAIR " << g.name(c.u) << " " << g.name(c.u2) << "\n";
    detail::emit_walk(out, g, "V1", c.w1a);
    detail::emit_walk(out, g, "V2", c.w1b);
    detail::emit_walk(out, g, "W1", c.w2a);
    detail::emit_walk(out, g, "W2", c.w2b);
    return out.str();
}

inline std::string serialize_flower(const SignedGraph& g, const Flower& f) {
    std::ostringstream out;
    out << "FLOWER " << f.petals.size() << "\n";
    for (const Petal& p : f.petals) {
        out << "PETAL " << g.name(p.center) << "\n";
        std::vector<int> lo{p.center}, up{p.center};
        for (auto [l, u] : p.rungs) {
            lo.push_back(l);
            up.push_back(u);
        }
        detail::emit_walk(out, g, "L", lo);
        detail::emit_walk(out, g, "U", up);
    }
    return out.str();
}

inline std::string serialize_odd_walk(const SignedGraph& g, const OddRedClosedWalk& w) {
    std::ostringstream out;
    detail::emit_walk(out, g, "WALK", w.walk);
    return out.str();
}

// Tagged verdict block: "VERDICT: <tag>" then the certificate payload.
inline std::string serialize_verdict(const SignedGraph& input, const ClassificationResult& r) {
    std::ostringstream out;
    switch (r.verdict) {
        case ClassificationResult::Verdict::polynomial:
            out << "VERDICT: P\n" << serialize_ordering(r.normalized, r.ordering->ordering);
            break;
        case ClassificationResult::Verdict::npc_chain:
            out << "VERDICT: NPC-CHAIN\n" << serialize_chain(r.normalized, *r.chain);
            break;
        case ClassificationResult::Verdict::npc_invertible:
            out << "VERDICT: NPC-INVPAIR\n" << serialize_invertible_pair(r.normalized, *r.invertible);
            break;
        case ClassificationResult::Verdict::not_weakly_balanced:
            out << "VERDICT: NOT-WEAKLY-BALANCED\n" << serialize_odd_walk(input, *r.odd_walk);
            break;
        case ClassificationResult::Verdict::unsupported_shape:
            out << "VERDICT: UNSUPPORTED\nREASON: " << r.reason << "\n";
            break;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Certificate parsing (verify subcommand)

namespace detail {

inline std::vector<int> parse_walk_line(const SignedGraph& g, const std::string& line, const std::string& label,
                                        int no) {
    auto toks = split_ws(line);
    if (toks.empty() || toks[0] != label + ":") throw parse_error(no, "expected '" + label + ":' walk line");
    std::vector<int> walk;
    for (std::size_t i = 1; i < toks.size(); ++i) walk.push_back(g.index_of(toks[i]));
    return walk;
}

inline std::vector<std::string> nonblank_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "VERDICT:" || toks[0] == "REASON:") continue; // verdict blocks verify as-is
        lines.push_back(line);
    }
    return lines;
}

} // namespace detail

inline Chain parse_chain(const SignedGraph& g, std::istream& in) {
    auto lines = detail::nonblank_lines(in);
    std::size_t i = lines.size() > 0 && detail::split_ws(lines[0])[0] == "CHAIN" ? 1 : 0;
    if (lines.size() < i + 2) throw parse_error(1, "chain certificate needs U and D walks");
    Chain c;
    c.walk_u = detail::parse_walk_line(g, lines[i], "U", static_cast<int>(i + 1));
    c.walk_d = detail::parse_walk_line(g, lines[i + 1], "D", static_cast<int>(i + 2));
    return c;
}

inline InvertiblePairCertificate parse_invertible_pair(const SignedGraph& g, std::istream& in) {
    auto lines = detail::nonblank_lines(in);
    std::size_t i = 0;
    InvertiblePairCertificate c;
    if (!lines.empty()) {
        auto toks = detail::split_ws(lines[0]);
        if (toks.size() == 3 && toks[0] == "INVPAIR") {
            c.u = g.index_of(toks[1]);
            c.u2 = g.index_of(toks[2]);
            i = 1;
        }
    }
    if (lines.size() < i + 4) throw parse_error(1, "invertible-pair certificate needs four walks");
    c.w1a = detail::parse_walk_line(g, lines[i], "V1", static_cast<int>(i + 1));
    c.w1b = detail::parse_walk_line(g, lines[i + 1], "V2", static_cast<int>(i + 2));
    c.w2a = detail::parse_walk_line(g, lines[i + 2], "W1", static_cast<int>(i + 3));
    c.w2b = detail::parse_walk_line(g, lines[i + 3], "W2", static_cast<int>(i + 4));
    if (c.u < 0 && !c.w1a.empty()) {
        c.u = c.w1a.front();
        c.u2 = c.w1a.back();
    }
    return c;
}

inline OddRedClosedWalk parse_odd_walk(const SignedGraph& g, std::istream& in) {
    auto lines = detail::nonblank_lines(in);
    if (lines.empty()) throw parse_error(1, "empty walk certificate");
    OddRedClosedWalk w;
    w.walk = detail::parse_walk_line(g, lines[0], "WALK", 1);
    w.red_count = 0;
    for (std::size_t i = 0; i + 1 < w.walk.size(); ++i) {
        auto s = g.sign(w.walk[i], w.walk[i + 1]);
        if (s && *s == EdgeSign::red) ++w.red_count;
    }
    return w;
}

// Ordering certificate: one line per part (two lines bipartite, one reflexive).
inline MinOrdering parse_ordering(const SignedGraph& g, GraphMode mode, std::istream& in) {
    auto lines = detail::nonblank_lines(in);
    MinOrdering ord;
    ord.mode = mode;
    std::size_t want = mode == GraphMode::bipartite ? 2 : 1;
    if (lines.size() < want) throw parse_error(1, "ordering certificate is missing part lines");
    for (const auto& t : detail::split_ws(lines[0])) ord.order_a.push_back(g.index_of(t));
    if (mode == GraphMode::bipartite)
        for (const auto& t : detail::split_ws(lines[1])) ord.order_b.push_back(g.index_of(t));
    return ord;
}

} // namespace sgh
