#pragma once

// Text formats: ".sg" signed graphs, ".lhom" list-homomorphism instances,
// seed-pair files and certificate blocks.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgh/signed_graph.hpp"

namespace sgh {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline EdgeSign parse_sign(const std::string& s, int line) {
    if (s == "+") return EdgeSign::blue;
    if (s == "-") return EdgeSign::red;
    if (s == "+-") return EdgeSign::bicoloured;
    throw parse_error(line, "bad edge sign '" + s + "' (expected +, - or +-)");
}

} // namespace detail

// One edge per line "u v S" with S in {+, -, +-}; loops as "u u S"; isolated
// vertices via "vertex u" lines; comment lines start with '#'.
inline SignedGraph parse_sg(std::istream& in, GraphMode hint = GraphMode::general) {
    std::vector<std::string> vertices;
    std::vector<std::tuple<std::string, std::string, EdgeSign>> edges;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "vertex") {
            if (toks.size() != 2) throw parse_error(no, "expected 'vertex u'");
            vertices.push_back(toks[1]);
        } else if (toks.size() == 3) {
            edges.emplace_back(toks[0], toks[1], detail::parse_sign(toks[2], no));
        } else {
            throw parse_error(no, "expected 'u v S' or 'vertex u'");
        }
    }
    return SignedGraph::make(std::move(vertices), edges, hint);
}

inline SignedGraph parse_sg(const std::string& text, GraphMode hint = GraphMode::general) {
    std::istringstream in(text);
    return parse_sg(in, hint);
}

// Canonical form: vertices then edges, both in lexicographic order.
inline void serialize_sg(std::ostream& out, const SignedGraph& g) {
    for (const auto& n : g.names()) out << "vertex " << n << "\n";
    for (const Edge& e : g.edges()) out << g.name(e.u) << " " << g.name(e.v) << " " << to_string(e.sign) << "\n";
}

inline std::string serialize_sg(const SignedGraph& g) {
    std::ostringstream out;
    serialize_sg(out, g);
    return out.str();
}

// ---------------------------------------------------------------------------
// Lists instances (".lhom"): a .sg block for G plus "list v: a b c" lines.
// A missing list means the full template vertex set.

struct ParsedLists {
    SignedGraph g;
    std::vector<std::pair<std::string, std::vector<std::string>>> lists; // vertex -> tokens
};

inline ParsedLists parse_lhom(std::istream& in) {
    std::vector<std::string> vertices;
    std::vector<std::tuple<std::string, std::string, EdgeSign>> edges;
    std::vector<std::pair<std::string, std::vector<std::string>>> lists;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "vertex") {
            if (toks.size() != 2) throw parse_error(no, "expected 'vertex u'");
            vertices.push_back(toks[1]);
        } else if (toks[0] == "list") {
            if (toks.size() < 2) throw parse_error(no, "expected 'list v: a b ...'");
            std::string v = toks[1];
            if (!v.empty() && v.back() == ':') v.pop_back();
            if (v.empty()) throw parse_error(no, "missing vertex in list line");
            std::vector<std::string> entries(toks.begin() + 2, toks.end());
            lists.emplace_back(std::move(v), std::move(entries));
        } else if (toks.size() == 3) {
            edges.emplace_back(toks[0], toks[1], detail::parse_sign(toks[2], no));
        } else {
            throw parse_error(no, "expected 'u v S', 'vertex u' or 'list v: ...'");
        }
    }
    return ParsedLists{SignedGraph::make(std::move(vertices), edges), std::move(lists)};
}

// Seed pair files: one "x y" pair per line, '#' comments.
inline std::vector<std::pair<std::string, std::string>> parse_pairs(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks.size() != 2) throw parse_error(no, "expected 'x y'");
        out.emplace_back(toks[0], toks[1]);
    }
    return out;
}

} // namespace sgh
