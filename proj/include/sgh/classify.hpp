#pragma once

// End-to-end dichotomy classification: normalize, detect the graph shape,
// and either produce a special min ordering (polynomial case) or a chain /
// invertible-pair obstruction (NP-complete case). Also the forbidden-subgraph
// characterization for bipartite chain graphs.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sgh/special.hpp"

namespace sgh {

struct ClassificationResult {
    enum class Verdict : std::uint8_t {
        polynomial,       // special min ordering found
        npc_chain,        // chain obstruction
        npc_invertible,   // invertible pair obstruction
        not_weakly_balanced,
        unsupported_shape,
    };
    Verdict verdict;
    GraphMode mode = GraphMode::general;      // shape used for the ordering
    SignedGraph normalized;                   // switch-equivalent, no red edges
    std::vector<bool> switching;              // switching used to normalize
    std::optional<SpecialMinOrdering> ordering;
    std::optional<Chain> chain;
    std::optional<InvertiblePairCertificate> invertible;
    std::optional<OddRedClosedWalk> odd_walk;
    std::string reason;                       // unsupported_shape explanation
};

// Normalizes, rejects shapes other than loopless-bipartite or reflexive, and
// wraps the special-ordering outcome with its certificate. All certificates
// are switching-invariant, so they hold in the input graph as given.
inline ClassificationResult classify(const SignedGraph& g) {
    ClassificationResult r{};
    auto norm = normalize_weakly_balanced(g);
    if (std::holds_alternative<OddRedClosedWalk>(norm)) {
        r.verdict = ClassificationResult::Verdict::not_weakly_balanced;
        r.odd_walk = std::get<OddRedClosedWalk>(std::move(norm));
        return r;
    }
    auto& n = std::get<Normalized>(norm);
    r.normalized = std::move(n.graph);
    r.switching = std::move(n.switching);

    if (!r.normalized.has_any_loop()) {
        if (std::holds_alternative<OddCycle>(bipartition_of(r.normalized))) {
            r.verdict = ClassificationResult::Verdict::unsupported_shape;
            r.reason = "non-bipartite irreflexive signed graph";
            return r;
        }
        r.mode = GraphMode::bipartite;
    } else if (r.normalized.all_vertices_looped()) {
        r.mode = GraphMode::reflexive;
    } else {
        r.verdict = ClassificationResult::Verdict::unsupported_shape;
        r.reason = "mixed graph: some but not all vertices carry loops";
        return r;
    }

    auto res = special_min_ordering(r.normalized, r.mode);
    if (std::holds_alternative<SpecialMinOrdering>(res)) {
        r.verdict = ClassificationResult::Verdict::polynomial;
        r.ordering = std::get<SpecialMinOrdering>(std::move(res));
    } else if (std::holds_alternative<Chain>(res)) {
        r.verdict = ClassificationResult::Verdict::npc_chain;
        r.chain = std::get<Chain>(std::move(res));
    } else {
        r.verdict = ClassificationResult::Verdict::npc_invertible;
        r.invertible = std::get<InvertiblePairCertificate>(std::move(res));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Bipartite chain graphs and the three forbidden subgraphs

struct TwoK2 {
    int a = -1, b = -1, c = -1, d = -1; // edges ab, cd; ad, cb non-edges
};

// A bipartite graph is a chain graph iff it has no induced 2K2.
inline std::optional<TwoK2> find_induced_2k2(const SignedGraph& h) {
    auto bp = bipartition_of(h);
    if (std::holds_alternative<OddCycle>(bp)) throw std::invalid_argument("find_induced_2k2: graph not bipartite");
    const auto& side = std::get<Bipartition>(bp).side;
    const auto& es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = 0; j < es.size(); ++j) {
            if (i == j) continue;
            int a = es[i].u, b = es[i].v, c = es[j].u, d = es[j].v;
            if (side[static_cast<std::size_t>(a)] != 0) std::swap(a, b);
            if (side[static_cast<std::size_t>(c)] != 0) std::swap(c, d);
            if (a == c || b == d) continue;
            if (!h.has_edge(a, d) && !h.has_edge(c, b)) return TwoK2{a, b, c, d};
        }
    return std::nullopt;
}

inline bool is_bipartite_chain_graph(const SignedGraph& h) { return !find_induced_2k2(h).has_value(); }

struct ForbiddenOccurrence {
    enum class Kind : std::uint8_t { A, B, C };
    Kind kind;
    std::vector<std::pair<std::string, int>> map; // role label -> vertex
};

// Induced signed copies of the three forbidden graphs:
//   A: 4-cycle a-b-d-c-a with ab, dc unicoloured and bd, ca bicoloured;
//   B: path d-b-a-c with db, ac bicoloured, ba unicoloured, dc a non-edge;
//   C: K_{3,3} minus the edge cd on blacks a,d,e and whites b,c,f with
//      bicoloured ac, af, df and unicoloured ab, bd, be, ce, ef.
// Requires a normalized weakly balanced signed bipartite chain graph.
inline std::optional<ForbiddenOccurrence> forbidden_subgraph_check(const SignedGraph& h) {
    detail::require_normalized(h);
    if (!is_bipartite_chain_graph(h))
        throw std::invalid_argument("forbidden_subgraph_check: underlying graph is not a bipartite chain graph");
    const int n = h.vertex_count();
    auto uni = [&](int p, int q) {
        auto s = h.sign(p, q);
        return s && is_unicoloured(*s);
    };
    auto bic = [&](int p, int q) {
        auto s = h.sign(p, q);
        return s && *s == EdgeSign::bicoloured;
    };

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d)
                for (int c = 0; c < n; ++c) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (uni(a, b) && bic(b, d) && uni(d, c) && bic(c, a))
                        return ForbiddenOccurrence{ForbiddenOccurrence::Kind::A,
                                                   {{"a", a}, {"b", b}, {"d", d}, {"c", c}}};
                }
    for (int d = 0; d < n; ++d)
        for (int b = 0; b < n; ++b)
            for (int a = 0; a < n; ++a)
                for (int c = 0; c < n; ++c) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (bic(d, b) && uni(b, a) && bic(a, c) && !h.has_edge(d, c))
                        return ForbiddenOccurrence{ForbiddenOccurrence::Kind::B,
                                                   {{"d", d}, {"b", b}, {"a", a}, {"c", c}}};
                }
    for (int a = 0; a < n; ++a)
        for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        for (int f = 0; f < n; ++f) {
                            if (a == d || a == e || d == e || b == c || b == f || c == f) continue;
                            if (a == b || a == c || a == f || d == b || d == c || d == f || e == b || e == c ||
                                e == f)
                                continue;
                            if (uni(a, b) && bic(a, c) && bic(a, f) && uni(b, d) && !h.has_edge(d, c) &&
                                bic(d, f) && uni(b, e) && uni(c, e) && uni(e, f))
                                return ForbiddenOccurrence{
                                    ForbiddenOccurrence::Kind::C,
                                    {{"a", a}, {"d", d}, {"e", e}, {"b", b}, {"c", c}, {"f", f}}};
                        }
    return std::nullopt;
}

} // namespace sgh
