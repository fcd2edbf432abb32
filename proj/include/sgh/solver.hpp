#pragma once

// Direct polynomial list-homomorphism solver for templates with a special min
// ordering: arc consistency, minimum assignment under the ordering, and the
// closed-walk repair loop.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "sgh/special.hpp"

namespace sgh {

struct ListsInstance {
    SignedGraph g;
    SignedGraph templ;                   // normalized template
    std::vector<std::vector<int>> lists; // per g vertex, sorted template ids
};

// Binds token lists to graph indices; a missing list means the full template
// vertex set.
inline ListsInstance bind_instance(SignedGraph g, SignedGraph templ,
                                   const std::vector<std::pair<std::string, std::vector<std::string>>>& token_lists) {
    ListsInstance inst;
    std::vector<int> full(static_cast<std::size_t>(templ.vertex_count()));
    for (int i = 0; i < templ.vertex_count(); ++i) full[static_cast<std::size_t>(i)] = i;
    inst.lists.assign(static_cast<std::size_t>(g.vertex_count()), full);
    for (const auto& [v, entries] : token_lists) {
        int vi = g.index_of(v);
        std::vector<int> l;
        for (const auto& e : entries) l.push_back(templ.index_of(e));
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        inst.lists[static_cast<std::size_t>(vi)] = std::move(l);
    }
    inst.g = std::move(g);
    inst.templ = std::move(templ);
    return inst;
}

struct HomomorphismResult {
    std::vector<int> assignment; // g vertex -> template vertex
    std::vector<bool> switching; // switching of g that makes the map sign-preserving
};

struct SolveOutcome {
    std::optional<HomomorphismResult> hom;
    int max_phases = 0; // largest phase count over all repair-loop runs
};

// ---------------------------------------------------------------------------
// Template tables: adjacency and bicoloured adjacency as bitmask rows.

namespace detail {

struct TemplateTables {
    int n = 0;
    std::vector<std::uint64_t> adj, bic; // row per vertex

    explicit TemplateTables(const SignedGraph& h) : n(h.vertex_count()) {
        check(n <= 64, "template too large for bitmask tables");
        adj.assign(static_cast<std::size_t>(n), 0);
        bic.assign(static_cast<std::size_t>(n), 0);
        for (const Edge& e : h.edges()) {
            adj[static_cast<std::size_t>(e.u)] |= std::uint64_t(1) << e.v;
            adj[static_cast<std::size_t>(e.v)] |= std::uint64_t(1) << e.u;
            if (e.sign == EdgeSign::bicoloured) {
                bic[static_cast<std::size_t>(e.u)] |= std::uint64_t(1) << e.v;
                bic[static_cast<std::size_t>(e.v)] |= std::uint64_t(1) << e.u;
            }
        }
    }
    const std::vector<std::uint64_t>& rows(bool bicoloured_only) const { return bicoloured_only ? bic : adj; }
};

inline std::uint64_t to_mask(const std::vector<int>& list) {
    std::uint64_t m = 0;
    for (int x : list) m |= std::uint64_t(1) << x;
    return m;
}

inline std::vector<int> from_mask(std::uint64_t m) {
    std::vector<int> out;
    for (int x = 0; m; ++x, m >>= 1)
        if (m & 1) out.push_back(x);
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Arc consistency

// Reduces the lists of the scoped vertices to the unique maximal fixpoint:
// x stays in L(v) only while every edge vw offers some y in L(w) compatible
// with the edge's allowed template edges (bicoloured instance edges only
// match bicoloured template edges). Returns the first emptied vertex.
inline std::optional<int> arc_consistency(const SignedGraph& g, const detail::TemplateTables& tables,
                                          std::vector<std::uint64_t>& lists, const std::vector<int>& scope) {
    std::vector<bool> in_scope(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : scope) in_scope[static_cast<std::size_t>(v)] = true;

    // loops act as unary constraints
    for (int v : scope) {
        if (auto s = g.sign(v, v)) {
            const auto& rows = tables.rows(*s == EdgeSign::bicoloured);
            std::uint64_t keep = 0;
            for (std::uint64_t m = lists[static_cast<std::size_t>(v)]; m;) {
                int x = std::countr_zero(m);
                m &= m - 1;
                if (rows[static_cast<std::size_t>(x)] >> x & 1) keep |= std::uint64_t(1) << x;
            }
            lists[static_cast<std::size_t>(v)] = keep;
        }
        if (!lists[static_cast<std::size_t>(v)]) return v;
    }

    std::vector<bool> queued(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<int> queue;
    for (int v : scope) {
        queue.push_back(v);
        queued[static_cast<std::size_t>(v)] = true;
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        queued[static_cast<std::size_t>(v)] = false;
        for (auto [w, s] : g.neighbours(v)) {
            if (w == v || !in_scope[static_cast<std::size_t>(w)]) continue;
            const auto& rows = tables.rows(s == EdgeSign::bicoloured);
            std::uint64_t keep = 0;
            std::uint64_t supp = lists[static_cast<std::size_t>(v)];
            for (std::uint64_t m = lists[static_cast<std::size_t>(w)]; m;) {
                int x = std::countr_zero(m);
                m &= m - 1;
                if (rows[static_cast<std::size_t>(x)] & supp) keep |= std::uint64_t(1) << x;
            }
            if (keep != lists[static_cast<std::size_t>(w)]) {
                lists[static_cast<std::size_t>(w)] = keep;
                if (!keep) return w;
                if (!queued[static_cast<std::size_t>(w)]) {
                    queued[static_cast<std::size_t>(w)] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    return std::nullopt;
}

// Vector-list convenience used by tests and the public surface.
inline std::optional<int> arc_consistency(const ListsInstance& inst, std::vector<std::vector<int>>& lists) {
    detail::TemplateTables tables(inst.templ);
    std::vector<std::uint64_t> masks(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i) masks[i] = detail::to_mask(lists[i]);
    std::vector<int> scope(static_cast<std::size_t>(inst.g.vertex_count()));
    for (int v = 0; v < inst.g.vertex_count(); ++v) scope[static_cast<std::size_t>(v)] = v;
    auto emptied = arc_consistency(inst.g, tables, masks, scope);
    for (std::size_t i = 0; i < lists.size(); ++i) lists[i] = detail::from_mask(masks[i]);
    return emptied;
}

// ---------------------------------------------------------------------------
// Minimum assignment and violation detection

// Positions of template vertices in the ordering (per part in bipartite mode).
inline std::vector<int> ordering_positions(const MinOrdering& ord, int n) {
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < ord.order_a.size(); ++i) pos[static_cast<std::size_t>(ord.order_a[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < ord.order_b.size(); ++i) pos[static_cast<std::size_t>(ord.order_b[i])] = static_cast<int>(i);
    return pos;
}

// f(v) = min L(v) in the ordering; lists must be nonempty and arc-consistent.
inline std::vector<int> min_assignment(const std::vector<std::vector<int>>& lists, const MinOrdering& ord, int templ_n) {
    std::vector<int> pos = ordering_positions(ord, templ_n);
    std::vector<int> f(lists.size(), -1);
    for (std::size_t v = 0; v < lists.size(); ++v) {
        detail::check(!lists[v].empty(), "min_assignment: empty list");
        int best = lists[v].front();
        for (int x : lists[v])
            if (pos[static_cast<std::size_t>(x)] < pos[static_cast<std::size_t>(best)]) best = x;
        f[v] = best;
    }
    return f;
}

struct Violation {
    OddRedClosedWalk walk;         // odd-red closed walk R in the instance
    std::vector<int> image;        // template vertices M on its image
};

// F := unicoloured instance edges whose images are blue template edges; a
// violation is an odd-red cycle of F. None means f is a signed homomorphism.
inline std::optional<Violation> find_violation(const SignedGraph& g, const SignedGraph& h, const std::vector<int>& f) {
    std::vector<std::tuple<int, int, EdgeSign>> parity_edges;
    for (const Edge& e : g.edges()) {
        if (!is_unicoloured(e.sign)) continue;
        auto hs = h.sign(f[static_cast<std::size_t>(e.u)], f[static_cast<std::size_t>(e.v)]);
        detail::check(hs.has_value(), "find_violation: map does not preserve edges");
        if (*hs == EdgeSign::blue) parity_edges.emplace_back(e.u, e.v, e.sign);
    }
    auto w = find_unbalanced_cycle(g.vertex_count(), parity_edges);
    if (!w) return std::nullopt;
    Violation viol;
    viol.walk = std::move(*w);
    for (int v : viol.walk.walk) viol.image.push_back(f[static_cast<std::size_t>(v)]);
    std::sort(viol.image.begin(), viol.image.end());
    viol.image.erase(std::unique(viol.image.begin(), viol.image.end()), viol.image.end());
    return viol;
}

// ---------------------------------------------------------------------------
// The solver

namespace detail {

// One repair-loop run over a vertex scope with pre-restricted lists. Fills
// assignment/switching for scoped vertices on success.
inline bool solve_run(const SignedGraph& g, const SignedGraph& h, const TemplateTables& tables,
                      const std::vector<int>& pos, std::vector<std::uint64_t> lists, const std::vector<int>& scope,
                      std::vector<int>& assignment, std::vector<bool>& switching, int& phases) {
    phases = 0;
    const int bound = std::max<int>(1, static_cast<int>(scope.size()) * h.vertex_count());
    std::vector<int> f(static_cast<std::size_t>(g.vertex_count()), -1);
    while (true) {
        ++phases;
        check(phases <= bound, "repair loop exceeded its phase bound");
        if (arc_consistency(g, tables, lists, scope)) return false;

        for (int v : scope) {
            int best = -1;
            for (std::uint64_t m = lists[static_cast<std::size_t>(v)]; m;) {
                int x = std::countr_zero(m);
                m &= m - 1;
                if (best == -1 || pos[static_cast<std::size_t>(x)] < pos[static_cast<std::size_t>(best)]) best = x;
            }
            // lists only shrink, so the minimum never moves down the order
            check(f[static_cast<std::size_t>(v)] == -1 ||
                      pos[static_cast<std::size_t>(best)] >= pos[static_cast<std::size_t>(f[static_cast<std::size_t>(v)])],
                  "minimum assignment decreased between phases");
            f[static_cast<std::size_t>(v)] = best;
        }

        // violation detection restricted to scoped edges
        std::vector<std::tuple<int, int, EdgeSign>> parity_edges;
        for (const Edge& e : g.edges()) {
            if (f[static_cast<std::size_t>(e.u)] < 0 || f[static_cast<std::size_t>(e.v)] < 0) continue;
            if (!is_unicoloured(e.sign)) continue;
            auto hs = h.sign(f[static_cast<std::size_t>(e.u)], f[static_cast<std::size_t>(e.v)]);
            check(hs.has_value(), "min assignment does not preserve edges");
            if (*hs == EdgeSign::blue) parity_edges.emplace_back(e.u, e.v, e.sign);
        }
        auto walk = find_unbalanced_cycle(g.vertex_count(), parity_edges);
        if (!walk) {
            std::vector<std::tuple<int, int, bool>> marked;
            for (const auto& [u, v, s] : parity_edges) marked.emplace_back(u, v, s == EdgeSign::red);
            auto colours = parity_two_colour(g.vertex_count(), marked);
            check(std::holds_alternative<std::vector<signed char>>(colours), "balanced subgraph failed to 2-colour");
            const auto& col = std::get<std::vector<signed char>>(colours);
            for (int v : scope) {
                assignment[static_cast<std::size_t>(v)] = f[static_cast<std::size_t>(v)];
                switching[static_cast<std::size_t>(v)] = col[static_cast<std::size_t>(v)] == 1;
            }
            return true;
        }
        // removal rule: image vertices leave the lists of all walk vertices
        std::uint64_t image = 0;
        for (int v : walk->walk) image |= std::uint64_t(1) << f[static_cast<std::size_t>(v)];
        bool removed = false;
        for (int v : walk->walk) {
            std::uint64_t before = lists[static_cast<std::size_t>(v)];
            lists[static_cast<std::size_t>(v)] = before & ~image;
            removed = removed || lists[static_cast<std::size_t>(v)] != before;
        }
        check(removed, "repair phase removed nothing");
    }
}

} // namespace detail

// Decides the instance for a polynomial template. In bipartite mode each
// instance component is tried with both side attachments; the reflexive mode
// runs once over the whole instance.
inline SolveOutcome solve(const ListsInstance& inst, const SpecialMinOrdering& sord) {
    const SignedGraph& g = inst.g;
    const SignedGraph& h = inst.templ;
    const MinOrdering& ord = sord.ordering;
    detail::require_normalized(h);
    {
        auto chk = verify_special_min_ordering(h, ord);
        if (!chk.ok) throw std::invalid_argument("solve: ordering is not a special min ordering of the template");
    }

    SolveOutcome out;
    detail::TemplateTables tables(h);
    std::vector<int> pos = ordering_positions(ord, h.vertex_count());
    std::vector<std::uint64_t> base(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) base[static_cast<std::size_t>(v)] = detail::to_mask(inst.lists[static_cast<std::size_t>(v)]);

    std::vector<int> assignment(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<bool> switching(static_cast<std::size_t>(g.vertex_count()), false);

    if (ord.mode == GraphMode::bipartite) {
        auto bp = bipartition_of(g);
        if (std::holds_alternative<OddCycle>(bp)) return out; // no homomorphism at all
        const auto& side = std::get<Bipartition>(bp).side;
        std::uint64_t part_mask[2] = {detail::to_mask(ord.order_a), detail::to_mask(ord.order_b)};

        int comp_count = 0;
        std::vector<int> comp = detail::underlying_components(g, comp_count);
        for (int c = 0; c < comp_count; ++c) {
            std::vector<int> scope;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (comp[static_cast<std::size_t>(v)] == c) scope.push_back(v);
            bool done = false;
            for (int attach = 0; attach < 2 && !done; ++attach) {
                std::vector<std::uint64_t> lists(base);
                for (int v : scope)
                    lists[static_cast<std::size_t>(v)] &=
                        part_mask[(side[static_cast<std::size_t>(v)] + attach) % 2];
                int phases = 0;
                done = detail::solve_run(g, h, tables, pos, std::move(lists), scope, assignment, switching, phases);
                out.max_phases = std::max(out.max_phases, phases);
            }
            if (!done) return out;
        }
    } else {
        std::vector<int> scope(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) scope[static_cast<std::size_t>(v)] = v;
        int phases = 0;
        if (!detail::solve_run(g, h, tables, pos, base, scope, assignment, switching, phases)) {
            out.max_phases = phases;
            return out;
        }
        out.max_phases = phases;
    }

    HomomorphismResult res{std::move(assignment), std::move(switching)};
    detail::check(verify_homomorphism(g, h, res.assignment, &inst.lists).ok,
                  "solver produced a map that fails verification");
    out.hom = std::move(res);
    return out;
}

} // namespace sgh
