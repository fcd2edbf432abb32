#pragma once

// Brute-force reference implementations, used only by tests and acceptance:
// exhaustive ordering search, definitional invertible-pair and chain search,
// exhaustive list-homomorphism search, and small-graph enumeration. These
// share no code with the production algorithms beyond certificate verifiers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgh/classify.hpp"
#include "sgh/solver.hpp"

namespace sgh {

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t factorial_capped(int n, std::uint64_t cap) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= static_cast<std::uint64_t>(i);
        if (f > cap) return cap + 1;
    }
    return f;
}

// Compact tables for checking candidate orderings without allocations.
struct BruteTables {
    int n = 0;
    std::vector<std::pair<int, int>> dir; // directed edge orientations
    std::vector<std::uint64_t> adj, bic, uni;

    BruteTables(const SignedGraph& h, GraphMode mode, const std::vector<signed char>& side) : n(h.vertex_count()) {
        check(n <= 64, "brute tables limited to 64 vertices");
        adj.assign(static_cast<std::size_t>(n), 0);
        bic.assign(static_cast<std::size_t>(n), 0);
        uni.assign(static_cast<std::size_t>(n), 0);
        for (const Edge& e : h.edges()) {
            adj[static_cast<std::size_t>(e.u)] |= std::uint64_t(1) << e.v;
            adj[static_cast<std::size_t>(e.v)] |= std::uint64_t(1) << e.u;
            auto& rows = e.sign == EdgeSign::bicoloured ? bic : uni;
            rows[static_cast<std::size_t>(e.u)] |= std::uint64_t(1) << e.v;
            rows[static_cast<std::size_t>(e.v)] |= std::uint64_t(1) << e.u;
            if (mode == GraphMode::bipartite) {
                dir.emplace_back(side[static_cast<std::size_t>(e.u)] == 0 ? e.u : e.v,
                                 side[static_cast<std::size_t>(e.u)] == 0 ? e.v : e.u);
            } else {
                dir.emplace_back(e.u, e.v);
                if (e.u != e.v) dir.emplace_back(e.v, e.u);
            }
        }
    }

    bool min_order_ok(const std::vector<int>& pos) const {
        for (auto [a, b] : dir)
            for (auto [a2, b2] : dir)
                if (pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(a2)] &&
                    pos[static_cast<std::size_t>(b2)] < pos[static_cast<std::size_t>(b)] &&
                    !(adj[static_cast<std::size_t>(a)] >> b2 & 1))
                    return false;
        return true;
    }

    bool special_ok(const std::vector<int>& pos) const {
        for (int z = 0; z < n; ++z)
            for (std::uint64_t bm = bic[static_cast<std::size_t>(z)]; bm;) {
                int x = std::countr_zero(bm);
                bm &= bm - 1;
                for (std::uint64_t um = uni[static_cast<std::size_t>(z)]; um;) {
                    int y = std::countr_zero(um);
                    um &= um - 1;
                    if (pos[static_cast<std::size_t>(x)] >= pos[static_cast<std::size_t>(y)]) return false;
                }
            }
        return true;
    }
};

} // namespace detail

// ---------------------------------------------------------------------------
// Exhaustive ordering search

// First ordering (lexicographic) that is a min ordering containing d_init.
// Bipartite search enumerates part-A permutations and solves part B through
// the pairwise precede/follow constraints the fixed A order induces; this
// returns exactly the ordering a full lexicographic scan would. Cross-part
// seed pairs are unsatisfiable.
inline std::optional<MinOrdering> brute_min_ordering(const SignedGraph& h, GraphMode mode,
                                                     const PairRelation& d_init, std::uint64_t cap = 10'000'000) {
    const int n = h.vertex_count();
    if (mode == GraphMode::reflexive) {
        if (detail::factorial_capped(n, cap) > cap) throw cap_exceeded("brute_min_ordering: |V|! beyond cap");
        detail::BruteTables t(h, mode, {});
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> pos(static_cast<std::size_t>(n));
        do {
            for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
            bool seeds_ok = true;
            for (auto [x, y] : d_init.pairs)
                if (pos[static_cast<std::size_t>(x)] >= pos[static_cast<std::size_t>(y)]) {
                    seeds_ok = false;
                    break;
                }
            if (seeds_ok && t.min_order_ok(pos)) return MinOrdering{mode, order, {}};
        } while (std::next_permutation(order.begin(), order.end()));
        return std::nullopt;
    }

    auto bp = bipartition_of(h);
    if (std::holds_alternative<OddCycle>(bp)) throw std::invalid_argument("brute_min_ordering: graph not bipartite");
    const auto& side = std::get<Bipartition>(bp).side;
    std::vector<int> av, bv;
    for (int v = 0; v < n; ++v) (side[static_cast<std::size_t>(v)] == 0 ? av : bv).push_back(v);
    const int na = static_cast<int>(av.size()), nb = static_cast<int>(bv.size());
    if (detail::factorial_capped(na, cap) > cap) throw cap_exceeded("brute_min_ordering: |A|! beyond cap");

    std::vector<std::pair<int, int>> seeds_a, seeds_b;
    for (auto [x, y] : d_init.pairs) {
        if (side[static_cast<std::size_t>(x)] != side[static_cast<std::size_t>(y)]) return std::nullopt;
        (side[static_cast<std::size_t>(x)] == 0 ? seeds_a : seeds_b).emplace_back(x, y);
    }

    std::vector<int> b_index(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < nb; ++i) b_index[static_cast<std::size_t>(bv[static_cast<std::size_t>(i)])] = i;
    std::vector<std::vector<int>> nbrs_of_b(static_cast<std::size_t>(nb));
    for (const Edge& e : h.edges()) {
        int b = side[static_cast<std::size_t>(e.u)] == 1 ? e.u : e.v;
        int a = side[static_cast<std::size_t>(e.u)] == 1 ? e.v : e.u;
        nbrs_of_b[static_cast<std::size_t>(b_index[static_cast<std::size_t>(b)])].push_back(a);
    }

    std::vector<int> perm(av), pos_a(static_cast<std::size_t>(n), 0);
    std::vector<signed char> may_precede(static_cast<std::size_t>(nb) * static_cast<std::size_t>(nb));
    do {
        for (int i = 0; i < na; ++i) pos_a[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
        bool ok = true;
        for (auto [x, y] : seeds_a)
            if (pos_a[static_cast<std::size_t>(x)] >= pos_a[static_cast<std::size_t>(y)]) {
                ok = false;
                break;
            }
        if (!ok) continue;

        // may_precede[i][j]: placing bv[i] before bv[j] violates nothing
        std::vector<int> max_pos(static_cast<std::size_t>(nb), -1);
        for (int i = 0; i < nb; ++i)
            for (int a : nbrs_of_b[static_cast<std::size_t>(i)])
                max_pos[static_cast<std::size_t>(i)] =
                    std::max(max_pos[static_cast<std::size_t>(i)], pos_a[static_cast<std::size_t>(a)]);
        for (int i = 0; i < nb && ok; ++i)
            for (int j = 0; j < nb; ++j) {
                if (i == j) continue;
                bool good = true;
                for (int a : nbrs_of_b[static_cast<std::size_t>(j)]) {
                    if (h.has_edge(a, bv[static_cast<std::size_t>(i)])) continue;
                    if (pos_a[static_cast<std::size_t>(a)] < max_pos[static_cast<std::size_t>(i)]) {
                        good = false;
                        break;
                    }
                }
                may_precede[static_cast<std::size_t>(i) * static_cast<std::size_t>(nb) + static_cast<std::size_t>(j)] =
                    good ? 1 : 0;
            }

        std::vector<std::vector<int>> forced(static_cast<std::size_t>(nb));
        std::vector<int> indeg(static_cast<std::size_t>(nb), 0);
        auto force = [&](int i, int j) {
            forced[static_cast<std::size_t>(i)].push_back(j);
            ++indeg[static_cast<std::size_t>(j)];
        };
        for (int i = 0; i < nb && ok; ++i)
            for (int j = i + 1; j < nb; ++j) {
                bool ij = may_precede[static_cast<std::size_t>(i) * static_cast<std::size_t>(nb) + static_cast<std::size_t>(j)];
                bool ji = may_precede[static_cast<std::size_t>(j) * static_cast<std::size_t>(nb) + static_cast<std::size_t>(i)];
                if (!ij && !ji) {
                    ok = false;
                    break;
                }
                if (ij && !ji) force(i, j);
                if (ji && !ij) force(j, i);
            }
        for (auto [x, y] : seeds_b) {
            if (!ok) break;
            int i = b_index[static_cast<std::size_t>(x)], j = b_index[static_cast<std::size_t>(y)];
            if (!may_precede[static_cast<std::size_t>(i) * static_cast<std::size_t>(nb) + static_cast<std::size_t>(j)])
                ok = false;
            else
                force(i, j);
        }
        if (!ok) continue;

        // lexicographically least linear extension
        std::vector<int> order_b;
        std::vector<int> deg(indeg);
        std::vector<bool> placed(static_cast<std::size_t>(nb), false);
        for (int step = 0; step < nb; ++step) {
            int pick = -1;
            for (int i = 0; i < nb; ++i)
                if (!placed[static_cast<std::size_t>(i)] && deg[static_cast<std::size_t>(i)] == 0) {
                    pick = i;
                    break;
                }
            if (pick == -1) break; // cycle among forced constraints
            placed[static_cast<std::size_t>(pick)] = true;
            order_b.push_back(bv[static_cast<std::size_t>(pick)]);
            for (int j : forced[static_cast<std::size_t>(pick)]) --deg[static_cast<std::size_t>(j)];
        }
        if (static_cast<int>(order_b.size()) != nb) continue;

        MinOrdering ord{mode, perm, order_b};
        detail::check(verify_min_ordering(h, mode, ord, &d_init).ok, "brute ordering fails verification");
        return ord;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// Plain double-permutation scan with the special condition; sizes stay tiny.
inline std::optional<MinOrdering> brute_special_min_ordering(const SignedGraph& h, GraphMode mode,
                                                             std::uint64_t cap = 10'000'000) {
    detail::require_normalized(h);
    const int n = h.vertex_count();
    if (mode == GraphMode::reflexive) {
        if (detail::factorial_capped(n, cap) > cap) throw cap_exceeded("brute_special_min_ordering: cap");
        detail::BruteTables t(h, mode, {});
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> pos(static_cast<std::size_t>(n));
        do {
            for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
            if (t.min_order_ok(pos) && t.special_ok(pos)) return MinOrdering{mode, order, {}};
        } while (std::next_permutation(order.begin(), order.end()));
        return std::nullopt;
    }
    auto bp = bipartition_of(h);
    if (std::holds_alternative<OddCycle>(bp))
        throw std::invalid_argument("brute_special_min_ordering: graph not bipartite");
    const auto& side = std::get<Bipartition>(bp).side;
    std::vector<int> av, bv;
    for (int v = 0; v < n; ++v) (side[static_cast<std::size_t>(v)] == 0 ? av : bv).push_back(v);
    std::uint64_t fa = detail::factorial_capped(static_cast<int>(av.size()), cap);
    std::uint64_t fb = detail::factorial_capped(static_cast<int>(bv.size()), cap);
    if (fa > cap || fb > cap || fa > cap / std::max<std::uint64_t>(1, fb))
        throw cap_exceeded("brute_special_min_ordering: |A|!|B|! beyond cap");
    detail::BruteTables t(h, mode, side);
    std::vector<int> pa(av), pos(static_cast<std::size_t>(n));
    do {
        for (std::size_t i = 0; i < pa.size(); ++i) pos[static_cast<std::size_t>(pa[i])] = static_cast<int>(i);
        std::vector<int> pb(bv);
        do {
            for (std::size_t i = 0; i < pb.size(); ++i) pos[static_cast<std::size_t>(pb[i])] = static_cast<int>(i);
            if (t.min_order_ok(pos) && t.special_ok(pos)) return MinOrdering{mode, pa, pb};
        } while (std::next_permutation(pb.begin(), pb.end()));
    } while (std::next_permutation(pa.begin(), pa.end()));
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Definitional invertible-pair search: domination arcs are rebuilt here from
// first principles and checked by plain double reachability.

inline std::optional<std::pair<int, int>> brute_invertible_pair(const SignedGraph& h, GraphMode mode) {
    const int n = h.vertex_count();
    detail::check(n <= 32, "brute_invertible_pair: graph too large");
    std::vector<signed char> side(static_cast<std::size_t>(n), 0);
    if (mode == GraphMode::bipartite) {
        auto bp = bipartition_of(h);
        if (std::holds_alternative<OddCycle>(bp))
            throw std::invalid_argument("brute_invertible_pair: graph not bipartite");
        side = std::get<Bipartition>(bp).side;
    }
    std::vector<std::pair<int, int>> nodes;
    std::vector<int> id(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && side[static_cast<std::size_t>(x)] == side[static_cast<std::size_t>(y)]) {
                id[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] =
                    static_cast<int>(nodes.size());
                nodes.emplace_back(x, y);
            }
    const int m = static_cast<int>(nodes.size());
    std::vector<std::vector<int>> arcs(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto [a, a2] = nodes[static_cast<std::size_t>(i)];
        for (int b = 0; b < n; ++b)
            for (int b2 = 0; b2 < n; ++b2) {
                if (!h.has_edge(a, b) || !h.has_edge(a2, b2) || h.has_edge(a, b2)) continue;
                int j = id[static_cast<std::size_t>(b) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b2)];
                if (j >= 0) arcs[static_cast<std::size_t>(i)].push_back(j);
            }
    }
    auto reaches = [&](int s, int t) {
        std::vector<bool> seen(static_cast<std::size_t>(m), false);
        std::vector<int> queue{s};
        seen[static_cast<std::size_t>(s)] = true;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            if (queue[qi] == t) return true;
            for (int w : arcs[static_cast<std::size_t>(queue[qi])])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    queue.push_back(w);
                }
        }
        return false;
    };
    for (int i = 0; i < m; ++i) {
        auto [x, y] = nodes[static_cast<std::size_t>(i)];
        if (x > y) continue;
        int r = id[static_cast<std::size_t>(y) * static_cast<std::size_t>(n) + static_cast<std::size_t>(x)];
        if (reaches(i, r) && reaches(r, i)) return std::pair(x, y);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Chain search: breadth-first over synchronized walk-pair states.

// Shortest chain by length k, or nullopt within the bound. Both middle
// disjuncts of the definition are explored.
inline std::optional<Chain> brute_chain_search(const SignedGraph& h, int max_len = -1) {
    const int n = h.vertex_count();
    if (max_len < 0) max_len = 2 * n;
    if (n == 0) return std::nullopt;
    auto bic = [&](int a, int b) {
        auto s = h.sign(a, b);
        return s && *s == EdgeSign::bicoloured;
    };
    auto uni = [&](int a, int b) {
        auto s = h.sign(a, b);
        return s && is_unicoloured(*s);
    };

    struct State {
        int u, d;
    };
    std::vector<int> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1); // -> queue index
    std::vector<State> queue;
    std::vector<int> parent, layer, start;
    auto state_at = [&](int u, int d) { return seen[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(d)]; };
    auto push = [&](int u, int d, int par, int lay, int st) {
        if (state_at(u, d) != -1) return;
        seen[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(d)] =
            static_cast<int>(queue.size());
        queue.push_back({u, d});
        parent.push_back(par);
        layer.push_back(lay);
        start.push_back(st);
    };
    for (int u0 = 0; u0 < n; ++u0)
        for (int u1 = 0; u1 < n; ++u1) {
            if (!uni(u0, u1)) continue;
            for (int d1 = 0; d1 < n; ++d1)
                if (bic(u0, d1)) push(u1, d1, -1, 1, u0);
        }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto [up, dp] = queue[qi];
        // close: v with u_{k-1} v bicoloured and d_{k-1} v unicoloured
        for (int v = 0; v < n; ++v) {
            if (!bic(up, v) || !uni(dp, v)) continue;
            Chain c;
            std::vector<int> us, ds;
            int cur = static_cast<int>(qi);
            while (cur != -1) {
                us.push_back(queue[static_cast<std::size_t>(cur)].u);
                ds.push_back(queue[static_cast<std::size_t>(cur)].d);
                cur = parent[static_cast<std::size_t>(cur)];
            }
            us.push_back(start[static_cast<std::size_t>(qi)]);
            ds.push_back(start[static_cast<std::size_t>(qi)]);
            std::reverse(us.begin(), us.end());
            std::reverse(ds.begin(), ds.end());
            us.push_back(v);
            ds.push_back(v);
            c.walk_u = std::move(us);
            c.walk_d = std::move(ds);
            detail::check(verify_chain(h, c).ok, "brute chain fails verification");
            return c;
        }
        if (layer[qi] + 1 >= max_len) continue;
        for (int u2 = 0; u2 < n; ++u2) {
            if (!h.has_edge(up, u2)) continue;
            for (int d2 = 0; d2 < n; ++d2) {
                if (!h.has_edge(dp, d2)) continue;
                bool plain = !h.has_edge(dp, u2);
                bool bi_form = bic(up, u2) && bic(dp, d2) && !bic(dp, u2);
                if (plain || bi_form) push(u2, d2, static_cast<int>(qi), layer[qi] + 1, start[qi]);
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exhaustive list homomorphism

// First list-respecting map (lexicographic) accepted by the homomorphism
// verifier; edge-prefix pruning only skips maps the verifier would reject.
inline std::optional<HomomorphismResult> brute_list_hom(const ListsInstance& inst, std::uint64_t cap = 50'000'000) {
    const SignedGraph& g = inst.g;
    const SignedGraph& h = inst.templ;
    std::uint64_t space = 1;
    for (const auto& l : inst.lists) {
        space *= std::max<std::uint64_t>(1, l.size());
        if (space > cap) throw cap_exceeded("brute_list_hom: search space beyond cap");
    }
    const int n = g.vertex_count();
    std::vector<int> f(static_cast<std::size_t>(n), -1);
    std::function<std::optional<HomomorphismResult>(int)> rec = [&](int v) -> std::optional<HomomorphismResult> {
        if (v == n) {
            auto chk = verify_homomorphism(g, h, f, &inst.lists);
            if (!chk.ok) return std::nullopt;
            std::vector<std::tuple<int, int, bool>> marked;
            for (const Edge& e : g.edges()) {
                if (!is_unicoloured(e.sign)) continue;
                auto hs = h.sign(f[static_cast<std::size_t>(e.u)], f[static_cast<std::size_t>(e.v)]);
                if (hs && *hs == EdgeSign::blue) marked.emplace_back(e.u, e.v, e.sign == EdgeSign::red);
            }
            auto colours = detail::parity_two_colour(n, marked);
            detail::check(std::holds_alternative<std::vector<signed char>>(colours),
                          "verified map has unbalanced blue-image subgraph");
            const auto& col = std::get<std::vector<signed char>>(colours);
            std::vector<bool> sw(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) sw[static_cast<std::size_t>(i)] = col[static_cast<std::size_t>(i)] == 1;
            return HomomorphismResult{f, std::move(sw)};
        }
        for (int x : inst.lists[static_cast<std::size_t>(v)]) {
            bool ok = true;
            for (auto [w, s] : g.neighbours(v)) {
                int fw = w == v ? x : w < v ? f[static_cast<std::size_t>(w)] : -1;
                if (fw < 0) continue;
                auto hs = h.sign(x, fw);
                if (!hs || (s == EdgeSign::bicoloured && *hs != EdgeSign::bicoloured)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            f[static_cast<std::size_t>(v)] = x;
            if (auto r = rec(v + 1)) return r;
            f[static_cast<std::size_t>(v)] = -1;
        }
        return std::nullopt;
    };
    return rec(0);
}

// ---------------------------------------------------------------------------
// Enumeration

struct EnumerationSpec {
    GraphMode mode = GraphMode::bipartite;
    int part_a = 0, part_b = 0; // bipartite part sizes
    int n = 0;                  // reflexive vertex count
    bool allow_red = false;     // add purely red to the sign alphabet
    bool weakly_balanced_only = false;
    bool chain_graph_only = false;
    bool connected_only = false;
    std::uint64_t cap = 200'000'000;
};

// All labeled signed graphs matching the spec, in odometer order over edge
// slots. The callback returns false to stop early.
inline void enumerate_signed_graphs(const EnumerationSpec& spec,
                                    const std::function<bool(const SignedGraph&)>& fn) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> slots;   // vertex index pairs
    std::vector<int> states_per_slot;

    const std::vector<EdgeSign> pair_signs = spec.allow_red
                                                 ? std::vector<EdgeSign>{EdgeSign::blue, EdgeSign::red, EdgeSign::bicoloured}
                                                 : std::vector<EdgeSign>{EdgeSign::blue, EdgeSign::bicoloured};
    if (spec.mode == GraphMode::bipartite) {
        detail::check(spec.part_a >= 0 && spec.part_a <= 9 && spec.part_b >= 0 && spec.part_b <= 9,
                      "enumeration parts limited to 9");
        for (int i = 1; i <= spec.part_a; ++i) names.push_back("a" + std::to_string(i));
        for (int i = 1; i <= spec.part_b; ++i) names.push_back("b" + std::to_string(i));
        for (int i = 0; i < spec.part_a; ++i)
            for (int j = 0; j < spec.part_b; ++j) {
                slots.emplace_back(i, spec.part_a + j);
                states_per_slot.push_back(1 + static_cast<int>(pair_signs.size()));
            }
    } else if (spec.mode == GraphMode::reflexive) {
        detail::check(spec.n >= 0 && spec.n <= 9, "enumeration size limited to 9");
        for (int i = 1; i <= spec.n; ++i) names.push_back("v" + std::to_string(i));
        for (int i = 0; i < spec.n; ++i) {
            slots.emplace_back(i, i); // loop slot: sign only, always present
            states_per_slot.push_back(static_cast<int>(pair_signs.size()));
        }
        for (int i = 0; i < spec.n; ++i)
            for (int j = i + 1; j < spec.n; ++j) {
                slots.emplace_back(i, j);
                states_per_slot.push_back(1 + static_cast<int>(pair_signs.size()));
            }
    } else {
        throw std::invalid_argument("enumerate_signed_graphs: mode must be bipartite or reflexive");
    }

    std::uint64_t total = 1;
    for (int s : states_per_slot) {
        total *= static_cast<std::uint64_t>(s);
        if (total > spec.cap) throw cap_exceeded("enumerate_signed_graphs: state space beyond cap");
    }

    std::vector<int> digits(slots.size(), 0);
    while (true) {
        std::vector<std::tuple<std::string, std::string, EdgeSign>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            int d = digits[i];
            bool is_loop = slots[i].first == slots[i].second;
            EdgeSign sign;
            if (is_loop) {
                sign = pair_signs[static_cast<std::size_t>(d)];
            } else {
                if (d == 0) continue;
                sign = pair_signs[static_cast<std::size_t>(d - 1)];
            }
            edges.emplace_back(names[static_cast<std::size_t>(slots[i].first)],
                               names[static_cast<std::size_t>(slots[i].second)], sign);
        }
        SignedGraph g = SignedGraph::make(names, edges,
                                          spec.mode == GraphMode::reflexive ? GraphMode::reflexive : GraphMode::general);
        bool keep = true;
        if (spec.weakly_balanced_only && std::holds_alternative<OddRedClosedWalk>(normalize_weakly_balanced(g)))
            keep = false;
        if (keep && spec.connected_only) {
            int cc = 0;
            detail::underlying_components(g, cc);
            keep = cc <= 1;
        }
        if (keep && spec.chain_graph_only) keep = is_bipartite_chain_graph(g);
        if (keep && !fn(g)) return;

        std::size_t i = 0;
        for (; i < digits.size(); ++i) {
            if (++digits[i] < states_per_slot[i]) break;
            digits[i] = 0;
        }
        if (i == digits.size()) break;
    }
}

} // namespace sgh
