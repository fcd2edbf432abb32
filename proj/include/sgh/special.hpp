#pragma once

// Special min orderings of weakly balanced signed graphs: the seed set D0,
// its domination closure, and the constructive route from a closure circuit
// through a flower to a chain certificate.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sgh/ordering.hpp"
#include "sgh/pair_digraph.hpp"
#include "sgh/signed_graph.hpp"

namespace sgh {

// Two equal-length walks from a common centre x: lower x,l1,..,lk starting on
// a bicoloured edge, upper x,u1,..,uk starting on a unicoloured edge, with
// li u_{i+1} a non-edge throughout.
struct Petal {
    int center = -1;
    std::vector<std::pair<int, int>> rungs; // (l_i, u_i), i = 1..k

    int length() const { return static_cast<int>(rungs.size()); }
    int lower_terminal() const { return rungs.back().first; }
    int upper_terminal() const { return rungs.back().second; }
};

// Cyclic petal sequence: upper terminal of P_i equals lower terminal of P_{i+1}.
struct Flower {
    std::vector<Petal> petals;
};

struct Chain {
    std::vector<int> walk_u, walk_d; // equal length, common endpoints
};

struct SpecialMinOrdering {
    MinOrdering ordering;
};

// ---------------------------------------------------------------------------
// Petal verification and rewrites

inline bool verify_petal(const SignedGraph& h, const Petal& p) {
    if (p.length() < 1) return false;
    auto s0 = h.sign(p.center, p.rungs.front().first);
    auto t0 = h.sign(p.center, p.rungs.front().second);
    if (!s0 || *s0 != EdgeSign::bicoloured) return false;
    if (!t0 || !is_unicoloured(*t0)) return false;
    for (int i = 1; i < p.length(); ++i) {
        if (!h.has_edge(p.rungs[static_cast<std::size_t>(i - 1)].first, p.rungs[static_cast<std::size_t>(i)].first))
            return false;
        if (!h.has_edge(p.rungs[static_cast<std::size_t>(i - 1)].second, p.rungs[static_cast<std::size_t>(i)].second))
            return false;
        if (h.has_edge(p.rungs[static_cast<std::size_t>(i - 1)].first, p.rungs[static_cast<std::size_t>(i)].second))
            return false;
    }
    return true;
}

inline bool verify_flower(const SignedGraph& h, const Flower& f) {
    const int n = static_cast<int>(f.petals.size());
    if (n < 2) return false;
    for (const Petal& p : f.petals)
        if (!verify_petal(h, p)) return false;
    for (int i = 0; i < n; ++i)
        if (f.petals[static_cast<std::size_t>(i)].upper_terminal() !=
            f.petals[static_cast<std::size_t>((i + 1) % n)].lower_terminal())
            return false;
    return true;
}

// Appends rung (w, v): needs u_k v an edge, l_k v a non-edge, w a neighbour
// of l_k.
inline Petal petal_extend(const SignedGraph& h, Petal p, int w, int v) {
    detail::check(h.has_edge(p.upper_terminal(), v), "petal_extend: upper terminal not adjacent to v");
    detail::check(!h.has_edge(p.lower_terminal(), v), "petal_extend: lower terminal adjacent to v");
    detail::check(h.has_edge(p.lower_terminal(), w), "petal_extend: w not a neighbour of the lower terminal");
    p.rungs.emplace_back(w, v);
    return p;
}

// Replaces the last rung's lower vertex by w, a neighbour of l_{k-1}; for
// length-1 petals the centre edge xw must be bicoloured.
inline Petal petal_modify(const SignedGraph& h, Petal p, int w) {
    if (p.length() >= 2) {
        detail::check(h.has_edge(p.rungs[static_cast<std::size_t>(p.length() - 2)].first, w),
                      "petal_modify: w not a neighbour of l_{k-1}");
    } else {
        auto s = h.sign(p.center, w);
        detail::check(s && *s == EdgeSign::bicoloured, "petal_modify: xw not bicoloured on a length-1 petal");
    }
    p.rungs.back().first = w;
    return p;
}

// ---------------------------------------------------------------------------
// D0 and its closure

namespace detail {

struct D0Info {
    std::vector<int> nodes;   // pd node ids, ascending
    std::vector<int> witness; // witnessing vertex z per node
};

// All pairs (x,y) with a common neighbour z joined to x by a bicoloured and
// to y by a blue edge. First witness in (z, x, y) scan order is kept.
inline D0Info build_d0_info(const SignedGraph& h, const PairDigraph& pd) {
    std::vector<int> witness(static_cast<std::size_t>(pd.node_count()), -1);
    for (int z = 0; z < h.vertex_count(); ++z)
        for (auto [x, sx] : h.neighbours(z)) {
            if (sx != EdgeSign::bicoloured) continue;
            for (auto [y, sy] : h.neighbours(z)) {
                if (sy != EdgeSign::blue || x == y) continue;
                int id = pd.id(x, y);
                if (id >= 0 && witness[static_cast<std::size_t>(id)] == -1)
                    witness[static_cast<std::size_t>(id)] = z;
            }
        }
    D0Info d0;
    for (int i = 0; i < pd.node_count(); ++i)
        if (witness[static_cast<std::size_t>(i)] != -1) {
            d0.nodes.push_back(i);
            d0.witness.push_back(witness[static_cast<std::size_t>(i)]);
        }
    return d0;
}

inline void require_normalized(const SignedGraph& h) {
    for (const Edge& e : h.edges())
        if (e.sign == EdgeSign::red)
            throw std::invalid_argument("graph is not normalized (purely red edge present)");
}

inline GraphMode require_ordering_mode(GraphMode mode) {
    if (mode != GraphMode::bipartite && mode != GraphMode::reflexive)
        throw std::invalid_argument("unsupported mode (need bipartite or reflexive)");
    return mode;
}

} // namespace detail

// The seed relation D0, possibly containing both orientations of a pair.
inline PairRelation build_d0(const SignedGraph& h, GraphMode mode) {
    detail::require_normalized(h);
    PairDigraph pd = build_pair_digraph(h, detail::require_ordering_mode(mode));
    auto d0 = detail::build_d0_info(h, pd);
    PairRelation rel;
    rel.mode = mode;
    for (int id : d0.nodes) rel.pairs.push_back(pd.nodes[static_cast<std::size_t>(id)]);
    rel.canonicalize();
    return rel;
}

// ---------------------------------------------------------------------------
// Circuit -> flower -> chain

// Rebuilds, for each circuit pair, the petal recorded by the closure BFS: the
// D0 seed supplies the first rung and its witness the centre, and every
// domination arc along the parent chain appends one rung.
inline Flower circuit_to_flower(const SignedGraph& h, GraphMode mode, const Circuit& circuit) {
    detail::require_normalized(h);
    PairDigraph pd = build_pair_digraph(h, detail::require_ordering_mode(mode));
    auto d0 = detail::build_d0_info(h, pd);
    auto closure = detail::close_raw(pd, d0.nodes);

    Flower flower;
    const int len = static_cast<int>(circuit.cycle.size());
    for (int i = 0; i < len; ++i) {
        int id = pd.id(circuit.cycle[static_cast<std::size_t>(i)], circuit.cycle[static_cast<std::size_t>((i + 1) % len)]);
        if (id < 0 || !closure.in[static_cast<std::size_t>(id)])
            throw std::invalid_argument("circuit_to_flower: circuit pair outside closure(D0)");
        std::vector<int> chain_ids;
        for (int v = id; v != -1; v = closure.parent[static_cast<std::size_t>(v)]) chain_ids.push_back(v);
        std::reverse(chain_ids.begin(), chain_ids.end());
        Petal p;
        int seed = chain_ids.front();
        auto seed_pos = std::lower_bound(d0.nodes.begin(), d0.nodes.end(), seed);
        detail::check(seed_pos != d0.nodes.end() && *seed_pos == seed, "closure root is not a D0 pair");
        p.center = d0.witness[static_cast<std::size_t>(seed_pos - d0.nodes.begin())];
        for (int v : chain_ids) p.rungs.push_back(pd.nodes[static_cast<std::size_t>(v)]);
        detail::check(verify_petal(h, p), "reconstructed petal is invalid");
        flower.petals.push_back(std::move(p));
    }
    detail::check(verify_flower(h, flower), "reconstructed flower is invalid");
    return flower;
}

namespace detail {

// Base case: a two-petal flower glued into a chain from centre to centre.
inline Chain glue_two_petals(const SignedGraph& h, const Petal& p, const Petal& q) {
    check(p.upper_terminal() == q.lower_terminal() && q.upper_terminal() == p.lower_terminal(),
          "glue_two_petals: terminals do not match");
    (void)h;
    Chain c;
    c.walk_u.push_back(p.center);
    for (const auto& r : p.rungs) c.walk_u.push_back(r.second);
    for (int i = q.length() - 2; i >= 0; --i) c.walk_u.push_back(q.rungs[static_cast<std::size_t>(i)].first);
    c.walk_u.push_back(q.center);
    c.walk_d.push_back(p.center);
    for (const auto& r : p.rungs) c.walk_d.push_back(r.first);
    for (int i = q.length() - 2; i >= 0; --i) c.walk_d.push_back(q.rungs[static_cast<std::size_t>(i)].second);
    c.walk_d.push_back(q.center);
    return c;
}

} // namespace detail

struct ChainCheck {
    bool ok = true;
    std::string clause; // first violated condition
};

// Checks every clause of the chain definition literally. Both disjuncts of
// the middle condition are accepted.
inline ChainCheck verify_chain(const SignedGraph& h, const Chain& c) {
    auto fail = [](std::string s) { return ChainCheck{false, std::move(s)}; };
    const auto& U = c.walk_u;
    const auto& D = c.walk_d;
    if (U.size() != D.size()) return fail("walks have different lengths");
    if (U.size() < 3) return fail("walk length below two");
    if (U.front() != D.front() || U.back() != D.back()) return fail("walk endpoints differ");
    const int k = static_cast<int>(U.size()) - 1;
    for (int v : U)
        if (v < 0 || v >= h.vertex_count()) return fail("vertex out of range");
    for (int v : D)
        if (v < 0 || v >= h.vertex_count()) return fail("vertex out of range");

    auto uni = [&](int a, int b) {
        auto s = h.sign(a, b);
        return s && is_unicoloured(*s);
    };
    auto bic = [&](int a, int b) {
        auto s = h.sign(a, b);
        return s && *s == EdgeSign::bicoloured;
    };
    if (!uni(U[0], U[1])) return fail("u u1 not a unicoloured edge");
    if (!bic(D[0], D[1])) return fail("u d1 not a bicoloured edge");
    if (!uni(D[static_cast<std::size_t>(k - 1)], D[static_cast<std::size_t>(k)]))
        return fail("d_{k-1} v not a unicoloured edge");
    if (!bic(U[static_cast<std::size_t>(k - 1)], U[static_cast<std::size_t>(k)]))
        return fail("u_{k-1} v not a bicoloured edge");
    for (int i = 1; i <= k - 2; ++i) {
        int ui = U[static_cast<std::size_t>(i)], ui1 = U[static_cast<std::size_t>(i + 1)];
        int di = D[static_cast<std::size_t>(i)], di1 = D[static_cast<std::size_t>(i + 1)];
        bool plain = h.has_edge(ui, ui1) && h.has_edge(di, di1) && !h.has_edge(di, ui1);
        bool both_bi = bic(ui, ui1) && bic(di, di1) && !bic(di, ui1);
        if (!plain && !both_bi) return fail("middle condition fails at index " + std::to_string(i));
    }
    return ChainCheck{};
}

// Constructive flower-to-chain induction on the petal count. Reduces the minimal
// petal to length one through simultaneous shrink/extend rounds, then
// resolves the length-one configuration by one of its edge-case branches.
// Every early exit produces a flower with one petal fewer.
inline Chain flower_to_chain(const SignedGraph& h, const Flower& flower) {
    detail::check(verify_flower(h, flower), "flower_to_chain: invalid flower");
    std::vector<Petal> q = flower.petals;

    while (true) {
        const int n = static_cast<int>(q.size());
        detail::check(n >= 2, "flower_to_chain: fewer than two petals");
        if (n == 2) {
            Chain c = detail::glue_two_petals(h, q[0], q[1]);
            detail::check(verify_chain(h, c).ok, "glued chain fails verification");
            return c;
        }

        // rotate the minimal petal (lex-least terminal among minima) to slot 1
        int best = 0;
        auto petal_key = [&](int j) {
            return std::tuple(q[static_cast<std::size_t>(j)].length(),
                              q[static_cast<std::size_t>(j)].lower_terminal(),
                              q[static_cast<std::size_t>(j)].upper_terminal());
        };
        for (int j = 1; j < n; ++j)
            if (petal_key(j) < petal_key(best)) best = j;
        std::rotate(q.begin(), q.begin() + ((best - 1 + n) % n), q.end());

        auto lower = [&](int j) { return q[static_cast<std::size_t>(j)].lower_terminal(); };
        auto upper = [&](int j) { return q[static_cast<std::size_t>(j)].upper_terminal(); };
        auto second_lower = [&](int j) {
            const Petal& p = q[static_cast<std::size_t>(j)];
            return p.length() >= 2 ? p.rungs[static_cast<std::size_t>(p.length() - 2)].first : p.center;
        };
        auto second_upper = [&](int j) {
            const Petal& p = q[static_cast<std::size_t>(j)];
            detail::check(p.length() >= 2, "shrinking a length-one petal");
            return p.rungs[static_cast<std::size_t>(p.length() - 2)].second;
        };

        bool reduced_n = false;
        while (q[1].length() >= 2 && !reduced_n) {
            // one round: shrink even petals (1-based), extend odd ones
            const int tt = second_lower(0);
            std::vector<std::pair<int, int>> ext(static_cast<std::size_t>(n), {-1, -1});
            for (int p = 0; p < n && !reduced_n; p += 2) {
                int v, w;
                if (p == n - 1) {
                    // n odd; the last petal glues back onto P1's shifted lower
                    v = tt;
                    if (h.has_edge(lower(p), v)) {
                        q[0] = petal_modify(h, q[0], lower(p));
                        q.erase(q.begin() + p);
                        reduced_n = true;
                        break;
                    }
                } else {
                    v = second_lower(p + 1);
                    if (h.has_edge(lower(p), v)) {
                        q[static_cast<std::size_t>(p + 1)] = petal_modify(h, q[static_cast<std::size_t>(p + 1)], lower(p));
                        q.erase(q.begin() + p);
                        reduced_n = true;
                        break;
                    }
                }
                if (p == 0)
                    w = n % 2 == 0 ? second_upper(n - 1) : tt;
                else
                    w = second_upper(p - 1);
                ext[static_cast<std::size_t>(p)] = {w, v};
            }
            if (reduced_n) break;
            for (int p = 0; p < n; ++p) {
                if (p % 2 == 0)
                    q[static_cast<std::size_t>(p)] =
                        petal_extend(h, q[static_cast<std::size_t>(p)], ext[static_cast<std::size_t>(p)].first,
                                     ext[static_cast<std::size_t>(p)].second);
                else
                    q[static_cast<std::size_t>(p)].rungs.pop_back();
            }
        }
        if (reduced_n) continue;

        // final phase: P2 has length one
        const int a = q[1].center, b = lower(1), e = upper(1);
        const int s = lower(0), x = q[0].center;
        const int tt = second_lower(0);
        auto as = h.sign(a, s);
        if (as && is_unicoloured(*as)) {
            q[1] = Petal{a, {{b, s}}};
            Chain c = detail::glue_two_petals(h, q[0], q[1]);
            detail::check(verify_chain(h, c).ok, "glued chain fails verification");
            return c;
        }
        if (as && *as == EdgeSign::bicoloured) {
            q[1] = Petal{a, {{s, e}}};
            q.erase(q.begin());
            continue;
        }
        if (h.has_edge(e, tt)) {
            if (q[0].length() >= 2) {
                q[0] = petal_modify(h, q[0], e);
            } else if (auto xe = h.sign(x, e); xe && *xe == EdgeSign::bicoloured) {
                q[0] = Petal{x, {{e, upper(0)}}};
            } else {
                // length-one P1 with a unicoloured xe edge: swap P1's upper
                // walk onto xe and absorb P2's role
                q[0] = Petal{x, {{s, e}}};
                q.erase(q.begin() + 1);
                continue;
            }
            Chain c = detail::glue_two_petals(h, q[0], q[1]);
            detail::check(verify_chain(h, c).ok, "glued chain fails verification");
            return c;
        }
        // as and e tt both missing: absorb P2 into P1 by two extensions
        q[0] = petal_extend(h, petal_extend(h, q[0], tt, a), s, e);
        q.erase(q.begin() + 1);
    }
}

// ---------------------------------------------------------------------------
// Special min ordering

struct SpecialCheck {
    bool ok = true;
    bool min_ordering_failed = false;
    int z = -1, bi = -1, uni = -1; // witness: bicoloured neighbour bi of z placed after unicoloured uni
    OrderingCheck order_check;
};

// A min ordering that additionally places, at every vertex, all bicoloured
// neighbours before all unicoloured neighbours.
inline SpecialCheck verify_special_min_ordering(const SignedGraph& h, const MinOrdering& ord,
                                                const PairRelation* d_init = nullptr) {
    SpecialCheck r;
    r.order_check = verify_min_ordering(h, ord.mode, ord, d_init);
    if (!r.order_check.ok) {
        r.ok = false;
        r.min_ordering_failed = true;
        return r;
    }
    std::vector<int> pos(static_cast<std::size_t>(h.vertex_count()), -1);
    for (std::size_t i = 0; i < ord.order_a.size(); ++i) pos[static_cast<std::size_t>(ord.order_a[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < ord.order_b.size(); ++i) pos[static_cast<std::size_t>(ord.order_b[i])] = static_cast<int>(i);
    for (int z = 0; z < h.vertex_count(); ++z)
        for (auto [xb, sb] : h.neighbours(z)) {
            if (sb != EdgeSign::bicoloured) continue;
            for (auto [yu, su] : h.neighbours(z)) {
                if (!is_unicoloured(su)) continue;
                if (pos[static_cast<std::size_t>(xb)] >= pos[static_cast<std::size_t>(yu)]) {
                    r.ok = false;
                    r.z = z;
                    r.bi = xb;
                    r.uni = yu;
                    return r;
                }
            }
        }
    return r;
}

using SpecialResult = std::variant<SpecialMinOrdering, Chain, InvertiblePairCertificate>;

// D := closure(D0). A circuit in D yields a chain through a flower; otherwise
// the ordering engine extends D, and the resulting min ordering is special
// exactly because it extends D.
inline SpecialResult special_min_ordering(const SignedGraph& h, GraphMode mode) {
    detail::require_normalized(h);
    detail::require_ordering_mode(mode);
    PairDigraph pd = build_pair_digraph(h, mode);
    auto d0 = detail::build_d0_info(h, pd);
    auto closure = detail::close_raw(pd, d0.nodes);

    std::vector<std::pair<int, int>> rel;
    for (int v = 0; v < pd.node_count(); ++v)
        if (closure.in[static_cast<std::size_t>(v)]) rel.push_back(pd.nodes[static_cast<std::size_t>(v)]);

    if (auto circ = find_circuit(pd.n, rel)) {
        Flower f = circuit_to_flower(h, mode, *circ);
        Chain c = flower_to_chain(h, f);
        detail::check(verify_chain(h, c).ok, "derived chain fails verification");
        return c;
    }

    PairRelation d;
    d.mode = mode;
    d.pairs = std::move(rel);
    d.canonicalize();
    auto res = extend_to_min_ordering(h, mode, d);
    if (std::holds_alternative<MinOrdering>(res))
        return SpecialMinOrdering{std::get<MinOrdering>(std::move(res))};
    if (std::holds_alternative<InvertiblePairCertificate>(res))
        return std::get<InvertiblePairCertificate>(std::move(res));
    throw internal_error("closure of D0 rejected as a seed: " + std::get<BadSeed>(res).reason);
}

} // namespace sgh
