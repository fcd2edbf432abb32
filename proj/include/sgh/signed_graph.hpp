#pragma once

// Signed graphs: vertices plus edges carrying blue (+), red (-) or both signs.
// Central data model for templates H and instances G, together with switching,
// bipartition, weak-balance normalization and the signed homomorphism check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

namespace sgh {

enum class EdgeSign : std::uint8_t { blue, red, bicoloured };

inline bool is_unicoloured(EdgeSign s) { return s != EdgeSign::bicoloured; }

inline const char* to_string(EdgeSign s) {
    switch (s) {
        case EdgeSign::blue: return "+";
        case EdgeSign::red: return "-";
        default: return "+-";
    }
}

enum class GraphMode : std::uint8_t { bipartite, reflexive, general };

// Signals a broken internal invariant (a bug), never an input error.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

namespace detail {
inline void check(bool cond, const char* what) {
    if (!cond) throw internal_error(what);
}
} // namespace detail

struct Edge {
    int u; // u <= v
    int v;
    EdgeSign sign;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable after construction. Vertex identifiers are arbitrary tokens;
// internally vertices are 0..n-1 in lexicographic token order, so index
// order is the deterministic tie-break order everywhere.
class SignedGraph {
public:
    SignedGraph() = default;

    // Collects vertices from `vertices` plus all edge endpoints, sorts them,
    // and canonicalizes edges: at most one record per unordered pair, with
    // parallel opposite-sign edges collapsed to one bicoloured edge.
    static SignedGraph make(std::vector<std::string> vertices,
                            const std::vector<std::tuple<std::string, std::string, EdgeSign>>& edges,
                            GraphMode hint = GraphMode::general) {
        SignedGraph g;
        for (const auto& [a, b, s] : edges) {
            (void)s;
            vertices.push_back(a);
            vertices.push_back(b);
        }
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        g.names_ = std::move(vertices);

        // blue bit 1, red bit 2; both = bicoloured
        std::vector<std::tuple<int, int, std::uint8_t>> raw;
        raw.reserve(edges.size());
        for (const auto& [a, b, s] : edges) {
            int u = g.index_of(a), v = g.index_of(b);
            if (u > v) std::swap(u, v);
            std::uint8_t m = s == EdgeSign::blue ? 1 : s == EdgeSign::red ? 2 : 3;
            raw.emplace_back(u, v, m);
        }
        std::sort(raw.begin(), raw.end(),
                  [](const auto& x, const auto& y) { return std::pair(std::get<0>(x), std::get<1>(x)) <
                                                            std::pair(std::get<0>(y), std::get<1>(y)); });
        for (std::size_t i = 0; i < raw.size();) {
            auto [u, v, m] = raw[i];
            std::size_t j = i;
            while (j < raw.size() && std::get<0>(raw[j]) == u && std::get<1>(raw[j]) == v)
                m |= std::get<2>(raw[j++]);
            EdgeSign s = m == 1 ? EdgeSign::blue : m == 2 ? EdgeSign::red : EdgeSign::bicoloured;
            g.edges_.push_back(Edge{u, v, s});
            i = j;
        }

        g.adj_.assign(g.names_.size(), {});
        for (const Edge& e : g.edges_) {
            g.adj_[e.u].emplace_back(e.v, e.sign);
            if (e.u != e.v) g.adj_[e.v].emplace_back(e.u, e.sign);
        }
        for (auto& a : g.adj_) std::sort(a.begin(), a.end());

        g.hint_ = hint;
        g.validate_hint();
        return g;
    }

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> find(std::string_view token) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), token);
        if (it == names_.end() || *it != token) return std::nullopt;
        return static_cast<int>(it - names_.begin());
    }

    int index_of(std::string_view token) const {
        auto i = find(token);
        if (!i) throw std::invalid_argument("unknown vertex: " + std::string(token));
        return *i;
    }

    std::optional<EdgeSign> sign(int u, int v) const {
        if (u > v) std::swap(u, v);
        const auto& a = adj_[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(a.begin(), a.end(), std::pair(v, EdgeSign::blue),
                                   [](const auto& x, const auto& y) { return x.first < y.first; });
        if (it == a.end() || it->first != v) return std::nullopt;
        return it->second;
    }

    bool has_edge(int u, int v) const { return sign(u, v).has_value(); }
    bool has_loop(int v) const { return has_edge(v, v); }

    const std::vector<Edge>& edges() const { return edges_; }
    // Sorted by neighbour index; a loop at v appears once as (v, sign).
    const std::vector<std::pair<int, EdgeSign>>& neighbours(int v) const {
        return adj_[static_cast<std::size_t>(v)];
    }

    GraphMode mode_hint() const { return hint_; }

    bool all_vertices_looped() const {
        for (int v = 0; v < vertex_count(); ++v)
            if (!has_loop(v)) return false;
        return true;
    }
    bool has_any_loop() const {
        for (const Edge& e : edges_)
            if (e.u == e.v) return true;
        return false;
    }

    // Structural equality: vertex tokens and canonical edges (hint ignored).
    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.names_ == b.names_ && a.edges_ == b.edges_;
    }

private:
    void validate_hint();

    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, EdgeSign>>> adj_;
    GraphMode hint_ = GraphMode::general;
};

// ---------------------------------------------------------------------------
// Parity 2-colouring. Shared primitive behind bipartition, weak-balance
// normalization and odd-red-walk detection.

namespace detail {

struct ParityWitness {
    std::vector<int> walk; // closed: front() == back()
    int odd_edges;         // number of odd-marked edges on the walk (odd)
};

// Colours vertices 0/1 so that colour(u) ^ colour(v) == odd for every listed
// edge. On failure returns a closed walk (a simple cycle through the BFS tree)
// whose odd-edge count is odd. Deterministic: BFS from least unvisited vertex,
// neighbours in input order after sorting.
inline std::variant<std::vector<signed char>, ParityWitness>
parity_two_colour(int n, const std::vector<std::tuple<int, int, bool>>& edges) {
    std::vector<std::vector<std::pair<int, bool>>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v, odd] : edges) {
        if (u == v) {
            if (odd) return ParityWitness{{u, u}, 1};
            continue;
        }
        adj[static_cast<std::size_t>(u)].emplace_back(v, odd);
        adj[static_cast<std::size_t>(v)].emplace_back(u, odd);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<signed char> colour(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1), depth(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (colour[static_cast<std::size_t>(root)] != -1) continue;
        colour[static_cast<std::size_t>(root)] = 0;
        queue.assign(1, root);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (auto [v, odd] : adj[static_cast<std::size_t>(u)]) {
                signed char want = static_cast<signed char>(colour[static_cast<std::size_t>(u)] ^ (odd ? 1 : 0));
                if (colour[static_cast<std::size_t>(v)] == -1) {
                    colour[static_cast<std::size_t>(v)] = want;
                    parent[static_cast<std::size_t>(v)] = u;
                    depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                } else if (colour[static_cast<std::size_t>(v)] != want) {
                    // walk u .. lca .. v, closed by the conflicting edge (v,u)
                    std::vector<int> up, down;
                    int x = u, y = v;
                    while (depth[static_cast<std::size_t>(x)] > depth[static_cast<std::size_t>(y)]) {
                        up.push_back(x);
                        x = parent[static_cast<std::size_t>(x)];
                    }
                    while (depth[static_cast<std::size_t>(y)] > depth[static_cast<std::size_t>(x)]) {
                        down.push_back(y);
                        y = parent[static_cast<std::size_t>(y)];
                    }
                    while (x != y) {
                        up.push_back(x);
                        down.push_back(y);
                        x = parent[static_cast<std::size_t>(x)];
                        y = parent[static_cast<std::size_t>(y)];
                    }
                    up.push_back(x);
                    std::vector<int> walk(up);
                    for (auto it = down.rbegin(); it != down.rend(); ++it) walk.push_back(*it);
                    walk.push_back(u);
                    // count odd-marked edges along the walk
                    int cnt = 0;
                    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
                        int a = walk[i], b = walk[i + 1];
                        bool odd_ab = false;
                        for (auto [w, o] : adj[static_cast<std::size_t>(a)])
                            if (w == b) {
                                odd_ab = o;
                                break;
                            }
                        // the closing edge is the conflict edge itself
                        if (i + 2 == walk.size()) {
                            for (const auto& [p, q, o] : edges)
                                if ((p == a && q == b) || (p == b && q == a)) {
                                    odd_ab = o;
                                    break;
                                }
                        }
                        cnt += odd_ab ? 1 : 0;
                    }
                    return ParityWitness{std::move(walk), cnt};
                }
            }
        }
    }
    return colour;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Switching

// A switching at v flips the signs of all edges incident with v; bicoloured
// edges and loops are unchanged.
inline SignedGraph apply_switching(const SignedGraph& g, const std::vector<bool>& flipped) {
    detail::check(static_cast<int>(flipped.size()) == g.vertex_count(), "switching size mismatch");
    std::vector<std::tuple<std::string, std::string, EdgeSign>> out;
    out.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        EdgeSign s = e.sign;
        if (is_unicoloured(s) && (flipped[static_cast<std::size_t>(e.u)] ^ flipped[static_cast<std::size_t>(e.v)]))
            s = s == EdgeSign::blue ? EdgeSign::red : EdgeSign::blue;
        out.emplace_back(g.name(e.u), g.name(e.v), s);
    }
    return SignedGraph::make(g.names(), out, g.mode_hint());
}

// Token-set convenience; rejects unknown vertices.
inline SignedGraph apply_switching(const SignedGraph& g, const std::vector<std::string>& flipped_tokens) {
    std::vector<bool> flipped(static_cast<std::size_t>(g.vertex_count()), false);
    for (const auto& t : flipped_tokens) flipped[static_cast<std::size_t>(g.index_of(t))] = true;
    return apply_switching(g, flipped);
}

// ---------------------------------------------------------------------------
// Bipartition

struct Bipartition {
    std::vector<signed char> side; // 0 = part A, 1 = part B
    std::vector<int> part_a, part_b;
};

struct OddCycle {
    std::vector<int> walk; // closed walk of odd length
};

// Canonical bipartition: per component, the side of the least vertex goes to
// part A; isolated vertices go to part A.
inline std::variant<Bipartition, OddCycle> bipartition_of(const SignedGraph& g) {
    std::vector<std::tuple<int, int, bool>> und;
    und.reserve(g.edges().size());
    for (const Edge& e : g.edges()) und.emplace_back(e.u, e.v, true);
    auto res = detail::parity_two_colour(g.vertex_count(), und);
    if (std::holds_alternative<detail::ParityWitness>(res))
        return OddCycle{std::move(std::get<detail::ParityWitness>(res).walk)};
    Bipartition b;
    b.side = std::move(std::get<std::vector<signed char>>(res));
    for (int v = 0; v < g.vertex_count(); ++v)
        (b.side[static_cast<std::size_t>(v)] == 0 ? b.part_a : b.part_b).push_back(v);
    return b;
}

inline void SignedGraph::validate_hint() {
    if (hint_ == GraphMode::reflexive) {
        if (!all_vertices_looped())
            throw std::invalid_argument("reflexive graph requires a loop at every vertex");
    } else if (hint_ == GraphMode::bipartite) {
        if (has_any_loop())
            throw std::invalid_argument("bipartite graph must not contain loops");
        if (std::holds_alternative<OddCycle>(bipartition_of(*this)))
            throw std::invalid_argument("bipartite hint on a non-bipartite graph");
    }
}

// ---------------------------------------------------------------------------
// Weak balance

struct OddRedClosedWalk {
    std::vector<int> walk; // closed walk over unicoloured edges
    int red_count;         // odd
};

struct Normalized {
    SignedGraph graph;          // switch-equivalent, no purely red edges
    std::vector<bool> switching; // the assignment used
};

// 2-colours each component of the unicoloured subgraph: endpoints agree across
// a blue edge and differ across a red one. Conflicts yield an odd-red walk.
// Vertices touched by no unicoloured edge stay unflipped.
inline std::variant<Normalized, OddRedClosedWalk> normalize_weakly_balanced(const SignedGraph& g) {
    std::vector<std::tuple<int, int, bool>> uni;
    for (const Edge& e : g.edges())
        if (is_unicoloured(e.sign)) uni.emplace_back(e.u, e.v, e.sign == EdgeSign::red);
    auto res = detail::parity_two_colour(g.vertex_count(), uni);
    if (std::holds_alternative<detail::ParityWitness>(res)) {
        auto& w = std::get<detail::ParityWitness>(res);
        return OddRedClosedWalk{std::move(w.walk), w.odd_edges};
    }
    const auto& colour = std::get<std::vector<signed char>>(res);
    std::vector<bool> flipped(colour.size());
    for (std::size_t i = 0; i < colour.size(); ++i) flipped[i] = colour[i] == 1;
    SignedGraph out = apply_switching(g, flipped);
    for (const Edge& e : out.edges()) detail::check(e.sign != EdgeSign::red, "normalization left a red edge");
    return Normalized{std::move(out), std::move(flipped)};
}

// Detection primitive over a plain unicoloured edge set: nullopt iff every
// cycle has an even number of red edges.
inline std::optional<OddRedClosedWalk> find_unbalanced_cycle(int vertex_count,
                                                             const std::vector<std::tuple<int, int, EdgeSign>>& edges) {
    std::vector<std::tuple<int, int, bool>> marked;
    marked.reserve(edges.size());
    for (const auto& [u, v, s] : edges) {
        if (!is_unicoloured(s)) throw std::invalid_argument("find_unbalanced_cycle: bicoloured edge in input");
        marked.emplace_back(u, v, s == EdgeSign::red);
    }
    auto res = detail::parity_two_colour(vertex_count, marked);
    if (std::holds_alternative<detail::ParityWitness>(res)) {
        auto& w = std::get<detail::ParityWitness>(res);
        return OddRedClosedWalk{std::move(w.walk), w.odd_edges};
    }
    return std::nullopt;
}

// Checks an odd-red-walk certificate against g: closed, unicoloured edges
// only, odd red count.
inline bool check_odd_red_walk(const SignedGraph& g, const OddRedClosedWalk& w) {
    if (w.walk.size() < 2 || w.walk.front() != w.walk.back()) return false;
    int reds = 0;
    for (std::size_t i = 0; i + 1 < w.walk.size(); ++i) {
        auto s = g.sign(w.walk[i], w.walk[i + 1]);
        if (!s || !is_unicoloured(*s)) return false;
        reds += *s == EdgeSign::red ? 1 : 0;
    }
    return reds % 2 == 1 && reds == w.red_count;
}

// ---------------------------------------------------------------------------
// Homomorphism verification

struct HomCheck {
    enum class Fail : std::uint8_t { none, edge, bicoloured, parity, list };
    bool ok = true;
    Fail fail = Fail::none;
    int gu = -1, gv = -1;       // offending instance edge or vertex
    OddRedClosedWalk walk{};    // parity witness
};

// f maps V(g) -> V(h); h must be normalized (no purely red edges). True iff
// (a) every g-edge maps to an h-edge, (b) bicoloured g-edges map to bicoloured
// h-edges, (c) the subgraph of unicoloured g-edges with blue images carries no
// odd-red cycle, (d) each f(v) lies in its list when lists are given.
inline HomCheck verify_homomorphism(const SignedGraph& g, const SignedGraph& h, const std::vector<int>& f,
                                    const std::vector<std::vector<int>>* lists = nullptr) {
    for (const Edge& e : h.edges())
        if (e.sign == EdgeSign::red) throw std::invalid_argument("verify_homomorphism: template not normalized");
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw std::invalid_argument("verify_homomorphism: map not total");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (f[static_cast<std::size_t>(v)] < 0 || f[static_cast<std::size_t>(v)] >= h.vertex_count())
            throw std::invalid_argument("verify_homomorphism: image out of range");

    HomCheck r;
    if (lists) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto& lv = (*lists)[static_cast<std::size_t>(v)];
            if (std::find(lv.begin(), lv.end(), f[static_cast<std::size_t>(v)]) == lv.end()) {
                r.ok = false;
                r.fail = HomCheck::Fail::list;
                r.gu = r.gv = v;
                return r;
            }
        }
    }
    std::vector<std::tuple<int, int, EdgeSign>> parity_edges;
    for (const Edge& e : g.edges()) {
        auto hs = h.sign(f[static_cast<std::size_t>(e.u)], f[static_cast<std::size_t>(e.v)]);
        if (!hs) {
            r.ok = false;
            r.fail = HomCheck::Fail::edge;
            r.gu = e.u;
            r.gv = e.v;
            return r;
        }
        if (e.sign == EdgeSign::bicoloured && *hs != EdgeSign::bicoloured) {
            r.ok = false;
            r.fail = HomCheck::Fail::bicoloured;
            r.gu = e.u;
            r.gv = e.v;
            return r;
        }
        if (is_unicoloured(e.sign) && *hs == EdgeSign::blue) parity_edges.emplace_back(e.u, e.v, e.sign);
    }
    if (auto w = find_unbalanced_cycle(g.vertex_count(), parity_edges)) {
        r.ok = false;
        r.fail = HomCheck::Fail::parity;
        r.walk = std::move(*w);
        return r;
    }
    return r;
}

} // namespace sgh
