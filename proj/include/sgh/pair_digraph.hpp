#pragma once

// The pair digraph H+ of a bipartite or reflexive graph: nodes are ordered
// pairs of distinct equicoloured vertices, and (a,a') dominates (b,b') when
// ab, a'b' are edges while ab' is not. Carries strong components, their
// coupling under pair reversal, sink pairs and invertible-pair certificates.

#include <algorithm>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "sgh/signed_graph.hpp"

namespace sgh {

struct PairDigraph {
    GraphMode mode = GraphMode::bipartite;
    int n = 0;                                  // vertices of H
    std::vector<signed char> side;              // bipartite: 0/1 per vertex; reflexive: all 0
    std::vector<std::pair<int, int>> nodes;     // lex sorted ordered pairs
    std::vector<int> node_id;                   // n*n lookup, -1 if not a node
    std::vector<std::vector<int>> arcs;         // sorted out-neighbour ids
    std::vector<int> reverse_node;              // id of the reversed pair
    std::vector<std::vector<bool>> adj;         // underlying adjacency incl. loops

    int id(int x, int y) const { return node_id[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)]; }
    int node_count() const { return static_cast<int>(nodes.size()); }
};

// Nodes and arcs exactly per definition. Bipartite mode requires a bipartite
// loopless graph; reflexive mode requires a loop at every vertex (loops then
// take part in the same domination formula).
inline PairDigraph build_pair_digraph(const SignedGraph& h, GraphMode mode) {
    PairDigraph pd;
    pd.mode = mode;
    pd.n = h.vertex_count();
    pd.side.assign(static_cast<std::size_t>(pd.n), 0);
    if (mode == GraphMode::bipartite) {
        if (h.has_any_loop()) throw std::invalid_argument("build_pair_digraph: loops in bipartite mode");
        auto b = bipartition_of(h);
        if (std::holds_alternative<OddCycle>(b))
            throw std::invalid_argument("build_pair_digraph: graph is not bipartite");
        pd.side = std::get<Bipartition>(b).side;
    } else if (mode == GraphMode::reflexive) {
        if (!h.all_vertices_looped()) throw std::invalid_argument("build_pair_digraph: missing loops in reflexive mode");
    } else {
        throw std::invalid_argument("build_pair_digraph: mode must be bipartite or reflexive");
    }

    pd.adj.assign(static_cast<std::size_t>(pd.n), std::vector<bool>(static_cast<std::size_t>(pd.n), false));
    for (const Edge& e : h.edges()) {
        pd.adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
        pd.adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
    }

    pd.node_id.assign(static_cast<std::size_t>(pd.n) * static_cast<std::size_t>(pd.n), -1);
    for (int x = 0; x < pd.n; ++x)
        for (int y = 0; y < pd.n; ++y) {
            if (x == y) continue;
            if (pd.side[static_cast<std::size_t>(x)] != pd.side[static_cast<std::size_t>(y)]) continue;
            pd.node_id[static_cast<std::size_t>(x) * static_cast<std::size_t>(pd.n) + static_cast<std::size_t>(y)] =
                static_cast<int>(pd.nodes.size());
            pd.nodes.emplace_back(x, y);
        }
    pd.reverse_node.resize(pd.nodes.size());
    for (int i = 0; i < pd.node_count(); ++i)
        pd.reverse_node[static_cast<std::size_t>(i)] = pd.id(pd.nodes[static_cast<std::size_t>(i)].second,
                                                            pd.nodes[static_cast<std::size_t>(i)].first);

    pd.arcs.assign(pd.nodes.size(), {});
    for (int i = 0; i < pd.node_count(); ++i) {
        auto [a, a2] = pd.nodes[static_cast<std::size_t>(i)];
        for (int b = 0; b < pd.n; ++b) {
            if (!pd.adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
            for (int b2 = 0; b2 < pd.n; ++b2) {
                if (!pd.adj[static_cast<std::size_t>(a2)][static_cast<std::size_t>(b2)]) continue;
                if (pd.adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b2)]) continue;
                int j = pd.id(b, b2);
                if (j >= 0) pd.arcs[static_cast<std::size_t>(i)].push_back(j);
            }
        }
        std::sort(pd.arcs[static_cast<std::size_t>(i)].begin(), pd.arcs[static_cast<std::size_t>(i)].end());
    }
    return pd;
}

// ---------------------------------------------------------------------------
// Strong components and coupling

struct SccDecomposition {
    std::vector<int> comp;                 // node -> component id
    std::vector<std::vector<int>> members; // component -> sorted node ids
    std::vector<int> coupling;             // component -> component of reversed pairs
    std::vector<bool> self_coupled;

    int count() const { return static_cast<int>(members.size()); }
    bool trivial(int c) const { return members[static_cast<std::size_t>(c)].size() == 1; }
};

// Iterative Tarjan; components renumbered by least member node so ids are
// reproducible across runs.
inline SccDecomposition strong_components(const PairDigraph& pd) {
    const int n = pd.node_count();
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<int> stack, raw_comp(static_cast<std::size_t>(n), -1);
    int next_index = 0, raw_count = 0;

    struct Frame {
        int v;
        std::size_t next_arc;
    };
    std::vector<Frame> call;
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] != -1) continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto& fr = call.back();
            int v = fr.v;
            if (fr.next_arc == 0) {
                index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = next_index++;
                stack.push_back(v);
                on_stack[static_cast<std::size_t>(v)] = true;
            }
            bool descended = false;
            const auto& out = pd.arcs[static_cast<std::size_t>(v)];
            while (fr.next_arc < out.size()) {
                int w = out[fr.next_arc++];
                if (index[static_cast<std::size_t>(w)] == -1) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<std::size_t>(w)])
                    low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
            }
            if (descended) continue;
            if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                    raw_comp[static_cast<std::size_t>(w)] = raw_count;
                    if (w == v) break;
                }
                ++raw_count;
            }
            call.pop_back();
            if (!call.empty()) {
                int p = call.back().v;
                low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
            }
        }
    }

    // renumber by least member
    std::vector<int> least(static_cast<std::size_t>(raw_count), n);
    for (int v = 0; v < n; ++v)
        least[static_cast<std::size_t>(raw_comp[static_cast<std::size_t>(v)])] =
            std::min(least[static_cast<std::size_t>(raw_comp[static_cast<std::size_t>(v)])], v);
    std::vector<int> order(static_cast<std::size_t>(raw_count));
    for (int c = 0; c < raw_count; ++c) order[static_cast<std::size_t>(c)] = c;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return least[static_cast<std::size_t>(a)] < least[static_cast<std::size_t>(b)]; });
    std::vector<int> renum(static_cast<std::size_t>(raw_count));
    for (int i = 0; i < raw_count; ++i) renum[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    SccDecomposition scc;
    scc.comp.assign(static_cast<std::size_t>(n), -1);
    scc.members.assign(static_cast<std::size_t>(raw_count), {});
    for (int v = 0; v < n; ++v) {
        int c = renum[static_cast<std::size_t>(raw_comp[static_cast<std::size_t>(v)])];
        scc.comp[static_cast<std::size_t>(v)] = c;
        scc.members[static_cast<std::size_t>(c)].push_back(v);
    }

    scc.coupling.assign(static_cast<std::size_t>(raw_count), -1);
    scc.self_coupled.assign(static_cast<std::size_t>(raw_count), false);
    for (int c = 0; c < raw_count; ++c) {
        int rep = scc.members[static_cast<std::size_t>(c)].front();
        int cc = scc.comp[static_cast<std::size_t>(pd.reverse_node[static_cast<std::size_t>(rep)])];
        scc.coupling[static_cast<std::size_t>(c)] = cc;
        scc.self_coupled[static_cast<std::size_t>(c)] = cc == c;
        // the coupled component consists exactly of the reversed pairs
        for (int v : scc.members[static_cast<std::size_t>(c)])
            detail::check(scc.comp[static_cast<std::size_t>(pd.reverse_node[static_cast<std::size_t>(v)])] == cc,
                          "coupling is not well defined");
    }
    for (int c = 0; c < raw_count; ++c)
        detail::check(scc.coupling[static_cast<std::size_t>(scc.coupling[static_cast<std::size_t>(c)])] == c,
                      "coupling is not an involution");
    return scc;
}

// ---------------------------------------------------------------------------
// Sink pairs and invertible pairs

// (a,b) is a sink pair when N(b) is contained in N(a); such nodes have no
// outgoing arcs in H+.
inline bool is_sink_pair(const SignedGraph& h, int a, int b) {
    for (auto [w, s] : h.neighbours(b)) {
        (void)s;
        if (!h.has_edge(a, w)) return false;
    }
    return true;
}

struct InvertiblePairCertificate {
    int u = -1, u2 = -1;
    // first walk pair: u -> u2 and u2 -> u; second: u2 -> u and u -> u2
    std::vector<int> w1a, w1b, w2a, w2b;
};

namespace detail {

// Shortest H+ path from s to t (BFS, arcs in sorted order); empty if none.
inline std::vector<int> pd_path(const PairDigraph& pd, int s, int t) {
    std::vector<int> parent(static_cast<std::size_t>(pd.node_count()), -2);
    std::vector<int> queue{s};
    parent[static_cast<std::size_t>(s)] = -1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        if (v == t) break;
        for (int w : pd.arcs[static_cast<std::size_t>(v)])
            if (parent[static_cast<std::size_t>(w)] == -2) {
                parent[static_cast<std::size_t>(w)] = v;
                queue.push_back(w);
            }
    }
    if (parent[static_cast<std::size_t>(t)] == -2) return {};
    std::vector<int> path;
    for (int v = t; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace detail

// None iff no node shares a strong component with its reverse. Walks are
// rebuilt from H+ paths (u,u') ~> (u',u) and back; every arc step contributes
// one step to both walks, and the domination non-edge is the required
// non-adjacency.
inline std::optional<InvertiblePairCertificate> find_invertible_pair(const PairDigraph& pd,
                                                                     const SccDecomposition& scc) {
    for (int i = 0; i < pd.node_count(); ++i) {
        int r = pd.reverse_node[static_cast<std::size_t>(i)];
        if (scc.comp[static_cast<std::size_t>(i)] != scc.comp[static_cast<std::size_t>(r)]) continue;
        auto fwd = detail::pd_path(pd, i, r);
        auto bwd = detail::pd_path(pd, r, i);
        detail::check(!fwd.empty() && !bwd.empty(), "self-coupled pair without connecting paths");
        InvertiblePairCertificate cert;
        cert.u = pd.nodes[static_cast<std::size_t>(i)].first;
        cert.u2 = pd.nodes[static_cast<std::size_t>(i)].second;
        for (int v : fwd) {
            cert.w1a.push_back(pd.nodes[static_cast<std::size_t>(v)].first);
            cert.w1b.push_back(pd.nodes[static_cast<std::size_t>(v)].second);
        }
        for (int v : bwd) {
            cert.w2a.push_back(pd.nodes[static_cast<std::size_t>(v)].first);
            cert.w2b.push_back(pd.nodes[static_cast<std::size_t>(v)].second);
        }
        return cert;
    }
    return std::nullopt;
}

// Independent certificate verifier: checks only the walk conditions of the
// definition, never the component machinery. In bipartite mode additionally
// requires u, u2 on one side.
inline bool verify_invertible_pair(const SignedGraph& h, GraphMode mode, const InvertiblePairCertificate& c) {
    if (c.u < 0 || c.u2 < 0 || c.u >= h.vertex_count() || c.u2 >= h.vertex_count() || c.u == c.u2) return false;
    if (mode == GraphMode::bipartite) {
        auto b = bipartition_of(h);
        if (std::holds_alternative<OddCycle>(b)) return false;
        const auto& side = std::get<Bipartition>(b).side;
        if (side[static_cast<std::size_t>(c.u)] != side[static_cast<std::size_t>(c.u2)]) return false;
    }
    auto walk_pair_ok = [&](const std::vector<int>& p, const std::vector<int>& q, int pa, int pz, int qa, int qz) {
        if (p.size() != q.size() || p.size() < 2) return false;
        if (p.front() != pa || p.back() != pz || q.front() != qa || q.back() != qz) return false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (!h.has_edge(p[i], p[i + 1])) return false;
            if (!h.has_edge(q[i], q[i + 1])) return false;
            if (h.has_edge(p[i], q[i + 1])) return false;
        }
        return true;
    };
    return walk_pair_ok(c.w1a, c.w1b, c.u, c.u2, c.u2, c.u) && walk_pair_ok(c.w2a, c.w2b, c.u2, c.u, c.u, c.u2);
}

// Plain arc list "x,y -> u,v", one per line, for golden-file tests.
inline std::string dump_pair_digraph(const SignedGraph& h, const PairDigraph& pd) {
    std::string out;
    for (int i = 0; i < pd.node_count(); ++i) {
        auto [x, y] = pd.nodes[static_cast<std::size_t>(i)];
        for (int j : pd.arcs[static_cast<std::size_t>(i)]) {
            auto [u, v] = pd.nodes[static_cast<std::size_t>(j)];
            out += h.name(x) + "," + h.name(y) + " -> " + h.name(u) + "," + h.name(v) + "\n";
        }
    }
    return out;
}

} // namespace sgh
