// Command-line front end: classify templates, build (seeded) min orderings,
// solve list-homomorphism instances, verify certificates, and generate small
// graph corpora.
//
// Exit codes: classify 0 = polynomial, 1 = NP-complete, 2 = unsupported or
// not weakly balanced; order 0 = ordering, 1 = invertible pair, 2 = bad seed;
// solve 0 = map, 1 = NONE, 2 = template not polynomial; verify 0 = ok,
// 1 = fail. Parse and I/O errors exit with 3.

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include "sgh/sgh.hpp"

namespace {

sgh::SignedGraph load_sg(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return sgh::parse_sg(in);
}

// auto mode: all loops -> reflexive, none -> bipartite, mixed -> error
std::optional<sgh::GraphMode> detect_mode(const sgh::SignedGraph& g, bool force_bip, bool force_refl) {
    if (force_bip) return sgh::GraphMode::bipartite;
    if (force_refl) return sgh::GraphMode::reflexive;
    if (!g.has_any_loop()) return sgh::GraphMode::bipartite;
    if (g.all_vertices_looped()) return sgh::GraphMode::reflexive;
    return std::nullopt;
}

int run_classify(const std::vector<std::string>& paths, int jobs) {
    std::vector<std::string> blocks(paths.size());
    std::vector<int> codes(paths.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < paths.size(); i = next++) {
            auto g = load_sg(paths[i]);
            auto r = sgh::classify(g);
            blocks[i] = sgh::serialize_verdict(g, r);
            switch (r.verdict) {
                case sgh::ClassificationResult::Verdict::polynomial: codes[i] = 0; break;
                case sgh::ClassificationResult::Verdict::npc_chain:
                case sgh::ClassificationResult::Verdict::npc_invertible: codes[i] = 1; break;
                default: codes[i] = 2; break;
            }
        }
    };
    if (jobs <= 1 || paths.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    int code = 0;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (paths.size() > 1) std::cout << "# file: " << paths[i] << "\n";
        std::cout << blocks[i];
        code = std::max(code, codes[i]);
    }
    return code;
}

int run_order(const std::string& path, const std::string& seed_path, bool force_bip, bool force_refl) {
    auto g = load_sg(path);
    auto mode = detect_mode(g, force_bip, force_refl);
    if (!mode) {
        std::cout << "BADSEED: mixed graph (some but not all vertices carry loops)\n";
        return 2;
    }
    sgh::PairRelation seeds;
    seeds.mode = *mode;
    if (!seed_path.empty()) {
        std::ifstream in(seed_path);
        if (!in) throw std::runtime_error("cannot open " + seed_path);
        for (auto& [x, y] : sgh::parse_pairs(in)) seeds.pairs.emplace_back(g.index_of(x), g.index_of(y));
        seeds.canonicalize();
    }
    // seed files carry raw pairs; close them before extending
    auto pd = sgh::build_pair_digraph(g, *mode);
    sgh::PairRelation closed;
    closed.mode = *mode;
    if (!seeds.pairs.empty()) {
        for (auto [x, y] : seeds.pairs)
            if (x == y || pd.id(x, y) < 0) {
                std::cout << "BADSEED: pair " << g.name(x) << " " << g.name(y)
                          << " is not an ordered equicoloured pair\n";
                return 2;
            }
        auto res = sgh::closure_under_domination(pd, seeds);
        if (std::holds_alternative<sgh::ConflictingPair>(res)) {
            auto& cp = std::get<sgh::ConflictingPair>(res);
            std::cout << "BADSEED: closure forces both orders of " << g.name(cp.x) << " and " << g.name(cp.y)
                      << "\n";
            return 2;
        }
        closed = std::get<sgh::PairRelation>(std::move(res));
    }
    auto res = sgh::extend_to_min_ordering(g, *mode, closed);
    if (std::holds_alternative<sgh::MinOrdering>(res)) {
        std::cout << sgh::serialize_ordering(g, std::get<sgh::MinOrdering>(res));
        return 0;
    }
    if (std::holds_alternative<sgh::InvertiblePairCertificate>(res)) {
        std::cout << sgh::serialize_invertible_pair(g, std::get<sgh::InvertiblePairCertificate>(res));
        return 1;
    }
    std::cout << "BADSEED: " << std::get<sgh::BadSeed>(res).reason << "\n";
    return 2;
}

int run_solve(const std::string& template_path, const std::string& instance_path) {
    auto h = load_sg(template_path);
    auto cls = sgh::classify(h);
    if (cls.verdict != sgh::ClassificationResult::Verdict::polynomial) {
        std::cout << sgh::serialize_verdict(h, cls);
        return 2;
    }
    std::ifstream in(instance_path);
    if (!in) throw std::runtime_error("cannot open " + instance_path);
    auto parsed = sgh::parse_lhom(in);
    auto inst = sgh::bind_instance(std::move(parsed.g), cls.normalized, parsed.lists);
    auto out = sgh::solve(inst, *cls.ordering);
    if (!out.hom) {
        std::cout << "NONE\n";
        return 1;
    }
    for (int v = 0; v < inst.g.vertex_count(); ++v)
        std::cout << "MAP " << inst.g.name(v) << " -> "
                  << inst.templ.name(out.hom->assignment[static_cast<std::size_t>(v)]) << "\n";
    for (int v = 0; v < inst.g.vertex_count(); ++v)
        if (out.hom->switching[static_cast<std::size_t>(v)]) std::cout << "SWITCH " << inst.g.name(v) << "\n";
    return 0;
}

int run_verify(const std::string& kind, const std::string& cert_path, const std::string& graph_path, bool force_bip,
               bool force_refl) {
    auto g = load_sg(graph_path);
    std::ifstream in(cert_path);
    if (!in) throw std::runtime_error("cannot open " + cert_path);
    bool ok = false;
    std::string detail;
    if (kind == "chain") {
        auto c = sgh::parse_chain(g, in);
        auto r = sgh::verify_chain(g, c);
        ok = r.ok;
        detail = r.clause;
    } else if (kind == "invpair") {
        auto mode = detect_mode(g, force_bip, force_refl);
        auto c = sgh::parse_invertible_pair(g, in);
        ok = mode && sgh::verify_invertible_pair(g, *mode, c);
    } else if (kind == "ordering" || kind == "special-ordering") {
        auto mode = detect_mode(g, force_bip, force_refl);
        if (!mode) {
            std::cout << "fail: mixed graph\n";
            return 1;
        }
        auto ord = sgh::parse_ordering(g, *mode, in);
        if (kind == "ordering") {
            ok = sgh::verify_min_ordering(g, *mode, ord).ok;
        } else {
            auto r = sgh::verify_special_min_ordering(g, ord);
            ok = r.ok;
            if (!r.ok && !r.min_ordering_failed) detail = "special condition fails at " + g.name(r.z);
        }
    } else if (kind == "oddwalk") {
        auto w = sgh::parse_odd_walk(g, in);
        ok = sgh::check_odd_red_walk(g, w);
    } else {
        throw std::runtime_error("unknown certificate kind: " + kind);
    }
    std::cout << (ok ? "ok" : detail.empty() ? "fail" : "fail: " + detail) << "\n";
    return ok ? 0 : 1;
}

int run_gen(int part_a, int part_b, int refl_n, bool allow_red, bool weakly_balanced, bool chain_graphs,
            bool connected, bool random, std::uint64_t seed, int count) {
    sgh::EnumerationSpec spec;
    spec.mode = refl_n > 0 ? sgh::GraphMode::reflexive : sgh::GraphMode::bipartite;
    spec.part_a = part_a;
    spec.part_b = part_b;
    spec.n = refl_n;
    spec.allow_red = allow_red;
    spec.weakly_balanced_only = weakly_balanced;
    spec.chain_graph_only = chain_graphs;
    spec.connected_only = connected;

    int emitted = 0;
    auto emit = [&](const sgh::SignedGraph& g) {
        std::cout << "# graph " << emitted << "\n" << sgh::serialize_sg(g) << "\n";
        ++emitted;
    };
    if (!random) {
        sgh::enumerate_signed_graphs(spec, [&](const sgh::SignedGraph& g) {
            emit(g);
            return count <= 0 || emitted < count;
        });
        return 0;
    }
    std::mt19937_64 rng(seed);
    std::vector<sgh::EdgeSign> signs{sgh::EdgeSign::blue, sgh::EdgeSign::bicoloured};
    if (allow_red) signs.insert(signs.begin() + 1, sgh::EdgeSign::red);
    while (emitted < std::max(1, count)) {
        std::vector<std::string> names;
        std::vector<std::tuple<std::string, std::string, sgh::EdgeSign>> edges;
        if (spec.mode == sgh::GraphMode::bipartite) {
            for (int i = 1; i <= part_a; ++i) names.push_back("a" + std::to_string(i));
            for (int j = 1; j <= part_b; ++j) names.push_back("b" + std::to_string(j));
            for (int i = 0; i < part_a; ++i)
                for (int j = 0; j < part_b; ++j) {
                    auto roll = rng() % (signs.size() + 1);
                    if (roll == 0) continue;
                    edges.emplace_back(names[static_cast<std::size_t>(i)],
                                       names[static_cast<std::size_t>(part_a + j)], signs[roll - 1]);
                }
        } else {
            for (int i = 1; i <= refl_n; ++i) names.push_back("v" + std::to_string(i));
            for (int i = 0; i < refl_n; ++i)
                edges.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(i)],
                                   signs[rng() % signs.size()]);
            for (int i = 0; i < refl_n; ++i)
                for (int j = i + 1; j < refl_n; ++j) {
                    auto roll = rng() % (signs.size() + 1);
                    if (roll == 0) continue;
                    edges.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(j)],
                                       signs[roll - 1]);
                }
        }
        auto g = sgh::SignedGraph::make(names, edges);
        if (spec.weakly_balanced_only &&
            std::holds_alternative<sgh::OddRedClosedWalk>(sgh::normalize_weakly_balanced(g)))
            continue;
        if (spec.chain_graph_only && !sgh::is_bipartite_chain_graph(g)) continue;
        emit(g);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"min orderings and list homomorphisms of signed graphs"};
    app.require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "classify .sg templates (P / NP-complete, with certificates)");
    std::vector<std::string> classify_paths;
    int jobs = 1;
    classify->add_option("files", classify_paths, "input .sg files")->required()->expected(-1);
    classify->add_option("--jobs", jobs, "worker threads for batches");

    auto* order = app.add_subcommand("order", "build a min ordering, optionally extending seed pairs");
    std::string order_path, seed_path;
    bool force_bip = false, force_refl = false;
    order->add_option("file", order_path, "input .sg file")->required();
    order->add_option("--seed-pairs", seed_path, "file of 'x y' lines meaning x < y");
    order->add_flag("--bipartite", force_bip, "treat the graph as bipartite");
    order->add_flag("--reflexive", force_refl, "treat the graph as reflexive");

    auto* solve = app.add_subcommand("solve", "solve a .lhom instance against a polynomial template");
    std::string template_path, instance_path;
    solve->add_option("template", template_path, "template .sg file")->required();
    solve->add_option("instance", instance_path, "instance .lhom file")->required();

    auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
    std::string kind, cert_path, verify_graph;
    bool vbip = false, vrefl = false;
    verify->add_option("kind", kind, "chain | invpair | ordering | special-ordering | oddwalk")->required();
    verify->add_option("certificate", cert_path, "certificate file")->required();
    verify->add_option("graph", verify_graph, "graph .sg file")->required();
    verify->add_flag("--bipartite", vbip, "treat the graph as bipartite");
    verify->add_flag("--reflexive", vrefl, "treat the graph as reflexive");

    auto* gen = app.add_subcommand("gen", "enumerate or sample signed graphs as .sg blocks");
    std::vector<int> parts;
    int refl_n = 0, count = 0;
    bool allow_red = false, weakly_balanced = false, chain_graphs = false, connected = false, random = false;
    std::uint64_t seed = 1;
    gen->add_option("--parts", parts, "bipartite part sizes (two integers)")->expected(2);
    gen->add_option("-n,--reflexive-n", refl_n, "reflexive vertex count");
    gen->add_flag("--allow-red", allow_red, "include purely red edges in the alphabet");
    gen->add_flag("--weakly-balanced", weakly_balanced, "keep only weakly balanced graphs");
    gen->add_flag("--chain-graphs", chain_graphs, "keep only bipartite chain graphs");
    gen->add_flag("--connected", connected, "keep only connected graphs");
    gen->add_flag("--random", random, "sample instead of enumerating");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--count", count, "number of graphs (random mode; cap in enumeration)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify) return run_classify(classify_paths, jobs);
        if (*order) return run_order(order_path, seed_path, force_bip, force_refl);
        if (*solve) return run_solve(template_path, instance_path);
        if (*verify) return run_verify(kind, cert_path, verify_graph, vbip, vrefl);
        if (*gen)
            return run_gen(parts.size() == 2 ? parts[0] : 0, parts.size() == 2 ? parts[1] : 0, refl_n, allow_red,
                           weakly_balanced, chain_graphs, connected, random, seed, count);
    } catch (const sgh::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
