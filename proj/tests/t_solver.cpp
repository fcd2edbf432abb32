#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sgh/classify.hpp"
#include "sgh/io.hpp"
#include "sgh/oracle.hpp"
#include "sgh/solver.hpp"

using namespace sgh;

namespace {

SignedGraph graph(const std::string& sg) { return parse_sg(sg); }

ListsInstance instance(const std::string& g, const std::string& h,
                       const std::vector<std::pair<std::string, std::vector<std::string>>>& lists = {}) {
    return bind_instance(parse_sg(g), parse_sg(h), lists);
}

SpecialMinOrdering ordering_of(const SignedGraph& h, GraphMode mode) {
    auto r = special_min_ordering(h, mode);
    REQUIRE(std::holds_alternative<SpecialMinOrdering>(r));
    return std::get<SpecialMinOrdering>(r);
}

// sign-preservation after the reported switching: unicoloured edges that stay
// blue may map anywhere, red ones must land on bicoloured template edges
bool switching_is_sign_preserving(const SignedGraph& g, const SignedGraph& h, const HomomorphismResult& res) {
    auto switched = apply_switching(g, res.switching);
    for (const Edge& e : switched.edges()) {
        auto hs = h.sign(res.assignment[static_cast<std::size_t>(e.u)], res.assignment[static_cast<std::size_t>(e.v)]);
        if (!hs) return false;
        if (e.sign == EdgeSign::bicoloured && *hs != EdgeSign::bicoloured) return false;
        if (e.sign == EdgeSign::red && *hs != EdgeSign::bicoloured) return false;
    }
    return true;
}

} // namespace

TEST_CASE("arc consistency removes unsupported entries") {
    // bicoloured instance edge against an all-blue template empties a list
    auto inst = instance("u v +-\n", "a b +\n");
    auto lists = inst.lists;
    auto emptied = arc_consistency(inst, lists);
    REQUIRE(emptied.has_value());

    // consistent lists are a fixpoint
    auto inst2 = instance("u v +\n", "a b +\n");
    std::vector<std::vector<int>> lists2{{inst2.templ.index_of("a")}, {inst2.templ.index_of("b")}};
    auto l2 = lists2;
    REQUIRE(!arc_consistency(inst2, l2).has_value());
    REQUIRE(l2 == lists2);

    // unary loop constraint: a bicoloured instance loop needs a bicoloured template loop
    auto inst3 = instance("u u +-\n", "a a +\nb b +-\na b +\n");
    auto l3 = inst3.lists;
    REQUIRE(!arc_consistency(inst3, l3).has_value());
    REQUIRE(l3[static_cast<std::size_t>(inst3.g.index_of("u"))] ==
            std::vector<int>{inst3.templ.index_of("b")});
}

TEST_CASE("min assignment picks list minima in the ordering") {
    auto h = graph("a b +\n");
    SpecialMinOrdering ord = ordering_of(h, GraphMode::bipartite);
    std::vector<std::vector<int>> lists{{h.index_of("a")}, {h.index_of("b")}};
    auto f = min_assignment(lists, ord.ordering, h.vertex_count());
    REQUIRE(f == std::vector<int>{h.index_of("a"), h.index_of("b")});
}

TEST_CASE("violation detection sees odd-red cycles over blue images") {
    auto g = graph("p q -\nq r +\nr s +\ns p +\n");
    auto h = graph("a b +\n");
    std::vector<int> f;
    for (int v = 0; v < 4; ++v) f.push_back(v % 2);
    auto viol = find_violation(g, h, f);
    REQUIRE(viol.has_value());
    REQUIRE(viol->walk.red_count % 2 == 1);
    REQUIRE(viol->image == std::vector<int>{0, 1});

    // everything mapped onto a bicoloured edge: no constraint
    auto hb = graph("a b +-\n");
    REQUIRE(!find_violation(g, hb, f).has_value());
}

TEST_CASE("solve on trivial templates") {
    // bicoloured-edge template accepts any even cycle with any signs
    auto h = graph("a b +-\n");
    auto ord = ordering_of(h, GraphMode::bipartite);
    auto inst = instance("p q -\nq r +\nr s +-\ns p +\n", "a b +-\n");
    auto out = solve(inst, ord);
    REQUIRE(out.hom.has_value());
    REQUIRE(verify_homomorphism(inst.g, inst.templ, out.hom->assignment, &inst.lists).ok);
    REQUIRE(switching_is_sign_preserving(inst.g, inst.templ, *out.hom));

    // blue-edge template rejects the odd-red 4-cycle
    auto h2 = graph("a b +\n");
    auto ord2 = ordering_of(h2, GraphMode::bipartite);
    auto inst2 = instance("p q -\nq r +\nr s +\ns p +\n", "a b +\n");
    REQUIRE(!solve(inst2, ord2).hom.has_value());

    // non-bipartite instance against a bipartite template
    auto inst3 = instance("p q +\nq r +\nr p +\n", "a b +\n");
    REQUIRE(!solve(inst3, ord2).hom.has_value());
}

TEST_CASE("solve handles lists, isolated vertices and multiple components") {
    auto h = graph("a1 b1 +-\na1 b2 +\na2 b2 +\n");
    auto ord = ordering_of(h, GraphMode::bipartite);
    auto inst = instance("u v +\nx y +\nvertex z\n", "a1 b1 +-\na1 b2 +\na2 b2 +\n",
                         {{"u", {"a2"}}, {"z", {"b1"}}});
    auto out = solve(inst, ord);
    REQUIRE(out.hom.has_value());
    REQUIRE(verify_homomorphism(inst.g, inst.templ, out.hom->assignment, &inst.lists).ok);
    REQUIRE(out.hom->assignment[static_cast<std::size_t>(inst.g.index_of("z"))] == inst.templ.index_of("b1"));

    // impossible list on an isolated vertex
    auto bad = instance("u v +\nvertex z\n", "a1 b1 +-\n", {{"z", {}}});
    REQUIRE(!solve(bad, ordering_of(bad.templ, GraphMode::bipartite)).hom.has_value());
}

TEST_CASE("side attachment: components can map either way around") {
    // template path a-b with one extra pendant: lists force the second
    // component to attach with flipped sides
    auto h = graph("a b +\n");
    auto ord = ordering_of(h, GraphMode::bipartite);
    auto inst = instance("u v +\nx y +\n", "a b +\n", {{"u", {"a"}}, {"x", {"b"}}});
    auto out = solve(inst, ord);
    REQUIRE(out.hom.has_value());
    REQUIRE(out.hom->assignment[static_cast<std::size_t>(inst.g.index_of("u"))] == inst.templ.index_of("a"));
    REQUIRE(out.hom->assignment[static_cast<std::size_t>(inst.g.index_of("x"))] == inst.templ.index_of("b"));
}

TEST_CASE("solver agrees with the exhaustive oracle on random bipartite instances") {
    std::mt19937_64 rng(555888);
    int done = 0;
    while (done < 120) {
        // random polynomial template
        int na = 1 + static_cast<int>(rng() % 3), nb = 1 + static_cast<int>(rng() % 3);
        std::vector<std::string> names;
        std::vector<std::tuple<std::string, std::string, EdgeSign>> hedges;
        for (int i = 0; i < na; ++i) names.push_back("a" + std::to_string(i));
        for (int j = 0; j < nb; ++j) names.push_back("b" + std::to_string(j));
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j) {
                int roll = static_cast<int>(rng() % 3);
                if (roll == 0) continue;
                hedges.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(na + j)],
                                    roll == 1 ? EdgeSign::blue : EdgeSign::bicoloured);
            }
        auto h = SignedGraph::make(names, hedges);
        auto cls = classify(h);
        if (cls.verdict != ClassificationResult::Verdict::polynomial) continue;

        // random bipartite instance with random signs and lists
        int nu = 1 + static_cast<int>(rng() % 3), nv = 1 + static_cast<int>(rng() % 3);
        std::vector<std::string> gnames;
        std::vector<std::tuple<std::string, std::string, EdgeSign>> gedges;
        for (int i = 0; i < nu; ++i) gnames.push_back("u" + std::to_string(i));
        for (int j = 0; j < nv; ++j) gnames.push_back("v" + std::to_string(j));
        for (int i = 0; i < nu; ++i)
            for (int j = 0; j < nv; ++j) {
                int roll = static_cast<int>(rng() % 4);
                if (roll == 0) continue;
                gedges.emplace_back(gnames[static_cast<std::size_t>(i)], gnames[static_cast<std::size_t>(nu + j)],
                                    roll == 1 ? EdgeSign::blue : roll == 2 ? EdgeSign::red : EdgeSign::bicoloured);
            }
        auto g = SignedGraph::make(gnames, gedges);
        ListsInstance inst;
        inst.g = g;
        inst.templ = cls.normalized;
        inst.lists.assign(static_cast<std::size_t>(g.vertex_count()), {});
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (int x = 0; x < inst.templ.vertex_count(); ++x)
                if (rng() % 4 != 0) inst.lists[static_cast<std::size_t>(v)].push_back(x);
        }
        auto mine = solve(inst, *cls.ordering);
        auto truth = brute_list_hom(inst);
        REQUIRE(mine.hom.has_value() == truth.has_value());
        if (mine.hom) {
            REQUIRE(verify_homomorphism(inst.g, inst.templ, mine.hom->assignment, &inst.lists).ok);
            REQUIRE(switching_is_sign_preserving(inst.g, inst.templ, *mine.hom));
        }
        REQUIRE(mine.max_phases <= std::max(1, inst.g.vertex_count() * inst.templ.vertex_count()));
        ++done;
    }
}

TEST_CASE("solver agrees with the oracle on random reflexive instances") {
    std::mt19937_64 rng(99119922);
    int done = 0;
    while (done < 120) {
        int nh = 2 + static_cast<int>(rng() % 3);
        std::vector<std::string> names;
        std::vector<std::tuple<std::string, std::string, EdgeSign>> hedges;
        for (int i = 0; i < nh; ++i) {
            names.push_back("h" + std::to_string(i));
            hedges.emplace_back(names.back(), names.back(), rng() % 2 ? EdgeSign::blue : EdgeSign::bicoloured);
        }
        for (int i = 0; i < nh; ++i)
            for (int j = i + 1; j < nh; ++j) {
                int roll = static_cast<int>(rng() % 3);
                if (roll == 0) continue;
                hedges.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(j)],
                                    roll == 1 ? EdgeSign::blue : EdgeSign::bicoloured);
            }
        auto h = SignedGraph::make(names, hedges, GraphMode::reflexive);
        auto cls = classify(h);
        if (cls.verdict != ClassificationResult::Verdict::polynomial) continue;

        int ng = 1 + static_cast<int>(rng() % 4);
        std::vector<std::string> gnames;
        std::vector<std::tuple<std::string, std::string, EdgeSign>> gedges;
        for (int i = 0; i < ng; ++i) gnames.push_back("g" + std::to_string(i));
        for (int i = 0; i < ng; ++i)
            for (int j = i; j < ng; ++j) {
                int roll = static_cast<int>(rng() % 4);
                if (roll == 0) continue;
                gedges.emplace_back(gnames[static_cast<std::size_t>(i)], gnames[static_cast<std::size_t>(j)],
                                    roll == 1 ? EdgeSign::blue : roll == 2 ? EdgeSign::red : EdgeSign::bicoloured);
            }
        auto g = SignedGraph::make(gnames, gedges);
        ListsInstance inst;
        inst.g = g;
        inst.templ = cls.normalized;
        inst.lists.assign(static_cast<std::size_t>(g.vertex_count()), {});
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int x = 0; x < inst.templ.vertex_count(); ++x)
                if (rng() % 4 != 0) inst.lists[static_cast<std::size_t>(v)].push_back(x);
        auto mine = solve(inst, *cls.ordering);
        auto truth = brute_list_hom(inst);
        REQUIRE(mine.hom.has_value() == truth.has_value());
        if (mine.hom) {
            REQUIRE(verify_homomorphism(inst.g, inst.templ, mine.hom->assignment, &inst.lists).ok);
            REQUIRE(switching_is_sign_preserving(inst.g, inst.templ, *mine.hom));
        }
        ++done;
    }
}

TEST_CASE("repair phases fire when the minimum image is all blue") {
    // template: a blue edge in an early component, a bicoloured one later;
    // the first minimum assignment maps an odd-red cycle onto the blue edge
    // and the removal rule pushes it to the bicoloured component
    auto h = graph("a1 b1 +\na2 b2 +-\n");
    auto cls = classify(h);
    REQUIRE(cls.verdict == ClassificationResult::Verdict::polynomial);
    auto inst = instance("p q -\nq r +\nr s +\ns p +\n", "a1 b1 +\na2 b2 +-\n");
    auto out = solve(inst, *cls.ordering);
    REQUIRE(out.hom.has_value());
    REQUIRE(out.max_phases >= 2);
    REQUIRE(verify_homomorphism(inst.g, inst.templ, out.hom->assignment, &inst.lists).ok);
    REQUIRE(switching_is_sign_preserving(inst.g, inst.templ, *out.hom));

    // forced lists turn the same shape into an unsatisfiable instance, again
    // through at least one repair phase
    auto h2 = graph("a1 b1 +\na1 b2 +-\na2 b2 +\n");
    auto cls2 = classify(h2);
    REQUIRE(cls2.verdict == ClassificationResult::Verdict::polynomial);
    auto inst2 = instance("p q -\nq r +\nr s +\ns p +\n", "a1 b1 +\na1 b2 +-\na2 b2 +\n",
                          {{"q", {"b1"}}, {"s", {"b1"}}});
    auto out2 = solve(inst2, *cls2.ordering);
    REQUIRE(!out2.hom.has_value());
    REQUIRE(out2.max_phases >= 2);
    REQUIRE(!brute_list_hom(inst2).has_value());
}
