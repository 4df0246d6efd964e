#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace ribbon;
using oracle::mg;

namespace {

// (d_v - 1)! per vertex with edges, times 2^e
std::size_t product_formula(const Multigraph& m)
{
    std::size_t n = 1;
    for (const auto& v : m.vertices())
        for (std::size_t k = 2; k < degree(m, v); ++k)
            n *= k;
    return n << m.num_edges();
}

// Same vertex ids, same rotations up to cyclic shift, same twists.
bool same_up_to_shifts(const RibbonGraph& a, const RibbonGraph& b)
{
    if (a.twists() != b.twists() || a.num_vertices() != b.num_vertices())
        return false;
    for (std::size_t i = 0; i < a.num_vertices(); ++i)
        if (a.vertices()[i].id != b.vertices()[i].id ||
            oracle::detail::least_rotation(a.vertices()[i].rotation) !=
                oracle::detail::least_rotation(b.vertices()[i].rotation))
            return false;
    return true;
}

} // namespace

TEST_CASE("structure counts follow the product formula", "[certify][enumerate]")
{
    CHECK(enumerate_ribbon_structures(fixtures::theta_graph(), false).size() == 32);
    CHECK(enumerate_ribbon_structures(fixtures::bouquet2_graph(), false).size() == 24);
    CHECK(enumerate_ribbon_structures(mg("vertex v\n"), false).size() == 1);
    for (const auto& m : multigraph_corpus(3, 3))
        CHECK(enumerate_ribbon_structures(m, false).size() == product_formula(m));
}

TEST_CASE("enumerated structures have the right core and are distinct", "[certify][enumerate]")
{
    for (const auto& m : multigraph_corpus(2, 3)) {
        const auto all = enumerate_ribbon_structures(m, false);
        std::set<std::string> texts;
        for (const auto& r : all) {
            CHECK(core(r) == m);
            texts.insert(write_srs(r));
        }
        CHECK(texts.size() == all.size());
    }
}

TEST_CASE("dedup keeps one structure per flip class", "[certify][enumerate]")
{
    for (const auto& m : multigraph_corpus(2, 3)) {
        const auto all = enumerate_ribbon_structures(m, false);
        const auto reps = enumerate_ribbon_structures(m, true);
        // every structure is flip-equivalent to exactly one representative
        for (const auto& r : all) {
            std::size_t hits = 0;
            for (const auto& s : reps)
                hits += oracle::equivalent(r, s, true) ? 1 : 0;
            CHECK(hits >= 1);
        }
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                // distinct representatives differ by more than vertex flips
                bool flip_related = false;
                const auto n = reps[i].num_vertices();
                for (unsigned long mask = 0; mask < (1UL << n) && !flip_related; ++mask) {
                    auto f = reps[i];
                    for (std::size_t v = 0; v < n; ++v)
                        if ((mask >> v) & 1UL)
                            f = vertex_flip(f, f.vertices()[v].id);
                    flip_related = same_up_to_shifts(f, reps[j]);
                }
                CHECK_FALSE(flip_related);
            }
    }
    CHECK(enumerate_ribbon_structures(fixtures::theta_graph(), true).size() == 8);
}

TEST_CASE("budget limits are a distinct outcome", "[certify][budget]")
{
    SearchBudget tiny;
    tiny.max_edges = 2;
    CHECK_THROWS_AS(enumerate_ribbon_structures(fixtures::theta_graph(), false, tiny), BudgetExceeded);
    CHECK_THROWS_AS(partial_dual_oracle(fixtures::theta_graph(), fixtures::theta_graph(), tiny), BudgetExceeded);
    CHECK_THROWS_AS(theorem_search(fixtures::theta_graph(), fixtures::theta_graph(), tiny), BudgetExceeded);

    const auto reports = cross_validate({MultigraphPair{"t", fixtures::theta_graph(), fixtures::theta_graph()}}, tiny);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].theorem == Verdict::budget);
    CHECK(reports[0].oracle == Verdict::budget);
    CHECK_FALSE(reports[0].agree);
    CHECK(to_line(reports[0]) == "PAIR t THEOREM budget ORACLE budget AGREE no");
}

TEST_CASE("oracle examples", "[certify][oracle]")
{
    const auto loop = mg("vertex v\nedge e: v v\n");
    const auto edge = mg("vertex a\nvertex b\nedge e: a b\n");
    const auto w = partial_dual_oracle(loop, edge);
    REQUIRE(w.has_value());
    CHECK(w->subset == std::set<std::string>{"e"});

    const auto dipole3 = fixtures::theta_graph();
    const auto c3 = mg("vertex x\nvertex y\nvertex z\nedge p: x y\nedge q: y z\nedge r: z x\n");
    const auto t = partial_dual_oracle(dipole3, c3);
    REQUIRE(t.has_value());
    CHECK(t->subset == dipole3.labels());
    CHECK(graph_isomorphic(core(partial_dual(t->structure, t->subset).graph), c3).has_value());

    CHECK_FALSE(partial_dual_oracle(loop, fixtures::bouquet2_graph()).has_value());
}

TEST_CASE("certificate search examples", "[certify][theorem]")
{
    const auto theta = fixtures::theta_graph();
    const auto same = theorem_search(theta, theta);
    REQUIRE(same.has_value());
    CHECK(same->subset.empty());
    CHECK(same->map == EdgeBijection{{"a", "a"}, {"b", "b"}, {"c", "c"}});

    const auto c = theorem_search(fixtures::bouquet2_graph(), fixtures::dipole2_graph());
    REQUIRE(c.has_value());
    CHECK(c->subset.size() == 1);
    CHECK(theorem_check(fixtures::bouquet2_graph(), fixtures::dipole2_graph(), *c).ok);
}

TEST_CASE("pruning never changes the verdict", "[certify][theorem]")
{
    const auto graphs = multigraph_corpus(3, 3);
    for (const auto& g : graphs)
        for (const auto& h : graphs)
            CHECK(theorem_search(g, h, {}, true).has_value() == theorem_search(g, h, {}, false).has_value());
}

TEST_CASE("cached and uncached oracles agree, serial and parallel match", "[certify][cross]")
{
    const auto pairs = unordered_pairs(connected_multigraphs(3, 3));
    SearchBudget serial;
    SearchBudget parallel;
    parallel.parallel = true;
    const auto cached = cross_validate(pairs, serial, true);
    const auto direct = cross_validate(pairs, serial, false);
    const auto fanned = cross_validate(pairs, parallel, true);
    REQUIRE(cached.size() == pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        INFO(to_line(cached[i]));
        CHECK(cached[i].agree);
        CHECK(to_line(cached[i]) == to_line(direct[i]));
        CHECK(to_line(cached[i]) == to_line(fanned[i]));
        CHECK(cached[i].theorem_result == fanned[i].theorem_result);
        if (cached[i].oracle_result && direct[i].oracle_result) {
            CHECK(cached[i].oracle_result->subset == direct[i].oracle_result->subset);
            CHECK(cached[i].oracle_result->structure == direct[i].oracle_result->structure);
        }
    }
}

TEST_CASE("edge-count mismatches are negative for both deciders", "[certify][cross]")
{
    const auto reports = cross_validate({MultigraphPair{"m", mg("vertex v\nedge e: v v\n"), fixtures::theta_graph()}}, {});
    CHECK(to_line(reports[0]) == "PAIR m THEOREM no ORACLE no AGREE yes");
}

TEST_CASE("multigraph corpus is isomorphism-free", "[certify][corpus]")
{
    const auto ms = multigraph_corpus(3, 3);
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            CHECK_FALSE(graph_isomorphic(ms[i], ms[j]).has_value());
    // one vertex and at most one edge: an isolated vertex and a loop
    CHECK(multigraph_corpus(1, 1).size() == 2);
}
