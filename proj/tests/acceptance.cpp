// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes. Failures list their first few counterexamples.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "ribbon/ribbon.hpp"

using namespace ribbon;

namespace {

struct Tally {
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<std::string> examples;

    void expect(bool ok, const std::function<std::string()>& describe)
    {
        ++checked;
        if (ok)
            return;
        ++failed;
        if (examples.size() < 3)
            examples.push_back(describe());
    }
};

std::vector<std::set<std::string>> subsets_of(const RibbonGraph& g) { return detail::ordered_subsets(g.labels()); }

std::string show(const RibbonGraph& g, const std::set<std::string>& a)
{
    std::string s = "A={";
    for (const auto& l : a)
        s += l + (l == *a.rbegin() ? "" : ",");
    return s + "} on\n" + write_srs(g);
}

const std::vector<RibbonGraph>& corpus()
{
    static const std::vector<RibbonGraph> c = [] {
        auto out = corpus_generate(3, 3).ribbon_graphs;
        for (const auto& [name, text] : fixtures::srs_texts())
            out.push_back(fixtures::named(name));
        return out;
    }();
    return c;
}

int failures = 0;

void line(int id, const std::string& what, const Tally& t, double seconds)
{
    const bool pass = t.failed == 0 && t.checked > 0;
    failures += pass ? 0 : 1;
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(1);
    s << "CRITERION " << id << (pass ? " PASS " : " FAIL ") << what << ": " << t.failed << " failures / " << t.checked
      << " checks (" << seconds << "s)";
    std::cout << s.str() << std::endl;
    for (const auto& e : t.examples)
        std::cout << "    counterexample: " << e << std::endl;
}

template <typename Fn>
void criterion(int id, const std::string& what, Fn&& body)
{
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
        body(t);
    } catch (const std::exception& e) {
        ++t.failed;
        t.examples.push_back(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
    line(id, what, t, spent.count());
}

} // namespace

int main()
{
    std::cout << "corpus: " << corpus().size() << " ribbon graphs (<= 3 vertices, <= 3 edges, plus "
              << fixtures::srs_texts().size() << " fixtures)" << std::endl;

    criterion(1, "involution (G^A)^A == G, labeled", [](Tally& t) {
        for (const auto& g : corpus())
            for (const auto& a : subsets_of(g))
                t.expect(equivalent(partial_dual(partial_dual(g, a).graph, a).graph, g, true), [&] { return show(g, a); });
    });

    criterion(2, "full dual G^E == G* and deletion G^A \\ A^c == (G \\ A^c)*", [](Tally& t) {
        for (const auto& g : corpus()) {
            t.expect(equivalent(partial_dual(g, g.labels()).graph, natural_dual(g).graph, true),
                     [&] { return "full dual on\n" + write_srs(g); });
            for (const auto& a : subsets_of(g)) {
                const auto ac = complement(g, a);
                t.expect(equivalent(delete_edges(partial_dual(g, a).graph, ac), natural_dual(delete_edges(g, ac)).graph,
                                    true),
                         [&] { return "deletion " + show(g, a); });
            }
        }
    });

    criterion(3, "v/p/genus identities, e, k and orientability preserved", [](Tally& t) {
        for (const auto& g : corpus())
            for (const auto& a : subsets_of(g))
                for (const auto& c : invariant_report(g, a).checks)
                    t.expect(c.holds(), [&] {
                        return c.name + ": " + std::to_string(c.lhs) + " vs " + std::to_string(c.rhs) + " " + show(g, a);
                    });
    });

    criterion(4, "boundary tracing == arrow-marked route, 16 reorientations each", [](Tally& t) {
        std::mt19937 rng(7);
        for (const auto& g : corpus()) {
            const auto ls_set = g.labels();
            const std::vector<std::string> ls(ls_set.begin(), ls_set.end());
            for (const auto& a : subsets_of(g)) {
                const auto via = partial_dual_via_arrow_marked(g, a).graph;
                t.expect(equivalent(partial_dual(g, a).graph, via, true), [&] { return show(g, a); });
                for (int k = 0; k < 16; ++k) {
                    std::set<std::string> flip;
                    for (const auto& l : ls)
                        if (rng() & 1U)
                            flip.insert(l);
                    t.expect(equivalent(partial_dual(g, a, flip).graph, via, true),
                             [&] { return "reoriented " + show(g, a); });
                }
            }
        }
    });

    const auto graphs = connected_multigraphs(4, 4);
    const auto pairs = unordered_pairs(graphs);
    std::cout << "graph corpus: " << graphs.size() << " connected multigraphs (<= 4 vertices, <= 4 edges), "
              << pairs.size() << " unordered pairs" << std::endl;

    criterion(5, "certificate search succeeds iff embedding oracle succeeds", [&](Tally& t) {
        SearchBudget budget; // serial, no time limit
        std::size_t yes = 0;
        for (const auto& r : cross_validate(pairs, budget)) {
            yes += r.theorem == Verdict::yes ? 1 : 0;
            t.expect(r.agree, [&] { return to_line(r); });
        }
        std::cout << "    partial-dual pairs: " << yes << std::endl;
    });

    criterion(6, "Edmonds check iff natural-dual oracle; realizations re-verify", [&](Tally& t) {
        SearchBudget budget;
        std::map<std::vector<int>, ReachIndex> index;
        for (const auto& g : graphs)
            index.try_emplace(multigraph_canonical_code(g), g, DualKind::natural, budget);
        std::size_t yes = 0;
        for (const auto& p : pairs) {
            const auto phi = edmonds_search(p.g, p.h);
            const bool embedded = index.at(multigraph_canonical_code(p.g)).find(p.h).has_value();
            yes += phi ? 1 : 0;
            t.expect(phi.has_value() == embedded, [&] {
                return p.id + " edmonds=" + (phi ? "yes" : "no") + " oracle=" + (embedded ? "yes" : "no");
            });
            if (!phi)
                continue;
            const auto r = edmonds_realize(p.g, p.h, *phi);
            t.expect(r && graph_isomorphic(core(*r), p.g) && graph_isomorphic(core(natural_dual(*r).graph), p.h),
                     [&] { return p.id + " realization failed to re-verify"; });
        }
        // the edgeless-vertex clause
        const auto one = parse_mg("vertex a\n");
        const auto two = parse_mg("vertex a\nvertex b\n");
        t.expect(edmonds_dual_check(two, two, {}).ok, [] { return "two isolated vertices"; });
        t.expect(!edmonds_dual_check(one, two, {}).ok, [] { return "isolated counts 1 vs 2"; });
        t.expect(!natural_dual_oracle(one, two).has_value(), [] { return "oracle on isolated counts 1 vs 2"; });
        std::cout << "    natural-dual pairs: " << yes << std::endl;
    });

    criterion(7, "fixture spot values", [](Tally& t) {
        const auto b2 = fixtures::b2_int();
        const auto pd = partial_dual(b2, {"e"}).graph;
        t.expect(boundary_count(fixtures::loop_u()) == 2, [] { return "LOOP_U p"; });
        t.expect(boundary_count(fixtures::loop_t()) == 1, [] { return "LOOP_T p"; });
        t.expect(!is_orientable(fixtures::loop_t()), [] { return "LOOP_T orientability"; });
        t.expect(invariants(b2).genus == 1, [] { return "B2_INT genus"; });
        t.expect(boundary_count(fixtures::theta()) == 3, [] { return "THETA p"; });
        t.expect(graph_isomorphic(core(pd), fixtures::dipole2_graph()).has_value(), [] { return "B2_INT^{e} core"; });
        t.expect(invariants(pd).genus == 0, [] { return "B2_INT^{e} genus"; });
        t.expect(enumerate_ribbon_structures(fixtures::theta_graph(), false).size() == 32, [] { return "theta count"; });
    });

    criterion(8, "write -> parse -> write is byte-identical", [&](Tally& t) {
        auto same = [&](const std::string& first, const std::string& second, const std::string& kind) {
            t.expect(first == second, [&] { return kind + ":\n" + first; });
        };
        for (const auto& g : corpus()) {
            const auto s = write_srs(g);
            same(write_srs(parse_srs(s)), s, "srs");
            const auto a = write_arp(to_arrow_presentation(g));
            same(write_arp(parse_arp(a)), a, "arp");
            for (const auto& sub : subsets_of(g)) {
                const auto p = write_pde(pd_embedding_build(g, sub));
                same(write_pde(parse_pde(p)), p, "pde");
                const auto b = write_certificate(partial_dual(g, sub).certificate);
                same(write_bij(parse_bij(b)), b, "bij");
            }
        }
        for (const auto& m : multigraph_corpus(4, 4)) {
            const auto s = write_mg(m);
            same(write_mg(parse_mg(s)), s, "mg");
        }
        for (const auto& p : pairs)
            if (const auto phi = edmonds_search(p.g, p.h)) {
                const auto b = write_bij(BijFile{std::nullopt, *phi});
                same(write_bij(parse_bij(b)), b, "bij");
            }
        for (const auto& name : {"V0", "LOOP_U", "LOOP_T", "B2_INT", "THETA", "DIPOLE2_R"}) {
            const auto file = read_file(std::string(RIBBON_FIXTURE_DIR) + "/" + name + ".srs");
            const auto once = write_srs(parse_srs(file));
            same(write_srs(parse_srs(once)), once, std::string("fixture ") + name);
        }
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
    return failures == 0 ? 0 : 1;
}
