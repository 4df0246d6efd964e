// Command-line front end over the ribbon graph library.
//
// Exit codes: 0 success/true, 1 false or violations (listed on stderr),
// 2 parse error, 3 validation error, 4 budget exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "ribbon/ribbon.hpp"

namespace {

using namespace ribbon;

enum Exit { ok = 0, violated = 1, parse_failed = 2, invalid = 3, over_budget = 4 };

std::string format_flag;

Format input_format(const std::string& path)
{
    if (!format_flag.empty()) {
        if (const auto f = format_from_name(format_flag))
            return *f;
        throw ParseError("unknown format '" + format_flag + "'");
    }
    if (const auto f = format_from_path(path))
        return *f;
    throw ParseError("cannot tell the format of '" + path + "'; pass --format");
}

RibbonGraph load_ribbon(const std::string& path) { return parse_ribbon(read_file(path), input_format(path)); }

Multigraph load_multigraph(const std::string& path)
{
    const auto f = input_format(path);
    const auto text = read_file(path);
    if (f == Format::mg)
        return parse_mg(text);
    // a ribbon graph stands in for its core
    return core(parse_ribbon(text, f));
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty())
        std::cout << text;
    else
        write_file(out, text);
}

int report(const CheckResult& r)
{
    for (const auto& v : r.violations)
        std::cerr << to_string(v) << "\n";
    std::cout << (r.ok ? "ok" : "violated") << "\n";
    return r.ok ? ok : violated;
}

std::set<std::string> split_labels(const std::string& list)
{
    std::set<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.insert(item);
    return out;
}

int selftest()
{
    struct Probe {
        std::string name;
        bool passed;
    };
    std::vector<Probe> probes;
    const auto b2 = fixtures::b2_int();
    const auto pd = partial_dual(b2, {"e"}).graph;
    probes.push_back({"LOOP_U p=2", boundary_count(fixtures::loop_u()) == 2});
    probes.push_back({"LOOP_T p=1 non-orientable",
                      boundary_count(fixtures::loop_t()) == 1 && !is_orientable(fixtures::loop_t())});
    probes.push_back({"B2_INT genus 1", invariants(b2).genus == 1});
    probes.push_back({"THETA p=3", boundary_count(fixtures::theta()) == 3});
    probes.push_back({"core(B2_INT^{e}) is a plane dipole",
                      graph_isomorphic(core(pd), fixtures::dipole2_graph()).has_value() && invariants(pd).genus == 0});
    probes.push_back({"theta structures = 32", enumerate_ribbon_structures(fixtures::theta_graph(), false).size() == 32});
    bool involution = true, roundtrip = true;
    for (const auto& [name, text] : fixtures::srs_texts()) {
        const auto g = parse_srs(text);
        roundtrip = roundtrip && write_srs(parse_srs(write_srs(g))) == write_srs(g);
        for (const auto& a : detail::ordered_subsets(g.labels()))
            involution = involution && equivalent(partial_dual(partial_dual(g, a).graph, a).graph, g, true);
    }
    probes.push_back({"fixture involutions", involution});
    probes.push_back({"fixture round trips", roundtrip});

    int failed = 0;
    for (const auto& p : probes) {
        std::cout << (p.passed ? "ok   " : "FAIL ") << p.name << "\n";
        if (!p.passed) {
            std::cerr << "selftest [" << p.name << "] failed\n";
            ++failed;
        }
    }
    return failed == 0 ? ok : violated;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ribbon graphs, partial duality and Edmonds-type criteria"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", format_flag, "Input kind when the extension is ambiguous (srs, arp, mg, bij, pde)");

    std::string in1, in2, in3, out, edges;
    bool labeled = false, dedup = false, parallel = false, no_cache = false;
    SearchBudget budget;
    std::size_t max_v = 4, max_e = 4;
    std::function<int()> action;

    auto* inv = app.add_subcommand("invariants", "Print v, e, k, p, orientability and genus");
    inv->add_option("file", in1)->required();
    inv->callback([&] { action = [&] {
        std::cout << to_string(invariants(load_ribbon(in1))) << "\n";
        return ok;
    }; });

    auto* dual = app.add_subcommand("dual", "Natural dual");
    dual->add_option("file", in1)->required();
    dual->add_option("-o,--output", out);
    dual->callback([&] { action = [&] {
        emit(write_srs(natural_dual(load_ribbon(in1)).graph), out);
        return ok;
    }; });

    auto* pd = app.add_subcommand("partial-dual", "Partial dual with respect to an edge subset");
    pd->add_option("file", in1)->required();
    pd->add_option("--edges", edges, "Comma-separated edge labels")->required();
    pd->add_option("-o,--output", out);
    pd->callback([&] { action = [&] {
        emit(write_srs(partial_dual(load_ribbon(in1), split_labels(edges)).graph), out);
        return ok;
    }; });

    auto* cor = app.add_subcommand("core", "Underlying multigraph");
    cor->add_option("file", in1)->required();
    cor->add_option("-o,--output", out);
    cor->callback([&] { action = [&] {
        emit(write_mg(core(load_ribbon(in1))), out);
        return ok;
    }; });

    auto* eq = app.add_subcommand("equiv", "Decide ribbon graph equivalence");
    eq->add_option("first", in1)->required();
    eq->add_option("second", in2)->required();
    eq->add_flag("--labeled", labeled, "Keep edge labels fixed");
    eq->callback([&] { action = [&] {
        const bool same = equivalent(load_ribbon(in1), load_ribbon(in2), labeled);
        std::cout << (same ? "equivalent" : "not equivalent") << "\n";
        if (!same)
            std::cerr << "equivalence [" << in1 << "," << in2 << "] no sequence of moves relates the inputs\n";
        return same ? ok : violated;
    }; });

    auto* ce = app.add_subcommand("check-edmonds", "Check Edmonds' criteria for an edge bijection");
    ce->add_option("first", in1, "Multigraph G")->required();
    ce->add_option("second", in2, "Multigraph H")->required();
    ce->add_option("map", in3)->required();
    ce->callback([&] { action = [&] {
        return report(edmonds_dual_check(load_multigraph(in1), load_multigraph(in2), parse_bij(read_file(in3)).map));
    }; });

    auto* ct = app.add_subcommand("check-theorem", "Check a partial-duality certificate");
    ct->add_option("first", in1, "Multigraph G")->required();
    ct->add_option("second", in2, "Multigraph H")->required();
    ct->add_option("cert", in3)->required();
    ct->callback([&] { action = [&] {
        return report(theorem_check(load_multigraph(in1), load_multigraph(in2), parse_bij(read_file(in3)).certificate()));
    }; });

    auto* fc = app.add_subcommand("find-certificate", "Search for a partial-duality certificate");
    fc->add_option("first", in1, "Multigraph G")->required();
    fc->add_option("second", in2, "Multigraph H")->required();
    fc->add_option("--max-edges", budget.max_edges);
    fc->add_option("--max-seconds", budget.max_seconds);
    fc->add_option("-o,--output", out);
    fc->callback([&] { action = [&] {
        const auto cert = theorem_search(load_multigraph(in1), load_multigraph(in2), budget);
        if (!cert) {
            std::cerr << "search [" << in1 << "," << in2 << "] no certificate exists\n";
            return static_cast<int>(violated);
        }
        emit(write_certificate(*cert), out);
        return static_cast<int>(ok);
    }; });

    auto* en = app.add_subcommand("enumerate", "Stream every ribbon structure over a multigraph");
    en->add_option("graph", in1, "Multigraph")->required();
    en->add_flag("--dedup", dedup, "One structure per vertex-flip class");
    en->add_option("--max-edges", budget.max_edges);
    en->callback([&] { action = [&] {
        std::size_t n = 0;
        for_each_ribbon_structure(load_multigraph(in1), dedup, budget, [&](const RibbonGraph& r) {
            std::cout << "# structure " << ++n << "\n" << write_srs(r);
            return true;
        });
        return ok;
    }; });

    auto* cv = app.add_subcommand("cross-validate", "Compare the certificate search with embedding enumeration");
    cv->add_option("--max-v", max_v);
    cv->add_option("--max-e", max_e);
    cv->add_option("--max-seconds", budget.max_seconds);
    cv->add_flag("--parallel", parallel);
    cv->add_flag("--no-cache", no_cache, "Run the embedding oracle afresh for every pair");
    cv->callback([&] { action = [&] {
        budget.parallel = parallel;
        budget.max_edges = std::max(budget.max_edges, max_e);
        const auto pairs = unordered_pairs(connected_multigraphs(max_v, max_e));
        const auto reports = cross_validate(pairs, budget, !no_cache);
        bool budget_hit = false, disagreed = false;
        for (const auto& r : reports) {
            std::cout << to_line(r) << "\n";
            budget_hit = budget_hit || r.theorem == Verdict::budget || r.oracle == Verdict::budget;
            if (!r.agree) {
                disagreed = true;
                std::cerr << "agreement [" << r.pair_id << "] deciders differ\n";
            }
        }
        return budget_hit ? over_budget : disagreed ? violated : ok;
    }; });

    auto* st = app.add_subcommand("selftest", "Check the fixture spot values");
    st->callback([&] { action = selftest; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return parse_failed;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse_failed;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return invalid;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return over_budget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return parse_failed;
    }
}
