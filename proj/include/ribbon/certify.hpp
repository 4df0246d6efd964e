#pragma once

// Exhaustive desk-scale deciders.
//
// The embedding oracle enumerates every ribbon structure over a multigraph
// and every edge subset, computing partial duals directly. The certificate
// search enumerates subsets and edge bijections and runs the three-condition
// checker. Cross-validation runs both and compares verdicts.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"
#include "graph_duality.hpp"
#include "multigraph.hpp"
#include "natural_dual.hpp"
#include "partial_dual.hpp"
#include "ribbon_graph.hpp"

namespace ribbon {

struct SearchBudget {
    std::size_t max_edges = 8;
    double max_seconds = 0.0; ///< 0 means unlimited
    bool parallel = false;
};

namespace detail {

class Deadline {
public:
    explicit Deadline(const SearchBudget& b)
        : limit_(b.max_seconds), start_(std::chrono::steady_clock::now())
    {
    }
    void check(const char* what) const
    {
        if (limit_ <= 0.0)
            return;
        const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
        if (spent.count() > limit_)
            throw BudgetExceeded(std::string(what) + ": time budget exceeded");
    }

private:
    double limit_;
    std::chrono::steady_clock::time_point start_;
};

inline void check_edges(std::size_t edges, const SearchBudget& b, const char* what)
{
    if (edges > b.max_edges)
        throw BudgetExceeded(std::string(what) + ": " + std::to_string(edges) + " edges exceeds max_edges=" +
                             std::to_string(b.max_edges));
}

/// All subsets of `labels`, by size and then lexicographically.
inline std::vector<std::set<std::string>> ordered_subsets(const std::set<std::string>& labels)
{
    const std::vector<std::string> ls(labels.begin(), labels.end());
    std::vector<std::vector<std::string>> subsets;
    for (unsigned long mask = 0; mask < (1UL << ls.size()); ++mask) {
        std::vector<std::string> s;
        for (std::size_t i = 0; i < ls.size(); ++i)
            if ((mask >> i) & 1UL)
                s.push_back(ls[i]);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<std::set<std::string>> out;
    for (auto& s : subsets)
        out.emplace_back(s.begin(), s.end());
    return out;
}

inline bool quick_isomorphic(const Multigraph& a, const Multigraph& b)
{
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
        return false;
    return graph_isomorphic(a, b).has_value();
}

} // namespace detail

/// Visits every signed rotation system with core exactly `m` (end 0 of each
/// edge at its first listed endpoint). Order is lexicographic in
/// (rotation at each vertex in vertex order, twist bits in label order).
/// With `dedup`, only the first member of each vertex-flip class is visited.
/// The visitor returns false to stop early.
inline void for_each_ribbon_structure(const Multigraph& m, bool dedup, const SearchBudget& budget,
                                      const std::function<bool(const RibbonGraph&)>& visit)
{
    detail::check_edges(m.num_edges(), budget, "enumerate_ribbon_structures");
    const detail::Deadline deadline(budget);

    std::vector<std::string> labels;
    for (const auto& [l, e] : m.edges())
        labels.push_back(l);
    const std::size_t ne = labels.size();
    const std::size_t nv = m.num_vertices();

    // half-edge index 2*edge+end; per vertex sorted ascending
    std::vector<std::vector<int>> at(nv);
    for (std::size_t e = 0; e < ne; ++e) {
        const auto& ends = m.ends(labels[e]);
        at[m.index_of(ends.first)].push_back(static_cast<int>(2 * e));
        at[m.index_of(ends.second)].push_back(static_cast<int>(2 * e + 1));
    }
    for (auto& a : at)
        std::sort(a.begin(), a.end());

    // per-vertex flip effect on twists: edges with exactly one end here
    std::vector<std::vector<int>> toggles(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        std::map<int, int> hits;
        for (int h : at[v])
            ++hits[h >> 1];
        for (auto [e, n] : hits)
            if (n == 1)
                toggles[v].push_back(e);
    }
    std::vector<std::size_t> flippable;
    for (std::size_t v = 0; v < nv; ++v)
        if (!at[v].empty())
            flippable.push_back(v);

    std::vector<std::vector<int>> rot = at;
    std::vector<int> twist(ne, 0);

    auto encode = [&](const std::vector<std::vector<int>>& r, const std::vector<int>& t) {
        std::vector<int> code;
        for (const auto& x : r)
            code.insert(code.end(), x.begin(), x.end());
        code.insert(code.end(), t.begin(), t.end());
        return code;
    };
    auto is_representative = [&]() {
        const auto mine = encode(rot, twist);
        const std::size_t nf = flippable.size();
        for (unsigned long mask = 1; mask < (1UL << nf); ++mask) {
            auto r = rot;
            auto t = twist;
            for (std::size_t i = 0; i < nf; ++i) {
                if (!((mask >> i) & 1UL))
                    continue;
                const std::size_t v = flippable[i];
                // reversed cycle, still starting at its smallest element
                std::reverse(r[v].begin() + 1, r[v].end());
                for (int e : toggles[v])
                    t[static_cast<std::size_t>(e)] ^= 1;
            }
            if (encode(r, t) < mine)
                return false;
        }
        return true;
    };
    auto emit = [&]() {
        RawRotation raw;
        for (std::size_t v = 0; v < nv; ++v) {
            Vertex vx{m.vertices()[v], {}};
            for (int h : rot[v])
                vx.rotation.push_back(HalfEdge{labels[static_cast<std::size_t>(h >> 1)], h & 1});
            raw.vertices.push_back(std::move(vx));
        }
        for (std::size_t e = 0; e < ne; ++e)
            raw.edges.emplace_back(labels[e], twist[e] != 0);
        return validate_rotation(raw);
    };

    std::size_t visited = 0;
    auto twists_loop = [&]() -> bool {
        for (unsigned long bits = 0; bits < (1UL << ne); ++bits) {
            for (std::size_t e = 0; e < ne; ++e)
                twist[e] = static_cast<int>((bits >> (ne - 1 - e)) & 1UL);
            if ((++visited & 0xfff) == 0)
                deadline.check("enumerate_ribbon_structures");
            if (dedup && !is_representative())
                continue;
            if (!visit(emit()))
                return false;
        }
        return true;
    };
    auto vertex_loop = [&](auto&& self, std::size_t v) -> bool {
        if (v == nv)
            return twists_loop();
        auto& r = rot[v];
        if (r.size() <= 2)
            return self(self, v + 1);
        std::sort(r.begin() + 1, r.end());
        do {
            if (!self(self, v + 1))
                return false;
        } while (std::next_permutation(r.begin() + 1, r.end()));
        return true;
    };
    vertex_loop(vertex_loop, 0);
}

inline std::vector<RibbonGraph> enumerate_ribbon_structures(const Multigraph& m, bool dedup,
                                                            const SearchBudget& budget = {})
{
    std::vector<RibbonGraph> out;
    for_each_ribbon_structure(m, dedup, budget, [&](const RibbonGraph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

struct OracleWitness {
    RibbonGraph structure;
    std::set<std::string> subset;
};

enum class DualKind { partial, natural };

/// Every multigraph reachable from ribbon structures over one source graph,
/// keyed by canonical code and remembering the first witness in search order.
class ReachIndex {
public:
    ReachIndex(const Multigraph& source, DualKind kind, const SearchBudget& budget) : kind_(kind)
    {
        for_each_ribbon_structure(source, true, budget, [&](const RibbonGraph& r) {
            if (kind_ == DualKind::natural) {
                record(core(natural_dual(r).graph), r, r.labels());
            } else {
                for (const auto& a : detail::ordered_subsets(r.labels()))
                    record(core(partial_dual(r, a).graph), r, a);
            }
            return true;
        });
    }

    /// First witness whose dual core is isomorphic to `target`, re-verified.
    std::optional<OracleWitness> find(const Multigraph& target) const
    {
        const auto it = reached_.find(multigraph_canonical_code(target));
        if (it == reached_.end())
            return std::nullopt;
        const auto& w = it->second;
        const auto dual = kind_ == DualKind::natural ? natural_dual(w.structure).graph
                                                     : partial_dual(w.structure, w.subset).graph;
        if (!detail::quick_isomorphic(core(dual), target))
            throw Error("oracle witness failed re-verification");
        return w;
    }

    std::size_t size() const { return reached_.size(); }

private:
    void record(const Multigraph& dual_core, const RibbonGraph& r, const std::set<std::string>& a)
    {
        reached_.try_emplace(multigraph_canonical_code(dual_core), OracleWitness{r, a});
    }

    DualKind kind_;
    std::map<std::vector<int>, OracleWitness> reached_;
};

/// Searches ribbon structures R over G and subsets A for core(R^A) = H.
inline std::optional<OracleWitness> partial_dual_oracle(const Multigraph& g, const Multigraph& h,
                                                        const SearchBudget& budget = {})
{
    if (g.num_edges() != h.num_edges())
        return std::nullopt;
    detail::check_edges(g.num_edges(), budget, "partial_dual_oracle");
    std::optional<OracleWitness> found;
    for_each_ribbon_structure(g, true, budget, [&](const RibbonGraph& r) {
        for (const auto& a : detail::ordered_subsets(r.labels())) {
            if (detail::quick_isomorphic(core(partial_dual(r, a).graph), h)) {
                found = OracleWitness{r, a};
                return false;
            }
        }
        return true;
    });
    if (found && !detail::quick_isomorphic(core(found->structure), g))
        throw Error("oracle witness has the wrong core");
    return found;
}

/// Same search with A fixed to every edge: is H the core of a natural dual?
inline std::optional<RibbonGraph> natural_dual_oracle(const Multigraph& g, const Multigraph& h,
                                                      const SearchBudget& budget = {})
{
    if (g.num_edges() != h.num_edges())
        return std::nullopt;
    detail::check_edges(g.num_edges(), budget, "natural_dual_oracle");
    std::optional<RibbonGraph> found;
    for_each_ribbon_structure(g, true, budget, [&](const RibbonGraph& r) {
        if (detail::quick_isomorphic(core(natural_dual(r).graph), h)) {
            found = r;
            return false;
        }
        return true;
    });
    return found;
}

/// Visits bijections E(G) -> E(H) in lexicographic order of the image list.
inline void for_each_bijection(const Multigraph& g, const Multigraph& h,
                               const std::function<bool(const EdgeBijection&)>& visit)
{
    if (g.num_edges() != h.num_edges())
        return;
    std::vector<std::string> src, dst;
    for (const auto& [l, e] : g.edges())
        src.push_back(l);
    for (const auto& [l, e] : h.edges())
        dst.push_back(l);
    do {
        EdgeBijection phi;
        for (std::size_t i = 0; i < src.size(); ++i)
            phi.emplace(src[i], dst[i]);
        if (!visit(phi))
            return;
    } while (std::next_permutation(dst.begin(), dst.end()));
}

namespace detail {

// Necessary for condition 3: a vertex untouched by A needs a partner in H
// with the same degree and the same number of loops.
inline bool untouched_vertices_have_partners(const Multigraph& g, const Multigraph& h, const std::set<std::string>& a)
{
    auto profile = [](const Multigraph& m, const std::string& v) {
        int deg = 0, loops = 0;
        for (const auto& [l, e] : m.edges()) {
            const int k = m.ends_at(l, v);
            deg += k;
            loops += k == 2 ? 1 : 0;
        }
        return std::make_pair(deg, loops);
    };
    std::set<std::pair<int, int>> available;
    for (const auto& w : h.vertices())
        available.insert(profile(h, w));
    for (const auto& v : g.vertices()) {
        bool touches = false;
        for (const auto& l : a)
            touches = touches || g.ends_at(l, v) > 0;
        if (!touches && !available.count(profile(g, v)))
            return false;
    }
    return true;
}

} // namespace detail

/// Searches subsets (size, then lexicographic) and bijections (lexicographic)
/// for a certificate accepted by theorem_check. `prune` enables a filter that
/// only discards subsets for which condition 3 must fail.
inline std::optional<Certificate> theorem_search(const Multigraph& g, const Multigraph& h,
                                                 const SearchBudget& budget = {}, bool prune = true)
{
    if (g.num_edges() != h.num_edges())
        return std::nullopt;
    detail::check_edges(g.num_edges(), budget, "theorem_search");
    const detail::Deadline deadline(budget);
    std::optional<Certificate> found;
    for (const auto& a : detail::ordered_subsets(g.labels())) {
        if (prune && !detail::untouched_vertices_have_partners(g, h, a))
            continue;
        deadline.check("theorem_search");
        for_each_bijection(g, h, [&](const EdgeBijection& phi) {
            Certificate c{a, phi};
            if (theorem_check(g, h, c).ok) {
                found = std::move(c);
                return false;
            }
            return true;
        });
        if (found)
            return found;
    }
    return std::nullopt;
}

/// Searches bijections for one passing edmonds_dual_check.
inline std::optional<EdgeBijection> edmonds_search(const Multigraph& g, const Multigraph& h)
{
    std::optional<EdgeBijection> found;
    for_each_bijection(g, h, [&](const EdgeBijection& phi) {
        if (edmonds_dual_check(g, h, phi).ok) {
            found = phi;
            return false;
        }
        return true;
    });
    return found;
}

// ---------------------------------------------------------------------------

enum class Verdict { yes, no, budget };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::yes:
        return "yes";
    case Verdict::no:
        return "no";
    default:
        return "budget";
    }
}

struct CrossReport {
    std::string pair_id;
    Verdict theorem = Verdict::no;
    std::optional<Certificate> theorem_result;
    Verdict oracle = Verdict::no;
    std::optional<OracleWitness> oracle_result;
    bool agree = false; ///< both decided and equal; a budget verdict never agrees
};

inline std::string to_line(const CrossReport& r)
{
    return "PAIR " + r.pair_id + " THEOREM " + to_string(r.theorem) + " ORACLE " + to_string(r.oracle) + " AGREE " +
           (r.agree ? "yes" : "no");
}

struct MultigraphPair {
    std::string id;
    Multigraph g;
    Multigraph h;
};

namespace detail {

template <typename Fn>
void run_indexed(std::size_t n, bool parallel, Fn&& fn)
{
    const std::size_t workers = parallel ? std::max<std::size_t>(1, std::thread::hardware_concurrency()) : 1;
    if (workers == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers)
                fn(i);
        });
    for (auto& t : pool)
        t.join();
}

} // namespace detail

/// Runs both deciders on every pair. Oracle results are served from one
/// ReachIndex per distinct source graph unless `use_cache` is false.
inline std::vector<CrossReport> cross_validate(const std::vector<MultigraphPair>& pairs, const SearchBudget& budget,
                                               bool use_cache = true)
{
    std::map<std::vector<int>, std::size_t> slot;
    std::vector<const Multigraph*> sources;
    for (const auto& p : pairs) {
        if (p.g.num_edges() > budget.max_edges)
            continue;
        if (slot.try_emplace(multigraph_canonical_code(p.g), sources.size()).second)
            sources.push_back(&p.g);
    }
    std::vector<std::optional<ReachIndex>> index(sources.size());
    std::vector<char> index_budget(sources.size(), 0);
    if (use_cache) {
        detail::run_indexed(sources.size(), budget.parallel, [&](std::size_t i) {
            try {
                index[i].emplace(*sources[i], DualKind::partial, budget);
            } catch (const BudgetExceeded&) {
                index_budget[i] = 1;
            }
        });
    }

    std::vector<CrossReport> out(pairs.size());
    detail::run_indexed(pairs.size(), budget.parallel, [&](std::size_t i) {
        const auto& p = pairs[i];
        CrossReport r;
        r.pair_id = p.id;
        try {
            r.theorem_result = theorem_search(p.g, p.h, budget);
            r.theorem = r.theorem_result ? Verdict::yes : Verdict::no;
        } catch (const BudgetExceeded&) {
            r.theorem = Verdict::budget;
        }
        try {
            if (p.g.num_edges() != p.h.num_edges()) {
                r.oracle = Verdict::no;
            } else if (use_cache) {
                detail::check_edges(p.g.num_edges(), budget, "partial_dual_oracle");
                const std::size_t s = slot.at(multigraph_canonical_code(p.g));
                if (index_budget[s])
                    throw BudgetExceeded("oracle index");
                r.oracle_result = index[s]->find(p.h);
                r.oracle = r.oracle_result ? Verdict::yes : Verdict::no;
            } else {
                r.oracle_result = partial_dual_oracle(p.g, p.h, budget);
                r.oracle = r.oracle_result ? Verdict::yes : Verdict::no;
            }
        } catch (const BudgetExceeded&) {
            r.oracle = Verdict::budget;
        }
        r.agree = r.theorem != Verdict::budget && r.oracle != Verdict::budget && r.theorem == r.oracle;
        out[i] = std::move(r);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Corpus generation.

struct Corpus {
    std::vector<Multigraph> multigraphs;   ///< up to isomorphism
    std::vector<RibbonGraph> ribbon_graphs; ///< up to unlabeled equivalence
};

inline std::string edge_name(std::size_t i) { return "e" + std::to_string(i + 1); }
inline std::string vertex_name(std::size_t i) { return "v" + std::to_string(i + 1); }

/// All multigraphs with 1..max_v vertices and 0..max_e edges, one per
/// isomorphism class, ordered by (vertices, edges, generation order).
inline std::vector<Multigraph> multigraph_corpus(std::size_t max_v, std::size_t max_e)
{
    std::vector<Multigraph> out;
    std::set<std::vector<int>> seen;
    for (std::size_t n = 1; n <= max_v; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                slots.emplace_back(i, j);
        std::vector<std::string> vs;
        for (std::size_t i = 0; i < n; ++i)
            vs.push_back(vertex_name(i));
        for (std::size_t e = 0; e <= max_e; ++e) {
            // multisets of size e over slots, as nondecreasing index sequences
            std::vector<std::size_t> pick(e, 0);
            while (true) {
                std::map<std::string, Multigraph::Endpoints> es;
                for (std::size_t k = 0; k < e; ++k)
                    es.emplace(edge_name(k), Multigraph::Endpoints{vs[slots[pick[k]].first], vs[slots[pick[k]].second]});
                Multigraph m(vs, std::move(es));
                if (seen.insert(multigraph_canonical_code(m)).second)
                    out.push_back(std::move(m));
                std::size_t k = e;
                while (k > 0 && pick[k - 1] == slots.size() - 1)
                    --k;
                if (k == 0)
                    break;
                ++pick[k - 1];
                for (std::size_t j = k; j < e; ++j)
                    pick[j] = pick[k - 1];
            }
        }
    }
    return out;
}

inline Corpus corpus_generate(std::size_t max_v, std::size_t max_e)
{
    Corpus c;
    c.multigraphs = multigraph_corpus(max_v, max_e);
    std::set<CanonicalForm> seen;
    SearchBudget unlimited;
    unlimited.max_edges = max_e;
    for (const auto& m : c.multigraphs) {
        for_each_ribbon_structure(m, true, unlimited, [&](const RibbonGraph& r) {
            if (seen.insert(canonical_form(r, false)).second)
                c.ribbon_graphs.push_back(r);
            return true;
        });
    }
    return c;
}

inline std::vector<Multigraph> connected_multigraphs(std::size_t max_v, std::size_t max_e)
{
    std::vector<Multigraph> out;
    for (auto& m : multigraph_corpus(max_v, max_e))
        if (is_connected(m))
            out.push_back(std::move(m));
    return out;
}

/// Every unordered pair (i <= j) of the given graphs, ids "G<i>-G<j>".
inline std::vector<MultigraphPair> unordered_pairs(const std::vector<Multigraph>& graphs)
{
    std::vector<MultigraphPair> out;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i; j < graphs.size(); ++j)
            out.push_back(MultigraphPair{"G" + std::to_string(i) + "-G" + std::to_string(j), graphs[i], graphs[j]});
    return out;
}

} // namespace ribbon
