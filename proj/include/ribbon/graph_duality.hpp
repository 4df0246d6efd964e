#pragma once

// Edmonds' duality criteria for edge bijections between multigraphs, the
// three-condition partial-duality checker, and realization of a dual
// embedding from a bijection that meets the criteria.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "multigraph.hpp"
#include "natural_dual.hpp"
#include "partial_dual.hpp"
#include "ribbon_graph.hpp"

namespace ribbon {

using EdgeBijection = std::map<std::string, std::string>;

struct LinkEdge {
    int multiplicity = 1; ///< 2 exactly for images of loops at the defining vertex
    std::string a;
    std::string b;

    friend bool operator==(const LinkEdge&, const LinkEdge&) = default;
};

/// H_v: images of the edges at v, each with multiplicity equal to its number
/// of ends at v, together with their endpoints in the host graph.
struct LinkSubgraph {
    std::map<std::string, LinkEdge> edges;

    std::set<std::string> vertices() const
    {
        std::set<std::string> out;
        for (const auto& [l, e] : edges) {
            out.insert(e.a);
            out.insert(e.b);
        }
        return out;
    }
    bool empty() const { return edges.empty(); }
};

struct Violation {
    std::string condition; ///< edmonds-i/ii/iii, isolated, theorem-1/2/3
    std::string witness;   ///< vertex id or edge label(s)
    std::string message;
};

struct CheckResult {
    bool ok = true;
    std::vector<Violation> violations;
};

inline std::string to_string(const Violation& v)
{
    return v.condition + " [" + v.witness + "] " + v.message;
}

inline void require_bijection(const Multigraph& g, const Multigraph& h, const EdgeBijection& phi)
{
    if (phi.size() != g.num_edges())
        throw ValidationError("bijection is not total on the source edges");
    std::set<std::string> targets;
    for (const auto& [src, dst] : phi) {
        if (!g.has_edge(src))
            throw ValidationError("bijection maps unknown source edge '" + src + "'");
        if (!h.has_edge(dst))
            throw ValidationError("bijection maps onto unknown target edge '" + dst + "'");
        if (!targets.insert(dst).second)
            throw ValidationError("bijection is not injective at '" + dst + "'");
    }
    if (targets.size() != h.num_edges())
        throw ValidationError("bijection is not onto the target edges");
}

inline EdgeBijection inverse(const EdgeBijection& phi)
{
    EdgeBijection out;
    for (const auto& [a, b] : phi)
        out.emplace(b, a);
    return out;
}

inline LinkSubgraph link_subgraph(const Multigraph& g, const Multigraph& h, const EdgeBijection& phi,
                                  const std::string& v, const std::optional<std::set<std::string>>& restrict = std::nullopt)
{
    if (!g.has_vertex(v))
        throw ValidationError("unknown vertex '" + v + "'");
    LinkSubgraph out;
    for (const auto& [l, ends] : g.edges()) {
        const int k = g.ends_at(l, v);
        if (k == 0 || (restrict && !restrict->count(l)))
            continue;
        const auto it = phi.find(l);
        if (it == phi.end())
            throw ValidationError("bijection undefined on edge '" + l + "'");
        if (!h.has_edge(it->second))
            throw ValidationError("bijection maps '" + l + "' to unknown edge '" + it->second + "'");
        const auto& he = h.ends(it->second);
        out.edges[it->second] = LinkEdge{k, he.first, he.second};
    }
    return out;
}

/// Connected with every vertex of even degree; empty is vacuously Eulerian.
inline bool is_eulerian(const LinkSubgraph& link)
{
    if (link.empty())
        return true;
    const auto vs = link.vertices();
    std::map<std::string, int> index, deg;
    for (const auto& v : vs)
        index.emplace(v, static_cast<int>(index.size()));
    detail::DisjointSets ds(vs.size());
    for (const auto& [l, e] : link.edges) {
        deg[e.a] += e.multiplicity;
        deg[e.b] += e.multiplicity;
        ds.unite(index[e.a], index[e.b]);
    }
    for (const auto& [v, d] : deg)
        if (d % 2 != 0)
            return false;
    const int root = ds.find(0);
    for (const auto& [v, i] : index)
        if (ds.find(i) != root)
            return false;
    return true;
}

inline bool is_eulerian(const Multigraph& m)
{
    LinkSubgraph link;
    for (const auto& [l, e] : m.edges())
        link.edges[l] = LinkEdge{1, e.first, e.second};
    return is_eulerian(link);
}

namespace detail {

struct CircuitToken {
    std::string id; ///< stable identity, used for ordering
    std::string a;
    std::string b;
};

/// Hierholzer's algorithm, always taking the smallest available token.
/// Returns token indices in circuit order (empty if no Eulerian circuit).
inline std::vector<int> hierholzer(const std::vector<CircuitToken>& tokens)
{
    if (tokens.empty())
        return {};
    std::vector<char> used(tokens.size(), 0);
    // stack of (vertex, token used to arrive)
    std::vector<std::pair<std::string, int>> stack{{tokens[0].a, -1}};
    std::vector<int> circuit;
    while (!stack.empty()) {
        const std::string at = stack.back().first;
        int pick = -1;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (used[i] || (tokens[i].a != at && tokens[i].b != at))
                continue;
            if (pick < 0 || tokens[i].id < tokens[static_cast<std::size_t>(pick)].id)
                pick = static_cast<int>(i);
        }
        if (pick < 0) {
            if (stack.back().second >= 0)
                circuit.push_back(stack.back().second);
            stack.pop_back();
            continue;
        }
        used[static_cast<std::size_t>(pick)] = 1;
        const auto& t = tokens[static_cast<std::size_t>(pick)];
        stack.emplace_back(t.a == at ? t.b : t.a, pick);
    }
    if (circuit.size() != tokens.size())
        return {};
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

/// Every Eulerian circuit that starts with token 0, in lexicographic order.
inline void all_circuits(const std::vector<CircuitToken>& tokens, std::size_t limit, std::vector<std::vector<int>>& out)
{
    if (tokens.empty())
        return;
    std::vector<char> used(tokens.size(), 0);
    std::vector<int> path;
    auto dfs = [&](auto&& self, const std::string& at, const std::string& home) -> void {
        if (out.size() >= limit)
            return;
        if (path.size() == tokens.size()) {
            if (at == home)
                out.push_back(path);
            return;
        }
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (used[i] || (tokens[i].a != at && tokens[i].b != at))
                continue;
            used[i] = 1;
            path.push_back(static_cast<int>(i));
            self(self, tokens[i].a == at ? tokens[i].b : tokens[i].a, home);
            path.pop_back();
            used[i] = 0;
        }
    };
    used[0] = 1;
    path.push_back(0);
    dfs(dfs, tokens[0].b, tokens[0].a);
    if (tokens[0].a != tokens[0].b)
        dfs(dfs, tokens[0].a, tokens[0].b);
}

/// True iff some vertex bijection sends every edge e of `g` onto phi(e) in `h`.
inline bool respects_bijection(const Multigraph& g, const Multigraph& h, const EdgeBijection& phi)
{
    if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges())
        return false;
    if (isolated_count(g) != isolated_count(h))
        return false;
    std::map<std::string, std::string> fwd, back;
    auto assign = [&](const std::string& x, const std::string& y, std::vector<std::string>& added) {
        auto f = fwd.find(x);
        auto b = back.find(y);
        if (f != fwd.end() || b != back.end())
            return f != fwd.end() && f->second == y;
        fwd.emplace(x, y);
        back.emplace(y, x);
        added.push_back(x);
        return true;
    };
    std::vector<std::string> labels;
    for (const auto& [l, e] : g.edges())
        labels.push_back(l);
    auto undo = [&](const std::vector<std::string>& added) {
        for (const auto& x : added) {
            back.erase(fwd.at(x));
            fwd.erase(x);
        }
    };
    auto solve = [&](auto&& self, std::size_t i) -> bool {
        if (i == labels.size())
            return true;
        const auto& ge = g.ends(labels[i]);
        const auto& he = h.ends(phi.at(labels[i]));
        for (int swap = 0; swap < 2; ++swap) {
            const std::string& y1 = swap ? he.second : he.first;
            const std::string& y2 = swap ? he.first : he.second;
            std::vector<std::string> added;
            if (assign(ge.first, y1, added) && assign(ge.second, y2, added) && self(self, i + 1))
                return true;
            undo(added);
            if (he.first == he.second)
                break;
        }
        return false;
    };
    return solve(solve, 0);
}

} // namespace detail

/// Hierholzer circuit of a link subgraph as a sequence of edge labels; an
/// edge of multiplicity 2 appears twice. Empty if the link is not Eulerian.
inline std::vector<std::string> eulerian_circuit(const LinkSubgraph& link)
{
    std::vector<detail::CircuitToken> tokens;
    for (const auto& [l, e] : link.edges)
        for (int k = 0; k < e.multiplicity; ++k)
            tokens.push_back({l + "#" + std::to_string(k), e.a, e.b});
    if (!is_eulerian(link))
        return {};
    std::vector<std::string> out;
    for (int i : detail::hierholzer(tokens)) {
        const auto& id = tokens[static_cast<std::size_t>(i)].id;
        out.push_back(id.substr(0, id.find('#')));
    }
    return out;
}

inline CheckResult edmonds_criteria(const Multigraph& g, const Multigraph& h, const EdgeBijection& phi)
{
    require_bijection(g, h, phi);
    CheckResult r;
    auto fail = [&](std::string cond, std::string witness, std::string msg) {
        r.ok = false;
        r.violations.push_back(Violation{std::move(cond), std::move(witness), std::move(msg)});
    };

    const auto cg = vertex_components(g);
    const auto ch = vertex_components(h);
    std::vector<std::string> labels;
    for (const auto& [l, e] : g.edges())
        labels.push_back(l);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            const bool same_g = cg[g.index_of(g.ends(labels[i]).first)] == cg[g.index_of(g.ends(labels[j]).first)];
            const auto& hi = h.ends(phi.at(labels[i]));
            const auto& hj = h.ends(phi.at(labels[j]));
            const bool same_h = ch[h.index_of(hi.first)] == ch[h.index_of(hj.first)];
            if (same_g != same_h)
                fail("edmonds-i", labels[i] + "," + labels[j],
                     same_g ? "share a component but their images do not" : "images share a component but the edges do not");
        }
    }
    for (const auto& v : g.vertices())
        if (!is_eulerian(link_subgraph(g, h, phi, v)))
            fail("edmonds-ii", v, "H_" + v + " is not Eulerian");
    const auto psi = inverse(phi);
    for (const auto& w : h.vertices())
        if (!is_eulerian(link_subgraph(h, g, psi, w)))
            fail("edmonds-iii", w, "G_" + w + " is not Eulerian");
    return r;
}

/// Edmonds' criteria plus equal numbers of edgeless vertices: decides
/// whether g and h are natural duals with phi as the edge correspondence.
inline CheckResult edmonds_dual_check(const Multigraph& g, const Multigraph& h, const EdgeBijection& phi)
{
    auto r = edmonds_criteria(g, h, phi);
    const auto ig = isolated_count(g);
    const auto ih = isolated_count(h);
    if (ig != ih) {
        r.ok = false;
        r.violations.push_back(Violation{"isolated", std::to_string(ig) + "/" + std::to_string(ih),
                                         "isolated vertex counts differ"});
    }
    return r;
}

/// Checks the three conditions of the partial-duality characterization for
/// certificate (A, phi). Condition 1 evaluates Edmonds' criteria for phi|A
/// inside the spanning subgraphs G restricted to A and H restricted to
/// phi(A), including the equal count of edgeless vertices: those two
/// spanning graphs must form a dual embedding.
inline CheckResult theorem_check(const Multigraph& g, const Multigraph& h, const Certificate& cert)
{
    require_bijection(g, h, cert.map);
    for (const auto& l : cert.subset)
        if (!g.has_edge(l))
            throw ValidationError("subset contains unknown edge '" + l + "'");

    CheckResult r;
    const auto& a = cert.subset;
    const auto phi_a = image(cert, a);
    EdgeBijection restricted_map;
    for (const auto& l : a)
        restricted_map.emplace(l, cert.map.at(l));

    for (auto& v : edmonds_dual_check(g.restricted(a), h.restricted(phi_a), restricted_map).violations) {
        r.ok = false;
        r.violations.push_back(Violation{"theorem-1", v.witness, "phi|A fails " + v.condition + ": " + v.message});
    }

    for (const auto& v : g.vertices()) {
        bool touches_a = false;
        for (const auto& l : a)
            touches_a = touches_a || g.ends_at(l, v) > 0;

        if (touches_a) {
            const auto link = link_subgraph(g, h, cert.map, v, a).vertices();
            for (const auto& [l, ends] : g.edges()) {
                const int k = g.ends_at(l, v);
                if (k == 0)
                    continue;
                const auto& he = h.ends(cert.map.at(l));
                const bool first = link.count(he.first) != 0;
                const bool second = link.count(he.second) != 0;
                if (!first && !second) {
                    r.ok = false;
                    r.violations.push_back(Violation{"theorem-2", v + ":" + l,
                                                     "phi(" + l + ") misses phi(A)_" + v});
                } else if (k == 2 && !(first && second)) {
                    r.ok = false;
                    r.violations.push_back(Violation{"theorem-2", v + ":" + l,
                                                     "loop " + l + " but phi(" + l + ") has an end outside phi(A)_" + v});
                }
            }
        } else {
            bool found = false;
            for (const auto& w : h.vertices()) {
                bool match = true;
                for (const auto& [l, ends] : g.edges()) {
                    const int kg = g.ends_at(l, v);
                    const int kh = h.ends_at(cert.map.at(l), w);
                    if ((kg > 0) != (kh > 0) || (kg == 2) != (kh == 2)) {
                        match = false;
                        break;
                    }
                }
                if (match) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                r.ok = false;
                r.violations.push_back(Violation{"theorem-3", v, "no vertex of H mirrors the incidences at " + v});
            }
        }
    }
    return r;
}

/// Builds a ribbon graph with core g whose natural dual has core h under phi.
///
/// The cyclic order at v is read off an Eulerian circuit of H_v; the first
/// attempt uses Hierholzer's circuit with all edges untwisted, after which
/// every circuit at every vertex and every twist assignment is tried. Each
/// candidate is verified by recomputing the dual. Throws BudgetExceeded
/// after `max_attempts` candidates.
inline std::optional<RibbonGraph> edmonds_realize(const Multigraph& g, const Multigraph& h, const EdgeBijection& phi,
                                                  std::size_t max_attempts = 1000000)
{
    const auto pre = edmonds_criteria(g, h, phi);
    if (!pre.ok)
        throw ValidationError("precondition violation: " + to_string(pre.violations.front()));

    const std::size_t nv = g.num_vertices();
    std::vector<std::vector<std::vector<HalfEdge>>> options(nv);
    for (std::size_t vi = 0; vi < nv; ++vi) {
        const auto& v = g.vertices()[vi];
        std::vector<HalfEdge> hs;
        std::vector<detail::CircuitToken> tokens;
        for (const auto& [l, ends] : g.edges()) {
            const auto& he = h.ends(phi.at(l));
            if (ends.first == v) {
                hs.push_back(HalfEdge{l, 0});
                tokens.push_back({l + ".0", he.first, he.second});
            }
            if (ends.second == v) {
                hs.push_back(HalfEdge{l, 1});
                tokens.push_back({l + ".1", he.first, he.second});
            }
        }
        auto& opts = options[vi];
        if (tokens.empty()) {
            opts.emplace_back();
            continue;
        }
        std::set<std::vector<HalfEdge>> distinct;
        auto add = [&](const std::vector<int>& order) {
            std::vector<HalfEdge> rot;
            for (int i : order)
                rot.push_back(hs[static_cast<std::size_t>(i)]);
            if (distinct.insert(rot).second)
                opts.push_back(std::move(rot));
        };
        if (const auto first = detail::hierholzer(tokens); !first.empty())
            add(first);
        std::vector<std::vector<int>> all;
        detail::all_circuits(tokens, max_attempts, all);
        for (const auto& c : all)
            add(c);
    }

    std::vector<std::string> labels;
    for (const auto& [l, e] : g.edges())
        labels.push_back(l);
    const std::size_t m = labels.size();
    std::vector<std::size_t> choice(nv, 0);
    std::size_t attempts = 0;
    while (true) {
        for (unsigned long bits = 0; bits < (1UL << m); ++bits) {
            if (++attempts > max_attempts)
                throw BudgetExceeded("edmonds_realize: attempt budget exhausted");
            RawRotation raw;
            for (std::size_t vi = 0; vi < nv; ++vi)
                raw.vertices.push_back(Vertex{g.vertices()[vi], options[vi][choice[vi]]});
            for (std::size_t i = 0; i < m; ++i)
                raw.edges.emplace_back(labels[i], ((bits >> i) & 1UL) != 0);
            auto candidate = validate_rotation(raw);
            if (graph_isomorphic(core(candidate), g) &&
                detail::respects_bijection(core(natural_dual(candidate).graph), h, phi))
                return candidate;
        }
        std::size_t i = 0;
        while (i < nv && ++choice[i] == options[i].size())
            choice[i++] = 0;
        if (i == nv)
            break;
    }
    return std::nullopt;
}

} // namespace ribbon
