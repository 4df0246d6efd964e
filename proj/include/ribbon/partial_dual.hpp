#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "arrow_marked.hpp"
#include "boundary.hpp"
#include "equivalence.hpp"
#include "natural_dual.hpp"
#include "ribbon_graph.hpp"

namespace ribbon {

/// A subset A of source edge labels plus an explicit edge bijection.
struct Certificate {
    std::set<std::string> subset;
    std::map<std::string, std::string> map;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline Certificate identity_certificate(const std::set<std::string>& labels, std::set<std::string> subset)
{
    Certificate c;
    c.subset = std::move(subset);
    for (const auto& l : labels)
        c.map.emplace(l, l);
    return c;
}

/// Image of a label set under the certificate's bijection.
inline std::set<std::string> image(const Certificate& c, const std::set<std::string>& labels)
{
    std::set<std::string> out;
    for (const auto& l : labels)
        out.insert(c.map.at(l));
    return out;
}

struct PartialDualResult {
    RibbonGraph graph;
    Certificate certificate;
};

namespace detail {

// Arrow on a long side of an A-edge, traversed starting from flag `f`.
// Edge ribbon coordinates: t runs from end 0 to end 1, s across; flag (h0,+)
// sits at s = +1. The ribbon boundary runs t-increasing along s = -1 and
// t-decreasing along s = +1.
inline Direction side_arrow(const FlagView& fv, int f)
{
    const int h = f >> 1;
    const int end = h & 1;
    const bool plus = (f & 1) != 0;
    const bool tw = fv.twisted[h >> 1] != 0;
    bool upper; // s = +1
    if (end == 0)
        upper = plus;
    else
        upper = tw ? plus : !plus;
    if (end == 0)
        return upper ? Direction::against : Direction::with;
    return upper ? Direction::with : Direction::against;
}

} // namespace detail

/// Partial dual G^A by direct boundary tracing.
///
/// Every edge is oriented end 0 -> end 1 (edges listed in `reoriented` get
/// the opposite orientation). Edges outside A leave arrows on their two
/// attachment arcs, edges in A on their two long sides. The boundary
/// components of G\A^c, read with those arrows in traversal order, form an
/// arrow presentation whose ribbon graph is G^A.
inline PartialDualResult partial_dual(const RibbonGraph& g, const std::set<std::string>& subset,
                                      const std::set<std::string>& reoriented = {})
{
    require_subset(g, subset);
    require_subset(g, reoriented);
    const detail::FlagView fv(g);
    const int m = fv.num_edges();
    std::vector<char> in_a(m, 0), flipped(m, 0);
    for (int e = 0; e < m; ++e) {
        in_a[e] = subset.count(fv.labels[e]) ? 1 : 0;
        flipped[e] = reoriented.count(fv.labels[e]) ? 1 : 0;
    }
    auto oriented = [&](int e, Direction d) { return flipped[e] ? reversed(d) : d; };
    auto attach = [&](int h) { return oriented(h >> 1, attachment_arrow(fv.half_edge_name(h), fv.twisted[h >> 1] != 0)); };

    // Rotation restricted to A, remembering the A^c attachments in between.
    std::vector<int> succ_a(2 * m, -1), pred_a(2 * m, -1);
    std::vector<std::vector<int>> between(2 * m);
    std::vector<std::vector<int>> bare_vertices; // vertices with no A half-edge
    for (const auto& v : g.vertices()) {
        std::vector<int> hs;
        for (const auto& h : v.rotation)
            hs.push_back(fv.half_edge(h));
        std::vector<std::size_t> pos;
        for (std::size_t i = 0; i < hs.size(); ++i)
            if (in_a[hs[i] >> 1])
                pos.push_back(i);
        if (pos.empty()) {
            bare_vertices.push_back(hs);
            continue;
        }
        for (std::size_t k = 0; k < pos.size(); ++k) {
            const int h = hs[pos[k]];
            const int n = hs[pos[(k + 1) % pos.size()]];
            succ_a[h] = n;
            pred_a[n] = h;
            for (std::size_t i = (pos[k] + 1) % hs.size(); i != pos[(k + 1) % pos.size()]; i = (i + 1) % hs.size())
                between[h].push_back(hs[i]);
        }
    }

    ArrowPresentation ap;
    int counter = 0;
    std::vector<char> seen(4 * m, 0);
    for (int start = 0; start < 4 * m; ++start) {
        if (seen[start] || !in_a[start >> 2])
            continue;
        ArrowCycle cyc{"f" + std::to_string(++counter), {}};
        int f = start;
        do {
            seen[f] = 1;
            const int h = f >> 1;
            int next;
            if (f & 1) {
                for (int x : between[h])
                    cyc.tokens.push_back(ArrowToken{fv.labels[x >> 1], attach(x)});
                next = 2 * succ_a[h];
            } else {
                const auto& arc = between[pred_a[h]];
                for (auto it = arc.rbegin(); it != arc.rend(); ++it)
                    cyc.tokens.push_back(ArrowToken{fv.labels[*it >> 1], reversed(attach(*it))});
                next = 2 * pred_a[h] + 1;
            }
            seen[next] = 1;
            cyc.tokens.push_back(ArrowToken{fv.labels[next >> 2], oriented(next >> 2, detail::side_arrow(fv, next))});
            f = fv.edge_side(next);
        } while (f != start);
        ap.cycles.push_back(std::move(cyc));
    }
    for (const auto& hs : bare_vertices) {
        ArrowCycle cyc{"f" + std::to_string(++counter), {}};
        for (int x : hs)
            cyc.tokens.push_back(ArrowToken{fv.labels[x >> 1], attach(x)});
        ap.cycles.push_back(std::move(cyc));
    }

    PartialDualResult out;
    out.graph = from_arrow_presentation(ap);
    out.certificate = identity_certificate(g.labels(), subset);
    return out;
}

/// Partial dual through the arrow-marked route: present G as G\A^c with
/// A^c marks, take the natural dual carrying the marks along, reassemble.
inline PartialDualResult partial_dual_via_arrow_marked(const RibbonGraph& g, const std::set<std::string>& subset)
{
    require_subset(g, subset);
    const auto marked = arrow_marked_decompose(g, complement(g, subset));
    PartialDualResult out;
    out.graph = arrow_marked_reassemble(natural_dual_marked(marked));
    out.certificate = identity_certificate(g.labels(), subset);
    return out;
}

// ---------------------------------------------------------------------------
// Partial dual embeddings, held combinatorially as a naturally dual pair of
// arrow-marked ribbon graphs sharing one mark set.

struct PartialDualEmbedding {
    ArrowMarkedRibbonGraph primal;   ///< G\A^c with the A^c marks
    ArrowMarkedRibbonGraph dualpart; ///< (G\A^c)* with the same marks carried across
};

inline PartialDualEmbedding pd_embedding_build(const RibbonGraph& g, const std::set<std::string>& subset)
{
    require_subset(g, subset);
    PartialDualEmbedding pde;
    pde.primal = arrow_marked_decompose(g, complement(g, subset));
    pde.dualpart = natural_dual_marked(pde.primal);
    return pde;
}

/// Checks that the dual part really is the marked natural dual of the primal.
inline void validate_pd_embedding(const PartialDualEmbedding& pde)
{
    if (pde.primal.colours() != pde.dualpart.colours())
        throw ValidationError("primal and dual parts carry different mark colours");
    if (pde.primal.base().labels() != pde.dualpart.base().labels())
        throw ValidationError("primal and dual parts have different edge sets");
    const auto expected = natural_dual_marked(pde.primal);
    if (!equivalent(expected.base(), pde.dualpart.base(), true))
        throw ValidationError("dual part is not the natural dual of the primal part");
    if (!equivalent(arrow_marked_reassemble(expected), arrow_marked_reassemble(pde.dualpart), true))
        throw ValidationError("marks on the dual part do not match the primal marks");
}

/// (ribbon graph described by primal + marks, ribbon graph described by dual + marks)
inline std::pair<RibbonGraph, RibbonGraph> pd_embedding_extract(const PartialDualEmbedding& pde)
{
    return {arrow_marked_reassemble(pde.primal), arrow_marked_reassemble(pde.dualpart)};
}

// ---------------------------------------------------------------------------
// Identities relating G, G^A and the two spanning subgraphs.

struct IdentityCheck {
    std::string name;
    long lhs = 0;
    long rhs = 0;
    bool holds() const { return lhs == rhs; }
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_hold() const
    {
        for (const auto& c : checks)
            if (!c.holds())
                return false;
        return true;
    }
};

inline IdentityReport invariant_report(const RibbonGraph& g, const std::set<std::string>& subset)
{
    require_subset(g, subset);
    const auto dual = partial_dual(g, subset).graph;
    const auto ig = invariants(g);
    const auto id = invariants(dual);
    const long p_keep_a = static_cast<long>(boundary_count(delete_edges(g, complement(g, subset))));
    const long p_drop_a = static_cast<long>(boundary_count(delete_edges(g, subset)));

    IdentityReport r;
    r.checks.push_back({"v(G^A) = p(G\\A^c)", static_cast<long>(id.v), p_keep_a});
    r.checks.push_back({"p(G^A) = p(G\\A)", static_cast<long>(id.p), p_drop_a});
    r.checks.push_back({"e(G^A) = e(G)", static_cast<long>(id.e), static_cast<long>(ig.e)});
    r.checks.push_back({"k(G^A) = k(G)", static_cast<long>(id.k), static_cast<long>(ig.k)});
    r.checks.push_back({"orientable(G^A) = orientable(G)", id.orientable ? 1 : 0, ig.orientable ? 1 : 0});
    if (ig.orientable && id.genus) {
        // doubled to stay in integers: 2 g(G^A) = 2k + e - p(G\A^c) - p(G\A)
        r.checks.push_back({"2 g(G^A) = 2k(G) + e(G) - p(G\\A^c) - p(G\\A)", 2 * *id.genus,
                            2 * static_cast<long>(ig.k) + static_cast<long>(ig.e) - p_keep_a - p_drop_a});
    }
    return r;
}

} // namespace ribbon
