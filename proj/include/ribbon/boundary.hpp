#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbon_graph.hpp"

namespace ribbon {

/// One oriented piece of the free boundary of a ribbon graph.
struct BoundaryArc {
    enum class Kind { vertex_arc, edge_side };

    Kind kind = Kind::vertex_arc;
    std::string vertex; ///< vertex_arc: the disc the arc runs along
    std::string label;  ///< edge_side: the edge ribbon the arc runs along
    /// Endpoints of the arc as half-edge attachments. Both empty for the
    /// full boundary circle of an isolated vertex.
    std::optional<HalfEdge> from;
    std::optional<HalfEdge> to;

    friend bool operator==(const BoundaryArc&, const BoundaryArc&) = default;
};

struct BoundaryComponent {
    std::vector<BoundaryArc> walk; ///< cyclic, alternating vertex arcs and edge sides
};

/// Traces every boundary component. Walks start from the smallest unvisited
/// flag, so the output is deterministic; isolated vertices come last.
inline std::vector<BoundaryComponent> boundary_walk(const RibbonGraph& g)
{
    const detail::FlagView fv(g);
    std::vector<BoundaryComponent> out;
    std::vector<char> seen(fv.num_flags(), 0);
    for (int start = 0; start < fv.num_flags(); ++start) {
        if (seen[start])
            continue;
        BoundaryComponent bc;
        int f = start;
        do {
            seen[f] = 1;
            const int c = fv.corner(f);
            seen[c] = 1;
            BoundaryArc va;
            va.kind = BoundaryArc::Kind::vertex_arc;
            va.vertex = g.vertices()[fv.vertex_of[f >> 1]].id;
            va.from = fv.half_edge_name(f >> 1);
            va.to = fv.half_edge_name(c >> 1);
            bc.walk.push_back(std::move(va));
            const int s = fv.edge_side(c);
            BoundaryArc ea;
            ea.kind = BoundaryArc::Kind::edge_side;
            ea.label = fv.labels[c >> 2];
            ea.from = fv.half_edge_name(c >> 1);
            ea.to = fv.half_edge_name(s >> 1);
            bc.walk.push_back(std::move(ea));
            f = s;
        } while (f != start);
        out.push_back(std::move(bc));
    }
    for (int vi : fv.isolated) {
        BoundaryArc va;
        va.kind = BoundaryArc::Kind::vertex_arc;
        va.vertex = g.vertices()[vi].id;
        out.push_back(BoundaryComponent{{va}});
    }
    return out;
}

/// p(G): number of boundary components.
inline std::size_t boundary_count(const RibbonGraph& g)
{
    const detail::FlagView fv(g);
    std::vector<char> seen(fv.num_flags(), 0);
    std::size_t p = fv.isolated.size();
    for (int start = 0; start < fv.num_flags(); ++start) {
        if (seen[start])
            continue;
        ++p;
        int f = start;
        do {
            seen[f] = 1;
            const int c = fv.corner(f);
            seen[c] = 1;
            f = fv.edge_side(c);
        } while (f != start);
    }
    return p;
}

/// k(G): connected components, isolated vertices included.
inline std::size_t component_count(const RibbonGraph& g)
{
    const detail::FlagView fv(g);
    detail::DisjointSets ds(g.num_vertices());
    std::size_t k = g.num_vertices();
    for (int e = 0; e < fv.num_edges(); ++e)
        if (ds.unite(fv.vertex_of[2 * e], fv.vertex_of[2 * e + 1]))
            --k;
    return k;
}

/// True iff each vertex disc can be given an orientation that every edge
/// respects: a 2-colouring where twisted edges join opposite colours.
inline bool is_orientable(const RibbonGraph& g)
{
    const detail::FlagView fv(g);
    const int n = fv.num_vertices;
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int e = 0; e < fv.num_edges(); ++e) {
        const int a = fv.vertex_of[2 * e];
        const int b = fv.vertex_of[2 * e + 1];
        adj[a].emplace_back(b, fv.twisted[e]);
        adj[b].emplace_back(a, fv.twisted[e]);
    }
    std::vector<int> sign(n, -1);
    for (int root = 0; root < n; ++root) {
        if (sign[root] >= 0)
            continue;
        sign[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (auto [w, t] : adj[u]) {
                const int want = sign[u] ^ t;
                if (sign[w] < 0) {
                    sign[w] = want;
                    stack.push_back(w);
                } else if (sign[w] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

struct InvariantReport {
    std::size_t v = 0;
    std::size_t e = 0;
    std::size_t k = 0;
    std::size_t p = 0;
    bool orientable = true;
    long euler_genus = 0;
    std::optional<long> genus; ///< present iff orientable

    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

inline InvariantReport invariants(const RibbonGraph& g)
{
    InvariantReport r;
    r.v = g.num_vertices();
    r.e = g.num_edges();
    r.k = component_count(g);
    r.p = boundary_count(g);
    r.orientable = is_orientable(g);
    r.euler_genus = 2 * static_cast<long>(r.k) - static_cast<long>(r.v) + static_cast<long>(r.e) - static_cast<long>(r.p);
    if (r.orientable)
        r.genus = r.euler_genus / 2;
    return r;
}

inline std::string to_string(const InvariantReport& r)
{
    std::string s = "v=" + std::to_string(r.v) + " e=" + std::to_string(r.e) + " k=" + std::to_string(r.k) +
                    " p=" + std::to_string(r.p) + " orientable=" + (r.orientable ? "yes" : "no") +
                    " euler-genus=" + std::to_string(r.euler_genus);
    if (r.genus)
        s += " genus=" + std::to_string(*r.genus);
    return s;
}

} // namespace ribbon
