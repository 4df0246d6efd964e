#pragma once

// Signed rotation systems: the canonical representation of a ribbon graph.
//
// Every edge has two half-edges, `label.0` and `label.1`. Each vertex carries
// the cyclic order of the half-edges attached to its disc, read in the
// vertex's local positive direction. An edge is twisted when the local
// orientations of its end vertices do not extend across it.

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace ribbon {

struct HalfEdge {
    std::string label;
    int end = 0; ///< 0 or 1

    friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
    friend bool operator==(const HalfEdge&, const HalfEdge&) = default;

    std::string str() const { return label + "." + std::to_string(end); }
};

struct Vertex {
    std::string id;
    std::vector<HalfEdge> rotation; ///< cyclic; may be empty (isolated vertex disc)

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Unchecked rotation data as read from a file or built by an algorithm.
struct RawRotation {
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::string, bool>> edges; ///< label, twisted
};

class RibbonGraph;
RibbonGraph validate_rotation(const RawRotation& raw);

class RibbonGraph {
public:
    RibbonGraph() = default;

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::map<std::string, bool>& twists() const { return twists_; }

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return twists_.size(); }

    bool has_edge(const std::string& label) const { return twists_.count(label) != 0; }
    bool twisted(const std::string& label) const { return twists_.at(label); }

    std::set<std::string> labels() const
    {
        std::set<std::string> out;
        for (const auto& [l, t] : twists_)
            out.insert(l);
        return out;
    }

    /// Index of the vertex with this id, or npos.
    std::size_t find_vertex(const std::string& id) const
    {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i].id == id)
                return i;
        return npos;
    }

    RawRotation raw() const
    {
        RawRotation r;
        r.vertices = vertices_;
        for (const auto& [l, t] : twists_)
            r.edges.emplace_back(l, t);
        return r;
    }

    friend bool operator==(const RibbonGraph&, const RibbonGraph&) = default;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    friend RibbonGraph validate_rotation(const RawRotation& raw);

    std::vector<Vertex> vertices_;
    std::map<std::string, bool> twists_;
};

/// Checks every invariant of a signed rotation system and returns the graph.
/// Throws ValidationError naming the first violated invariant.
inline RibbonGraph validate_rotation(const RawRotation& raw)
{
    RibbonGraph g;
    std::set<std::string> ids;
    for (const auto& v : raw.vertices) {
        require_token(v.id, "vertex id");
        if (!ids.insert(v.id).second)
            throw ValidationError("duplicate vertex '" + v.id + "'");
    }
    for (const auto& [label, tw] : raw.edges) {
        require_token(label, "edge label");
        if (!g.twists_.emplace(label, tw).second)
            throw ValidationError("duplicate edge declaration '" + label + "'");
    }
    std::set<HalfEdge> seen;
    for (const auto& v : raw.vertices) {
        for (const auto& h : v.rotation) {
            require_token(h.label, "edge label");
            if (h.end != 0 && h.end != 1)
                throw ValidationError("bad half-edge end in '" + h.label + "." + std::to_string(h.end) + "'");
            if (!seen.insert(h).second)
                throw ValidationError("duplicate half-edge " + h.str() + " at vertex '" + v.id + "'");
            if (!g.twists_.count(h.label))
                throw ValidationError("undeclared label '" + h.label + "' at vertex '" + v.id + "'");
        }
    }
    for (const auto& [label, tw] : g.twists_) {
        for (int end = 0; end < 2; ++end)
            if (!seen.count(HalfEdge{label, end}))
                throw ValidationError("missing end " + label + "." + std::to_string(end));
    }
    g.vertices_ = raw.vertices;
    return g;
}

/// Reverses the cyclic order at `vertex_id` and toggles the twist of every
/// incident non-loop edge. Loops are toggled twice, so they keep their bit.
inline RibbonGraph vertex_flip(const RibbonGraph& g, const std::string& vertex_id)
{
    const auto vi = g.find_vertex(vertex_id);
    if (vi == RibbonGraph::npos)
        throw ValidationError("unknown vertex '" + vertex_id + "'");
    RawRotation r = g.raw();
    auto& rot = r.vertices[vi].rotation;
    std::reverse(rot.begin(), rot.end());
    std::map<std::string, int> hits;
    for (const auto& h : rot)
        ++hits[h.label];
    for (auto& [label, tw] : r.edges)
        if (hits[label] == 1)
            tw = !tw;
    return validate_rotation(r);
}

/// Spanning deletion: every vertex survives, possibly as an isolated disc.
inline RibbonGraph delete_edges(const RibbonGraph& g, const std::set<std::string>& doomed)
{
    for (const auto& l : doomed)
        if (!g.has_edge(l))
            throw ValidationError("unknown edge label '" + l + "'");
    RawRotation r;
    for (const auto& v : g.vertices()) {
        Vertex nv{v.id, {}};
        for (const auto& h : v.rotation)
            if (!doomed.count(h.label))
                nv.rotation.push_back(h);
        r.vertices.push_back(std::move(nv));
    }
    for (const auto& [l, t] : g.twists())
        if (!doomed.count(l))
            r.edges.emplace_back(l, t);
    return validate_rotation(r);
}

inline std::set<std::string> complement(const RibbonGraph& g, const std::set<std::string>& subset)
{
    std::set<std::string> out;
    for (const auto& [l, t] : g.twists())
        if (!subset.count(l))
            out.insert(l);
    return out;
}

inline void require_subset(const RibbonGraph& g, const std::set<std::string>& subset)
{
    for (const auto& l : subset)
        if (!g.has_edge(l))
            throw ValidationError("unknown edge label '" + l + "'");
}

namespace detail {

// Flag encoding. Edge index e (labels in sorted order), half-edge h = 2e+end,
// flag f = 2h+side where side 1 is the corner toward the rotation successor
// and side 0 the corner toward the predecessor. Three fixed-point-free
// involutions act on flags:
//   across_end (f^1)  swaps the two sides of one half-edge,
//   corner            joins (h,+) to (succ h,-) along the vertex boundary,
//   edge_side         joins the two ends of one long side of the edge ribbon.
// Vertices are <across_end, corner> orbits, boundary components are
// <corner, edge_side> orbits and edges are <across_end, edge_side> orbits.
struct FlagView {
    std::vector<std::string> labels;
    std::map<std::string, int> edge_index;
    std::vector<int> vertex_of; // per half-edge
    std::vector<int> succ;      // per half-edge
    std::vector<int> pred;      // per half-edge
    std::vector<char> twisted;  // per edge
    std::vector<int> isolated;  // vertex indices with empty rotation
    int num_vertices = 0;

    explicit FlagView(const RibbonGraph& g)
    {
        for (const auto& [l, t] : g.twists()) {
            edge_index[l] = static_cast<int>(labels.size());
            labels.push_back(l);
            twisted.push_back(t ? 1 : 0);
        }
        const int m = static_cast<int>(labels.size());
        vertex_of.assign(2 * m, -1);
        succ.assign(2 * m, -1);
        pred.assign(2 * m, -1);
        num_vertices = static_cast<int>(g.num_vertices());
        for (int vi = 0; vi < num_vertices; ++vi) {
            const auto& rot = g.vertices()[vi].rotation;
            if (rot.empty()) {
                isolated.push_back(vi);
                continue;
            }
            const int d = static_cast<int>(rot.size());
            for (int i = 0; i < d; ++i) {
                const int h = half_edge(rot[i]);
                const int n = half_edge(rot[(i + 1) % d]);
                vertex_of[h] = vi;
                succ[h] = n;
                pred[n] = h;
            }
        }
    }

    int half_edge(const HalfEdge& h) const { return 2 * edge_index.at(h.label) + h.end; }
    HalfEdge half_edge_name(int h) const { return HalfEdge{labels[h >> 1], h & 1}; }

    int num_edges() const { return static_cast<int>(labels.size()); }
    int num_flags() const { return 4 * num_edges(); }

    static int across_end(int f) { return f ^ 1; }
    int corner(int f) const
    {
        const int h = f >> 1;
        return (f & 1) ? 2 * succ[h] : 2 * pred[h] + 1;
    }
    int edge_side(int f) const
    {
        const int h = f >> 1;
        const int s = f & 1;
        const int other = h ^ 1;
        return 2 * other + (twisted[h >> 1] ? s : 1 - s);
    }
};

/// Union-find over small index sets.
struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(std::size_t n) : parent(n)
    {
        for (std::size_t i = 0; i < n; ++i)
            parent[i] = static_cast<int>(i);
    }
    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

} // namespace detail

} // namespace ribbon
