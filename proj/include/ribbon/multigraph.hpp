#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ribbon_graph.hpp"

namespace ribbon {

/// Abstract graph with loops and parallel edges. Edge endpoints are stored
/// in the order given but carry no direction.
class Multigraph {
public:
    using Endpoints = std::pair<std::string, std::string>;

    Multigraph() = default;

    /// Throws ValidationError on bad tokens, duplicates or undeclared endpoints.
    Multigraph(std::vector<std::string> vertices, std::map<std::string, Endpoints> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges))
    {
        std::set<std::string> ids;
        for (const auto& v : vertices_) {
            require_token(v, "vertex id");
            if (!ids.insert(v).second)
                throw ValidationError("duplicate vertex '" + v + "'");
        }
        for (const auto& [l, ends] : edges_) {
            require_token(l, "edge label");
            if (!ids.count(ends.first) || !ids.count(ends.second))
                throw ValidationError("edge '" + l + "' has an undeclared endpoint");
        }
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::map<std::string, Endpoints>& edges() const { return edges_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    bool has_vertex(const std::string& v) const
    {
        return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
    }
    bool has_edge(const std::string& l) const { return edges_.count(l) != 0; }
    const Endpoints& ends(const std::string& l) const { return edges_.at(l); }

    std::size_t index_of(const std::string& v) const
    {
        return static_cast<std::size_t>(std::find(vertices_.begin(), vertices_.end(), v) - vertices_.begin());
    }

    std::set<std::string> labels() const
    {
        std::set<std::string> out;
        for (const auto& [l, e] : edges_)
            out.insert(l);
        return out;
    }

    /// Number of ends of edge `l` at `v` (0, 1 or 2).
    int ends_at(const std::string& l, const std::string& v) const
    {
        const auto& e = edges_.at(l);
        return (e.first == v ? 1 : 0) + (e.second == v ? 1 : 0);
    }

    /// Spanning subgraph keeping only the listed edges.
    Multigraph restricted(const std::set<std::string>& keep) const
    {
        std::map<std::string, Endpoints> es;
        for (const auto& [l, e] : edges_)
            if (keep.count(l))
                es.emplace(l, e);
        return Multigraph(vertices_, std::move(es));
    }

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::vector<std::string> vertices_;
    std::map<std::string, Endpoints> edges_;
};

/// Edge-ends at v; a loop counts twice.
inline std::size_t degree(const Multigraph& m, const std::string& v)
{
    if (!m.has_vertex(v))
        throw ValidationError("unknown vertex '" + v + "'");
    std::size_t d = 0;
    for (const auto& [l, e] : m.edges())
        d += static_cast<std::size_t>(m.ends_at(l, v));
    return d;
}

inline std::size_t isolated_count(const Multigraph& m)
{
    std::set<std::string> touched;
    for (const auto& [l, e] : m.edges()) {
        touched.insert(e.first);
        touched.insert(e.second);
    }
    return m.num_vertices() - touched.size();
}

/// Component id per vertex index (isolated vertices are their own components).
inline std::vector<int> vertex_components(const Multigraph& m)
{
    detail::DisjointSets ds(m.num_vertices());
    for (const auto& [l, e] : m.edges())
        ds.unite(static_cast<int>(m.index_of(e.first)), static_cast<int>(m.index_of(e.second)));
    std::vector<int> out(m.num_vertices());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = ds.find(static_cast<int>(i));
    return out;
}

inline bool is_connected(const Multigraph& m)
{
    const auto c = vertex_components(m);
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

/// Forgets twists and rotations: one multigraph edge per ribbon edge, joining
/// the vertices that host its two ends.
inline Multigraph core(const RibbonGraph& g)
{
    std::vector<std::string> vs;
    std::map<std::string, std::string> host[2];
    for (const auto& v : g.vertices()) {
        vs.push_back(v.id);
        for (const auto& h : v.rotation)
            host[h.end][h.label] = v.id;
    }
    std::map<std::string, Multigraph::Endpoints> es;
    for (const auto& [l, t] : g.twists())
        es.emplace(l, Multigraph::Endpoints{host[0].at(l), host[1].at(l)});
    return Multigraph(std::move(vs), std::move(es));
}

// ---------------------------------------------------------------------------
// Isomorphism.

struct GraphIsomorphism {
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> edge_map;
};

namespace detail {

/// Symmetric multiplicity matrix; loops on the diagonal.
inline std::vector<std::vector<int>> adjacency(const Multigraph& m)
{
    const std::size_t n = m.num_vertices();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (const auto& [l, e] : m.edges()) {
        const auto i = m.index_of(e.first);
        const auto j = m.index_of(e.second);
        ++a[i][j];
        if (i != j)
            ++a[j][i];
    }
    return a;
}

inline std::vector<int> degrees(const std::vector<std::vector<int>>& a)
{
    std::vector<int> d(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            d[i] += (i == j) ? 2 * a[i][j] : a[i][j];
    return d;
}

} // namespace detail

/// Backtracking search for an incidence-preserving bijection, pruned by degree.
inline std::optional<GraphIsomorphism> graph_isomorphic(const Multigraph& g, const Multigraph& h)
{
    if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges())
        return std::nullopt;
    const auto ag = detail::adjacency(g);
    const auto ah = detail::adjacency(h);
    const auto dg = detail::degrees(ag);
    const auto dh = detail::degrees(ah);
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh)
            return std::nullopt;
    }
    const std::size_t n = g.num_vertices();
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);

    auto extend = [&](auto&& self, std::size_t i) -> bool {
        if (i == n)
            return true;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || dg[i] != dh[c] || ag[i][i] != ah[c][c])
                continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = ag[i][j] == ah[c][static_cast<std::size_t>(image[j])];
            if (!ok)
                continue;
            image[i] = static_cast<int>(c);
            used[c] = 1;
            if (self(self, i + 1))
                return true;
            used[c] = 0;
            image[i] = -1;
        }
        return false;
    };
    if (!extend(extend, 0))
        return std::nullopt;

    GraphIsomorphism iso;
    for (std::size_t i = 0; i < n; ++i)
        iso.vertex_map[g.vertices()[i]] = h.vertices()[static_cast<std::size_t>(image[i])];
    // parallel classes are matched in label order
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> pool;
    auto key = [](std::string a, std::string b) {
        if (b < a)
            std::swap(a, b);
        return std::make_pair(a, b);
    };
    for (const auto& [l, e] : h.edges())
        pool[key(e.first, e.second)].push_back(l);
    for (auto& [k, v] : pool)
        std::reverse(v.begin(), v.end());
    for (const auto& [l, e] : g.edges()) {
        auto& bucket = pool[key(iso.vertex_map[e.first], iso.vertex_map[e.second])];
        iso.edge_map[l] = bucket.back();
        bucket.pop_back();
    }
    return iso;
}

/// Isomorphism-invariant code: the lexicographically smallest upper-triangular
/// multiplicity matrix over all vertex orders that sort degrees descending.
inline std::vector<int> multigraph_canonical_code(const Multigraph& m)
{
    const auto a = detail::adjacency(m);
    const auto d = detail::degrees(a);
    const std::size_t n = a.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int x, int y) { return d[x] > d[y] || (d[x] == d[y] && x < y); });

    // permute only within blocks of equal degree
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && d[perm[j]] == d[perm[i]])
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::vector<int> best;
    auto encode = [&]() {
        std::vector<int> code;
        code.reserve(n * (n + 1) / 2 + 1);
        code.push_back(static_cast<int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                code.push_back(a[perm[i]][perm[j]]);
        return code;
    };
    auto walk = [&](auto&& self, std::size_t b) -> void {
        if (b == blocks.size()) {
            auto c = encode();
            if (best.empty() || c < best)
                best = std::move(c);
            return;
        }
        auto first = perm.begin() + static_cast<long>(blocks[b].first);
        auto last = perm.begin() + static_cast<long>(blocks[b].second);
        std::sort(first, last);
        do {
            self(self, b + 1);
        } while (std::next_permutation(first, last));
    };
    walk(walk, 0);
    return best;
}

} // namespace ribbon
