#pragma once

// Independent oracles for the unit tests. None of these reuse the flag
// machinery of the library: faces are traced with the classic signed
// rotation walk, and equivalence is decided by brute force over moves.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ribbon/ribbon.hpp"

namespace oracle {

using ribbon::HalfEdge;
using ribbon::RibbonGraph;

/// Boundary components by the signed face-tracing walk. States are
/// (half-edge leaving a vertex, local sense); each face is traced once in
/// each sense, so p = orbits / 2, plus one per edgeless vertex.
inline std::size_t face_count(const RibbonGraph& g)
{
    std::map<HalfEdge, std::pair<std::size_t, std::size_t>> where; // vertex, position
    std::size_t isolated = 0;
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        const auto& rot = g.vertices()[v].rotation;
        isolated += rot.empty() ? 1 : 0;
        for (std::size_t i = 0; i < rot.size(); ++i)
            where[rot[i]] = {v, i};
    }
    auto neighbour = [&](const HalfEdge& h, int sense) {
        const auto [v, i] = where.at(h);
        const auto& rot = g.vertices()[v].rotation;
        const std::size_t n = rot.size();
        return rot[sense > 0 ? (i + 1) % n : (i + n - 1) % n];
    };
    std::set<std::pair<HalfEdge, int>> seen;
    std::size_t orbits = 0;
    for (const auto& [h0, pos] : where) {
        for (int s0 : {1, -1}) {
            if (seen.count({h0, s0}))
                continue;
            ++orbits;
            HalfEdge h = h0;
            int s = s0;
            while (seen.insert({h, s}).second) {
                const HalfEdge other{h.label, 1 - h.end};
                if (g.twisted(h.label))
                    s = -s;
                h = neighbour(other, s);
            }
        }
    }
    return orbits / 2 + isolated;
}

/// Orientable iff some choice of vertex flips removes every twist from
/// non-loop edges and no loop is twisted. Brute force over flip masks.
inline bool orientable(const RibbonGraph& g)
{
    const std::size_t n = g.num_vertices();
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        RibbonGraph h = g;
        for (std::size_t v = 0; v < n; ++v)
            if ((mask >> v) & 1UL)
                h = ribbon::vertex_flip(h, g.vertices()[v].id);
        bool ok = true;
        for (const auto& [l, t] : h.twists())
            ok = ok && !t;
        if (ok)
            return true;
    }
    return false;
}

namespace detail {

using Shape = std::pair<std::multiset<std::vector<HalfEdge>>, std::map<std::string, bool>>;

inline std::vector<HalfEdge> least_rotation(std::vector<HalfEdge> r)
{
    auto best = r;
    for (std::size_t i = 1; i < r.size(); ++i) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        best = std::min(best, r);
    }
    return best;
}

inline Shape shape(const RibbonGraph& g)
{
    Shape s;
    for (const auto& v : g.vertices())
        s.first.insert(least_rotation(v.rotation));
    s.second = g.twists();
    return s;
}

inline RibbonGraph swap_ends(const RibbonGraph& g, const std::string& label)
{
    auto raw = g.raw();
    for (auto& v : raw.vertices)
        for (auto& h : v.rotation)
            if (h.label == label)
                h.end = 1 - h.end;
    return ribbon::validate_rotation(raw);
}

inline RibbonGraph relabel(const RibbonGraph& g, const std::map<std::string, std::string>& m)
{
    auto raw = g.raw();
    for (auto& v : raw.vertices)
        for (auto& h : v.rotation)
            h.label = m.at(h.label);
    for (auto& e : raw.edges)
        e.first = m.at(e.first);
    return ribbon::validate_rotation(raw);
}

} // namespace detail

/// Brute-force equivalence: tries every flip mask and end-swap mask on `a`
/// (and every edge relabeling when unlabeled); vertex names and cyclic
/// shifts are quotiented by comparing multisets of least rotations.
inline bool equivalent(const RibbonGraph& a, const RibbonGraph& b, bool labeled)
{
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
        return false;
    const auto target = detail::shape(b);
    const auto la_set = a.labels();
    const std::vector<std::string> la(la_set.begin(), la_set.end());
    const auto lb_set = b.labels();
    std::vector<std::string> lb(lb_set.begin(), lb_set.end());
    if (labeled && la != lb)
        return false;
    std::sort(lb.begin(), lb.end());
    do {
        std::map<std::string, std::string> m;
        for (std::size_t i = 0; i < la.size(); ++i)
            m[la[i]] = labeled ? la[i] : lb[i];
        const auto base = detail::relabel(a, m);
        for (unsigned long flips = 0; flips < (1UL << base.num_vertices()); ++flips) {
            RibbonGraph f = base;
            for (std::size_t v = 0; v < base.num_vertices(); ++v)
                if ((flips >> v) & 1UL)
                    f = ribbon::vertex_flip(f, base.vertices()[v].id);
            const auto ls_set = f.labels();
            const std::vector<std::string> ls(ls_set.begin(), ls_set.end());
            for (unsigned long swaps = 0; swaps < (1UL << ls.size()); ++swaps) {
                RibbonGraph s = f;
                for (std::size_t i = 0; i < ls.size(); ++i)
                    if ((swaps >> i) & 1UL)
                        s = detail::swap_ends(s, ls[i]);
                if (detail::shape(s) == target)
                    return true;
            }
        }
    } while (!labeled && std::next_permutation(lb.begin(), lb.end()));
    return false;
}

/// Every subset of the labels of `g`.
inline std::vector<std::set<std::string>> subsets(const RibbonGraph& g)
{
    const auto ls_set = g.labels();
    const std::vector<std::string> ls(ls_set.begin(), ls_set.end());
    std::vector<std::set<std::string>> out;
    for (unsigned long mask = 0; mask < (1UL << ls.size()); ++mask) {
        std::set<std::string> s;
        for (std::size_t i = 0; i < ls.size(); ++i)
            if ((mask >> i) & 1UL)
                s.insert(ls[i]);
        out.push_back(std::move(s));
    }
    return out;
}

/// Ribbon graphs with at most 3 vertices and 3 edges, plus the named fixtures.
inline const std::vector<RibbonGraph>& small_corpus()
{
    static const std::vector<RibbonGraph> corpus = [] {
        auto c = ribbon::corpus_generate(3, 3).ribbon_graphs;
        for (const auto& [name, text] : ribbon::fixtures::srs_texts())
            c.push_back(ribbon::fixtures::named(name));
        return c;
    }();
    return corpus;
}

inline ribbon::Multigraph mg(const std::string& text) { return ribbon::parse_mg(text); }

} // namespace oracle
