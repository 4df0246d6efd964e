#pragma once

// Equivalence of ribbon graphs.
//
// Two ribbon graphs are equivalent when one is reachable from the other by
// cyclic rotation of vertex sequences, whole-vertex flips, renaming vertices,
// swapping the two end names of an edge and, for the unlabeled relation,
// renaming edges. These moves generate exactly the isomorphisms of the flag
// structure (three involutions on 4e flags), so equivalence is decided by a
// canonical form: each connected component is numbered breadth-first from
// every possible starting flag and the smallest code wins.

#include <algorithm>
#include <string>
#include <vector>

#include "ribbon_graph.hpp"

namespace ribbon {

struct CanonicalForm {
    std::vector<std::vector<int>> components; ///< sorted
    std::vector<std::vector<std::string>> component_labels;
    std::size_t isolated = 0;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

struct ComponentCode {
    std::vector<int> code;
    std::vector<std::string> labels;
    friend auto operator<=>(const ComponentCode&, const ComponentCode&) = default;
};

inline ComponentCode code_from(const FlagView& fv, int start, bool labeled, std::size_t size)
{
    std::vector<int> number(fv.num_flags(), -1);
    std::vector<int> order;
    order.reserve(size);
    number[start] = 0;
    order.push_back(start);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int f = order[i];
        for (int n : {FlagView::across_end(f), fv.corner(f), fv.edge_side(f)}) {
            if (number[n] < 0) {
                number[n] = static_cast<int>(order.size());
                order.push_back(n);
            }
        }
    }
    ComponentCode cc;
    cc.code.reserve(3 * order.size());
    for (int f : order) {
        cc.code.push_back(number[FlagView::across_end(f)]);
        cc.code.push_back(number[fv.corner(f)]);
        cc.code.push_back(number[fv.edge_side(f)]);
    }
    if (labeled) {
        // one label per edge orbit, in order of first appearance
        std::vector<char> done(fv.num_edges(), 0);
        for (int f : order) {
            const int e = f >> 2;
            if (!done[e]) {
                done[e] = 1;
                cc.labels.push_back(fv.labels[e]);
            }
        }
    }
    return cc;
}

} // namespace detail

inline CanonicalForm canonical_form(const RibbonGraph& g, bool labeled)
{
    const detail::FlagView fv(g);
    const int nflags = fv.num_flags();
    std::vector<int> comp(nflags, -1);
    std::vector<std::vector<int>> members;
    for (int s = 0; s < nflags; ++s) {
        if (comp[s] >= 0)
            continue;
        const int id = static_cast<int>(members.size());
        members.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            const int f = stack.back();
            stack.pop_back();
            members[id].push_back(f);
            for (int n : {detail::FlagView::across_end(f), fv.corner(f), fv.edge_side(f)}) {
                if (comp[n] < 0) {
                    comp[n] = id;
                    stack.push_back(n);
                }
            }
        }
    }
    std::vector<detail::ComponentCode> codes;
    for (const auto& m : members) {
        detail::ComponentCode best;
        bool first = true;
        for (int start : m) {
            auto cc = detail::code_from(fv, start, labeled, m.size());
            if (first || cc < best) {
                best = std::move(cc);
                first = false;
            }
        }
        codes.push_back(std::move(best));
    }
    std::sort(codes.begin(), codes.end());
    CanonicalForm out;
    for (auto& c : codes) {
        out.components.push_back(std::move(c.code));
        out.component_labels.push_back(std::move(c.labels));
    }
    out.isolated = fv.isolated.size();
    return out;
}

inline bool equivalent(const RibbonGraph& a, const RibbonGraph& b, bool labeled)
{
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
        return false;
    if (labeled && a.labels() != b.labels())
        return false;
    return canonical_form(a, labeled) == canonical_form(b, labeled);
}

} // namespace ribbon
