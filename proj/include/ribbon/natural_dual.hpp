#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "arrow_marked.hpp"
#include "ribbon_graph.hpp"

namespace ribbon {

/// Natural dual of an arrow-marked ribbon graph.
///
/// Dual vertices are the boundary components of the base; every edge keeps
/// its label and is attached along its complementary sides. Marks live on
/// vertex arcs, which the base and its dual share, so each mark is carried
/// across with its order and direction re-expressed in the dual vertex's
/// traversal direction. Dual vertices are named `<prefix>1, <prefix>2, ...`
/// in order of the smallest flag on each boundary component; isolated discs
/// come last and are their own duals.
inline ArrowMarkedRibbonGraph natural_dual_marked(const ArrowMarkedRibbonGraph& am, const std::string& prefix = "f")
{
    const RibbonGraph& g = am.base();
    const detail::FlagView fv(g);

    std::vector<std::vector<Mark>> after(2 * fv.num_edges());
    std::vector<std::vector<Mark>> isolated_words;
    for (const auto& v : am.vertices()) {
        int current = -1;
        std::vector<Mark> leading;
        for (const auto& item : v.word) {
            if (const auto* h = std::get_if<HalfEdge>(&item)) {
                current = fv.half_edge(*h);
            } else if (current < 0) {
                leading.push_back(std::get<Mark>(item));
            } else {
                after[current].push_back(std::get<Mark>(item));
            }
        }
        if (current < 0) {
            isolated_words.push_back(std::move(leading));
        } else {
            // marks before the first half-edge belong to the wrap-around arc
            auto& tail = after[current];
            tail.insert(tail.end(), leading.begin(), leading.end());
        }
    }

    const int nflags = fv.num_flags();
    std::vector<int> sign(nflags, -1);
    std::vector<MarkedVertex> dual;
    int counter = 0;
    for (int start = 0; start < nflags; ++start) {
        if (sign[start] >= 0)
            continue;
        MarkedVertex dv{prefix + std::to_string(++counter), {}};
        int cur = start;
        do {
            const int minus = cur;
            const int plus = fv.edge_side(cur);
            sign[minus] = 0;
            sign[plus] = 1;
            const int e = minus >> 2;
            const int key = 4 * e + 1;
            const int end = (minus == key || plus == key) ? 0 : 1;
            dv.word.emplace_back(HalfEdge{fv.labels[e], end});
            const int h = plus >> 1;
            if (plus & 1) {
                for (const auto& m : after[h])
                    dv.word.emplace_back(m);
            } else {
                const auto& arc = after[fv.pred[h]];
                for (auto it = arc.rbegin(); it != arc.rend(); ++it)
                    dv.word.emplace_back(Mark{it->colour, reversed(it->direction)});
            }
            cur = fv.corner(plus);
        } while (cur != start);
        dual.push_back(std::move(dv));
    }
    for (auto& w : isolated_words) {
        MarkedVertex dv{prefix + std::to_string(++counter), {}};
        for (auto& m : w)
            dv.word.emplace_back(std::move(m));
        dual.push_back(std::move(dv));
    }

    std::map<std::string, bool> tw;
    for (int e = 0; e < fv.num_edges(); ++e) {
        const int y0 = 4 * e + 1;
        const int y1 = fv.edge_side(y0);
        const int plus = sign[y0] == 1 ? y0 : y1;
        tw.emplace(fv.labels[e], sign[plus ^ 1] == 1);
    }
    return make_arrow_marked(std::move(dual), std::move(tw));
}

struct NaturalDual {
    RibbonGraph graph;
    std::map<std::string, std::string> edge_map; ///< label-preserving: e -> e
};

inline NaturalDual natural_dual(const RibbonGraph& g)
{
    const auto am = arrow_marked_decompose(g, {});
    NaturalDual out;
    out.graph = natural_dual_marked(am).base();
    for (const auto& l : g.labels())
        out.edge_map.emplace(l, l);
    return out;
}

} // namespace ribbon
