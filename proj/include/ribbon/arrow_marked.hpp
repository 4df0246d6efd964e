#pragma once

// Arrow-marked ribbon graphs and arrow presentations.
//
// A marking arrow sits on a vertex boundary between two consecutive edge
// attachments. Its direction is recorded relative to the vertex's positive
// (rotation) direction. Removing an edge e leaves two e-coloured arrows; the
// edge ribbon is oriented so that its end-0 arrow points against the
// positive direction at its vertex, and its end-1 arrow points against it too
// when e is untwisted, with it when e is twisted. Consequently two arrows of
// one colour glue back to an untwisted edge exactly when they agree.

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ribbon_graph.hpp"

namespace ribbon {

enum class Direction { with, against };

inline Direction reversed(Direction d) { return d == Direction::with ? Direction::against : Direction::with; }
inline char to_char(Direction d) { return d == Direction::with ? '+' : '-'; }

struct Mark {
    std::string colour;
    Direction direction = Direction::with;

    friend bool operator==(const Mark&, const Mark&) = default;
};

using BoundaryItem = std::variant<HalfEdge, Mark>;

struct MarkedVertex {
    std::string id;
    std::vector<BoundaryItem> word; ///< cyclic, in the vertex's positive direction

    friend bool operator==(const MarkedVertex&, const MarkedVertex&) = default;
};

struct MarkPosition {
    std::string colour;
    std::string vertex;
    std::size_t index = 0; ///< position in the vertex's word
    Direction direction = Direction::with;
};

class ArrowMarkedRibbonGraph;
ArrowMarkedRibbonGraph make_arrow_marked(std::vector<MarkedVertex> vertices, std::map<std::string, bool> twists);

class ArrowMarkedRibbonGraph {
public:
    ArrowMarkedRibbonGraph() = default;

    const std::vector<MarkedVertex>& vertices() const { return vertices_; }
    const std::map<std::string, bool>& twists() const { return twists_; }
    const RibbonGraph& base() const { return base_; }

    std::vector<MarkPosition> marks() const
    {
        std::vector<MarkPosition> out;
        for (const auto& v : vertices_)
            for (std::size_t i = 0; i < v.word.size(); ++i)
                if (const auto* m = std::get_if<Mark>(&v.word[i]))
                    out.push_back(MarkPosition{m->colour, v.id, i, m->direction});
        return out;
    }

    std::set<std::string> colours() const
    {
        std::set<std::string> out;
        for (const auto& m : marks())
            out.insert(m.colour);
        return out;
    }

    friend bool operator==(const ArrowMarkedRibbonGraph& a, const ArrowMarkedRibbonGraph& b)
    {
        return a.vertices_ == b.vertices_ && a.twists_ == b.twists_;
    }

private:
    friend ArrowMarkedRibbonGraph make_arrow_marked(std::vector<MarkedVertex>, std::map<std::string, bool>);

    std::vector<MarkedVertex> vertices_;
    std::map<std::string, bool> twists_;
    RibbonGraph base_;
};

/// Validates and builds: the base must be a valid rotation system, every
/// colour must occur exactly twice and no colour may collide with an edge label.
inline ArrowMarkedRibbonGraph make_arrow_marked(std::vector<MarkedVertex> vertices, std::map<std::string, bool> twists)
{
    RawRotation raw;
    std::map<std::string, int> colour_count;
    for (const auto& v : vertices) {
        Vertex bv{v.id, {}};
        for (const auto& item : v.word) {
            if (const auto* h = std::get_if<HalfEdge>(&item)) {
                bv.rotation.push_back(*h);
            } else {
                const auto& m = std::get<Mark>(item);
                require_token(m.colour, "mark colour");
                ++colour_count[m.colour];
            }
        }
        raw.vertices.push_back(std::move(bv));
    }
    for (const auto& [l, t] : twists)
        raw.edges.emplace_back(l, t);

    ArrowMarkedRibbonGraph am;
    am.base_ = validate_rotation(raw);
    for (const auto& [c, n] : colour_count) {
        if (twists.count(c))
            throw ValidationError("mark colour '" + c + "' collides with an edge label");
        if (n != 2)
            throw ValidationError("mark colour '" + c + "' occurs " + std::to_string(n) + " times, expected 2");
    }
    am.vertices_ = std::move(vertices);
    am.twists_ = std::move(twists);
    return am;
}

/// Direction of the arrow left behind at half-edge `h` when its edge is removed.
inline Direction attachment_arrow(const HalfEdge& h, bool twisted)
{
    if (h.end == 0)
        return Direction::against;
    return twisted ? Direction::with : Direction::against;
}

/// Presents G as the spanning sub-ribbon graph G\B carrying two marks per
/// label of B at the former attachment arcs.
inline ArrowMarkedRibbonGraph arrow_marked_decompose(const RibbonGraph& g, const std::set<std::string>& removed)
{
    require_subset(g, removed);
    std::vector<MarkedVertex> vs;
    for (const auto& v : g.vertices()) {
        MarkedVertex mv{v.id, {}};
        for (const auto& h : v.rotation) {
            if (removed.count(h.label))
                mv.word.emplace_back(Mark{h.label, attachment_arrow(h, g.twisted(h.label))});
            else
                mv.word.emplace_back(h);
        }
        vs.push_back(std::move(mv));
    }
    std::map<std::string, bool> tw;
    for (const auto& [l, t] : g.twists())
        if (!removed.count(l))
            tw.emplace(l, t);
    return make_arrow_marked(std::move(vs), std::move(tw));
}

/// Glues one new edge per colour between its two marks. The first mark met
/// (vertex order, then word order) becomes end 0; the edge is untwisted iff
/// the two marks agree in direction.
inline RibbonGraph arrow_marked_reassemble(const ArrowMarkedRibbonGraph& am)
{
    std::map<std::string, std::vector<Direction>> dirs;
    RawRotation raw;
    for (const auto& v : am.vertices()) {
        Vertex nv{v.id, {}};
        for (const auto& item : v.word) {
            if (const auto* h = std::get_if<HalfEdge>(&item)) {
                nv.rotation.push_back(*h);
            } else {
                const auto& m = std::get<Mark>(item);
                auto& d = dirs[m.colour];
                nv.rotation.push_back(HalfEdge{m.colour, static_cast<int>(d.size())});
                d.push_back(m.direction);
            }
        }
        raw.vertices.push_back(std::move(nv));
    }
    for (const auto& [l, t] : am.twists())
        raw.edges.emplace_back(l, t);
    for (const auto& [c, d] : dirs)
        raw.edges.emplace_back(c, d.at(0) != d.at(1));
    return validate_rotation(raw);
}

// ---------------------------------------------------------------------------
// Arrow presentations: the arrow-marked form over the bare vertex set.

struct ArrowToken {
    std::string label;
    Direction direction = Direction::with;

    friend bool operator==(const ArrowToken&, const ArrowToken&) = default;
};

struct ArrowCycle {
    std::string id;
    std::vector<ArrowToken> tokens;

    friend bool operator==(const ArrowCycle&, const ArrowCycle&) = default;
};

struct ArrowPresentation {
    std::vector<ArrowCycle> cycles;

    friend bool operator==(const ArrowPresentation&, const ArrowPresentation&) = default;
};

inline void validate_arrow_presentation(const ArrowPresentation& ap)
{
    std::set<std::string> ids;
    std::map<std::string, int> count;
    for (const auto& c : ap.cycles) {
        require_token(c.id, "cycle id");
        if (!ids.insert(c.id).second)
            throw ValidationError("duplicate cycle '" + c.id + "'");
        for (const auto& t : c.tokens) {
            require_token(t.label, "edge label");
            ++count[t.label];
        }
    }
    for (const auto& [l, n] : count)
        if (n != 2)
            throw ValidationError("label '" + l + "' occurs " + std::to_string(n) + " times, expected 2");
}

inline ArrowPresentation to_arrow_presentation(const RibbonGraph& g)
{
    const auto am = arrow_marked_decompose(g, g.labels());
    ArrowPresentation ap;
    for (const auto& v : am.vertices()) {
        ArrowCycle c{v.id, {}};
        for (const auto& item : v.word) {
            const auto& m = std::get<Mark>(item);
            c.tokens.push_back(ArrowToken{m.colour, m.direction});
        }
        ap.cycles.push_back(std::move(c));
    }
    return ap;
}

inline RibbonGraph from_arrow_presentation(const ArrowPresentation& ap)
{
    validate_arrow_presentation(ap);
    std::vector<MarkedVertex> vs;
    for (const auto& c : ap.cycles) {
        MarkedVertex mv{c.id, {}};
        for (const auto& t : c.tokens)
            mv.word.emplace_back(Mark{t.label, t.direction});
        vs.push_back(std::move(mv));
    }
    return arrow_marked_reassemble(make_arrow_marked(std::move(vs), {}));
}

/// Reverses both arrows of one colour: an equivalence move on presentations.
inline ArrowPresentation reverse_colour(ArrowPresentation ap, const std::string& label)
{
    for (auto& c : ap.cycles)
        for (auto& t : c.tokens)
            if (t.label == label)
                t.direction = reversed(t.direction);
    return ap;
}

} // namespace ribbon
