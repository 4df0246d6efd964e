#pragma once

// Line-oriented text formats.
//
//   .srs  vertex <vid>: <label>.<0|1> ...      edge <label> twist=<0|1>
//   .arp  cycle <cid>: <label><+|-> ...
//   .mg   vertex <vid>                          edge <label>: <vid> <vid>
//   .bij  [subset: <label> ...]                 map <g-label> <h-label>
//   .pde  primal / dual sections, each an .srs block plus
//         mark <colour> <vid> <position-index> <+|->
//
// '#' starts a comment. Writers emit edges and map lines sorted by label and
// vertices in stored order, so write -> parse -> write is byte-identical.

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arrow_marked.hpp"
#include "error.hpp"
#include "graph_duality.hpp"
#include "multigraph.hpp"
#include "partial_dual.hpp"
#include "ribbon_graph.hpp"

namespace ribbon {

namespace detail {

struct Line {
    std::size_t number;
    std::vector<std::string> words;
};

inline std::vector<Line> tokenize(const std::string& text)
{
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t n = 0;
    while (std::getline(in, raw)) {
        ++n;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ws(raw);
        Line l{n, {std::istream_iterator<std::string>(ws), std::istream_iterator<std::string>()}};
        if (!l.words.empty())
            out.push_back(std::move(l));
    }
    return out;
}

[[noreturn]] inline void fail(const Line& l, const std::string& what)
{
    throw ParseError("line " + std::to_string(l.number) + ": " + what);
}

inline std::string token_at(const Line& l, std::size_t i, const char* what)
{
    if (i >= l.words.size())
        fail(l, std::string("missing ") + what);
    if (!is_token(l.words[i]))
        fail(l, std::string("invalid ") + what + " '" + l.words[i] + "'");
    return l.words[i];
}

/// "head <id>:" with the colon attached or standalone; returns index of the first item.
inline std::size_t expect_header(const Line& l, std::string& id, const char* what)
{
    if (l.words.size() < 2)
        fail(l, std::string("missing ") + what);
    std::string w = l.words[1];
    std::size_t next = 2;
    if (!w.empty() && w.back() == ':') {
        w.pop_back();
    } else if (next < l.words.size() && l.words[next] == ":") {
        ++next;
    } else {
        fail(l, "expected ':' after " + std::string(what));
    }
    if (!is_token(w))
        fail(l, std::string("invalid ") + what + " '" + w + "'");
    id = w;
    return next;
}

inline HalfEdge parse_half_edge(const Line& l, const std::string& w)
{
    const auto dot = w.rfind('.');
    if (dot == std::string::npos || dot + 2 != w.size() || (w[dot + 1] != '0' && w[dot + 1] != '1'))
        fail(l, "bad half-edge '" + w + "'");
    const std::string label = w.substr(0, dot);
    if (!is_token(label))
        fail(l, "invalid edge label '" + label + "'");
    return HalfEdge{label, w[dot + 1] - '0'};
}

inline Direction parse_sign(const Line& l, const std::string& w)
{
    if (w == "+")
        return Direction::with;
    if (w == "-")
        return Direction::against;
    fail(l, "expected '+' or '-', got '" + w + "'");
}

// Shared by .srs and the sections of .pde.
struct SrsBuilder {
    RawRotation raw;

    bool accept(const Line& l)
    {
        const auto& head = l.words[0];
        if (head == "vertex") {
            Vertex v;
            for (std::size_t i = expect_header(l, v.id, "vertex id"); i < l.words.size(); ++i)
                v.rotation.push_back(parse_half_edge(l, l.words[i]));
            raw.vertices.push_back(std::move(v));
            return true;
        }
        if (head == "edge") {
            const auto label = token_at(l, 1, "edge label");
            if (l.words.size() != 3 || (l.words[2] != "twist=0" && l.words[2] != "twist=1"))
                fail(l, "expected 'edge <label> twist=<0|1>'");
            raw.edges.emplace_back(label, l.words[2] == "twist=1");
            return true;
        }
        return false;
    }
};

inline std::string write_srs_block(const RibbonGraph& g)
{
    std::string out;
    for (const auto& v : g.vertices()) {
        out += "vertex " + v.id + ":";
        for (const auto& h : v.rotation)
            out += " " + h.str();
        out += "\n";
    }
    for (const auto& [l, t] : g.twists())
        out += "edge " + l + (t ? " twist=1\n" : " twist=0\n");
    return out;
}

} // namespace detail

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << text;
}

// --- .srs ------------------------------------------------------------------

inline RibbonGraph parse_srs(const std::string& text)
{
    detail::SrsBuilder b;
    for (const auto& l : detail::tokenize(text))
        if (!b.accept(l))
            detail::fail(l, "unknown directive '" + l.words[0] + "'");
    return validate_rotation(b.raw);
}

inline std::string write_srs(const RibbonGraph& g) { return detail::write_srs_block(g); }

// --- .arp ------------------------------------------------------------------

inline ArrowPresentation parse_arp(const std::string& text)
{
    ArrowPresentation ap;
    for (const auto& l : detail::tokenize(text)) {
        if (l.words[0] != "cycle")
            detail::fail(l, "unknown directive '" + l.words[0] + "'");
        ArrowCycle c;
        for (std::size_t i = detail::expect_header(l, c.id, "cycle id"); i < l.words.size(); ++i) {
            const auto& w = l.words[i];
            if (w.size() < 2)
                detail::fail(l, "bad arrow token '" + w + "'");
            const std::string label = w.substr(0, w.size() - 1);
            if (!is_token(label))
                detail::fail(l, "invalid edge label '" + label + "'");
            c.tokens.push_back(ArrowToken{label, detail::parse_sign(l, w.substr(w.size() - 1))});
        }
        ap.cycles.push_back(std::move(c));
    }
    validate_arrow_presentation(ap);
    return ap;
}

inline std::string write_arp(const ArrowPresentation& ap)
{
    std::string out;
    for (const auto& c : ap.cycles) {
        out += "cycle " + c.id + ":";
        for (const auto& t : c.tokens)
            out += " " + t.label + to_char(t.direction);
        out += "\n";
    }
    return out;
}

// --- .mg -------------------------------------------------------------------

inline Multigraph parse_mg(const std::string& text)
{
    std::vector<std::string> vs;
    std::map<std::string, Multigraph::Endpoints> es;
    for (const auto& l : detail::tokenize(text)) {
        if (l.words[0] == "vertex") {
            if (l.words.size() != 2)
                detail::fail(l, "expected 'vertex <vid>'");
            vs.push_back(detail::token_at(l, 1, "vertex id"));
        } else if (l.words[0] == "edge") {
            std::string label;
            const auto i = detail::expect_header(l, label, "edge label");
            if (l.words.size() != i + 2)
                detail::fail(l, "expected 'edge <label>: <vid> <vid>'");
            const auto a = detail::token_at(l, i, "vertex id");
            const auto b = detail::token_at(l, i + 1, "vertex id");
            if (!es.emplace(label, Multigraph::Endpoints{a, b}).second)
                throw ValidationError("duplicate edge '" + label + "'");
        } else {
            detail::fail(l, "unknown directive '" + l.words[0] + "'");
        }
    }
    return Multigraph(std::move(vs), std::move(es));
}

inline std::string write_mg(const Multigraph& m)
{
    std::string out;
    for (const auto& v : m.vertices())
        out += "vertex " + v + "\n";
    for (const auto& [l, e] : m.edges())
        out += "edge " + l + ": " + e.first + " " + e.second + "\n";
    return out;
}

// --- .bij ------------------------------------------------------------------

struct BijFile {
    std::optional<std::set<std::string>> subset; ///< absent line means no subset given
    EdgeBijection map;

    Certificate certificate() const { return Certificate{subset.value_or(std::set<std::string>{}), map}; }
};

inline BijFile parse_bij(const std::string& text)
{
    BijFile b;
    std::set<std::string> targets;
    for (const auto& l : detail::tokenize(text)) {
        const auto& head = l.words[0];
        if (head == "subset:" || head == "subset") {
            std::size_t i = 1;
            if (head == "subset") {
                if (l.words.size() < 2 || l.words[1] != ":")
                    detail::fail(l, "expected 'subset:'");
                i = 2;
            }
            if (b.subset)
                detail::fail(l, "second subset line");
            std::set<std::string> s;
            for (; i < l.words.size(); ++i)
                if (!s.insert(detail::token_at(l, i, "edge label")).second)
                    detail::fail(l, "repeated label in subset");
            b.subset = std::move(s);
        } else if (head == "map") {
            if (l.words.size() != 3)
                detail::fail(l, "expected 'map <g-label> <h-label>'");
            const auto g = detail::token_at(l, 1, "edge label");
            const auto h = detail::token_at(l, 2, "edge label");
            if (!b.map.emplace(g, h).second)
                throw ValidationError("label '" + g + "' mapped twice");
            if (!targets.insert(h).second)
                throw ValidationError("label '" + h + "' is the image of two labels");
        } else {
            detail::fail(l, "unknown directive '" + head + "'");
        }
    }
    return b;
}

inline std::string write_bij(const BijFile& b)
{
    std::string out;
    if (b.subset) {
        out += "subset:";
        for (const auto& l : *b.subset)
            out += " " + l;
        out += "\n";
    }
    for (const auto& [g, h] : b.map)
        out += "map " + g + " " + h + "\n";
    return out;
}

inline std::string write_certificate(const Certificate& c) { return write_bij(BijFile{c.subset, c.map}); }

// --- .pde ------------------------------------------------------------------

namespace detail {

struct MarkLine {
    std::size_t line;
    std::string colour, vertex;
    std::size_t index;
    Direction direction;
};

inline ArrowMarkedRibbonGraph build_marked(const SrsBuilder& b, std::vector<MarkLine> marks)
{
    std::vector<MarkedVertex> vs;
    std::map<std::string, std::size_t> where;
    for (const auto& v : b.raw.vertices) {
        where[v.id] = vs.size();
        MarkedVertex mv{v.id, {}};
        for (const auto& h : v.rotation)
            mv.word.emplace_back(h);
        vs.push_back(std::move(mv));
    }
    std::stable_sort(marks.begin(), marks.end(), [](const MarkLine& a, const MarkLine& b) { return a.index < b.index; });
    for (const auto& m : marks) {
        const auto it = where.find(m.vertex);
        if (it == where.end())
            throw ParseError("line " + std::to_string(m.line) + ": mark on unknown vertex '" + m.vertex + "'");
        auto& word = vs[it->second].word;
        if (m.index > word.size())
            throw ParseError("line " + std::to_string(m.line) + ": mark position out of range");
        word.insert(word.begin() + static_cast<long>(m.index), Mark{m.colour, m.direction});
    }
    std::map<std::string, bool> twists;
    for (const auto& [l, t] : b.raw.edges)
        if (!twists.emplace(l, t).second)
            throw ValidationError("duplicate edge declaration '" + l + "'");
    return make_arrow_marked(std::move(vs), std::move(twists));
}

inline std::string write_marked_block(const ArrowMarkedRibbonGraph& am)
{
    std::string out = write_srs_block(am.base());
    for (const auto& m : am.marks())
        out += "mark " + m.colour + " " + m.vertex + " " + std::to_string(m.index) + " " + to_char(m.direction) + "\n";
    return out;
}

} // namespace detail

inline PartialDualEmbedding parse_pde(const std::string& text)
{
    detail::SrsBuilder blocks[2];
    std::vector<detail::MarkLine> marks[2];
    int section = -1;
    bool seen[2] = {false, false};
    for (const auto& l : detail::tokenize(text)) {
        const auto& head = l.words[0];
        if ((head == "primal" || head == "dual") && l.words.size() == 1) {
            section = head == "primal" ? 0 : 1;
            if (seen[section])
                detail::fail(l, "repeated section '" + head + "'");
            seen[section] = true;
            continue;
        }
        if (section < 0)
            detail::fail(l, "content before 'primal' or 'dual' section");
        if (blocks[section].accept(l))
            continue;
        if (head != "mark" || l.words.size() != 5)
            detail::fail(l, "expected 'mark <colour> <vid> <position-index> <+|->'");
        detail::MarkLine m{l.number, detail::token_at(l, 1, "mark colour"), detail::token_at(l, 2, "vertex id"), 0,
                           detail::parse_sign(l, l.words[4])};
        const auto& idx = l.words[3];
        if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](char c) { return c >= '0' && c <= '9'; }))
            detail::fail(l, "bad position index '" + idx + "'");
        m.index = std::stoul(idx);
        marks[section].push_back(std::move(m));
    }
    if (!seen[0] || !seen[1])
        throw ParseError("missing 'primal' or 'dual' section");
    PartialDualEmbedding pde{detail::build_marked(blocks[0], marks[0]), detail::build_marked(blocks[1], marks[1])};
    validate_pd_embedding(pde);
    return pde;
}

inline std::string write_pde(const PartialDualEmbedding& pde)
{
    return "primal\n" + detail::write_marked_block(pde.primal) + "dual\n" + detail::write_marked_block(pde.dualpart);
}

// --- format detection ------------------------------------------------------

enum class Format { srs, arp, mg, bij, pde };

inline std::optional<Format> format_from_name(const std::string& s)
{
    static const std::map<std::string, Format> names = {
        {"srs", Format::srs}, {"arp", Format::arp}, {"mg", Format::mg}, {"bij", Format::bij}, {"pde", Format::pde}};
    const auto it = names.find(s);
    if (it == names.end())
        return std::nullopt;
    return it->second;
}

inline std::optional<Format> format_from_path(const std::string& path)
{
    const auto dot = path.rfind('.');
    if (dot == std::string::npos)
        return std::nullopt;
    return format_from_name(path.substr(dot + 1));
}

/// Reads a ribbon graph from .srs or .arp text.
inline RibbonGraph parse_ribbon(const std::string& text, Format f)
{
    switch (f) {
    case Format::srs:
        return parse_srs(text);
    case Format::arp:
        return from_arrow_presentation(parse_arp(text));
    default:
        throw ParseError("expected a ribbon graph in .srs or .arp format");
    }
}

} // namespace ribbon
