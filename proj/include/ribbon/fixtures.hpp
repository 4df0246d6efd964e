#pragma once

// Named example graphs, identical to the files under fixtures/.

#include <map>
#include <string>

#include "io.hpp"
#include "multigraph.hpp"
#include "ribbon_graph.hpp"

namespace ribbon::fixtures {

inline const std::map<std::string, std::string>& srs_texts()
{
    static const std::map<std::string, std::string> texts = {
        {"V0", "vertex v1:\n"},
        {"LOOP_U", "vertex v1: e.0 e.1\nedge e twist=0\n"},
        {"LOOP_T", "vertex v1: e.0 e.1\nedge e twist=1\n"},
        {"B2_INT", "vertex v1: e.0 f.0 e.1 f.1\nedge e twist=0\nedge f twist=0\n"},
        {"THETA", "vertex u: a.0 b.0 c.0\nvertex w: c.1 b.1 a.1\nedge a twist=0\nedge b twist=0\nedge c twist=0\n"},
        {"DIPOLE2_R", "vertex u: e.0 f.0\nvertex w: f.1 e.1\nedge e twist=0\nedge f twist=0\n"},
    };
    return texts;
}

inline RibbonGraph named(const std::string& name) { return parse_srs(srs_texts().at(name)); }

inline RibbonGraph v0() { return named("V0"); }
inline RibbonGraph loop_u() { return named("LOOP_U"); }
inline RibbonGraph loop_t() { return named("LOOP_T"); }
inline RibbonGraph b2_int() { return named("B2_INT"); }
inline RibbonGraph theta() { return named("THETA"); }
inline RibbonGraph dipole2_r() { return named("DIPOLE2_R"); }

inline Multigraph theta_graph() { return parse_mg("vertex u\nvertex w\nedge a: u w\nedge b: u w\nedge c: u w\n"); }
inline Multigraph dipole2_graph() { return parse_mg("vertex u\nvertex w\nedge e: u w\nedge f: u w\n"); }
inline Multigraph bouquet2_graph() { return parse_mg("vertex v\nedge e: v v\nedge f: v v\n"); }

} // namespace ribbon::fixtures
