#pragma once

#include "arrow_marked.hpp"
#include "boundary.hpp"
#include "certify.hpp"
#include "equivalence.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "graph_duality.hpp"
#include "io.hpp"
#include "multigraph.hpp"
#include "natural_dual.hpp"
#include "partial_dual.hpp"
#include "ribbon_graph.hpp"
