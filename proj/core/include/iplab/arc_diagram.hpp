#pragma once

#include <string>

#include "iplab/noncross.hpp"
#include "iplab/ordered_graph.hpp"

namespace iplab {

// Vertices on a horizontal baseline in position order, every edge drawn as a
// semicircular arc above it.  With a coloring, each class gets a stroke from
// a fixed palette (cycled when classes outnumber it); without one all arcs
// share one stroke.  Output is deterministic: fixed layout constants, one
// decimal place, edges in index order.
std::string arc_diagram_svg(const OrderedGraph& g,
                            const EdgeColoring* coloring = nullptr);

}  // namespace iplab
