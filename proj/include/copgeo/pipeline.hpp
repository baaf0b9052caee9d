#pragma once

#include <vector>

#include "copgeo/drawing.hpp"

namespace copgeo {

struct PipelineEdgeReport {
    int u = 0, v = 0;
    double length = 0;  // original straight-line edge length
    int lambda = 0;     // unit squares realizing the middle part
    int endings = 0;    // pieces spent on the two bent endings (E_i)
    int middle = 0;     // pieces in the middle part (= L - E_i)
};

struct PipelineConfig {
    double a = 0;      // base scale: hexagon sides are a and 1.5a
    int k = 0;         // zigzag order of the middle chains
    double r = 0;      // output drawing parameter (r_k * a)
    int L = 0;         // common per-edge subdivision length
    double alpha = 0;  // minimum angle between edges sharing a vertex
    std::vector<PipelineEdgeReport> edges;
};

// Turns a straight-line planar embedding with maximum degree <= 5 into a
// planar drawing of the uniform subdivision of its graph in which every edge
// has become a path of L segments, each of length at most r, realizing a
// geometric graph with parameter r.  The zigzag order k is chosen minimal
// for the instance unless force_k > 0 pins it.
Drawing theorem_a_pipeline(const Drawing& embedding, PipelineConfig* report = nullptr,
                           int force_k = 0);

// Split every edge of a geometric drawing into m equal collinear segments.
// The result is the m-fold subdivision of the graph drawn with parameter r/m.
Drawing refine(const Drawing& d, int m);

}  // namespace copgeo
