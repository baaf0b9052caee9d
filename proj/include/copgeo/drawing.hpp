#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "copgeo/geom.hpp"
#include "copgeo/graph.hpp"

namespace copgeo {

// A graph drawn in the plane with a distance parameter r: the edge set is
// supposed to be exactly the pairs at Euclidean distance <= r.
struct Drawing {
    Graph graph;
    std::vector<Point> coords;
    double r = 1;
    // Optional curved geometry per edge (u < v); used by the planarity
    // validator and the SVG emitter; absent edges are straight segments.
    std::map<std::pair<int, int>, Polyline> polylines;
    std::string provenance;
};

struct PairReport {
    int u = 0, v = 0;
    double distance = 0;
    std::string kind;  // "edge-too-long" | "nonedge-too-close" | "boundary" | "crossing"
};

struct ValidationReport {
    bool pass = true;
    double max_edge_dist = 0;
    double min_nonedge_dist = 0;  // min over examined candidate pairs; inf if none
    std::vector<PairReport> violations;
    std::vector<PairReport> boundary;  // pairs within [r-eps, r+eps]
};

// Distance-consistency check with tolerance band eps = 1e-9 * r: an edge
// longer than r+eps or a non-edge closer than r-eps is a violation; pairs
// inside the band are reported as boundary and must be edges.  Uses a uniform
// grid, O(n + m + close pairs).
ValidationReport validate_geometric(const Drawing& d);

// No two edge curves may intersect except at shared endpoints (exact
// coordinate equality).  Edges default to straight segments unless the
// drawing carries a polyline for them.
ValidationReport validate_planar_drawing(const Drawing& d);

}  // namespace copgeo
