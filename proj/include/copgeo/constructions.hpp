#pragma once

#include <map>
#include <vector>

#include "copgeo/drawing.hpp"
#include "copgeo/graph.hpp"

namespace copgeo {

struct KnotRingCheck {
    double r = 0;    // geometric parameter the ring is sized against
    int n = 0;       // knot (clique) size
    bool feasible = false;
};

struct TheoremBOutput {
    Graph graph;      // clique substitution with inter-knot edges subdivided
    // original vertex -> ids of its knot's clique vertices
    std::vector<std::vector<int>> knots;
    int l_out = 1;
};

// The 20-vertex dodecahedron graph together with a fixed straight-line plane
// embedding (three nested pentagon layers around an inner pentagon).
Graph dodecahedron();
Drawing dodecahedron_embedding();

// A 440-vertex, 450-edge geometric drawing with parameter r = 2 whose graph
// is the dodecahedron with every edge subdivided into a 15-segment polygonal
// curve.  Planar, 2-cop-robber-escapable, hence cop number 3.
Drawing build_dodec440();

// A knot of n clique vertices can be drawn on a ring with all required
// gaps exceeding the parameter iff n < pi / arcsin(1/3), i.e. n <= 9.
KnotRingCheck knot_ring_feasible(int n);

// Clique substitution with every inter-knot edge subdivided into l_out
// segments; knots themselves stay unsubdivided.  Requires max degree <= 9.
TheoremBOutput theorem_b_combinatorial(const Graph& g, int l_out);

}  // namespace copgeo
