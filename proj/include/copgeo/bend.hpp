#pragma once

#include <array>
#include <string>
#include <vector>

#include "copgeo/geom.hpp"

namespace copgeo {

// Six rays at pi/3 spacing around an apex.
struct RaySystem {
    Point apex;
    double theta0 = 0;  // orientation of ray 0, in [0, pi/3)
    double ray(int j) const { return theta0 + j * (M_PI / 3); }
};

// Orientation such that every direction keeps angular distance > clearance
// from all six rays; theta0 is the midpoint of the largest allowed gap.
// Throws (with the blocking intervals in the message) when the forbidden
// measure covers the whole period, which cannot happen for <= 5 directions
// with the default clearance.
RaySystem find_safe_orientation(Point apex, const std::vector<double>& directions,
                                double clearance = M_PI / 37);

// One rerouted edge ending: the straight ending is replaced, inside the
// chosen hexagon, by a spoke from the apex to Q plus a run along the hexagon
// boundary from Q to P (the point where the edge crosses that hexagon).
struct EdgeBend {
    int index = 0;     // position in the input direction list
    double phi = 0;    // original edge direction
    int hex = 1;       // 1 = outer hexagon (side l1), 2 = inner (side l2)
    double psi = 0;    // spoke direction
    Point Q, P;
    Polyline curve;    // apex, Q, boundary corners..., P
    int arc_segments = 0;
};

struct BendPlan {
    Point apex;
    RaySystem rays;
    double l1 = 0, l2 = 0;
    double s1 = 0, s2 = 0;  // per-hexagon minimum segment length
    std::vector<EdgeBend> edges;  // input order
};

// Numeric re-check of a plan: segment lengths, joint angles, spoke spreads,
// inter-curve clearance against the required bound.
struct BendCheck {
    bool pass = false;
    std::string error;
    double min_segment_ratio = 0;  // min over segments of len / s_{pi(e)}
    double min_joint_angle = 0;    // along each rerouted edge curve
    double min_spoke_angle = 0;    // pairwise between spokes
    double clearance = 0;          // min distance between distinct curves
    double required_clearance = 0; // min{(sqrt3/2)(l1-l2), l2, (sqrt3/2)s1, delta_out}
};

BendCheck check_bend_plan(const BendPlan& plan);

// Reroute all edge endings at a degree <= 5 vertex so that every pair of
// consecutive segments meets at an angle > pi/3, spokes are pairwise > pi/3
// apart, and distinct curves keep the documented clearance.  l1 > l2 > 0;
// the incident edges must extend beyond the outer hexagon.
BendPlan bend_endings(Point apex, const std::vector<double>& directions,
                      double l1, double l2);

// s-coefficient: boundary points more than pi/37 past a hexagon corner are
// at least this fraction of the side length away from it.
double bend_s_coefficient();

}  // namespace copgeo
