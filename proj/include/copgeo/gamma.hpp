#pragma once

#include <utility>
#include <vector>

#include "copgeo/geom.hpp"

namespace copgeo {

// Parameters of the zigzag geometric path of order k, in the normalized frame
// where the endpoints are at distance 1.
struct GammaParams {
    int k = 0;
    double alpha;      // slant tilt, asin(1 / (2(2k+1)^2))
    double r;          // geometric-graph parameter: (sqrt2/4k)(1-(2k+1)tan alpha)
    double slant_len;  // sqrt2 / (2 cos alpha)
    Point x_dir;       // ( cos(pi/4-alpha),  sin(pi/4-alpha))
    Point y_dir;       // (-cos(pi/4+alpha), -sin(pi/4+alpha))
};

enum class SegRole { SlantX, SlantY, Flat };

// A zigzag geometric path between A and B: k+1 X-slants and k Y-slants (each
// subdivided into 2k+1 equal pieces) joined by 2k flat segments of length
// exactly r*dist(A,B).  All vertices lie in the square with diagonal AB.
struct GammaPath {
    GammaParams params;
    Point A, B;
    double scale = 1;  // dist(A, B)
    double r = 0;      // params.r * scale
    Polyline vertices;               // all subdivision points, A first, B last
    std::vector<SegRole> roles;      // the 4k+1 original segments in order
    // Per dent, inclusive vertex index range [first, last] into `vertices`.
    std::vector<std::pair<int, int>> dents;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

GammaParams gamma_params(int k);

// Full-length path: 4k^2+6k+1 edges.
GammaPath build_gamma(int k, Point A, Point B);

// Shrink dents to hit exactly `target` edges; valid range [5k+1, 4k^2+6k+1].
GammaPath adjust_gamma_length(const GammaPath& gp, int target);

struct Drawing;  // drawing.hpp

// Path-graph drawing of the zigzag with parameter gp.r.
Drawing to_drawing(const GammaPath& gp);

}  // namespace copgeo
