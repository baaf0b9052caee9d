#include "copgeo/geom.hpp"

#include <algorithm>
#include <stdexcept>

namespace copgeo {

Point line_intersection(Point p1, Point p2, Point p3, Point p4) {
    Point d1 = p2 - p1, d2 = p4 - p3;
    double den = cross(d1, d2);
    if (den == 0) throw std::invalid_argument("line_intersection: parallel lines");
    double t = cross(p3 - p1, d2) / den;
    return p1 + d1 * t;
}

double point_segment_dist(Point p, Segment s) {
    Point d = s.b - s.a;
    double len2 = dot(d, d);
    if (len2 == 0) return dist(p, s.a);
    double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
    return dist(p, s.a + d * t);
}

static int orient(Point a, Point b, Point c) {
    Point u = b - a, w = c - a;
    double v = cross(u, w);
    // Treat cross products at floating-point noise level as collinear, so
    // nearly-collinear configurations fall through to the overlap tests
    // instead of reporting a phantom crossing.
    if (std::fabs(v) <= 1e-12 * std::sqrt(dot(u, u) * dot(w, w))) return 0;
    return v > 0 ? 1 : -1;
}

static bool on_segment(Point a, Point b, Point p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Segment s, Segment t) {
    int o1 = orient(s.a, s.b, t.a);
    int o2 = orient(s.a, s.b, t.b);
    int o3 = orient(t.a, t.b, s.a);
    int o4 = orient(t.a, t.b, s.b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(s.a, s.b, t.a)) return true;
    if (o2 == 0 && on_segment(s.a, s.b, t.b)) return true;
    if (o3 == 0 && on_segment(t.a, t.b, s.a)) return true;
    if (o4 == 0 && on_segment(t.a, t.b, s.b)) return true;
    return false;
}

double segment_dist(Segment s, Segment t) {
    if (segments_intersect(s, t)) return 0;
    return std::min(std::min(point_segment_dist(t.a, s), point_segment_dist(t.b, s)),
                    std::min(point_segment_dist(s.a, t), point_segment_dist(s.b, t)));
}

}  // namespace copgeo
