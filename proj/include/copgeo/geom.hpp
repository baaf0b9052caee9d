#pragma once

#include <cmath>
#include <vector>

namespace copgeo {

struct Point {
    double x = 0, y = 0;
    Point operator+(Point o) const { return {x + o.x, y + o.y}; }
    Point operator-(Point o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Point&) const = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

struct Segment {
    Point a, b;
};

using Polyline = std::vector<Point>;

// Intersection of the infinite lines through (p1,p2) and (p3,p4).
// Requires non-parallel lines.
Point line_intersection(Point p1, Point p2, Point p3, Point p4);

// Distance from point p to segment s.
double point_segment_dist(Point p, Segment s);

// Minimum distance between two segments (0 when they intersect).
double segment_dist(Segment s, Segment t);

// True if the segments share at least one point (touching counts).
bool segments_intersect(Segment s, Segment t);

}  // namespace copgeo
