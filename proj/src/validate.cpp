#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "copgeo/drawing.hpp"

namespace copgeo {

namespace {

inline int64_t cell_key(int ix, int iy) {
    return (static_cast<int64_t>(ix) << 32) ^ (static_cast<uint32_t>(iy));
}

// Uniform grid over points with cell size `cell`; neighbors within `cell`
// of each other are always in adjacent cells.
struct PointGrid {
    double cell;
    std::unordered_map<int64_t, std::vector<int>> bins;

    PointGrid(const std::vector<Point>& pts, double cell_) : cell(cell_) {
        bins.reserve(pts.size());
        for (int i = 0; i < static_cast<int>(pts.size()); ++i)
            bins[key(pts[i])].push_back(i);
    }
    int64_t key(Point p) const {
        return cell_key(static_cast<int>(std::floor(p.x / cell)),
                        static_cast<int>(std::floor(p.y / cell)));
    }
};

}  // namespace

ValidationReport validate_geometric(const Drawing& d) {
    ValidationReport rep;
    const auto& pts = d.coords;
    int n = static_cast<int>(pts.size());
    double r = d.r;
    double eps = 1e-9 * r;
    rep.min_nonedge_dist = std::numeric_limits<double>::infinity();

    auto classify = [&](int u, int v, double dd) {
        bool edge = d.graph.has_edge(u, v);
        bool in_band = dd >= r - eps && dd <= r + eps;
        if (in_band) rep.boundary.push_back({u, v, dd, "boundary"});
        if (edge) {
            rep.max_edge_dist = std::max(rep.max_edge_dist, dd);
            if (dd > r + eps) {
                rep.violations.push_back({u, v, dd, "edge-too-long"});
                rep.pass = false;
            }
        } else {
            rep.min_nonedge_dist = std::min(rep.min_nonedge_dist, dd);
            if (dd <= r + eps) {  // includes boundary band: non-edges must clear r
                rep.violations.push_back({u, v, dd, "nonedge-too-close"});
                rep.pass = false;
            }
        }
    };

    // All pairs within r (+band) live in adjacent grid cells.
    PointGrid grid(pts, r + 2 * eps);
    for (int u = 0; u < n; ++u) {
        int ix = static_cast<int>(std::floor(pts[u].x / grid.cell));
        int iy = static_cast<int>(std::floor(pts[u].y / grid.cell));
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                auto it = grid.bins.find(cell_key(ix + dx, iy + dy));
                if (it == grid.bins.end()) continue;
                for (int v : it->second) {
                    if (v <= u) continue;
                    double dd = dist(pts[u], pts[v]);
                    if (dd <= r + eps) classify(u, v, dd);
                }
            }
    }
    // Long edges would be missed by the grid: scan the edge list too.
    for (auto [u, v] : d.graph.edges()) {
        double dd = dist(pts[u], pts[v]);
        if (dd > r + eps) classify(u, v, dd);
    }

    auto lt = [](const PairReport& a, const PairReport& b) {
        return std::tie(a.u, a.v, a.kind) < std::tie(b.u, b.v, b.kind);
    };
    std::sort(rep.violations.begin(), rep.violations.end(), lt);
    rep.violations.erase(std::unique(rep.violations.begin(), rep.violations.end(),
                                     [](auto& a, auto& b) { return a.u == b.u && a.v == b.v && a.kind == b.kind; }),
                         rep.violations.end());
    std::sort(rep.boundary.begin(), rep.boundary.end(), lt);
    return rep;
}

ValidationReport validate_planar_drawing(const Drawing& d) {
    ValidationReport rep;
    rep.min_nonedge_dist = std::numeric_limits<double>::infinity();

    // Flatten every edge curve into segments tagged with their edge id.
    struct Seg {
        Segment s;
        int edge;
    };
    std::vector<Seg> segs;
    auto edges = d.graph.edges();
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        auto [u, v] = edges[e];
        auto it = d.polylines.find({u, v});
        if (it != d.polylines.end()) {
            const Polyline& pl = it->second;
            for (size_t i = 0; i + 1 < pl.size(); ++i)
                segs.push_back({{pl[i], pl[i + 1]}, e});
        } else {
            segs.push_back({{d.coords[u], d.coords[v]}, e});
        }
    }

    // Grid-bin segments by bounding box; cell = max segment extent.
    double cell = 1e-12;
    for (const auto& sg : segs)
        cell = std::max({cell, std::abs(sg.s.a.x - sg.s.b.x), std::abs(sg.s.a.y - sg.s.b.y)});
    std::unordered_map<int64_t, std::vector<int>> bins;
    auto cells_of = [&](Segment s, auto&& f) {
        int x0 = static_cast<int>(std::floor(std::min(s.a.x, s.b.x) / cell));
        int x1 = static_cast<int>(std::floor(std::max(s.a.x, s.b.x) / cell));
        int y0 = static_cast<int>(std::floor(std::min(s.a.y, s.b.y) / cell));
        int y1 = static_cast<int>(std::floor(std::max(s.a.y, s.b.y) / cell));
        for (int x = x0; x <= x1; ++x)
            for (int y = y0; y <= y1; ++y) f(cell_key(x, y));
    };
    for (int i = 0; i < static_cast<int>(segs.size()); ++i)
        cells_of(segs[i].s, [&](int64_t k) { bins[k].push_back(i); });

    auto share_endpoint = [](Segment a, Segment b) {
        return a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b;
    };

    std::vector<std::pair<int, int>> cand;
    for (int i = 0; i < static_cast<int>(segs.size()); ++i)
        cells_of(segs[i].s, [&](int64_t k) {
            auto it = bins.find(k);
            if (it == bins.end()) return;
            for (int j : it->second)
                if (j > i) cand.emplace_back(i, j);
        });
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    for (auto [i, j] : cand) {
        if (share_endpoint(segs[i].s, segs[j].s)) continue;
        if (segments_intersect(segs[i].s, segs[j].s)) {
            rep.violations.push_back({segs[i].edge, segs[j].edge, 0.0, "crossing"});
            rep.pass = false;
        }
    }
    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const PairReport& a, const PairReport& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return rep;
}

}  // namespace copgeo
