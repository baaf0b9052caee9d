#include "copgeo/gamma.hpp"

#include "copgeo/drawing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace copgeo {

GammaParams gamma_params(int k) {
    if (k < 1) throw std::invalid_argument("gamma_params: k must be >= 1");
    GammaParams p;
    p.k = k;
    double m = 2.0 * (2 * k + 1) * (2 * k + 1);
    p.alpha = std::asin(1.0 / m);
    p.r = std::sqrt(2.0) / (4.0 * k) * (1.0 - (2 * k + 1) * std::tan(p.alpha));
    p.slant_len = std::sqrt(2.0) / (2.0 * std::cos(p.alpha));
    p.x_dir = {std::cos(M_PI / 4 - p.alpha), std::sin(M_PI / 4 - p.alpha)};
    p.y_dir = {-std::cos(M_PI / 4 + p.alpha), -std::sin(M_PI / 4 + p.alpha)};
    return p;
}

GammaPath build_gamma(int k, Point A, Point B) {
    if (dist(A, B) == 0) throw std::invalid_argument("build_gamma: A and B coincide");
    GammaParams prm = gamma_params(k);

    GammaPath gp;
    gp.params = prm;
    gp.A = A;
    gp.B = B;
    gp.scale = dist(A, B);
    gp.r = prm.r * gp.scale;

    // Build in the normalized frame (A at origin, B at (1,0)), mapping points
    // through the similarity u = B - A on the fly.
    Point u = B - A;
    auto map = [&](Point p) { return Point{A.x + u.x * p.x - u.y * p.y, A.y + u.y * p.x + u.x * p.y}; };

    // Flats all point along (1,-1)/sqrt2: they lie alternately on the two
    // diagonal sides of the square and advance the path toward B.
    Point flat_step = Point{std::sqrt(0.5), -std::sqrt(0.5)} * prm.r;
    int pieces = 2 * k + 1;
    double step = prm.slant_len / pieces;

    Point cur{0, 0};
    gp.vertices.push_back(map(cur));
    auto slant = [&](Point dir) {
        for (int j = 1; j <= pieces; ++j)
            gp.vertices.push_back(map(cur + dir * (step * j)));
        cur = cur + dir * prm.slant_len;
    };
    auto flat = [&]() {
        cur = cur + flat_step;
        gp.vertices.push_back(map(cur));
    };
    for (int i = 0; i < k; ++i) {
        int first = static_cast<int>(gp.vertices.size()) - 1;
        slant(prm.x_dir);
        gp.roles.push_back(SegRole::SlantX);
        flat();
        gp.roles.push_back(SegRole::Flat);
        slant(prm.y_dir);
        gp.roles.push_back(SegRole::SlantY);
        gp.dents.emplace_back(first, static_cast<int>(gp.vertices.size()) - 1);
        flat();
        gp.roles.push_back(SegRole::Flat);
    }
    slant(prm.x_dir);
    gp.roles.push_back(SegRole::SlantX);
    return gp;
}

namespace {

// Rebuild one dent (vertices p_0..p_{2k+1}, q_{2k+1}..q_0 of `src` in range
// [f, l]) at graph length s in [2, 4k+2], appending to `out`:
//   s = 2t+2: p_0..p_t, w, q_t..q_0 with w the crossing of p_t q_{t+1} and
//             q_t p_{t+1};
//   s = 2t+3: p_0..p_t, p', q', q_t..q_0 with p', q' pulled toward w until
//             dist(p', q') drops into [0.9r, r] while p_t stays > r from q'.
void emit_dent(const Polyline& src, int f, int l, int s, double r, Polyline& out) {
    auto p = [&](int i) { return src[f + i]; };
    auto q = [&](int i) { return src[l - i]; };
    bool even = s % 2 == 0;
    int t = even ? (s - 2) / 2 : (s - 3) / 2;
    Point w = line_intersection(p(t), q(t + 1), q(t), p(t + 1));
    for (int i = 0; i <= t; ++i) out.push_back(p(i));
    if (even) {
        out.push_back(w);
    } else {
        double lo = 0, hi = 1;  // dist(p',q') decreases from > r to 0
        for (int it = 0; it < 80; ++it) {
            double mid = (lo + hi) / 2;
            Point pp = p(t + 1) + (w - p(t + 1)) * mid;
            Point qq = q(t + 1) + (w - q(t + 1)) * mid;
            (dist(pp, qq) > 0.95 * r ? lo : hi) = mid;
        }
        Point pp = p(t + 1) + (w - p(t + 1)) * hi;
        Point qq = q(t + 1) + (w - q(t + 1)) * hi;
        double d = dist(pp, qq);
        if (d < 0.9 * r || d > r || dist(p(t), qq) <= r * (1 + 1e-6) ||
            dist(q(t), pp) <= r * (1 + 1e-6))
            throw std::runtime_error("adjust_gamma_length: dent insertion failed");
        out.push_back(pp);
        out.push_back(qq);
    }
    for (int i = t; i >= 0; --i) out.push_back(q(i));
}

}  // namespace

GammaPath adjust_gamma_length(const GammaPath& gp, int target) {
    int k = gp.params.k;
    int full = 4 * k * k + 6 * k + 1;
    int lo = 5 * k + 1;
    if (target < lo || target > full)
        throw std::invalid_argument("adjust_gamma_length: target must be in [" +
                                    std::to_string(lo) + ", " + std::to_string(full) + "]");
    int deficit = full - target;
    // Assign reductions from the last dent backward; each dent can shed up to
    // 4k+1 edges (from 4k+3 down to 2).
    std::vector<int> red(k, 0);
    for (int i = k - 1; i >= 0 && deficit > 0; --i) {
        red[i] = std::min(deficit, 4 * k + 1);
        deficit -= red[i];
    }

    GammaPath out = gp;
    out.vertices.clear();
    out.dents.clear();
    for (int i = 0; i < k; ++i) {
        auto [f, l] = gp.dents[i];
        int first = static_cast<int>(out.vertices.size());
        if (red[i] == 0) {
            for (int j = f; j <= l; ++j) out.vertices.push_back(gp.vertices[j]);
        } else {
            emit_dent(gp.vertices, f, l, 4 * k + 3 - red[i], gp.r, out.vertices);
        }
        out.dents.emplace_back(first, static_cast<int>(out.vertices.size()) - 1);
    }
    for (int j = gp.dents[k - 1].second + 1; j < static_cast<int>(gp.vertices.size()); ++j)
        out.vertices.push_back(gp.vertices[j]);
    if (out.length() != target)
        throw std::runtime_error("adjust_gamma_length: internal length mismatch");
    return out;
}

Drawing to_drawing(const GammaPath& gp) {
    Drawing d;
    int n = static_cast<int>(gp.vertices.size());
    d.graph = path_graph(n);
    d.coords = gp.vertices;
    d.r = gp.r;
    return d;
}

}  // namespace copgeo
