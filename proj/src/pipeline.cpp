#include "copgeo/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "copgeo/bend.hpp"
#include "copgeo/gamma.hpp"

namespace copgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;

Point unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Appends the subdivision points of the segment A->B to `out` (A excluded,
// B included): an exact piece of length r at each end so that joint-adjacent
// pieces are as long as possible, equal middles in between.  Requires
// dist(A,B) > 2r, which the zigzag-order cap guarantees for every segment the
// pipeline produces.
void append_pieces(Polyline& out, Point A, Point B, double r) {
    double s = dist(A, B);
    if (s <= 2 * r)
        throw std::runtime_error("pipeline: rerouted segment too short to reserve end pieces");
    Point u = (B - A) * (1.0 / s);
    double R = s - 2 * r;
    out.push_back(A + u * r);
    if (R > 1e-12 * r) {
        int n = static_cast<int>(std::ceil(R / r - 1e-9));
        for (int j = 1; j < n; ++j) out.push_back(A + u * (r + R * j / n));
        out.push_back(A + u * (r + R));
    }
    out.push_back(B);
}

// Vertex chain of one bent edge ending: the rerouting curve from the vertex,
// then straight along the original direction out to distance `reach`, all
// subdivided into pieces of length at most r.
Polyline ending_points(Point apex, const EdgeBend& eb, double reach, double r) {
    std::vector<Point> nodes = eb.curve;
    nodes.push_back(apex + unit(eb.phi) * reach);
    Polyline pl{nodes.front()};
    for (size_t i = 0; i + 1 < nodes.size(); ++i) append_pieces(pl, nodes[i], nodes[i + 1], r);
    return pl;
}

double angle_between(double a, double b) {
    double d = std::fabs(std::fmod(a - b, 2 * kPi));
    if (d > kPi) d = 2 * kPi - d;
    return d;
}

}  // namespace

Drawing theorem_a_pipeline(const Drawing& embedding, PipelineConfig* report, int force_k) {
    const Graph& g = embedding.graph;
    int n = g.num_vertices();
    if (static_cast<int>(embedding.coords.size()) != n)
        throw std::invalid_argument("theorem_a_pipeline: coordinate count mismatch");
    if (g.max_degree() > 5)
        throw std::invalid_argument("theorem_a_pipeline: maximum degree exceeds 5");
    {
        ValidationReport vr = validate_planar_drawing(embedding);
        if (!vr.pass)
            throw std::invalid_argument("theorem_a_pipeline: input drawing is not planar");
    }
    auto es = g.edges();
    int m = static_cast<int>(es.size());
    if (m == 0) throw std::invalid_argument("theorem_a_pipeline: graph has no edges");

    // --- instance geometry: scale a and the minimum incident angle ---
    double lmin = 1e300, vmin = 1e300, dmin = 1e300, alpha = kPi;
    for (auto [u, v] : es) lmin = std::min(lmin, dist(embedding.coords[u], embedding.coords[v]));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            vmin = std::min(vmin, dist(embedding.coords[u], embedding.coords[v]));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a1, b1] = es[i];
            auto [a2, b2] = es[j];
            if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
            dmin = std::min(dmin, segment_dist({embedding.coords[a1], embedding.coords[b1]},
                                               {embedding.coords[a2], embedding.coords[b2]}));
        }
    std::vector<std::vector<double>> dirs(n);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v))
            dirs[v].push_back(std::atan2(embedding.coords[w].y - embedding.coords[v].y,
                                         embedding.coords[w].x - embedding.coords[v].x));
    for (int v = 0; v < n; ++v)
        for (size_t i = 0; i < dirs[v].size(); ++i)
            for (size_t j = i + 1; j < dirs[v].size(); ++j)
                alpha = std::min(alpha, angle_between(dirs[v][i], dirs[v][j]));
    if (!(lmin > 0) || !(vmin > 0) || !(alpha > 0))
        throw std::invalid_argument("theorem_a_pipeline: degenerate embedding");
    double a = 0.999 * std::min({dmin / 3.0, vmin / 6.0, lmin / 34.0});

    // --- bend every vertex's edge endings (independent of k) ---
    // For each edge end we keep the rerouting curve; plans are keyed by
    // (vertex, neighbor) through the per-vertex incident list order.
    std::map<std::pair<int, int>, EdgeBend> bent;
    double plan_clearance = 1e300;
    for (int v = 0; v < n; ++v) {
        if (dirs[v].empty()) continue;
        BendPlan plan = bend_endings(embedding.coords[v], dirs[v], 1.5 * a, a);
        BendCheck bc = check_bend_plan(plan);
        if (!bc.pass)
            throw std::runtime_error("theorem_a_pipeline: rerouting failed validation: " + bc.error);
        if (dirs[v].size() >= 2) plan_clearance = std::min(plan_clearance, bc.clearance);
        for (const EdgeBend& eb : plan.edges)
            bent[{v, g.neighbors(v)[eb.index]}] = eb;
    }

    // --- per-edge part lengths ---
    // Edge i of length l_i splits into an initial part of length exactly 2a,
    // a middle of lambda_i whole a's, and a terminal part in [2a, 3a).
    std::vector<int> lambda(m);
    std::vector<double> elen(m);
    int lam1 = 1 << 30, lamm = 0;
    for (int i = 0; i < m; ++i) {
        elen[i] = dist(embedding.coords[es[i].first], embedding.coords[es[i].second]);
        lambda[i] = static_cast<int>(std::floor(elen[i] / a)) - 4;
        lam1 = std::min(lam1, lambda[i]);
        lamm = std::max(lamm, lambda[i]);
    }

    // --- choose the zigzag order k ---
    // r_k must be small enough that (i) pieces of adjacent edges near a
    // shared original vertex stay apart, (ii) it clears the universal bend
    // segment floor, and (iii) every bend segment fits two reserved end
    // pieces of length r.
    double cap = std::min(std::sqrt(3.0) / 2.0 * 0.093, bend_s_coefficient() / 2.002);
    if (alpha < kPi) cap = std::min(cap, 2 * std::sin(alpha / 2));

    int k = 0, L = 0;
    std::vector<Polyline> end_u(m), end_v(m);
    std::vector<int> E(m);
    std::string why;
    int k_lo = force_k > 0 ? force_k : 1;
    int k_hi = force_k > 0 ? force_k : 64;
    for (int kc = k_lo; kc <= k_hi && k == 0; ++kc) {
        if (static_cast<long long>(lam1) * kc * kc < 10 + 60 * kc) {
            why = "middle too short for the ending piece count";
            continue;
        }
        long long cap1 = static_cast<long long>(lam1) * (3LL * kc * kc + 6 * kc + 1);
        long long need = static_cast<long long>(lamm) * (5 * kc + 1);
        if (cap1 < need) {
            why = "edge length spread too large for a common length";
            continue;
        }
        GammaParams gp = gamma_params(kc);
        if (gp.r > cap) {
            why = "zigzag parameter above the clearance cap";
            continue;
        }
        double r = gp.r * a;
        if (plan_clearance < 1.02 * r) {
            why = "rerouted curves closer than the piece length";
            continue;
        }
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            auto [u, v] = es[i];
            double terminal = elen[i] - (lambda[i] + 2) * a;
            end_u[i] = ending_points(embedding.coords[u], bent.at({u, v}), 2 * a, r);
            end_v[i] = ending_points(embedding.coords[v], bent.at({v, u}), terminal, r);
            E[i] = static_cast<int>(end_u[i].size() + end_v[i].size()) - 2;
            if (E[i] > 10 + 60 * kc) {
                why = "ending piece count exceeded its bound";
                ok = false;
            }
        }
        if (!ok) continue;
        int lo = 0, hi = 1 << 30;
        for (int i = 0; i < m; ++i) {
            lo = std::max(lo, E[i] + lambda[i] * (5 * kc + 1));
            hi = std::min(hi, E[i] + lambda[i] * (4 * kc * kc + 6 * kc + 1));
        }
        if (lo > hi) {
            why = "no common subdivision length is feasible";
            continue;
        }
        k = kc;
        L = lo;
    }
    if (k == 0) {
        std::ostringstream os;
        os << "theorem_a_pipeline: no feasible zigzag order in [" << k_lo << ", " << k_hi
           << "]; last obstruction: " << why;
        throw std::runtime_error(os.str());
    }
    double r = gamma_params(k).r * a;

    // --- assemble the output drawing ---
    Drawing out;
    out.graph = subdivide(g, L);
    out.r = r;
    out.provenance = "theorem_a_pipeline";
    out.coords.assign(out.graph.num_vertices(), Point{});
    for (int v = 0; v < n; ++v) out.coords[v] = embedding.coords[v];

    if (report) {
        report->a = a;
        report->k = k;
        report->r = r;
        report->L = L;
        report->alpha = alpha;
        report->edges.clear();
    }

    for (int i = 0; i < m; ++i) {
        auto [u, v] = es[i];
        Point Pu = embedding.coords[u];
        Point dir = (embedding.coords[v] - Pu) * (1.0 / elen[i]);

        // Distribute the middle piece budget over the lambda_i unit squares.
        int T = L - E[i];
        int base = T / lambda[i], extra = T - base * lambda[i];

        Polyline pts = end_u[i];
        for (int j = 0; j < lambda[i]; ++j) {
            Point A = Pu + dir * ((2.0 + j) * a);
            Point B = Pu + dir * ((3.0 + j) * a);
            GammaPath sq = adjust_gamma_length(build_gamma(k, A, B), base + (j < extra ? 1 : 0));
            pts.insert(pts.end(), sq.vertices.begin() + 1, sq.vertices.end());
        }
        for (size_t j = end_v[i].size() - 1; j-- > 0;) pts.push_back(end_v[i][j]);
        if (static_cast<int>(pts.size()) != L + 1)
            throw std::logic_error("theorem_a_pipeline: piece accounting mismatch");
        for (int t = 1; t < L; ++t) out.coords[n + i * (L - 1) + (t - 1)] = pts[t];

        if (report)
            report->edges.push_back({u, v, elen[i], lambda[i], E[i], T});
    }
    return out;
}

Drawing refine(const Drawing& d, int m) {
    if (m < 1) throw std::invalid_argument("refine: m must be >= 1");
    const Graph& g = d.graph;
    int n = g.num_vertices();
    auto es = g.edges();
    Drawing out;
    out.graph = subdivide(g, m);
    out.r = d.r / m;
    out.provenance = "refine";
    out.coords.assign(out.graph.num_vertices(), Point{});
    for (int v = 0; v < n; ++v) out.coords[v] = d.coords[v];
    for (int e = 0; e < static_cast<int>(es.size()); ++e) {
        Point A = d.coords[es[e].first], B = d.coords[es[e].second];
        for (int j = 1; j < m; ++j)
            out.coords[n + e * (m - 1) + (j - 1)] = A + (B - A) * (static_cast<double>(j) / m);
    }
    return out;
}

}  // namespace copgeo
