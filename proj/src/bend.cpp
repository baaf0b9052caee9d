#include "copgeo/bend.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef COPGEO_BEND_DEBUG
#include <cstdio>
#endif

namespace copgeo {

namespace {

constexpr double kPi = M_PI;
constexpr double kPeriod = kPi / 3;           // ray spacing
constexpr double kAngleMargin = 1e-6;         // strictness margin for pi/3 bounds
constexpr double kCornerOffset = 8 * kPi / 180;  // min Q offset from corners
constexpr double kEdgeExtent = 10.0;          // edges modeled to this many l1 from apex

double wrap2pi(double a) {
    a = std::fmod(a, 2 * kPi);
    if (a < 0) a += 2 * kPi;
    return a;
}

// Signed difference a-b wrapped into (-pi, pi].
double wrap_pm(double a) {
    a = std::fmod(a, 2 * kPi);
    if (a <= -kPi) a += 2 * kPi;
    if (a > kPi) a -= 2 * kPi;
    return a;
}

double circ_dist(double a, double b) { return std::fabs(wrap_pm(a - b)); }

Point dir_of(double a) { return {std::cos(a), std::sin(a)}; }

struct Hexagon {
    Point O;
    double th0;
    double l;  // side length = circumradius

    Point corner(int j) const {
        double a = th0 + ((j % 6 + 6) % 6) * kPeriod;
        return O + dir_of(a) * l;
    }
    // Index j such that the ray at angle phi exits through side (j, j+1).
    int sector(double phi) const {
        double t = wrap2pi(phi - th0);
        int j = static_cast<int>(std::floor(t / kPeriod));
        return std::min(j, 5);
    }
    Point boundary_point(double phi) const {
        int j = sector(phi);
        return line_intersection(O, O + dir_of(phi), corner(j), corner(j + 1));
    }
    double crossing_radius(double phi) const { return dist(O, boundary_point(phi)); }
};

// Boundary corners strictly between angles `from` and `to`, walking in the
// direction of increasing angle if ccw, else decreasing.
std::vector<Point> corners_between(const Hexagon& h, double from, double to, bool ccw) {
    std::vector<Point> out;
    double span = ccw ? wrap2pi(to - from) : wrap2pi(from - to);
    for (int j = 0; j < 6; ++j) {
        double ca = h.th0 + j * kPeriod;
        double off = ccw ? wrap2pi(ca - from) : wrap2pi(from - ca);
        if (off > 1e-9 && off < span - 1e-9) out.push_back(h.corner(j));
    }
    // Order by distance along the walk.
    std::sort(out.begin(), out.end(), [&](const Point& p, const Point& q) {
        double ap = std::atan2(p.y - h.O.y, p.x - h.O.x);
        double aq = std::atan2(q.y - h.O.y, q.x - h.O.x);
        double op = ccw ? wrap2pi(ap - from) : wrap2pi(from - ap);
        double oq = ccw ? wrap2pi(aq - from) : wrap2pi(from - aq);
        return op < oq;
    });
    return out;
}

std::vector<Segment> curve_segments(const Polyline& pl) {
    std::vector<Segment> out;
    for (size_t i = 0; i + 1 < pl.size(); ++i)
        if (dist(pl[i], pl[i + 1]) > 1e-15) out.push_back({pl[i], pl[i + 1]});
    return out;
}

// Minimum distance between two input edges (rays from the apex) restricted to
// the region outside the inner hexagon.
double outside_gap(const BendPlan& plan, const std::vector<double>& phis) {
    Hexagon h2{plan.apex, plan.rays.theta0, plan.l2};
    double best = std::numeric_limits<double>::infinity();
    std::vector<Segment> clipped;
    for (double phi : phis) {
        double rho = h2.crossing_radius(phi);
        clipped.push_back({plan.apex + dir_of(phi) * rho,
                           plan.apex + dir_of(phi) * (kEdgeExtent * plan.l1)});
    }
    for (size_t i = 0; i < clipped.size(); ++i)
        for (size_t j = i + 1; j < clipped.size(); ++j)
            best = std::min(best, segment_dist(clipped[i], clipped[j]));
    return best;
}

}  // namespace

double bend_s_coefficient() {
    return 0.5 - std::sqrt(3.0) / 2 * std::tan(31 * kPi / 222);
}

RaySystem find_safe_orientation(Point apex, const std::vector<double>& directions,
                                double clearance) {
    if (clearance <= 0 || clearance >= kPeriod / 2)
        throw std::invalid_argument("find_safe_orientation: clearance out of range");
    RaySystem rs;
    rs.apex = apex;
    if (directions.empty()) {
        rs.theta0 = 0;
        return rs;
    }
    // Forbidden intervals for theta0 modulo pi/3: each direction d forbids
    // orientations within `clearance` of d mod pi/3.
    struct Iv {
        double a, b;
    };
    std::vector<Iv> forbidden;
    for (double d : directions) {
        double c = std::fmod(d, kPeriod);
        if (c < 0) c += kPeriod;
        double a = c - clearance, b = c + clearance;
        if (a < 0) {
            forbidden.push_back({a + kPeriod, kPeriod});
            forbidden.push_back({0, b});
        } else if (b > kPeriod) {
            forbidden.push_back({a, kPeriod});
            forbidden.push_back({0, b - kPeriod});
        } else {
            forbidden.push_back({a, b});
        }
    }
    std::sort(forbidden.begin(), forbidden.end(),
              [](const Iv& x, const Iv& y) { return x.a < y.a; });
    std::vector<Iv> merged;
    for (const Iv& iv : forbidden) {
        if (!merged.empty() && iv.a <= merged.back().b + 1e-15)
            merged.back().b = std::max(merged.back().b, iv.b);
        else
            merged.push_back(iv);
    }
    // Largest gap between merged forbidden intervals (circularly, period pi/3).
    double best_len = -1, best_mid = 0;
    for (size_t i = 0; i < merged.size(); ++i) {
        double end = merged[i].b;
        double next = (i + 1 < merged.size()) ? merged[i + 1].a : merged[0].a + kPeriod;
        double len = next - end;
        if (len > best_len) {
            best_len = len;
            best_mid = std::fmod(end + len / 2, kPeriod);
        }
    }
    if (best_len <= 0) {
        std::ostringstream os;
        os << "find_safe_orientation: no safe orientation exists; blocking intervals"
              " (mod pi/3):";
        for (const Iv& iv : merged) os << " [" << iv.a << ", " << iv.b << "]";
        throw std::runtime_error(os.str());
    }
    rs.theta0 = best_mid;
    return rs;
}

BendCheck check_bend_plan(const BendPlan& plan) {
    BendCheck c;
    c.min_segment_ratio = std::numeric_limits<double>::infinity();
    c.min_joint_angle = kPi;
    c.min_spoke_angle = kPi;
    c.clearance = std::numeric_limits<double>::infinity();

    auto fail = [&](const std::string& why) {
        c.pass = false;
        c.error = why;
        return c;
    };
    if (plan.edges.empty()) {
        c.pass = true;
        return c;
    }

    std::vector<double> phis;
    for (const EdgeBend& e : plan.edges) phis.push_back(e.phi);

    // Full per-edge curves: rerouted ending plus the surviving straight part.
    std::vector<Polyline> curves;
    for (const EdgeBend& e : plan.edges) {
        if (e.arc_segments > 3) return fail("more than three boundary segments");
        Polyline pl = e.curve;
        pl.push_back(plan.apex + dir_of(e.phi) * (kEdgeExtent * plan.l1));
        curves.push_back(pl);
    }

    // (a) every rerouted segment longer than the per-hexagon bound.
    for (const EdgeBend& e : plan.edges) {
        double s = (e.hex == 1) ? plan.s1 : plan.s2;
        auto segs = curve_segments(e.curve);
        for (const Segment& sg : segs)
            c.min_segment_ratio = std::min(c.min_segment_ratio, dist(sg.a, sg.b) / s);
    }
    if (c.min_segment_ratio < 1 + 1e-9) return fail("rerouted segment too short");

    // (b) consecutive segments along each curve meet at an angle > pi/3.
    for (const Polyline& pl : curves) {
        Polyline q;
        for (const Point& p : pl)
            if (q.empty() || dist(q.back(), p) > 1e-15) q.push_back(p);
        for (size_t i = 1; i + 1 < q.size(); ++i) {
            Point u = q[i - 1] - q[i], v = q[i + 1] - q[i];
            double ang = std::atan2(std::fabs(cross(u, v)), dot(u, v));
            c.min_joint_angle = std::min(c.min_joint_angle, ang);
        }
    }
    if (c.min_joint_angle <= kPi / 3 + kAngleMargin) return fail("joint angle <= pi/3");

    // (c) spokes pairwise separated by more than pi/3.
    for (size_t i = 0; i < plan.edges.size(); ++i)
        for (size_t j = i + 1; j < plan.edges.size(); ++j)
            c.min_spoke_angle = std::min(
                c.min_spoke_angle, circ_dist(plan.edges[i].psi, plan.edges[j].psi));
    if (plan.edges.size() >= 2 && c.min_spoke_angle <= kPi / 3 + kAngleMargin)
        return fail("spoke angle <= pi/3");

    // (c) clearance between distinct curves, excluding apex-sharing pairs.
    double delta = outside_gap(plan, phis);
    c.required_clearance =
        std::min({std::sqrt(3.0) / 2 * (plan.l1 - plan.l2), plan.l2,
                  std::sqrt(3.0) / 2 * plan.s1, delta});
    auto touches_apex = [&](const Segment& s) {
        return dist(s.a, plan.apex) < 1e-12 || dist(s.b, plan.apex) < 1e-12;
    };
#ifdef COPGEO_BEND_DEBUG
    size_t dbg_i = 0, dbg_j = 0;
    Segment dbg_a{}, dbg_b{};
#endif
    for (size_t i = 0; i < curves.size(); ++i) {
        auto si = curve_segments(curves[i]);
        for (size_t j = i + 1; j < curves.size(); ++j) {
            auto sj = curve_segments(curves[j]);
            for (const Segment& a : si)
                for (const Segment& b : sj) {
                    if (touches_apex(a) && touches_apex(b)) continue;
                    double dd = segment_dist(a, b);
#ifdef COPGEO_BEND_DEBUG
                    if (dd < c.clearance) {
                        dbg_i = i; dbg_j = j; dbg_a = a; dbg_b = b;
                    }
#endif
                    c.clearance = std::min(c.clearance, dd);
                }
        }
    }
#ifdef COPGEO_BEND_DEBUG
    if (curves.size() >= 2 && c.clearance < c.required_clearance)
        std::fprintf(stderr,
                     "  minpair i=%zu j=%zu d=%.9f a=(%.9f,%.9f)-(%.9f,%.9f) "
                     "b=(%.9f,%.9f)-(%.9f,%.9f)\n",
                     dbg_i, dbg_j, segment_dist(dbg_a, dbg_b), dbg_a.a.x, dbg_a.a.y,
                     dbg_a.b.x, dbg_a.b.y, dbg_b.a.x, dbg_b.a.y, dbg_b.b.x,
                     dbg_b.b.y);
#endif
    if (curves.size() >= 2 && c.clearance < c.required_clearance * (1 - 1e-9))
        return fail("clearance below required bound");

    c.pass = true;
    return c;
}

namespace {

// Builds a candidate plan: spokes fanned out from the anchor edge in both
// cyclic directions, alternating hexagon assignment, arcs walking the
// boundary from Q back to the edge's own crossing point.
BendPlan build_candidate(Point apex, const RaySystem& rs,
                         const std::vector<double>& sorted_phi,
                         const std::vector<int>& sorted_idx, double l1, double l2,
                         int anchor, int parity, double gap, double nudge, int nccw) {
    int d = static_cast<int>(sorted_phi.size());
    BendPlan plan;
    plan.apex = apex;
    plan.rays = rs;
    plan.l1 = l1;
    plan.l2 = l2;
    plan.s1 = bend_s_coefficient() * l1;
    plan.s2 = bend_s_coefficient() * l2;
    plan.edges.resize(d);

    // Unwrapped angles in cyclic order starting at the anchor.
    std::vector<double> u(d);
    std::vector<int> ord(d);
    for (int i = 0; i < d; ++i) ord[i] = (anchor + i) % d;
    u[0] = sorted_phi[ord[0]];
    for (int i = 1; i < d; ++i)
        u[i] = u[i - 1] + wrap2pi(sorted_phi[ord[i]] - sorted_phi[ord[i - 1]]);

    // A spoke that lands too close to another edge's direction would run
    // alongside that edge's surviving straight part with too little room.
    // Non-anchor spokes therefore keep an angular margin from foreign
    // directions, sized so the crossing radius times its sine clears the
    // distance bound. Spokes kept exactly on their own direction are exempt:
    // there the outward exit-point push below provides the room.
    const double bound_terms = std::min(
        {std::sqrt(3.0) / 2 * (l1 - l2), l2, std::sqrt(3.0) / 2 * plan.s1});
    const double margin[3] = {
        0, 1.2 * std::asin(std::min(1.0, bound_terms / (std::sqrt(3.0) / 2 * l1))),
        1.2 * std::asin(std::min(1.0, bound_terms / (std::sqrt(3.0) / 2 * l2)))};
    auto hex_of = [&](int i) {
        int step = (i <= nccw) ? i : d - i;
        return (step % 2 == parity) ? 2 : 1;
    };
    auto avoid = [&](double pos, int i, int dirsign) {
        if (circ_dist(pos, u[i]) < 1e-12) return pos;
        double m = margin[hex_of(i)];
        for (int rep = 0; rep < 4 * d + 8; ++rep) {
            bool moved = false;
            for (int j = 0; j < d; ++j)
                if (j != i && std::fabs(wrap_pm(pos - u[j])) < m - 1e-12) {
                    pos += dirsign * m - wrap_pm(pos - u[j]);
                    moved = true;
                }
            // A spoke with a boundary run must also stay clear of the
            // hexagon corners so its first boundary segment has full length.
            double rel = std::fmod(wrap2pi(pos - rs.theta0), kPeriod);
            double t = (rel < kPeriod / 2) ? rel : rel - kPeriod;
            if (std::fabs(t) < kCornerOffset - 1e-12) {
                pos += dirsign * kCornerOffset - t;
                moved = true;
            }
            if (!moved) break;
        }
        return pos;
    };

    // Spokes fan out from the anchor on both sides; each edge keeps its own
    // direction when that already clears the previous spoke by `gap`,
    // otherwise it is pushed just past it.
    std::vector<double> psi(d);
    psi[0] = (nudge == 0) ? u[0] : avoid(u[0] + nudge, 0, nudge > 0 ? +1 : -1);
    double prev = psi[0];
    for (int i = 1; i <= nccw; ++i) {
        double dlt = wrap2pi(u[i] - prev);
        psi[i] = (dlt >= gap && dlt <= kPi) ? prev + dlt : avoid(prev + gap, i, +1);
        prev = psi[i];
    }
    prev = psi[0];
    for (int i = d - 1; i > nccw; --i) {
        double dlt = wrap2pi(prev - u[i]);
        psi[i] = (dlt >= gap && dlt <= kPi) ? prev - dlt : avoid(prev - gap, i, -1);
        prev = psi[i];
    }

    // The outermost spokes of the two fan sides are cyclic neighbours; the
    // per-side placement above does not see that pair, so enforce the gap
    // there as well by pulling one of the ends inward when there is room.
    if (d >= 2) {
        bool hi_anchor = (nccw == 0);
        bool lo_anchor = (nccw == d - 1);
        double hi = hi_anchor ? psi[0] : psi[nccw];
        double lo = (lo_anchor ? psi[0] : psi[nccw + 1]) + 2 * kPi;
        if (lo - hi < gap) {
            bool fixed = false;
            if (!hi_anchor) {
                double floor_hi = (nccw >= 2 ? psi[nccw - 1] : psi[0]) + gap;
                double cand = avoid(lo - gap, nccw, -1);
                if (cand >= floor_hi) {
                    psi[nccw] = cand;
                    fixed = true;
                }
            }
            if (!fixed && !lo_anchor) {
                double cap_lo = (nccw + 2 < d ? psi[nccw + 2] : psi[0]) - gap;
                double cand = avoid(hi + gap - 2 * kPi, nccw + 1, -1);
                if (cand <= cap_lo) psi[nccw + 1] = cand;
            }
        }
    }

    Hexagon hx[3] = {{}, {apex, rs.theta0, l1}, {apex, rs.theta0, l2}};


    // Inner-hexagon curves leave the boundary at the crossing radius of their
    // ray, but the outside-gap bound between two near-parallel edges is taken
    // between the clipped ray endpoints and can exceed that exit point's
    // perpendicular distance to a neighbouring radial line by up to ~10%.
    // Push each inner exit point outward along its ray just far enough that
    // its distance to every near-angle radial line meets the pairwise bound.
    const double other_terms = std::min(
        {std::sqrt(3.0) / 2 * (l1 - l2), l2, std::sqrt(3.0) / 2 * plan.s1});
    std::vector<double> kappa(d, 1.0);
    {
        std::vector<Segment> clipped(d);
        std::vector<double> rho2(d);
        for (int i = 0; i < d; ++i) {
            rho2[i] = hx[2].crossing_radius(sorted_phi[i]);
            clipped[i] = {apex + dir_of(sorted_phi[i]) * rho2[i],
                          apex + dir_of(sorted_phi[i]) * (kEdgeExtent * l1)};
        }
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                double dphi = circ_dist(sorted_phi[i], sorted_phi[j]);
                if (dphi > 0.5) continue;
                double target =
                    std::min(segment_dist(clipped[i], clipped[j]), other_terms);
                double need = 1.05 * target / (rho2[i] * std::sin(dphi));
                kappa[i] = std::min(std::max(kappa[i], need), 1.18);
            }
    }

    for (int i = 0; i < d; ++i) {
        EdgeBend& e = plan.edges[sorted_idx[ord[i]]];
        e.index = sorted_idx[ord[i]];
        e.phi = wrap2pi(sorted_phi[ord[i]]);
        // Hexagon by fan position: the outermost spokes on each side sit on
        // the outer hexagon so their boundary runs pass over inner spokes.
        int step = (i <= nccw) ? i : d - i;
        e.hex = (step % 2 == parity) ? 2 : 1;
        const Hexagon& h = hx[e.hex];
        e.psi = wrap2pi(psi[i]);
        e.P = h.boundary_point(e.phi);
        if (e.hex == 2) e.P = apex + (e.P - apex) * kappa[ord[i]];
        e.curve = {apex};
        if (circ_dist(e.psi, e.phi) <= 1e-12) {
            e.Q = e.P;
            e.arc_segments = 0;
            e.curve.push_back(e.P);
        } else {
            e.Q = h.boundary_point(e.psi);
            bool ccw = wrap_pm(e.phi - e.psi) > 0;
            auto corners = corners_between(h, e.psi, e.phi, ccw);
            e.arc_segments = static_cast<int>(corners.size()) + 1;
            e.curve.push_back(e.Q);
            for (const Point& p : corners) e.curve.push_back(p);
            e.curve.push_back(e.P);
        }
    }
    return plan;
}

}  // namespace

BendPlan bend_endings(Point apex, const std::vector<double>& directions, double l1,
                      double l2) {
    int d = static_cast<int>(directions.size());
    if (d > 5) throw std::invalid_argument("bend_endings: vertex degree exceeds 5");
    if (!(l1 > l2) || !(l2 > 0))
        throw std::invalid_argument("bend_endings: need l1 > l2 > 0");
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (circ_dist(directions[i], directions[j]) < 1e-9)
                throw std::invalid_argument("bend_endings: coincident edge directions");

    RaySystem rs = find_safe_orientation(apex, directions);

    if (d == 0) {
        BendPlan plan;
        plan.apex = apex;
        plan.rays = rs;
        plan.l1 = l1;
        plan.l2 = l2;
        plan.s1 = bend_s_coefficient() * l1;
        plan.s2 = bend_s_coefficient() * l2;
        return plan;
    }

    std::vector<int> sorted_idx(d);
    std::iota(sorted_idx.begin(), sorted_idx.end(), 0);
    std::sort(sorted_idx.begin(), sorted_idx.end(), [&](int a, int b) {
        return wrap2pi(directions[a]) < wrap2pi(directions[b]);
    });
    std::vector<double> sorted_phi(d);
    for (int i = 0; i < d; ++i) sorted_phi[i] = wrap2pi(directions[sorted_idx[i]]);

    const double deg = kPi / 180;
    const double gaps[] = {62 * deg, 61.7 * deg, 62.4 * deg, 63.5 * deg, 66 * deg};
    const double nudges[] = {0, 7 * deg, -7 * deg, 12 * deg, -12 * deg};

    std::vector<int> splits;  // how many edges fan counterclockwise
    splits.push_back(d / 2);
    for (int s = 0; s < d; ++s)
        if (s != d / 2) splits.push_back(s);

    // Try anchors closest to their side's midline first: the anchor keeps its
    // spoke on the original edge line, and a midline-near spoke crosses the
    // hexagons no farther out than its neighbors do, which keeps the
    // spoke-to-neighbor distance at or above the outside-gap bound.
    std::vector<int> anchors(d);
    std::iota(anchors.begin(), anchors.end(), 0);
    auto deviation = [&](int i) {
        double t = std::fmod(wrap2pi(sorted_phi[i] - rs.theta0), kPeriod);
        return std::fabs(t - kPeriod / 2);
    };
    std::sort(anchors.begin(), anchors.end(),
              [&](int a, int b) { return deviation(a) < deviation(b); });

    std::string last_error = "no candidate generated";
    for (double gap : gaps)
        for (double nudge : nudges)
            for (int anchor : anchors)
                for (int nccw : splits)
                    for (int parity = 0; parity < 2; ++parity) {
                    BendPlan plan = build_candidate(apex, rs, sorted_phi, sorted_idx,
                                                    l1, l2, anchor, parity, gap, nudge,
                                                    nccw);
                    BendCheck chk = check_bend_plan(plan);
                    if (chk.pass) return plan;
                    last_error = chk.error;
#ifdef COPGEO_BEND_DEBUG
                    std::fprintf(stderr,
                                 "cand a=%d p=%d g=%.3f n=%.3f -> %s (seg %.3f joint "
                                 "%.3f spoke %.3f clr %.5f/%.5f) psi:",
                                 anchor, parity, gap, nudge, chk.error.c_str(),
                                 chk.min_segment_ratio, chk.min_joint_angle,
                                 chk.min_spoke_angle, chk.clearance,
                                 chk.required_clearance);
                    for (const auto& e : plan.edges)
                        std::fprintf(stderr, " %.3f(h%d,%d)", e.psi, e.hex,
                                     e.arc_segments);
                    std::fprintf(stderr, "\n");
#endif
                }
    throw std::runtime_error("bend_endings: no verified rerouting found (" +
                             last_error + ")");
}

}  // namespace copgeo
