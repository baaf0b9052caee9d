#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "copgeo/bend.hpp"
#include "copgeo/geom.hpp"

using namespace copgeo;

namespace {

constexpr double kPi = 3.14159265358979323846;

double wrap2pi(double a) {
    a = std::fmod(a, 2 * kPi);
    if (a < 0) a += 2 * kPi;
    return a;
}

// Distance from an angle to the nearest ray of a 6-ray system with base
// angle theta0 (rays at theta0 + j*pi/3).
double ray_distance(double theta0, double dir) {
    double rel = wrap2pi(dir - theta0);
    double m = std::fmod(rel, kPi / 3.0);
    return std::min(m, kPi / 3.0 - m);
}

// Independent recomputation of the inter-curve clearance floor
//   min{ (sqrt3/2)(l1-l2), l2, (sqrt3/2)s1, delta_out }
// where delta_out is the minimum distance between the original edge rays
// restricted to the region outside the inner hexagon. The boundary crossing
// radius of a ray at angular deviation dev from the nearest side midline of
// a regular hexagon with side l is apothem / cos(dev).
double required_clearance_oracle(const BendPlan& plan,
                                 const std::vector<double>& dirs) {
    double base = std::min({std::sqrt(3.0) / 2.0 * (plan.l1 - plan.l2),
                            plan.l2, std::sqrt(3.0) / 2.0 * plan.s1});
    std::vector<Segment> clipped;
    for (double phi : dirs) {
        Point dir{std::cos(phi), std::sin(phi)};
        double m = std::fmod(wrap2pi(phi - plan.rays.theta0), kPi / 3.0);
        double dev = std::fabs(m - kPi / 6.0);
        double rho = std::sqrt(3.0) / 2.0 * plan.l2 / std::cos(dev);
        clipped.push_back({plan.apex + dir * rho, plan.apex + dir * (10 * plan.l1)});
    }
    double dout = base;
    for (size_t i = 0; i < clipped.size(); ++i)
        for (size_t j = i + 1; j < clipped.size(); ++j)
            dout = std::min(dout, segment_dist(clipped[i], clipped[j]));
    return std::min(base, dout);
}

// Re-checks the plan geometry directly from the curves, independent of
// check_bend_plan's internal bookkeeping.
void check_plan_properties(const BendPlan& plan,
                           const std::vector<double>& dirs) {
    REQUIRE(plan.edges.size() == dirs.size());
    BendCheck c = check_bend_plan(plan);
    CHECK(c.pass);
    if (!c.pass) {
        INFO(c.error);
        return;
    }

    // (a) every polyline segment strictly longer than 0.093 * hexagon side
    for (const EdgeBend& e : plan.edges) {
        double side = (e.hex == 1) ? plan.l1 : plan.l2;
        REQUIRE(e.curve.size() >= 2);
        CHECK(e.arc_segments <= 3);
        for (size_t i = 0; i + 1 < e.curve.size(); ++i) {
            double len = std::hypot(e.curve[i + 1].x - e.curve[i].x,
                                    e.curve[i + 1].y - e.curve[i].y);
            CHECK(len > 0.093 * side);
        }
    }

    // (b) consecutive-segment angles, including the turn onto the original
    // ray direction at the end of the rerouted curve
    for (const EdgeBend& e : plan.edges) {
        std::vector<Point> pts = e.curve;
        Point last = pts.back();
        pts.push_back({last.x + std::cos(e.phi), last.y + std::sin(e.phi)});
        for (size_t i = 1; i + 1 < pts.size(); ++i) {
            // Interior angle at the joint; a straight continuation scores pi.
            Point u = pts[i - 1] - pts[i];
            Point v = pts[i + 1] - pts[i];
            double ang = std::atan2(std::fabs(cross(u, v)), dot(u, v));
            CHECK(ang > kPi / 3.0 + 1e-9);
        }
    }

    // (b') pairwise angles between initial spoke directions at the apex
    for (size_t i = 0; i < plan.edges.size(); ++i)
        for (size_t j = i + 1; j < plan.edges.size(); ++j) {
            double a = plan.edges[i].psi, b = plan.edges[j].psi;
            double d = std::fabs(wrap2pi(a - b));
            d = std::min(d, 2 * kPi - d);
            CHECK(d > kPi / 3.0 + 1e-9);
        }

    // (c) clearance between distinct curves (extended along the original
    // rays), excluding pairs that legitimately meet at the shared apex
    double required = required_clearance_oracle(plan, dirs);
    CHECK(c.required_clearance == doctest::Approx(required).epsilon(1e-9));
    CHECK(c.clearance >= required * (1 - 1e-9));

    std::vector<std::vector<Point>> curves;
    for (const EdgeBend& e : plan.edges) {
        std::vector<Point> pts = e.curve;
        Point last = pts.back();
        pts.push_back({last.x + 10 * plan.l1 * std::cos(e.phi),
                       last.y + 10 * plan.l1 * std::sin(e.phi)});
        curves.push_back(pts);
    }
    double clr = 1e300;
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = i + 1; j < curves.size(); ++j)
            for (size_t si = 0; si + 1 < curves[i].size(); ++si)
                for (size_t sj = 0; sj + 1 < curves[j].size(); ++sj) {
                    bool both_at_apex = (si == 0 && sj == 0);
                    if (both_at_apex) continue;
                    clr = std::min(clr,
                                   segment_dist({curves[i][si], curves[i][si + 1]},
                                                {curves[j][sj], curves[j][sj + 1]}));
                }
    if (curves.size() >= 2) CHECK(clr >= required * (1 - 1e-9));
}

}  // namespace

TEST_CASE("bend segment-length coefficient exceeds 0.093") {
    double s = bend_s_coefficient();
    CHECK(s > 0.093);
    CHECK(s == doctest::Approx(0.5 - std::sqrt(3.0) / 2.0 *
                                         std::tan(31.0 * kPi / 222.0))
                   .epsilon(1e-14));
}

TEST_CASE("safe orientation exists for 10000 random direction sets") {
    // With at most 5 directions each blocking an open interval of measure
    // 2*pi/37 (mod pi/3), total blocked measure is at most 10*pi/37, which
    // is strictly less than the period pi/3, so a safe base angle exists.
    CHECK(10.0 * kPi / 37.0 < kPi / 3.0);

    std::mt19937 rng(20250826);
    std::uniform_real_distribution<double> ud(0.0, 2 * kPi);
    std::uniform_int_distribution<int> dd(1, 5);
    for (int trial = 0; trial < 10000; ++trial) {
        int d = dd(rng);
        std::vector<double> dirs(d);
        for (double& x : dirs) x = ud(rng);
        RaySystem rs = find_safe_orientation({0, 0}, dirs);
        CHECK(rs.theta0 >= 0.0);
        CHECK(rs.theta0 < kPi / 3.0);
        for (double phi : dirs) CHECK(ray_distance(rs.theta0, phi) > kPi / 37.0);
    }
}

TEST_CASE("safe orientation is deterministic and maximizes the gap midpoint") {
    std::vector<double> dirs{0.3, 1.1, 2.7, 4.0, 5.9};
    RaySystem a = find_safe_orientation({0, 0}, dirs);
    RaySystem b = find_safe_orientation({2.5, -7.0}, dirs);
    CHECK(a.theta0 == b.theta0);
}

TEST_CASE("safe orientation fails with a certificate when directions block every angle") {
    // 7 directions spaced pi/21 apart cover the whole pi/3 period with
    // blocking intervals of half-width pi/37 > pi/42.
    std::vector<double> dirs;
    for (int i = 0; i < 7; ++i) dirs.push_back(i * kPi / 21.0);
    CHECK_THROWS_AS(find_safe_orientation({0, 0}, dirs), std::runtime_error);
}

TEST_CASE("safe orientation rejects bad clearance requests") {
    std::vector<double> dirs{1.0};
    CHECK_THROWS(find_safe_orientation({0, 0}, dirs, -0.1));
    CHECK_THROWS(find_safe_orientation({0, 0}, dirs, kPi));
}

TEST_CASE("bend endings: tightly clustered five directions") {
    std::vector<double> dirs{1.40, 1.47, 1.54, 1.61, 1.68};
    BendPlan plan = bend_endings({0, 0}, dirs, 1.5, 1.0);
    check_plan_properties(plan, dirs);
}

TEST_CASE("bend endings: evenly spread five directions") {
    std::vector<double> dirs;
    for (int i = 0; i < 5; ++i) dirs.push_back(0.3 + i * 2 * kPi / 5.0);
    BendPlan plan = bend_endings({0, 0}, dirs, 1.5, 1.0);
    check_plan_properties(plan, dirs);
}

TEST_CASE("bend endings: 1000 random configurations of degree at most 5") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> ud(0.0, 2 * kPi);
    std::uniform_int_distribution<int> dd(1, 5);
    std::uniform_real_distribution<double> scale(0.2, 4.0);
    std::uniform_real_distribution<double> off(-10.0, 10.0);
    for (int trial = 0; trial < 1000; ++trial) {
        int d = dd(rng);
        std::vector<double> dirs(d);
        bool ok = true;
        for (double& x : dirs) x = ud(rng);
        std::vector<double> s = dirs;
        std::sort(s.begin(), s.end());
        for (int i = 0; i + 1 < d; ++i)
            if (s[i + 1] - s[i] < 1e-9) ok = false;
        if (!ok) continue;
        double a = scale(rng);
        Point apex{off(rng), off(rng)};
        CAPTURE(trial);
        BendPlan plan = bend_endings(apex, dirs, 1.5 * a, a);
        CHECK(plan.apex.x == apex.x);
        CHECK(plan.apex.y == apex.y);
        check_plan_properties(plan, dirs);
    }
}

TEST_CASE("bend endings: single edge and translated apex") {
    std::vector<double> dirs{2.0};
    BendPlan plan = bend_endings({3.0, -2.0}, dirs, 3.0, 2.0);
    check_plan_properties(plan, dirs);
    // The curve starts at the apex and ends on or beyond the outer hexagon
    // of its assigned scale, heading in the original direction.
    const EdgeBend& e = plan.edges[0];
    CHECK(e.curve.front().x == doctest::Approx(3.0));
    CHECK(e.curve.front().y == doctest::Approx(-2.0));
    double r = std::hypot(e.curve.back().x - 3.0, e.curve.back().y + 2.0);
    CHECK(r > std::sqrt(3.0) / 2.0 * ((e.hex == 1) ? 3.0 : 2.0) * (1 - 1e-12));
}

TEST_CASE("bend endings: invalid inputs are rejected") {
    std::vector<double> six{0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
    CHECK_THROWS(bend_endings({0, 0}, six, 1.5, 1.0));
    std::vector<double> dup{1.0, 1.0 + 1e-12, 2.0};
    CHECK_THROWS(bend_endings({0, 0}, dup, 1.5, 1.0));
    std::vector<double> ok{1.0, 2.0};
    CHECK_THROWS(bend_endings({0, 0}, ok, 1.0, 1.0));   // l1 == l2
    CHECK_THROWS(bend_endings({0, 0}, ok, 0.8, 1.0));   // l1 < l2
    // An isolated vertex needs no rerouting: empty plan, still valid.
    BendPlan empty = bend_endings({0, 0}, {}, 1.5, 1.0);
    CHECK(empty.edges.empty());
    CHECK(check_bend_plan(empty).pass);
}
