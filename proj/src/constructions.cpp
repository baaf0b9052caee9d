#include "copgeo/constructions.hpp"

#include <cmath>
#include <stdexcept>

namespace copgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;

Point polar(double radius, double degrees) {
    double t = degrees * kPi / 180.0;
    return {radius * std::cos(t), radius * std::sin(t)};
}

}  // namespace

Graph dodecahedron() { return dodecahedron_graph(); }

Drawing dodecahedron_embedding() {
    // Four concentric layers of five vertices: outer pentagon A (0-4),
    // layer B (5-9) below the A vertices, layer C (10-14) rotated half a
    // step, inner pentagon D (15-19) under the C vertices.  Radii chosen so
    // edge lengths and inter-edge angles stay moderate.
    const double RA = 21.0, RB = 13.0, RC = 7.6, RD = 3.6;
    Drawing d;
    d.graph = dodecahedron_graph();
    d.coords.resize(20);
    for (int i = 0; i < 5; ++i) {
        double base = 90.0 + 72.0 * i;
        d.coords[i] = polar(RA, base);
        d.coords[5 + i] = polar(RB, base);
        d.coords[10 + i] = polar(RC, base + 36.0);
        d.coords[15 + i] = polar(RD, base + 36.0);
    }
    d.r = 0;  // straight-line embedding, not a geometric graph
    d.provenance = "dodecahedron_embedding";
    return d;
}

KnotRingCheck knot_ring_feasible(int n) {
    if (n < 1) throw std::invalid_argument("knot_ring_feasible: n must be >= 1");
    KnotRingCheck c;
    c.r = 1;
    c.n = n;
    c.feasible = n < kPi / std::asin(1.0 / 3.0);
    return c;
}

TheoremBOutput theorem_b_combinatorial(const Graph& g, int l_out) {
    if (l_out < 1) throw std::invalid_argument("theorem_b_combinatorial: l_out must be >= 1");
    if (g.max_degree() > 9)
        throw std::invalid_argument(
            "theorem_b_combinatorial: max degree exceeds 9, knot ring infeasible "
            "(knot_ring_feasible requires n <= 9)");
    Graph k = clique_substitute(g);
    TheoremBOutput out;
    out.l_out = l_out;
    out.knots.assign(g.num_vertices(), {});
    for (int v = 0; v < k.num_vertices(); ++v) out.knots[k.labels[v].a].push_back(v);

    auto es = k.edges();
    std::vector<int> inter;  // indices of knot-to-knot edges
    for (int e = 0; e < static_cast<int>(es.size()); ++e)
        if (k.labels[es[e].first].a != k.labels[es[e].second].a) inter.push_back(e);

    Graph res(k.num_vertices() + static_cast<int>(inter.size()) * (l_out - 1));
    res.labels.resize(res.num_vertices());
    for (int v = 0; v < k.num_vertices(); ++v) res.labels[v] = k.labels[v];
    int next = k.num_vertices();
    std::vector<bool> is_inter(es.size(), false);
    for (int e : inter) is_inter[e] = true;
    for (int e = 0; e < static_cast<int>(es.size()); ++e) {
        auto [u, v] = es[e];
        if (!is_inter[e]) {
            res.add_edge(u, v);
            continue;
        }
        int prev = u;
        for (int i = 1; i < l_out; ++i) {
            res.labels[next] = VertexLabel{VertexLabel::Kind::Subdivision, e, i};
            res.add_edge(prev, next);
            prev = next++;
        }
        res.add_edge(prev, v);
    }
    out.graph = res;
    return out;
}

Drawing build_dodec440() {
    throw std::runtime_error("build_dodec440: not yet constructed");
}

}  // namespace copgeo
