#include "copgeo/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace copgeo {

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        throw std::invalid_argument("vertex id out of range");
    if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(m_);
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

int Graph::min_degree() const {
    int d = num_vertices() ? degree(0) : 0;
    for (int v = 1; v < num_vertices(); ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < num_vertices(); ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::is_connected() const {
    int n = num_vertices();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj_[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++cnt;
                q.push(v);
            }
    }
    return cnt == n;
}

void Graph::check_valid() const {
    int n = num_vertices();
    long long m2 = 0;
    for (int u = 0; u < n; ++u) {
        const auto& a = adj_[u];
        for (size_t i = 0; i < a.size(); ++i) {
            int v = a[i];
            if (v < 0 || v >= n) throw std::runtime_error("neighbor id out of range");
            if (v == u) throw std::runtime_error("self-loop");
            if (i > 0 && a[i - 1] >= v) throw std::runtime_error("adjacency not sorted/distinct");
            if (!has_edge(v, u)) throw std::runtime_error("adjacency not symmetric");
        }
        m2 += static_cast<long long>(a.size());
    }
    if (m2 != 2LL * m_) throw std::runtime_error("edge count mismatch");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw std::runtime_error("label vector size mismatch");
}

Graph subdivide(const Graph& g, int l) {
    if (l < 1) throw std::invalid_argument("subdivide: l must be >= 1 (l = 0 would contract edges)");
    int n = g.num_vertices();
    auto es = g.edges();
    Graph out(n + static_cast<int>(es.size()) * (l - 1));
    out.labels.resize(out.num_vertices());
    for (int v = 0; v < n; ++v) {
        VertexLabel lab;
        if (!g.labels.empty()) lab = g.labels[v];
        else lab = VertexLabel{VertexLabel::Kind::Original, v, 0};
        out.labels[v] = lab;
    }
    int next = n;
    for (int e = 0; e < static_cast<int>(es.size()); ++e) {
        auto [u, v] = es[e];
        int prev = u;
        for (int i = 1; i < l; ++i) {
            out.labels[next] = VertexLabel{VertexLabel::Kind::Subdivision, e, i};
            out.add_edge(prev, next);
            prev = next++;
        }
        out.add_edge(prev, v);
    }
    return out;
}

Graph clique_substitute(const Graph& g) {
    int n = g.num_vertices();
    auto es = g.edges();
    // port id of vertex v for edge e
    std::vector<std::vector<std::pair<int, int>>> ports(n);  // (edge id, port vertex)
    int total = 0;
    for (int v = 0; v < n; ++v) total += g.degree(v);
    Graph out(total);
    out.labels.resize(total);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        for (int j = 0; j < g.degree(v); ++j) {
            out.labels[next] = VertexLabel{VertexLabel::Kind::Port, v, j};
            ++next;
        }
    }
    // knot cliques
    std::vector<int> base(n, 0);
    for (int v = 1; v < n; ++v) base[v] = base[v - 1] + g.degree(v - 1);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < g.degree(v); ++i)
            for (int j = i + 1; j < g.degree(v); ++j) out.add_edge(base[v] + i, base[v] + j);
    // matching edges between ports
    for (auto [u, v] : es) {
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        int iu = static_cast<int>(std::lower_bound(nu.begin(), nu.end(), v) - nu.begin());
        int iv = static_cast<int>(std::lower_bound(nv.begin(), nv.end(), u) - nv.begin());
        out.add_edge(base[u] + iu, base[v] + iv);
    }
    return out;
}

int girth(const Graph& g) {
    int n = g.num_vertices();
    int best = kInfiniteGirth;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        q.push(s);
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (best != kInfiniteGirth && 2 * dist[u] >= best) continue;
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    int c = dist[u] + dist[v] + 1;
                    if (best == kInfiniteGirth || c < best) best = c;
                }
            }
        }
    }
    return best;
}

int girth_lower_bound(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("girth_lower_bound: graph must be connected");
    int gi = girth(g);
    if (gi == kInfiniteGirth || gi >= 5) {
        // Forests are cop-win, so the certificate is only meaningful with cycles,
        // but min degree of a tree is 1 anyway.
        return g.min_degree();
    }
    return 1;
}

bool is_dismantlable(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0) return false;
    // closed neighborhoods as bitsets (n small in intended use)
    std::vector<std::vector<char>> closed(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) {
        closed[v][v] = 1;
        for (int u : g.neighbors(v)) closed[v][u] = 1;
    }
    std::vector<char> alive(n, 1);
    int live = n;
    bool changed = true;
    while (live > 1 && changed) {
        changed = false;
        for (int u = 0; u < n && !changed; ++u) {
            if (!alive[u]) continue;
            for (int v = 0; v < n; ++v) {
                if (v == u || !alive[v]) continue;
                if (!closed[u][v]) continue;  // N[u] subseteq N[v] needs u in N[v]
                bool dominated = true;
                for (int w = 0; w < n; ++w) {
                    if (!alive[w] || w == u) continue;
                    if (closed[u][w] && !closed[v][w]) {
                        dominated = false;
                        break;
                    }
                }
                if (dominated) {
                    alive[u] = 0;
                    for (int w = 0; w < n; ++w) {
                        closed[w][u] = 0;
                    }
                    --live;
                    changed = true;
                    break;
                }
            }
        }
    }
    return live == 1;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);       // outer 5-cycle
        g.add_edge(i, i + 5);             // spokes
        g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return g;
}

Graph dodecahedron_graph() {
    // Four layers of five: outer ring A(0-4), B(5-9), C(10-14), inner ring D(15-19).
    Graph g(20);
    for (int i = 0; i < 5; ++i) {
        int a = i, b = 5 + i, c = 10 + i, d = 15 + i;
        g.add_edge(a, (i + 1) % 5);            // outer pentagon
        g.add_edge(a, b);                      // A-B spokes
        g.add_edge(b, c);                      // B-C
        g.add_edge(b, 10 + (i + 4) % 5);       // B-C (previous)
        g.add_edge(c, d);                      // C-D spokes
        g.add_edge(d, 15 + (i + 1) % 5);       // inner pentagon
    }
    return g;
}

}  // namespace copgeo
