#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace copgeo {

// Origin tag for vertices produced by graph operators.
struct VertexLabel {
    enum class Kind { Original, Subdivision, Port };
    Kind kind = Kind::Original;
    // Original: a = original vertex id.
    // Subdivision: a = edge id, b = position along the path (1..l-1).
    // Port: a = knot (original vertex) id, b = port (incident edge) id.
    int a = 0;
    int b = 0;

    bool operator==(const VertexLabel&) const = default;
};

// Undirected simple graph with sorted adjacency lists.
// Vertex ids are 0..n-1 contiguous; no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);

    // Edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    int min_degree() const;
    int max_degree() const;
    bool is_connected() const;

    // Throws std::runtime_error if an invariant is broken.
    void check_valid() const;

    std::vector<VertexLabel> labels;  // optional; empty or size n

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

// Sentinel for infinite girth (forests).
inline constexpr int kInfiniteGirth = -1;

// Replace every edge with a path of length l (l >= 1).  Fresh vertices are
// appended after the original ids and carry Subdivision labels (edge id,
// position).  l == 1 returns a copy with identical ids.
Graph subdivide(const Graph& g, int l);

// Clique substitution K(g): each vertex v becomes a clique on deg(v)
// vertices, one port per incident edge; ports of an edge's two endpoints are
// joined.  Degree-0 vertices are dropped.  Port vertices carry Port labels.
Graph clique_substitute(const Graph& g);

// Length of a shortest cycle, or kInfiniteGirth for forests.
int girth(const Graph& g);

// min degree if girth >= 5 (a cop-number lower bound certificate), else 1.
// Rejects disconnected input.
int girth_lower_bound(const Graph& g);

// Dismantlability via repeated removal of dominated (cornered) vertices;
// equivalent to being 1-copwin.
bool is_dismantlable(const Graph& g);

// Named graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();
Graph dodecahedron_graph();

}  // namespace copgeo
