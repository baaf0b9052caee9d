// Independent reference implementations used only by tests: a naive
// value-iteration game oracle over ordered cop tuples, exhaustive
// non-isomorphic connected graph enumeration, and random connected graphs.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "copgeo/graph.hpp"

namespace oracle {

// Naive k-cop decision by repeated full sweeps until fixpoint.  Ordered cop
// tuples (no canonicalization), recursive joint-move enumeration.
inline bool naive_k_copwin(const copgeo::Graph& g, int k) {
    int n = g.num_vertices();
    if (k >= n) return true;
    std::vector<std::vector<int>> cn(n);
    for (int v = 0; v < n; ++v) {
        cn[v] = g.neighbors(v);
        cn[v].push_back(v);
    }
    uint64_t cfgs = 1;
    for (int i = 0; i < k; ++i) cfgs *= n;
    auto cop_at = [&](uint64_t c, int r) {
        for (int i = 0; i < k; ++i) {
            if (static_cast<int>(c % n) == r) return true;
            c /= n;
        }
        return false;
    };
    // won[c*n+r][turn], turn 0 = cops move
    std::vector<uint8_t> won(cfgs * n * 2, 0);
    for (uint64_t c = 0; c < cfgs; ++c)
        for (int r = 0; r < n; ++r)
            if (cop_at(c, r)) won[(c * n + r) * 2] = won[(c * n + r) * 2 + 1] = 2;

    std::vector<int> pos(k);
    bool changed = true;
    while (changed) {
        changed = false;
        for (uint64_t c = 0; c < cfgs; ++c) {
            uint64_t cc = c;
            for (int i = 0; i < k; ++i) {
                pos[i] = static_cast<int>(cc % n);
                cc /= n;
            }
            for (int r = 0; r < n; ++r) {
                uint64_t base = (c * n + r) * 2;
                if (!won[base]) {
                    // cops to move: some joint move reaches a won robber-turn state
                    bool win = false;
                    std::vector<int> idx(k, 0);
                    for (;;) {
                        uint64_t c2 = 0;
                        for (int i = k - 1; i >= 0; --i) c2 = c2 * n + cn[pos[i]][idx[i]];
                        if (won[(c2 * n + r) * 2 + 1]) {
                            win = true;
                            break;
                        }
                        int i = 0;
                        while (i < k && ++idx[i] == static_cast<int>(cn[pos[i]].size())) idx[i++] = 0;
                        if (i == k) break;
                    }
                    if (win) {
                        won[base] = 1;
                        changed = true;
                    }
                }
                if (!won[base + 1]) {
                    // robber to move: every robber move reaches a won cop-turn state
                    bool lose_all = true;
                    for (int r2 : cn[r])
                        if (!won[(c * n + r2) * 2]) {
                            lose_all = false;
                            break;
                        }
                    if (lose_all) {
                        won[base + 1] = 1;
                        changed = true;
                    }
                }
            }
        }
    }
    for (uint64_t c = 0; c < cfgs; ++c) {
        bool all = true;
        for (int r = 0; r < n && all; ++r)
            if (!won[(c * n + r) * 2]) all = false;
        if (all) return true;
    }
    return false;
}

inline int naive_cop_number(const copgeo::Graph& g, int k_max) {
    for (int k = 1; k <= k_max; ++k)
        if (naive_k_copwin(g, k)) return k;
    return k_max + 1;
}

// ---- graph enumeration ----

// Edge-set bitmask over pairs (i,j), i<j, index = j*(j-1)/2 + i.
inline copgeo::Graph from_mask(int n, uint32_t mask) {
    copgeo::Graph g(n);
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if (mask >> b & 1) g.add_edge(i, j);
    return g;
}

inline uint32_t canonical_mask(int n, uint32_t mask) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint32_t best = ~0u;
    do {
        uint32_t pm = 0;
        int b = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++b)
                if (mask >> b & 1) {
                    int pi = perm[i], pj = perm[j];
                    if (pi > pj) std::swap(pi, pj);
                    pm |= 1u << (pj * (pj - 1) / 2 + pi);
                }
        best = std::min(best, pm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All connected graphs on exactly n vertices up to isomorphism, as canonical
// edge masks.  Built by extending (n-1)-vertex representatives with a new
// vertex attached by every nonempty neighborhood (valid since every connected
// graph has a non-cut vertex).
inline std::vector<uint32_t> connected_graphs_exact(int n) {
    if (n == 1) return {0};
    std::vector<uint32_t> prev = connected_graphs_exact(n - 1);
    std::set<uint32_t> out;
    int v = n - 1;
    for (uint32_t pm : prev)
        for (uint32_t nb = 1; nb < (1u << v); ++nb) {
            uint32_t m = pm;
            for (int i = 0; i < v; ++i)
                if (nb >> i & 1) m |= 1u << (v * (v - 1) / 2 + i);
            out.insert(canonical_mask(n, m));
        }
    return {out.begin(), out.end()};
}

inline copgeo::Graph random_connected_graph(int n, std::mt19937& rng, double p = 0.3) {
    std::bernoulli_distribution coin(p);
    for (;;) {
        copgeo::Graph g(n);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (coin(rng)) g.add_edge(i, j);
        if (g.is_connected()) return g;
    }
}

}  // namespace oracle
