#include "copgeo/solver.hpp"

#include <algorithm>
#include <cstring>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <thread>

namespace copgeo {

uint64_t multiset_count(int n, int k) {
    // C(n+k-1, k)
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<uint64_t>(n - 1 + i) / static_cast<uint64_t>(i);
    return r;
}

namespace {

// Colex ranking of nondecreasing k-tuples over 0..n-1:
//   rank(c) = sum_i C(c_i + i, i + 1)
struct MultisetIndex {
    int n, k;
    // binom[i][x] = C(x, i) for i in 1..k
    std::vector<std::vector<uint64_t>> binom;

    MultisetIndex(int n_, int k_) : n(n_), k(k_), binom(k_ + 1) {
        for (int i = 1; i <= k; ++i) {
            binom[i].assign(n + k + 1, 0);
            for (int x = 0; x <= n + k; ++x) {
                if (x < i) continue;
                uint64_t v = 1;
                for (int j = 0; j < i; ++j) v = v * static_cast<uint64_t>(x - j) / static_cast<uint64_t>(j + 1);
                binom[i][x] = v;
            }
        }
    }

    uint64_t count() const { return multiset_count(n, k); }

    uint64_t rank(const int* c) const {
        uint64_t r = 0;
        for (int i = 0; i < k; ++i) r += binom[i + 1][c[i] + i];
        return r;
    }
};

struct Solver {
    const Graph& g;
    int n, k;
    const SolveOptions& opts;
    MultisetIndex idx;
    uint64_t cfg_count;
    uint64_t state_count;

    std::vector<int32_t> cfgs;             // cfg_count * k, colex order
    std::vector<std::vector<int>> cn;      // closed neighborhoods, sorted
    std::vector<uint64_t> won;             // bitset over state ids
    std::vector<uint8_t> counter;          // per RobberToMove state (cfg*n + r)
    std::vector<uint32_t> queue;           // FIFO of won state ids
    std::vector<uint32_t> witness;         // per cop-state: winning successor cfg (strategy)
    std::vector<uint32_t> level;           // per state: plies to capture (optional)
    std::vector<uint32_t> runmax;          // per RtM state: running max successor level
    bool track_levels = false;

    Solver(const Graph& g_, int k_, const SolveOptions& o)
        : g(g_), n(g_.num_vertices()), k(k_), opts(o), idx(n, k_) {
        cfg_count = idx.count();
        state_count = cfg_count * static_cast<uint64_t>(n) * 2;
    }

    // state id layout: ((cfg * n + r) << 1) | turn,  turn 0 = cops to move
    static uint64_t sid(uint64_t cfg, int n, int r, int turn) {
        return ((cfg * static_cast<uint64_t>(n) + static_cast<uint64_t>(r)) << 1) | static_cast<uint64_t>(turn);
    }
    bool get_won(uint64_t s) const { return (won[s >> 6] >> (s & 63)) & 1; }
    void set_won(uint64_t s) { won[s >> 6] |= 1ull << (s & 63); }

    void check_memory() const {
        uint64_t need = state_count / 8            // won bits
                        + cfg_count * static_cast<uint64_t>(n)  // counters
                        + state_count * 4          // queue worst case
                        + cfg_count * k * 4;       // cfg table
        if (track_levels) need += state_count * 4 + cfg_count * static_cast<uint64_t>(n) * 4;
        if (opts.want_strategy && cfg_count * static_cast<uint64_t>(n) <= opts.strategy_threshold)
            need += cfg_count * static_cast<uint64_t>(n) * 4;
        if (need > opts.mem_limit)
            throw std::runtime_error("solver: estimated memory " + std::to_string(need) +
                                     " bytes exceeds limit " + std::to_string(opts.mem_limit));
    }

    void build_cfgs() {
        cfgs.resize(cfg_count * k);
        std::vector<int> c(k, 0);
        for (uint64_t r = 0; r < cfg_count; ++r) {
            for (int i = 0; i < k; ++i) cfgs[r * k + i] = c[i];
            // next nondecreasing tuple in colex order
            int i = 0;
            while (i < k) {
                if (i + 1 < k ? c[i] < c[i + 1] : c[i] < n - 1) {
                    ++c[i];
                    for (int j = 0; j < i; ++j) c[j] = 0;
                    break;
                }
                ++i;
            }
        }
    }

    // Enumerate distinct canonical configs reachable from cfg by one joint cop
    // move (product of closed neighborhoods).  Also serves as the predecessor
    // set, since adjacency is symmetric.
    void joint_moves(const int32_t* c, std::vector<uint64_t>& out) const {
        out.clear();
        int pos[8];
        const std::vector<int>* lists[8];
        for (int i = 0; i < k; ++i) {
            lists[i] = &cn[c[i]];
            pos[i] = 0;
        }
        int tup[8];
        for (;;) {
            for (int i = 0; i < k; ++i) tup[i] = (*lists[i])[pos[i]];
            std::sort(tup, tup + k);
            out.push_back(idx.rank(tup));
            int i = 0;
            while (i < k && ++pos[i] == static_cast<int>(lists[i]->size())) {
                pos[i] = 0;
                ++i;
            }
            if (i == k) break;
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }

    bool in_cfg(const int32_t* c, int v) const {
        for (int i = 0; i < k; ++i)
            if (c[i] == v) return true;
        return false;
    }

    void init_tables() {
        won.assign((state_count + 63) / 64, 0);
        counter.assign(cfg_count * static_cast<uint64_t>(n), 0);
        if (track_levels) {
            level.assign(state_count, 0);
            runmax.assign(cfg_count * static_cast<uint64_t>(n), 0);
        }
        if (opts.want_strategy && cfg_count * static_cast<uint64_t>(n) <= opts.strategy_threshold)
            witness.assign(cfg_count * static_cast<uint64_t>(n), std::numeric_limits<uint32_t>::max());
    }

    // Fill counters and seed captured states for cfg range [lo, hi).
    void init_range(uint64_t lo, uint64_t hi, std::vector<uint32_t>& seeds) {
        for (uint64_t cf = lo; cf < hi; ++cf) {
            const int32_t* c = &cfgs[cf * k];
            for (int r = 0; r < n; ++r) {
                uint64_t base = cf * static_cast<uint64_t>(n) + r;
                if (in_cfg(c, r)) {
                    set_won(base << 1);
                    set_won((base << 1) | 1);
                    seeds.push_back(static_cast<uint32_t>(base << 1));
                    seeds.push_back(static_cast<uint32_t>((base << 1) | 1));
                } else {
                    counter[base] = static_cast<uint8_t>(cn[r].size());
                }
            }
        }
    }

    void propagate() {
        std::vector<uint64_t> preds;
        size_t head = 0;
        uint64_t pops = 0;
        while (head < queue.size()) {
            uint64_t s = queue[head++];
            if (opts.progress && (++pops & ((1 << 22) - 1)) == 0)
                std::cerr << "solver: processed " << pops << " / queued " << queue.size() << "\n";
            uint64_t base = s >> 1;
            uint64_t cf = base / static_cast<uint64_t>(n);
            int r = static_cast<int>(base % static_cast<uint64_t>(n));
            if (s & 1) {
                // RobberToMove state won: every cop predecessor wins by moving here.
                joint_moves(&cfgs[cf * k], preds);
                for (uint64_t pc : preds) {
                    uint64_t pbase = pc * static_cast<uint64_t>(n) + r;
                    uint64_t ps = pbase << 1;
                    if (get_won(ps)) continue;
                    set_won(ps);
                    if (!witness.empty()) witness[pbase] = static_cast<uint32_t>(cf);
                    if (track_levels) level[ps] = level[s] + 1;
                    queue.push_back(static_cast<uint32_t>(ps));
                }
            } else {
                // CopsToMove state won: robber predecessors lose one escape.
                for (int rp : cn[r]) {
                    uint64_t pbase = cf * static_cast<uint64_t>(n) + rp;
                    uint64_t ps = (pbase << 1) | 1;
                    if (get_won(ps)) continue;
                    if (track_levels) runmax[pbase] = std::max(runmax[pbase], level[s]);
                    if (--counter[pbase] == 0) {
                        set_won(ps);
                        if (track_levels) level[ps] = runmax[pbase] + 1;
                        queue.push_back(static_cast<uint32_t>(ps));
                    }
                }
            }
        }
    }

    SolveResult run() {
        for (int v = 0; v < n; ++v)
            if (g.degree(v) + 1 > 255) throw std::runtime_error("solver: degree too large for escape counters");
        track_levels = opts.want_strategy;
        check_memory();
        if (state_count >= (1ull << 32))
            throw std::runtime_error("solver: state space too large for 32-bit state ids");

        cn.resize(n);
        for (int v = 0; v < n; ++v) {
            cn[v] = g.neighbors(v);
            cn[v].insert(std::lower_bound(cn[v].begin(), cn[v].end(), v), v);
        }
        build_cfgs();
        init_tables();

        int nthreads = std::max(1, opts.threads);
        if (nthreads == 1 || cfg_count < 4096) {
            queue.reserve(1 << 20);
            init_range(0, cfg_count, queue);
        } else {
            // Align ranges to 32 configs so bitset words are not shared.
            std::vector<std::vector<uint32_t>> parts(nthreads);
            std::vector<std::thread> ts;
            uint64_t chunk = ((cfg_count / nthreads) / 32 + 1) * 32;
            for (int t = 0; t < nthreads; ++t) {
                uint64_t lo = std::min(cfg_count, t * chunk);
                uint64_t hi = std::min(cfg_count, (t + 1) * chunk);
                ts.emplace_back([this, lo, hi, &parts, t] { init_range(lo, hi, parts[t]); });
            }
            for (auto& t : ts) t.join();
            size_t total = 0;
            for (auto& p : parts) total += p.size();
            queue.reserve(total);
            for (auto& p : parts) queue.insert(queue.end(), p.begin(), p.end());
        }

        propagate();

        SolveResult res;
        res.k = k;
        res.state_count = state_count;
        uint64_t wcount = 0;
        for (uint64_t w : won) wcount += static_cast<uint64_t>(__builtin_popcountll(w));
        res.won_states = wcount;

        uint64_t best_cfg = cfg_count;
        uint64_t best_time = std::numeric_limits<uint64_t>::max();
        for (uint64_t cf = 0; cf < cfg_count; ++cf) {
            bool all = true;
            uint64_t worst = 0;
            for (int r = 0; r < n && all; ++r) {
                uint64_t s = sid(cf, n, r, 0);
                if (!get_won(s)) all = false;
                else if (track_levels) worst = std::max(worst, static_cast<uint64_t>(level[s]));
            }
            if (all) {
                res.copwin = true;
                if (res.winning_placements.size() < 16) {
                    std::vector<int> pl(&cfgs[cf * k], &cfgs[cf * k] + k);
                    res.winning_placements.push_back(pl);
                }
                if (track_levels && worst < best_time) {
                    best_time = worst;
                    best_cfg = cf;
                }
            }
        }
        if (res.copwin && track_levels && best_cfg < cfg_count)
            res.capture_time = static_cast<int>((best_time + 1) / 2);

        if (res.copwin && !witness.empty()) {
            for (uint64_t cf = 0; cf < cfg_count; ++cf)
                for (int r = 0; r < n; ++r) {
                    uint64_t b = cf * static_cast<uint64_t>(n) + r;
                    if (witness[b] == std::numeric_limits<uint32_t>::max()) continue;
                    StrategyEntry e;
                    e.cops.assign(&cfgs[cf * k], &cfgs[cf * k] + k);
                    e.robber = r;
                    e.to.assign(&cfgs[witness[b] * static_cast<uint64_t>(k)], &cfgs[witness[b] * static_cast<uint64_t>(k)] + k);
                    res.strategy.push_back(std::move(e));
                }
        }
        return res;
    }
};

}  // namespace

SolveResult is_k_copwin(const Graph& g, int k, const SolveOptions& opts) {
    g.check_valid();
    int n = g.num_vertices();
    if (n < 1) throw std::invalid_argument("is_k_copwin: empty graph");
    if (k < 1) throw std::invalid_argument("is_k_copwin: k must be >= 1");
    if (!g.is_connected()) throw std::invalid_argument("is_k_copwin: graph must be connected");
    if (k >= n) {
        SolveResult r;
        r.k = k;
        r.copwin = true;
        r.trivial = true;
        r.state_count = 0;
        return r;
    }
    Solver s(g, k, opts);
    return s.run();
}

CopNumberResult cop_number(const Graph& g, int k_max, const SolveOptions& opts) {
    if (k_max < 1) throw std::invalid_argument("cop_number: k_max must be >= 1");
    CopNumberResult out;
    out.k_max = k_max;
    for (int k = 1; k <= k_max; ++k) {
        SolveResult r = is_k_copwin(g, k, opts);
        if (r.copwin) {
            out.bounded = true;
            out.value = k;
            out.girth_certificate = g.is_connected() && girth_lower_bound(g) == k;
            return out;
        }
    }
    return out;
}

bool verify_subdivision_lemma(const Graph& g, int l, int k_max, const SolveOptions& opts) {
    CopNumberResult a = cop_number(g, k_max, opts);
    if (!a.bounded) throw std::runtime_error("verify_subdivision_lemma: C(g) > k_max");
    Graph s = subdivide(g, l);
    CopNumberResult b = cop_number(s, k_max, opts);
    if (!b.bounded) throw std::runtime_error("verify_subdivision_lemma: C(subdivide(g,l)) > k_max");
    return b.value == a.value || b.value == a.value + 1;
}

bool verify_clique_lemma(const Graph& g, int k_max, const SolveOptions& opts) {
    CopNumberResult a = cop_number(g, k_max, opts);
    if (!a.bounded) throw std::runtime_error("verify_clique_lemma: C(g) > k_max");
    Graph kg = clique_substitute(g);
    if (!kg.is_connected()) throw std::runtime_error("verify_clique_lemma: K(g) disconnected");
    CopNumberResult b = cop_number(kg, k_max, opts);
    if (!b.bounded) throw std::runtime_error("verify_clique_lemma: C(K(g)) > k_max");
    return b.value >= a.value;
}

}  // namespace copgeo
