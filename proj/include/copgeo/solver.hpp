#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copgeo/graph.hpp"

namespace copgeo {

// One entry of an extracted cop strategy: from (cops, robber, cops to move)
// play the joint move `to`.
struct StrategyEntry {
    std::vector<int> cops;  // sorted
    int robber = 0;
    std::vector<int> to;    // sorted
};

struct SolveOptions {
    bool want_strategy = false;
    int threads = 1;
    uint64_t mem_limit = 8ull << 30;        // soft cap on table allocations
    uint64_t strategy_threshold = 10'000'000;  // skip tables above this many cop-states
    bool progress = false;                  // stream progress to stderr
};

struct SolveResult {
    int k = 0;
    bool copwin = false;
    bool trivial = false;  // k >= n: reported true without running the game
    uint64_t state_count = 0;
    uint64_t won_states = 0;
    // Cop placements from which every robber reply is losing.
    std::vector<std::vector<int>> winning_placements;
    // Max rounds to capture under the extracted strategy (only with want_strategy).
    std::optional<int> capture_time;
    std::vector<StrategyEntry> strategy;
};

// Exact decision of the k-cop game on a connected graph by backward induction
// over canonicalized (multiset) cop configurations.
SolveResult is_k_copwin(const Graph& g, int k, const SolveOptions& opts = {});

struct CopNumberResult {
    bool bounded = false;   // false means "> k_max"
    int value = 0;          // valid when bounded
    int k_max = 0;
    bool girth_certificate = false;  // girth_lower_bound(g) == value
};

CopNumberResult cop_number(const Graph& g, int k_max, const SolveOptions& opts = {});

// Checks that C(subdivide(g, l)) is C(g) or C(g)+1.
bool verify_subdivision_lemma(const Graph& g, int l, int k_max, const SolveOptions& opts = {});

// Checks that clique substitution does not decrease the cop number.
bool verify_clique_lemma(const Graph& g, int k_max, const SolveOptions& opts = {});

// C(n+k-1, k): number of size-k multisets over n vertices.
uint64_t multiset_count(int n, int k);

}  // namespace copgeo
