#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "balclust/graph.hpp"

namespace balclust {

struct Window {
    int gamma1 = 1;
    int gamma2 = 1;
};

struct CliqueSplit {
    int t = 0;
    std::vector<int> sizes;  // non-increasing
    long long cost = 0;      // deleted edges, sum over i<j of |X_i||X_j|
};

// Fill policy for a fixed number of parts t; nullopt when t*gamma1 > n or t*gamma2 < n.
std::optional<CliqueSplit> fill_clique(int n, Window w, int t);

// Minimum deletions splitting K_n into parts with sizes in the window.
// full_scan evaluates every feasible t and checks that the first one is optimal.
std::optional<CliqueSplit> cccd_on_clique(int n, Window w, bool full_scan = false);

// h(t) for every feasible t, ascending in t.
std::vector<std::pair<int, long long>> cccd_clique_profile(int n, Window w);

Answer cccd_on_cluster(const Graph& g, Window w, int k);
Answer algo_cccd(const Graph& g, Window w, int k);
Answer solve_bcd(const Instance& inst);

}  // namespace balclust
