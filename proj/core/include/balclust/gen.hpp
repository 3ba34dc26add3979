#pragma once

#include <cstdint>
#include <vector>

#include "balclust/graph.hpp"

namespace balclust {

// G(n, p) with pairs visited in lexicographic order.
Graph gen_random(int n, double edge_prob, std::uint64_t seed);
Graph gen_cluster(const std::vector<int>& sizes);
// Bit i of mask selects the i-th pair in lexicographic order; n <= 11.
Graph graph_from_mask(int n, std::uint64_t mask);
// Cluster graph on the given sizes with `flips` distinct random pairs toggled.
Graph gen_perturbed_cluster(const std::vector<int>& sizes, int flips, std::uint64_t seed);

// sqrt(k) isolated vertices and (n - sqrt(k)) / sqrt(k) cliques of size sqrt(k); eta = 1.
Instance gen_example1(int k, int n);

struct N3DMInput {
    long long t = 0;
    std::vector<long long> a, b, c;
};

// Cliques a'_1..a'_n, b'_1..b'_n, c'_1..c'_n on consecutive ids; eta = 0.
Instance gen_hardness(const N3DMInput& in, int d);

struct HardnessSizes {
    long long A = 0, B = 0, C = 0, t_prime = 0;
    std::vector<long long> sizes;  // a', b', c' in that order
    long long k = 0;
};

// Validates and evaluates the construction without building the graph.
HardnessSizes hardness_sizes(const N3DMInput& in, int d);

struct Triple {
    int a, b, c;  // 0-based indices into a, b, c
};

// Additions that merge a'_i, b'_j, c'_l into one clique per triple.
EditSet hardness_merge(const Instance& hard, int n, const std::vector<Triple>& triples);

}  // namespace balclust
