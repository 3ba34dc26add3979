#pragma once

#include <functional>
#include <vector>

#include "balclust/graph.hpp"

namespace balclust {

// Parts in non-increasing order.
using Partition = std::vector<int>;

struct NestedPartition {
    Partition outer;             // X = {x_1..x_t}
    std::vector<Partition> inner;  // X_i is a partition of x_i
};

// All partitions of l, lexicographically non-increasing ({l} first, {1,...,1} last).
std::vector<Partition> enumerate_partitions(int l);
// Cached copy of enumerate_partitions(l).
const std::vector<Partition>& partitions_of(int l);

long long spp(const Partition& x);
int total(const Partition& x);

// Union of the inner partitions, as a Partition.
Partition flatten(const NestedPartition& np);

// Multisets of sizes kept as ascending vectors.
using SizeMultiset = std::vector<int>;

bool is_submultiset(const SizeMultiset& whole, const Partition& part);
SizeMultiset multiset_minus(const SizeMultiset& a, const Partition& b);
SizeMultiset multiset_plus(const SizeMultiset& a, const Partition& b);
bool multiset_balanced(const SizeMultiset& a, int eta);

bool is_g_valid(const Partition& x_prime, const Graph& g);

enum class ChoicePolicy { SmallestId, LargestId };

struct PartitionEdit {
    Graph graph;
    long long edge_count = 0;
    EditSet edits;
};

// Merge, for each i, components of sizes X_i into one clique of size x_i.
PartitionEdit completion_wrt(const Graph& g, const NestedPartition& np,
                             ChoicePolicy policy = ChoicePolicy::SmallestId);
// Split, for each j, a clique of size y_j into cliques of sizes Y_j.
PartitionEdit deletion_wrt(const Graph& g, const NestedPartition& np,
                           ChoicePolicy policy = ChoicePolicy::SmallestId);

using NestedVisit = std::function<bool(const NestedPartition&, long long cost, const Partition& flat)>;

// Which side of a nested partition must fit inside the available sizes.
enum class NestedAvail { Inner, Outer };

// Visit nested partitions of l with sum of spp(X_i) <= budget and the union of the
// inner parts (Inner) or the outer parts (Outer) inside `avail`.
// Stops and returns true as soon as `visit` returns true.
bool for_each_nested(int l, long long budget, const SizeMultiset& avail, const NestedVisit& visit);
bool for_each_nested(int l, long long budget, const SizeMultiset& avail, NestedAvail side, const NestedVisit& visit);

Answer algo_bcc(const Instance& inst);

// Solver for cluster graphs, called with the remaining budget.
using ClusterLeaf = std::function<Answer(const Graph&, int k)>;

// Branch on induced P3s (delete uv, delete vw, add uw) down to cluster graphs.
Answer p3_branching(const Instance& inst, const ClusterLeaf& leaf);

Answer algo_bce_c(const Instance& inst);
Answer solve_bce(const Instance& inst);

}  // namespace balclust
