#pragma once

#include <optional>
#include <string>
#include <vector>

#include "balclust/graph.hpp"

namespace balclust {

enum class Outcome { TrivialYes, TrivialNo, Reduced };

std::string to_string(Outcome o);

struct TraceEntry {
    std::string rule;
    std::string effect;
};

struct KernelResult {
    Outcome outcome = Outcome::Reduced;
    Instance instance;            // the reduced instance when outcome == Reduced
    std::vector<int> vertex_map;  // input vertex -> output vertex, -1 when deleted
    std::vector<TraceEntry> trace;
};

// BCC: input must be a cluster graph (std::invalid_argument otherwise).
KernelResult kernelize_bcc(const Instance& inst);

// R_c(a,b) = (a-1)(b-1) + (c-1)*C(b-1,2) + 1
long long ramsey_bound(long long a, long long b, long long c);

bool is_c_closed(const Graph& g, int c);

struct CliqueOrIndependent {
    bool is_clique = false;
    std::vector<int> vertices;  // sorted
};

// Exact search. Requires g c-closed with |V(g)| >= R_c(a,b).
CliqueOrIndependent clique_or_independent_set(const Graph& g, int a, int b, int c);

// Vertex bound asserted on BCD kernels, for output parameter k.
long long bcd_kernel_vertex_bound(int k);

KernelResult kernelize_bcd(const Instance& inst);

// Number of induced P3s containing the pair {u,v}.
int p3_count(const Graph& g, int u, int v);

struct SaturationResult {
    bool no = false;  // k would go negative
    Graph graph;
    int k = 0;
    std::vector<TraceEntry> trace;
};

SaturationResult p3_saturation(const Graph& g, int k);

// Greedy P3 packing plus minimalization; nullopt when more than 3k vertices are needed.
std::optional<std::vector<int>> find_modulator(const Graph& g, int k);

// Vertex bound asserted on BCE kernels, for output parameter k.
long long bce_kernel_vertex_bound(int k);

KernelResult kernelize_bce(const Instance& inst);

KernelResult kernelize(const Instance& inst);

}  // namespace balclust
