#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "balclust/gen.hpp"
#include "balclust/graph.hpp"

namespace testing {

using balclust::Graph;

// Every labelled graph on n vertices (n <= 7).
inline void for_each_graph(int n, const std::function<void(const Graph&)>& visit) {
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < masks; ++m) visit(balclust::graph_from_mask(n, m));
}

// Every multiset of clique sizes summing to n, as cluster graphs.
inline void for_each_cluster_graph(int n, const std::function<void(const Graph&)>& visit) {
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            visit(balclust::cluster_graph(parts));
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            parts.push_back(p);
            rec(left - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
}

// BFS sizes of the component of each vertex, independent of Graph::components().
inline std::vector<int> naive_component_sizes(const Graph& g) {
    std::vector<int> comp(g.n(), -1), sizes;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(sizes.size());
        sizes.push_back(0);
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++sizes[id];
            for (int u = 0; u < g.n(); ++u)
                if (u != v && g.has_edge(u, v) && comp[u] < 0) {
                    comp[u] = id;
                    stack.push_back(u);
                }
        }
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

inline bool naive_cluster(const Graph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            for (int w = v + 1; w < g.n(); ++w)
                if (u != v && u != w && g.has_edge(u, v) && g.has_edge(u, w) && !g.has_edge(v, w)) return false;
    return true;
}

inline bool naive_balanced_cluster(const Graph& g, int eta) {
    if (!naive_cluster(g)) return false;
    auto s = naive_component_sizes(g);
    return s.empty() || s.back() - s.front() <= eta;
}

// p(l) by the standard coin DP.
inline std::vector<long long> partition_counts(int max_l) {
    std::vector<long long> p(max_l + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= max_l; ++part)
        for (int l = part; l <= max_l; ++l) p[l] += p[l - part];
    return p;
}

inline Graph random_graph(std::mt19937_64& rng, int n) {
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    return balclust::gen_random(n, p, rng());
}

inline std::vector<int> random_sizes(std::mt19937_64& rng, int n) {
    std::vector<int> sizes;
    for (int left = n; left > 0;) {
        const int s = std::uniform_int_distribution<int>(1, left)(rng);
        sizes.push_back(s);
        left -= s;
    }
    return sizes;
}

// Every edit set of size <= k in the variant's pair universe that solves inst.
inline std::vector<balclust::EditSet> all_solutions(const balclust::Instance& inst) {
    using namespace balclust;
    std::vector<Pair> universe;
    for (int u = 0; u < inst.graph.n(); ++u)
        for (int v = u + 1; v < inst.graph.n(); ++v) {
            const bool e = inst.graph.has_edge(u, v);
            if (inst.variant == Variant::BCE || (inst.variant == Variant::BCC && !e) ||
                (inst.variant == Variant::BCD && e))
                universe.push_back({u, v});
        }
    std::vector<EditSet> out;
    EditSet cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
        if (naive_balanced_cluster(apply_edits(inst.graph, cur), inst.eta)) out.push_back(cur);
        if (left == 0) return;
        for (std::size_t i = from; i < universe.size(); ++i) {
            auto& side = inst.graph.has_edge(universe[i].first, universe[i].second) ? cur.deletions : cur.additions;
            side.insert(universe[i]);
            rec(i + 1, left - 1);
            side.erase(universe[i]);
        }
    };
    rec(0, inst.k);
    return out;
}

// Whether f has a pair with an endpoint in `vertices`.
inline bool touches(const balclust::EditSet& f, const std::vector<int>& vertices) {
    auto hit = [&](const balclust::Pair& p) {
        return std::find(vertices.begin(), vertices.end(), p.first) != vertices.end() ||
               std::find(vertices.begin(), vertices.end(), p.second) != vertices.end();
    };
    for (const auto& p : f.additions)
        if (hit(p)) return true;
    for (const auto& p : f.deletions)
        if (hit(p)) return true;
    return false;
}

}  // namespace testing
