#include "balclust/gen.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace balclust {

Graph gen_random(int n, double edge_prob, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw std::invalid_argument("edge probability outside [0,1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_prob);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph gen_cluster(const std::vector<int>& sizes) { return cluster_graph(sizes); }

Graph graph_from_mask(int n, std::uint64_t mask) {
    if (n < 0 || n > 11) throw std::invalid_argument("graph_from_mask supports n <= 11");
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

Graph gen_perturbed_cluster(const std::vector<int>& sizes, int flips, std::uint64_t seed) {
    Graph g = cluster_graph(sizes);
    const long long pairs = static_cast<long long>(g.n()) * (g.n() - 1) / 2;
    if (flips < 0 || flips > pairs) throw std::invalid_argument("flip count out of range");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, std::max(g.n() - 1, 0));
    std::set<Pair> done;
    while (static_cast<int>(done.size()) < flips) {
        const int u = pick(rng), v = pick(rng);
        if (u == v || !done.insert(norm_pair(u, v)).second) continue;
        if (g.has_edge(u, v))
            g.remove_edge(u, v);
        else
            g.add_edge(u, v);
    }
    return g;
}

Instance gen_example1(int k, int n) {
    if (k < 1) throw std::invalid_argument("example1 needs k >= 1");
    int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(k))));
    if (r * r != k) throw std::invalid_argument("example1 needs k to be a perfect square");
    if (n < r || (n - r) % r != 0) throw std::invalid_argument("example1 needs (n - sqrt(k)) divisible by sqrt(k)");
    std::vector<int> sizes(r, 1);
    for (int i = 0; i < (n - r) / r; ++i) sizes.push_back(r);
    return Instance{cluster_graph(sizes), k, 1, Variant::BCC};
}

namespace {

long long checked_mul(long long a, long long b) {
    if (a != 0 && b > std::numeric_limits<long long>::max() / a) throw std::invalid_argument("hardness sizes overflow");
    return a * b;
}

long long ipow(long long base, long long e) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace

HardnessSizes hardness_sizes(const N3DMInput& in, int d) {
    const std::size_t n = in.a.size();
    if (n == 0 || in.b.size() != n || in.c.size() != n) throw std::invalid_argument("a, b, c must have equal nonzero length");
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (in.t <= 0) throw std::invalid_argument("t must be positive");
    const long long nd = ipow(static_cast<long long>(n), d);
    long long sum = 0;
    for (const auto* seq : {&in.a, &in.b, &in.c})
        for (long long x : *seq) {
            if (x <= 0) throw std::invalid_argument("sequence values must be positive");
            if (x >= in.t) throw std::invalid_argument("sequence values must be below t");
            if (x > nd) throw std::invalid_argument("sequence values must be at most n^d");
            sum += x;
        }
    if (sum != checked_mul(static_cast<long long>(n), in.t)) throw std::invalid_argument("sequences must sum to n*t");

    HardnessSizes h;
    h.A = ipow(static_cast<long long>(n), 2LL * d);
    h.B = ipow(static_cast<long long>(n), 3LL * d);
    h.C = ipow(static_cast<long long>(n), 7LL * d);
    h.t_prime = in.t + h.A + h.B + h.C;
    for (long long x : in.a) h.sizes.push_back(x + h.A);
    for (long long x : in.b) h.sizes.push_back(x + h.B);
    for (long long x : in.c) h.sizes.push_back(x + h.C);
    long long edges = 0;
    for (long long s : h.sizes) edges += checked_mul(s, s - 1) / 2;
    h.k = checked_mul(static_cast<long long>(n), checked_mul(h.t_prime, h.t_prime - 1) / 2) - edges;
    return h;
}

Instance gen_hardness(const N3DMInput& in, int d) {
    const HardnessSizes h = hardness_sizes(in, d);
    long long total = 0;
    for (long long s : h.sizes) total += s;
    if (total > 50000) throw std::invalid_argument("hardness instance too large to build");
    if (h.k > std::numeric_limits<int>::max()) throw std::invalid_argument("hardness k does not fit");
    std::vector<int> sizes(h.sizes.begin(), h.sizes.end());
    return Instance{cluster_graph(sizes), static_cast<int>(h.k), 0, Variant::BCC};
}

EditSet hardness_merge(const Instance& hard, int n, const std::vector<Triple>& triples) {
    const ComponentView& cv = hard.graph.components();
    if (cv.count() != 3 * n) throw std::invalid_argument("not a hardness instance for this n");
    EditSet f;
    for (const Triple& tr : triples) {
        if (tr.a < 0 || tr.a >= n || tr.b < 0 || tr.b >= n || tr.c < 0 || tr.c >= n)
            throw std::invalid_argument("triple index out of range");
        const int ids[3] = {tr.a, n + tr.b, 2 * n + tr.c};
        for (int x = 0; x < 3; ++x)
            for (int y = x + 1; y < 3; ++y)
                for (int u : cv.members[ids[x]])
                    for (int v : cv.members[ids[y]]) f.additions.insert(norm_pair(u, v));
    }
    return f;
}

}  // namespace balclust
