#include <doctest.h>

#include <random>

#include "balclust/kernel.hpp"
#include "balclust/oracle.hpp"
#include "support.hpp"

using namespace balclust;

namespace {

bool kernel_answer(const KernelResult& r) {
    if (r.outcome == Outcome::TrivialYes) return true;
    if (r.outcome == Outcome::TrivialNo) return false;
    return oracle_solve(r.instance).yes;
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

bool is_independent(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) return false;
    return true;
}

bool is_maximal_clique(const Graph& g, const std::vector<int>& vs) {
    if (!is_clique(g, vs)) return false;
    for (int v = 0; v < g.n(); ++v) {
        if (std::find(vs.begin(), vs.end(), v) != vs.end()) continue;
        bool all = true;
        for (int u : vs) all = all && g.has_edge(u, v);
        if (all) return false;
    }
    return true;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

}  // namespace

TEST_CASE("ramsey bound") {
    CHECK(ramsey_bound(3, 3, 2) == 6);
    for (int c = 1; c < 6; ++c) CHECK(ramsey_bound(2, 2, c) == 2);
    CHECK(ramsey_bound(4, 4, 3) == 16);
    CHECK(ramsey_bound(5, 5, 4) == 4 * 4 + 3 * 6 + 1);
}

TEST_CASE("c-closure") {
    CHECK(is_c_closed(star(5), 2));
    CHECK_FALSE(is_c_closed(star(5), 1));
    CHECK(is_c_closed(cluster_graph({6}), 1));
}

TEST_CASE("clique or independent set") {
    auto r = clique_or_independent_set(cluster_graph({6}), 3, 3, 2);
    CHECK(r.is_clique);
    CHECK(r.vertices == std::vector<int>{0, 1, 2, 3, 4, 5});

    Graph s = star(5);
    r = clique_or_independent_set(s, 3, 3, 2);
    CHECK_FALSE(r.is_clique);
    CHECK(r.vertices.size() == 3);
    CHECK(is_independent(s, r.vertices));

    Graph two(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
    r = clique_or_independent_set(two, 3, 3, 2);
    CHECK(r.is_clique);
    CHECK(r.vertices.size() == 3);
    CHECK(is_maximal_clique(two, r.vertices));

    // Too small for the threshold.
    CHECK_THROWS_AS(clique_or_independent_set(cluster_graph({5}), 3, 3, 2), std::invalid_argument);
    // Not 1-closed.
    CHECK_THROWS_AS(clique_or_independent_set(star(5), 2, 2, 1), std::invalid_argument);
}

TEST_CASE("property: clique or independent set witnesses") {
    std::mt19937_64 rng(3);
    int done = 0;
    for (int i = 0; i < 3000 && done < 400; ++i) {
        const int n = std::uniform_int_distribution<int>(6, 14)(rng);
        Graph g = testing::random_graph(rng, n);
        if (g.components().count() != 1) continue;
        int c = 1;
        while (!is_c_closed(g, c)) ++c;
        const int a = std::uniform_int_distribution<int>(2, 4)(rng);
        const int b = std::uniform_int_distribution<int>(2, 4)(rng);
        if (ramsey_bound(a, b, c) > n) continue;
        auto r = clique_or_independent_set(g, a, b, c);
        if (r.is_clique) {
            CHECK(static_cast<int>(r.vertices.size()) >= a);
            CHECK(is_maximal_clique(g, r.vertices));
        } else {
            CHECK(static_cast<int>(r.vertices.size()) == b);
            CHECK(is_independent(g, r.vertices));
        }
        ++done;
    }
    CHECK(done > 50);
}

TEST_CASE("bcd kernel examples") {
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    Instance inst{p4, 1, 4, Variant::BCD};
    CHECK(oracle_solve(inst).yes);
    CHECK(kernel_answer(kernelize_bcd(inst)));

    Graph k4e(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});  // missing 2-3, common neighbours 0 and 1
    KernelResult r = kernelize_bcd({k4e, 1, 0, Variant::BCD});
    CHECK(r.outcome == Outcome::TrivialNo);
    CHECK_FALSE(oracle_solve({k4e, 1, 0, Variant::BCD}).yes);

    CHECK(kernelize_bcd({cluster_graph({5, 5}), 2, 0, Variant::BCD}).outcome == Outcome::TrivialYes);
}

TEST_CASE("bcd kernel caps eta and runs the unmanageable pipeline") {
    // k = 1: R = 6, unmanageable means size >= 3.
    Instance inst{cluster_graph({1, 20, 100}), 1, 98, Variant::BCD};
    KernelResult r = kernelize_bcd(inst);
    REQUIRE(r.outcome == Outcome::Reduced);
    CHECK(r.instance.eta == 12);
    CHECK(r.instance.graph.components().size_multiset() == std::vector<int>{1, 14});
    CHECK(r.instance.graph.n() <= bcd_kernel_vertex_bound(1));
    CHECK(bcd_kernel_vertex_bound(1) == 35);

    // P3 plus K1 with eta above lcomp.
    KernelResult capped = kernelize_bcd({Graph(4, {{0, 1}, {1, 2}}), 1, 10, Variant::BCD});
    REQUIRE_FALSE(capped.trace.empty());
    CHECK(capped.trace.front().rule == "bcd.eta-cap");
    if (capped.outcome == Outcome::Reduced) CHECK(capped.instance.eta == 3);
}

TEST_CASE("property: bcd kernel soundness, sampled n <= 7") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10000; ++i) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        const int k = std::uniform_int_distribution<int>(0, 3)(rng);
        const int eta = std::uniform_int_distribution<int>(0, 7)(rng);
        Graph g = i % 3 == 0 ? gen_perturbed_cluster(testing::random_sizes(rng, n), std::uniform_int_distribution<int>(0, 3)(rng) % (n * (n - 1) / 2 + 1), rng())
                             : testing::random_graph(rng, n);
        Instance inst{g, k, eta, Variant::BCD};
        KernelResult r = kernelize_bcd(inst);
        CHECK(kernel_answer(r) == oracle_solve(inst).yes);
        if (r.outcome == Outcome::Reduced) {
            CHECK(r.instance.graph.n() <= bcd_kernel_vertex_bound(r.instance.k));
            CHECK(r.instance.k <= k);
            // The common-neighbour rule is inapplicable, so the graph is (k+1)-closed.
            CHECK(is_c_closed(r.instance.graph, r.instance.k + 1));
        }
    }
}

TEST_CASE("property: no BCD solution touches an unmanageable component") {
    std::mt19937_64 rng(29);
    int checked = 0;
    for (int i = 0; i < 4000; ++i) {
        const int n = std::uniform_int_distribution<int>(3, 7)(rng);
        const int k = std::uniform_int_distribution<int>(0, 2)(rng);
        const int eta = std::uniform_int_distribution<int>(0, 4)(rng);
        Graph g = gen_perturbed_cluster(testing::random_sizes(rng, n), std::uniform_int_distribution<int>(0, 2)(rng), rng());
        Instance inst{g, k, eta, Variant::BCD};
        const auto sols = testing::all_solutions(inst);
        const auto& cv = g.components();
        for (int c = 0; c < cv.count(); ++c) {
            if (cv.sizes[c] < k + 2 || !is_cluster_graph(g.induced(cv.members[c]))) continue;
            for (const auto& f : sols) {
                CHECK_FALSE(testing::touches(f, cv.members[c]));
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}
