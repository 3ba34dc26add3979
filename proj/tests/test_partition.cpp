#include <doctest.h>

#include <random>
#include <set>

#include "balclust/oracle.hpp"
#include "balclust/partition.hpp"
#include "support.hpp"

using namespace balclust;

TEST_CASE("enumerate partitions") {
    CHECK(enumerate_partitions(1) == std::vector<Partition>{{1}});
    CHECK(enumerate_partitions(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(enumerate_partitions(10).size() == 42);
}

TEST_CASE("property: partition counts match the counting DP up to 40") {
    const auto p = testing::partition_counts(40);
    for (int l = 1; l <= 40; ++l) {
        const auto& parts = partitions_of(l);
        REQUIRE(static_cast<long long>(parts.size()) == p[l]);
        if (l > 25) continue;
        std::set<Partition> seen;
        for (const auto& x : parts) {
            CHECK(total(x) == l);
            CHECK(std::is_sorted(x.rbegin(), x.rend()));
            CHECK(seen.insert(x).second);
        }
        CHECK(std::is_sorted(parts.rbegin(), parts.rend()));
    }
}

TEST_CASE("spp") {
    CHECK(spp({1, 4, 6, 6}) == 100);
    CHECK(spp({6, 6, 4, 1}) == 100);
    CHECK(spp({5}) == 0);
    CHECK(spp({2, 3}) == 6);
    CHECK(spp({1, 1, 1}) == 3);
}

TEST_CASE("G-validity") {
    Graph g = cluster_graph({1, 2, 3});
    CHECK(is_g_valid({2, 1}, g));
    CHECK_FALSE(is_g_valid({2, 2}, g));
    CHECK(is_g_valid({}, g));
}

TEST_CASE("completion and deletion with respect to partitions") {
    PartitionEdit c = completion_wrt(cluster_graph({1, 2}), {{3}, {{2, 1}}});
    CHECK(c.graph == cluster_graph({3}));
    CHECK(c.edge_count == 2);
    CHECK(c.edits.size() == 2);

    Graph g = cluster_graph({2, 1, 3});
    c = completion_wrt(g, {{2, 1}, {{2}, {1}}});
    CHECK(c.graph == g);
    CHECK(c.edge_count == 0);

    c = completion_wrt(cluster_graph({1, 1, 1}), {{3}, {{1, 1, 1}}});
    CHECK(c.graph == cluster_graph({3}));
    CHECK(c.edge_count == 3);

    PartitionEdit d = deletion_wrt(cluster_graph({3}), {{3}, {{2, 1}}});
    CHECK(d.graph.components().size_multiset() == std::vector<int>{1, 2});
    CHECK(d.edge_count == 2);
    d = deletion_wrt(g, {{3}, {{3}}});
    CHECK(d.graph == g);
    d = deletion_wrt(cluster_graph({4}), {{4}, {{2, 2}}});
    CHECK(d.graph.components().size_multiset() == std::vector<int>{2, 2});
    CHECK(d.edge_count == 4);

    CHECK_THROWS_AS(completion_wrt(cluster_graph({1, 2}), {{4}, {{2, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(deletion_wrt(cluster_graph({3}), {{4}, {{2, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(completion_wrt(cluster_graph({1, 2}), {{3}, {{2, 2}}}), std::invalid_argument);
}

TEST_CASE("property: partition edits count edges and ignore component choice") {
    std::mt19937_64 rng(61);
    int tried = 0;
    for (int i = 0; i < 3000; ++i) {
        const int n = std::uniform_int_distribution<int>(2, 14)(rng);
        Graph g = cluster_graph(testing::random_sizes(rng, n));
        const auto cs = g.components().size_multiset();
        const int l = std::uniform_int_distribution<int>(2, std::min(n, 8))(rng);
        // A random nested partition whose flattening is G-valid.
        const auto& outers = partitions_of(l);
        const Partition x = outers[std::uniform_int_distribution<std::size_t>(0, outers.size() - 1)(rng)];
        NestedPartition np{x, {}};
        for (int part : x) {
            const auto& in = partitions_of(part);
            np.inner.push_back(in[std::uniform_int_distribution<std::size_t>(0, in.size() - 1)(rng)]);
        }
        if (is_g_valid(flatten(np), g)) {
            auto a = completion_wrt(g, np, ChoicePolicy::SmallestId);
            auto b = completion_wrt(g, np, ChoicePolicy::LargestId);
            CHECK(a.edge_count == static_cast<long long>(edit_diff(g, a.graph).size()));
            CHECK(a.graph.components().size_multiset() == b.graph.components().size_multiset());
            CHECK(a.graph.components().size_multiset() == multiset_plus(multiset_minus(cs, flatten(np)), x));
            CHECK(is_cluster_graph(a.graph));
            ++tried;
        }
        if (is_g_valid(x, g)) {
            auto a = deletion_wrt(g, np, ChoicePolicy::SmallestId);
            auto b = deletion_wrt(g, np, ChoicePolicy::LargestId);
            CHECK(a.edge_count == static_cast<long long>(edit_diff(g, a.graph).size()));
            CHECK(a.graph.components().size_multiset() == b.graph.components().size_multiset());
            CHECK(a.graph.components().size_multiset() == multiset_plus(multiset_minus(cs, x), flatten(np)));
            ++tried;
        }
    }
    CHECK(tried > 300);
}

TEST_CASE("property: pruned nested enumeration matches the unpruned filter") {
    for (int l = 2; l <= 7; ++l)
        for (long long budget : {0LL, 2LL, 5LL, 100LL}) {
            const SizeMultiset avail{1, 1, 1, 2, 2, 3, 4};
            // Unpruned: every outer partition, every inner choice, then filter.
            std::multiset<std::pair<Partition, std::vector<Partition>>> expect;
            for (const auto& x : partitions_of(l)) {
                std::vector<Partition> inner(x.size());
                std::function<void(std::size_t)> rec = [&](std::size_t i) {
                    if (i == x.size()) {
                        long long cost = 0;
                        for (const auto& xi : inner) cost += spp(xi);
                        NestedPartition np{x, inner};
                        if (cost > budget || !is_submultiset(avail, flatten(np))) return;
                        // Canonical: equal outer parts carry non-increasing inner partitions.
                        std::vector<Partition> sorted = inner;
                        for (std::size_t a = 0; a < x.size();) {
                            std::size_t b = a;
                            while (b < x.size() && x[b] == x[a]) ++b;
                            std::sort(sorted.begin() + static_cast<long>(a), sorted.begin() + static_cast<long>(b),
                                      std::greater<>());
                            a = b;
                        }
                        if (sorted == inner) expect.insert({x, inner});
                        return;
                    }
                    for (const auto& xi : partitions_of(x[i])) {
                        inner[i] = xi;
                        rec(i + 1);
                    }
                };
                rec(0);
            }
            std::multiset<std::pair<Partition, std::vector<Partition>>> got;
            for_each_nested(l, budget, avail, [&](const NestedPartition& np, long long cost, const Partition& flat) {
                long long c = 0;
                for (const auto& xi : np.inner) c += spp(xi);
                CHECK(c == cost);
                CHECK(flat == flatten(np));
                got.insert({np.outer, np.inner});
                return false;
            });
            CHECK(got == expect);
        }
}

TEST_CASE("outer availability checks the outer parts") {
    std::vector<NestedPartition> seen;
    for_each_nested(2, 5, {2, 3}, NestedAvail::Outer, [&](const NestedPartition& np, long long, const Partition&) {
        seen.push_back(np);
        return false;
    });
    REQUIRE(seen.size() == 2);
    CHECK(seen[0].inner == std::vector<Partition>{{2}});
    CHECK(seen[1].inner == std::vector<Partition>{{1, 1}});
    int inner_count = 0;
    for_each_nested(2, 5, {2, 3}, [&](const NestedPartition&, long long, const Partition&) {
        ++inner_count;
        return false;
    });
    CHECK(inner_count == 1);
}

TEST_CASE("algo_bcc examples") {
    Instance ex1{cluster_graph({1, 1, 2, 2, 2}), 4, 1, Variant::BCC};
    Answer a = algo_bcc(ex1);
    CHECK(a.yes);
    CHECK(a.edits.empty());
    CHECK(oracle_solve(ex1).yes);

    Instance tight{cluster_graph({1, 1, 2, 2, 2}), 4, 0, Variant::BCC};
    a = algo_bcc(tight);
    CHECK(a.yes == oracle_solve(tight).yes);
    if (a.yes) CHECK(verify_solution(tight, a.edits));

    Instance no{cluster_graph({5, 1}), 2, 0, Variant::BCC};
    CHECK_FALSE(algo_bcc(no).yes);
    CHECK_FALSE(oracle_solve(no).yes);

    CHECK(algo_bcc({cluster_graph({3, 3}), 0, 0, Variant::BCC}).yes);
    CHECK_THROWS_AS(algo_bcc({Graph(3, {{0, 1}, {1, 2}}), 1, 0, Variant::BCC}), std::invalid_argument);
}

TEST_CASE("algo_bce_c and solve_bce examples") {
    Instance a{cluster_graph({3, 1}), 2, 0, Variant::BCE};
    CHECK(algo_bce_c(a).yes == oracle_solve(a).yes);
    Answer bal = algo_bce_c({cluster_graph({2, 2}), 1, 0, Variant::BCE});
    CHECK(bal.yes);
    CHECK(bal.edits.empty());
    CHECK(algo_bce_c({cluster_graph({2, 2}), 0, 0, Variant::BCE}).yes);

    // Split one K2, then merge each singleton into another K2: 1 + 2 + 2 edits.
    Instance split_merge{cluster_graph({2, 3, 2, 2}), 5, 0, Variant::BCE};
    Answer sm = algo_bce_c(split_merge);
    CHECK(sm.yes);
    CHECK(verify_solution(split_merge, sm.edits));
    CHECK(sm.edits.size() == 5);
    CHECK_FALSE(algo_bce_c({cluster_graph({2, 3, 2, 2}), 4, 0, Variant::BCE}).yes);
    CHECK_FALSE(oracle_solve({cluster_graph({2, 3, 2, 2}), 4, 0, Variant::BCE}).yes);

    Graph p3(3, {{0, 1}, {1, 2}});
    Instance b{p3, 1, 1, Variant::BCE};
    Answer r = solve_bce(b);
    CHECK(r.yes);
    CHECK(verify_solution(b, r.edits));
    CHECK_FALSE(solve_bce({p3, 0, 3, Variant::BCE}).yes);

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    Instance c{c4, 2, 0, Variant::BCE};
    r = solve_bce(c);
    CHECK(r.yes == oracle_solve(c).yes);
    if (r.yes) CHECK(verify_solution(c, r.edits));
}

TEST_CASE("property: partition solvers agree with the oracle") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 3000; ++i) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const int k = std::uniform_int_distribution<int>(0, 4)(rng);
        const int eta = std::uniform_int_distribution<int>(0, n)(rng);
        Graph cl = cluster_graph(testing::random_sizes(rng, n));
        for (Instance inst : {Instance{cl, k, eta, Variant::BCC}, Instance{cl, k, eta, Variant::BCE}}) {
            const bool truth = oracle_solve(inst).yes;
            Answer a = inst.variant == Variant::BCC ? algo_bcc(inst) : algo_bce_c(inst);
            CHECK(a.yes == truth);
            if (a.yes) CHECK(verify_solution(inst, a.edits));
        }
        if (n > 7) continue;
        Instance gen{testing::random_graph(rng, n), std::min(k, 3), eta, Variant::BCE};
        Answer a = solve_bce(gen);
        CHECK(a.yes == oracle_solve(gen).yes);
        if (a.yes) CHECK(verify_solution(gen, a.edits));
    }
}
