#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "balclust/io.hpp"
#include "balclust/oracle.hpp"
#include "support.hpp"

using namespace balclust;

TEST_CASE("oracle examples") {
    Answer a = oracle_solve({cluster_graph({1, 2}), 2, 0, Variant::BCC});
    CHECK(a.yes);
    CHECK(a.edits.additions.size() == 2);
    CHECK(a.edits.deletions.empty());
    CHECK_FALSE(oracle_solve({cluster_graph({1, 2}), 1, 0, Variant::BCC}).yes);

    a = oracle_solve({cluster_graph({3}), 0, 0, Variant::BCD});
    CHECK(a.yes);
    CHECK(a.edits.empty());

    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(oracle_solve({p3, 0, 5, Variant::BCE}).yes);
    a = oracle_solve({p3, 1, 0, Variant::BCE});
    CHECK(a.yes);
    CHECK(a.edits.additions == std::set<Pair>{{0, 2}});
    CHECK(oracle_solve({p3, 5, 0, Variant::BCD}).yes);
    CHECK_FALSE(oracle_solve({p3, -1, 5, Variant::BCE}).yes);
}

TEST_CASE("oracle caps") {
    Instance big{Graph(13), 0, 0, Variant::BCE};
    CHECK_FALSE(oracle_fits(big, OracleCaps{12, 10}));
    CHECK(oracle_fits(big, OracleCaps{13, 10}));
    CHECK_THROWS_AS(oracle_solve(big, OracleCaps{12, 10}), std::invalid_argument);
    CHECK(oracle_solve(big, OracleCaps{13, 10}).yes);
    CHECK_THROWS_AS(oracle_solve({Graph(65), 0, 0, Variant::BCE}, OracleCaps{100, 10}), std::invalid_argument);
}

TEST_CASE("property: oracle witnesses are minimum (n <= 5)") {
    std::mt19937_64 rng(97);
    for (int it = 0; it < 400; ++it) {
        const int n = std::uniform_int_distribution<int>(1, 5)(rng);
        const auto variant = static_cast<Variant>(std::uniform_int_distribution<int>(0, 2)(rng));
        Graph g = variant == Variant::BCC ? cluster_graph(testing::random_sizes(rng, n)) : testing::random_graph(rng, n);
        Instance inst{g, std::uniform_int_distribution<int>(0, 3)(rng), std::uniform_int_distribution<int>(0, n)(rng),
                      variant};
        const auto sols = testing::all_solutions(inst);
        Answer a = oracle_solve(inst);
        REQUIRE(a.yes == !sols.empty());
        if (!a.yes) continue;
        std::size_t best = sols.front().size();
        for (const auto& f : sols) best = std::min(best, f.size());
        CHECK(a.edits.size() == best);
        CHECK(verify_solution(inst, a.edits));
    }
}

TEST_CASE("parse examples") {
    Instance inst = parse_instance("BCE 3 2 1 1\n0 1\n1 2\n");
    CHECK(inst.variant == Variant::BCE);
    CHECK(inst.graph.n() == 3);
    CHECK(inst.graph.m() == 2);
    CHECK(inst.k == 1);
    CHECK(inst.eta == 1);

    inst = parse_instance("# comment\n\nBCD 4 0 0 2\n");
    CHECK(inst.graph.n() == 4);
    CHECK(inst.graph.m() == 0);
    CHECK(parse_instance("BCC 0 0 0 0").graph.n() == 0);

    auto fails_at = [](const std::string& text, int line, int column) {
        try {
            parse_instance(text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.column() == column);
            return;
        }
        FAIL("no ParseError for: " << text);
    };
    fails_at("BCE 3 2 1 1\n0 1\n1 0\n", 3, 1);
    fails_at("BCE 3 1 1 1\n0 x\n", 2, 3);
    fails_at("BCE 3 1 1 1\n0 3\n", 2, 3);
    fails_at("BCE 3 1 1 1\n2 2\n", 2, 3);
    fails_at("XYZ 3 0 1 1\n", 1, 1);
    fails_at("BCE 3 0 1\n", 1, 1);
    fails_at("BCE 3 2 1 1\n0 1\n", 3, 1);
    fails_at("BCE 3 1 1 1\n0 1\n1 2\n", 3, 1);
    fails_at("BCE 3 4 1 1\n", 1, 7);
    fails_at("BCE 3 0 -1 1\n", 1, 9);
    fails_at("BCE 60000 0 1 1\n", 1, 5);
    fails_at("BCC 3 2 1 1\n0 1\n1 2\n", 1, 1);
    fails_at("", 1, 1);
    fails_at("BCE 3 1 1 1\n0 1 2\n", 2, 1);
}

TEST_CASE("property: serialize and parse round trip") {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 300; ++it) {
        const int n = std::uniform_int_distribution<int>(0, 12)(rng);
        const auto variant = static_cast<Variant>(std::uniform_int_distribution<int>(0, 2)(rng));
        Graph g = variant == Variant::BCC ? cluster_graph(n ? testing::random_sizes(rng, n) : std::vector<int>{})
                                          : testing::random_graph(rng, n);
        Instance inst{g, std::uniform_int_distribution<int>(0, 50)(rng), std::uniform_int_distribution<int>(0, 50)(rng),
                      variant};
        Instance back = parse_instance(serialize_instance(inst));
        CHECK(back.graph == inst.graph);
        CHECK(back.k == inst.k);
        CHECK(back.eta == inst.eta);
        CHECK(back.variant == inst.variant);
    }
}

TEST_CASE("instance files") {
    const auto path = std::filesystem::temp_directory_path() / "balclust_io_test.txt";
    Instance inst{Graph(3, {{0, 1}}), 2, 1, Variant::BCD};
    write_instance_file(path.string(), inst);
    Instance back = read_instance_file(path.string());
    CHECK(back.graph == inst.graph);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_instance_file(path.string()), std::runtime_error);
}

TEST_CASE("format edits") {
    EditSet f;
    f.additions = {{0, 2}};
    f.deletions = {{1, 3}, {0, 1}};
    CHECK(format_edits(f) == "+0-2 -0-1 -1-3");
    CHECK(format_edits(EditSet{}).empty());
}

TEST_CASE("generators") {
    Instance ex = gen_example1(4, 8);
    CHECK(ex.variant == Variant::BCC);
    CHECK(ex.eta == 1);
    CHECK(ex.k == 4);
    CHECK(ex.graph.components().size_multiset() == std::vector<int>{1, 1, 2, 2, 2});
    CHECK_THROWS_AS(gen_example1(5, 8), std::invalid_argument);
    CHECK_THROWS_AS(gen_example1(4, 9), std::invalid_argument);

    CHECK(gen_cluster({3, 3}) == Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}));
    CHECK(gen_random(5, 0.0, 1).m() == 0);
    CHECK(gen_random(5, 1.0, 1).m() == 10);
    CHECK(gen_random(9, 0.5, 7) == gen_random(9, 0.5, 7));
    CHECK(graph_from_mask(3, 0b101) == Graph(3, {{0, 1}, {1, 2}}));

    Graph pert = gen_perturbed_cluster({3, 3}, 2, 5);
    CHECK(edit_diff(gen_cluster({3, 3}), pert).size() == 2);
}

TEST_CASE("hardness construction") {
    const N3DMInput in{4, {1, 2}, {1, 1}, {2, 1}};
    HardnessSizes h = hardness_sizes(in, 1);
    CHECK(h.A == 4);
    CHECK(h.B == 8);
    CHECK(h.C == 128);
    CHECK(h.t_prime == 144);
    CHECK(h.sizes == std::vector<long long>{5, 6, 9, 9, 130, 129});
    CHECK(h.k == 3854);

    Instance hard = gen_hardness(in, 1);
    CHECK(hard.graph.n() == 288);
    CHECK(hard.eta == 0);
    CHECK(hard.k == 3854);
    CHECK(hard.variant == Variant::BCC);
    // 1 + 1 + 2 = 4 and 2 + 1 + 1 = 4.
    EditSet f = hardness_merge(hard, 2, {{0, 0, 0}, {1, 1, 1}});
    CHECK(f.size() == 3854);
    CHECK(f.deletions.empty());
    CHECK(verify_solution(hard, f));
    EditSet bad = hardness_merge(hard, 2, {{0, 0, 1}, {1, 1, 0}});
    CHECK_FALSE(verify_solution(hard, bad));
    CHECK_THROWS_AS(hardness_merge(hard, 2, {{0, 2, 0}}), std::invalid_argument);

    CHECK_THROWS_AS(hardness_sizes({4, {1, 2}, {1, 1}, {2, 2}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(hardness_sizes({4, {1, 4}, {1, 1}, {1, 0}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(hardness_sizes({4, {1, 2}, {1}, {2, 1}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(hardness_sizes(in, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_hardness({30, {10, 10, 10}, {10, 10, 10}, {10, 10, 10}}, 1), std::invalid_argument);
}

TEST_CASE("property: hardness bands are ordered") {
    std::mt19937_64 rng(103);
    int built = 0;
    for (int it = 0; it < 200; ++it) {
        const int n = std::uniform_int_distribution<int>(2, 4)(rng);
        const int d = std::uniform_int_distribution<int>(1, 2)(rng);
        const long long t = std::uniform_int_distribution<long long>(3, 12)(rng);
        N3DMInput in{t, std::vector<long long>(n), std::vector<long long>(n), std::vector<long long>(n)};
        // Random triples summing to t.
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            in.a[i] = std::uniform_int_distribution<long long>(1, t - 2)(rng);
            in.b[i] = std::uniform_int_distribution<long long>(1, t - 1 - in.a[i])(rng);
            in.c[i] = t - in.a[i] - in.b[i];
            const long long nd = d == 1 ? n : n * n;
            ok = ok && in.a[i] <= nd && in.b[i] <= nd && in.c[i] <= nd;
        }
        if (!ok) {
            CHECK_THROWS_AS(hardness_sizes(in, d), std::invalid_argument);
            continue;
        }
        HardnessSizes h = hardness_sizes(in, d);
        ++built;
        long long max_a = 0, min_b = h.sizes[n], max_b = 0, min_c = h.sizes[2 * n];
        for (int i = 0; i < n; ++i) {
            max_a = std::max(max_a, h.sizes[i]);
            min_b = std::min(min_b, h.sizes[n + i]);
            max_b = std::max(max_b, h.sizes[n + i]);
            min_c = std::min(min_c, h.sizes[2 * n + i]);
        }
        CHECK(max_a < min_b);
        CHECK(max_b < min_c);
        long long sum = 0;
        for (long long s : h.sizes) sum += s;
        CHECK(sum == n * h.t_prime);
    }
    CHECK(built > 20);
}
