#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "balclust/binb.hpp"
#include "balclust/cccd.hpp"
#include "balclust/crosscheck.hpp"
#include "balclust/gen.hpp"
#include "balclust/io.hpp"
#include "balclust/kernel.hpp"
#include "balclust/oracle.hpp"
#include "balclust/partition.hpp"

using namespace balclust;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Answer run_algo(const std::string& algo, const Instance& inst) {
    if (algo == "oracle") return oracle_solve(inst);
    switch (inst.variant) {
        case Variant::BCC: return algo == "fast" ? fast_algo_bcc(inst) : algo_bcc(inst);
        case Variant::BCD: return solve_bcd(inst);
        case Variant::BCE: return algo == "fast" ? fast_algo_bce(inst) : solve_bce(inst);
    }
    return {};
}

void emit_instance(const Instance& inst, const std::string& out) {
    if (out.empty())
        std::cout << serialize_instance(inst);
    else
        write_instance_file(out, inst);
}

std::vector<int> parse_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad list item '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<long long> parse_list_ll(const std::string& s) {
    std::vector<long long> out;
    for (int v : parse_list(s)) out.push_back(v);
    return out;
}

Variant variant_or_throw(const std::string& s) {
    auto v = parse_variant(s);
    if (!v) throw std::invalid_argument("unknown problem '" + s + "'");
    return *v;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Instance> selftest_corpus(bool deep, std::uint64_t seed) {
    std::vector<Instance> corpus;
    const int max_n = deep ? 5 : 4, max_k = deep ? 3 : 2, max_eta = deep ? 5 : 3;
    for (int n = 0; n <= max_n; ++n) {
        const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            Graph g = graph_from_mask(n, mask);
            const bool cluster = is_cluster_graph(g);
            for (int k = 0; k <= max_k; ++k)
                for (int eta = 0; eta <= max_eta; ++eta)
                    for (Variant v : {Variant::BCC, Variant::BCD, Variant::BCE})
                        if (v != Variant::BCC || cluster) corpus.push_back(Instance{g, k, eta, v});
        }
    }
    std::mt19937_64 rng(seed);
    const int samples = deep ? 2000 : 200;
    for (int i = 0; i < samples; ++i) {
        const int n = std::uniform_int_distribution<int>(1, deep ? 8 : 7)(rng);
        const int k = std::uniform_int_distribution<int>(0, 3)(rng);
        const int eta = std::uniform_int_distribution<int>(0, n)(rng);
        const Variant v = static_cast<Variant>(std::uniform_int_distribution<int>(0, 2)(rng));
        Graph g;
        if (v == Variant::BCC) {
            std::vector<int> sizes;
            for (int left = n; left > 0;) {
                const int s = std::uniform_int_distribution<int>(1, left)(rng);
                sizes.push_back(s);
                left -= s;
            }
            g = gen_cluster(sizes);
        } else {
            g = gen_random(n, std::uniform_real_distribution<double>(0.2, 0.8)(rng), rng());
        }
        corpus.push_back(Instance{g, k, eta, v});
    }
    return corpus;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Balanced cluster completion, deletion and editing"};
    app.require_subcommand(1);

    std::string file, algo = "partition", problem, out;
    auto* solve = app.add_subcommand("solve", "Solve an instance file");
    solve->add_option("file", file, "instance file")->required()->check(CLI::ExistingFile);
    solve->add_option("--algo", algo, "solver")->check(CLI::IsMember({"oracle", "partition", "fast", "branch"}));

    auto* kern = app.add_subcommand("kernelize", "Kernelize an instance file");
    kern->add_option("file", file, "instance file")->required()->check(CLI::ExistingFile);
    kern->add_option("--problem", problem, "override the variant")->check(CLI::IsMember({"bcc", "bcd", "bce"}, CLI::ignore_case));
    kern->add_option("--out", out, "write the reduced instance here instead of stdout");

    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->require_subcommand(1);
    int n = 0, k = 0, eta = 0, d = 1, flips = 0;
    double p = 0.5;
    std::uint64_t seed = 1;
    std::string sizes, as, bs, cs;
    long long t = 0;
    std::string gen_problem = "bce";
    auto* g_random = gen->add_subcommand("random", "G(n,p)");
    g_random->add_option("--n", n)->required();
    g_random->add_option("--p", p);
    g_random->add_option("--seed", seed);
    auto* g_cluster = gen->add_subcommand("cluster", "disjoint cliques");
    g_cluster->add_option("--sizes", sizes, "comma separated clique sizes")->required();
    g_cluster->add_option("--flips", flips, "random pairs to toggle");
    g_cluster->add_option("--seed", seed);
    for (auto* sc : {g_random, g_cluster}) {
        sc->add_option("--k", k);
        sc->add_option("--eta", eta);
        sc->add_option("--problem", gen_problem)->check(CLI::IsMember({"bcc", "bcd", "bce"}, CLI::ignore_case));
    }
    auto* g_ex1 = gen->add_subcommand("example1", "isolated vertices plus equal cliques");
    g_ex1->add_option("--k", k)->required();
    g_ex1->add_option("--n", n)->required();
    auto* g_hard = gen->add_subcommand("hardness", "BCC instance from numerical 3D matching");
    g_hard->add_option("--t", t)->required();
    g_hard->add_option("--a", as)->required();
    g_hard->add_option("--b", bs)->required();
    g_hard->add_option("--c", cs)->required();
    g_hard->add_option("--d", d);
    for (auto* sc : {g_random, g_cluster, g_ex1, g_hard}) sc->add_option("--out", out);

    auto* bench = app.add_subcommand("bench", "Time solvers on random instances");
    int count = 10;
    std::string bench_problem = "bce";
    bench->add_option("--problem", bench_problem)->check(CLI::IsMember({"bcc", "bcd", "bce"}, CLI::ignore_case));
    bench->add_option("--algo", algo)->check(CLI::IsMember({"oracle", "partition", "fast", "branch"}));
    bench->add_option("--n", n)->required();
    bench->add_option("--k", k)->required();
    bench->add_option("--eta", eta);
    bench->add_option("--count", count);
    bench->add_option("--seed", seed);

    auto* self = app.add_subcommand("selftest", "Cross-check every solver against the oracle");
    bool deep = false;
    self->add_flag("--deep", deep, "exhaustive n <= 5 corpus");
    self->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*solve) {
            Instance inst = read_instance_file(file);
            const auto t0 = Clock::now();
            Answer a = run_algo(algo, inst);
            const double ms = ms_since(t0);
            std::cout << "variant: " << to_string(inst.variant) << "\n"
                      << "n: " << inst.graph.n() << "\nm: " << inst.graph.m() << "\nk: " << inst.k
                      << "\neta: " << inst.eta << "\nalgo: " << algo << "\n"
                      << "answer: " << (a.yes ? "yes" : "no") << "\n";
            if (a.yes) {
                std::cout << "edits: " << a.edits.size() << "\n"
                          << "edit_list: " << format_edits(a.edits) << "\n"
                          << "verified: " << (verify_solution(inst, a.edits) ? "true" : "false") << "\n";
            }
            std::cout << "time_ms: " << ms << "\n";
            return 0;
        }
        if (*kern) {
            Instance inst = read_instance_file(file);
            if (!problem.empty()) inst.variant = variant_or_throw(problem);
            const auto t0 = Clock::now();
            KernelResult r = kernelize(inst);
            const double ms = ms_since(t0);
            std::cout << "variant: " << to_string(inst.variant) << "\n"
                      << "outcome: " << to_string(r.outcome) << "\n"
                      << "n_in: " << inst.graph.n() << "\nk_in: " << inst.k << "\neta_in: " << inst.eta << "\n";
            if (r.outcome == Outcome::Reduced) {
                const long long bound = inst.variant == Variant::BCC   ? 10LL * r.instance.k
                                        : inst.variant == Variant::BCD ? bcd_kernel_vertex_bound(r.instance.k)
                                                                       : bce_kernel_vertex_bound(r.instance.k);
                std::cout << "n_out: " << r.instance.graph.n() << "\nk_out: " << r.instance.k
                          << "\neta_out: " << r.instance.eta << "\nvertex_bound: " << bound << "\n";
            }
            for (const auto& e : r.trace) std::cout << "trace: " << e.rule << " " << e.effect << "\n";
            std::cout << "time_ms: " << ms << "\n";
            if (r.outcome == Outcome::Reduced) {
                if (out.empty()) {
                    std::cout << "---\n";
                    emit_instance(r.instance, "");
                } else {
                    write_instance_file(out, r.instance);
                    std::cout << "written: " << out << "\n";
                }
            }
            return 0;
        }
        if (*gen) {
            Instance inst;
            if (*g_random || *g_cluster) {
                inst.graph = *g_random ? gen_random(n, p, seed) : gen_perturbed_cluster(parse_list(sizes), flips, seed);
                inst.k = k;
                inst.eta = eta;
                inst.variant = variant_or_throw(gen_problem);
                if (inst.variant == Variant::BCC && !is_cluster_graph(inst.graph))
                    throw UsageError("BCC instances must be cluster graphs");
            } else if (*g_ex1) {
                inst = gen_example1(k, n);
            } else {
                N3DMInput in{t, parse_list_ll(as), parse_list_ll(bs), parse_list_ll(cs)};
                inst = gen_hardness(in, d);
            }
            emit_instance(inst, out);
            return 0;
        }
        if (*bench) {
            std::mt19937_64 rng(seed);
            const Variant v = variant_or_throw(bench_problem);
            double total_ms = 0;
            int yes = 0;
            for (int i = 0; i < count; ++i) {
                Instance inst{gen_random(n, 0.5, rng()), k, eta, v};
                if (v == Variant::BCC) {
                    std::vector<int> sz;
                    for (int left = n; left > 0;) {
                        const int s = std::uniform_int_distribution<int>(1, left)(rng);
                        sz.push_back(s);
                        left -= s;
                    }
                    inst.graph = gen_cluster(sz);
                }
                const auto t0 = Clock::now();
                Answer a = run_algo(algo, inst);
                const double ms = ms_since(t0);
                total_ms += ms;
                yes += a.yes;
                std::cout << "run: " << i << " answer=" << (a.yes ? "yes" : "no") << " ms=" << ms << "\n";
            }
            std::cout << "instances: " << count << "\nyes: " << yes << "\ntotal_ms: " << total_ms << "\n";
            return 0;
        }
        if (*self) {
            const auto t0 = Clock::now();
            CheckReport report;
            CheckOptions opt;
            for (const Instance& inst : selftest_corpus(deep, seed)) crosscheck(inst, opt, report);
            for (const auto& f : report.failures) std::cout << "failure: [" << f.kind << "] " << f.detail << "\n";
            std::cout << "instances: " << report.instances << "\nchecks: " << report.checks
                      << "\nfailures: " << report.failures.size() << "\ntime_ms: " << ms_since(t0) << "\n";
            return report.failures.empty() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
