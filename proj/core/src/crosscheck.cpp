#include "balclust/crosscheck.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "balclust/binb.hpp"
#include "balclust/cccd.hpp"
#include "balclust/io.hpp"
#include "balclust/kernel.hpp"
#include "balclust/partition.hpp"

namespace balclust {

long long CheckReport::count(const std::string& kind) const {
    long long c = 0;
    for (const auto& f : failures)
        if (f.kind == kind) ++c;
    return c;
}

void CheckReport::merge(const CheckReport& other) {
    instances += other.instances;
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::vector<NamedSolver> solvers_for(const Instance& inst) {
    std::vector<NamedSolver> out;
    const bool cluster = is_cluster_graph(inst.graph);
    switch (inst.variant) {
        case Variant::BCC:
            if (cluster) {
                out.push_back({"algo_bcc", algo_bcc});
                out.push_back({"fast_algo_bcc", fast_algo_bcc});
            }
            break;
        case Variant::BCD:
            out.push_back({"solve_bcd", solve_bcd});
            break;
        case Variant::BCE:
            out.push_back({"solve_bce", solve_bce});
            out.push_back({"fast_algo_bce", fast_algo_bce});
            if (cluster) {
                out.push_back({"algo_bce_c", algo_bce_c});
                out.push_back({"fast_algo_bce_c", fast_algo_bce_c});
            }
            break;
    }
    return out;
}

std::string describe(const Instance& inst) {
    std::string s = serialize_instance(inst);
    for (auto& c : s)
        if (c == '\n') c = ';';
    return s;
}

void crosscheck(const Instance& inst, const CheckOptions& opt, CheckReport& report) {
    ++report.instances;
    auto fail = [&](const std::string& kind, const std::string& what) {
        report.failures.push_back({kind, what + " on " + describe(inst)});
    };

    std::optional<bool> truth;
    if (opt.oracle && oracle_fits(inst, opt.caps)) {
        Answer o = oracle_solve(inst, opt.caps);
        ++report.checks;
        if (o.yes && !verify_solution(inst, o.edits)) fail("witness", "oracle witness rejected");
        truth = o.yes;
    }

    std::map<std::string, bool> verdict;
    for (const auto& s : solvers_for(inst)) {
        Answer a;
        try {
            a = s.run(inst);
        } catch (const std::exception& e) {
            fail("error", s.name + " threw: " + e.what());
            continue;
        }
        verdict[s.name] = a.yes;
        ++report.checks;
        if (a.yes && !verify_solution(inst, a.edits)) fail("witness", s.name + " witness rejected");
        if (truth && a.yes != *truth)
            fail("oracle", s.name + " says " + (a.yes ? "yes" : "no") + ", oracle says " + (*truth ? "yes" : "no"));
    }
    auto pair_check = [&](const std::string& slow, const std::string& fast) {
        if (!verdict.count(slow) || !verdict.count(fast)) return;
        ++report.checks;
        if (verdict[slow] != verdict[fast]) fail("fast-slow", fast + " disagrees with " + slow);
    };
    pair_check("algo_bcc", "fast_algo_bcc");
    pair_check("solve_bce", "fast_algo_bce");
    pair_check("algo_bce_c", "fast_algo_bce_c");

    if (!opt.kernel) return;
    if (inst.variant == Variant::BCC && !is_cluster_graph(inst.graph)) return;
    KernelResult kr;
    try {
        kr = kernelize(inst);
    } catch (const std::exception& e) {
        fail("error", std::string("kernel threw: ") + e.what());
        return;
    }
    if (!truth) return;
    ++report.checks;
    std::optional<bool> kernel_says;
    if (kr.outcome == Outcome::TrivialYes) kernel_says = true;
    if (kr.outcome == Outcome::TrivialNo) kernel_says = false;
    if (kr.outcome == Outcome::Reduced && oracle_fits(kr.instance, opt.caps))
        kernel_says = oracle_solve(kr.instance, opt.caps).yes;
    if (kernel_says && *kernel_says != *truth)
        fail("kernel", to_string(kr.outcome) + " kernel answer " + (*kernel_says ? "yes" : "no") + " vs oracle " +
                           (*truth ? "yes" : "no"));
}

}  // namespace balclust
