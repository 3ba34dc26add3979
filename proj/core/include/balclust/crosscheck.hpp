#pragma once

#include <functional>
#include <string>
#include <vector>

#include "balclust/graph.hpp"
#include "balclust/oracle.hpp"

namespace balclust {

struct NamedSolver {
    std::string name;
    std::function<Answer(const Instance&)> run;
};

// Every solver that applies to the instance (cluster-only solvers are skipped on other graphs).
std::vector<NamedSolver> solvers_for(const Instance& inst);

struct CheckFailure {
    std::string kind;  // oracle, witness, fast-slow, kernel, error
    std::string detail;
};

struct CheckReport {
    long long instances = 0;
    long long checks = 0;
    std::vector<CheckFailure> failures;

    long long count(const std::string& kind) const;
    void merge(const CheckReport& other);
};

struct CheckOptions {
    bool oracle = true;
    bool kernel = true;
    OracleCaps caps = oracle_caps();
};

// Runs the oracle, every applicable solver and the kernel on one instance.
void crosscheck(const Instance& inst, const CheckOptions& opt, CheckReport& report);

std::string describe(const Instance& inst);

}  // namespace balclust
