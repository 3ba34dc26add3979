#pragma once

#include <string>
#include <vector>

#include "balclust/kernel.hpp"

namespace balclust::detail {

struct KernelState {
    Graph g;
    int k = 0;
    int eta = 0;
    Variant variant = Variant::BCE;
    std::vector<int> map;  // input vertex -> current vertex
    std::vector<TraceEntry> trace;

    explicit KernelState(const Instance& inst);

    void note(std::string rule, std::string effect) { trace.push_back({std::move(rule), std::move(effect)}); }
    void drop(const std::vector<int>& vertices);
    KernelResult finish(Outcome o) const;
};

// Components sorted by (size, smallest vertex id).
std::vector<int> sorted_component_ids(const ComponentView& cv, const std::vector<int>& ids);

// The vertices to delete when shrinking a clique to `keep` vertices: the highest ids.
std::vector<int> trim_highest(const std::vector<int>& members, int keep);

// Shared tail of the BCD and BCE kernels over the unmanageable components.
// `small` bounds everything outside the unmanageable components, `eta_prime` = 2 * small.
KernelResult unmanageable_pipeline(KernelState& st, const std::vector<int>& unmanageable,
                                   long long small, long long eta_prime, const std::string& tag);

}  // namespace balclust::detail
