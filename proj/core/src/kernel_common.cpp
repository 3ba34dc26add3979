#include <algorithm>
#include <stdexcept>

#include "kernel_internal.hpp"

namespace balclust {

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::TrivialYes: return "trivial-yes";
        case Outcome::TrivialNo: return "trivial-no";
        case Outcome::Reduced: return "reduced";
    }
    return "?";
}

KernelResult kernelize(const Instance& inst) {
    switch (inst.variant) {
        case Variant::BCC: return kernelize_bcc(inst);
        case Variant::BCD: return kernelize_bcd(inst);
        case Variant::BCE: return kernelize_bce(inst);
    }
    throw std::invalid_argument("unknown variant");
}

namespace detail {

KernelState::KernelState(const Instance& inst)
    : g(inst.graph), k(inst.k), eta(inst.eta), variant(inst.variant), map(inst.graph.n()) {
    for (int v = 0; v < g.n(); ++v) map[v] = v;
}

void KernelState::drop(const std::vector<int>& vertices) {
    std::vector<int> step;
    g = remove_vertices(g, vertices, &step);
    for (int& x : map)
        if (x >= 0) x = step[x];
}

KernelResult KernelState::finish(Outcome o) const {
    KernelResult r;
    r.outcome = o;
    r.trace = trace;
    if (o == Outcome::Reduced) {
        r.instance = Instance{g, k, eta, variant};
        r.vertex_map = map;
    }
    return r;
}

std::vector<int> sorted_component_ids(const ComponentView& cv, const std::vector<int>& ids) {
    std::vector<int> out = ids;
    std::sort(out.begin(), out.end(), [&](int a, int b) {
        if (cv.sizes[a] != cv.sizes[b]) return cv.sizes[a] < cv.sizes[b];
        return cv.members[a].front() < cv.members[b].front();
    });
    return out;
}

std::vector<int> trim_highest(const std::vector<int>& members, int keep) {
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    if (keep < 0 || keep > static_cast<int>(sorted.size())) throw std::logic_error("bad trim size");
    return std::vector<int>(sorted.begin() + keep, sorted.end());
}

KernelResult unmanageable_pipeline(KernelState& st, const std::vector<int>& unmanageable,
                                   long long small, long long eta_prime, const std::string& tag) {
    const ComponentView cv = st.g.components();
    std::vector<int> order = sorted_component_ids(cv, unmanageable);
    const int r = static_cast<int>(order.size());
    const int h1 = cv.sizes[order.front()];
    const int hr_id = order.back();
    if (cv.sizes[hr_id] - h1 > st.eta) {
        st.note(tag + ".unmanageable-spread", "|H_r| - |H_1| = " + std::to_string(cv.sizes[hr_id] - h1) + " > eta");
        return st.finish(Outcome::TrivialNo);
    }
    const int s = h1 > small ? 0 : 1;
    // Representative vertex of H_r, to find it again after deletions.
    int hr_vertex = cv.members[hr_id].front();
    if (s + 1 < r) {
        std::vector<int> gone;
        for (int i = s; i <= r - 2; ++i)
            gone.insert(gone.end(), cv.members[order[i]].begin(), cv.members[order[i]].end());
        int removed_before = 0;
        for (int v : gone)
            if (v < hr_vertex) ++removed_before;
        st.drop(gone);
        hr_vertex -= removed_before;
        st.note(tag + ".drop-middle", "s=" + std::to_string(s) + ", deleted " + std::to_string(r - 1 - s) +
                                          " unmanageable components (" + std::to_string(gone.size()) + " vertices)");
    }
    const ComponentView& cv2 = st.g.components();
    const int hr = cv2.sizes[cv2.comp_of[hr_vertex]];
    if (hr > small + st.eta) {
        st.note(tag + ".large-Hr", "|H_r| = " + std::to_string(hr) + " > " + std::to_string(small) + " + eta");
        return st.finish(Outcome::TrivialNo);
    }
    if (hr <= eta_prime || st.eta <= eta_prime) {
        st.note(tag + ".small-return", "|H_r| = " + std::to_string(hr) + ", eta = " + std::to_string(st.eta));
        return st.finish(Outcome::Reduced);
    }
    if (cv2.lcomp != hr) throw std::logic_error("H_r is not the largest component");
    const long long big_n = static_cast<long long>(cv2.lcomp) - (st.eta - eta_prime);
    const int n_keep = static_cast<int>(big_n);
    std::vector<int> gone = trim_highest(cv2.members[cv2.comp_of[hr_vertex]], n_keep);
    st.drop(gone);
    st.note(tag + ".trim", "eta " + std::to_string(st.eta) + " -> " + std::to_string(eta_prime) + ", H_r " +
                               std::to_string(hr) + " -> " + std::to_string(n_keep));
    st.eta = static_cast<int>(eta_prime);
    return st.finish(Outcome::Reduced);
}

}  // namespace detail
}  // namespace balclust
