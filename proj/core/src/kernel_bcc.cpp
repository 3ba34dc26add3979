#include <stdexcept>

#include "kernel_internal.hpp"

namespace balclust {

using detail::KernelState;

KernelResult kernelize_bcc(const Instance& inst) {
    if (!is_cluster_graph(inst.graph)) throw std::invalid_argument("BCC kernel needs a cluster graph");
    KernelState st(inst);
    st.variant = Variant::BCC;
    const long long k = st.k;

    if (is_eta_balanced(st.g, st.eta)) {
        st.note("bcc.trivial-yes", "graph is eta-balanced");
        return st.finish(Outcome::TrivialYes);
    }
    const ComponentView cv = st.g.components();
    if (cv.scomp >= k + 1 || cv.lcomp >= 2 * k + st.eta + 1) {
        st.note("bcc.sanity-no", "scomp = " + std::to_string(cv.scomp) + ", lcomp = " + std::to_string(cv.lcomp));
        return st.finish(Outcome::TrivialNo);
    }

    std::vector<int> all(cv.count());
    for (int c = 0; c < cv.count(); ++c) all[c] = c;
    const std::vector<int> order = detail::sorted_component_ids(cv, all);
    const int r = static_cast<int>(order.size());
    int s = 0;
    long long prefix = 0;
    for (int i = 0; i < r; ++i) {
        prefix += cv.sizes[order[i]];
        if (prefix > 4 * k) break;
        s = i + 1;
    }
    int hr_vertex = cv.members[order.back()].front();
    if (s + 1 < r) {
        std::vector<int> gone;
        for (int i = s; i <= r - 2; ++i)
            gone.insert(gone.end(), cv.members[order[i]].begin(), cv.members[order[i]].end());
        int before = 0;
        for (int v : gone)
            if (v < hr_vertex) ++before;
        st.drop(gone);
        hr_vertex -= before;
        st.note("bcc.drop-middle", "s=" + std::to_string(s) + ", deleted " + std::to_string(r - 1 - s) + " components");
    }

    const ComponentView& cv2 = st.g.components();
    const int lcomp = cv2.lcomp;
    if (lcomp <= 4 * k || st.eta <= 4 * k) {
        st.note("bcc.small-return", "lcomp = " + std::to_string(lcomp) + ", eta = " + std::to_string(st.eta));
    } else {
        const long long eta_prime = 4 * k;
        const int n_keep = static_cast<int>(lcomp - (st.eta - eta_prime));
        const auto& hr_members = cv2.members[cv2.comp_of[hr_vertex]];
        if (static_cast<int>(hr_members.size()) != lcomp) throw std::logic_error("H_r is not the largest component");
        std::vector<int> gone = detail::trim_highest(hr_members, n_keep);
        st.drop(gone);
        st.note("bcc.trim", "eta " + std::to_string(st.eta) + " -> " + std::to_string(eta_prime) + ", H_r " +
                                std::to_string(lcomp) + " -> " + std::to_string(n_keep));
        st.eta = static_cast<int>(eta_prime);
    }
    if (st.g.n() > 10 * k) throw std::logic_error("BCC kernel exceeds 10k vertices");
    return st.finish(Outcome::Reduced);
}

}  // namespace balclust
