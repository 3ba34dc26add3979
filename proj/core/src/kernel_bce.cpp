#include <algorithm>
#include <bit>
#include <stdexcept>

#include "kernel_internal.hpp"

namespace balclust {

using detail::KernelState;

int p3_count(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("p3_count on a loop");
    int c = 0;
    const bool edge = g.has_edge(u, v);
    for (int i = 0; i < g.words(); ++i) {
        std::uint64_t x = edge ? (g.row(u)[i] ^ g.row(v)[i]) : (g.row(u)[i] & g.row(v)[i]);
        if (edge) {
            if (i == (u >> 6)) x &= ~(std::uint64_t{1} << (u & 63));
            if (i == (v >> 6)) x &= ~(std::uint64_t{1} << (v & 63));
        }
        c += std::popcount(x);
    }
    return c;
}

SaturationResult p3_saturation(const Graph& g, int k) {
    SaturationResult res;
    res.graph = g;
    res.k = k;
    while (true) {
        bool fired = false;
        for (int u = 0; u < res.graph.n() && !fired; ++u)
            for (int v = u + 1; v < res.graph.n() && !fired; ++v) {
                const int c = p3_count(res.graph, u, v);
                if (c < res.k + 1) continue;
                const bool edge = res.graph.has_edge(u, v);
                if (res.k == 0) {
                    res.no = true;
                    res.trace.push_back({edge ? "bce.p3-edge" : "bce.p3-non-edge",
                                         "pair " + std::to_string(u) + "," + std::to_string(v) + " forced with k = 0"});
                    return res;
                }
                if (edge) res.graph.remove_edge(u, v);
                else res.graph.add_edge(u, v);
                --res.k;
                res.trace.push_back({edge ? "bce.p3-edge" : "bce.p3-non-edge",
                                     (edge ? "deleted " : "added ") + std::to_string(u) + "," + std::to_string(v) +
                                         " (" + std::to_string(c) + " P3s), k = " + std::to_string(res.k)});
                fired = true;
            }
        if (!fired) return res;
    }
}

std::optional<std::vector<int>> find_modulator(const Graph& g, int k) {
    Graph h = g;
    std::vector<int> s;
    while (auto p = find_induced_p3(h)) {
        for (int x : {p->u, p->v, p->w}) {
            s.push_back(x);
            for (int y : h.neighbors(x)) h.remove_edge(x, y);
        }
        if (static_cast<long long>(s.size()) > 3LL * k) return std::nullopt;
    }
    std::sort(s.begin(), s.end());
    // One increasing-id pass suffices: being a cluster graph is hereditary.
    std::vector<char> in_s(g.n(), 0);
    for (int x : s) in_s[x] = 1;
    for (int x : s) {
        in_s[x] = 0;
        std::vector<int> keep;
        for (int v = 0; v < g.n(); ++v)
            if (!in_s[v]) keep.push_back(v);
        if (!is_cluster_graph(g.induced(keep))) in_s[x] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (in_s[v]) out.push_back(v);
    return out;
}

long long bce_kernel_vertex_bound(int k) {
    const long long t = 10LL * (2LL * k + 1) * (2LL * k + 1) * (2LL * k + 1);
    // outside the unmanageable components, plus a kept H_1, plus the trimmed H_r
    return t + t + 3 * t;
}

namespace {

std::optional<KernelResult> bce_round(KernelState& st, bool& changed) {
    changed = false;
    SaturationResult sat = p3_saturation(st.g, st.k);
    st.trace.insert(st.trace.end(), sat.trace.begin(), sat.trace.end());
    if (sat.no) return st.finish(Outcome::TrivialNo);
    if (sat.k != st.k) {
        st.g = sat.graph;
        st.k = sat.k;
    }

    if (is_cluster_graph(st.g) && is_eta_balanced(st.g, st.eta)) {
        st.note("bce.trivial-yes", "eta-balanced cluster graph");
        return st.finish(Outcome::TrivialYes);
    }
    const ComponentView cv = st.g.components();
    const int cap = std::max(cv.lcomp, st.k);
    if (st.eta > cap) {
        st.note("bce.eta-cap", "eta " + std::to_string(st.eta) + " -> " + std::to_string(cap));
        st.eta = cap;
    }

    auto mod = find_modulator(st.g, st.k);
    if (!mod) {
        st.note("bce.modulator", "more than 3k vertices needed");
        return st.finish(Outcome::TrivialNo);
    }
    const std::vector<int>& s = *mod;
    std::vector<char> in_s(st.g.n(), 0);
    for (int x : s) in_s[x] = 1;
    std::vector<int> rest;
    for (int v = 0; v < st.g.n(); ++v)
        if (!in_s[v]) rest.push_back(v);
    const Graph gs = st.g.induced(rest);
    const ComponentView cs = connected_components(gs);

    std::vector<char> visible(cs.count(), 0);
    for (int x : s) {
        std::set<int> seen;
        for (int y : st.g.neighbors(x)) {
            if (in_s[y]) continue;
            const int idx = static_cast<int>(std::lower_bound(rest.begin(), rest.end(), y) - rest.begin());
            seen.insert(cs.comp_of[idx]);
        }
        for (int c : seen) visible[c] = 1;
        if (static_cast<long long>(seen.size()) >= 2LL * st.k + 2) {
            st.note("bce.sees", "vertex " + std::to_string(x) + " sees " + std::to_string(seen.size()) + " components");
            return st.finish(Outcome::TrivialNo);
        }
    }

    // Invisible components of G - S are clique components of G.
    std::vector<std::vector<int>> by_size(st.k + 2);
    std::vector<int> unmanageable;
    for (int c = 0; c < cs.count(); ++c) {
        if (visible[c]) continue;
        const int g_comp = cv.comp_of[rest[cs.members[c].front()]];
        if (cs.sizes[c] <= st.k + 1) by_size[cs.sizes[c]].push_back(g_comp);
        else unmanageable.push_back(g_comp);
    }
    for (int j = 1; j <= st.k + 1; ++j) {
        if (static_cast<long long>(by_size[j].size()) >= 2LL * st.k + 2) {
            st.drop(cv.members[by_size[j].back()]);
            st.note("bce.manageable-dedup", "deleted a clique component of size " + std::to_string(j));
            changed = true;
            return std::nullopt;
        }
    }

    if (unmanageable.empty()) {
        st.note("bce.no-unmanageable", "no invisible component of size >= k+2");
        return st.finish(Outcome::Reduced);
    }
    const long long t = 10LL * (2LL * st.k + 1) * (2LL * st.k + 1) * (2LL * st.k + 1);
    return detail::unmanageable_pipeline(st, unmanageable, t, 2 * t, "bce");
}

}  // namespace

KernelResult kernelize_bce(const Instance& inst) {
    KernelState st(inst);
    st.variant = Variant::BCE;
    if (st.k < 0) {
        st.note("bce.negative-k", "k < 0");
        return st.finish(Outcome::TrivialNo);
    }
    while (true) {
        bool changed = false;
        std::optional<KernelResult> r = bce_round(st, changed);
        if (changed) continue;
        if (!r) throw std::logic_error("BCE round neither changed nor decided");
        if (r->outcome == Outcome::Reduced && r->instance.graph.n() > bce_kernel_vertex_bound(r->instance.k))
            throw std::logic_error("BCE kernel exceeds its vertex bound");
        return *r;
    }
}

}  // namespace balclust
