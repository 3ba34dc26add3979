#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "kernel_internal.hpp"

namespace balclust {

using detail::KernelState;

long long ramsey_bound(long long a, long long b, long long c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("ramsey_bound needs a, b, c >= 1");
    return (a - 1) * (b - 1) + (c - 1) * ((b - 1) * (b - 2) / 2) + 1;
}

bool is_c_closed(const Graph& g, int c) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) continue;
            int common = 0;
            for (int i = 0; i < g.words(); ++i) common += std::popcount(g.row(u)[i] & g.row(v)[i]);
            if (common > c - 1) return false;
        }
    return true;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct CliqueSearch {
    std::vector<Bits> adj;
    int target = 0;
    std::vector<int> chosen;

    static int count(const Bits& b) {
        int c = 0;
        for (auto w : b) c += std::popcount(w);
        return c;
    }

    bool run(Bits cand) {
        if (static_cast<int>(chosen.size()) >= target) return true;
        int left = count(cand);
        for (std::size_t i = 0; i < cand.size(); ++i) {
            while (cand[i]) {
                if (static_cast<int>(chosen.size()) + left < target) return false;
                const int v = static_cast<int>(i * 64) + std::countr_zero(cand[i]);
                cand[i] &= cand[i] - 1;
                --left;
                Bits next(cand.size());
                for (std::size_t j = 0; j < cand.size(); ++j) next[j] = cand[j] & adj[v][j];
                chosen.push_back(v);
                if (run(next)) return true;
                chosen.pop_back();
            }
        }
        return static_cast<int>(chosen.size()) >= target;
    }
};

std::vector<Bits> adjacency(const Graph& g, bool complement) {
    const int n = g.n();
    const int w = (n + 63) / 64;
    std::vector<Bits> adj(n, Bits(w, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.has_edge(u, v) != complement) adj[u][v >> 6] |= std::uint64_t{1} << (v & 63);
    return adj;
}

std::optional<std::vector<int>> find_clique(const Graph& g, int size, bool complement) {
    CliqueSearch cs;
    cs.adj = adjacency(g, complement);
    cs.target = size;
    Bits all((g.n() + 63) / 64, 0);
    for (int v = 0; v < g.n(); ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    if (!cs.run(all)) return std::nullopt;
    return cs.chosen;
}

}  // namespace

CliqueOrIndependent clique_or_independent_set(const Graph& g, int a, int b, int c) {
    if (g.n() < ramsey_bound(a, b, c)) throw std::invalid_argument("graph smaller than R_c(a,b)");
    if (!is_c_closed(g, c)) throw std::invalid_argument("graph is not c-closed");

    if (auto q = find_clique(g, a, false)) {
        std::vector<int> clique = *q;
        // Grow to an inclusion-maximal clique, lowest ids first.
        for (int v = 0; v < g.n(); ++v) {
            if (std::find(clique.begin(), clique.end(), v) != clique.end()) continue;
            bool all = true;
            for (int x : clique) all = all && g.has_edge(v, x);
            if (all) clique.push_back(v);
        }
        std::sort(clique.begin(), clique.end());
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                if (!g.has_edge(clique[i], clique[j])) throw std::logic_error("clique witness broken");
        return {true, clique};
    }
    if (auto s = find_clique(g, b, true)) {
        std::vector<int> ind = *s;
        std::sort(ind.begin(), ind.end());
        for (std::size_t i = 0; i < ind.size(); ++i)
            for (std::size_t j = i + 1; j < ind.size(); ++j)
                if (g.has_edge(ind[i], ind[j])) throw std::logic_error("independent set witness broken");
        return {false, ind};
    }
    throw std::logic_error("neither a clique nor an independent set found above the Ramsey bound");
}

long long bcd_kernel_vertex_bound(int k) {
    const long long kk = k;
    const long long r = ramsey_bound(kk + 2, kk + 2, kk + 1);
    return 3 * r + kk * (r - 1) + (kk + 1) * (kk + 1) * (kk + 2) / 2 + r;
}

namespace {

bool component_is_clique(const Graph& g, const ComponentView& cv, int c) {
    for (int v : cv.members[c])
        if (g.degree(v) != cv.sizes[c] - 1) return false;
    return true;
}

std::optional<KernelResult> bcd_round(KernelState& st, bool& changed) {
    changed = false;
    const ComponentView cv = st.g.components();

    if (is_cluster_graph(st.g) && is_eta_balanced(st.g, st.eta)) {
        st.note("bcd.trivial-yes", "eta-balanced cluster graph");
        return st.finish(Outcome::TrivialYes);
    }
    if (st.eta > cv.lcomp) {
        st.note("bcd.eta-cap", "eta " + std::to_string(st.eta) + " -> " + std::to_string(cv.lcomp));
        st.eta = cv.lcomp;
    }

    std::vector<int> non_clique;
    for (int c = 0; c < cv.count(); ++c)
        if (!component_is_clique(st.g, cv, c)) non_clique.push_back(c);
    if (static_cast<int>(non_clique.size()) >= st.k + 1) {
        st.note("bcd.non-clique-count", std::to_string(non_clique.size()) + " non-clique components");
        return st.finish(Outcome::TrivialNo);
    }

    for (int u = 0; u < st.g.n(); ++u)
        for (int v = u + 1; v < st.g.n(); ++v) {
            if (st.g.has_edge(u, v)) continue;
            int common = 0;
            for (int i = 0; i < st.g.words(); ++i) common += std::popcount(st.g.row(u)[i] & st.g.row(v)[i]);
            if (common >= st.k + 1) {
                st.note("bcd.common-neighbours", std::to_string(u) + "," + std::to_string(v) + " share " +
                                                     std::to_string(common));
                return st.finish(Outcome::TrivialNo);
            }
        }

    const long long r = ramsey_bound(st.k + 2, st.k + 2, st.k + 1);
    for (int c : non_clique) {
        if (cv.sizes[c] < r) continue;
        const auto& members = cv.members[c];
        CliqueOrIndependent w = clique_or_independent_set(st.g.induced(members), st.k + 2, st.k + 2, st.k + 1);
        if (!w.is_clique) {
            st.note("bcd.independent-set", "independent set of size " + std::to_string(st.k + 2));
            return st.finish(Outcome::TrivialNo);
        }
        std::vector<char> in_q(st.g.n(), 0);
        for (int x : w.vertices) in_q[members[x]] = 1;
        std::set<Pair> cut;
        for (int x : w.vertices)
            for (int y : st.g.neighbors(members[x]))
                if (!in_q[y]) cut.insert(norm_pair(members[x], y));
        const int ell = static_cast<int>(cut.size());
        if (ell > st.k) {
            st.note("bcd.clique-cut", "clique of size " + std::to_string(w.vertices.size()) + " has " +
                                          std::to_string(ell) + " boundary edges > k");
            return st.finish(Outcome::TrivialNo);
        }
        st.g = delete_edges(st.g, cut);
        st.k -= ell;
        st.note("bcd.clique-cut", "isolated clique of size " + std::to_string(w.vertices.size()) + ", k -= " +
                                      std::to_string(ell));
        changed = true;
        return std::nullopt;
    }

    std::vector<std::vector<int>> by_size(st.k + 2);
    std::vector<int> unmanageable;
    for (int c = 0; c < cv.count(); ++c) {
        if (!component_is_clique(st.g, cv, c)) continue;
        if (cv.sizes[c] <= st.k + 1) by_size[cv.sizes[c]].push_back(c);
        else unmanageable.push_back(c);
    }
    for (int j = 1; j <= st.k + 1; ++j) {
        if (static_cast<int>(by_size[j].size()) >= st.k + 2) {
            // Delete the copy with the largest smallest id.
            st.drop(cv.members[by_size[j].back()]);
            st.note("bcd.manageable-dedup", "deleted a clique component of size " + std::to_string(j));
            changed = true;
            return std::nullopt;
        }
    }

    if (unmanageable.empty()) {
        st.note("bcd.no-unmanageable", "no clique component of size >= k+2");
        return st.finish(Outcome::Reduced);
    }
    return detail::unmanageable_pipeline(st, unmanageable, r, 2 * r, "bcd");
}

}  // namespace

KernelResult kernelize_bcd(const Instance& inst) {
    KernelState st(inst);
    st.variant = Variant::BCD;
    if (st.k < 0) {
        st.note("bcd.negative-k", "k < 0");
        return st.finish(Outcome::TrivialNo);
    }
    while (true) {
        bool changed = false;
        std::optional<KernelResult> r = bcd_round(st, changed);
        if (changed) continue;
        if (!r) throw std::logic_error("BCD round neither changed nor decided");
        if (r->outcome == Outcome::Reduced && r->instance.graph.n() > bcd_kernel_vertex_bound(r->instance.k))
            throw std::logic_error("BCD kernel exceeds its vertex bound");
        return *r;
    }
}

}  // namespace balclust
