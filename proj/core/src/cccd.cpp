#include "balclust/cccd.hpp"

#include <stdexcept>

namespace balclust {

std::optional<CliqueSplit> fill_clique(int n, Window w, int t) {
    if (t < 1 || static_cast<long long>(t) * w.gamma1 > n || static_cast<long long>(t) * w.gamma2 < n)
        return std::nullopt;
    CliqueSplit s;
    s.t = t;
    s.sizes.assign(t, 0);
    for (int v = 0; v < n; ++v) {
        int target = -1;
        for (int i = 0; i < t && target < 0; ++i)
            if (s.sizes[i] < w.gamma1) target = i;
        for (int i = 0; i < t && target < 0; ++i)
            if (s.sizes[i] < w.gamma2) target = i;
        if (target < 0) throw std::logic_error("fill policy ran out of room");
        ++s.sizes[target];
    }
    long long sum = 0;
    for (int x : s.sizes) {
        s.cost += sum * x;
        sum += x;
    }
    return s;
}

std::vector<std::pair<int, long long>> cccd_clique_profile(int n, Window w) {
    std::vector<std::pair<int, long long>> out;
    if (n < 1 || w.gamma1 < 1 || w.gamma1 > w.gamma2) return out;
    const int lo = (n + w.gamma2 - 1) / w.gamma2;
    const int hi = n / w.gamma1;
    for (int t = lo; t <= hi; ++t)
        if (auto s = fill_clique(n, w, t)) out.emplace_back(t, s->cost);
    return out;
}

std::optional<CliqueSplit> cccd_on_clique(int n, Window w, bool full_scan) {
    if (n < 1) throw std::invalid_argument("cccd_on_clique needs n >= 1");
    if (w.gamma1 < 1 || w.gamma1 > w.gamma2) throw std::invalid_argument("bad window");
    const int lo = (n + w.gamma2 - 1) / w.gamma2;
    const int hi = n / w.gamma1;
    if (lo > hi) return std::nullopt;
    auto best = fill_clique(n, w, lo);
    if (full_scan) {
        for (auto [t, cost] : cccd_clique_profile(n, w))
            if (cost < best->cost) throw std::logic_error("t = ceil(n/gamma2) is not optimal");
    }
    return best;
}

Answer cccd_on_cluster(const Graph& g, Window w, int k) {
    if (!is_cluster_graph(g)) throw std::invalid_argument("cccd_on_cluster needs a cluster graph");
    const ComponentView& cv = g.components();
    long long spent = 0;
    Answer ans;
    for (int c = 0; c < cv.count(); ++c) {
        auto split = cccd_on_clique(cv.sizes[c], w);
        if (!split) return {false, {}};
        spent += split->cost;
        if (spent > k) return {false, {}};
        // Slice the sorted members into consecutive runs.
        const auto& members = cv.members[c];
        std::vector<int> part(members.size());
        std::size_t pos = 0;
        for (int i = 0; i < split->t; ++i)
            for (int j = 0; j < split->sizes[i]; ++j) part[pos++] = i;
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (part[a] != part[b]) ans.edits.deletions.insert(norm_pair(members[a], members[b]));
    }
    ans.yes = true;
    return ans;
}

namespace {

Answer cccd_branch(Graph& g, Window w, int k, std::vector<Pair>& path) {
    auto p3 = find_induced_p3(g);
    if (!p3) {
        Answer a = cccd_on_cluster(g, w, k);
        if (a.yes)
            for (const auto& p : path) a.edits.deletions.insert(p);
        return a;
    }
    if (k <= 0) return {false, {}};
    for (Pair p : {norm_pair(p3->u, p3->v), norm_pair(p3->v, p3->w)}) {
        g.remove_edge(p.first, p.second);
        path.push_back(p);
        Answer a = cccd_branch(g, w, k - 1, path);
        path.pop_back();
        g.add_edge(p.first, p.second);
        if (a.yes) return a;
    }
    return {false, {}};
}

}  // namespace

Answer algo_cccd(const Graph& g, Window w, int k) {
    if (k < 0) return {false, {}};
    Graph h = g;
    std::vector<Pair> path;
    return cccd_branch(h, w, k, path);
}

Answer solve_bcd(const Instance& inst) {
    const Graph& g = inst.graph;
    if (inst.k < 0) return {false, {}};
    if (g.n() == 0) return {true, {}};
    const int n = g.n();
    for (int g1 = 1; g1 <= n; ++g1)
        for (int g2 = g1; g2 <= n && static_cast<long long>(g2) - g1 <= inst.eta; ++g2) {
            Answer a = algo_cccd(g, Window{g1, g2}, inst.k);
            if (a.yes) return a;
        }
    return {false, {}};
}

}  // namespace balclust
