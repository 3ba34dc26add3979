#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "balclust/binb.hpp"
#include "balclust/cccd.hpp"

namespace balclust {

namespace {

class AnnoCache {
public:
    const BinBResult& get(int k, const Partition& x, const Partition& x_prime) {
        auto key = std::make_tuple(k, x, x_prime);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            // Bins are filled exactly, so any feasible map costs sum x^2 - sum x'^2.
            long long fixed = 0;
            for (int v : x) fixed += static_cast<long long>(v) * v;
            for (int v : x_prime) fixed -= static_cast<long long>(v) * v;
            it = cache_.emplace(key, fixed > 2LL * k ? BinBResult{} : solve_annocm(k, x, x_prime)).first;
        }
        return it->second;
    }

private:
    std::map<std::tuple<int, Partition, Partition>, BinBResult> cache_;
};

// Components of each requested size, smallest id first, without reuse.
std::vector<int> pick_components(const ComponentView& cv, const Partition& sizes) {
    std::vector<char> used(cv.count(), 0);
    std::vector<int> out;
    for (int s : sizes) {
        int found = -1;
        for (int c = 0; c < cv.count() && found < 0; ++c)
            if (!used[c] && cv.sizes[c] == s) found = c;
        if (found < 0) throw std::logic_error("partition not valid for graph");
        used[found] = 1;
        out.push_back(found);
    }
    return out;
}

// Merge the components picked for the balls, bin by bin.
Graph merge_by_assignment(const Graph& g, const Partition& x_prime, const std::vector<int>& bin_of, std::size_t bins) {
    const ComponentView& cv = g.components();
    const std::vector<int> comps = pick_components(cv, x_prime);
    std::set<Pair> add;
    for (std::size_t j = 0; j < bins; ++j) {
        std::vector<int> in_bin;
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (bin_of[i] == static_cast<int>(j)) in_bin.push_back(comps[i]);
        for (std::size_t a = 0; a < in_bin.size(); ++a)
            for (std::size_t b = a + 1; b < in_bin.size(); ++b)
                for (int u : cv.members[in_bin[a]])
                    for (int v : cv.members[in_bin[b]]) add.insert(norm_pair(u, v));
    }
    return add_edges(g, add);
}

// Split the components picked for the bins Y into runs given by the balls Y'.
Graph split_by_assignment(const Graph& g, const Partition& y, const Partition& y_prime, const std::vector<int>& bin_of) {
    const ComponentView& cv = g.components();
    const std::vector<int> comps = pick_components(cv, y);
    std::set<Pair> del;
    for (std::size_t j = 0; j < y.size(); ++j) {
        const auto& members = cv.members[comps[j]];
        std::vector<int> run(members.size(), -1);
        std::size_t pos = 0;
        for (std::size_t i = 0; i < y_prime.size(); ++i)
            if (bin_of[i] == static_cast<int>(j))
                for (int c = 0; c < y_prime[i]; ++c) run[pos++] = static_cast<int>(i);
        if (pos != members.size()) throw std::logic_error("bin not filled exactly");
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (run[a] != run[b]) del.insert(norm_pair(members[a], members[b]));
    }
    return delete_edges(g, del);
}

int clamp_k(const Graph& g, int k) {
    const long long pairs = static_cast<long long>(g.n()) * (g.n() - 1) / 2;
    return static_cast<int>(std::min<long long>(k, pairs));
}

struct XChoice {
    Partition x, x_prime;
    std::vector<int> bin_of;
};

// Steps 4.x of the fast completion algorithm on a size multiset.
std::optional<XChoice> fast_completion_search(const SizeMultiset& cs, int k, int eta, AnnoCache& cache) {
    int n = 0;
    for (int v : cs) n += v;
    for (int l = 2; l <= std::min(2 * k, n); ++l)
        for (const Partition& x : partitions_of(l))
            for (const Partition& xp : partitions_of(l)) {
                if (!is_submultiset(cs, xp)) continue;
                if (!multiset_balanced(multiset_plus(multiset_minus(cs, xp), x), eta)) continue;
                const BinBResult& r = cache.get(k, x, xp);
                if (r.yes) return XChoice{x, xp, r.bin_of};
            }
    return std::nullopt;
}

Answer fast_bcc_core(const Graph& g, int k_in, int eta, AnnoCache& cache) {
    if (!is_cluster_graph(g)) throw std::invalid_argument("fast_algo_bcc needs a cluster graph");
    if (is_eta_balanced(g, eta)) return {true, {}};
    if (k_in <= 0) return {false, {}};
    const int k = clamp_k(g, k_in);
    auto hit = fast_completion_search(g.components().size_multiset(), k, eta, cache);
    if (!hit) return {false, {}};
    Graph merged = merge_by_assignment(g, hit->x_prime, hit->bin_of, hit->x.size());
    return {true, edit_diff(g, merged)};
}

struct FastBceMemo {
    AnnoCache cache;
    std::map<std::pair<SizeMultiset, int>, bool> no;
    std::map<std::pair<SizeMultiset, int>, std::optional<XChoice>> inner;
};

Answer fast_bce_cluster(const Graph& g, int k_in, int eta, FastBceMemo& memo) {
    const int k = clamp_k(g, k_in);
    const SizeMultiset cs = g.components().size_multiset();
    if (memo.no.count({cs, k})) return {false, {}};
    Answer a = fast_bcc_core(g, k, eta, memo.cache);
    if (a.yes) return a;
    a = solve_bcd(Instance{g, k, eta, Variant::BCD});
    if (a.yes) return a;
    if (k <= 0) {
        memo.no[{cs, k}] = true;
        return {false, {}};
    }
    const int n = g.n();
    for (int k1 = 1; k1 <= k; ++k1)
        for (int l1 = 2; l1 <= std::min(2 * k1, n); ++l1)
            for (const Partition& y : partitions_of(l1)) {
                if (!is_submultiset(cs, y)) continue;
                for (const Partition& yp : partitions_of(l1)) {
                    const BinBResult& ry = memo.cache.get(k1, y, yp);
                    if (!ry.yes) continue;
                    const SizeMultiset cs1 = multiset_plus(multiset_minus(cs, y), yp);
                    for (int k2 = 1; k1 + k2 <= k; ++k2) {
                        auto key = std::make_pair(cs1, k2);
                        auto it = memo.inner.find(key);
                        if (it == memo.inner.end())
                            it = memo.inner.emplace(key, fast_completion_search(cs1, k2, eta, memo.cache)).first;
                        if (!it->second) continue;
                        const XChoice& xc = *it->second;
                        Graph g1 = split_by_assignment(g, y, yp, ry.bin_of);
                        Graph g2 = merge_by_assignment(g1, xc.x_prime, xc.bin_of, xc.x.size());
                        return {true, edit_diff(g, g2)};
                    }
                }
            }
    memo.no[{cs, k}] = true;
    return {false, {}};
}

}  // namespace

Answer fast_algo_bcc(const Instance& inst) {
    AnnoCache cache;
    return fast_bcc_core(inst.graph, inst.k, inst.eta, cache);
}

Answer fast_algo_bce_c(const Instance& inst) {
    if (!is_cluster_graph(inst.graph)) throw std::invalid_argument("fast_algo_bce_c needs a cluster graph");
    FastBceMemo memo;
    return fast_bce_cluster(inst.graph, inst.k, inst.eta, memo);
}

Answer fast_algo_bce(const Instance& inst) {
    FastBceMemo memo;
    return p3_branching(inst, [&](const Graph& g, int k) { return fast_bce_cluster(g, k, inst.eta, memo); });
}

}  // namespace balclust
