#include "balclust/partition.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "balclust/cccd.hpp"

namespace balclust {

std::vector<Partition> enumerate_partitions(int l) {
    if (l < 1) throw std::invalid_argument("enumerate_partitions needs l >= 1");
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(l, l);
    return out;
}

const std::vector<Partition>& partitions_of(int l) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<Partition>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[l];
    if (!slot) slot = std::make_unique<std::vector<Partition>>(enumerate_partitions(l));
    return *slot;
}

long long spp(const Partition& x) {
    long long sum = 0, acc = 0;
    for (int v : x) {
        acc += static_cast<long long>(v) * sum;
        sum += v;
    }
    return acc;
}

int total(const Partition& x) {
    int s = 0;
    for (int v : x) s += v;
    return s;
}

Partition flatten(const NestedPartition& np) {
    Partition out;
    for (const auto& xi : np.inner) out.insert(out.end(), xi.begin(), xi.end());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool is_submultiset(const SizeMultiset& whole, const Partition& part) {
    std::map<int, int> c;
    for (int v : whole) ++c[v];
    for (int v : part)
        if (--c[v] < 0) return false;
    return true;
}

SizeMultiset multiset_minus(const SizeMultiset& a, const Partition& b) {
    std::map<int, int> c;
    for (int v : b) ++c[v];
    SizeMultiset out;
    for (int v : a) {
        auto it = c.find(v);
        if (it != c.end() && it->second > 0) --it->second;
        else out.push_back(v);
    }
    return out;
}

SizeMultiset multiset_plus(const SizeMultiset& a, const Partition& b) {
    SizeMultiset out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool multiset_balanced(const SizeMultiset& a, int eta) {
    if (a.empty()) return true;
    auto [lo, hi] = std::minmax_element(a.begin(), a.end());
    return *hi - *lo <= eta;
}

bool is_g_valid(const Partition& x_prime, const Graph& g) {
    return is_submultiset(g.components().size_multiset(), x_prime);
}

namespace {

void check_nested(const NestedPartition& np) {
    if (np.outer.size() != np.inner.size()) throw std::invalid_argument("nested partition arity mismatch");
    for (std::size_t i = 0; i < np.outer.size(); ++i) {
        if (np.outer[i] < 1) throw std::invalid_argument("non-positive part");
        for (int v : np.inner[i])
            if (v < 1) throw std::invalid_argument("non-positive inner part");
        if (total(np.inner[i]) != np.outer[i]) throw std::invalid_argument("inner partition total mismatch");
    }
}

// Picks components by size without reuse.
class ComponentPicker {
public:
    ComponentPicker(const ComponentView& cv, ChoicePolicy policy) : cv_(cv), policy_(policy), used_(cv.count(), 0) {}

    int take(int size) {
        int best = -1;
        for (int c = 0; c < cv_.count(); ++c) {
            if (used_[c] || cv_.sizes[c] != size) continue;
            if (best == -1) best = c;
            else if (policy_ == ChoicePolicy::LargestId) best = c;
            if (policy_ == ChoicePolicy::SmallestId) break;
        }
        if (best == -1) throw std::invalid_argument("partition is not valid for this graph");
        used_[best] = 1;
        return best;
    }

private:
    const ComponentView& cv_;
    ChoicePolicy policy_;
    std::vector<char> used_;
};

}  // namespace

PartitionEdit completion_wrt(const Graph& g, const NestedPartition& np, ChoicePolicy policy) {
    check_nested(np);
    if (!is_cluster_graph(g)) throw std::invalid_argument("completion_wrt needs a cluster graph");
    if (!is_g_valid(flatten(np), g)) throw std::invalid_argument("X' is not G-valid");
    const ComponentView& cv = g.components();
    ComponentPicker pick(cv, policy);
    PartitionEdit out;
    for (const auto& xi : np.inner) {
        std::vector<int> comps;
        for (int part : xi) comps.push_back(pick.take(part));
        for (std::size_t a = 0; a < comps.size(); ++a)
            for (std::size_t b = a + 1; b < comps.size(); ++b)
                for (int u : cv.members[comps[a]])
                    for (int v : cv.members[comps[b]]) out.edits.additions.insert(norm_pair(u, v));
        out.edge_count += spp(xi);
    }
    out.graph = add_edges(g, out.edits.additions);
    return out;
}

PartitionEdit deletion_wrt(const Graph& g, const NestedPartition& np, ChoicePolicy policy) {
    check_nested(np);
    if (!is_cluster_graph(g)) throw std::invalid_argument("deletion_wrt needs a cluster graph");
    if (!is_g_valid(np.outer, g)) throw std::invalid_argument("Y is not G-valid");
    const ComponentView& cv = g.components();
    ComponentPicker pick(cv, policy);
    PartitionEdit out;
    for (std::size_t j = 0; j < np.outer.size(); ++j) {
        const auto& members = cv.members[pick.take(np.outer[j])];
        std::vector<int> slice_of(members.size());
        std::size_t pos = 0;
        for (std::size_t p = 0; p < np.inner[j].size(); ++p)
            for (int c = 0; c < np.inner[j][p]; ++c) slice_of[pos++] = static_cast<int>(p);
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (slice_of[a] != slice_of[b]) out.edits.deletions.insert(norm_pair(members[a], members[b]));
        out.edge_count += spp(np.inner[j]);
    }
    out.graph = delete_edges(g, out.edits.deletions);
    return out;
}

bool for_each_nested(int l, long long budget, const SizeMultiset& avail, const NestedVisit& visit) {
    return for_each_nested(l, budget, avail, NestedAvail::Inner, visit);
}

bool for_each_nested(int l, long long budget, const SizeMultiset& avail, NestedAvail side, const NestedVisit& visit) {
    std::vector<int> cap(l + 1, 0), used(l + 1, 0);
    for (int v : avail)
        if (v <= l) ++cap[v];
    const bool inner_side = side == NestedAvail::Inner;
    for (const Partition& x : partitions_of(l)) {
        if (!inner_side && !is_submultiset(avail, x)) continue;
        const std::size_t t = x.size();
        NestedPartition np{x, std::vector<Partition>(t)};
        std::function<bool(std::size_t, std::size_t, long long)> rec = [&](std::size_t i, std::size_t prev,
                                                                              long long cost) -> bool {
            if (i == t) return visit(np, cost, flatten(np));
            const auto& choices = partitions_of(x[i]);
            const std::size_t start = (i > 0 && x[i - 1] == x[i]) ? prev : 0;
            for (std::size_t idx = start; idx < choices.size(); ++idx) {
                const Partition& xi = choices[idx];
                const long long c = spp(xi);
                if (cost + c > budget) continue;
                bool ok = true;
                std::size_t added = 0;
                if (inner_side) {
                    for (; added < xi.size(); ++added) {
                        if (++used[xi[added]] > cap[xi[added]]) {
                            ok = false;
                            ++added;
                            break;
                        }
                    }
                }
                if (ok) {
                    np.inner[i] = xi;
                    if (rec(i + 1, idx, cost + c)) {
                        for (std::size_t a = 0; a < added; ++a) --used[xi[a]];
                        return true;
                    }
                }
                for (std::size_t a = 0; a < added; ++a) --used[xi[a]];
            }
            return false;
        };
        if (rec(0, 0, 0)) return true;
    }
    return false;
}

namespace {

long long clamp_budget(const Graph& g, int k) {
    const long long pairs = static_cast<long long>(g.n()) * (g.n() - 1) / 2;
    return std::min<long long>(k, pairs);
}

}  // namespace

Answer algo_bcc(const Instance& inst) {
    const Graph& g = inst.graph;
    if (!is_cluster_graph(g)) throw std::invalid_argument("algo_bcc needs a cluster graph");
    if (is_eta_balanced(g, inst.eta)) return {true, {}};
    if (inst.k <= 0) return {false, {}};
    const long long k = clamp_budget(g, inst.k);
    const SizeMultiset cs = g.components().size_multiset();
    Answer ans;
    for (long long l = 2; l <= std::min<long long>(2 * k, g.n()) && !ans.yes; ++l) {
        for_each_nested(static_cast<int>(l), k, cs, [&](const NestedPartition& np, long long, const Partition& flat) {
            if (!multiset_balanced(multiset_plus(multiset_minus(cs, flat), np.outer), inst.eta)) return false;
            ans.yes = true;
            ans.edits = completion_wrt(g, np).edits;
            return true;
        });
    }
    return ans;
}

namespace {

struct BceMemo {
    std::map<std::pair<SizeMultiset, int>, bool> no;  // (CS, k) known to be a no-instance
};

Answer bce_cluster(const Graph& g, int k_in, int eta, BceMemo& memo) {
    const SizeMultiset cs = g.components().size_multiset();
    const int k = static_cast<int>(clamp_budget(g, k_in));
    if (memo.no.count({cs, k})) return {false, {}};

    Answer a = algo_bcc(Instance{g, k, eta, Variant::BCC});
    if (a.yes) return a;
    a = solve_bcd(Instance{g, k, eta, Variant::BCD});
    if (a.yes) return a;
    if (k <= 0) {
        memo.no[{cs, k}] = true;
        return {false, {}};
    }

    std::map<std::pair<SizeMultiset, long long>, bool> inner_no;
    Answer ans;
    const int lmax = std::min(2 * k, g.n());
    for (int l1 = 2; l1 <= lmax && !ans.yes; ++l1) {
        // Y is split, so Y (not its pieces) must be present in CS.
        for_each_nested(l1, k, cs, NestedAvail::Outer, [&](const NestedPartition& ynp, long long c1, const Partition& y_flat) {
            const SizeMultiset cs1 = multiset_plus(multiset_minus(cs, ynp.outer), y_flat);
            const long long left = k - c1;
            if (inner_no.count({cs1, left})) return false;
            bool found = false;
            for (int l2 = 2; l2 <= lmax && !found; ++l2) {
                found = for_each_nested(l2, left, cs1, [&](const NestedPartition& xnp, long long, const Partition& flat) {
                    if (!multiset_balanced(multiset_plus(multiset_minus(cs1, flat), xnp.outer), eta)) return false;
                    const PartitionEdit del = deletion_wrt(g, ynp);
                    const PartitionEdit comp = completion_wrt(del.graph, xnp);
                    ans.yes = true;
                    ans.edits = edit_diff(g, comp.graph);
                    return true;
                });
            }
            if (!found) inner_no[{cs1, left}] = true;
            return found;
        });
    }
    if (!ans.yes) memo.no[{cs, k}] = true;
    return ans;
}

EditSet compose(const Graph& g, const std::set<Pair>& path, const EditSet& leaf) {
    // Both are toggles; the net toggle set against g is their symmetric difference.
    std::set<Pair> toggles = path;
    for (const auto& p : leaf.additions)
        if (!toggles.erase(p)) toggles.insert(p);
    for (const auto& p : leaf.deletions)
        if (!toggles.erase(p)) toggles.insert(p);
    EditSet out;
    for (const auto& p : toggles) {
        if (g.has_edge(p.first, p.second)) out.deletions.insert(p);
        else out.additions.insert(p);
    }
    return out;
}

Answer branch(const Graph& g, int k, const ClusterLeaf& leaf, std::set<Pair>& path, const Graph& root) {
    auto p3 = find_induced_p3(g);
    if (!p3) {
        Answer a = leaf(g, k);
        if (a.yes) a.edits = compose(root, path, a.edits);
        return a;
    }
    if (k <= 0) return {false, {}};
    const Pair uv = norm_pair(p3->u, p3->v), vw = norm_pair(p3->v, p3->w), uw = norm_pair(p3->u, p3->w);
    for (Pair p : {uv, vw, uw}) {
        Graph h = g;
        if (p == uw) h.add_edge(p.first, p.second);
        else h.remove_edge(p.first, p.second);
        const bool fresh = !path.erase(p);
        if (fresh) path.insert(p);
        Answer a = branch(h, k - 1, leaf, path, root);
        if (fresh) path.erase(p);
        else path.insert(p);
        if (a.yes) return a;
    }
    return {false, {}};
}

}  // namespace

Answer algo_bce_c(const Instance& inst) {
    if (!is_cluster_graph(inst.graph)) throw std::invalid_argument("algo_bce_c needs a cluster graph");
    BceMemo memo;
    return bce_cluster(inst.graph, inst.k, inst.eta, memo);
}

Answer p3_branching(const Instance& inst, const ClusterLeaf& leaf) {
    if (inst.k < 0) return {false, {}};
    std::set<Pair> path;
    return branch(inst.graph, inst.k, leaf, path, inst.graph);
}

Answer solve_bce(const Instance& inst) {
    BceMemo memo;
    return p3_branching(inst, [&](const Graph& g, int k) { return bce_cluster(g, k, inst.eta, memo); });
}

}  // namespace balclust
