#include "balclust/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace balclust {

namespace {

long long env_number(const char* name, long long fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    const long long v = std::strtoll(raw, &end, 10);
    if (*end != '\0' || v < 0) throw std::invalid_argument(std::string("bad value for ") + name);
    return v;
}

// Cluster iff every edge joins vertices with equal closed neighbourhoods.
bool rows_cluster_balanced(const std::vector<std::uint64_t>& rows, int n, int eta) {
    int lo = n + 1, hi = 0;
    for (int v = 0; v < n; ++v) {
        const std::uint64_t closed = rows[v] | (std::uint64_t{1} << v);
        for (std::uint64_t rest = rows[v]; rest; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            if ((rows[u] | (std::uint64_t{1} << u)) != closed) return false;
        }
        const int size = std::popcount(closed);
        lo = std::min(lo, size);
        hi = std::max(hi, size);
    }
    return n == 0 || hi - lo <= eta;
}

}  // namespace

OracleCaps oracle_caps() {
    OracleCaps c;
    c.max_n = static_cast<int>(std::min<long long>(env_number("BALCLUST_ORACLE_MAX_N", c.max_n), 64));
    c.max_maps = static_cast<std::uint64_t>(env_number("BALCLUST_ORACLE_MAX_MAPS", static_cast<long long>(c.max_maps)));
    return c;
}

bool oracle_fits(const Instance& inst, const OracleCaps& caps) {
    return inst.graph.n() <= std::min(caps.max_n, 64);
}

Answer oracle_solve(const Instance& inst, const OracleCaps& caps) {
    const Graph& g = inst.graph;
    const int n = g.n();
    if (!oracle_fits(inst, caps))
        throw std::invalid_argument("oracle cap exceeded: n = " + std::to_string(n));
    if (inst.k < 0) return {};

    std::vector<std::uint64_t> rows(n, 0);
    for (int v = 0; v < n; ++v)
        if (g.words() > 0) rows[v] = g.row(v)[0];

    std::vector<Pair> universe;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const bool e = g.has_edge(u, v);
            if (inst.variant == Variant::BCE || (inst.variant == Variant::BCC) != e) universe.push_back({u, v});
        }
    const int m = static_cast<int>(universe.size());
    const int kmax = std::min(inst.k, m);

    auto toggle = [&](int idx) {
        const auto [u, v] = universe[idx];
        rows[u] ^= std::uint64_t{1} << v;
        rows[v] ^= std::uint64_t{1} << u;
    };

    std::vector<int> pick;
    for (int size = 0; size <= kmax; ++size) {
        // Combinations of `size` indices in lexicographic order, toggled in place.
        pick.resize(size);
        for (int i = 0; i < size; ++i) {
            pick[i] = i;
            toggle(i);
        }
        while (true) {
            if (rows_cluster_balanced(rows, n, inst.eta)) {
                Answer a{true, {}};
                for (int idx : pick) {
                    if (g.has_edge(universe[idx].first, universe[idx].second))
                        a.edits.deletions.insert(universe[idx]);
                    else
                        a.edits.additions.insert(universe[idx]);
                }
                return a;
            }
            int i = size - 1;
            while (i >= 0 && pick[i] == m - size + i) --i;
            if (i < 0) break;
            toggle(pick[i]);
            ++pick[i];
            toggle(pick[i]);
            for (int j = i + 1; j < size; ++j) {
                toggle(pick[j]);
                pick[j] = pick[j - 1] + 1;
                toggle(pick[j]);
            }
        }
        for (int idx : pick) toggle(idx);
    }
    return {};
}

BinBResult oracle_binb(const BinBInstance& inst, const OracleCaps& caps) {
    const std::size_t s = inst.balls.size(), t = inst.bins.size();
    if (t == 0 || s == 0) throw std::invalid_argument("B-in-B needs at least one ball and one bin");
    std::uint64_t maps = 1;
    for (std::size_t i = 0; i < s; ++i) {
        if (maps > caps.max_maps / t) throw std::invalid_argument("oracle_binb cap exceeded");
        maps *= t;
    }
    if (maps > caps.max_maps) throw std::invalid_argument("oracle_binb cap exceeded");

    std::vector<int> bin_of(s, 0);
    std::vector<long long> load(t);
    while (true) {
        std::fill(load.begin(), load.end(), 0);
        long long cost = 0;
        for (std::size_t i = 0; i < s; ++i) {
            load[bin_of[i]] += inst.balls[i];
            cost += inst.cost[i][bin_of[i]];
        }
        bool ok = cost <= inst.budget;
        for (std::size_t j = 0; ok && j < t; ++j) ok = load[j] <= inst.bins[j];
        if (ok) return {true, bin_of};
        std::size_t i = s;
        while (i > 0 && bin_of[i - 1] == static_cast<int>(t) - 1) bin_of[--i] = 0;
        if (i == 0) break;
        ++bin_of[i - 1];
    }
    return {};
}

}  // namespace balclust
