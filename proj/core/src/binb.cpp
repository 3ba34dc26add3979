#include "balclust/binb.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace balclust {

bool MaskPolynomial::contains(std::uint64_t e) const {
    return std::binary_search(terms.begin(), terms.end(), e);
}

MaskPolynomial make_poly(int width, std::vector<std::uint64_t> terms) {
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    return MaskPolynomial{width, std::move(terms)};
}

MaskPolynomial hamming_project(const MaskPolynomial& p, int i) {
    MaskPolynomial out{p.width, {}};
    for (auto e : p.terms)
        if (std::popcount(e) == i) out.terms.push_back(e);
    return out;
}

MaskPolynomial poly_multiply(const MaskPolynomial& a, const MaskPolynomial& b) {
    if (a.width != b.width) throw std::invalid_argument("poly_multiply on different widths");
    std::vector<std::uint64_t> terms;
    terms.reserve(a.terms.size() * b.terms.size());
    const std::uint64_t limit = std::uint64_t{1} << (a.width + 1);
    for (auto x : a.terms)
        for (auto y : b.terms) {
            const std::uint64_t e = x + y;
            if (e >= limit) throw std::logic_error("exponent overflow past the carry headroom");
            terms.push_back(e);
        }
    return make_poly(a.width, std::move(terms));
}

MaskPolynomial poly_union(const MaskPolynomial& a, const MaskPolynomial& b) {
    std::vector<std::uint64_t> terms;
    std::set_union(a.terms.begin(), a.terms.end(), b.terms.begin(), b.terms.end(), std::back_inserter(terms));
    return MaskPolynomial{std::max(a.width, b.width), std::move(terms)};
}

namespace {

void check_instance(const BinBInstance& inst) {
    const std::size_t s = inst.balls.size(), t = inst.bins.size();
    if (s < 1 || t < 1) throw std::invalid_argument("B-in-B needs at least one ball and one bin");
    if (s > 30) throw std::invalid_argument("B-in-B supports at most 30 balls");
    if (inst.cost.size() != s) throw std::invalid_argument("cost table has wrong row count");
    for (const auto& row : inst.cost)
        if (row.size() != t) throw std::invalid_argument("cost table has wrong column count");
    for (int b : inst.balls)
        if (b < 1) throw std::invalid_argument("ball sizes must be positive");
    for (int x : inst.bins)
        if (x < 1) throw std::invalid_argument("bin capacities must be positive");
}

}  // namespace

BinBTable::BinBTable(const BinBInstance& inst) : inst_(inst) {
    check_instance(inst_);
    s_ = static_cast<int>(inst_.balls.size());
    t_ = static_cast<int>(inst_.bins.size());
    if (inst_.budget < 0) {
        w_ = -1;
        return;
    }
    w_ = static_cast<int>(std::min<long long>(inst_.budget, std::numeric_limits<int>::max() / 4));
    const std::uint64_t full = (std::uint64_t{1} << s_) - 1;
    table_.assign(static_cast<std::size_t>(t_) * (s_ + 1) * (w_ + 1), MaskPolynomial{s_, {}});

    // A^=_{i,j,c}: subsets of i balls fitting bin j at cost exactly c. A_{i,j,q} is their union over c <= q.
    std::vector<std::vector<std::vector<std::vector<std::uint64_t>>>> exact(
        t_, std::vector<std::vector<std::vector<std::uint64_t>>>(s_ + 1, std::vector<std::vector<std::uint64_t>>(w_ + 1)));
    for (int j = 0; j < t_; ++j)
        for (std::uint64_t m = 0; m <= full; ++m) {
            if (volume(m) > static_cast<std::uint64_t>(inst_.bins[j])) continue;
            const long long c = cost_of(m, j);
            if (c > w_) continue;
            exact[j][std::popcount(m)][c].push_back(m);
        }

    auto at = [&](int i, int j, int q) -> MaskPolynomial& {
        return table_[(static_cast<std::size_t>(j - 1) * (s_ + 1) + i) * (w_ + 1) + q];
    };
    for (int i = 0; i <= s_; ++i)
        for (int q = 0; q <= w_; ++q) {
            std::vector<std::uint64_t> terms;
            for (int c = 0; c <= q; ++c) terms.insert(terms.end(), exact[0][i][c].begin(), exact[0][i][c].end());
            at(i, 1, q) = make_poly(s_, std::move(terms));
        }
    // P_{i,j,q} = R(H_i(sum_{i' <= i, q' <= q} A_{i',j,q'} P_{i-i',j-1,q-q'})).
    // A_{i',j,q'} grows with q' and P with q, so summing the exact-cost slices gives the same presence set.
    for (int j = 2; j <= t_; ++j)
        for (int i = 0; i <= s_; ++i)
            for (int q = 0; q <= w_; ++q) {
                std::vector<std::uint64_t> terms;
                for (int ip = 0; ip <= i; ++ip)
                    for (int c = 0; c <= q; ++c) {
                        const auto& a = exact[j - 1][ip][c];
                        const auto& p = at(i - ip, j - 1, q - c).terms;
                        if (a.empty() || p.empty()) continue;
                        for (auto x : a)
                            for (auto y : p) {
                                const std::uint64_t e = x + y;
                                if (std::popcount(e) == i) terms.push_back(e);
                            }
                    }
                at(i, j, q) = make_poly(s_, std::move(terms));
            }
}

std::uint64_t BinBTable::volume(std::uint64_t mask) const {
    std::uint64_t v = 0;
    for (int r = 0; r < s_; ++r)
        if (mask >> r & 1) v += inst_.balls[r];
    return v;
}

long long BinBTable::cost_of(std::uint64_t mask, int j) const {
    long long c = 0;
    for (int r = 0; r < s_; ++r)
        if (mask >> r & 1) c += inst_.cost[r][j];
    return c;
}

const MaskPolynomial& BinBTable::P(int i, int j, int q) const {
    if (w_ < 0 || i < 0 || i > s_ || j < 1 || j > t_ || q < 0 || q > w_) throw std::out_of_range("P index");
    return table_[(static_cast<std::size_t>(j - 1) * (s_ + 1) + i) * (w_ + 1) + q];
}

BinBResult BinBTable::result() const {
    BinBResult r;
    if (w_ < 0) return r;
    const std::uint64_t full = (std::uint64_t{1} << s_) - 1;
    if (!P(s_, t_, w_).contains(full)) return r;
    r.yes = true;
    r.bin_of.assign(s_, -1);
    std::uint64_t m = full;
    int i = s_, q = w_;
    for (int j = t_; j >= 2; --j) {
        bool stepped = false;
        // Walk all submasks a of m, the balls placed in bin j.
        for (std::uint64_t a = m;; a = (a - 1) & m) {
            const int pa = std::popcount(a);
            if (volume(a) <= static_cast<std::uint64_t>(inst_.bins[j - 1])) {
                const long long c = cost_of(a, j - 1);
                if (c <= q && P(i - pa, j - 1, q - static_cast<int>(c)).contains(m ^ a)) {
                    for (int b = 0; b < s_; ++b)
                        if (a >> b & 1) r.bin_of[b] = j - 1;
                    m ^= a;
                    i -= pa;
                    q -= static_cast<int>(c);
                    stepped = true;
                    break;
                }
            }
            if (a == 0) break;
        }
        if (!stepped) throw std::logic_error("B-in-B backtracking lost its way");
    }
    for (int b = 0; b < s_; ++b)
        if (m >> b & 1) r.bin_of[b] = 0;
    return r;
}

BinBResult solve_binb(const BinBInstance& inst) { return BinBTable(inst).result(); }

BinBResult solve_binb_dp3(const BinBInstance& inst) {
    check_instance(inst);
    const int s = static_cast<int>(inst.balls.size()), t = static_cast<int>(inst.bins.size());
    if (s > 20) throw std::invalid_argument("dp3 reference limited to 20 balls");
    const std::uint64_t full = (std::uint64_t{1} << s) - 1;
    constexpr long long inf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> vol(full + 1, 0);
    for (std::uint64_t m = 1; m <= full; ++m) {
        const int low = std::countr_zero(m);
        vol[m] = vol[m & (m - 1)] + inst.balls[low];
    }
    // best[j][m]: cheapest placement of ball set m into bins 0..j-1; choice[j][m] is the set put into bin j-1.
    std::vector<std::vector<long long>> best(t + 1, std::vector<long long>(full + 1, inf));
    std::vector<std::vector<std::uint64_t>> choice(t + 1, std::vector<std::uint64_t>(full + 1, 0));
    best[0][0] = 0;
    for (int j = 1; j <= t; ++j) {
        std::vector<long long> cj(full + 1, 0);
        for (std::uint64_t m = 1; m <= full; ++m) {
            const int low = std::countr_zero(m);
            cj[m] = cj[m & (m - 1)] + inst.cost[low][j - 1];
        }
        for (std::uint64_t m = 0; m <= full; ++m)
            for (std::uint64_t a = m;; a = (a - 1) & m) {
                if (vol[a] <= inst.bins[j - 1] && best[j - 1][m ^ a] < inf) {
                    const long long v = best[j - 1][m ^ a] + cj[a];
                    if (v < best[j][m]) {
                        best[j][m] = v;
                        choice[j][m] = a;
                    }
                }
                if (a == 0) break;
            }
    }
    BinBResult r;
    if (best[t][full] > inst.budget) return r;
    r.yes = true;
    r.bin_of.assign(s, -1);
    std::uint64_t m = full;
    for (int j = t; j >= 1; --j) {
        const std::uint64_t a = choice[j][m];
        for (int b = 0; b < s; ++b)
            if (a >> b & 1) r.bin_of[b] = j - 1;
        m ^= a;
    }
    return r;
}

BinBInstance annocm_instance(int k, const Partition& x, const Partition& x_prime) {
    if (total(x) != total(x_prime)) throw std::invalid_argument("X and X' must partition the same integer");
    BinBInstance b;
    b.balls = x_prime;
    b.bins = x;
    b.budget = 2LL * k;
    b.cost.assign(x_prime.size(), std::vector<long long>(x.size(), 0));
    for (std::size_t i = 0; i < x_prime.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            b.cost[i][j] = x[j] >= x_prime[i] ? static_cast<long long>(x_prime[i]) * (x[j] - x_prime[i]) : 2LL * k + 1;
    return b;
}

BinBResult solve_annocm(int k, const Partition& x, const Partition& x_prime) {
    if (k < 0) return {};
    return solve_binb(annocm_instance(k, x, x_prime));
}

BinBResult solve_annocm(const Graph& g, int k, const Partition& x, const Partition& x_prime) {
    if (!is_cluster_graph(g)) throw std::invalid_argument("Anno-CM needs a cluster graph");
    if (!is_g_valid(x_prime, g)) throw std::invalid_argument("X' is not G-valid");
    return solve_annocm(k, x, x_prime);
}

}  // namespace balclust
