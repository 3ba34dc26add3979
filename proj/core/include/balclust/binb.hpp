#pragma once

#include <cstdint>
#include <vector>

#include "balclust/graph.hpp"
#include "balclust/partition.hpp"

namespace balclust {

struct BinBInstance {
    std::vector<int> balls;                    // sizes b_1..b_s
    std::vector<int> bins;                     // capacities x_1..x_t
    long long budget = 0;                      // W
    std::vector<std::vector<long long>> cost;  // cost[i][j], s x t
};

// Presence set of monomials z^e; e is read as a bit mask over the balls.
struct MaskPolynomial {
    int width = 0;                   // s
    std::vector<std::uint64_t> terms;  // sorted, unique

    bool contains(std::uint64_t e) const;
    bool operator==(const MaskPolynomial&) const = default;
};

MaskPolynomial make_poly(int width, std::vector<std::uint64_t> terms);
MaskPolynomial hamming_project(const MaskPolynomial& p, int i);
MaskPolynomial poly_multiply(const MaskPolynomial& a, const MaskPolynomial& b);
MaskPolynomial poly_union(const MaskPolynomial& a, const MaskPolynomial& b);

struct BinBResult {
    bool yes = false;
    std::vector<int> bin_of;  // ball -> bin, when yes
};

// The P_{i,j,q} tables over mask-exponent polynomials.
class BinBTable {
public:
    explicit BinBTable(const BinBInstance& inst);

    // 1 <= j <= t, 0 <= i <= s, 0 <= q <= W
    const MaskPolynomial& P(int i, int j, int q) const;
    BinBResult result() const;

private:
    std::uint64_t volume(std::uint64_t mask) const;
    long long cost_of(std::uint64_t mask, int j) const;  // j is 0-based

    BinBInstance inst_;
    int s_ = 0, t_ = 0, w_ = 0;
    std::vector<MaskPolynomial> table_;  // index ((j-1)*(s+1) + i)*(W+1) + q
};

BinBResult solve_binb(const BinBInstance& inst);
// O*(3^s) subset dynamic program over (bins, ball masks).
BinBResult solve_binb_dp3(const BinBInstance& inst);

// The B-in-B instance for Anno-CM: balls X', bins X, W = 2k.
BinBInstance annocm_instance(int k, const Partition& x, const Partition& x_prime);

// Anno-CM on CS alone; bin_of maps the parts of x_prime to parts of x.
BinBResult solve_annocm(int k, const Partition& x, const Partition& x_prime);
BinBResult solve_annocm(const Graph& g, int k, const Partition& x, const Partition& x_prime);

Answer fast_algo_bcc(const Instance& inst);
Answer fast_algo_bce_c(const Instance& inst);
Answer fast_algo_bce(const Instance& inst);

}  // namespace balclust
